#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pursuit/game.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/graph_io.hpp"

namespace pursuit {

/// One graph a check can run over. Entries loaded from a manifest may carry
/// a sha256 of the canonical graph JSON; a mismatch is a Parse error.
struct CorpusEntry {
  std::string name;
  io::GraphVariant graph;
};

/// What the checks range over. Exhaustive sweeps are keyed by a size cap
/// (0 disables them); each check additionally applies its own cap so the
/// run stays within its time budget. The witness pool holds seeded
/// instances chosen because they admit a strong or distributed retract.
struct Corpus {
  std::vector<CorpusEntry> named;
  std::vector<CorpusEntry> witness_pool;
  int exhaustive_undirected_max = 6;
  int exhaustive_oriented_max = 4;

  bool empty() const {
    return named.empty() && witness_pool.empty() && exhaustive_undirected_max <= 0 &&
           exhaustive_oriented_max <= 0;
  }
};

/// The built-in corpus: exhaustive small sweeps, a fixed shelf of named
/// graphs, ten seeded random instances, and fifty seeded witness-bearing
/// oriented graphs on up to seven vertices.
Corpus default_corpus();

Corpus corpus_from_json(const nlohmann::json& manifest);
Corpus load_corpus(const std::string& path);

enum class CheckStatus { Pass, Fail, Skip };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  int instances = 0; // graph/parameter pairs examined
  nlohmann::ordered_json witness; // null unless Fail or Skip
};

struct VerifyOptions {
  SolverOptions solver;
  /// Also run the experimental direction-blind probe: does the undirected
  /// cop number survive a strong subdivision played direction-blind? Not
  /// part of the verified claims; off by default.
  bool probe_undirected_subdivision = false;
};

/// Runs every check over the corpus. Check order is fixed, so the report
/// is deterministic given the corpus. An empty corpus yields an empty
/// report. Each check stops at its first failure (carrying a witness with
/// the graph, parameters, and every computed number) or at the first
/// resource-limit skip; other checks still run. A Fail means the toolkit
/// is wrong somewhere: every asserted claim is a proved theorem.
std::vector<CheckResult> run_all(const Corpus& corpus, const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results); // no Fail (Skip allowed)

/// One JSON object per line:
/// {"check": id, "status": "pass|fail|skip", "instances": N, "witness": {...}?}
std::string report_jsonl(const std::vector<CheckResult>& results);

/// Fixed-width table with a totals line.
std::string human_summary(const std::vector<CheckResult>& results);

} // namespace pursuit
