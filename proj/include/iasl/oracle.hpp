#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iasl/construct.hpp"
#include "iasl/graph.hpp"
#include "iasl/intset.hpp"
#include "iasl/labeling.hpp"
#include "iasl/search.hpp"

namespace iasl {

/// A finite family of graphs with a human-readable description.
struct Corpus {
  std::string description;
  std::vector<Graph> graphs;

  /// All labelled graphs with min_n <= n <= max_n passing `filter`.
  static Corpus enumerated(std::size_t min_n, std::size_t max_n, EnumerationFilter filter = {},
                           std::size_t cap = kDefaultEnumerationCap);
};

using SumsetFn = std::function<IntegerSet(const IntegerSet&, const IntegerSet&)>;

struct OracleConfig {
  /// Bounds for ground-set searches.
  SearchConfig search;
  /// Bounds for non-existence searches of uniform labelings.
  SearchConfig nonexistence{6, 3, std::chrono::milliseconds{60'000}, false};
  /// Set identities range over all non-empty subsets of {0..set_universe}.
  Element set_universe = 8;
  /// Triples of sets for the adjacent-edge identity range over {0..triple_universe}.
  Element triple_universe = 5;
  /// Labelings enumerated for characterization checks use labels from
  /// {0..labeling_universe} with at most labeling_size elements.
  Element labeling_universe = 4;
  std::size_t labeling_size = 2;
  std::size_t max_edges = 4;
  /// Run independent checks concurrently in run_suite.
  bool parallel = false;
  /// Replaces sumset in the set-identity checks. Used to test the oracle itself.
  SumsetFn sumset_override;

  IntegerSet sum(const IntegerSet& a, const IntegerSet& b) const;
};

enum class Verdict { pass, counterexample, inconclusive };

std::string to_string(Verdict v);

/// One piece of evidence. Only the fields relevant to the check are set.
struct Evidence {
  std::string note;
  std::vector<IntegerSet> sets;
  std::optional<Graph> graph;
  std::optional<SetLabeling> labeling;
  std::optional<Certificate> certificate;
};

struct TheoremCheck {
  std::string id;
  std::string claim;
  std::string corpus;
  std::string domain;
  SearchConfig config;
  Verdict verdict = Verdict::inconclusive;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<Evidence> evidence;  // counterexamples, capped
  /// Failures of an unrepaired construction rule; they do not change the verdict.
  std::size_t literal_failures = 0;
  std::vector<LiteralCounterexample> literal_counterexamples;  // capped
  std::vector<std::string> notes;
};

struct CheckInfo {
  std::string id;
  std::string claim;
  bool uses_graphs = true;
};

/// Registered checks in their canonical order.
const std::vector<CheckInfo>& registered_checks();

/// Default corpus of a graph check (throws PreconditionError for unknown ids).
Corpus default_corpus(const std::string& id);

/// Runs one check. With no corpus the check's default corpus is used; set
/// identity checks ignore the corpus.
TheoremCheck run_check(const std::string& id, const std::optional<Corpus>& corpus, const OracleConfig& config);

struct SuiteReport {
  std::vector<TheoremCheck> checks;
  bool any_counterexample = false;
  bool any_inconclusive = false;
};

SuiteReport run_suite(const OracleConfig& config);

}  // namespace iasl
