#include "test_main.hpp"

#include <algorithm>

#include "iasl/error.hpp"
#include "iasl/oracle.hpp"

using namespace iasl;

namespace {

bool has(const std::vector<std::string>& notes, const std::string& needle) {
  return std::any_of(notes.begin(), notes.end(), [&](const std::string& n) { return n.find(needle) != std::string::npos; });
}

/// Drops the largest element of any sum set with more than one element.
IntegerSet lossy_sumset(const IntegerSet& a, const IntegerSet& b) {
  const IntegerSet s = sumset(a, b);
  if (s.size() == 1) return s;
  return IntegerSet::from(std::vector<Element>(s.begin(), s.end() - 1));
}

}  // namespace

TEST_CASE("registry") {
  const auto& checks = registered_checks();
  CHECK(checks.size() == 21);
  std::vector<std::string> ids;
  for (const auto& c : checks) ids.push_back(c.id);
  std::vector<std::string> sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  CHECK_THROWS_AS(run_check("no-such-check", std::nullopt, {}), PreconditionError);
  CHECK_THROWS_AS(default_corpus("no-such-check"), PreconditionError);
}

TEST_CASE("difference-set identity over all pairs from {0..8}") {
  const TheoremCheck c = run_check("distinct-differences", std::nullopt, {});
  CHECK(c.verdict == Verdict::pass);
  CHECK(c.cases == 261121);
  CHECK(c.domain.find("{0..8}") != std::string::npos);
}

TEST_CASE("set identities pass") {
  for (const char* id : {"sumset-bounds", "mn-minus-r", "class-size-bound", "index-equals-sumset", "weak-edge-singleton"}) {
    const TheoremCheck c = run_check(id, std::nullopt, {});
    CHECK_MESSAGE(c.verdict == Verdict::pass, id);
    CHECK(c.cases == 261121);
  }
}

TEST_CASE("ratio identity flags degenerate denominators") {
  const TheoremCheck c = run_check("adjacent-edge-ratio", std::nullopt, {});
  CHECK(c.verdict == Verdict::pass);
  CHECK(has(c.notes, "degenerate denominator"));
}

TEST_CASE("two-uniform labelings exist exactly on bipartite graphs") {
  const TheoremCheck c = run_check("two-uniform-bipartite", std::nullopt, {});
  CHECK(c.verdict == Verdict::pass);
  CHECK(c.cases == 772);
  CHECK(c.corpus.find("1..5") != std::string::npos);
  CHECK(c.domain.find("elements <= 6") != std::string::npos);
  CHECK(c.domain.find("label sizes <= 3") != std::string::npos);
}

TEST_CASE("a corrupted sumset is caught with a witness") {
  OracleConfig config;
  config.set_universe = 4;
  config.sumset_override = lossy_sumset;
  const TheoremCheck c = run_check("sumset-bounds", std::nullopt, config);
  CHECK(c.verdict == Verdict::counterexample);
  CHECK(c.failures > 0);
  REQUIRE_FALSE(c.evidence.empty());
  const Evidence& e = c.evidence.front();
  REQUIRE(e.sets.size() == 2);
  const std::size_t s = lossy_sumset(e.sets[0], e.sets[1]).size();
  CHECK((s < std::max(e.sets[0].size(), e.sets[1].size()) || s > e.sets[0].size() * e.sets[1].size()));
  CHECK(c.evidence.size() <= 5);

  const TheoremCheck d = run_check("mn-minus-r", std::nullopt, config);
  CHECK(d.verdict == Verdict::counterexample);
}

TEST_CASE("an empty corpus is inconclusive") {
  const TheoremCheck c = run_check("every-graph-iasi", Corpus{"nothing", {}}, {});
  CHECK(c.verdict == Verdict::inconclusive);
  CHECK(has(c.notes, "empty domain"));
}

TEST_CASE("graph checks on their default corpora") {
  for (const char* id : {"every-graph-iasl", "every-graph-iasi", "heredity", "ground-set-log-bound",
                         "ground-set-binomial-bound", "strongly-uniform", "line-graph-induced"}) {
    const TheoremCheck c = run_check(id, std::nullopt, {});
    CHECK_MESSAGE(c.verdict == Verdict::pass, id);
    CHECK(c.cases > 0);
  }
}

TEST_CASE("characterizations on a reduced corpus") {
  OracleConfig config;
  config.labeling_universe = 3;
  const Corpus corpus = Corpus::enumerated(1, 3);
  for (const char* id : {"weak-characterization", "strong-characterization", "uniform-ratio-criterion",
                         "uniform-vertex-neglecting"}) {
    const TheoremCheck c = run_check(id, corpus, config);
    CHECK_MESSAGE(c.verdict == Verdict::pass, id);
  }
}

TEST_CASE("weakly uniform check logs the k = 1 case") {
  const TheoremCheck c = run_check("weakly-uniform-bipartite", Corpus::enumerated(1, 4, {true, false}), {});
  CHECK(c.verdict == Verdict::pass);
  CHECK(has(c.notes, "k = 1"));
}

TEST_CASE("literal failures of the total graph rule carry certificates that re-verify") {
  const TheoremCheck c = run_check("total-graph-induced", std::nullopt, {});
  CHECK(c.verdict == Verdict::pass);
  CHECK(c.literal_failures > 0);
  REQUIRE_FALSE(c.literal_counterexamples.empty());
  for (const LiteralCounterexample& l : c.literal_counterexamples) {
    CHECK(reverify(l));
    const IntegerSet a = sumset(l.labeling.label(l.first.u), l.labeling.label(l.first.v));
    const IntegerSet b = sumset(l.labeling.label(l.second.u), l.labeling.label(l.second.v));
    CHECK(a == b);
    CHECK(l.first != l.second);
  }
}

TEST_CASE("search budgets make a check inconclusive") {
  OracleConfig config;
  config.nonexistence.element_bound = 20;
  config.nonexistence.size_bound = 6;
  config.nonexistence.time_budget = std::chrono::milliseconds(1);
  const TheoremCheck c = run_check("two-uniform-bipartite", Corpus{"K5", {complete_graph(5)}}, config);
  CHECK(c.verdict == Verdict::inconclusive);
  CHECK(has(c.notes, "budget"));
}
