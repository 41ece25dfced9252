#include "test_main.hpp"

#include <set>

#include "iasl/error.hpp"
#include "iasl/search.hpp"

using namespace iasl;

namespace {

using Labels = std::vector<IntegerSet>;

/// Brute force over every ground set (not only those containing 0) and
/// every injective labeling; returns the smallest |X| admitting an IASI.
std::optional<std::size_t> brute_ground_set(const Graph& g, Element max_element, std::size_t size_bound) {
  const std::size_t n = g.vertex_count();
  for (std::size_t m = 1; m <= max_element + 1; ++m) {
    for (unsigned xmask = 1; xmask < (1u << (max_element + 1)); ++xmask) {
      if (static_cast<std::size_t>(__builtin_popcount(xmask)) != m) continue;
      std::vector<IntegerSet> pool;
      for (unsigned sub = xmask;; sub = (sub - 1) & xmask) {
        if (sub && static_cast<std::size_t>(__builtin_popcount(sub)) <= size_bound) {
          std::vector<Element> e;
          for (Element x = 0; x <= max_element; ++x)
            if (sub >> x & 1) e.push_back(x);
          pool.push_back(IntegerSet::from(e));
        }
        if (sub == 0) break;
      }
      if (pool.size() < n) continue;
      std::vector<std::size_t> idx(n, 0);
      for (;;) {
        std::set<std::size_t> used(idx.begin(), idx.end());
        if (used.size() == n) {
          std::set<IntegerSet> edges;
          for (const Edge& e : g.edges()) edges.insert(sumset(pool[idx[e.u]], pool[idx[e.v]]));
          if (edges.size() == g.edge_count()) return m;
        }
        std::size_t i = 0;
        while (i < n && ++idx[i] == pool.size()) idx[i++] = 0;
        if (i == n) break;
      }
    }
  }
  return std::nullopt;
}

SearchConfig small(Element e, std::size_t s) {
  SearchConfig c;
  c.element_bound = e;
  c.size_bound = s;
  return c;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(small(0, 2).validate(), PreconditionError);
  CHECK_THROWS_AS(small(32, 2).validate(), PreconditionError);
  CHECK_THROWS_AS(small(8, 0).validate(), PreconditionError);
  SearchConfig c;
  CHECK(c.element_bound == 8);
  CHECK(c.size_bound == 4);
  CHECK(c.time_budget == std::chrono::seconds(60));
}

TEST_CASE("lower bound") {
  CHECK(ground_set_lower_bound(1) == 1);
  CHECK(ground_set_lower_bound(2) == 2);
  CHECK(ground_set_lower_bound(3) == 2);
  CHECK(ground_set_lower_bound(4) == 3);
  CHECK(ground_set_lower_bound(7) == 3);
  CHECK(ground_set_lower_bound(8) == 4);
}

TEST_CASE("minimum ground set examples") {
  const GroundSetResult k2 = min_ground_set_size(complete_graph(2), {});
  REQUIRE(k2.size == 2u);
  CHECK(k2.lower_bound == 2);
  CHECK(k2.proven_minimum);
  CHECK(k2.certificate.ground_set == std::vector<Element>{0, 1});
  CHECK(k2.certificate.witness->labels() == Labels{{0}, {1}});

  const GroundSetResult k3 = min_ground_set_size(complete_graph(3), {});
  REQUIRE(k3.size == 2u);
  CHECK(k3.certificate.witness->labels() == Labels{{0}, {1}, {0, 1}});
  CHECK(k3.certificate.witness->edge_labels() == Labels{{1}, {0, 1}, {1, 2}});

  for (const Graph& g : {path_graph(7), empty_graph(7), cycle_graph(7)}) {
    const GroundSetResult r = min_ground_set_size(g, {});
    REQUIRE(r.size.has_value());
    CHECK(*r.size >= 3);
  }
  CHECK_THROWS_AS(min_ground_set_size(Graph(0), {}), PreconditionError);
}

TEST_CASE("ground-set search matches brute force over all ground sets") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const GroundSetResult r = min_ground_set_size(g, small(4, 3), GroundSetOptions{1, std::nullopt});
      REQUIRE(r.size == brute_ground_set(g, 4, 3));
    }
  for (const Graph& g : enumerate_graphs(4, {true, false})) {
    const GroundSetResult r = min_ground_set_size(g, small(3, 4), GroundSetOptions{1, std::nullopt});
    REQUIRE(r.size == brute_ground_set(g, 3, 4));
  }
}

TEST_CASE("witnesses re-verify and respect the lower bound") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_graphs(n, {true, false})) {
      const GroundSetResult r = min_ground_set_size(g, {});
      REQUIRE(r.size.has_value());
      REQUIRE(*r.size >= ground_set_lower_bound(n));
      const SetLabeling& w = *r.certificate.witness;
      REQUIRE(classify(w).verified_iasi());
      const std::set<Element> x(r.certificate.ground_set.begin(), r.certificate.ground_set.end());
      REQUIRE(x.size() == *r.size);
      for (const IntegerSet& l : w.labels())
        for (Element e : l) REQUIRE(x.count(e) == 1);
    }
}

TEST_CASE("spanning subgraphs never need a larger ground set") {
  for (const Graph& g : enumerate_graphs(4)) {
    const std::size_t whole = *min_ground_set_size(g, {}).size;
    for (const Edge& e : g.edges()) REQUIRE(*min_ground_set_size(delete_edge(g, e), {}).size <= whole);
  }
}

TEST_CASE("binomial bound") {
  const BinomialBound a = check_binomial_bound(SetLabeling(complete_graph(3), {{0}, {1}, {2}}), std::vector<Element>{0, 1, 2});
  CHECK(a.holds);
  CHECK(a.tight);
  CHECK(a.binomial == 3);
  const BinomialBound b =
      check_binomial_bound(SetLabeling(complete_graph(3), {{0, 1}, {0, 2}, {1, 2}}), std::vector<Element>{0, 1, 2});
  CHECK(b.holds);
  CHECK(b.tight);
  CHECK(b.label_size == 2);
  const BinomialBound c = check_binomial_bound(SetLabeling(Graph(1), {{0, 3, 5}}), std::vector<Element>{0, 3, 5});
  CHECK(c.holds);
  CHECK(c.binomial == 1);
  CHECK_THROWS_AS(check_binomial_bound(SetLabeling(complete_graph(2), {{0}, {1, 2}})), PreconditionError);
  CHECK_THROWS_AS(check_binomial_bound(SetLabeling(complete_graph(2), {{0}, {4}}), std::vector<Element>{0, 1}),
                  PreconditionError);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
}

TEST_CASE("l-uniform ground sets satisfy the binomial bound") {
  for (std::size_t l = 1; l <= 3; ++l)
    for (const Graph& g : enumerate_graphs(4, {true, false})) {
      const GroundSetResult r = min_ground_set_size(g, {}, GroundSetOptions{1, l});
      if (!r.size) continue;
      const BinomialBound b = check_binomial_bound(*r.certificate.witness, r.certificate.ground_set);
      REQUIRE(b.label_size == l);
      REQUIRE(b.holds);
    }
}

TEST_CASE("k-uniform search examples") {
  const SearchConfig bounds = small(6, 3);
  const Certificate k3 = find_k_uniform(complete_graph(3), 2, bounds);
  CHECK(k3.kind == CertificateKind::exhausted);
  CHECK_FALSE(k3.witness.has_value());
  CHECK(k3.search_space.find("{0..6}") != std::string::npos);

  const Certificate c4 = find_k_uniform(cycle_graph(4), 2, bounds);
  REQUIRE(c4.kind == CertificateKind::witness);
  const ClassificationReport r = classify(*c4.witness);
  CHECK(r.verified_iasi());
  CHECK(r.edge_uniform_k == 2u);

  const Certificate one = find_k_uniform(complete_graph(3), 1, bounds);
  REQUIRE(one.kind == CertificateKind::witness);
  for (const IntegerSet& s : one.witness->labels()) CHECK(s.size() == 1);
}

TEST_CASE("edge rules constrain the witness") {
  const SearchConfig bounds = small(6, 3);
  const Certificate weak = find_k_uniform(path_graph(3), 3, bounds, EdgeRule::weak);
  REQUIRE(weak.witness);
  CHECK(classify(*weak.witness).is_weak);
  const Certificate strong = find_k_uniform(cycle_graph(4), 2, bounds, EdgeRule::strong);
  REQUIRE(strong.witness);
  CHECK(classify(*strong.witness).is_strong);
  CHECK(find_k_uniform(complete_graph(3), 2, bounds, EdgeRule::weak).kind == CertificateKind::exhausted);
}

TEST_CASE("parallel and serial searches agree exactly") {
  SearchConfig serial = small(7, 3);
  SearchConfig parallel = serial;
  parallel.parallel = true;
  for (const Graph& g : enumerate_graphs(4, {true, false})) {
    for (std::size_t k : {1, 2, 3}) {
      const Certificate a = find_k_uniform(g, k, serial);
      const Certificate b = find_k_uniform(g, k, parallel);
      REQUIRE(a.kind == b.kind);
      REQUIRE(a.witness == b.witness);
    }
    const GroundSetResult a = min_ground_set_size(g, serial);
    const GroundSetResult b = min_ground_set_size(g, parallel);
    REQUIRE(a.size == b.size);
    REQUIRE(a.certificate.witness == b.certificate.witness);
    REQUIRE(a.certificate.ground_set == b.certificate.ground_set);
  }
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  SearchConfig tight = small(20, 4);
  tight.time_budget = std::chrono::milliseconds(1);
  const Certificate c = find_k_uniform(complete_graph(5), 4, tight);
  CHECK(c.kind == CertificateKind::budget_exceeded);
  CHECK_FALSE(c.witness.has_value());
  const GroundSetResult r = min_ground_set_size(complete_graph(6), tight, GroundSetOptions{1, 4});
  CHECK(r.certificate.kind == CertificateKind::budget_exceeded);
  CHECK_FALSE(r.size.has_value());
}
