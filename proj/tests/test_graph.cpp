#include "test_main.hpp"

#include <algorithm>
#include <numeric>

#include "iasl/error.hpp"
#include "iasl/graph.hpp"

using namespace iasl;

namespace {

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> p(a.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : a.edges()) ok = ok && b.has_edge(p[e.u], p[e.v]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::vector<Graph> small_graphs(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (const Graph& g : enumerate_graphs(n)) out.push_back(g);
  return out;
}

Graph two_edges() { return Graph::build(4, {{0, 1}, {2, 3}}); }

}  // namespace

TEST_CASE("build") {
  const Graph k2 = Graph::build(2, {{0, 1}});
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(Graph::build(3, {{0, 1}, {1, 2}, {0, 2}}) == complete_graph(3));
  CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), PreconditionError);
  const Edge dup[] = {{0, 1}, {1, 0}};
  const auto report = Graph::build_reporting(2, dup);
  CHECK(report.collapsed_duplicates);
  CHECK(report.graph.edge_count() == 1);
}

TEST_CASE("edges and adjacency are canonical") {
  const Graph g = Graph::build(4, {{3, 1}, {0, 2}, {1, 0}});
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 3}};
  CHECK(std::vector<Edge>(g.edges().begin(), g.edges().end()) == expected);
  CHECK(std::vector<Vertex>(g.neighbors(1).begin(), g.neighbors(1).end()) == std::vector<Vertex>{0, 3});
  CHECK(g.edge_index(3, 1) == 2u);
  CHECK_FALSE(g.edge_index(2, 3).has_value());
}

TEST_CASE("bipartite test") {
  const Bipartition c4 = is_bipartite(cycle_graph(4));
  CHECK(c4.bipartite);
  CHECK(c4.color[0] != c4.color[1]);
  CHECK(c4.color[1] != c4.color[2]);
  CHECK(c4.color[0] == c4.color[2]);
  const Bipartition k3 = is_bipartite(complete_graph(3));
  CHECK_FALSE(k3.bipartite);
  CHECK(k3.odd_cycle == std::vector<Vertex>{0, 1, 2});
  CHECK(is_bipartite(two_edges()).bipartite);
}

TEST_CASE("bipartition certificates always verify") {
  for (const Graph& g : small_graphs(5)) {
    const Bipartition b = is_bipartite(g);
    REQUIRE(verify_bipartition(g, b));
    if (!b.bipartite) REQUIRE(b.odd_cycle.size() % 2 == 1);
  }
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(3)) == empty_graph(3));
  const Graph c = complement(cycle_graph(4));
  CHECK(c.edge_count() == 2);
  CHECK(isomorphic(c, two_edges()));
  for (const Graph& g : small_graphs(5)) REQUIRE(complement(complement(g)) == g);
}

TEST_CASE("union") {
  const Graph k2 = complete_graph(2);
  const UnionResult disjoint = graph_union(k2, k2);
  CHECK(disjoint.graph.vertex_count() == 4);
  CHECK(disjoint.graph.edge_count() == 2);

  const std::pair<Vertex, Vertex> one[] = {{0, 0}};
  const UnionResult glued = graph_union(complete_graph(3), complete_graph(3), one);
  CHECK(glued.graph.vertex_count() == 5);
  CHECK(glued.graph.edge_count() == 6);

  for (const Graph& g : small_graphs(4)) {
    std::vector<std::pair<Vertex, Vertex>> all;
    for (Vertex v = 0; v < g.vertex_count(); ++v) all.push_back({v, v});
    REQUIRE(graph_union(g, g, all).graph == g);
  }
  const std::pair<Vertex, Vertex> clash[] = {{0, 0}, {1, 0}};
  CHECK_THROWS_AS(graph_union(k2, k2, clash), PreconditionError);
}

TEST_CASE("join") {
  CHECK(join(complete_graph(1), complete_graph(1)) == complete_graph(2));
  const Graph wheel = join(complete_graph(1), cycle_graph(4));
  CHECK(wheel.vertex_count() == 5);
  CHECK(wheel.edge_count() == 8);
  CHECK(join(complete_graph(2), complete_graph(2)) == complete_graph(4));
}

TEST_CASE("products of K2 with itself") {
  const Graph k2 = complete_graph(2);
  CHECK(isomorphic(product(ProductKind::cartesian, k2, k2).graph, cycle_graph(4)));
  CHECK(isomorphic(product(ProductKind::direct, k2, k2).graph, two_edges()));
  CHECK(product(ProductKind::strong, k2, k2).graph == complete_graph(4));
  CHECK(product(ProductKind::lexicographic, k2, k2).graph == complete_graph(4));
  const auto pairs = product(ProductKind::cartesian, k2, complete_graph(3)).pairs;
  CHECK(pairs[4] == std::pair<Vertex, Vertex>{1, 1});
  CHECK(parse_product_kind("strong") == ProductKind::strong);
  CHECK_FALSE(parse_product_kind("tensor").has_value());
}

TEST_CASE("products follow their adjacency rules") {
  const auto graphs = small_graphs(3);
  for (const Graph& a : graphs)
    for (const Graph& b : graphs)
      for (ProductKind kind :
           {ProductKind::cartesian, ProductKind::direct, ProductKind::strong, ProductKind::lexicographic}) {
        const ProductResult p = product(kind, a, b);
        REQUIRE(p.graph.vertex_count() == a.vertex_count() * b.vertex_count());
        for (Vertex x = 0; x < p.graph.vertex_count(); ++x)
          for (Vertex y = x + 1; y < p.graph.vertex_count(); ++y) {
            const auto [u, v] = p.pairs[x];
            const auto [u2, v2] = p.pairs[y];
            const bool ua = a.has_edge(u, u2), vb = b.has_edge(v, v2);
            bool expected = false;
            switch (kind) {
              case ProductKind::cartesian: expected = (u == u2 && vb) || (v == v2 && ua); break;
              case ProductKind::direct: expected = ua && vb; break;
              case ProductKind::strong: expected = (u == u2 && vb) || (v == v2 && ua) || (ua && vb); break;
              case ProductKind::lexicographic: expected = ua || (u == u2 && vb); break;
            }
            REQUIRE(p.graph.has_edge(x, y) == expected);
          }
      }
}

TEST_CASE("corona") {
  CHECK(corona(complete_graph(1), complete_graph(1)).graph == complete_graph(2));
  const CoronaResult c = corona(complete_graph(2), complete_graph(2));
  CHECK(c.graph.vertex_count() == 6);
  CHECK(c.graph.edge_count() == 7);
  const Graph pendant_triangle = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(isomorphic(corona(complete_graph(3), complete_graph(1)).graph, pendant_triangle));
  CHECK(c.origin[3] == VertexOrigin{0, 1});
  CHECK(c.origin[1] == VertexOrigin{std::nullopt, 1});
}

TEST_CASE("rooted product") {
  CHECK(isomorphic(rooted_product(complete_graph(2), complete_graph(2), 0).graph, path_graph(4)));
  const Graph c4 = cycle_graph(4);
  CHECK(rooted_product(c4, complete_graph(1), 0).graph == c4);
  const Graph pendant_triangle = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  for (Vertex root : {0, 1}) {
    CHECK(isomorphic(rooted_product(complete_graph(3), path_graph(2), root).graph, pendant_triangle));
  }
  CHECK_THROWS_AS(rooted_product(c4, complete_graph(2), 2), PreconditionError);
}

TEST_CASE("operation size formulas over operand pairs") {
  const auto graphs = small_graphs(4);
  for (std::size_t i = 0; i < graphs.size(); i += 3)
    for (std::size_t j = 0; j < graphs.size(); j += 5) {
      const Graph& a = graphs[i];
      const Graph& b = graphs[j];
      const std::size_t n1 = a.vertex_count(), n2 = b.vertex_count();
      const std::size_t m1 = a.edge_count(), m2 = b.edge_count();
      REQUIRE(join(a, b).edge_count() == m1 + m2 + n1 * n2);
      const CoronaResult c = corona(a, b);
      REQUIRE(c.graph.vertex_count() == n1 + n1 * n2);
      REQUIRE(c.graph.edge_count() == m1 + n1 * m2 + n1 * n2);
      const RootedProductResult r = rooted_product(a, b, 0);
      REQUIRE(r.graph.vertex_count() == n1 * n2);
      REQUIRE(r.graph.edge_count() == m1 + n1 * m2);
      REQUIRE(product(ProductKind::cartesian, a, b).graph.edge_count() == n1 * m2 + n2 * m1);
      REQUIRE(product(ProductKind::direct, a, b).graph.edge_count() == 2 * m1 * m2);
      REQUIRE(product(ProductKind::strong, a, b).graph.edge_count() == n1 * m2 + n2 * m1 + 2 * m1 * m2);
      REQUIRE(product(ProductKind::lexicographic, a, b).graph.edge_count() == m1 * n2 * n2 + n1 * m2);
      REQUIRE(graph_union(a, b).graph.edge_count() == m1 + m2);
    }
}

TEST_CASE("line graph") {
  CHECK(isomorphic(line_graph(complete_graph(3)).graph, complete_graph(3)));
  CHECK(line_graph(path_graph(3)).graph == complete_graph(2));
  CHECK(isomorphic(line_graph(star_graph(3)).graph, complete_graph(3)));
  CHECK(line_graph(empty_graph(3)).graph.vertex_count() == 0);
  for (const Graph& g : small_graphs(5)) {
    const LineGraphResult l = line_graph(g);
    std::size_t expected = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) expected += g.degree(v) * (g.degree(v) - (g.degree(v) ? 1 : 0)) / 2;
    REQUIRE(l.graph.vertex_count() == g.edge_count());
    REQUIRE(l.graph.edge_count() == expected);
    for (const Edge& e : l.graph.edges()) {
      const Edge a = l.edge_of[e.u], b = l.edge_of[e.v];
      REQUIRE((a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v));
    }
  }
}

TEST_CASE("total graph") {
  CHECK(total_graph(complete_graph(2)).graph == complete_graph(3));
  const TotalGraphResult p3 = total_graph(path_graph(3));
  CHECK(p3.graph.vertex_count() == 5);
  // 2 vertex-vertex, 1 edge-edge and 4 vertex-edge adjacencies.
  CHECK(p3.graph.edge_count() == 7);
  for (const Graph& g : small_graphs(4)) {
    const TotalGraphResult t = total_graph(g);
    REQUIRE(t.graph.vertex_count() == g.vertex_count() + g.edge_count());
    REQUIRE(t.original_vertices == g.vertex_count());
    std::size_t square_degrees = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) square_degrees += g.degree(v) * g.degree(v);
    REQUIRE(t.graph.edge_count() == 2 * g.edge_count() + square_degrees / 2);
  }
}

TEST_CASE("subdivision and contraction") {
  const Graph k2 = complete_graph(2);
  CHECK(isomorphic(subdivide_edge(k2, {0, 1}), path_graph(3)));
  CHECK(subdivide_edge(k2, {0, 1}).has_edge(0, 2));
  const Graph p3 = path_graph(3);
  CHECK(contract_edge(p3, {0, 1}).graph == k2);
  CHECK(contract_edge(p3, {1, 2}).graph == k2);
  const Graph c4 = cycle_graph(4);
  for (const Edge& e : c4.edges()) CHECK(contract_edge(c4, e).graph == complete_graph(3));
  const ContractionResult c = contract_edge(c4, {1, 2});
  CHECK(c.vertex_map == std::vector<Vertex>{0, 1, 1, 2});
  CHECK_THROWS_AS(subdivide_edge(p3, {0, 2}), PreconditionError);
  CHECK_THROWS_AS(contract_edge(p3, {0, 2}), PreconditionError);
}

TEST_CASE("topological reduction undoes subdivision") {
  for (const Graph& g : small_graphs(4))
    for (const Edge& e : g.edges()) {
      const Graph s = subdivide_edge(g, e);
      REQUIRE(topological_reduction(s, g.vertex_count()).graph == g);
    }
  CHECK_THROWS_AS(topological_reduction(complete_graph(3), 0), PreconditionError);
  CHECK_THROWS_AS(topological_reduction(star_graph(3), 0), PreconditionError);
}

TEST_CASE("induced subgraphs") {
  const Vertex two[] = {0, 1};
  CHECK(induced_subgraph(complete_graph(3), two).graph == complete_graph(2));
  const Graph c4 = cycle_graph(4);
  const Vertex all[] = {0, 1, 2, 3};
  CHECK(induced_subgraph(c4, all).graph == c4);
  const Vertex three[] = {2, 1, 0};
  const InducedResult p = induced_subgraph(c4, three);
  CHECK(p.graph == path_graph(3));
  CHECK(p.original == std::vector<Vertex>{0, 1, 2});
  const Vertex bad[] = {4};
  CHECK_THROWS_AS(induced_subgraph(c4, bad), PreconditionError);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_graphs(2).size() == 2);
  CHECK(enumerate_graphs(2, {false, true}).size() == 1);
  CHECK(enumerate_graphs(3, {true, false}).size() == 4);
  CHECK(enumerate_graphs(4).size() == 64);
  CHECK(enumerate_graphs(5).size() == 1024);
  CHECK(enumerate_graphs(5, {true, false}).size() == 728);
  CHECK_THROWS_AS(enumerate_graphs(7), PreconditionError);
  CHECK(enumerate_graphs(7, {}, 7).size() == (std::size_t{1} << 21));

  GraphEnumerator it(3);
  std::size_t count = 0;
  while (auto g = it.next()) {
    if (count == 1) CHECK(*g == Graph::build(3, {{0, 1}}));
    if (count == 2) CHECK(*g == Graph::build(3, {{0, 2}}));
    ++count;
  }
  CHECK(count == 8);
}

TEST_CASE("dot export") {
  const std::string labels[] = {"{1}", "{2}"};
  const std::string dot = to_dot(complete_graph(2), labels);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.find("{2}") != std::string::npos);
}
