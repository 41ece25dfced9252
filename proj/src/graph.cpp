#include "iasl/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "iasl/error.hpp"

namespace iasl {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph::BuildReport Graph::build_reporting(std::size_t vertex_count, std::span<const Edge> edges) {
  BuildReport report{Graph(vertex_count), false};
  Graph& g = report.graph;
  g.edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u >= vertex_count || raw.v >= vertex_count) {
      throw PreconditionError("edge (" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                              ") has an endpoint outside 0.." + std::to_string(vertex_count) + "-1");
    }
    if (raw.u == raw.v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(raw.u));
    }
    g.edges_.push_back(Edge::of(raw.u, raw.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto last = std::unique(g.edges_.begin(), g.edges_.end());
  report.collapsed_duplicates = last != g.edges_.end();
  g.edges_.erase(last, g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return report;
}

Graph Graph::build(std::size_t vertex_count, std::span<const Edge> edges) {
  return build_reporting(vertex_count, edges).graph;
}

Graph Graph::build(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> list;
  for (auto [a, b] : edges) list.push_back(Edge{a, b});
  return build(vertex_count, list);
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  const Edge e = Edge::of(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::build(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::build(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back(Edge::of(i, (i + 1) % n));
  return Graph::build(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph::build(leaves + 1, edges);
}

Graph empty_graph(std::size_t n) { return Graph(n); }

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

Bipartition is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Bipartition result;
  result.color.assign(n, -1);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);

  for (Vertex start = 0; start < n; ++start) {
    if (result.color[start] != -1) continue;
    result.color[start] = 0;
    parent[start] = start;
    std::deque<Vertex> queue{start};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (result.color[w] == -1) {
          result.color[w] = 1 - result.color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (result.color[w] == result.color[v]) {
          // Tree paths from v and w meet at their lowest common ancestor.
          std::vector<Vertex> from_v{v};
          std::vector<Vertex> from_w{w};
          Vertex a = v;
          Vertex b = w;
          while (depth[a] > depth[b]) from_v.push_back(a = parent[a]);
          while (depth[b] > depth[a]) from_w.push_back(b = parent[b]);
          while (a != b) {
            from_v.push_back(a = parent[a]);
            from_w.push_back(b = parent[b]);
          }
          from_w.pop_back();
          std::vector<Vertex> cycle(from_v.rbegin(), from_v.rend());
          cycle.insert(cycle.end(), from_w.begin(), from_w.end());
          result.odd_cycle = std::move(cycle);
          result.bipartite = false;
          result.color.clear();
          return result;
        }
      }
    }
  }
  result.bipartite = true;
  return result;
}

bool verify_bipartition(const Graph& g, const Bipartition& b) {
  if (b.bipartite) {
    if (b.color.size() != g.vertex_count()) return false;
    for (const Edge& e : g.edges()) {
      if (b.color[e.u] == b.color[e.v]) return false;
      if (b.color[e.u] < 0 || b.color[e.u] > 1 || b.color[e.v] < 0 || b.color[e.v] > 1) return false;
    }
    return true;
  }
  const auto& c = b.odd_cycle;
  if (c.size() < 3 || c.size() % 2 == 0) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= g.vertex_count() || !g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
  }
  return true;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j)) edges.push_back({i, j});
  return Graph::build(n, edges);
}

UnionResult graph_union(const Graph& left, const Graph& right, std::span<const std::pair<Vertex, Vertex>> shared) {
  const std::size_t n1 = left.vertex_count();
  const std::size_t n2 = right.vertex_count();
  constexpr Vertex kUnset = static_cast<Vertex>(-1);

  UnionResult result;
  result.left_map.resize(n1);
  for (Vertex v = 0; v < n1; ++v) result.left_map[v] = v;
  result.right_map.assign(n2, kUnset);

  std::vector<bool> left_used(n1, false);
  for (auto [a, b] : shared) {
    if (a >= n1 || b >= n2) {
      throw PreconditionError("shared correspondence (" + std::to_string(a) + "," + std::to_string(b) +
                              ") is out of range");
    }
    if (left_used[a] || result.right_map[b] != kUnset) {
      throw PreconditionError("shared correspondence is not injective at (" + std::to_string(a) + "," +
                              std::to_string(b) + ")");
    }
    left_used[a] = true;
    result.right_map[b] = a;
  }
  Vertex next = n1;
  for (Vertex v = 0; v < n2; ++v)
    if (result.right_map[v] == kUnset) result.right_map[v] = next++;

  std::vector<Edge> edges(left.edges().begin(), left.edges().end());
  for (const Edge& e : right.edges()) edges.push_back(Edge::of(result.right_map[e.u], result.right_map[e.v]));
  result.graph = Graph::build(next, edges);
  return result;
}

Graph join(const Graph& left, const Graph& right) {
  const std::size_t n1 = left.vertex_count();
  const std::size_t n2 = right.vertex_count();
  std::vector<Edge> edges(left.edges().begin(), left.edges().end());
  for (const Edge& e : right.edges()) edges.push_back({e.u + n1, e.v + n1});
  for (Vertex i = 0; i < n1; ++i)
    for (Vertex j = 0; j < n2; ++j) edges.push_back({i, n1 + j});
  return Graph::build(n1 + n2, edges);
}

std::string to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::direct: return "direct";
    case ProductKind::strong: return "strong";
    case ProductKind::lexicographic: return "lexicographic";
  }
  return "unknown";
}

std::optional<ProductKind> parse_product_kind(std::string_view name) {
  for (auto kind : {ProductKind::cartesian, ProductKind::direct, ProductKind::strong, ProductKind::lexicographic})
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

ProductResult product(ProductKind kind, const Graph& left, const Graph& right) {
  const std::size_t n1 = left.vertex_count();
  const std::size_t n2 = right.vertex_count();
  if (n1 == 0 || n2 == 0) throw PreconditionError("product operands must be non-empty");

  ProductResult result;
  for (Vertex i = 0; i < n1; ++i)
    for (Vertex j = 0; j < n2; ++j) result.pairs.emplace_back(i, j);

  auto adjacent = [&](Vertex u, Vertex v, Vertex u2, Vertex v2) {
    const bool e1 = left.has_edge(u, u2);
    const bool e2 = right.has_edge(v, v2);
    switch (kind) {
      case ProductKind::cartesian: return (u == u2 && e2) || (v == v2 && e1);
      case ProductKind::direct: return e1 && e2;
      case ProductKind::strong: return (e1 && v == v2) || (u == u2 && e2) || (e1 && e2);
      case ProductKind::lexicographic: return e1 || (u == u2 && e2);
    }
    return false;
  };

  std::vector<Edge> edges;
  const std::size_t n = n1 * n2;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      auto [u, v] = result.pairs[a];
      auto [u2, v2] = result.pairs[b];
      if (adjacent(u, v, u2, v2)) edges.push_back({a, b});
    }
  }
  result.graph = Graph::build(n, edges);
  return result;
}

CoronaResult corona(const Graph& base, const Graph& attached) {
  const std::size_t n1 = base.vertex_count();
  const std::size_t n2 = attached.vertex_count();
  CoronaResult result;
  for (Vertex i = 0; i < n1; ++i) result.origin.push_back({std::nullopt, i});
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  for (Vertex i = 0; i < n1; ++i) {
    const Vertex offset = n1 + i * n2;
    for (Vertex j = 0; j < n2; ++j) {
      result.origin.push_back({i, j});
      edges.push_back({i, offset + j});
    }
    for (const Edge& e : attached.edges()) edges.push_back({offset + e.u, offset + e.v});
  }
  result.graph = Graph::build(n1 + n1 * n2, edges);
  return result;
}

RootedProductResult rooted_product(const Graph& base, const Graph& attached, Vertex root) {
  const std::size_t n1 = base.vertex_count();
  const std::size_t n2 = attached.vertex_count();
  if (root >= n2) throw PreconditionError("root " + std::to_string(root) + " is not a vertex of the rooted graph");

  RootedProductResult result;
  result.root = root;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n1; ++i) {
    for (Vertex j = 0; j < n2; ++j) result.origin.push_back({i, j});
    for (const Edge& e : attached.edges()) edges.push_back({i * n2 + e.u, i * n2 + e.v});
  }
  for (const Edge& e : base.edges()) edges.push_back({e.u * n2 + root, e.v * n2 + root});
  result.graph = Graph::build(n1 * n2, edges);
  return result;
}

LineGraphResult line_graph(const Graph& g) {
  LineGraphResult result;
  result.edge_of.assign(g.edges().begin(), g.edges().end());
  const std::size_t m = result.edge_of.size();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < m; ++a) {
    for (Vertex b = a + 1; b < m; ++b) {
      const Edge& x = result.edge_of[a];
      const Edge& y = result.edge_of[b];
      if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) edges.push_back({a, b});
    }
  }
  result.graph = Graph::build(m, edges);
  return result;
}

TotalGraphResult total_graph(const Graph& g) {
  TotalGraphResult result;
  const std::size_t n = g.vertex_count();
  result.original_vertices = n;
  result.edge_of.assign(g.edges().begin(), g.edges().end());
  const std::size_t m = result.edge_of.size();

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Vertex k = 0; k < m; ++k) {
    edges.push_back({result.edge_of[k].u, n + k});
    edges.push_back({result.edge_of[k].v, n + k});
  }
  const LineGraphResult lg = line_graph(g);
  for (const Edge& e : lg.graph.edges()) edges.push_back({n + e.u, n + e.v});
  result.graph = Graph::build(n + m, edges);
  return result;
}

namespace {

void require_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw PreconditionError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  }
}

}  // namespace

Graph subdivide_edge(const Graph& g, Edge e) {
  e = Edge::of(e.u, e.v);
  require_edge(g, e);
  const Vertex w = g.vertex_count();
  std::vector<Edge> edges;
  for (const Edge& x : g.edges())
    if (x != e) edges.push_back(x);
  edges.push_back({e.u, w});
  edges.push_back({e.v, w});
  return Graph::build(w + 1, edges);
}

ContractionResult contract_edge(const Graph& g, Edge e) {
  e = Edge::of(e.u, e.v);
  require_edge(g, e);
  ContractionResult result;
  result.vertex_map.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == e.v) {
      result.vertex_map[v] = e.u;
    } else {
      result.vertex_map[v] = v > e.v ? v - 1 : v;
    }
  }
  std::vector<Edge> edges;
  for (const Edge& x : g.edges()) {
    const Vertex a = result.vertex_map[x.u];
    const Vertex b = result.vertex_map[x.v];
    if (a != b) edges.push_back(Edge::of(a, b));
  }
  result.graph = Graph::build(g.vertex_count() - 1, edges);
  return result;
}

Graph delete_edge(const Graph& g, Edge e) {
  e = Edge::of(e.u, e.v);
  require_edge(g, e);
  std::vector<Edge> edges;
  for (const Edge& x : g.edges())
    if (x != e) edges.push_back(x);
  return Graph::build(g.vertex_count(), edges);
}

InducedResult induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> renumber(g.vertex_count(), kAbsent);
  InducedResult result;
  for (Vertex v : subset) {
    if (v >= g.vertex_count()) throw PreconditionError("vertex " + std::to_string(v) + " is out of range");
    result.original.push_back(v);
  }
  std::sort(result.original.begin(), result.original.end());
  result.original.erase(std::unique(result.original.begin(), result.original.end()), result.original.end());
  for (Vertex i = 0; i < result.original.size(); ++i) renumber[result.original[i]] = i;

  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (renumber[e.u] != kAbsent && renumber[e.v] != kAbsent) edges.push_back({renumber[e.u], renumber[e.v]});
  result.graph = Graph::build(result.original.size(), edges);
  return result;
}

InducedResult delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw PreconditionError("vertex " + std::to_string(v) + " is out of range");
  std::vector<Vertex> keep;
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (x != v) keep.push_back(x);
  return induced_subgraph(g, keep);
}

InducedResult topological_reduction(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw PreconditionError("vertex " + std::to_string(v) + " is out of range");
  if (g.degree(v) != 2) {
    throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                            ", reduction needs degree 2");
  }
  const Vertex a = g.neighbors(v)[0];
  const Vertex b = g.neighbors(v)[1];
  if (g.has_edge(a, b)) {
    throw PreconditionError("neighbours of vertex " + std::to_string(v) + " are adjacent");
  }
  InducedResult result = delete_vertex(g, v);
  const auto renumber = [v](Vertex x) { return x > v ? x - 1 : x; };
  std::vector<Edge> edges(result.graph.edges().begin(), result.graph.edges().end());
  edges.push_back(Edge::of(renumber(a), renumber(b)));
  result.graph = Graph::build(result.graph.vertex_count(), edges);
  return result;
}

GraphEnumerator::GraphEnumerator(std::size_t n, EnumerationFilter filter, std::size_t cap) : n_(n), filter_(filter) {
  if (n > cap) {
    throw PreconditionError("enumeration of " + std::to_string(n) + "-vertex graphs exceeds the cap of " +
                            std::to_string(cap));
  }
  if (n > 11) throw PreconditionError("edge masks beyond 11 vertices do not fit in 64 bits");
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs_.push_back({i, j});
  end_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> GraphEnumerator::next() {
  while (mask_ < end_) {
    const std::uint64_t mask = mask_++;
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs_.size(); ++k)
      if (mask >> k & 1) edges.push_back(pairs_[k]);
    Graph g = Graph::build(n_, edges);
    if (filter_.connected_only && !is_connected(g)) continue;
    if (filter_.skip_isolated && has_isolated_vertex(g)) continue;
    return g;
  }
  return std::nullopt;
}

std::vector<Graph> enumerate_graphs(std::size_t n, EnumerationFilter filter, std::size_t cap) {
  GraphEnumerator it(n, filter, cap);
  std::vector<Graph> out;
  while (auto g = it.next()) out.push_back(std::move(*g));
  return out;
}

std::string to_dot(const Graph& g, std::span<const std::string> labels) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (v < labels.size()) out << " [label=\"" << v << ": " << labels[v] << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace iasl
