#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iasl {

using Vertex = std::size_t;

/// Undirected edge stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Edges are kept in lexicographic order of their
/// (u,v) pairs and every adjacency list is sorted, so iteration order is
/// canonical.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  /// Throws PreconditionError on an out-of-range endpoint or a self-loop.
  /// Duplicate edges collapse; use `build_reporting` to learn whether any did.
  static Graph build(std::size_t vertex_count, std::span<const Edge> edges);
  static Graph build(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  struct BuildReport;
  static BuildReport build_reporting(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex a, Vertex b) const;
  /// Position of the edge in `edges()`.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& x, const Graph& y) { return x.edges_ == y.edges_ && x.vertex_count() == y.vertex_count(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

struct Graph::BuildReport {
  Graph graph;
  bool collapsed_duplicates = false;
};

// Named graphs used throughout tests and corpora.
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph empty_graph(std::size_t n);

bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);

/// Either a proper 2-colouring or an odd cycle `c0 c1 ... c_{2t}` whose
/// consecutive vertices (and last/first) are adjacent.
struct Bipartition {
  bool bipartite = false;
  std::vector<int> color;
  std::vector<Vertex> odd_cycle;
};

Bipartition is_bipartite(const Graph& g);

/// Checks the certificate carried by a Bipartition against `g`.
bool verify_bipartition(const Graph& g, const Bipartition& b);

Graph complement(const Graph& g);

/// Union with identified vertices. `shared` lists (vertex of left, vertex of right) pairs.
/// Left vertices keep their ids; unshared right vertices follow in order.
struct UnionResult {
  Graph graph;
  std::vector<Vertex> left_map;
  std::vector<Vertex> right_map;
};

UnionResult graph_union(const Graph& left, const Graph& right,
                        std::span<const std::pair<Vertex, Vertex>> shared = {});

/// Left vertices keep ids; right vertex j becomes n_left + j.
Graph join(const Graph& left, const Graph& right);

enum class ProductKind { cartesian, direct, strong, lexicographic };

std::string to_string(ProductKind kind);
std::optional<ProductKind> parse_product_kind(std::string_view name);

/// Vertex (i,j) receives id i*n_right + j.
struct ProductResult {
  Graph graph;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

ProductResult product(ProductKind kind, const Graph& left, const Graph& right);

/// Where a vertex of a corona or rooted product came from: `copy` is the
/// index of the base vertex whose copy holds it (absent for base vertices
/// of the corona), `original` the vertex in the operand it copies.
struct VertexOrigin {
  std::optional<Vertex> copy;
  Vertex original = 0;

  friend bool operator==(const VertexOrigin&, const VertexOrigin&) = default;
};

/// Base vertices keep ids 0..n1-1; vertex j of copy i becomes n1 + i*n2 + j.
struct CoronaResult {
  Graph graph;
  std::vector<VertexOrigin> origin;
};

CoronaResult corona(const Graph& base, const Graph& attached);

/// Vertex j of copy i becomes i*n2 + j; (i, root) is base vertex i.
struct RootedProductResult {
  Graph graph;
  std::vector<VertexOrigin> origin;
  Vertex root = 0;
};

RootedProductResult rooted_product(const Graph& base, const Graph& attached, Vertex root);

/// Line graph: vertex k stands for `g.edges()[k]`.
struct LineGraphResult {
  Graph graph;
  std::vector<Edge> edge_of;
};

LineGraphResult line_graph(const Graph& g);

/// Total graph: vertices 0..n-1 are the vertices of g, n+k is edge k of g.
struct TotalGraphResult {
  Graph graph;
  std::size_t original_vertices = 0;
  std::vector<Edge> edge_of;  // indexed by k
};

TotalGraphResult total_graph(const Graph& g);

/// Subdivision adds vertex id n on edge e.
Graph subdivide_edge(const Graph& g, Edge e);

/// Contraction merges e.v into e.u (e.u < e.v); ids above e.v shift down.
/// Parallel edges and loops are dropped. `vertex_map[old] = new`.
struct ContractionResult {
  Graph graph;
  std::vector<Vertex> vertex_map;
};

ContractionResult contract_edge(const Graph& g, Edge e);

Graph delete_edge(const Graph& g, Edge e);

/// `original[new] = old`. The subset may be given in any order; ids are
/// assigned in ascending original order.
struct InducedResult {
  Graph graph;
  std::vector<Vertex> original;
};

InducedResult induced_subgraph(const Graph& g, std::span<const Vertex> subset);
InducedResult delete_vertex(const Graph& g, Vertex v);

/// Elementary topological reduction: v must have degree 2 with non-adjacent
/// neighbours. Removes v and joins its neighbours. `original[new] = old`.
InducedResult topological_reduction(const Graph& g, Vertex v);

struct EnumerationFilter {
  bool connected_only = false;
  bool skip_isolated = false;
};

inline constexpr std::size_t kDefaultEnumerationCap = 6;

/// Streams every labelled graph on n vertices in increasing edge-mask order,
/// where bit k of the mask is the k-th pair of the canonical pair order
/// (0,1),(0,2),...,(n-2,n-1). Restart by constructing a new enumerator.
class GraphEnumerator {
 public:
  GraphEnumerator(std::size_t n, EnumerationFilter filter = {}, std::size_t cap = kDefaultEnumerationCap);

  std::optional<Graph> next();

 private:
  std::size_t n_;
  EnumerationFilter filter_;
  std::vector<Edge> pairs_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_ = 0;
};

std::vector<Graph> enumerate_graphs(std::size_t n, EnumerationFilter filter = {},
                                    std::size_t cap = kDefaultEnumerationCap);

/// Graphviz output; `labels`, when non-empty, annotates vertex i with labels[i].
std::string to_dot(const Graph& g, std::span<const std::string> labels = {});

}  // namespace iasl
