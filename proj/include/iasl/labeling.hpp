#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iasl/graph.hpp"
#include "iasl/intset.hpp"

namespace iasl {

/// A total assignment of integer sets to the vertices of a graph.
///
/// Injectivity is not required to construct one; it is a verdict of
/// `classify`.
class SetLabeling {
 public:
  /// Throws PreconditionError unless there is exactly one label per vertex.
  SetLabeling(Graph graph, std::vector<IntegerSet> labels);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<IntegerSet>& labels() const noexcept { return labels_; }
  const IntegerSet& label(Vertex v) const { return labels_.at(v); }

  /// Edge labels in the canonical edge order of the graph.
  std::vector<IntegerSet> edge_labels() const;

  friend bool operator==(const SetLabeling&, const SetLabeling&) = default;

 private:
  Graph graph_;
  std::vector<IntegerSet> labels_;
};

/// f+(uv) = f(u) + f(v). Throws PreconditionError when uv is not an edge.
IntegerSet induced_edge_label(const SetLabeling& f, Vertex u, Vertex v);

/// Per-edge data. "Set-indexing number" of an element is the cardinality of
/// its label.
struct EdgeRecord {
  Edge edge;
  IntegerSet label{0};
  std::size_t set_indexing_number = 0;
  std::size_t compatibility_index = 0;
  std::size_t neglecting_number = 0;
  bool weak = false;    // |f+(uv)| = max(|f(u)|,|f(v)|)
  bool strong = false;  // |f+(uv)| = |f(u)||f(v)|
};

enum class ViolationKind {
  duplicate_vertex_label,  // vertices a, b
  duplicate_edge_label,    // edges first, second
  not_weak,                // edge first
  not_strong,              // edge first
  edge_sizes_differ,       // edges first, second
  vertex_sizes_differ,     // vertices a, b
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Vertex a = 0;
  Vertex b = 0;
  Edge first;
  Edge second;
  std::string detail;
};

struct ClassificationReport {
  bool is_iasl = false;  // f injective
  bool is_iasi = false;  // f+ injective; independent of is_iasl
  std::optional<std::size_t> edge_uniform_k;
  std::optional<std::size_t> vertex_uniform_l;
  std::optional<std::pair<std::size_t, std::size_t>> completely_uniform;
  bool is_weak = false;
  bool is_strong = false;
  /// The graph has no edges, so every edge verdict holds vacuously.
  bool vacuous = false;
  std::vector<EdgeRecord> edges;
  std::vector<Violation> violations;

  bool verified_iasi() const noexcept { return is_iasl && is_iasi; }
};

ClassificationReport classify(const SetLabeling& f);

struct StructureCheck {
  bool holds = true;
  std::optional<Edge> witness;
  std::optional<Element> shared_difference;  // strong check only
};

/// Every edge has an endpoint with a singleton label.
StructureCheck weak_structure_check(const SetLabeling& f);

/// Adjacent labels have disjoint difference sets.
StructureCheck strong_structure_check(const SetLabeling& f);

/// Restriction of f to an induced subgraph (heredity).
SetLabeling restrict_labeling(const SetLabeling& f, std::span<const Vertex> subset);

}  // namespace iasl
