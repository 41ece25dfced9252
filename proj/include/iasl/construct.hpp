#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iasl/graph.hpp"
#include "iasl/labeling.hpp"

namespace iasl {

/// What a construction must achieve after repair.
enum class Target { iasl, iasi };

std::string to_string(Target target);

struct RepairEntry {
  Vertex vertex = 0;
  IntegerSet original{0};
  IntegerSet replacement{0};
  std::string reason;
};

/// Result of a labeling constructor.
///
/// `formula` is the labeling exactly as the construction rule produces it;
/// `labeling` is the same after verify-then-repair. They coincide whenever
/// `repaired` is false. `report` classifies `labeling` and always has
/// is_iasl set; when `target` is iasi it also has is_iasi set.
struct ConstructionOutcome {
  SetLabeling labeling;
  SetLabeling formula;
  Target target = Target::iasl;
  bool repaired = false;
  std::vector<RepairEntry> repair_log;
  ClassificationReport report;
  bool formula_iasl = false;
  bool formula_iasi = false;
  std::vector<std::string> notes;
};

/// Apply verify-then-repair to a labeling produced by some rule.
///
/// Vertex collisions are resolved lowest id first by translating the later
/// label past the current maximum element (by the smallest power of two
/// above it). For an iasi target, edge collisions are then resolved one
/// pair at a time by translating an endpoint of the later edge that is not
/// on the earlier edge, by the smallest power of two above twice the
/// maximum element.
ConstructionOutcome verify_and_repair(SetLabeling formula, Target target);

/// Target iasi when every input is already a verified IASI.
Target target_for(std::initializer_list<const SetLabeling*> inputs);

/// Vertex i gets {2^i}.
ConstructionOutcome canonical_iasi(const Graph& g);

/// Either a verified outcome or an explicit refusal with its reason (and an
/// odd cycle when bipartiteness was the obstruction).
struct UniformOutcome {
  std::optional<ConstructionOutcome> outcome;
  std::vector<Vertex> odd_cycle;
  std::string reason;

  explicit operator bool() const noexcept { return outcome.has_value(); }
};

UniformOutcome two_uniform_iasi(const Graph& g);
UniformOutcome weakly_uniform_iasi(const Graph& g, std::size_t k);
UniformOutcome strongly_uniform_iasi(const Graph& g, std::size_t k);

/// Labels on shared vertices must agree (`shared` as in graph_union).
ConstructionOutcome union_labeling(const SetLabeling& left, const SetLabeling& right,
                                   std::span<const std::pair<Vertex, Vertex>> shared = {});
ConstructionOutcome join_labeling(const SetLabeling& left, const SetLabeling& right);
ConstructionOutcome complement_labeling(const SetLabeling& f);
/// Vertex (i,j) gets f1(u_i) + f2(v_j).
ConstructionOutcome product_labeling(ProductKind kind, const SetLabeling& left, const SetLabeling& right);

/// Copy i (1-based) of the attached graph is labelled with i.f2.
ConstructionOutcome corona_labeling(const SetLabeling& base, const SetLabeling& attached);
/// Copies use multipliers 1,2,3,... skipping any that collide with labels
/// already placed; the root of copy i keeps f1(u_i).
ConstructionOutcome rooted_labeling(const SetLabeling& base, const SetLabeling& attached, Vertex root);

/// The new vertex takes f+(e).
ConstructionOutcome subdivision_labeling(const SetLabeling& f, Edge e);
/// The merged vertex takes f(u) + f(v).
ConstructionOutcome contraction_labeling(const SetLabeling& f, Edge e);

struct MinorStep {
  enum class Kind { delete_edge, delete_vertex, contract_edge };
  Kind kind = Kind::delete_edge;
  Vertex a = 0;
  Vertex b = 0;  // unused for delete_vertex
};

/// Applies the steps in order; ids refer to the graph current at each step.
ConstructionOutcome minor_labeling(const SetLabeling& f, std::span<const MinorStep> script);

/// L(G) vertex k takes f+ of edge k.
ConstructionOutcome line_graph_labeling(const SetLabeling& f);
/// T(G) keeps f on vertices and takes f+ on edge vertices.
ConstructionOutcome total_graph_labeling(const SetLabeling& f);

/// Explicit homeomorphism data: subdivide G by `subdivisions` (applied in
/// order, ids in the current graph) to get G'; `mapping[v]` sends vertex v of
/// G' to `subdivided_target`; removing the degree-2 vertices `reductions`
/// (ids of `subdivided_target`) one by one yields H.
struct HomeomorphismWitness {
  std::vector<Edge> subdivisions;
  Graph subdivided_target;
  std::vector<Vertex> mapping;
  std::vector<Vertex> reductions;
};

ConstructionOutcome homeomorphic_transfer(const SetLabeling& f, const HomeomorphismWitness& witness);

/// A failure of the unrepaired construction rule, in a form that can be
/// re-checked from the labels alone.
struct LiteralCounterexample {
  SetLabeling labeling;
  ViolationKind kind = ViolationKind::duplicate_edge_label;
  Vertex a = 0, b = 0;  // duplicate_vertex_label
  Edge first, second;   // duplicate_edge_label
  IntegerSet shared_label{0};
};

/// First injectivity failure of `outcome.formula` against the outcome's target.
std::optional<LiteralCounterexample> literal_counterexample(const ConstructionOutcome& outcome);

/// Recomputes the collision from the labels with intset only.
bool reverify(const LiteralCounterexample& c);

}  // namespace iasl
