#include "iasl/labeling.hpp"

#include <algorithm>
#include <map>

#include "iasl/error.hpp"

namespace iasl {

SetLabeling::SetLabeling(Graph graph, std::vector<IntegerSet> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  if (labels_.size() != graph_.vertex_count()) {
    throw PreconditionError("labeling has " + std::to_string(labels_.size()) + " labels for " +
                            std::to_string(graph_.vertex_count()) + " vertices");
  }
}

std::vector<IntegerSet> SetLabeling::edge_labels() const {
  std::vector<IntegerSet> out;
  out.reserve(graph_.edge_count());
  for (const Edge& e : graph_.edges()) out.push_back(sumset(labels_[e.u], labels_[e.v]));
  return out;
}

IntegerSet induced_edge_label(const SetLabeling& f, Vertex u, Vertex v) {
  if (u >= f.graph().vertex_count() || v >= f.graph().vertex_count() || !f.graph().has_edge(u, v)) {
    throw PreconditionError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  return sumset(f.label(u), f.label(v));
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::duplicate_vertex_label: return "duplicate_vertex_label";
    case ViolationKind::duplicate_edge_label: return "duplicate_edge_label";
    case ViolationKind::not_weak: return "not_weak";
    case ViolationKind::not_strong: return "not_strong";
    case ViolationKind::edge_sizes_differ: return "edge_sizes_differ";
    case ViolationKind::vertex_sizes_differ: return "vertex_sizes_differ";
  }
  return "unknown";
}

ClassificationReport classify(const SetLabeling& f) {
  const Graph& g = f.graph();
  ClassificationReport report;

  report.is_iasl = true;
  std::map<IntegerSet, Vertex> first_vertex;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto [it, fresh] = first_vertex.emplace(f.label(v), v);
    if (!fresh) {
      report.is_iasl = false;
      report.violations.push_back({ViolationKind::duplicate_vertex_label, it->second, v, {}, {},
                                   "label " + f.label(v).to_string() + " repeated"});
    }
  }

  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (f.label(v).size() != f.label(0).size()) {
      report.violations.push_back({ViolationKind::vertex_sizes_differ, 0, v, {}, {},
                                   std::to_string(f.label(0).size()) + " vs " + std::to_string(f.label(v).size())});
      break;
    }
  }
  if (g.vertex_count() > 0 &&
      std::all_of(f.labels().begin(), f.labels().end(),
                  [&](const IntegerSet& s) { return s.size() == f.label(0).size(); })) {
    report.vertex_uniform_l = f.label(0).size();
  }

  report.vacuous = g.edge_count() == 0;
  report.is_iasi = true;
  report.is_weak = true;
  report.is_strong = true;
  std::map<IntegerSet, Edge> first_edge;
  for (const Edge& e : g.edges()) {
    const IntegerSet& a = f.label(e.u);
    const IntegerSet& b = f.label(e.v);
    const CompatibilityTable table = compatibility_table(a, b);
    EdgeRecord rec{e, sumset(a, b), 0, table.index, table.neglecting_number, false, false};
    rec.set_indexing_number = rec.label.size();
    rec.weak = rec.set_indexing_number == std::max(a.size(), b.size());
    rec.strong = rec.set_indexing_number == a.size() * b.size();

    auto [it, fresh] = first_edge.emplace(rec.label, e);
    if (!fresh) {
      report.is_iasi = false;
      report.violations.push_back({ViolationKind::duplicate_edge_label, 0, 0, it->second, e,
                                   "edge label " + rec.label.to_string() + " repeated"});
    }
    if (!rec.weak) {
      report.is_weak = false;
      report.violations.push_back({ViolationKind::not_weak, 0, 0, e, e,
                                   std::to_string(rec.set_indexing_number) + " != max(" + std::to_string(a.size()) +
                                       "," + std::to_string(b.size()) + ")"});
    }
    if (!rec.strong) {
      report.is_strong = false;
      report.violations.push_back({ViolationKind::not_strong, 0, 0, e, e,
                                   std::to_string(rec.set_indexing_number) + " != " + std::to_string(a.size()) +
                                       "*" + std::to_string(b.size())});
    }
    report.edges.push_back(std::move(rec));
  }

  if (!report.edges.empty()) {
    const std::size_t k = report.edges.front().set_indexing_number;
    auto odd = std::find_if(report.edges.begin(), report.edges.end(),
                            [k](const EdgeRecord& r) { return r.set_indexing_number != k; });
    if (odd == report.edges.end()) {
      report.edge_uniform_k = k;
    } else {
      report.violations.push_back({ViolationKind::edge_sizes_differ, 0, 0, report.edges.front().edge, odd->edge,
                                   std::to_string(k) + " vs " + std::to_string(odd->set_indexing_number)});
    }
  }
  if (report.edge_uniform_k && report.vertex_uniform_l) {
    report.completely_uniform = std::pair{*report.edge_uniform_k, *report.vertex_uniform_l};
  }
  return report;
}

StructureCheck weak_structure_check(const SetLabeling& f) {
  for (const Edge& e : f.graph().edges()) {
    if (f.label(e.u).size() != 1 && f.label(e.v).size() != 1) return {false, e, std::nullopt};
  }
  return {};
}

StructureCheck strong_structure_check(const SetLabeling& f) {
  for (const Edge& e : f.graph().edges()) {
    if (auto d = shared_difference(difference_set(f.label(e.u)), difference_set(f.label(e.v)))) {
      return {false, e, d};
    }
  }
  return {};
}

SetLabeling restrict_labeling(const SetLabeling& f, std::span<const Vertex> subset) {
  InducedResult sub = induced_subgraph(f.graph(), subset);
  std::vector<IntegerSet> labels;
  for (Vertex old : sub.original) labels.push_back(f.label(old));
  return SetLabeling(std::move(sub.graph), std::move(labels));
}

}  // namespace iasl
