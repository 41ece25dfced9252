#include "iasl/construct.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "iasl/error.hpp"

namespace iasl {

namespace {

Element max_element(const std::vector<IntegerSet>& labels) {
  Element m = 0;
  for (const auto& s : labels) m = std::max(m, s.max());
  return m;
}

Element power_of_two_above(Element x) {
  Element p = 1;
  while (p <= x) {
    if (p > kDefaultElementBound / 2) throw OverflowError("repair shift exceeds the element bound");
    p <<= 1;
  }
  return p;
}

Element pow_checked(Element base, std::size_t exponent) {
  Element out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (out > kDefaultElementBound / base) {
      throw OverflowError(std::to_string(base) + "^" + std::to_string(exponent) + " exceeds the element bound");
    }
    out *= base;
  }
  return out;
}

std::string edge_name(Edge e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

/// First pair of edges with equal labels, in canonical edge order.
std::optional<std::pair<Edge, Edge>> first_edge_collision(const SetLabeling& f) {
  std::map<IntegerSet, Edge> seen;
  for (const Edge& e : f.graph().edges()) {
    auto [it, fresh] = seen.emplace(sumset(f.label(e.u), f.label(e.v)), e);
    if (!fresh) return std::pair{it->second, e};
  }
  return std::nullopt;
}

void require_verified(const ConstructionOutcome& out) {
  if (!out.report.is_iasl || (out.target == Target::iasi && !out.report.is_iasi)) {
    throw Error("internal: repaired labeling failed verification");
  }
}

UniformOutcome refuse(std::string reason, std::vector<Vertex> cycle = {}) {
  return UniformOutcome{std::nullopt, std::move(cycle), std::move(reason)};
}

/// Exactly one of each side's labels for every vertex, or an odd cycle.
struct Sides {
  Bipartition parts;
  std::vector<std::size_t> index;  // position within its colour class
  std::size_t count[2] = {0, 0};
};

Sides sides_of(const Graph& g) {
  Sides s;
  s.parts = is_bipartite(g);
  if (!s.parts.bipartite) return s;
  s.index.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) s.index[v] = s.count[s.parts.color[v]]++;
  return s;
}

}  // namespace

std::string to_string(Target target) { return target == Target::iasi ? "iasi" : "iasl"; }

Target target_for(std::initializer_list<const SetLabeling*> inputs) {
  for (const SetLabeling* f : inputs) {
    if (!classify(*f).verified_iasi()) return Target::iasl;
  }
  return Target::iasi;
}

ConstructionOutcome verify_and_repair(SetLabeling formula, Target target) {
  const ClassificationReport literal = classify(formula);
  std::vector<IntegerSet> labels = formula.labels();
  std::vector<RepairEntry> log;

  std::set<IntegerSet> seen;
  for (Vertex v = 0; v < labels.size(); ++v) {
    if (seen.insert(labels[v]).second) continue;
    const Element shift = power_of_two_above(max_element(labels));
    IntegerSet replacement = translate(labels[v], shift);
    log.push_back({v, labels[v], replacement, "vertex label collides with an earlier vertex"});
    labels[v] = std::move(replacement);
    seen.insert(labels[v]);
  }

  if (target == Target::iasi) {
    for (;;) {
      SetLabeling current(formula.graph(), labels);
      auto clash = first_edge_collision(current);
      if (!clash) break;
      auto [earlier, later] = *clash;
      Vertex w = later.u;
      if (w == earlier.u || w == earlier.v) w = later.v;
      const Element shift = power_of_two_above(2 * max_element(labels));
      IntegerSet replacement = translate(labels[w], shift);
      log.push_back({w, labels[w], replacement,
                     "edge " + edge_name(later) + " label collides with edge " + edge_name(earlier)});
      labels[w] = std::move(replacement);
    }
  }

  SetLabeling repaired(formula.graph(), std::move(labels));
  ConstructionOutcome out{repaired,           std::move(formula), target, !log.empty(), std::move(log),
                          classify(repaired), literal.is_iasl,    literal.is_iasi, {}};
  require_verified(out);
  return out;
}

ConstructionOutcome canonical_iasi(const Graph& g) {
  std::vector<IntegerSet> labels;
  for (Vertex v = 0; v < g.vertex_count(); ++v) labels.push_back(IntegerSet{pow_checked(2, v)});
  return verify_and_repair(SetLabeling(g, std::move(labels)), Target::iasi);
}

namespace {

UniformOutcome finish_uniform(SetLabeling f, std::size_t k, bool want_weak, bool want_strong) {
  ConstructionOutcome out = verify_and_repair(std::move(f), Target::iasi);
  const auto& r = out.report;
  const bool uniform_ok = r.vacuous || r.edge_uniform_k == k;
  if (out.repaired || !uniform_ok || (want_weak && !r.is_weak) || (want_strong && !r.is_strong)) {
    throw Error("internal: uniform construction failed verification");
  }
  return UniformOutcome{std::move(out), {}, {}};
}

}  // namespace

UniformOutcome two_uniform_iasi(const Graph& g) {
  Bipartition parts = is_bipartite(g);
  if (!parts.bipartite) return refuse("graph is not bipartite", parts.odd_cycle);
  std::vector<IntegerSet> labels;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Element p = pow_checked(2, v);
    labels.push_back(parts.color[v] == 0 ? IntegerSet{p} : IntegerSet{0, p});
  }
  return finish_uniform(SetLabeling(g, std::move(labels)), 2, false, false);
}

UniformOutcome weakly_uniform_iasi(const Graph& g, std::size_t k) {
  if (k < 2) throw PreconditionError("weakly uniform construction needs k >= 2");
  Sides s = sides_of(g);
  if (!s.parts.bipartite) return refuse("graph is not bipartite", s.parts.odd_cycle);

  const Element spacing = std::max<Element>(k + 1, s.count[0]);
  std::vector<IntegerSet> labels;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (s.parts.color[v] == 0) {
      labels.push_back(IntegerSet{s.index[v]});
    } else {
      std::vector<Element> block;
      for (Element x = 0; x < k; ++x) block.push_back(s.index[v] * spacing + x);
      labels.push_back(IntegerSet::from(std::move(block)));
    }
  }
  return finish_uniform(SetLabeling(g, std::move(labels)), k, true, false);
}

UniformOutcome strongly_uniform_iasi(const Graph& g, std::size_t k) {
  if (k < 1) throw PreconditionError("strongly uniform construction needs k >= 1");
  const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(k))));
  const bool square = root * root == k;

  std::vector<IntegerSet> labels;
  if (square && root == 1) {
    return finish_uniform(canonical_iasi(g).labeling, k, false, true);
  }
  if (square) {
    // Vertex v: {x * l^v : 0 <= x < l}. Differences have a single non-zero
    // base-l digit, at position v.
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const Element step = pow_checked(root, v);
      std::vector<Element> elems;
      for (Element x = 0; x < root; ++x) elems.push_back(x * step);
      labels.push_back(IntegerSet::from(std::move(elems)));
    }
    return finish_uniform(SetLabeling(g, std::move(labels)), k, false, true);
  }

  Sides s = sides_of(g);
  if (!s.parts.bipartite) {
    return refuse("graph is not bipartite and " + std::to_string(k) + " is not a perfect square", s.parts.odd_cycle);
  }
  std::size_t a = 1;
  for (std::size_t d = 1; d * d <= k; ++d)
    if (k % d == 0) a = d;
  const std::size_t b = k / a;
  const Element width = s.count[0] * a;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Element> elems;
    if (s.parts.color[v] == 0) {
      for (Element x = 0; x < a; ++x) elems.push_back(s.index[v] * a + x);
    } else {
      for (Element y = 0; y < b; ++y) elems.push_back(width + s.index[v] * width + a * y);
    }
    labels.push_back(IntegerSet::from(std::move(elems)));
  }
  return finish_uniform(SetLabeling(g, std::move(labels)), k, false, true);
}

ConstructionOutcome union_labeling(const SetLabeling& left, const SetLabeling& right,
                                   std::span<const std::pair<Vertex, Vertex>> shared) {
  UnionResult u = graph_union(left.graph(), right.graph(), shared);
  std::vector<IntegerSet> labels(u.graph.vertex_count(), IntegerSet{0});
  for (Vertex v = 0; v < left.graph().vertex_count(); ++v) labels[u.left_map[v]] = left.label(v);
  for (auto [a, b] : shared) {
    if (left.label(a) != right.label(b)) {
      throw PreconditionError("shared vertices " + std::to_string(a) + "~" + std::to_string(b) +
                              " carry different labels " + left.label(a).to_string() + " and " +
                              right.label(b).to_string());
    }
  }
  for (Vertex v = 0; v < right.graph().vertex_count(); ++v) labels[u.right_map[v]] = right.label(v);
  return verify_and_repair(SetLabeling(std::move(u.graph), std::move(labels)), target_for({&left, &right}));
}

ConstructionOutcome join_labeling(const SetLabeling& left, const SetLabeling& right) {
  std::vector<IntegerSet> labels = left.labels();
  labels.insert(labels.end(), right.labels().begin(), right.labels().end());
  return verify_and_repair(SetLabeling(join(left.graph(), right.graph()), std::move(labels)),
                           target_for({&left, &right}));
}

ConstructionOutcome complement_labeling(const SetLabeling& f) {
  return verify_and_repair(SetLabeling(complement(f.graph()), f.labels()), target_for({&f}));
}

ConstructionOutcome product_labeling(ProductKind kind, const SetLabeling& left, const SetLabeling& right) {
  ProductResult p = product(kind, left.graph(), right.graph());
  std::vector<IntegerSet> labels;
  for (auto [i, j] : p.pairs) labels.push_back(sumset(left.label(i), right.label(j)));
  return verify_and_repair(SetLabeling(std::move(p.graph), std::move(labels)), target_for({&left, &right}));
}

ConstructionOutcome corona_labeling(const SetLabeling& base, const SetLabeling& attached) {
  CoronaResult c = corona(base.graph(), attached.graph());
  std::vector<IntegerSet> labels;
  for (const VertexOrigin& o : c.origin) {
    labels.push_back(o.copy ? integral_multiple(*o.copy + 1, attached.label(o.original)) : base.label(o.original));
  }
  return verify_and_repair(SetLabeling(std::move(c.graph), std::move(labels)), target_for({&base, &attached}));
}

ConstructionOutcome rooted_labeling(const SetLabeling& base, const SetLabeling& attached, Vertex root) {
  constexpr Element kMaxSkips = 64;
  RootedProductResult r = rooted_product(base.graph(), attached.graph(), root);
  const std::size_t n1 = base.graph().vertex_count();
  const std::size_t n2 = attached.graph().vertex_count();

  std::vector<IntegerSet> labels(n1 * n2, IntegerSet{0});
  std::set<IntegerSet> placed;
  for (Vertex i = 0; i < n1; ++i) {
    labels[i * n2 + root] = base.label(i);
    placed.insert(base.label(i));
  }

  std::vector<std::string> notes;
  Element multiplier = 0;
  for (Vertex i = 0; i < n1; ++i) {
    Element chosen = 0;
    for (Element m = multiplier + 1; m <= multiplier + kMaxSkips; ++m) {
      bool clash = false;
      for (Vertex j = 0; j < n2 && !clash; ++j)
        if (j != root) clash = placed.count(integral_multiple(m, attached.label(j))) > 0;
      if (!clash) {
        chosen = m;
        break;
      }
      notes.push_back("copy " + std::to_string(i) + ": multiplier " + std::to_string(m) + " skipped");
    }
    if (chosen == 0) chosen = multiplier + 1;  // left to repair
    multiplier = chosen;
    for (Vertex j = 0; j < n2; ++j) {
      if (j == root) continue;
      labels[i * n2 + j] = integral_multiple(chosen, attached.label(j));
      placed.insert(labels[i * n2 + j]);
    }
  }
  ConstructionOutcome out =
      verify_and_repair(SetLabeling(std::move(r.graph), std::move(labels)), target_for({&base, &attached}));
  out.notes = std::move(notes);
  return out;
}

ConstructionOutcome subdivision_labeling(const SetLabeling& f, Edge e) {
  Graph g = subdivide_edge(f.graph(), e);
  std::vector<IntegerSet> labels = f.labels();
  labels.push_back(induced_edge_label(f, e.u, e.v));
  return verify_and_repair(SetLabeling(std::move(g), std::move(labels)), target_for({&f}));
}

namespace {

SetLabeling contract_formula(const SetLabeling& f, Edge e) {
  e = Edge::of(e.u, e.v);
  ContractionResult c = contract_edge(f.graph(), e);
  std::vector<IntegerSet> labels(c.graph.vertex_count(), IntegerSet{0});
  for (Vertex v = 0; v < f.graph().vertex_count(); ++v)
    if (v != e.u && v != e.v) labels[c.vertex_map[v]] = f.label(v);
  labels[c.vertex_map[e.u]] = sumset(f.label(e.u), f.label(e.v));
  return SetLabeling(std::move(c.graph), std::move(labels));
}

}  // namespace

ConstructionOutcome contraction_labeling(const SetLabeling& f, Edge e) {
  ConstructionOutcome out = verify_and_repair(contract_formula(f, e), target_for({&f}));
  out.notes.push_back("merged vertex label is f(u)+f(v), a chosen rule");
  return out;
}

ConstructionOutcome minor_labeling(const SetLabeling& f, std::span<const MinorStep> script) {
  const Target target = target_for({&f});
  SetLabeling literal = f;
  SetLabeling current = f;
  std::vector<RepairEntry> log;
  std::vector<std::string> notes;

  auto step_once = [](const SetLabeling& x, const MinorStep& s) {
    switch (s.kind) {
      case MinorStep::Kind::delete_edge:
        return SetLabeling(delete_edge(x.graph(), Edge::of(s.a, s.b)), x.labels());
      case MinorStep::Kind::delete_vertex: {
        std::vector<Vertex> keep;
        if (s.a >= x.graph().vertex_count()) throw PreconditionError("vertex " + std::to_string(s.a) + " is out of range");
        for (Vertex v = 0; v < x.graph().vertex_count(); ++v)
          if (v != s.a) keep.push_back(v);
        return restrict_labeling(x, keep);
      }
      case MinorStep::Kind::contract_edge:
        return contract_formula(x, Edge::of(s.a, s.b));
    }
    throw PreconditionError("unknown minor step");
  };

  for (const MinorStep& s : script) {
    literal = step_once(literal, s);
    SetLabeling next = step_once(current, s);
    if (s.kind == MinorStep::Kind::contract_edge) {
      ConstructionOutcome step = verify_and_repair(std::move(next), target);
      log.insert(log.end(), step.repair_log.begin(), step.repair_log.end());
      current = step.labeling;
      notes.push_back("contracted (" + std::to_string(s.a) + "," + std::to_string(s.b) + ") with label f(u)+f(v)");
    } else {
      current = std::move(next);
    }
  }

  const ClassificationReport literal_report = classify(literal);
  ConstructionOutcome out{current,
                          literal,
                          target,
                          !log.empty(),
                          std::move(log),
                          classify(current),
                          literal_report.is_iasl,
                          literal_report.is_iasi,
                          std::move(notes)};
  require_verified(out);
  return out;
}

ConstructionOutcome line_graph_labeling(const SetLabeling& f) {
  LineGraphResult lg = line_graph(f.graph());
  std::vector<IntegerSet> labels;
  for (const Edge& e : lg.edge_of) labels.push_back(sumset(f.label(e.u), f.label(e.v)));
  return verify_and_repair(SetLabeling(std::move(lg.graph), std::move(labels)), target_for({&f}));
}

ConstructionOutcome total_graph_labeling(const SetLabeling& f) {
  TotalGraphResult tg = total_graph(f.graph());
  std::vector<IntegerSet> labels = f.labels();
  for (const Edge& e : tg.edge_of) labels.push_back(sumset(f.label(e.u), f.label(e.v)));
  return verify_and_repair(SetLabeling(std::move(tg.graph), std::move(labels)), target_for({&f}));
}

ConstructionOutcome homeomorphic_transfer(const SetLabeling& f, const HomeomorphismWitness& w) {
  const Target target = target_for({&f});
  std::vector<RepairEntry> log;

  // Subdivide G step by step.
  SetLabeling sub = f;
  SetLabeling sub_literal = f;
  for (const Edge& e : w.subdivisions) {
    ConstructionOutcome step = subdivision_labeling(sub, e);
    log.insert(log.end(), step.repair_log.begin(), step.repair_log.end());
    sub = step.labeling;
    std::vector<IntegerSet> lit = sub_literal.labels();
    lit.push_back(induced_edge_label(sub_literal, e.u, e.v));
    sub_literal = SetLabeling(subdivide_edge(sub_literal.graph(), e), std::move(lit));
  }

  // Validate the isomorphism G' -> H'.
  const Graph& gp = sub.graph();
  const Graph& hp = w.subdivided_target;
  if (w.mapping.size() != gp.vertex_count() || hp.vertex_count() != gp.vertex_count() ||
      hp.edge_count() != gp.edge_count()) {
    throw PreconditionError("correspondence is not a bijection between the two subdivisions");
  }
  std::vector<bool> hit(hp.vertex_count(), false);
  for (Vertex m : w.mapping) {
    if (m >= hp.vertex_count() || hit[m]) throw PreconditionError("correspondence is not a bijection");
    hit[m] = true;
  }
  for (const Edge& e : gp.edges()) {
    if (!hp.has_edge(w.mapping[e.u], w.mapping[e.v])) {
      throw PreconditionError("correspondence does not preserve edge (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ")");
    }
  }

  auto transport = [&](const SetLabeling& x) {
    std::vector<IntegerSet> labels(hp.vertex_count(), IntegerSet{0});
    for (Vertex v = 0; v < gp.vertex_count(); ++v) labels[w.mapping[v]] = x.label(v);
    return labels;
  };

  // Reduce H' one vertex at a time, tracking original ids.
  Graph h = hp;
  std::vector<IntegerSet> labels = transport(sub);
  std::vector<IntegerSet> literal_labels = transport(sub_literal);
  std::vector<Vertex> current_of(hp.vertex_count());
  for (Vertex v = 0; v < hp.vertex_count(); ++v) current_of[v] = v;
  constexpr Vertex kGone = static_cast<Vertex>(-1);
  for (Vertex original : w.reductions) {
    if (original >= current_of.size() || current_of[original] == kGone) {
      throw PreconditionError("reduction vertex " + std::to_string(original) + " is not present");
    }
    const Vertex v = current_of[original];
    InducedResult r = topological_reduction(h, v);
    std::vector<IntegerSet> next, next_literal;
    for (Vertex old : r.original) {
      next.push_back(labels[old]);
      next_literal.push_back(literal_labels[old]);
    }
    labels = std::move(next);
    literal_labels = std::move(next_literal);
    h = std::move(r.graph);
    for (Vertex& c : current_of) {
      if (c == kGone) continue;
      c = c == v ? kGone : (c > v ? c - 1 : c);
    }
  }

  ConstructionOutcome out = verify_and_repair(SetLabeling(h, std::move(labels)), target);
  log.insert(log.end(), out.repair_log.begin(), out.repair_log.end());
  out.repair_log = std::move(log);
  out.repaired = !out.repair_log.empty();
  out.formula = SetLabeling(h, std::move(literal_labels));
  const ClassificationReport lit = classify(out.formula);
  out.formula_iasl = lit.is_iasl;
  out.formula_iasi = lit.is_iasi;
  return out;
}

std::optional<LiteralCounterexample> literal_counterexample(const ConstructionOutcome& outcome) {
  const ClassificationReport r = classify(outcome.formula);
  for (const Violation& v : r.violations) {
    if (v.kind == ViolationKind::duplicate_vertex_label) {
      return LiteralCounterexample{outcome.formula, v.kind, v.a, v.b, {}, {}, outcome.formula.label(v.a)};
    }
  }
  if (outcome.target == Target::iasi) {
    for (const Violation& v : r.violations) {
      if (v.kind == ViolationKind::duplicate_edge_label) {
        return LiteralCounterexample{outcome.formula, v.kind, 0, 0, v.first, v.second,
                                     induced_edge_label(outcome.formula, v.first.u, v.first.v)};
      }
    }
  }
  return std::nullopt;
}

bool reverify(const LiteralCounterexample& c) {
  const SetLabeling& f = c.labeling;
  const Graph& g = f.graph();
  if (c.kind == ViolationKind::duplicate_vertex_label) {
    return c.a != c.b && c.a < g.vertex_count() && c.b < g.vertex_count() && f.label(c.a) == f.label(c.b) &&
           f.label(c.a) == c.shared_label;
  }
  if (c.kind == ViolationKind::duplicate_edge_label) {
    if (c.first == c.second || !g.has_edge(c.first.u, c.first.v) || !g.has_edge(c.second.u, c.second.v)) return false;
    const IntegerSet x = sumset(f.label(c.first.u), f.label(c.first.v));
    const IntegerSet y = sumset(f.label(c.second.u), f.label(c.second.v));
    return x == y && x == c.shared_label;
  }
  return false;
}

}  // namespace iasl
