#include "iasl/json_io.hpp"

#include <algorithm>

#include "iasl/error.hpp"
#include "iasl/graph6.hpp"

namespace iasl {

namespace {

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json violation_json(const Violation& v) {
  Json j{{"kind", to_string(v.kind)}, {"detail", v.detail}};
  switch (v.kind) {
    case ViolationKind::duplicate_vertex_label:
    case ViolationKind::vertex_sizes_differ:
      j["vertices"] = {v.a, v.b};
      break;
    case ViolationKind::duplicate_edge_label:
    case ViolationKind::edge_sizes_differ:
      j["edges"] = {to_json(v.first), to_json(v.second)};
      break;
    case ViolationKind::not_weak:
    case ViolationKind::not_strong:
      j["edges"] = {to_json(v.first)};
      break;
  }
  return j;
}

[[noreturn]] void schema_error(const std::string& what) { throw ParseError(what, 1, 0); }

}  // namespace

Json to_json(const IntegerSet& s) { return Json(std::vector<Element>(s.begin(), s.end())); }

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(to_json(e));
  return {{"graph6", write_graph6(g)}, {"vertices", g.vertex_count()}, {"edges", edges}};
}

Json to_json(const SetLabeling& f) {
  Json labels = Json::array();
  for (const IntegerSet& s : f.labels()) labels.push_back(to_json(s));
  return {{"graph6", write_graph6(f.graph())}, {"labels", labels}};
}

Json to_json(const ClassificationReport& r) {
  Json edges = Json::array();
  for (const EdgeRecord& e : r.edges) {
    edges.push_back({{"edge", to_json(e.edge)},
                     {"label", to_json(e.label)},
                     {"set_indexing_number", e.set_indexing_number},
                     {"compatibility_index", e.compatibility_index},
                     {"neglecting_number", e.neglecting_number},
                     {"weak", e.weak},
                     {"strong", e.strong}});
  }
  Json violations = Json::array();
  for (const Violation& v : r.violations) violations.push_back(violation_json(v));
  Json complete = nullptr;
  if (r.completely_uniform) complete = {{"k", r.completely_uniform->first}, {"l", r.completely_uniform->second}};
  return {{"iasl", r.is_iasl},
          {"iasi", r.is_iasi},
          {"verified_iasi", r.verified_iasi()},
          {"edge_uniform_k", optional_size(r.edge_uniform_k)},
          {"vertex_uniform_l", optional_size(r.vertex_uniform_l)},
          {"completely_uniform", complete},
          {"weak", r.is_weak},
          {"strong", r.is_strong},
          {"vacuous", r.vacuous},
          {"edges", edges},
          {"violations", violations}};
}

Json to_json(const ConstructionOutcome& o) {
  Json j = to_json(o.labeling);
  Json repairs = Json::array();
  for (const RepairEntry& r : o.repair_log) {
    repairs.push_back({{"vertex", r.vertex},
                       {"original", to_json(r.original)},
                       {"replacement", to_json(r.replacement)},
                       {"reason", r.reason}});
  }
  j["repairs"] = repairs;
  j["repaired"] = o.repaired;
  j["target"] = to_string(o.target);
  j["formula_iasl"] = o.formula_iasl;
  j["formula_iasi"] = o.formula_iasi;
  j["report"] = to_json(o.report);
  j["notes"] = o.notes;
  if (auto c = literal_counterexample(o)) j["literal_counterexample"] = to_json(*c);
  return j;
}

Json to_json(const UniformOutcome& o) {
  if (o.outcome) return to_json(*o.outcome);
  Json j{{"labeling", nullptr}, {"reason", o.reason}};
  if (!o.odd_cycle.empty()) j["odd_cycle"] = o.odd_cycle;
  return j;
}

Json to_json(const LiteralCounterexample& c) {
  Json j{{"labeling", to_json(c.labeling)}, {"kind", to_string(c.kind)}, {"shared_label", to_json(c.shared_label)}};
  if (c.kind == ViolationKind::duplicate_vertex_label) {
    j["vertices"] = {c.a, c.b};
  } else {
    j["edges"] = {to_json(c.first), to_json(c.second)};
  }
  return j;
}

Json to_json(const SearchConfig& c) {
  return {{"element_bound", c.element_bound},
          {"size_bound", c.size_bound},
          {"time_budget_ms", c.time_budget.count()}};
}

Json to_json(const Certificate& c) {
  return {{"kind", to_string(c.kind)},
          {"witness", c.witness ? to_json(*c.witness) : Json(nullptr)},
          {"ground_set", c.ground_set},
          {"search_space", c.search_space},
          {"config", to_json(c.config)}};
}

Json to_json(const GroundSetResult& r) {
  return {{"ground_set_number", optional_size(r.size)},
          {"lower_bound", r.lower_bound},
          {"proven_minimum", r.proven_minimum},
          {"certificate", to_json(r.certificate)}};
}

Json to_json(const BinomialBound& b) {
  return {{"vertices", b.vertices},   {"ground_size", b.ground_size}, {"label_size", b.label_size},
          {"binomial", b.binomial},   {"holds", b.holds},             {"tight", b.tight}};
}

Json to_json(const TheoremCheck& c) {
  Json evidence = Json::array();
  for (const Evidence& e : c.evidence) {
    Json item{{"note", e.note}};
    if (!e.sets.empty()) {
      Json sets = Json::array();
      for (const auto& s : e.sets) sets.push_back(to_json(s));
      item["sets"] = sets;
    }
    if (e.graph) item["graph6"] = write_graph6(*e.graph);
    if (e.labeling) item["labeling"] = to_json(*e.labeling);
    if (e.certificate) item["certificate"] = to_json(*e.certificate);
    evidence.push_back(item);
  }
  Json literal = Json::array();
  for (const auto& l : c.literal_counterexamples) literal.push_back(to_json(l));
  return {{"id", c.id},
          {"claim", c.claim},
          {"corpus", c.corpus},
          {"domain", c.domain},
          {"config", to_json(c.config)},
          {"verdict", to_string(c.verdict)},
          {"cases", c.cases},
          {"failures", c.failures},
          {"evidence", evidence},
          {"literal_failures", c.literal_failures},
          {"literal_counterexamples", literal},
          {"notes", c.notes}};
}

Json to_json(const SuiteReport& s) {
  Json checks = Json::array();
  Json summary = Json::array();
  for (const auto& c : s.checks) {
    checks.push_back(to_json(c));
    summary.push_back({{"id", c.id}, {"verdict", to_string(c.verdict)}});
  }
  return {{"checks", checks},
          {"summary", summary},
          {"any_counterexample", s.any_counterexample},
          {"any_inconclusive", s.any_inconclusive}};
}

Json parse_json_text(std::string_view text, std::size_t first_line) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points one past the offending character.
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = first_line;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    std::string what = e.what();
    if (auto colon = what.rfind(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw ParseError("malformed JSON: " + what, line, pos - line_start);
  }
}

std::vector<IntegerSet> labels_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("labels") ? j.at("labels") : j;
  if (!arr.is_array()) schema_error("expected an array of labels");
  std::vector<IntegerSet> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const Json& label = arr[i];
    if (!label.is_array() || label.empty()) schema_error("label " + std::to_string(i) + " is not a non-empty array");
    std::vector<Element> elems;
    for (const Json& x : label) {
      if (!x.is_number_unsigned()) {
        schema_error("label " + std::to_string(i) + " contains a value that is not a non-negative integer");
      }
      elems.push_back(x.get<Element>());
    }
    out.push_back(IntegerSet::from(std::move(elems)));
  }
  return out;
}

SetLabeling labeling_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("graph6") || !j.at("graph6").is_string()) {
    schema_error("expected an object with a \"graph6\" string");
  }
  Graph g = parse_graph6(j.at("graph6").get<std::string>());
  auto labels = labels_from_json(j);
  if (labels.size() != g.vertex_count()) {
    schema_error("expected " + std::to_string(g.vertex_count()) + " labels, got " + std::to_string(labels.size()));
  }
  return SetLabeling(std::move(g), std::move(labels));
}

}  // namespace iasl
