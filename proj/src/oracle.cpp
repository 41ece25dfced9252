#include "iasl/oracle.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

#include "iasl/error.hpp"

namespace iasl {

namespace {

constexpr std::size_t kEvidenceCap = 5;

std::vector<IntegerSet> all_sets(Element max_element, std::size_t max_size) {
  std::vector<IntegerSet> out;
  const Element count = max_element + 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << count); ++mask) {
    std::vector<Element> elems;
    for (Element x = 0; x < count; ++x)
      if (mask >> x & 1) elems.push_back(x);
    if (elems.size() <= max_size) out.push_back(IntegerSet::from(std::move(elems)));
  }
  return out;
}

/// Calls `visit` with every assignment of `pool` labels to the vertices of g.
template <typename Visit>
void for_each_labeling(const Graph& g, const std::vector<IntegerSet>& pool, Visit&& visit) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> idx(n, 0);
  std::vector<IntegerSet> labels(n, pool.front());
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) labels[i] = pool[idx[i]];
    visit(SetLabeling(g, labels));
    std::size_t i = 0;
    while (i < n && ++idx[i] == pool.size()) idx[i++] = 0;
    if (i == n) return;
  }
}

std::string bounds_text(const SearchConfig& c) {
  return "elements <= " + std::to_string(c.element_bound) + ", label sizes <= " + std::to_string(c.size_bound);
}

class Recorder {
 public:
  explicit Recorder(TheoremCheck& check) : check_(check) {}

  void ok() { ++check_.cases; }

  void fail(Evidence e) {
    ++check_.cases;
    ++check_.failures;
    if (check_.evidence.size() < kEvidenceCap) check_.evidence.push_back(std::move(e));
  }

  void expect(bool holds, const std::function<Evidence()>& make) {
    if (holds) {
      ok();
    } else {
      fail(make());
    }
  }

  void undecided(std::string note) {
    ++undecided_;
    if (check_.notes.size() < kEvidenceCap) check_.notes.push_back(std::move(note));
  }

  void literal(LiteralCounterexample c) {
    ++check_.literal_failures;
    if (check_.literal_counterexamples.size() < kEvidenceCap) {
      check_.literal_counterexamples.push_back(std::move(c));
    }
  }

  void finish() {
    if (check_.failures > 0) {
      check_.verdict = Verdict::counterexample;
    } else if (check_.cases == 0) {
      check_.verdict = Verdict::inconclusive;
      check_.notes.push_back("empty domain: nothing was checked");
    } else if (undecided_ > 0) {
      check_.verdict = Verdict::inconclusive;
      check_.notes.push_back(std::to_string(undecided_) + " case(s) undecided within the search bounds");
    } else {
      check_.verdict = Verdict::pass;
    }
  }

 private:
  TheoremCheck& check_;
  std::size_t undecided_ = 0;
};

Evidence sets_evidence(std::string note, std::vector<IntegerSet> sets) {
  return Evidence{std::move(note), std::move(sets), std::nullopt, std::nullopt, std::nullopt};
}

Evidence labeling_evidence(std::string note, SetLabeling f) {
  return Evidence{std::move(note), {}, f.graph(), std::move(f), std::nullopt};
}

Evidence graph_evidence(std::string note, const Graph& g) {
  return Evidence{std::move(note), {}, g, std::nullopt, std::nullopt};
}

Evidence certificate_evidence(std::string note, const Certificate& c) {
  return Evidence{std::move(note), {}, c.witness ? std::optional<Graph>(c.witness->graph()) : std::nullopt, c.witness, c};
}

// ---------------------------------------------------------------------------
// Set identities

template <typename Body>
void each_pair(const OracleConfig& config, TheoremCheck& check, Body&& body) {
  const auto sets = all_sets(config.set_universe, config.set_universe + 1);
  check.domain = "all ordered pairs (A,B) of non-empty subsets of {0.." + std::to_string(config.set_universe) + "}";
  Recorder rec(check);
  for (const auto& a : sets)
    for (const auto& b : sets) body(rec, a, b);
  rec.finish();
}

void check_sumset_bounds(const OracleConfig& config, TheoremCheck& check) {
  each_pair(config, check, [&](Recorder& rec, const IntegerSet& a, const IntegerSet& b) {
    const std::size_t s = config.sum(a, b).size();
    rec.expect(std::max(a.size(), b.size()) <= s && s <= a.size() * b.size(),
               [&] { return sets_evidence("|A+B| = " + std::to_string(s) + " outside [max, product]", {a, b}); });
  });
}

void check_mn_minus_r(const OracleConfig& config, TheoremCheck& check) {
  each_pair(config, check, [&](Recorder& rec, const IntegerSet& a, const IntegerSet& b) {
    const CompatibilityTable t = compatibility_table(a, b);
    std::size_t neglected = 0;
    for (const auto& c : t.classes) neglected += c.pairs.size() - 1;
    const std::size_t s = config.sum(a, b).size();
    rec.expect(s == a.size() * b.size() - neglected, [&] {
      return sets_evidence("|A+B| = " + std::to_string(s) + " but mn - r = " +
                               std::to_string(a.size() * b.size() - neglected),
                           {a, b});
    });
  });
}

void check_class_size_bound(const OracleConfig& config, TheoremCheck& check) {
  each_pair(config, check, [&](Recorder& rec, const IntegerSet& a, const IntegerSet& b) {
    const CompatibilityTable t = compatibility_table(a, b);
    std::size_t total = 0;
    bool bounded = true;
    for (const auto& c : t.classes) {
      total += c.pairs.size();
      bounded = bounded && c.pairs.size() <= std::min(a.size(), b.size());
    }
    rec.expect(bounded && total == a.size() * b.size(),
               [&] { return sets_evidence("a compatibility class exceeds min(|A|,|B|)", {a, b}); });
  });
}

void check_index_equals_sumset(const OracleConfig& config, TheoremCheck& check) {
  std::size_t additive_form_fails = 0;
  each_pair(config, check, [&](Recorder& rec, const IntegerSet& a, const IntegerSet& b) {
    const std::size_t s = config.sum(a, b).size();
    if (s != a.size() + b.size()) ++additive_form_fails;
    rec.expect(compatibility_table(a, b).index == s,
               [&] { return sets_evidence("compatibility index differs from |A+B|", {a, b}); });
  });
  check.notes.push_back("|A+B| = |A|+|B| fails on " + std::to_string(additive_form_fails) +
                        " pairs; only the index identity is asserted");
}

void check_distinct_differences(const OracleConfig& config, TheoremCheck& check) {
  each_pair(config, check, [&](Recorder& rec, const IntegerSet& a, const IntegerSet& b) {
    const bool full = config.sum(a, b).size() == a.size() * b.size();
    const bool disjoint = !shared_difference(difference_set(a), difference_set(b));
    rec.expect(full == disjoint, [&] {
      return sets_evidence(std::string("|A+B| = |A||B| is ") + (full ? "true" : "false") +
                               " but difference sets are " + (disjoint ? "disjoint" : "not disjoint"),
                           {a, b});
    });
  });
}

void check_weak_edge_singleton(const OracleConfig& config, TheoremCheck& check) {
  each_pair(config, check, [&](Recorder& rec, const IntegerSet& a, const IntegerSet& b) {
    const bool at_max = config.sum(a, b).size() == std::max(a.size(), b.size());
    const bool singleton = a.size() == 1 || b.size() == 1;
    rec.expect(at_max == singleton, [&] { return sets_evidence("|A+B| = max iff singleton fails", {a, b}); });
  });
}

/// The adjacent-edge condition for edges uv_i, uv_j with label sizes
/// m, n_i, n_j and neglecting numbers r_i, r_j. Equal sizes route to r_i = r_j.
bool ratio_condition(long long m, long long ni, long long nj, long long ri, long long rj) {
  if (ni == nj) return ri == rj;
  return m * (ni - nj) == ri - rj;
}

void check_adjacent_edge_ratio(const OracleConfig& config, TheoremCheck& check) {
  const auto sets = all_sets(config.triple_universe, config.triple_universe + 1);
  check.domain = "all triples (f(u), f(v_i), f(v_j)) of non-empty subsets of {0.." +
                 std::to_string(config.triple_universe) + "}";
  Recorder rec(check);
  std::size_t degenerate = 0;
  std::vector<std::size_t> neglect(sets.size() * sets.size());
  std::vector<std::size_t> size(sets.size() * sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) {
      size[i * sets.size() + j] = sumset(sets[i], sets[j]).size();
      neglect[i * sets.size() + j] = sets[i].size() * sets[j].size() - size[i * sets.size() + j];
    }
  for (std::size_t u = 0; u < sets.size(); ++u)
    for (std::size_t vi = 0; vi < sets.size(); ++vi)
      for (std::size_t vj = 0; vj < sets.size(); ++vj) {
        const auto m = static_cast<long long>(sets[u].size());
        const auto ni = static_cast<long long>(sets[vi].size());
        const auto nj = static_cast<long long>(sets[vj].size());
        if (ni == nj) ++degenerate;
        const bool same = size[u * sets.size() + vi] == size[u * sets.size() + vj];
        const bool cond = ratio_condition(m, ni, nj, static_cast<long long>(neglect[u * sets.size() + vi]),
                                          static_cast<long long>(neglect[u * sets.size() + vj]));
        rec.expect(same == cond, [&] {
          return sets_evidence("equal edge sizes and the ratio condition disagree", {sets[u], sets[vi], sets[vj]});
        });
      }
  check.notes.push_back(std::to_string(degenerate) +
                        " triples had n_i = n_j (degenerate denominator) and were checked as r_i = r_j");
  rec.finish();
}

// ---------------------------------------------------------------------------
// Checks over labelings of small graphs

std::vector<Graph> within_edge_limit(const Corpus& corpus, std::size_t max_edges) {
  std::vector<Graph> out;
  for (const Graph& g : corpus.graphs)
    if (g.edge_count() <= max_edges) out.push_back(g);
  return out;
}

void check_characterization(const Corpus& corpus, const OracleConfig& config, TheoremCheck& check, bool weak) {
  const auto pool = all_sets(config.labeling_universe, config.labeling_size);
  const auto graphs = within_edge_limit(corpus, config.max_edges);
  check.domain = "every labeling (injective or not) with labels from non-empty subsets of {0.." +
                 std::to_string(config.labeling_universe) + "} of size <= " + std::to_string(config.labeling_size) +
                 ", on " + std::to_string(graphs.size()) + " graphs with <= " + std::to_string(config.max_edges) +
                 " edges";
  Recorder rec(check);
  for (const Graph& g : graphs) {
    if (g.vertex_count() == 0) continue;
    for_each_labeling(g, pool, [&](const SetLabeling& f) {
      const ClassificationReport r = classify(f);
      const StructureCheck s = weak ? weak_structure_check(f) : strong_structure_check(f);
      const bool verdict = weak ? r.is_weak : r.is_strong;
      rec.expect(verdict == s.holds, [&] { return labeling_evidence("classification and structure check disagree", f); });
    });
  }
  rec.finish();
}

void check_uniform_ratio_criterion(const Corpus& corpus, const OracleConfig& config, TheoremCheck& check) {
  const Element universe = std::min<Element>(config.labeling_universe, 3);
  const auto pool = all_sets(universe, config.labeling_size);
  check.domain = "every labeling with labels from non-empty subsets of {0.." + std::to_string(universe) +
                 "} of size <= " + std::to_string(config.labeling_size) + " on " + std::to_string(corpus.graphs.size()) +
                 " connected graphs";
  Recorder rec(check);
  for (const Graph& g : corpus.graphs) {
    if (g.vertex_count() == 0 || !is_connected(g)) continue;
    for_each_labeling(g, pool, [&](const SetLabeling& f) {
      const ClassificationReport r = classify(f);
      const bool uniform = r.edge_uniform_k.has_value() || r.vacuous;
      bool cond = true;
      for (std::size_t i = 0; i < r.edges.size() && cond; ++i)
        for (std::size_t j = i + 1; j < r.edges.size() && cond; ++j) {
          const Edge ei = r.edges[i].edge;
          const Edge ej = r.edges[j].edge;
          Vertex common, vi, vj;
          if (ei.u == ej.u) {
            common = ei.u, vi = ei.v, vj = ej.v;
          } else if (ei.u == ej.v) {
            common = ei.u, vi = ei.v, vj = ej.u;
          } else if (ei.v == ej.u) {
            common = ei.v, vi = ei.u, vj = ej.v;
          } else if (ei.v == ej.v) {
            common = ei.v, vi = ei.u, vj = ej.u;
          } else {
            continue;
          }
          cond = ratio_condition(static_cast<long long>(f.label(common).size()),
                                 static_cast<long long>(f.label(vi).size()), static_cast<long long>(f.label(vj).size()),
                                 static_cast<long long>(r.edges[i].neglecting_number),
                                 static_cast<long long>(r.edges[j].neglecting_number));
        }
      rec.expect(uniform == cond, [&] { return labeling_evidence("uniformity and the ratio criterion disagree", f); });
    });
  }
  rec.finish();
}

void check_uniform_vertex_neglecting(const Corpus& corpus, const OracleConfig& config, TheoremCheck& check) {
  const Element universe = config.labeling_universe;
  const std::size_t max_l = 3;
  check.domain = "every labeling whose labels are all l-subsets of {0.." + std::to_string(universe) + "}, l = 1.." +
                 std::to_string(max_l) + ", on " + std::to_string(corpus.graphs.size()) + " graphs";
  Recorder rec(check);
  const auto all = all_sets(universe, max_l);
  for (std::size_t l = 1; l <= max_l; ++l) {
    std::vector<IntegerSet> pool;
    for (const auto& s : all)
      if (s.size() == l) pool.push_back(s);
    for (const Graph& g : corpus.graphs) {
      if (g.vertex_count() == 0 || g.edge_count() == 0) continue;
      for_each_labeling(g, pool, [&](const SetLabeling& f) {
        const ClassificationReport r = classify(f);
        bool same_r = true;
        for (const auto& e : r.edges) same_r = same_r && e.neglecting_number == r.edges.front().neglecting_number;
        rec.expect(r.edge_uniform_k.has_value() == same_r,
                   [&] { return labeling_evidence("uniformity and equal neglecting numbers disagree", f); });
      });
    }
  }
  rec.finish();
}

// ---------------------------------------------------------------------------
// Constructive and search-backed graph checks

void check_every_graph(const Corpus& corpus, TheoremCheck& check, bool indexer) {
  check.domain = std::to_string(corpus.graphs.size()) + " graphs, canonical power-of-two labeling";
  Recorder rec(check);
  for (const Graph& g : corpus.graphs) {
    const ConstructionOutcome out = canonical_iasi(g);
    const bool ok = out.report.is_iasl && (!indexer || (out.report.is_iasi && !out.repaired));
    rec.expect(ok, [&] { return labeling_evidence("canonical labeling failed verification", out.labeling); });
  }
  rec.finish();
}

void check_heredity(const Corpus& corpus, TheoremCheck& check) {
  check.domain = std::to_string(corpus.graphs.size()) +
                 " graphs; canonical and (when bipartite) 2-uniform labelings restricted to every non-empty vertex "
                 "subset and to every single-edge deletion";
  Recorder rec(check);
  for (const Graph& g : corpus.graphs) {
    std::vector<SetLabeling> sources{canonical_iasi(g).labeling};
    if (auto two = two_uniform_iasi(g)) sources.push_back(two.outcome->labeling);
    for (const SetLabeling& f : sources) {
      const std::size_t n = g.vertex_count();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Vertex> subset;
        for (Vertex v = 0; v < n; ++v)
          if (mask >> v & 1) subset.push_back(v);
        const SetLabeling h = restrict_labeling(f, subset);
        rec.expect(classify(h).verified_iasi(), [&] { return labeling_evidence("restriction is not an IASI", h); });
      }
      for (const Edge& e : g.edges()) {
        const SetLabeling h(delete_edge(g, e), f.labels());
        rec.expect(classify(h).verified_iasi(), [&] { return labeling_evidence("edge deletion broke IASI", h); });
      }
    }
  }
  rec.finish();
}

void check_log_bound(const Corpus& corpus, const OracleConfig& config, TheoremCheck& check) {
  check.config = config.search;
  check.domain = std::to_string(corpus.graphs.size()) + " graphs; ground sets searched from |X| = 1 upward, " +
                 bounds_text(config.search);
  Recorder rec(check);
  for (const Graph& g : corpus.graphs) {
    if (g.vertex_count() == 0) continue;
    const GroundSetResult r = min_ground_set_size(g, config.search, GroundSetOptions{1, std::nullopt});
    if (!r.size) {
      rec.undecided("no witness for a " + std::to_string(g.vertex_count()) + "-vertex graph (" +
                    to_string(r.certificate.kind) + ")");
      continue;
    }
    const bool witness_ok = classify(*r.certificate.witness).verified_iasi();
    rec.expect(*r.size >= r.lower_bound && witness_ok, [&] {
      return certificate_evidence("ground set of size " + std::to_string(*r.size) + " below ceil(log2(n+1)) = " +
                          std::to_string(r.lower_bound), r.certificate);
    });
  }
  rec.finish();
}

void check_binomial_bound(const Corpus& corpus, const OracleConfig& config, TheoremCheck& check) {
  constexpr std::size_t kMaxL = 3;
  check.config = config.search;
  check.domain = std::to_string(corpus.graphs.size()) + " graphs, l = 1.." + std::to_string(kMaxL) +
                 "; smallest l-uniform ground-set witness per graph, " + bounds_text(config.search);
  Recorder rec(check);
  for (const Graph& g : corpus.graphs) {
    if (g.vertex_count() == 0) continue;
    for (std::size_t l = 1; l <= kMaxL; ++l) {
      const GroundSetResult r = min_ground_set_size(g, config.search, GroundSetOptions{1, l});
      if (r.certificate.kind == CertificateKind::budget_exceeded) {
        rec.undecided("budget exceeded for l = " + std::to_string(l));
        continue;
      }
      if (!r.size) continue;  // no l-uniform witness within bounds
      const SetLabeling& w = *r.certificate.witness;
      const BinomialBound b = iasl::check_binomial_bound(w, r.certificate.ground_set);
      rec.expect(b.holds && classify(w).verified_iasi(), [&] {
        return certificate_evidence("n = " + std::to_string(b.vertices) + " exceeds C(" + std::to_string(b.ground_size) + "," +
                            std::to_string(l) + ")", r.certificate);
      });
    }
  }
  rec.finish();
}

/// Shared shape of the "admits a uniform labeling iff bipartite" checks.
void check_uniform_iff_bipartite(const Corpus& corpus, const OracleConfig& config, TheoremCheck& check,
                                 const std::vector<std::size_t>& ks, EdgeRule rule) {
  check.config = config.nonexistence;
  check.domain = std::to_string(corpus.graphs.size()) + " connected graphs; non-existence within " +
                 bounds_text(config.nonexistence);
  Recorder rec(check);
  for (const Graph& g : corpus.graphs) {
    if (g.vertex_count() == 0 || !is_connected(g)) continue;
    const bool bipartite = is_bipartite(g).bipartite;
    for (std::size_t k : ks) {
      const UniformOutcome built = rule == EdgeRule::weak ? weakly_uniform_iasi(g, k) : two_uniform_iasi(g);
      if (bipartite) {
        const bool ok = built && built.outcome->report.verified_iasi() &&
                        (g.edge_count() == 0 || built.outcome->report.edge_uniform_k == k) &&
                        (rule != EdgeRule::weak || built.outcome->report.is_weak);
        rec.expect(ok, [&] { return graph_evidence("bipartite graph without a constructed uniform labeling", g); });
        continue;
      }
      if (built) {
        rec.fail(labeling_evidence("uniform labeling constructed on a non-bipartite graph", built.outcome->labeling));
        continue;
      }
      const Certificate c = find_k_uniform(g, k, config.nonexistence, rule);
      if (c.kind == CertificateKind::budget_exceeded) {
        rec.undecided("search budget exceeded for k = " + std::to_string(k));
      } else {
        rec.expect(c.kind == CertificateKind::exhausted, [&] {
          return certificate_evidence("k-uniform labeling found on a non-bipartite graph", c);
        });
      }
    }
  }
  rec.finish();
}

void check_weakly_uniform(const Corpus& corpus, const OracleConfig& config, TheoremCheck& check) {
  check_uniform_iff_bipartite(corpus, config, check, {2, 3}, EdgeRule::weak);
  std::size_t anomalies = 0;
  for (const Graph& g : corpus.graphs) {
    if (g.edge_count() == 0 || !is_connected(g) || is_bipartite(g).bipartite) continue;
    const ClassificationReport r = canonical_iasi(g).report;
    if (r.is_weak && r.edge_uniform_k == 1u) ++anomalies;
  }
  check.notes.push_back("k = 1 excluded: the all-singleton labeling is weakly 1-uniform on " +
                        std::to_string(anomalies) + " non-bipartite corpus graphs");
}

void check_strongly_uniform(const Corpus& corpus, const OracleConfig& config, TheoremCheck& check) {
  const std::vector<std::size_t> ks{1, 2, 3, 4};
  check.config = config.nonexistence;
  check.domain = std::to_string(corpus.graphs.size()) + " connected graphs, k = 1..4; non-existence within " +
                 bounds_text(config.nonexistence);
  Recorder rec(check);
  std::size_t bipartite_branch = 0, square_branch = 0;
  for (const Graph& g : corpus.graphs) {
    if (g.edge_count() == 0 || !is_connected(g)) continue;
    const bool bipartite = is_bipartite(g).bipartite;
    for (std::size_t k : ks) {
      const UniformOutcome built = strongly_uniform_iasi(g, k);
      if (built) {
        const auto& r = built.outcome->report;
        const bool strong_k = r.verified_iasi() && r.is_strong && r.edge_uniform_k == k;
        const bool branch_ok =
            bipartite || (r.completely_uniform && r.completely_uniform->second * r.completely_uniform->second == k);
        if (bipartite) {
          ++bipartite_branch;
        } else {
          ++square_branch;
        }
        rec.expect(strong_k && branch_ok,
                   [&] { return labeling_evidence("strongly uniform construction violates the characterization",
                                                  built.outcome->labeling); });
        continue;
      }
      const Certificate c = find_k_uniform(g, k, config.nonexistence, EdgeRule::strong);
      if (c.kind == CertificateKind::budget_exceeded) {
        rec.undecided("search budget exceeded for k = " + std::to_string(k));
        continue;
      }
      bool ok = true;
      if (c.witness) {
        // Allowed only when it is (k,l)-completely uniform with k = l^2.
        const ClassificationReport r = classify(*c.witness);
        ok = r.completely_uniform && r.completely_uniform->second * r.completely_uniform->second == k;
      }
      rec.expect(ok, [&] { return certificate_evidence("strongly k-uniform witness outside both branches", c); });
    }
  }
  check.notes.push_back("constructions: " + std::to_string(bipartite_branch) + " via the bipartite branch, " +
                        std::to_string(square_branch) + " via (k,l)-complete uniformity with k = l^2");
  rec.finish();
}

void check_associated_graph(const Corpus& corpus, TheoremCheck& check, bool total) {
  check.domain = std::to_string(corpus.graphs.size()) + " graphs with at least one edge, canonical input labeling";
  Recorder rec(check);
  for (const Graph& g : corpus.graphs) {
    if (g.edge_count() == 0) continue;
    const SetLabeling f = canonical_iasi(g).labeling;
    const ConstructionOutcome out = total ? total_graph_labeling(f) : line_graph_labeling(f);
    rec.expect(out.report.verified_iasi(),
               [&] { return labeling_evidence("induced labeling is not an IASI after repair", out.labeling); });
    if (auto c = literal_counterexample(out)) {
      if (!reverify(*c)) throw Error("internal: literal counterexample does not re-verify");
      rec.literal(std::move(*c));
    }
  }
  if (check.literal_failures) {
    check.notes.push_back("the unrepaired induced labeling failed on " + std::to_string(check.literal_failures) +
                          " graphs; certificates attached");
  }
  rec.finish();
}

// ---------------------------------------------------------------------------
// Registry

struct Entry {
  CheckInfo info;
  std::function<Corpus()> corpus;
  std::function<void(const Corpus&, const OracleConfig&, TheoremCheck&)> run;
};

Corpus connected(std::size_t max_n) { return Corpus::enumerated(1, max_n, {true, false}); }

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    auto sets = [](void (*fn)(const OracleConfig&, TheoremCheck&)) {
      return [fn](const Corpus&, const OracleConfig& c, TheoremCheck& t) { fn(c, t); };
    };
    auto none = [] { return Corpus{"set pairs (no graphs)", {}}; };
    std::vector<Entry> e;
    e.push_back({{"sumset-bounds", "max(|A|,|B|) <= |A+B| <= |A||B|", false}, none, sets(check_sumset_bounds)});
    e.push_back({{"mn-minus-r", "|A+B| = |A||B| - r with r the number of neglected pairs", false}, none,
                 sets(check_mn_minus_r)});
    e.push_back({{"class-size-bound", "every compatibility class has at most min(|A|,|B|) pairs", false}, none,
                 sets(check_class_size_bound)});
    e.push_back({{"index-equals-sumset", "compatibility index equals |A+B|", false}, none,
                 sets(check_index_equals_sumset)});
    e.push_back({{"distinct-differences", "|A+B| = |A||B| iff D_A and D_B are disjoint", false}, none,
                 sets(check_distinct_differences)});
    e.push_back({{"weak-edge-singleton", "|A+B| = max(|A|,|B|) iff |A| = 1 or |B| = 1", false}, none,
                 sets(check_weak_edge_singleton)});
    e.push_back({{"adjacent-edge-ratio",
                  "adjacent edges have equal set-indexing numbers iff m = (r_i - r_j)/(n_i - n_j)", false},
                 none, sets(check_adjacent_edge_ratio)});
    e.push_back({{"every-graph-iasl", "every graph admits an IASL", true},
                 [] { return Corpus::enumerated(1, 5); },
                 [](const Corpus& c, const OracleConfig&, TheoremCheck& t) { check_every_graph(c, t, false); }});
    e.push_back({{"every-graph-iasi", "every graph admits an IASI", true},
                 [] { return Corpus::enumerated(1, 5); },
                 [](const Corpus& c, const OracleConfig&, TheoremCheck& t) { check_every_graph(c, t, true); }});
    e.push_back({{"heredity", "restrictions of an IASI to subgraphs are IASIs", true},
                 [] { return Corpus::enumerated(1, 4); },
                 [](const Corpus& c, const OracleConfig&, TheoremCheck& t) { check_heredity(c, t); }});
    e.push_back({{"ground-set-log-bound", "an IASI over X needs |X| >= ceil(log2(n+1))", true},
                 [] { return connected(5); }, check_log_bound});
    e.push_back({{"ground-set-binomial-bound", "an l-uniformly set-indexed IASI over X has n <= C(|X|,l)", true},
                 [] { return connected(4); }, check_binomial_bound});
    e.push_back({{"uniform-ratio-criterion",
                  "a labeling of a connected graph is uniform iff every adjacent edge pair meets the ratio condition",
                  true},
                 [] { return connected(4); }, check_uniform_ratio_criterion});
    e.push_back({{"uniform-vertex-neglecting",
                  "with uniformly set-indexed vertices, uniform iff all edges share one neglecting number", true},
                 [] { return connected(4); }, check_uniform_vertex_neglecting});
    e.push_back({{"two-uniform-bipartite", "a connected graph admits a 2-uniform IASI iff it is bipartite", true},
                 [] { return connected(5); },
                 [](const Corpus& c, const OracleConfig& o, TheoremCheck& t) {
                   check_uniform_iff_bipartite(c, o, t, {2}, EdgeRule::any);
                 }});
    e.push_back({{"weak-characterization", "a labeling is weak iff every edge has a singleton endpoint", true},
                 [] { return Corpus::enumerated(1, 4); },
                 [](const Corpus& c, const OracleConfig& o, TheoremCheck& t) { check_characterization(c, o, t, true); }});
    e.push_back({{"weakly-uniform-bipartite", "a connected graph admits a weakly k-uniform IASI (k >= 2) iff bipartite",
                  true},
                 [] { return connected(5); }, check_weakly_uniform});
    e.push_back({{"strong-characterization", "a labeling is strong iff adjacent difference sets are disjoint", true},
                 [] { return Corpus::enumerated(1, 4); },
                 [](const Corpus& c, const OracleConfig& o, TheoremCheck& t) { check_characterization(c, o, t, false); }});
    e.push_back({{"strongly-uniform",
                  "a connected graph admits a strongly k-uniform IASI iff bipartite or (k,l)-completely uniform, k = l^2",
                  true},
                 [] { return connected(4); }, check_strongly_uniform});
    e.push_back({{"line-graph-induced", "an IASI of G induces an IASI of its line graph", true},
                 [] { return connected(4); },
                 [](const Corpus& c, const OracleConfig&, TheoremCheck& t) { check_associated_graph(c, t, false); }});
    e.push_back({{"total-graph-induced", "an IASI of G induces an IASI of its total graph", true},
                 [] { return connected(4); },
                 [](const Corpus& c, const OracleConfig&, TheoremCheck& t) { check_associated_graph(c, t, true); }});
    return e;
  }();
  return entries;
}

const Entry& entry(const std::string& id) {
  for (const Entry& e : registry())
    if (e.info.id == id) return e;
  throw PreconditionError("unknown check id '" + id + "'");
}

}  // namespace

Corpus Corpus::enumerated(std::size_t min_n, std::size_t max_n, EnumerationFilter filter, std::size_t cap) {
  Corpus c;
  std::ostringstream d;
  d << "all labelled graphs with " << min_n << ".." << max_n << " vertices";
  if (filter.connected_only) d << ", connected";
  if (filter.skip_isolated) d << ", no isolated vertices";
  c.description = d.str();
  for (std::size_t n = min_n; n <= max_n; ++n) {
    auto gs = enumerate_graphs(n, filter, cap);
    c.graphs.insert(c.graphs.end(), gs.begin(), gs.end());
  }
  return c;
}

IntegerSet OracleConfig::sum(const IntegerSet& a, const IntegerSet& b) const {
  return sumset_override ? sumset_override(a, b) : sumset(a, b);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::counterexample: return "counterexample";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const Entry& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Corpus default_corpus(const std::string& id) { return entry(id).corpus(); }

TheoremCheck run_check(const std::string& id, const std::optional<Corpus>& corpus, const OracleConfig& config) {
  const Entry& e = entry(id);
  TheoremCheck check;
  check.id = e.info.id;
  check.claim = e.info.claim;
  check.config = config.search;
  const Corpus used = corpus ? *corpus : e.corpus();
  check.corpus = e.info.uses_graphs ? used.description + " (" + std::to_string(used.graphs.size()) + " graphs)"
                                    : "set universe";
  e.run(used, config, check);
  return check;
}

SuiteReport run_suite(const OracleConfig& config) {
  SuiteReport report;
  const auto& infos = registered_checks();
  if (config.parallel) {
    std::vector<std::future<TheoremCheck>> jobs;
    for (const auto& info : infos)
      jobs.push_back(std::async(std::launch::async, [&config, id = info.id] { return run_check(id, std::nullopt, config); }));
    for (auto& j : jobs) report.checks.push_back(j.get());
  } else {
    for (const auto& info : infos) report.checks.push_back(run_check(info.id, std::nullopt, config));
  }
  for (const auto& c : report.checks) {
    report.any_counterexample = report.any_counterexample || c.verdict == Verdict::counterexample;
    report.any_inconclusive = report.any_inconclusive || c.verdict == Verdict::inconclusive;
  }
  return report;
}

}  // namespace iasl
