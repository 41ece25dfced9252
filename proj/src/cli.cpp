#include "iasl/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "iasl/construct.hpp"
#include "iasl/error.hpp"
#include "iasl/graph6.hpp"
#include "iasl/json_io.hpp"
#include "iasl/oracle.hpp"
#include "iasl/search.hpp"

namespace iasl::cli {

namespace {

struct Item {
  Json json;
  std::string text;
  std::string dot;
  int code = ok;
};

struct Source {
  std::vector<Graph> graphs;
  bool batch = false;
};

bool is_file(const std::string& value) {
  std::error_code ec;
  return !value.empty() && std::filesystem::is_regular_file(value, ec);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// A graph6 string, or a file with one graph per line (batch mode).
Source load_graphs(const std::string& value) {
  if (is_file(value)) {
    std::ifstream in(value);
    return {read_graph6_lines(in), true};
  }
  return {{parse_graph6(value)}, false};
}

Json load_json(const std::string& value) { return parse_json_text(is_file(value) ? read_file(value) : value); }

SetLabeling labeling_for(const Graph& g, const std::string& labels) {
  if (labels.empty()) return canonical_iasi(g).labeling;
  auto sets = labels_from_json(load_json(labels));
  if (sets.size() != g.vertex_count()) {
    throw PreconditionError("expected " + std::to_string(g.vertex_count()) + " labels, got " +
                            std::to_string(sets.size()));
  }
  return SetLabeling(g, std::move(sets));
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string optional_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

std::string labeling_text(const SetLabeling& f) {
  std::ostringstream s;
  s << "graph " << write_graph6(f.graph()) << " (" << f.graph().vertex_count() << " vertices, "
    << f.graph().edge_count() << " edges)\n";
  s << "labels:";
  for (Vertex v = 0; v < f.graph().vertex_count(); ++v) s << ' ' << v << ':' << f.label(v).to_string();
  s << '\n';
  const auto edges = f.graph().edges();
  const auto labels = f.edge_labels();
  s << "edges:";
  for (std::size_t i = 0; i < edges.size(); ++i) s << ' ' << edges[i].u << '-' << edges[i].v << ':' << labels[i].to_string();
  s << '\n';
  return s.str();
}

std::string report_text(const ClassificationReport& r) {
  std::ostringstream s;
  s << "IASL " << yes(r.is_iasl) << ", IASI " << yes(r.is_iasi) << ", weak " << yes(r.is_weak) << ", strong "
    << yes(r.is_strong) << ", k=" << optional_text(r.edge_uniform_k) << ", l=" << optional_text(r.vertex_uniform_l)
    << '\n';
  for (const Violation& v : r.violations) s << "violation " << to_string(v.kind) << ": " << v.detail << '\n';
  return s.str();
}

std::string labeling_dot(const SetLabeling& f) {
  std::vector<std::string> names;
  for (const IntegerSet& s : f.labels()) names.push_back(s.to_string());
  return to_dot(f.graph(), names);
}

Item outcome_item(const ConstructionOutcome& o) {
  std::ostringstream s;
  s << labeling_text(o.labeling) << report_text(o.report);
  for (const RepairEntry& r : o.repair_log) {
    s << "repair vertex " << r.vertex << ": " << r.original.to_string() << " -> " << r.replacement.to_string() << " ("
      << r.reason << ")\n";
  }
  for (const std::string& n : o.notes) s << "note: " << n << '\n';
  return {to_json(o), s.str(), labeling_dot(o.labeling), ok};
}

Item uniform_item(const UniformOutcome& o) {
  if (o.outcome) return outcome_item(*o.outcome);
  std::string text = "none: " + o.reason + '\n';
  if (!o.odd_cycle.empty()) {
    text += "odd cycle:";
    for (Vertex v : o.odd_cycle) text += ' ' + std::to_string(v);
    text += '\n';
  }
  return {to_json(o), text, "", negative};
}

int certificate_code(const Certificate& c) {
  switch (c.kind) {
    case CertificateKind::witness: return ok;
    case CertificateKind::exhausted: return negative;
    case CertificateKind::budget_exceeded: return budget;
  }
  return negative;
}

int combine(int a, int b) {
  auto rank = [](int c) { return c == budget ? 2 : c == negative ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

/// Applies `fn` to every graph; in parallel mode results still come back in
/// input order.
std::vector<Item> map_graphs(const std::vector<Graph>& graphs, const std::function<Item(const Graph&)>& fn,
                             bool parallel) {
  std::vector<Item> items;
  items.reserve(graphs.size());
  if (!parallel) {
    for (const Graph& g : graphs) items.push_back(fn(g));
    return items;
  }
  const std::size_t width = std::max(2u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < graphs.size(); start += width) {
    std::vector<std::future<Item>> jobs;
    for (std::size_t i = start; i < std::min(graphs.size(), start + width); ++i)
      jobs.push_back(std::async(std::launch::async, [&fn, &g = graphs[i]] { return fn(g); }));
    for (auto& j : jobs) items.push_back(j.get());
  }
  return items;
}

std::string config_text(const Json& config) {
  std::string s = "config:";
  for (const auto& [key, value] : config.items()) s += ' ' + key + '=' + (value.is_string() ? value.get<std::string>() : value.dump());
  return s + '\n';
}

int emit(const std::string& command, const Json& config, const std::vector<Item>& items, bool batch,
         const std::string& format, std::ostream& out) {
  int code = ok;
  for (const Item& i : items) code = combine(code, i.code);
  if (format == "json") {
    Json doc{{"command", command}, {"config", config}, {"exit_status", code}};
    if (batch) {
      Json results = Json::array();
      for (const Item& i : items) results.push_back(i.json);
      doc["results"] = results;
    } else {
      doc["result"] = items.front().json;
    }
    out << doc.dump(2) << '\n';
  } else if (format == "dot") {
    for (const Item& i : items) {
      if (i.dot.empty()) throw PreconditionError("no graph to draw for this result; use --format json or text");
      out << i.dot;
    }
  } else {
    out << "command: " << command << '\n' << config_text(config);
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (batch) out << "[" << k + 1 << "]\n";
      out << items[k].text;
    }
  }
  return code;
}

struct SearchFlags {
  SearchConfig config;
  long long budget_ms = 60'000;

  void add(CLI::App* app, const std::string& prefix = "") {
    app->add_option("--" + prefix + "element-bound", config.element_bound, "largest label element (<= 31)")
        ->capture_default_str();
    app->add_option("--" + prefix + "size-bound", config.size_bound, "largest label size")->capture_default_str();
    app->add_option("--" + prefix + "budget-ms", budget_ms, "time budget in milliseconds")->capture_default_str();
  }

  SearchConfig resolve(bool parallel) {
    config.time_budget = std::chrono::milliseconds(budget_ms);
    config.parallel = parallel;
    config.validate();
    return config;
  }
};

class Cli {
 public:
  Cli(std::ostream& out) : out_(out) {
    app_.name("iasl");
    app_.description("Integer additive set-indexers: construct, classify, search and verify.");
    app_.require_subcommand(1);
    add_construct();
    add_classify();
    add_minsize();
    add_uniform();
    add_oracle();
    add_product();
    add_convert();
  }

  CLI::App& app() { return app_; }

  int dispatch() { return action_(); }

 private:
  void add_format(CLI::App* cmd) {
    cmd->add_option("--format", format_, "output format")
        ->check(CLI::IsMember({"json", "text", "dot"}))
        ->capture_default_str();
    cmd->add_flag("--parallel", parallel_, "process batch lines and searches concurrently");
  }

  CLI::App* add_graph_command(const std::string& name, const std::string& description) {
    CLI::App* cmd = app_.add_subcommand(name, description);
    cmd->add_option("--graph", graph_, "graph6 string, or a file of graph6 lines for batch mode")->required();
    add_format(cmd);
    return cmd;
  }

  int run_graphs(const std::string& command, const Json& config, const std::function<Item(const Graph&)>& fn) {
    const Source src = load_graphs(graph_);
    if (src.graphs.empty()) throw PreconditionError("no graphs in '" + graph_ + "'");
    return emit(command, config, map_graphs(src.graphs, fn, parallel_), src.batch, format_, out_);
  }

  void add_construct() {
    CLI::App* cmd = add_graph_command("construct", "build a labeling with a deterministic constructor");
    cmd->add_option("--op", op_, "constructor")
        ->check(CLI::IsMember({"canonical", "two-uniform", "weakly-uniform", "strongly-uniform", "complement", "line",
                               "total", "subdivide", "contract"}))
        ->capture_default_str();
    cmd->add_option("--k", k_, "edge label size for the uniform constructors");
    cmd->add_option("--labels", labels_, "input labeling (JSON array or file); defaults to the canonical one");
    cmd->add_option("--edge", edge_, "edge for subdivide and contract")->expected(2);
    cmd->callback([this] {
      action_ = [this] {
        const bool needs_k = op_ == "weakly-uniform" || op_ == "strongly-uniform";
        if (needs_k && !k_) throw CLI::ValidationError("--k", "required by --op " + op_);
        if ((op_ == "subdivide" || op_ == "contract") && edge_.size() != 2) {
          throw CLI::ValidationError("--edge", "required by --op " + op_);
        }
        Json config{{"op", op_}, {"format", format_}};
        if (needs_k) config["k"] = *k_;
        if (!edge_.empty()) config["edge"] = edge_;
        config["labels"] = labels_.empty() ? "canonical" : "supplied";
        return run_graphs("construct", config, [this](const Graph& g) { return construct(g); });
      };
    });
  }

  Item construct(const Graph& g) {
    if (op_ == "canonical") return outcome_item(canonical_iasi(g));
    if (op_ == "two-uniform") return uniform_item(two_uniform_iasi(g));
    if (op_ == "weakly-uniform") return uniform_item(weakly_uniform_iasi(g, *k_));
    if (op_ == "strongly-uniform") return uniform_item(strongly_uniform_iasi(g, *k_));
    const SetLabeling f = labeling_for(g, labels_);
    if (op_ == "complement") return outcome_item(complement_labeling(f));
    if (op_ == "line") return outcome_item(line_graph_labeling(f));
    if (op_ == "total") return outcome_item(total_graph_labeling(f));
    const Edge e = Edge::of(edge_[0], edge_[1]);
    if (op_ == "subdivide") return outcome_item(subdivision_labeling(f, e));
    return outcome_item(contraction_labeling(f, e));
  }

  void add_classify() {
    CLI::App* cmd = app_.add_subcommand("classify", "classify a labeling");
    auto* graph = cmd->add_option("--graph", graph_, "graph6 string");
    auto* labels = cmd->add_option("--labels", labels_, "labels as a JSON array or a file");
    auto* labeling = cmd->add_option("--labeling", labeling_,
                                     "labeling JSON object, or a file with one labeling JSON object per line");
    graph->needs(labels);
    labels->needs(graph);
    labeling->excludes(graph);
    add_format(cmd);
    cmd->callback([this] {
      action_ = [this] {
        std::vector<SetLabeling> inputs;
        bool batch = false;
        if (!labeling_.empty()) {
          if (is_file(labeling_)) {
            batch = true;
            std::istringstream in(read_file(labeling_));
            std::string line;
            for (std::size_t n = 1; std::getline(in, line); ++n) {
              if (!line.empty() && line.back() == '\r') line.pop_back();
              if (line.find_first_not_of(" \t") == std::string::npos) continue;
              inputs.push_back(labeling_from_json(parse_json_text(line, n)));
            }
          } else {
            inputs.push_back(labeling_from_json(parse_json_text(labeling_)));
          }
        } else if (!graph_.empty()) {
          inputs.push_back(labeling_for(parse_graph6(graph_), labels_));
        } else {
          throw CLI::ValidationError("classify", "give --graph with --labels, or --labeling");
        }
        if (inputs.empty()) throw PreconditionError("no labelings in '" + labeling_ + "'");
        std::vector<Item> items(inputs.size());
        auto classify_one = [](const SetLabeling& f) {
          const ClassificationReport r = classify(f);
          return Item{Json{{"labeling", to_json(f)}, {"report", to_json(r)}}, labeling_text(f) + report_text(r),
                      labeling_dot(f), r.verified_iasi() ? ok : negative};
        };
        if (parallel_) {
          std::vector<std::future<Item>> jobs;
          for (const auto& f : inputs) jobs.push_back(std::async(std::launch::async, classify_one, std::cref(f)));
          for (std::size_t i = 0; i < jobs.size(); ++i) items[i] = jobs[i].get();
        } else {
          for (std::size_t i = 0; i < inputs.size(); ++i) items[i] = classify_one(inputs[i]);
        }
        Json config{{"format", format_}};
        return emit("classify", config, items, batch, format_, out_);
      };
    });
  }

  void add_minsize() {
    CLI::App* cmd = add_graph_command("minsize", "smallest ground set admitting an IASI");
    search_.add(cmd);
    cmd->add_option("--l", l_, "require every vertex label to have exactly l elements");
    cmd->add_option("--start", start_, "first ground-set size tried (default: the proven lower bound)");
    cmd->callback([this] {
      action_ = [this] {
        const SearchConfig config = search_.resolve(parallel_);
        Json echo{{"search", to_json(config)}, {"format", format_}};
        echo["l"] = l_ ? Json(*l_) : Json(nullptr);
        echo["start"] = start_ ? Json(*start_) : Json(nullptr);
        return run_graphs("minsize", echo, [this, config](const Graph& g) {
          const GroundSetResult r = min_ground_set_size(g, config, GroundSetOptions{start_, l_});
          Item item{to_json(r), "", "", certificate_code(r.certificate)};
          std::ostringstream s;
          s << "graph " << write_graph6(g) << '\n';
          if (r.size) {
            s << "ground-set number " << *r.size << " (lower bound " << r.lower_bound
              << (r.proven_minimum ? ", proven minimum" : "") << ")\n";
            const SetLabeling& w = *r.certificate.witness;
            s << "ground set " << IntegerSet::from(r.certificate.ground_set).to_string() << '\n' << labeling_text(w);
            item.dot = labeling_dot(w);
            if (l_) item.json["binomial_bound"] = to_json(check_binomial_bound(w, r.certificate.ground_set));
          } else {
            s << "no witness: " << to_string(r.certificate.kind) << " (" << r.certificate.search_space << ")\n";
          }
          item.text = s.str();
          return item;
        });
      };
    });
  }

  void add_uniform() {
    CLI::App* cmd = add_graph_command("uniform", "exhaustive search for a k-uniform IASI");
    search_.add(cmd);
    cmd->add_option("--k", k_, "edge label size")->required();
    cmd->add_option("--rule", rule_, "extra edge condition")
        ->check(CLI::IsMember({"any", "weak", "strong"}))
        ->capture_default_str();
    cmd->callback([this] {
      action_ = [this] {
        const SearchConfig config = search_.resolve(parallel_);
        const EdgeRule rule = rule_ == "weak" ? EdgeRule::weak : rule_ == "strong" ? EdgeRule::strong : EdgeRule::any;
        Json echo{{"search", to_json(config)}, {"k", *k_}, {"rule", rule_}, {"format", format_}};
        return run_graphs("uniform", echo, [this, config, rule](const Graph& g) {
          const Certificate c = find_k_uniform(g, *k_, config, rule);
          Item item{to_json(c), "", "", certificate_code(c)};
          item.text = "graph " + write_graph6(g) + '\n' + to_string(c.kind) + " (" + c.search_space + ")\n";
          if (c.witness) {
            item.text += labeling_text(*c.witness);
            item.dot = labeling_dot(*c.witness);
          }
          return item;
        });
      };
    });
  }

  void add_oracle() {
    CLI::App* cmd = app_.add_subcommand("oracle", "verify the registered claims");
    cmd->require_subcommand(1);
    CLI::App* list = cmd->add_subcommand("list", "list registered check ids");
    list->callback([this] {
      action_ = [this] {
        for (const CheckInfo& c : registered_checks()) out_ << c.id << '\t' << c.claim << '\n';
        return static_cast<int>(ok);
      };
    });
    CLI::App* run = cmd->add_subcommand("run", "run one check or all of them");
    run->add_option("id", check_id_, "check id or 'all'")->required();
    run->add_option("--corpus", corpus_, "graph6 file replacing the default corpus of a graph check");
    search_.add(run);
    nonexistence_.config = OracleConfig{}.nonexistence;
    nonexistence_.budget_ms = nonexistence_.config.time_budget.count();
    nonexistence_.add(run, "ne-");
    add_format(run);
    run->callback([this] {
      action_ = [this] {
        if (format_ == "dot") throw CLI::ValidationError("--format", "dot is not available for oracle reports");
        OracleConfig config;
        config.search = search_.resolve(false);
        config.nonexistence = nonexistence_.resolve(false);
        config.parallel = parallel_;
        Json echo{{"search", to_json(config.search)},
                  {"nonexistence", to_json(config.nonexistence)},
                  {"set_universe", config.set_universe},
                  {"triple_universe", config.triple_universe},
                  {"labeling_universe", config.labeling_universe},
                  {"labeling_size", config.labeling_size},
                  {"max_edges", config.max_edges},
                  {"format", format_}};
        std::vector<TheoremCheck> checks;
        if (check_id_ == "all") {
          if (!corpus_.empty()) throw CLI::ValidationError("--corpus", "applies to a single check id");
          checks = run_suite(config).checks;
        } else {
          std::optional<Corpus> corpus;
          if (!corpus_.empty()) {
            std::ifstream in(corpus_);
            if (!in) throw PreconditionError("cannot open '" + corpus_ + "'");
            corpus = Corpus{"graphs from " + std::filesystem::path(corpus_).filename().string(), read_graph6_lines(in)};
            echo["corpus"] = corpus->description;
          }
          checks.push_back(run_check(check_id_, corpus, config));
        }
        std::vector<Item> items;
        for (const TheoremCheck& c : checks) {
          const int code = c.verdict == Verdict::pass ? ok : c.verdict == Verdict::counterexample ? negative : budget;
          std::ostringstream s;
          s << c.id << ": " << to_string(c.verdict) << " (" << c.cases << " cases, " << c.failures << " failures) over " << c.corpus << "; "
            << c.domain << '\n';
          for (const Evidence& e : c.evidence) s << "  counterexample: " << e.note << '\n';
          if (c.literal_failures) s << "  literal rule failures: " << c.literal_failures << '\n';
          for (const std::string& n : c.notes) s << "  note: " << n << '\n';
          items.push_back({to_json(c), s.str(), "", code});
        }
        echo["id"] = check_id_;
        if (check_id_ == "all") {
          SuiteReport suite;
          suite.checks = checks;
          for (const auto& c : checks) {
            suite.any_counterexample = suite.any_counterexample || c.verdict == Verdict::counterexample;
            suite.any_inconclusive = suite.any_inconclusive || c.verdict == Verdict::inconclusive;
          }
          if (format_ == "json") {
            int code = ok;
            for (const Item& i : items) code = combine(code, i.code);
            Json doc{{"command", "oracle run"}, {"config", echo}, {"exit_status", code}, {"result", to_json(suite)}};
            out_ << doc.dump(2) << '\n';
            return code;
          }
          return emit("oracle run", echo, items, true, format_, out_);
        }
        return emit("oracle run", echo, items, false, format_, out_);
      };
    });
  }

  void add_product() {
    CLI::App* cmd = add_graph_command("product", "induced labeling of a binary graph operation");
    cmd->add_option("--kind", kind_, "operation")
        ->check(CLI::IsMember({"cartesian", "direct", "strong", "lexicographic", "union", "join", "corona", "rooted"}))
        ->required();
    cmd->add_option("--with", right_graph_, "right operand as a graph6 string")->required();
    cmd->add_option("--labels", labels_, "left labeling; defaults to the canonical one");
    cmd->add_option("--with-labels", right_labels_, "right labeling; defaults to the canonical one");
    cmd->add_option("--root", root_, "root vertex of the right operand for the rooted product")->capture_default_str();
    cmd->callback([this] {
      action_ = [this] {
        const SetLabeling right = labeling_for(parse_graph6(right_graph_), right_labels_);
        Json config{{"kind", kind_},
                    {"with", right_graph_},
                    {"labels", labels_.empty() ? "canonical" : "supplied"},
                    {"with_labels", right_labels_.empty() ? "canonical" : "supplied"},
                    {"format", format_}};
        if (kind_ == "rooted") config["root"] = root_;
        return run_graphs("product", config, [this, right](const Graph& g) {
          const SetLabeling left = labeling_for(g, labels_);
          if (kind_ == "union") return outcome_item(union_labeling(left, right));
          if (kind_ == "join") return outcome_item(join_labeling(left, right));
          if (kind_ == "corona") return outcome_item(corona_labeling(left, right));
          if (kind_ == "rooted") return outcome_item(rooted_labeling(left, right, root_));
          return outcome_item(product_labeling(*parse_product_kind(kind_), left, right));
        });
      };
    });
  }

  void add_convert() {
    CLI::App* cmd = add_graph_command("convert", "re-encode graphs (json: edge lists, text: graph6, dot)");
    cmd->add_option("--labels", labels_, "labels to annotate DOT vertices with");
    cmd->callback([this] {
      action_ = [this] {
        Json config{{"format", format_}};
        return run_graphs("convert", config, [this](const Graph& g) {
          Item item{to_json(g), write_graph6(g) + '\n', "", ok};
          item.dot = labels_.empty() ? to_dot(g) : labeling_dot(labeling_for(g, labels_));
          return item;
        });
      };
    });
  }

  std::ostream& out_;
  CLI::App app_;
  std::function<int()> action_;

  std::string graph_;
  std::string format_ = "json";
  bool parallel_ = false;
  std::string op_ = "canonical";
  std::optional<std::size_t> k_;
  std::optional<std::size_t> l_;
  std::optional<std::size_t> start_;
  std::string labels_;
  std::string labeling_;
  std::vector<Vertex> edge_;
  std::string rule_ = "any";
  std::string check_id_;
  std::string corpus_;
  std::string kind_;
  std::string right_graph_;
  std::string right_labels_;
  Vertex root_ = 0;
  SearchFlags search_;
  SearchFlags nonexistence_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli(out);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    cli.app().parse(reversed);
    return cli.dispatch();
  } catch (const CLI::CallForHelp& e) {
    return cli.app().exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return cli.app().exit(e, out, err);
  } catch (const CLI::Error& e) {
    cli.app().exit(e, out, err);
    return usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
}

}  // namespace iasl::cli
