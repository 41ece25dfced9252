#include "iasl/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <deque>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include "iasl/error.hpp"

namespace iasl {

void SearchConfig::validate() const {
  if (element_bound < 1) throw PreconditionError("element_bound must be positive");
  if (element_bound > 31) throw PreconditionError("element_bound above 31 is not supported by the search engine");
  if (size_bound < 1) throw PreconditionError("size_bound must be positive");
  if (time_budget.count() <= 0) throw PreconditionError("time_budget must be positive");
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::witness: return "witness";
    case CertificateKind::exhausted: return "exhausted";
    case CertificateKind::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

std::string to_string(EdgeRule rule) {
  switch (rule) {
    case EdgeRule::any: return "any";
    case EdgeRule::weak: return "weak";
    case EdgeRule::strong: return "strong";
  }
  return "unknown";
}

std::size_t ground_set_lower_bound(std::size_t n) {
  std::size_t m = 0;
  while ((std::uint64_t{1} << m) < n + 1) ++m;
  return m;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

namespace {

using Mask = std::uint64_t;

Mask mask_sum(Mask a, Mask b) {
  Mask out = 0;
  while (a) {
    const int shift = std::countr_zero(a);
    out |= b << shift;
    a &= a - 1;
  }
  return out;
}

IntegerSet to_set(Mask m) {
  std::vector<Element> out;
  while (m) {
    out.push_back(static_cast<Element>(std::countr_zero(m)));
    m &= m - 1;
  }
  return IntegerSet::from(std::move(out));
}

/// Subsets of `universe` with sizes in `sizes`, ordered by (size, lexicographic).
std::vector<Mask> ordered_labels(const std::vector<Element>& universe, std::size_t min_size, std::size_t max_size) {
  std::vector<Mask> out;
  const std::size_t u = universe.size();
  for (std::size_t s = std::max<std::size_t>(min_size, 1); s <= std::min(max_size, u); ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      Mask m = 0;
      for (std::size_t i : idx) m |= Mask{1} << universe[i];
      out.push_back(m);
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == u - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

struct Deadline {
  std::chrono::steady_clock::time_point end;
  std::atomic<bool> expired{false};

  explicit Deadline(std::chrono::milliseconds budget) : end(std::chrono::steady_clock::now() + budget) {}

  bool check() {
    if (expired.load(std::memory_order_relaxed)) return true;
    if (std::chrono::steady_clock::now() >= end) expired = true;
    return expired;
  }
};

using EdgeTest = std::function<bool(Mask, Mask, Mask)>;

/// Depth-first assignment of candidate labels in a BFS vertex order, with
/// incremental checks of vertex injectivity, edge injectivity and the edge
/// test on every edge whose endpoints are both assigned.
class Engine {
 public:
  Engine(const Graph& g, const std::vector<Mask>& candidates, EdgeTest edge_ok, Deadline& deadline)
      : g_(g), candidates_(candidates), edge_ok_(std::move(edge_ok)), deadline_(deadline) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::deque<Vertex> q{s};
      while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        order_.push_back(v);
        for (Vertex w : g.neighbors(v))
          if (!seen[w]) {
            seen[w] = true;
            q.push_back(w);
          }
      }
    }
    position_.resize(n);
    for (std::size_t p = 0; p < n; ++p) position_[order_[p]] = p;
    earlier_.resize(n);
    for (std::size_t p = 0; p < n; ++p)
      for (Vertex w : g.neighbors(order_[p]))
        if (position_[w] < p) earlier_[p].push_back(w);
  }

  /// Restrict position 0 to a single candidate index when `first` is set.
  std::optional<std::vector<Mask>> run(std::optional<std::size_t> first = std::nullopt) {
    const std::size_t n = g_.vertex_count();
    assignment_.assign(n, 0);
    used_.assign(candidates_.size(), false);
    edges_.clear();
    first_ = first;
    if (n == 0) return std::vector<Mask>{};
    if (dfs(0)) return assignment_;
    return std::nullopt;
  }

  bool timed_out() const { return timed_out_; }

 private:
  bool dfs(std::size_t p) {
    if (p == order_.size()) return true;
    if ((++nodes_ & 0xFFF) == 0 && deadline_.check()) timed_out_ = true;
    if (timed_out_) return false;

    const Vertex v = order_[p];
    std::size_t lo = 0, hi = candidates_.size();
    if (p == 0 && first_) {
      lo = *first_;
      hi = *first_ + 1;
    }
    for (std::size_t c = lo; c < hi; ++c) {
      if (used_[c]) continue;
      const Mask label = candidates_[c];
      const std::size_t mark = edges_.size();
      bool ok = true;
      for (Vertex w : earlier_[p]) {
        const Mask other = assignment_[w];
        const Mask sum = mask_sum(label, other);
        if (!edge_ok_(label, other, sum) || std::find(edges_.begin(), edges_.end(), sum) != edges_.end()) {
          ok = false;
          break;
        }
        edges_.push_back(sum);
      }
      if (ok) {
        used_[c] = true;
        assignment_[v] = label;
        if (dfs(p + 1)) return true;
        used_[c] = false;
        if (timed_out_) return false;
      }
      edges_.resize(mark);
    }
    return false;
  }

  const Graph& g_;
  const std::vector<Mask>& candidates_;
  EdgeTest edge_ok_;
  Deadline& deadline_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::vector<std::vector<Vertex>> earlier_;
  std::vector<Mask> assignment_;
  std::vector<bool> used_;
  std::vector<Mask> edges_;
  std::optional<std::size_t> first_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

struct JobResult {
  std::optional<std::vector<Mask>> witness;
  bool timed_out = false;
};

/// Runs jobs 0..count-1 and returns the lowest index that produced a witness.
/// In parallel mode jobs run in batches; the answer does not depend on it.
std::pair<std::optional<std::size_t>, JobResult> first_success(std::size_t count, bool parallel,
                                                                const std::function<JobResult(std::size_t)>& job) {
  const std::size_t width = parallel ? std::max<std::size_t>(2, std::thread::hardware_concurrency()) : 1;
  for (std::size_t start = 0; start < count; start += width) {
    const std::size_t stop = std::min(count, start + width);
    std::vector<JobResult> results(stop - start);
    if (width == 1) {
      results[0] = job(start);
    } else {
      std::vector<std::future<JobResult>> futures;
      for (std::size_t i = start; i < stop; ++i) futures.push_back(std::async(std::launch::async, job, i));
      for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      // A timed-out job before the first witness leaves the answer unknown.
      if (results[i].timed_out) return {std::nullopt, JobResult{std::nullopt, true}};
      if (results[i].witness) return {start + i, std::move(results[i])};
    }
  }
  return {std::nullopt, JobResult{}};
}

SetLabeling labeling_of(const Graph& g, const std::vector<Mask>& masks) {
  std::vector<IntegerSet> labels;
  for (Mask m : masks) labels.push_back(to_set(m));
  return SetLabeling(g, std::move(labels));
}

std::string set_text(const std::vector<Element>& xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << '}';
  return out.str();
}

}  // namespace

GroundSetResult min_ground_set_size(const Graph& g, const SearchConfig& config, const GroundSetOptions& options) {
  config.validate();
  const std::size_t n = g.vertex_count();
  if (n == 0) throw PreconditionError("min_ground_set_size needs at least one vertex");

  GroundSetResult result;
  result.lower_bound = ground_set_lower_bound(n);
  result.certificate.config = config;
  const std::size_t start = std::max<std::size_t>(1, options.start_size.value_or(result.lower_bound));
  const std::size_t max_m = static_cast<std::size_t>(config.element_bound) + 1;

  std::ostringstream space;
  space << "ground sets X within {0.." << config.element_bound << "} containing 0, |X| from " << start << " to "
        << max_m << "; labels: ";
  if (options.vertex_label_size) {
    space << "subsets of X with exactly " << *options.vertex_label_size << " elements";
  } else {
    space << "non-empty subsets of X with at most " << config.size_bound << " elements";
  }
  result.certificate.search_space = space.str();

  Deadline deadline(config.time_budget);
  std::vector<Element> rest;
  for (Element x = 1; x <= config.element_bound; ++x) rest.push_back(x);

  for (std::size_t m = start; m <= max_m; ++m) {
    // All X = {0} + (m-1)-subset of {1..E}, in lexicographic order.
    std::vector<std::vector<Element>> grounds;
    for (Mask tail : ordered_labels(rest, m - 1, m - 1)) {
      std::vector<Element> x{0};
      for (Mask t = tail; t; t &= t - 1) x.push_back(static_cast<Element>(std::countr_zero(t)));
      grounds.push_back(std::move(x));
    }
    if (m == 1) grounds = {{0}};

    auto job = [&](std::size_t i) -> JobResult {
      const std::vector<Element>& x = grounds[i];
      const std::vector<Mask> candidates =
          options.vertex_label_size ? ordered_labels(x, *options.vertex_label_size, *options.vertex_label_size)
                                    : ordered_labels(x, 1, config.size_bound);
      if (candidates.size() < n) return {};
      Engine engine(g, candidates, [](Mask, Mask, Mask) { return true; }, deadline);
      JobResult r{engine.run(), engine.timed_out()};
      return r;
    };
    auto [index, found] = first_success(grounds.size(), config.parallel, job);
    if (index) {
      result.size = m;
      result.proven_minimum = m == result.lower_bound;
      result.certificate.kind = CertificateKind::witness;
      result.certificate.witness = labeling_of(g, *found.witness);
      result.certificate.ground_set = grounds[*index];
      return result;
    }
    if (found.timed_out) {
      result.certificate.kind = CertificateKind::budget_exceeded;
      result.certificate.search_space += "; budget ran out at |X| = " + std::to_string(m);
      return result;
    }
  }
  result.certificate.kind = CertificateKind::exhausted;
  return result;
}

BinomialBound check_binomial_bound(const SetLabeling& f, std::optional<std::vector<Element>> ground_set) {
  const std::size_t n = f.graph().vertex_count();
  if (n == 0) throw PreconditionError("binomial bound needs at least one vertex");
  const std::size_t l = f.label(0).size();
  for (const IntegerSet& s : f.labels()) {
    if (s.size() != l) throw PreconditionError("vertex labels are not uniformly sized");
  }
  std::vector<Element> x;
  if (ground_set) {
    x = *ground_set;
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    for (const IntegerSet& s : f.labels())
      for (Element e : s)
        if (!std::binary_search(x.begin(), x.end(), e)) {
          throw PreconditionError("label element " + std::to_string(e) + " is outside the ground set " + set_text(x));
        }
  } else {
    for (const IntegerSet& s : f.labels()) x.insert(x.end(), s.begin(), s.end());
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
  }
  BinomialBound b;
  b.vertices = n;
  b.ground_size = x.size();
  b.label_size = l;
  b.binomial = binomial(x.size(), l);
  b.holds = n <= b.binomial;
  b.tight = n == b.binomial;
  return b;
}

Certificate find_k_uniform(const Graph& g, std::size_t k, const SearchConfig& config, EdgeRule rule) {
  config.validate();
  if (k < 1) throw PreconditionError("k must be positive");
  std::vector<Element> universe;
  for (Element x = 0; x <= config.element_bound; ++x) universe.push_back(x);
  const std::vector<Mask> candidates = ordered_labels(universe, 1, config.size_bound);

  Certificate cert;
  cert.config = config;
  std::ostringstream space;
  space << "labels: non-empty subsets of {0.." << config.element_bound << "} with at most " << config.size_bound
        << " elements; every edge label of size " << k << " (edge rule: " << to_string(rule)
        << "); vertex and edge labels injective";
  cert.search_space = space.str();

  EdgeTest test = [k, rule](Mask a, Mask b, Mask sum) {
    const auto size = static_cast<std::size_t>(std::popcount(sum));
    if (size != k) return false;
    const auto sa = static_cast<std::size_t>(std::popcount(a));
    const auto sb = static_cast<std::size_t>(std::popcount(b));
    if (rule == EdgeRule::weak) return size == std::max(sa, sb);
    if (rule == EdgeRule::strong) return size == sa * sb;
    return true;
  };

  Deadline deadline(config.time_budget);
  std::optional<std::vector<Mask>> witness;
  bool timed_out = false;
  if (!config.parallel || g.vertex_count() == 0) {
    Engine engine(g, candidates, test, deadline);
    witness = engine.run();
    timed_out = engine.timed_out();
  } else {
    auto job = [&](std::size_t first) -> JobResult {
      Engine engine(g, candidates, test, deadline);
      JobResult r{engine.run(first), engine.timed_out()};
      return r;
    };
    auto [index, found] = first_success(candidates.size(), true, job);
    witness = std::move(found.witness);
    timed_out = found.timed_out;
  }

  if (witness) {
    cert.kind = CertificateKind::witness;
    cert.witness = labeling_of(g, *witness);
  } else {
    cert.kind = timed_out ? CertificateKind::budget_exceeded : CertificateKind::exhausted;
  }
  return cert;
}

}  // namespace iasl
