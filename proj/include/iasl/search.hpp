#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iasl/graph.hpp"
#include "iasl/labeling.hpp"

namespace iasl {

/// Bounds for the exact search engine. Labels are subsets of
/// {0..element_bound} with at most size_bound elements.
struct SearchConfig {
  Element element_bound = 8;
  std::size_t size_bound = 4;
  std::chrono::milliseconds time_budget{60'000};
  bool parallel = false;

  /// Throws PreconditionError for non-positive bounds or element_bound > 31.
  void validate() const;
};

enum class CertificateKind { witness, exhausted, budget_exceeded };

std::string to_string(CertificateKind kind);

struct Certificate {
  CertificateKind kind = CertificateKind::exhausted;
  std::optional<SetLabeling> witness;
  std::vector<Element> ground_set;  // set when the search ranged over ground sets
  std::string search_space;
  SearchConfig config;
};

/// Extra constraint on every edge in find_k_uniform.
enum class EdgeRule { any, weak, strong };

std::string to_string(EdgeRule rule);

/// ceil(log2(n+1)).
std::size_t ground_set_lower_bound(std::size_t n);

struct GroundSetResult {
  std::optional<std::size_t> size;  // absent unless a witness was found
  std::size_t lower_bound = 0;
  /// The witness size equals the proven lower bound.
  bool proven_minimum = false;
  Certificate certificate;
};

struct GroundSetOptions {
  /// Start the ascent here instead of at the proven lower bound.
  std::optional<std::size_t> start_size;
  /// Require every vertex label to have exactly this many elements.
  std::optional<std::size_t> vertex_label_size;
};

/// Smallest |X|, X a subset of {0..element_bound}, such that the graph has an
/// IASI with labels drawn from the non-empty subsets of X (of at most
/// size_bound elements). Only ground sets containing 0 are tried: translating
/// a witness keeps it a witness and makes X lexicographically smaller.
GroundSetResult min_ground_set_size(const Graph& g, const SearchConfig& config, const GroundSetOptions& options = {});

struct BinomialBound {
  std::size_t vertices = 0;
  std::size_t ground_size = 0;
  std::size_t label_size = 0;
  std::uint64_t binomial = 0;
  bool holds = false;
  bool tight = false;
};

std::uint64_t binomial(std::size_t n, std::size_t k);

/// n <= C(|X|, l) for a labeling whose vertex labels all have l elements.
/// X defaults to the union of the labels. Throws PreconditionError when the
/// vertex labels are not uniform or not contained in X.
BinomialBound check_binomial_bound(const SetLabeling& f, std::optional<std::vector<Element>> ground_set = std::nullopt);

/// Exhaustive search for an IASI with every edge label of size k (plus the
/// edge rule). Labels range over subsets of {0..element_bound}.
Certificate find_k_uniform(const Graph& g, std::size_t k, const SearchConfig& config, EdgeRule rule = EdgeRule::any);

}  // namespace iasl
