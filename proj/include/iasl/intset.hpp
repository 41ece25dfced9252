#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace iasl {

using Element = std::uint64_t;

/// Default upper limit for label elements. Anything above it is an overflow.
inline constexpr Element kDefaultElementBound = Element{1} << 48;

/// A finite, non-empty set of non-negative integers kept in ascending order.
///
/// Equality and ordering are those of the canonical ascending sequence, so
/// `{0,1} < {0,2} < {1}`.
class IntegerSet {
 public:
  IntegerSet(std::initializer_list<Element> elements);

  /// Sorts and deduplicates. Throws PreconditionError when empty and
  /// OverflowError when an element exceeds `bound`.
  static IntegerSet from(std::vector<Element> elements, Element bound = kDefaultElementBound);

  std::size_t size() const noexcept { return elements_.size(); }
  Element min() const noexcept { return elements_.front(); }
  Element max() const noexcept { return elements_.back(); }
  bool contains(Element x) const;

  std::span<const Element> elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  std::string to_string() const;

  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;
  friend auto operator<=>(const IntegerSet&, const IntegerSet&) = default;

 private:
  explicit IntegerSet(std::vector<Element> sorted) : elements_(std::move(sorted)) {}

  std::vector<Element> elements_;
};

/// Positive differences of distinct elements. May be empty, so it is not an
/// IntegerSet.
using DifferenceSet = std::vector<Element>;

/// {a+b : a in A, b in B}.
IntegerSet sumset(const IntegerSet& a, const IntegerSet& b, Element bound = kDefaultElementBound);

/// {n*a : a in A}; n must be positive.
IntegerSet integral_multiple(Element n, const IntegerSet& a, Element bound = kDefaultElementBound);

/// Translate every element by `shift`.
IntegerSet translate(const IntegerSet& a, Element shift, Element bound = kDefaultElementBound);

DifferenceSet difference_set(const IntegerSet& a);

/// Smallest element common to both difference sets, if any.
std::optional<Element> shared_difference(const DifferenceSet& x, const DifferenceSet& y);

struct CompatibilityClass {
  Element sum = 0;
  std::vector<std::pair<Element, Element>> pairs;
};

/// Partition of A x B by the value of a+b.
struct CompatibilityTable {
  std::vector<CompatibilityClass> classes;  // ascending by sum
  std::size_t index = 0;                    // number of classes, |A+B|
  std::size_t neglecting_number = 0;        // |A||B| - index
  std::size_t max_class_size = 0;
  std::vector<Element> saturated_sums;      // classes of size min(|A|,|B|)

  /// Size of the class for sum `k`; zero when `k` is not realized.
  std::size_t class_size(Element k) const;
};

CompatibilityTable compatibility_table(const IntegerSet& a, const IntegerSet& b);

}  // namespace iasl
