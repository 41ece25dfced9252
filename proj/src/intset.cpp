#include "iasl/intset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "iasl/error.hpp"

namespace iasl {

namespace {

void check_bound(Element x, Element bound) {
  if (x > bound) {
    throw OverflowError("element " + std::to_string(x) + " exceeds bound " + std::to_string(bound));
  }
}

Element checked_add(Element a, Element b, Element bound) {
  if (a > bound || b > bound - a) {
    throw OverflowError("sum " + std::to_string(a) + "+" + std::to_string(b) + " exceeds bound " +
                        std::to_string(bound));
  }
  return a + b;
}

}  // namespace

IntegerSet::IntegerSet(std::initializer_list<Element> elements)
    : IntegerSet(from(std::vector<Element>(elements))) {}

IntegerSet IntegerSet::from(std::vector<Element> elements, Element bound) {
  if (elements.empty()) {
    throw PreconditionError("integer set labels must be non-empty");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  check_bound(elements.back(), bound);
  return IntegerSet(std::move(elements));
}

bool IntegerSet::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::string IntegerSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out << ',';
    out << elements_[i];
  }
  out << '}';
  return out.str();
}

IntegerSet sumset(const IntegerSet& a, const IntegerSet& b, Element bound) {
  std::vector<Element> out;
  out.reserve(a.size() * b.size());
  for (Element x : a) {
    for (Element y : b) out.push_back(checked_add(x, y, bound));
  }
  return IntegerSet::from(std::move(out), bound);
}

IntegerSet integral_multiple(Element n, const IntegerSet& a, Element bound) {
  if (n == 0) {
    throw PreconditionError("integral multiple requires n >= 1");
  }
  std::vector<Element> out;
  out.reserve(a.size());
  for (Element x : a) {
    if (x != 0 && n > bound / x) {
      throw OverflowError("product " + std::to_string(n) + "*" + std::to_string(x) + " exceeds bound " +
                          std::to_string(bound));
    }
    out.push_back(n * x);
  }
  return IntegerSet::from(std::move(out), bound);
}

IntegerSet translate(const IntegerSet& a, Element shift, Element bound) {
  std::vector<Element> out;
  out.reserve(a.size());
  for (Element x : a) out.push_back(checked_add(x, shift, bound));
  return IntegerSet::from(std::move(out), bound);
}

DifferenceSet difference_set(const IntegerSet& a) {
  DifferenceSet out;
  auto e = a.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) out.push_back(e[j] - e[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Element> shared_difference(const DifferenceSet& x, const DifferenceSet& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return *i;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return std::nullopt;
}

std::size_t CompatibilityTable::class_size(Element k) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), k,
                             [](const CompatibilityClass& c, Element s) { return c.sum < s; });
  return (it != classes.end() && it->sum == k) ? it->pairs.size() : 0;
}

CompatibilityTable compatibility_table(const IntegerSet& a, const IntegerSet& b) {
  std::map<Element, std::vector<std::pair<Element, Element>>> by_sum;
  for (Element x : a) {
    for (Element y : b) by_sum[checked_add(x, y, ~Element{0})].emplace_back(x, y);
  }

  CompatibilityTable table;
  const std::size_t saturation = std::min(a.size(), b.size());
  for (auto& [sum, pairs] : by_sum) {
    table.max_class_size = std::max(table.max_class_size, pairs.size());
    if (pairs.size() == saturation) table.saturated_sums.push_back(sum);
    table.classes.push_back({sum, std::move(pairs)});
  }
  table.index = table.classes.size();
  table.neglecting_number = a.size() * b.size() - table.index;
  return table;
}

}  // namespace iasl
