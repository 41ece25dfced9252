#include "test_main.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "iasl/error.hpp"
#include "iasl/intset.hpp"

using namespace iasl;

namespace {

// Brute-force references built only from std containers.
std::set<Element> naive_sum(const std::vector<Element>& a, const std::vector<Element>& b) {
  std::set<Element> out;
  for (Element x : a)
    for (Element y : b) out.insert(x + y);
  return out;
}

std::set<Element> naive_differences(const std::vector<Element>& a) {
  std::set<Element> out;
  for (Element x : a)
    for (Element y : a)
      if (x > y) out.insert(x - y);
  return out;
}

std::vector<std::vector<Element>> subsets_of(Element max) {
  std::vector<std::vector<Element>> out;
  for (unsigned mask = 1; mask < (1u << (max + 1)); ++mask) {
    std::vector<Element> s;
    for (Element x = 0; x <= max; ++x)
      if (mask >> x & 1) s.push_back(x);
    out.push_back(s);
  }
  return out;
}

std::vector<Element> elems(const IntegerSet& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("integer sets are canonical") {
  const IntegerSet s = IntegerSet::from({4, 1, 4, 0});
  CHECK(elems(s) == std::vector<Element>{0, 1, 4});
  CHECK(s == IntegerSet{0, 1, 4});
  CHECK(s.min() == 0);
  CHECK(s.max() == 4);
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(2));
  CHECK(s.to_string() == "{0,1,4}");
  CHECK(IntegerSet{1, 2} < IntegerSet{1, 3});
}

TEST_CASE("empty and out-of-range sets are rejected") {
  CHECK_THROWS_AS(IntegerSet::from({}), PreconditionError);
  CHECK_THROWS_AS(IntegerSet::from({1u << 20}, 1u << 19), OverflowError);
  CHECK(kDefaultElementBound >= (Element{1} << 20));
}

TEST_CASE("sumset examples") {
  CHECK(sumset({1, 2}, {3, 4}) == IntegerSet{4, 5, 6});
  CHECK(sumset({0}, {5, 9}) == IntegerSet{5, 9});
  const IntegerSet full = sumset({1, 2}, {1, 3});
  CHECK(full == IntegerSet{2, 3, 4, 5});
  CHECK(full.size() == 4);
}

TEST_CASE("sumset overflow names the offending pair") {
  try {
    sumset({1, 10}, {5}, 12);
    FAIL("expected overflow");
  } catch (const OverflowError& e) {
    const std::string what = e.what();
    CHECK(what.find("10") != std::string::npos);
    CHECK(what.find("5") != std::string::npos);
  }
}

TEST_CASE("integral multiple examples") {
  CHECK(integral_multiple(2, {1, 3}) == IntegerSet{2, 6});
  CHECK(integral_multiple(1, {0, 7}) == IntegerSet{0, 7});
  CHECK(integral_multiple(3, {0}) == IntegerSet{0});
  CHECK_THROWS_AS(integral_multiple(0, {1, 2}), PreconditionError);
  CHECK_THROWS_AS(integral_multiple(4, {5}, 10), OverflowError);
}

TEST_CASE("difference set examples") {
  CHECK(difference_set({1, 2, 4}) == DifferenceSet{1, 2, 3});
  CHECK(difference_set({5}).empty());
  CHECK(difference_set({0, 2, 4}) == DifferenceSet{2, 4});
  CHECK(shared_difference({1}, {2}) == std::nullopt);
  CHECK(shared_difference({1, 3}, {2, 3}) == Element{3});
}

TEST_CASE("compatibility table examples") {
  SUBCASE("{1,2} and {1,2}") {
    const CompatibilityTable t = compatibility_table({1, 2}, {1, 2});
    REQUIRE(t.classes.size() == 3);
    CHECK(t.classes[0].sum == 2);
    CHECK(t.classes[0].pairs == std::vector<std::pair<Element, Element>>{{1, 1}});
    CHECK(t.classes[1].sum == 3);
    CHECK(t.classes[1].pairs == std::vector<std::pair<Element, Element>>{{1, 2}, {2, 1}});
    CHECK(t.classes[2].pairs == std::vector<std::pair<Element, Element>>{{2, 2}});
    CHECK(t.index == 3);
    CHECK(t.neglecting_number == 1);
    CHECK(t.saturated_sums == std::vector<Element>{3});
  }
  SUBCASE("{0} and {4,7}") {
    const CompatibilityTable t = compatibility_table({0}, {4, 7});
    CHECK(t.classes.size() == 2);
    CHECK(t.index == 2);
    CHECK(t.neglecting_number == 0);
  }
  SUBCASE("{1,2} and {5,6}") {
    const CompatibilityTable t = compatibility_table({1, 2}, {5, 6});
    CHECK(t.index == 3);
    CHECK(t.neglecting_number == 1);
    CHECK(t.class_size(7) == 2);
    CHECK(t.saturated_sums == std::vector<Element>{7});
    CHECK(t.max_class_size == 2);
  }
}

TEST_CASE("set laws hold for every pair of subsets of {0..8}") {
  const auto sets = subsets_of(8);
  REQUIRE(sets.size() == 511);
  std::size_t pairs = 0;
  for (const auto& a : sets) {
    const IntegerSet sa = IntegerSet::from(a);
    const auto da = naive_differences(a);
    for (const auto& b : sets) {
      ++pairs;
      const IntegerSet sb = IntegerSet::from(b);
      const IntegerSet s = sumset(sa, sb);
      const auto ref = naive_sum(a, b);
      REQUIRE(elems(s) == std::vector<Element>(ref.begin(), ref.end()));
      REQUIRE(std::max(a.size(), b.size()) <= s.size());
      REQUIRE(s.size() <= a.size() * b.size());

      const auto db = naive_differences(b);
      std::vector<Element> common;
      std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(common));
      REQUIRE((s.size() == a.size() * b.size()) == common.empty());

      const CompatibilityTable t = compatibility_table(sa, sb);
      std::size_t total = 0, neglected = 0;
      for (const auto& c : t.classes) {
        REQUIRE(c.pairs.size() <= std::min(a.size(), b.size()));
        total += c.pairs.size();
        neglected += c.pairs.size() - 1;
      }
      REQUIRE(total == a.size() * b.size());
      REQUIRE(t.index == s.size());
      REQUIRE(t.neglecting_number == neglected);
      REQUIRE(s.size() == a.size() * b.size() - t.neglecting_number);
    }
  }
  CHECK(pairs == 261121);
}

TEST_CASE("sumset is commutative and associative") {
  const auto sets = subsets_of(4);
  for (std::size_t i = 0; i < sets.size(); i += 3)
    for (std::size_t j = 0; j < sets.size(); j += 2) {
      const IntegerSet a = IntegerSet::from(sets[i]);
      const IntegerSet b = IntegerSet::from(sets[j]);
      REQUIRE(sumset(a, b) == sumset(b, a));
      for (std::size_t k = 0; k < sets.size(); k += 5) {
        const IntegerSet c = IntegerSet::from(sets[k]);
        REQUIRE(sumset(sumset(a, b), c) == sumset(a, sumset(b, c)));
      }
    }
}

TEST_CASE("integral multiples keep cardinality") {
  for (const auto& a : subsets_of(6))
    for (Element n = 1; n <= 5; ++n) {
      const IntegerSet m = integral_multiple(n, IntegerSet::from(a));
      REQUIRE(m.size() == a.size());
      for (Element x : a) REQUIRE(m.contains(n * x));
    }
}

TEST_CASE("translation shifts every element") {
  CHECK(translate({0, 3}, 4) == IntegerSet{4, 7});
  CHECK_THROWS_AS(translate({0, 3}, 4, 6), OverflowError);
}
