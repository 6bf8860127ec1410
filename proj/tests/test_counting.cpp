#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "balseg/counting.hpp"
#include "balseg/enumerate.hpp"
#include "balseg/errors.hpp"
#include "golden_fixtures.hpp"

using namespace balseg;

TEST_CASE("triangles match the frozen tables") {
  Counter counter;
  const auto s_rows = counter.s_table(10);
  const auto p_rows = counter.p_table(10);
  REQUIRE(s_rows.size() == fixtures::s_rows.size());
  for (std::size_t l = 0; l < fixtures::s_rows.size(); ++l)
    for (std::size_t h = 0; h < fixtures::s_rows[l].size(); ++h) {
      CHECK(s_rows[l][h] == fixtures::s_rows[l][h]);
      CHECK(p_rows[l][h] == fixtures::p_rows[l][h]);
    }
}

TEST_CASE("spot values") {
  Counter counter;
  CHECK(counter.s(7, 3) == 8);
  CHECK(counter.s(10, 2) == 20);
  CHECK(counter.p(7, 2) == 3);
  CHECK(counter.p(10, 2) == 4);
  CHECK(counter.p(4, 3) == 0);
  CHECK(counter.count(Family::balanced, 7, 3) == 8);
  CHECK(counter.count(Family::palindrome, 7, 3) == 2);
}

TEST_CASE("extension to all integer arguments") {
  Counter counter;
  CHECK(counter.s(0, 0) == 1);
  CHECK(counter.p(0, 0) == 1);
  CHECK(counter.s(0, 5) == 0);
  CHECK(counter.p(0, -1) == 0);
  CHECK(counter.s(-1, 3) == 0);
  CHECK(counter.p(-4, 0) == 0);
  // Heights reduce mod the length.
  CHECK(counter.s(5, 7) == counter.s(5, 2));
  CHECK(counter.s(5, -3) == counter.s(5, 2));
  CHECK(counter.s(5, -3) == 6);
  CHECK(counter.p(6, 8) == counter.p(6, 2));
  CHECK(counter.p(3, -1) == counter.p(3, 2));
  // Symmetry inside a row.
  for (long long l = 0; l <= 40; ++l)
    for (long long h = 0; h <= l; ++h)
      CHECK(counter.s(l, h) == counter.s(l, l - h));
}

TEST_CASE("counts equal enumeration sizes") {
  Counter counter;
  for (long long l = 0; l <= 12; ++l)
    for (long long h = 0; h <= l; ++h) {
      CHECK(counter.s(l, h) == to_count(enumerate_balanced(l, h).size()));
      CHECK(counter.p(l, h) ==
            to_count(enumerate_balanced_palindromes(l, h).size()));
    }
}

TEST_CASE("affix counts") {
  Counter counter;
  CHECK(counter.s_affix(5, 2, '0', '0') == 1);
  CHECK(counter.s_affix(5, 2, '1', '1') == 1);
  CHECK(counter.s_affix(5, 2, '0', '1') == 2);
  CHECK(counter.s_affix(5, 2, '1', '0') == 2);
  // The four classes partition the whole set.
  for (long long l = 1; l <= 12; ++l)
    for (long long h = 0; h <= l; ++h) {
      Count sum = 0;
      for (char a : {'0', '1'})
        for (char b : {'0', '1'}) sum += counter.s_affix(l, h, a, b);
      CHECK(sum == counter.s(l, h));
      // ... and each class matches its enumeration.
      const auto words = enumerate_balanced(l, h);
      for (char a : {'0', '1'})
        for (char b : {'0', '1'}) {
          long matching = 0;
          for (const auto& w : words)
            matching += (w.front() == a && w.back() == b);
          CHECK(counter.s_affix(l, h, a, b) == matching);
        }
    }
  CHECK_THROWS_AS(counter.s_affix(0, 0, '0', '0'), std::invalid_argument);
  CHECK_THROWS_AS(counter.s_affix(5, 6, '0', '0'), std::invalid_argument);
  CHECK_THROWS_AS(counter.s_affix(5, 2, 'a', '0'), std::invalid_argument);
}

TEST_CASE("row totals") {
  for (std::size_t l = 0; l < fixtures::s_totals.size(); ++l) {
    CHECK(s_total(l) == fixtures::s_totals[l]);
    CHECK(p_total(l) == fixtures::p_totals[l]);
  }
  Counter counter;
  for (long long l = 0; l <= 60; ++l) {
    Count s_sum = 0, p_sum = 0;
    for (long long h = 0; h <= l; ++h) {
      s_sum += counter.s(l, h);
      p_sum += counter.p(l, h);
    }
    CHECK(s_sum == s_total(l));
    CHECK(p_sum == p_total(l));
  }
  CHECK_THROWS_AS(s_total(-1), std::invalid_argument);
  CHECK_THROWS_AS(p_total(-1), std::invalid_argument);
}

TEST_CASE("height-2 closed form") {
  CHECK(s_height2(0) == 0);
  CHECK(s_height2(5) == 6);
  CHECK(s_height2(7) == 11);
  Counter counter;
  for (long long l = 0; l <= 400; ++l) CHECK(s_height2(l) == counter.s(l, 2));
  CHECK_THROWS_AS(s_height2(-1), std::invalid_argument);
}

TEST_CASE("family parsing") {
  CHECK(parse_family("s") == Family::balanced);
  CHECK(parse_family("p") == Family::palindrome);
  CHECK(!parse_family("q").has_value());
  CHECK(!parse_family("").has_value());
}

TEST_CASE("deep columns stay tractable") {
  // Long thin columns exercise the bottom-up fill; these would overflow the
  // stack if the recursion descended length by length.
  Counter counter;
  CHECK(counter.s(200000, 1) == 200000);
  CHECK(counter.s(100000, 50) > 0);
  CHECK(counter.p(100000, 50) > 0);
}
