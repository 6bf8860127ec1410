#include "balseg/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "balseg/asymptotics.hpp"
#include "balseg/counting.hpp"
#include "balseg/enumerate.hpp"
#include "balseg/format.hpp"
#include "balseg/genfun.hpp"
#include "balseg/totient.hpp"
#include "balseg/words.hpp"

namespace balseg {

namespace {

// Frozen reference triangles for lengths 0..10, with row totals.
constexpr const char* golden_s_csv =
    "L,0,1,2,3,4,5,6,7,8,9,10,total\n"
    "0,1,,,,,,,,,,,1\n"
    "1,1,1,,,,,,,,,,2\n"
    "2,1,2,1,,,,,,,,,4\n"
    "3,1,3,3,1,,,,,,,,8\n"
    "4,1,4,4,4,1,,,,,,,14\n"
    "5,1,5,6,6,5,1,,,,,,24\n"
    "6,1,6,8,6,8,6,1,,,,,36\n"
    "7,1,7,11,8,8,11,7,1,,,,54\n"
    "8,1,8,13,12,8,12,13,8,1,,,76\n"
    "9,1,9,17,13,12,12,13,17,9,1,,104\n"
    "10,1,10,20,16,16,10,16,16,20,10,1,136\n";

constexpr const char* golden_p_csv =
    "L,0,1,2,3,4,5,6,7,8,9,10,total\n"
    "0,1,,,,,,,,,,,1\n"
    "1,1,1,,,,,,,,,,2\n"
    "2,1,0,1,,,,,,,,,2\n"
    "3,1,1,1,1,,,,,,,,4\n"
    "4,1,0,2,0,1,,,,,,,4\n"
    "5,1,1,2,2,1,1,,,,,,8\n"
    "6,1,0,2,0,2,0,1,,,,,6\n"
    "7,1,1,3,2,2,3,1,1,,,,14\n"
    "8,1,0,3,0,2,0,3,0,1,,,10\n"
    "9,1,1,3,3,2,2,3,3,1,1,,20\n"
    "10,1,0,4,0,2,0,2,0,4,0,1,14\n";

// Frozen reference generating functions for heights 2..6: numerator
// coefficients (index = exponent) and the orders of the 1-X^k factors.
struct GfFixture {
  long long h;
  std::vector<long long> numerator;
  std::vector<long long> orders;
};

const std::vector<GfFixture> gf_s_fixtures = {
    {2, {0, 1, 0, 1}, {1, 2, 3}},
    {3, {0, 1, 2, 0, 1, 2}, {2, 3, 4}},
    {4, {0, 1, 1, 3, 0, 3, 3, 3}, {3, 4, 5}},
    {5, {0, 1, 2, 3, 4, 0, 3, 5, 3, 4, 0, 0, 1}, {4, 5, 6}},
    {6, {0, 1, 1, 1, 4, 5, 0, 5, 10, 7, 6, 5, 0, 0, 1}, {5, 6, 7}},
};

const std::vector<GfFixture> gf_p_fixtures = {
    {2, {0, 1}, {1, 3}},
    {3, {0, 1}, {2, 4}},
    {4, {0, 1, 1, 1}, {3, 5}},
    {5, {0, 1, 0, 1, 0, 0, 0, 1}, {4, 6}},
    {6, {0, 1, 1, 1, 2, 1, 0, 0, 1}, {5, 7}},
};

RationalFunction fixture_ratio(const GfFixture& f) {
  std::vector<Rational> cs;
  for (long long c : f.numerator) cs.push_back(to_rational(c));
  GeneratingFunction g{Polynomial(std::move(cs)), f.orders};
  return g.ratio();
}

// Pairwise comparison of all equal-length factors: the definition itself,
// with no sliding-window shortcut.
bool balanced_by_definition(const Word& w) {
  const long long n = static_cast<long long>(w.size());
  std::vector<long long> ones(n + 1, 0);
  for (long long i = 0; i < n; ++i) ones[i + 1] = ones[i] + (w[i] == '1');
  for (long long k = 1; k <= n; ++k)
    for (long long i = 0; i + k <= n; ++i)
      for (long long j = i + 1; j + k <= n; ++j) {
        const long long d =
            (ones[i + k] - ones[i]) - (ones[j + k] - ones[j]);
        if (d > 1 || d < -1) return false;
      }
  return true;
}

std::vector<Word> all_words(long long length) {
  std::vector<Word> out;
  out.reserve(1ull << length);
  for (unsigned long long mask = 0; mask < (1ull << length); ++mask) {
    Word w(length, '0');
    for (long long i = 0; i < length; ++i)
      if (mask >> (length - 1 - i) & 1) w[i] = '1';
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> mapped_sorted(const std::vector<Word>& words,
                                const std::function<Word(const Word&)>& f) {
  std::vector<Word> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(f(w));
  std::sort(out.begin(), out.end());
  return out;
}

using Failure = std::ostringstream;

std::string suite_golden_tables(Counter& counter) {
  std::vector<Count> s_totals, p_totals;
  for (long long l = 0; l <= 10; ++l) {
    s_totals.push_back(s_total(l));
    p_totals.push_back(p_total(l));
  }
  if (table_csv(counter.s_table(10), s_totals) != golden_s_csv)
    return "balanced triangle deviates from the frozen table";
  if (table_csv(counter.p_table(10), p_totals) != golden_p_csv)
    return "palindrome triangle deviates from the frozen table";
  return {};
}

std::string suite_oracle(Counter& counter, long long brute_max) {
  for (long long l = 0; l <= brute_max; ++l) {
    for (long long h = 0; h <= l; ++h) {
      const auto words = enumerate_balanced(l, h);
      if (counter.s(l, h) != to_count(words.size())) {
        Failure f;
        f << "s(" << l << "," << h << ") = " << counter.s(l, h)
          << " but enumeration yields " << words.size();
        return f.str();
      }
      if (!std::is_sorted(words.begin(), words.end()))
        return "enumeration output is not sorted";
      const auto pals = enumerate_balanced_palindromes(l, h);
      if (counter.p(l, h) != to_count(pals.size())) {
        Failure f;
        f << "p(" << l << "," << h << ") = " << counter.p(l, h)
          << " but enumeration yields " << pals.size();
        return f.str();
      }
      if (l >= 1) {
        for (char a : {'0', '1'})
          for (char b : {'0', '1'}) {
            long matching = 0;
            for (const Word& w : words)
              matching += (w.front() == a && w.back() == b);
            if (counter.s_affix(l, h, a, b) != matching) {
              Failure f;
              f << "affix count (" << l << "," << h << "," << a << "," << b
                << ") disagrees with enumeration";
              return f.str();
            }
          }
      }
      if (l <= std::min<long long>(brute_max, 12) &&
          words != enumerate_balanced_naive(l, h)) {
        Failure f;
        f << "pruned and naive enumerations differ at (" << l << "," << h
          << ")";
        return f.str();
      }
    }
  }
  return {};
}

std::string suite_symmetry(Counter& counter, long long max_length) {
  for (long long l = 0; l <= max_length; ++l)
    for (long long h = 0; h <= l; ++h)
      if (counter.s(l, h) != counter.s(l, l - h)) {
        Failure f;
        f << "s(" << l << "," << h << ") != s(" << l << "," << l - h << ")";
        return f.str();
      }
  // Extension: reduction mod the length, both directions, and empty cases.
  if (counter.s(0, 0) != 1 || counter.p(0, 0) != 1) return "s(0,0) != 1";
  if (counter.s(0, 3) != 0 || counter.s(-2, 1) != 0 || counter.p(-1, 0) != 0)
    return "out-of-range arguments fail to vanish";
  for (long long l = 1; l <= 30; ++l)
    for (long long h = -2 * l; h <= 2 * l; ++h) {
      const long long reduced = ((h % l) + l) % l;
      if (counter.s(l, h) != counter.s(l, reduced))
        return "mod-L extension broken for s";
      if (counter.p(l, h) != counter.p(l, reduced))
        return "mod-L extension broken for p";
    }
  return {};
}

std::string suite_row_sums(Counter& counter, long long max_length) {
  for (long long l = 0; l <= max_length; ++l) {
    Count s_sum = 0, p_sum = 0;
    for (long long h = 0; h <= l; ++h) {
      s_sum += counter.s(l, h);
      p_sum += counter.p(l, h);
    }
    if (s_sum != s_total(l)) {
      Failure f;
      f << "balanced row " << l << " sums to " << s_sum << ", total formula "
        << s_total(l);
      return f.str();
    }
    if (p_sum != p_total(l)) {
      Failure f;
      f << "palindrome row " << l << " sums to " << p_sum
        << ", total formula " << p_total(l);
      return f.str();
    }
  }
  return {};
}

std::string suite_identities(Counter& counter) {
  // Weighted row sum: 2 sum_h h s(L,h) = L (s_total(L) - 2).
  for (long long l = 1; l <= 100; ++l) {
    Count weighted = 0;
    for (long long h = 0; h < l; ++h)
      weighted += to_count(h) * counter.s(l, h);
    if (2 * weighted != to_count(l) * (s_total(l) - 2)) {
      Failure f;
      f << "weighted row identity fails at L = " << l;
      return f.str();
    }
  }
  // Block difference of consecutive column sections.
  for (long long h = 1; h <= 50; ++h) {
    Count upper = 0, lower = 0;
    for (long long l = h; l <= 2 * h - 1; ++l) upper += counter.s(l, h);
    for (long long l = 0; l <= h - 1; ++l) lower += counter.s(l, h);
    if (upper - lower != s_total(h) + s_total(h - 1) - to_count(h + 1)) {
      Failure f;
      f << "column block identity fails at h = " << h;
      return f.str();
    }
  }
  // The 1...1 count only depends on (L-h) mod (h-1).
  for (long long h = 2; h <= 60; ++h)
    for (long long l = h; l <= 60; ++l) {
      const long long folded = h + (l - h) % (h - 1);
      if (counter.s_affix(l, h, '1', '1') !=
          counter.s_affix(folded, h, '1', '1')) {
        Failure f;
        f << "affix periodicity fails at (" << l << "," << h << ")";
        return f.str();
      }
    }
  // Even-length palindromes have even height.
  for (long long l = 0; l <= 200; l += 2)
    for (long long h = 1; h <= l; h += 2)
      if (counter.p(l, h) != 0) {
        Failure f;
        f << "p(" << l << "," << h << ") nonzero despite parity";
        return f.str();
      }
  // Height-2 closed form.
  for (long long l = 0; l <= 1000; ++l)
    if (counter.s(l, 2) != s_height2(l)) {
      Failure f;
      f << "height-2 closed form fails at L = " << l;
      return f.str();
    }
  // Palindromes are a subset.
  for (long long l = 0; l <= 100; ++l)
    for (long long h = 0; h <= l; ++h)
      if (counter.p(l, h) > counter.s(l, h)) {
        Failure f;
        f << "p exceeds s at (" << l << "," << h << ")";
        return f.str();
      }
  return {};
}

std::string suite_bijections(Counter& counter, long long max_length) {
  (void)counter;
  const long long word_max = std::min<long long>(max_length, 14);
  for (long long l = 0; l <= word_max; ++l) {
    for (const Word& w : all_words(l)) {
      if (is_balanced(w) != balanced_by_definition(w)) {
        return "window balance check disagrees with the definition at " + w;
      }
      // 0-erasure commutes with reversal on every word.
      if (erase_zeros(reversed(w)) != reversed(erase_zeros(w)))
        return "erase_zeros does not commute with reversal at " + w;
      // ... and is a left inverse of 0-insertion on words ending in 1.
      if (!w.empty() && w.back() == '1' &&
          erase_zeros(insert_zeros(w)) != w)
        return "erase_zeros(insert_zeros(w)) != w at " + w;
    }
  }
  for (long long l = 0; l <= word_max; ++l) {
    for (long long h = 0; h <= l; ++h) {
      const auto words = enumerate_balanced(l, h);
      for (const Word& w : words) {
        const Word expanded = insert_zeros(w);
        if (!is_balanced(expanded) || height(expanded) != h ||
            static_cast<long long>(expanded.size()) != l + h)
          return "insert_zeros breaks balance or size at " + w;
        const Word erased = erase_zeros(w);
        if (!is_balanced(erased) || height(erased) != h)
          return "erase_zeros breaks balance at " + w;
        if (is_palindrome(w) && !is_palindrome(erased))
          return "erase_zeros breaks palindromicity at " + w;
        // Words alternating blocks 0, 01 that end in 1 are exactly the
        // expanded words; on those the pair inverts the other way too.
        if (!w.empty() && w.front() == '0' && w.back() == '1' &&
            w.find("11") == Word::npos && insert_zeros(erase_zeros(w)) != w)
          return "insert_zeros(erase_zeros(w)) != w at " + w;
      }
      // Complementation maps height h onto height l-h.
      if (mapped_sorted(words, complemented) !=
          enumerate_balanced(l, l - h))
        return "complementation is not a bijection onto the mirror height";
    }
  }
  // The 0-erasing bijections between affix classes and full classes, each
  // valid from its threshold length on.
  for (long long l = 0; l <= max_length; ++l) {
    for (long long h = 0; h <= l; ++h) {
      const auto erased = [](const Word& w) { return erase_zeros(w); };
      if (l >= 2 * h + 1) {
        const auto from = enumerate_balanced(l, h, "0", "0");
        if (mapped_sorted(from, erased) != enumerate_balanced(l - h - 1, h))
          return "0...0 erasure bijection fails";
      }
      if (l >= std::max<long long>(2 * h, 1) && l - h >= 1) {
        const auto from = enumerate_balanced(l, h, "0", "1");
        if (mapped_sorted(from, erased) !=
            enumerate_balanced(l - h, h, "", "1"))
          return "0...1 erasure bijection fails";
        const auto from10 = enumerate_balanced(l, h, "1", "0");
        if (mapped_sorted(from10, erased) !=
            enumerate_balanced(l - h, h, "1", ""))
          return "1...0 erasure bijection fails";
      }
      if (h >= 1 && l >= 2 * h - 1 && l >= 1 && l - h + 1 >= 1) {
        const auto from = enumerate_balanced(l, h, "1", "1");
        if (mapped_sorted(from, erased) !=
            enumerate_balanced(l - h + 1, h, "1", "1"))
          return "1...1 erasure bijection fails";
      }
      if (l >= 2 * h + 1 && l >= 1) {
        const auto from = enumerate_balanced_palindromes(l, h, '0');
        if (mapped_sorted(from, erased) !=
            enumerate_balanced_palindromes(l - h - 1, h))
          return "palindrome erasure bijection (leading 0) fails";
      }
      if (h >= 1 && l >= 2 * h - 1 && l >= 1) {
        const auto from = enumerate_balanced_palindromes(l, h, '1');
        if (mapped_sorted(from, erased) !=
            enumerate_balanced_palindromes(l - h + 1, h, '1'))
          return "palindrome erasure bijection (leading 1) fails";
      }
    }
  }
  return {};
}

std::string suite_genfun(Counter& counter, long long h_max) {
  for (const Family family : {Family::balanced, Family::palindrome}) {
    const auto& fixtures =
        family == Family::balanced ? gf_s_fixtures : gf_p_fixtures;
    for (long long h = 0; h <= h_max; ++h) {
      const GeneratingFunction g = generating_function(counter, family, h);
      const auto series = series_coefficients(g.ratio(), 200);
      for (long long l = 0; l <= 200; ++l) {
        if (series[l].get_den() != 1 ||
            series[l].get_num() != counter.count(family, l, h)) {
          Failure f;
          f << "series coefficient " << l << " of height " << h
            << " disagrees with the count";
          return f.str();
        }
      }
      for (const GfFixture& fixture : fixtures)
        if (fixture.h == h && !(g.ratio() == fixture_ratio(fixture))) {
          Failure f;
          f << "generating function at height " << h
            << " differs from the frozen fixture";
          return f.str();
        }
    }
  }
  // Degree bounds and the vanishing of the balanced numerator at -1 for odd
  // heights (which makes the closed-up form reducible there).
  for (long long h = 2; h <= std::max<long long>(h_max, 20); ++h) {
    const GeneratingFunction gs =
        generating_function(counter, Family::balanced, h);
    if (gs.numerator.degree() > 3 * h - 2) {
      Failure f;
      f << "balanced numerator degree exceeds bound at height " << h;
      return f.str();
    }
    if (h % 2 == 1 && h <= 19 && gs.numerator(Rational(-1)) != 0) {
      Failure f;
      f << "balanced numerator fails to vanish at -1 for height " << h;
      return f.str();
    }
    const GeneratingFunction gp =
        generating_function(counter, Family::palindrome, h);
    if (gp.numerator.degree() > 2 * h - 2) {
      Failure f;
      f << "palindrome numerator degree exceeds bound at height " << h;
      return f.str();
    }
  }
  return {};
}

std::string suite_profiles(Counter& counter, long long h_max) {
  for (const Family family : {Family::balanced, Family::palindrome}) {
    for (long long h = 2; h <= std::max<long long>(h_max, 2); ++h) {
      const AsymptoticProfile prof = asymptotic_profile(counter, family, h);
      for (long long l = 0; l <= 5 * prof.period; ++l)
        if (prof.reconstruct(l) != counter.count(family, l, h)) {
          Failure f;
          f << "profile reconstruction fails at (" << l << "," << h << ")";
          return f.str();
        }
    }
  }
  // Spot-frozen profiles.
  const AsymptoticProfile s2 =
      asymptotic_profile(counter, Family::balanced, 2);
  if (s2.alpha != Rational(1, 6) || s2.beta != Rational(1, 3) ||
      s2.period != 6)
    return "balanced height-2 profile deviates from the frozen values";
  const AsymptoticProfile p2 =
      asymptotic_profile(counter, Family::palindrome, 2);
  if (p2.alpha != Rational(1, 3) || p2.period != 3 || p2.parity_form ||
      p2.residual != std::vector<Rational>{Rational(0), Rational(2, 3),
                                           Rational(1, 3)})
    return "palindrome height-2 profile deviates from the frozen values";
  const AsymptoticProfile p3 =
      asymptotic_profile(counter, Family::palindrome, 3);
  if (p3.alpha != Rational(1, 8) || p3.period != 8 || !p3.parity_form)
    return "palindrome height-3 profile deviates from the frozen values";
  return {};
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return !s.ran || s.passed; });
}

VerifyReport run_verification(const VerifyOptions& options) {
  Counter counter;
  const long long wide = std::max<long long>(100, options.max_length);

  struct Suite {
    const char* name;
    bool enabled;
    std::function<std::string()> run;
  };
  const std::vector<Suite> suites = {
      {"golden-tables", options.max_length >= 10,
       [&] { return suite_golden_tables(counter); }},
      {"oracle-equivalence", options.brute_max > 0,
       [&] { return suite_oracle(counter, options.brute_max); }},
      {"symmetry", true, [&] { return suite_symmetry(counter, wide); }},
      {"row-sums", true, [&] { return suite_row_sums(counter, wide); }},
      {"structural-identities", true,
       [&] { return suite_identities(counter); }},
      {"bijections", true,
       [&] { return suite_bijections(counter, options.max_length); }},
      {"genfun-coefficients", true,
       [&] { return suite_genfun(counter, options.h_max); }},
      {"profile-reconstruction", true,
       [&] { return suite_profiles(counter, options.h_max); }},
  };

  VerifyReport report;
  for (const Suite& suite : suites) {
    SuiteResult result;
    result.name = suite.name;
    if (!suite.enabled) {
      result.ran = false;
      report.suites.push_back(std::move(result));
      continue;
    }
    try {
      result.detail = suite.run();
      result.passed = result.detail.empty();
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = e.what();
    }
    report.suites.push_back(std::move(result));
  }
  return report;
}

}  // namespace balseg
