#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "qsymx/permutation.hpp"

using namespace qsymx;

namespace {

// Peak positions straight from the definition, with sigma(0) = 0.
std::vector<int> naive_peaks(const std::vector<int> &w, bool augmented) {
  std::vector<int> out;
  const int n = static_cast<int>(w.size());
  for (int i = 1; i < n; ++i) {
    const int prev = i == 1 ? 0 : w[static_cast<std::size_t>(i - 2)];
    const int here = w[static_cast<std::size_t>(i - 1)];
    const int next = w[static_cast<std::size_t>(i)];
    if (i == 1 && !augmented)
      continue;
    if (prev < here && here > next)
      out.push_back(i);
  }
  return out;
}

} // namespace

TEST_CASE("parsing and validation") {
  CHECK(Permutation::parse("312546") == Permutation({3, 1, 2, 5, 4, 6}));
  CHECK(Permutation::parse("()").size() == 0);
  CHECK(Permutation::parse("").size() == 0);
  CHECK(Permutation::parse("3,1,2,10,4,5,6,7,8,9").at(4) == 10);
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("13"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1x"), std::invalid_argument);
  CHECK(Permutation({3, 1, 2}).to_string() == "312");
  CHECK(Permutation::parse(Permutation::identity(11).to_string()) == Permutation::identity(11));
}

TEST_CASE("descent composition") {
  CHECK(descent_composition(Permutation::parse("312546")) == Composition({1, 3, 2}));
  CHECK(descent_set(Permutation::parse("312546")) == std::vector<int>{1, 4});
  for (int n = 1; n <= 6; ++n) {
    CHECK(descent_composition(Permutation::identity(n)) == Composition({n}));
    std::vector<int> rev;
    for (int i = n; i >= 1; --i)
      rev.push_back(i);
    CHECK(descent_composition(Permutation(rev)) == Composition(std::vector<int>(static_cast<std::size_t>(n), 1)));
  }
  CHECK(descent_composition(Permutation()) == Composition());
}

TEST_CASE("peak sets") {
  const auto p = peak_sets(Permutation::parse("312546"));
  CHECK(p.interior == std::vector<int>{4});
  CHECK(p.augmented == std::vector<int>{1, 4});
  for (int n = 2; n <= 6; ++n) {
    const auto id = peak_sets(Permutation::identity(n));
    CHECK(id.interior.empty());
    CHECK(id.augmented.empty());
  }
  const auto q = peak_sets(Permutation::parse("132"));
  CHECK(q.interior == std::vector<int>{2});
  CHECK(q.augmented == std::vector<int>{2});
}

TEST_CASE("peaks against the definition, and dependence on descents only") {
  for (int n = 0; n <= 7; ++n) {
    std::map<std::vector<int>, PeakSets> by_descents;
    for (const auto &w : all_permutations(n)) {
      const Permutation s(w);
      const auto ps = peak_sets(s);
      CHECK(ps.interior == naive_peaks(w, false));
      CHECK(ps.augmented == naive_peaks(w, true));
      CHECK(interior_peaks(s) == static_cast<int>(ps.interior.size()));
      CHECK(augmented_peaks(s) == static_cast<int>(ps.augmented.size()));
      const auto d = descent_composition(s);
      CHECK(interior_peaks(s) == p_minus(d));
      CHECK(augmented_peaks(s) == p_plus(d));
      auto [it, fresh] = by_descents.emplace(descent_set(s), ps);
      if (!fresh) {
        CHECK(it->second.interior == ps.interior);
        CHECK(it->second.augmented == ps.augmented);
      }
    }
  }
}

TEST_CASE("shuffles") {
  const auto s = shuffles(Permutation::parse("12"), Permutation::parse("312"));
  CHECK(s.size() == 10);
  CHECK(std::find(s.begin(), s.end(), Permutation::parse("12534")) != s.end());
  CHECK(shuffles(Permutation(), Permutation::parse("21")) == std::vector<Permutation>{Permutation::parse("21")});
  CHECK(shuffles(Permutation::parse("12"), Permutation::parse("12")).size() == 6);
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const auto &a : all_permutations(n))
        for (const auto &b : all_permutations(m)) {
          const auto sh = shuffles(Permutation(a), Permutation(b));
          CHECK(BigInt(static_cast<long>(sh.size())) == binomial(n + m, n));
          CHECK(std::set<Permutation>(sh.begin(), sh.end()).size() == sh.size());
          CHECK(std::is_sorted(sh.begin(), sh.end()));
        }
}

TEST_CASE("SSym product") {
  const auto f1 = SSymElement::basis(Permutation({1}));
  SSymElement expect;
  expect.add(Permutation({1, 2}), Rational(1));
  expect.add(Permutation({2, 1}), Rational(1));
  CHECK(multiply_ssym(f1, f1) == expect);
  const auto x = SSymElement::basis(Permutation({2, 1}), Rational(3)) + SSymElement::basis(Permutation({1}));
  CHECK(multiply_ssym(SSymElement::basis(Permutation()), x) == x);
  CHECK(multiply_ssym(x, SSymElement::basis(Permutation())) == x);
  auto cube = multiply_ssym(multiply_ssym(f1, f1), f1);
  SSymElement all3;
  for (const auto &w : all_permutations(3))
    all3.add(Permutation(w), Rational(1));
  CHECK(cube == all3);
  SSymElement zero;
  zero.add(Permutation({1}), Rational(2));
  zero.add(Permutation({1}), Rational(-2));
  CHECK(zero.is_zero());
}

TEST_CASE("SSym product is associative up to total degree 6") {
  std::vector<Permutation> basis;
  for (int n = 0; n <= 4; ++n)
    for (const auto &w : all_permutations(n))
      basis.emplace_back(w);
  for (const auto &a : basis)
    for (const auto &b : basis)
      for (const auto &c : basis) {
        if (a.size() + b.size() + c.size() > 6)
          continue;
        const auto fa = SSymElement::basis(a), fb = SSymElement::basis(b), fc = SSymElement::basis(c);
        CHECK(multiply_ssym(multiply_ssym(fa, fb), fc) == multiply_ssym(fa, multiply_ssym(fb, fc)));
      }
}

TEST_CASE("permutation enumeration") {
  auto count = [](int n) {
    long c = 0;
    for (const auto &w : all_permutations(n)) {
      (void)w;
      ++c;
    }
    return c;
  };
  CHECK(count(0) == 1);
  CHECK(count(3) == 6);
  CHECK(count(4) == 24);
  CHECK(count(8) == 40320);
  CHECK_THROWS_AS(all_permutations(10), std::length_error);
  CHECK_NOTHROW(all_permutations(10, 10));
  std::vector<std::vector<int>> seen;
  for (const auto &w : all_permutations(4))
    seen.push_back(w);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(std::set<std::vector<int>>(seen.begin(), seen.end()).size() == 24);
}
