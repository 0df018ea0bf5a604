#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "qsymx/composition.hpp"
#include "qsymx/exactnum.hpp"

using namespace qsymx;

TEST_CASE("construction and text round trip") {
  CHECK_THROWS_AS(Composition({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({-2}), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("a"), std::invalid_argument);
  CHECK(Composition::parse("()").empty());
  CHECK(Composition::parse("").empty());
  CHECK(Composition().to_string() == "()");
  CHECK(Composition::parse(" 2, 1 ,3") == Composition({2, 1, 3}));
  for (int n = 0; n <= 7; ++n)
    for (const auto &a : all_compositions(n))
      CHECK(Composition::parse(a.to_string()) == a);
}

TEST_CASE("statistics") {
  const auto s = stats({1, 3, 1, 2, 2});
  CHECK(s.p_minus == 2);
  CHECK(s.p_plus == 3);
  CHECK(p_plus({5}) == 0);
  CHECK(p_plus(Composition()) == 0);
  const auto t = stats({2, 2});
  CHECK(t.k_even == 2);
  CHECK(t.k_odd == 0);
  CHECK(t.p_minus == 1);
  CHECK(t.u == 1);
  CHECK(t.v == 2);
  CHECK(t.k == 2);
  CHECK(t.floor_sum == 2);
}

TEST_CASE("all_compositions") {
  CHECK(all_compositions(0) == std::vector<Composition>{Composition()});
  const auto three = all_compositions(3);
  CHECK(std::set<Composition>(three.begin(), three.end()) ==
        std::set<Composition>{{3}, {1, 2}, {2, 1}, {1, 1, 1}});
  CHECK(all_compositions(5).size() == 16);
  for (int n = 1; n <= 10; ++n) {
    const auto all = all_compositions(n);
    CHECK(all.size() == (std::size_t{1} << (n - 1)));
    for (std::uint32_t m = 0; m < all.size(); ++m) {
      CHECK(all[m].mask() == m);
      CHECK(all[m].weight() == n);
      CHECK(Composition::from_mask(n, m) == all[m]);
      CHECK(composition_from_descents(n, all[m].descent_set()) == all[m]);
    }
  }
  CHECK_THROWS(Composition::from_mask(3, 4));
}

TEST_CASE("refinement order") {
  CHECK(refines({1, 1, 1}, {3}));
  CHECK_FALSE(refines({3}, {1, 1, 1}));
  CHECK_FALSE(refines({1, 1}, {3}));
  const auto r = refinements({2, 1});
  CHECK(std::set<Composition>(r.begin(), r.end()) == std::set<Composition>{{2, 1}, {1, 1, 1}});
  for (int n = 1; n <= 7; ++n)
    for (const auto &a : all_compositions(n)) {
      const auto ref = refinements(a);
      const auto coa = coarsenings(a);
      CHECK(ref.size() == (std::size_t{1} << (n - a.length())));
      CHECK(coa.size() == (std::size_t{1} << (a.length() - 1)));
      for (const auto &b : all_compositions(n)) {
        const bool in_ref = std::find(ref.begin(), ref.end(), b) != ref.end();
        const bool in_coa = std::find(coa.begin(), coa.end(), b) != coa.end();
        CHECK(in_ref == refines(b, a));
        CHECK(in_coa == refines(a, b));
      }
    }
}

TEST_CASE("reversal and conjugate") {
  CHECK(conjugate({2, 3, 1, 2, 2}) == Composition({1, 2, 3, 1, 2, 1}));
  CHECK(conjugate({1, 1}) == Composition({2}));
  CHECK(reversal({1, 3, 2}) == Composition({2, 3, 1}));
  CHECK(conjugate(Composition()) == Composition());
  for (int n = 1; n <= 9; ++n)
    for (const auto &a : all_compositions(n)) {
      CHECK(conjugate(a) == oracle::conjugate_by_diagram(a));
      CHECK(conjugate(conjugate(a)) == a);
      CHECK(reversal(reversal(a)) == a);
      CHECK(conjugate(a).length() == n + 1 - a.length());
      CHECK(conjugate(reversal(a)) == reversal(conjugate(a)));
    }
}

TEST_CASE("deconcatenate") {
  const Composition a{2, 1, 3};
  CHECK(deconcatenate(a, 1) == std::pair{Composition({2}), Composition({1, 3})});
  CHECK(deconcatenate(a, 0) == std::pair{Composition(), a});
  CHECK(deconcatenate(a, 3) == std::pair{a, Composition()});
  CHECK_THROWS_AS(deconcatenate(a, 4), std::out_of_range);
  CHECK_THROWS_AS(deconcatenate(a, -1), std::out_of_range);
  for (int i = 0; i <= 3; ++i) {
    const auto [l, r] = deconcatenate(a, i);
    CHECK(concat(l, r) == a);
  }
}

TEST_CASE("quasi-shuffle along a path") {
  const Composition alpha{1, 2, 3, 4, 5};
  const Composition beta{10, 20, 30, 40};
  // H V D H D V H reads (a1, b1, a2+b2, a3, a4+b3, b4, a5).
  const auto path = LatticePath::parse("HVDHDVH");
  CHECK(quasi_shuffle(alpha, beta, path) == Composition({1, 10, 22, 3, 34, 40, 5}));
  CHECK(quasi_shuffle({1}, {1}, LatticePath::parse("HV")) == Composition({1, 1}));
  CHECK(quasi_shuffle({1}, {1}, LatticePath::parse("D")) == Composition({2}));
  CHECK_THROWS_AS(quasi_shuffle({1}, {1}, LatticePath::parse("H")), std::invalid_argument);
  CHECK_THROWS_AS(LatticePath::parse("HX"), std::invalid_argument);
}

TEST_CASE("Delannoy paths") {
  const auto l11 = delannoy_paths(1, 1);
  REQUIRE(l11.size() == 3);
  CHECK(l11[0].to_string() == "D");
  CHECK(l11[1].to_string() == "HV");
  CHECK(l11[2].to_string() == "VH");
  long with_one = 0;
  for (const auto &p : delannoy_paths(2, 2))
    with_one += p.diagonals() == 1;
  CHECK(with_one == multinomial({1, 1, 1}).to_long());
  for (int p = 0; p <= 5; ++p)
    for (int q = 0; q <= 5; ++q) {
      const auto paths = delannoy_paths(p, q);
      std::map<int, long> census;
      for (const auto &path : paths) {
        CHECK(path.p() == p);
        CHECK(path.q() == q);
        ++census[path.diagonals()];
      }
      CHECK(census == oracle::delannoy_census(p, q));
      // |L(p,q) with d diagonals| = (p+q-d)! / ((p-d)!(q-d)!d!)
      for (const auto &[d, count] : census)
        CHECK(BigInt(count) == multinomial({p - d, q - d, d}));
      for (std::size_t i = 1; i < paths.size(); ++i)
        CHECK(paths[i - 1].to_string() < paths[i].to_string());
    }
}

TEST_CASE("ribbon cuts") {
  const auto c2 = ribbon_cuts({2});
  REQUIRE(c2.size() == 3);
  CHECK(c2[0].left == Composition());
  CHECK(c2[0].right == Composition({2}));
  CHECK(c2[1].left == Composition({1}));
  CHECK(c2[1].right == Composition({1}));
  CHECK(c2[2].left == Composition({2}));
  CHECK(c2[2].right == Composition());
  const auto c11 = ribbon_cuts({1, 1});
  REQUIRE(c11.size() == 3);
  CHECK(c11[1].left == Composition({1}));
  CHECK(c11[1].right == Composition({1}));
  for (int n = 0; n <= 8; ++n)
    for (const auto &a : all_compositions(n)) {
      const auto cuts = ribbon_cuts(a);
      REQUIRE(cuts.size() == static_cast<std::size_t>(n + 1));
      for (const auto &c : cuts) {
        CHECK(c.left.weight() == c.index);
        CHECK(c.left.weight() + c.right.weight() == n);
        // The two halves glue back either side by side or stacked.
        if (!c.left.empty() && !c.right.empty()) {
          std::vector<int> merged = c.left.parts();
          merged.back() += c.right.first();
          merged.insert(merged.end(), c.right.parts().begin() + 1, c.right.parts().end());
          CHECK((concat(c.left, c.right) == a || Composition(merged) == a));
        }
      }
    }
}

TEST_CASE("hash and ordering") {
  std::hash<Composition> h;
  CHECK(h(Composition({1, 2})) == h(Composition({1, 2})));
  CHECK(Composition({3}) < Composition({1, 1, 2}));
  CHECK(Composition({1, 2}) < Composition({2, 1}));
}
