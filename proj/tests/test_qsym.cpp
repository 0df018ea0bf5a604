#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "qsymx/qsym.hpp"

using namespace qsymx;

namespace {

QSymElement M(const Composition &a, const Rational &c = Rational(1)) { return QSymElement::basis_element(Basis::M, a, c); }
QSymElement F(const Composition &a, const Rational &c = Rational(1)) { return QSymElement::basis_element(Basis::F, a, c); }

std::vector<Composition> up_to(int n) {
  std::vector<Composition> out;
  for (int k = 0; k <= n; ++k)
    for (const auto &a : all_compositions(k))
      out.push_back(a);
  return out;
}

// Tensor in M (x) M read off from a polynomial in 2r variables: the first r
// stand for the left alphabet.
TensorElement split_alphabet(const oracle::Poly &p, int r) {
  TensorElement out(Basis::M);
  for (const auto &[mono, c] : p) {
    std::vector<int> l, rt;
    bool ok = true;
    for (int half = 0; half < 2 && ok; ++half) {
      auto &parts = half == 0 ? l : rt;
      bool zero = false;
      for (int i = 0; i < r; ++i) {
        const int e = mono[static_cast<std::size_t>(half * r + i)];
        if (e == 0)
          zero = true;
        else if (zero)
          ok = false;
        else
          parts.push_back(e);
      }
    }
    if (ok)
      out.add(Composition(l), Composition(rt), c);
  }
  return out;
}

TensorElement tensor_to_M(const TensorElement &t) {
  TensorElement out(Basis::M);
  for (const auto &term : t.terms()) {
    const auto l = to_M(QSymElement::basis_element(t.basis(), term.left));
    const auto r = to_M(QSymElement::basis_element(t.basis(), term.right));
    for (const auto &[a, ca] : l.terms())
      for (const auto &[b, cb] : r.terms())
        out.add(a, b, term.coeff * ca * cb);
  }
  return out;
}

} // namespace

TEST_CASE("element arithmetic") {
  auto x = M({2, 1}) + M({1, 1, 1}, Rational(BigInt(3), BigInt(2)));
  CHECK(x.coefficient({2, 1}) == Rational(1));
  CHECK(x.coefficient({3}) == Rational(0));
  x -= M({2, 1});
  CHECK(x.terms().size() == 1);
  CHECK((Rational(0) * x).is_zero());
  CHECK_THROWS_AS(M({1}) + F({1}), std::invalid_argument);
  CHECK_THROWS_AS(multiply(M({1}), F({1})), std::invalid_argument);
  CHECK(QSymElement(Basis::F).to_string() == "0");
  CHECK(QSymElement::one(Basis::M).to_string() == "M[]");
}

TEST_CASE("text round trip") {
  const auto x = M({2, 1}) - M({1, 1}, Rational(BigInt(3), BigInt(2))) + M(Composition());
  CHECK(QSymElement::parse(x.to_string()) == x);
  CHECK(QSymElement::parse("F[1,2] + -2/3*F[3]") == F({1, 2}) + F({3}, Rational(BigInt(-2), BigInt(3))));
  CHECK(QSymElement::parse("0", Basis::F) == QSymElement(Basis::F));
  CHECK_THROWS_AS(QSymElement::parse("M[1] + F[1]"), std::invalid_argument);
  CHECK_THROWS_AS(QSymElement::parse("M[0]"), std::invalid_argument);
  CHECK_THROWS_AS(QSymElement::parse("X[1]"), std::invalid_argument);
  for (const auto &a : up_to(4)) {
    const auto y = to_F(M(a, Rational(BigInt(-5), BigInt(7))));
    CHECK(QSymElement::parse(y.to_string()) == y);
  }
}

TEST_CASE("basis change examples") {
  CHECK(to_M(F({2})) == M({2}) + M({1, 1}));
  CHECK(to_F(M({2})) == F({2}) - F({1, 1}));
  CHECK(to_F(M({1})) == F({1}));
  CHECK(to_M(QSymElement::one(Basis::F)) == QSymElement::one(Basis::M));
}

TEST_CASE("basis change against polynomial expansion") {
  for (int n = 1; n <= 6; ++n)
    for (const auto &a : all_compositions(n)) {
      const auto poly = oracle::fundamental_qsym(a, n);
      CHECK(to_M(F(a)) == oracle::to_monomial_basis(poly, n));
      CHECK(to_M(to_F(M(a))) == M(a));
      CHECK(to_F(to_M(F(a))) == F(a));
    }
}

TEST_CASE("product examples") {
  CHECK(multiply(M({1}), M({1})) == M({1, 1}, Rational(2)) + M({2}));
  CHECK(multiply(QSymElement::one(Basis::M), M({2, 1})) == M({2, 1}));
  CHECK(multiply(F({1}), F({1})) == F({1, 1}) + F({2}));
  CHECK(multiply(F(Composition()), F({1, 2})) == F({1, 2}));
}

TEST_CASE("M product against polynomial multiplication") {
  const auto basis = up_to(4);
  for (const auto &a : basis)
    for (const auto &b : basis) {
      if (a.weight() + b.weight() > 5)
        continue;
      const int r = a.length() + b.length();
      const auto lhs = multiply(M(a), M(b));
      const auto rhs = oracle::to_monomial_basis(oracle::multiply(oracle::monomial_qsym(a, r), oracle::monomial_qsym(b, r)), r);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("F product against the descent map of shuffles") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto &u : all_permutations(n))
        for (const auto &v : all_permutations(m)) {
          const auto su = SSymElement::basis(Permutation(u));
          const auto sv = SSymElement::basis(Permutation(v));
          CHECK(descent_map(multiply_ssym(su, sv)) == multiply(descent_map(su), descent_map(sv)));
        }
}

TEST_CASE("coproduct examples") {
  const auto d = coproduct(M({2, 1}));
  TensorElement expect(Basis::M);
  expect.add(Composition(), {2, 1}, Rational(1));
  expect.add({2}, {1}, Rational(1));
  expect.add({2, 1}, Composition(), Rational(1));
  CHECK(d == expect);
  TensorElement ef(Basis::F);
  ef.add(Composition(), {2}, Rational(1));
  ef.add({1}, {1}, Rational(1));
  ef.add({2}, Composition(), Rational(1));
  CHECK(coproduct(F({2})) == ef);
  TensorElement one(Basis::M);
  one.add(Composition(), Composition(), Rational(1));
  CHECK(coproduct(QSymElement::one(Basis::M)) == one);
}

TEST_CASE("F coproduct against a split alphabet") {
  for (int n = 1; n <= 5; ++n)
    for (const auto &a : all_compositions(n)) {
      const auto poly = oracle::fundamental_qsym(a, 2 * n);
      CHECK(tensor_to_M(coproduct(F(a))) == split_alphabet(poly, n));
    }
}

TEST_CASE("counit") {
  CHECK(counit(M(Composition())) == Rational(1));
  CHECK(counit(M({3})) == Rational(0));
  CHECK(counit(F({1}) + F(Composition(), Rational(2))) == Rational(2));
}

TEST_CASE("antipode examples") {
  for (int n = 1; n <= 6; ++n)
    CHECK(antipode(M({n})) == M({n}, Rational(-1)));
  CHECK(antipode(F({1, 1})) == F({2}));
  CHECK(antipode(M({1, 1})) == M({1, 1}) + M({2}));
  CHECK(antipode(M(Composition())) == M(Composition()));
}

TEST_CASE("antipode agrees across bases") {
  for (const auto &a : up_to(6)) {
    CHECK(to_F(antipode(M(a))) == antipode(to_F(M(a))));
    CHECK(to_M(antipode(F(a))) == antipode(to_M(F(a))));
  }
}

TEST_CASE("involution T") {
  CHECK(t_involution(F({1, 2})) == F({2, 1}));
  CHECK(t_involution(multiply(M({1}), M({2}))) == multiply(t_involution(M({1})), t_involution(M({2}))));
  for (const auto &a : up_to(5)) {
    CHECK(t_involution(t_involution(M(a))) == M(a));
    CHECK(to_F(t_involution(M(a))) == t_involution(to_F(M(a))));
    CHECK(coproduct(t_involution(F(a))) == swap_factors([&] {
            TensorElement t(Basis::F);
            for (const auto &term : coproduct(F(a)).terms())
              t.add(reversal(term.left), reversal(term.right), term.coeff);
            return t;
          }()));
  }
}

TEST_CASE("descent map") {
  CHECK(descent_map(SSymElement::basis(Permutation::parse("312546"))) == F({1, 3, 2}));
  CHECK(descent_map(SSymElement::basis(Permutation())) == F(Composition()));
  CHECK(descent_map(SSymElement()).is_zero());
}

TEST_CASE("tensor helpers") {
  TensorElement a(Basis::M), b(Basis::M);
  a.add({1}, {2}, Rational(2));
  b.add({1}, Composition(), Rational(3));
  const auto ab = multiply(a, b);
  TensorElement expect(Basis::M);
  expect.add({1, 1}, {2}, Rational(12));
  expect.add({2}, {2}, Rational(6));
  CHECK(ab == expect);
  TensorElement s(Basis::M);
  s.add({2}, {1}, Rational(2));
  CHECK(swap_factors(a) == s);
  CHECK(a.to_string() == "2*M[1] (x) M[2]");
}
