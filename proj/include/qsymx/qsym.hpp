#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsymx/composition.hpp"
#include "qsymx/exactnum.hpp"
#include "qsymx/permutation.hpp"

namespace qsymx {

enum class Basis { M, F };

char basis_letter(Basis b);
// "M" or "F"; throws std::invalid_argument otherwise.
Basis parse_basis(std::string_view text);

// A finite linear combination of M_alpha or F_alpha. Elements in different
// bases never mix; combining them throws std::invalid_argument.
class QSymElement {
public:
  explicit QSymElement(Basis b = Basis::M) : basis_(b) {}
  static QSymElement basis_element(Basis b, const Composition &alpha, const Rational &coeff = Rational(1));
  static QSymElement one(Basis b) { return basis_element(b, Composition()); }

  Basis basis() const { return basis_; }
  const std::map<Composition, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Composition &alpha) const;

  void add(const Composition &alpha, const Rational &c);

  QSymElement &operator+=(const QSymElement &o);
  QSymElement &operator-=(const QSymElement &o);
  QSymElement &operator*=(const Rational &c);
  friend QSymElement operator+(QSymElement a, const QSymElement &b) { return a += b; }
  friend QSymElement operator-(QSymElement a, const QSymElement &b) { return a -= b; }
  friend QSymElement operator*(const Rational &c, QSymElement a) { return a *= c; }

  friend bool operator==(const QSymElement &, const QSymElement &) = default;

  // "M[2,1] + 3/2*M[1,1,1]"; "0" for the zero element, "M[]" for 1.
  std::string to_string() const;
  // Inverse of to_string. A "0" has no basis tag; `zero_basis` is used then.
  static QSymElement parse(std::string_view text, Basis zero_basis = Basis::M);

private:
  Basis basis_;
  std::map<Composition, Rational> terms_;
};

std::ostream &operator<<(std::ostream &os, const QSymElement &x);

struct TensorTerm {
  Composition left;
  Composition right;
  Rational coeff;
};

// Element of QSym (x) QSym in a single basis.
class TensorElement {
public:
  explicit TensorElement(Basis b = Basis::M) : basis_(b) {}

  Basis basis() const { return basis_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<TensorTerm> terms() const;
  Rational coefficient(const Composition &left, const Composition &right) const;

  void add(const Composition &left, const Composition &right, const Rational &c);
  TensorElement &operator+=(const TensorElement &o);

  friend bool operator==(const TensorElement &, const TensorElement &) = default;

  // "M[] (x) M[2,1] + M[2] (x) M[1] + ..."; "0" when zero.
  std::string to_string() const;

private:
  Basis basis_;
  std::map<std::pair<Composition, Composition>, Rational> terms_;
};

QSymElement to_F(const QSymElement &x);
QSymElement to_M(const QSymElement &x);
QSymElement to_basis(const QSymElement &x, Basis b);

QSymElement multiply(const QSymElement &x, const QSymElement &y);
TensorElement coproduct(const QSymElement &x);
Rational counit(const QSymElement &x);
QSymElement antipode(const QSymElement &x);
QSymElement t_involution(const QSymElement &x);
QSymElement descent_map(const SSymElement &x);

// (a (x) b)(c (x) d) = ac (x) bd.
TensorElement multiply(const TensorElement &x, const TensorElement &y);
// a (x) b -> b (x) a.
TensorElement swap_factors(const TensorElement &x);

} // namespace qsymx
