#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsymx/composition.hpp"
#include "qsymx/exactnum.hpp"
#include "qsymx/permutation.hpp"
#include "qsymx/qsym.hpp"

namespace qsymx {

enum class CharKind { Zeta, ZetaMinus, ZetaPlus, ZetaInv, ZetaInvMinus, ZetaInvPlus, Counit, ZetaPower };

// One of the canonical characters of QSym, evaluated from closed formulas.
struct ClosedFormCharacter {
  CharKind kind = CharKind::Zeta;
  long power = 1; // only meaningful for ZetaPower

  static ClosedFormCharacter zeta_power(long m) { return {CharKind::ZetaPower, m}; }
  // "zeta", "zeta-plus", "zeta-minus", "zeta-inv", "zeta-inv-plus",
  // "zeta-inv-minus", "counit", "zeta-pow:<m>"; throws std::invalid_argument.
  static ClosedFormCharacter parse(std::string_view id);
  std::string id() const;

  friend bool operator==(const ClosedFormCharacter &, const ClosedFormCharacter &) = default;
};

// The ids accepted by ClosedFormCharacter::parse, except zeta-pow.
const std::vector<ClosedFormCharacter> &named_characters();

Rational eval_M(const ClosedFormCharacter &c, const Composition &alpha);
Rational eval_F(const ClosedFormCharacter &c, const Composition &alpha);
Rational eval(const ClosedFormCharacter &c, Basis b, const Composition &alpha);
Rational eval_element(const ClosedFormCharacter &c, const QSymElement &x);
// Only Zeta, ZetaMinus and ZetaPlus; others throw std::invalid_argument.
Rational eval_perm(const ClosedFormCharacter &c, const Permutation &sigma);

// A linear functional on QSym of degree <= N, stored by its M-basis values.
// Degree n occupies a dense table indexed by Composition::mask().
class TruncatedCharacter {
public:
  // The counit: 1 on (), 0 elsewhere.
  explicit TruncatedCharacter(int max_degree);

  static TruncatedCharacter tabulate(int max_degree, const std::function<Rational(const Composition &)> &f);

  int max_degree() const { return max_degree_; }
  const Rational &at(int n, std::uint32_t mask) const;
  Rational &at(int n, std::uint32_t mask);
  // Throws std::out_of_range above the truncation degree.
  const Rational &operator()(const Composition &alpha) const;
  const std::vector<Rational> &table(int n) const { return values_[static_cast<std::size_t>(n)]; }

  friend bool operator==(const TruncatedCharacter &, const TruncatedCharacter &) = default;

private:
  int max_degree_;
  std::vector<std::vector<Rational>> values_;
};

// Upper bound for truncation degrees; tables grow like 2^(N-1).
inline constexpr int kMaxTruncation = 20;

TruncatedCharacter restrict(const ClosedFormCharacter &c, int max_degree);
// (rho psi)(M_alpha) = sum_i rho(M_{alpha_i}) psi(M_{alpha^i}).
TruncatedCharacter convolve(const TruncatedCharacter &rho, const TruncatedCharacter &psi);
// Throws std::domain_error unless phi(()) == 1.
TruncatedCharacter inverse(const TruncatedCharacter &phi);
TruncatedCharacter bar(const TruncatedCharacter &phi);
// Even and odd factors with phi = phi_plus * phi_minus.
std::pair<TruncatedCharacter, TruncatedCharacter> decompose(const TruncatedCharacter &phi);
TruncatedCharacter compose_antipode(const TruncatedCharacter &phi);
TruncatedCharacter compose_T(const TruncatedCharacter &phi);
// Value of a truncated character on an element of either basis.
Rational evaluate(const TruncatedCharacter &phi, const QSymElement &x);

Rational h_minus(const Composition &alpha);
// Throws std::invalid_argument on odd weight.
Rational h_plus(const Composition &alpha);

} // namespace qsymx
