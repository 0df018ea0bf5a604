#include "qsymx/characters.hpp"

#include <charconv>
#include <stdexcept>

namespace qsymx {

ClosedFormCharacter ClosedFormCharacter::parse(std::string_view id) {
  if (id == "zeta")
    return {CharKind::Zeta};
  if (id == "zeta-plus")
    return {CharKind::ZetaPlus};
  if (id == "zeta-minus")
    return {CharKind::ZetaMinus};
  if (id == "zeta-inv")
    return {CharKind::ZetaInv};
  if (id == "zeta-inv-plus")
    return {CharKind::ZetaInvPlus};
  if (id == "zeta-inv-minus")
    return {CharKind::ZetaInvMinus};
  if (id == "counit")
    return {CharKind::Counit};
  constexpr std::string_view pow_prefix = "zeta-pow:";
  if (id.substr(0, pow_prefix.size()) == pow_prefix) {
    const auto digits = id.substr(pow_prefix.size());
    long m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
      throw std::invalid_argument("zeta-pow needs an integer exponent, got '" + std::string(digits) + "'");
    return zeta_power(m);
  }
  throw std::invalid_argument("unknown character id '" + std::string(id) + "'");
}

std::string ClosedFormCharacter::id() const {
  switch (kind) {
  case CharKind::Zeta: return "zeta";
  case CharKind::ZetaPlus: return "zeta-plus";
  case CharKind::ZetaMinus: return "zeta-minus";
  case CharKind::ZetaInv: return "zeta-inv";
  case CharKind::ZetaInvPlus: return "zeta-inv-plus";
  case CharKind::ZetaInvMinus: return "zeta-inv-minus";
  case CharKind::Counit: return "counit";
  case CharKind::ZetaPower: return "zeta-pow:" + std::to_string(power);
  }
  return "?";
}

const std::vector<ClosedFormCharacter> &named_characters() {
  static const std::vector<ClosedFormCharacter> all = {
      {CharKind::Zeta},         {CharKind::ZetaPlus},     {CharKind::ZetaMinus}, {CharKind::ZetaInv},
      {CharKind::ZetaInvPlus},  {CharKind::ZetaInvMinus}, {CharKind::Counit},
  };
  return all;
}

namespace {

bool is_single_part(const Composition &alpha) { return alpha.length() == 1; }

bool all_ones(const Composition &alpha) { return alpha.length() == alpha.weight(); }

// (-1)^p / 4^h * C(p, h - p)
Rational minus_form(int p, int h) {
  return Rational(sign_power(p)) * pow2(-2L * h) * Rational(bivariate_catalan(p, h - p));
}

// (-1)^p / 2^n * C(p, n/2 - p), n even
Rational plus_form(int p, int n) {
  return Rational(sign_power(p)) * pow2(-static_cast<long>(n)) * Rational(bivariate_catalan(p, n / 2 - p));
}

} // namespace

Rational eval_M(const ClosedFormCharacter &c, const Composition &alpha) {
  if (alpha.empty())
    return Rational(1);
  const auto s = stats(alpha);
  const int n = s.weight;
  switch (c.kind) {
  case CharKind::Counit:
    return Rational(0);
  case CharKind::Zeta:
    return Rational(is_single_part(alpha) ? 1 : 0);
  case CharKind::ZetaInv:
    return Rational(sign_power(s.k));
  case CharKind::ZetaPower:
    return Rational(generalized_binomial(c.power, s.k));
  case CharKind::ZetaMinus: {
    if (alpha.last() % 2 == 0)
      return Rational(0);
    const int h = s.k_odd / 2;
    return Rational(sign_power(s.k_even)) * pow2(-2L * h) * Rational(central_binomial(h));
  }
  case CharKind::ZetaPlus: {
    if (is_single_part(alpha))
      return Rational(n % 2 == 0 ? 1 : 0);
    if (n % 2 != 0 || alpha.first() % 2 == 0 || alpha.last() % 2 == 0)
      return Rational(0);
    return Rational(sign_power(s.k_even + 1)) * pow2(-static_cast<long>(s.k_odd)) *
           Rational(bivariate_catalan(1, s.k_odd / 2 - 1));
  }
  case CharKind::ZetaInvMinus: {
    if (alpha.first() % 2 == 0)
      return Rational(0);
    const int h = s.k_odd / 2;
    return Rational(sign_power(s.k)) * pow2(-2L * h) * Rational(central_binomial(h));
  }
  case CharKind::ZetaInvPlus: {
    if (n % 2 != 0)
      return Rational(0);
    return Rational(sign_power(s.k)) * pow2(-static_cast<long>(s.k_odd)) * Rational(central_binomial(s.k_odd / 2));
  }
  }
  throw std::logic_error("eval_M: unhandled character");
}

Rational eval_F(const ClosedFormCharacter &c, const Composition &alpha) {
  if (alpha.empty())
    return Rational(1);
  const int n = alpha.weight();
  switch (c.kind) {
  case CharKind::Counit:
    return Rational(0);
  case CharKind::Zeta:
    return Rational(is_single_part(alpha) ? 1 : 0);
  case CharKind::ZetaInv:
    return Rational(all_ones(alpha) ? sign_power(n) : 0);
  case CharKind::ZetaPower:
    return Rational(generalized_binomial(c.power + n - alpha.length(), n));
  case CharKind::ZetaMinus:
    return minus_form(p_minus(alpha), n / 2);
  case CharKind::ZetaPlus:
    if (n % 2 != 0)
      return Rational(0);
    return plus_form(p_plus(alpha), n);
  case CharKind::ZetaInvMinus:
    return Rational(sign_power(n)) * minus_form(p_minus(reversal(alpha)), n / 2);
  case CharKind::ZetaInvPlus:
    if (n % 2 != 0)
      return Rational(0);
    return plus_form(p_plus(conjugate(alpha)), n);
  }
  throw std::logic_error("eval_F: unhandled character");
}

Rational eval(const ClosedFormCharacter &c, Basis b, const Composition &alpha) {
  return b == Basis::M ? eval_M(c, alpha) : eval_F(c, alpha);
}

Rational eval_element(const ClosedFormCharacter &c, const QSymElement &x) {
  Rational total;
  for (const auto &[alpha, coeff] : x.terms())
    total += coeff * eval(c, x.basis(), alpha);
  return total;
}

Rational eval_perm(const ClosedFormCharacter &c, const Permutation &sigma) {
  const int n = sigma.size();
  switch (c.kind) {
  case CharKind::Zeta:
    return Rational(descent_set(sigma).empty() ? 1 : 0);
  case CharKind::ZetaMinus:
    return minus_form(interior_peaks(sigma), n / 2);
  case CharKind::ZetaPlus:
    if (n % 2 != 0)
      return Rational(0);
    return plus_form(augmented_peaks(sigma), n);
  default:
    throw std::invalid_argument("eval_perm supports zeta, zeta-plus and zeta-minus only, got " + c.id());
  }
}

TruncatedCharacter::TruncatedCharacter(int max_degree) : max_degree_(max_degree) {
  if (max_degree < 0 || max_degree > kMaxTruncation)
    throw std::invalid_argument("truncation degree must be in [0, " + std::to_string(kMaxTruncation) + "]");
  values_.resize(static_cast<std::size_t>(max_degree) + 1);
  values_[0].assign(1, Rational(1));
  for (int n = 1; n <= max_degree; ++n)
    values_[static_cast<std::size_t>(n)].assign(std::size_t{1} << (n - 1), Rational(0));
}

TruncatedCharacter TruncatedCharacter::tabulate(int max_degree,
                                                const std::function<Rational(const Composition &)> &f) {
  TruncatedCharacter out(max_degree);
  for (int n = 0; n <= max_degree; ++n) {
    const auto comps = all_compositions(n);
    for (const auto &alpha : comps)
      out.at(n, alpha.mask()) = f(alpha);
  }
  return out;
}

const Rational &TruncatedCharacter::at(int n, std::uint32_t mask) const {
  return values_.at(static_cast<std::size_t>(n)).at(mask);
}

Rational &TruncatedCharacter::at(int n, std::uint32_t mask) {
  return values_.at(static_cast<std::size_t>(n)).at(mask);
}

const Rational &TruncatedCharacter::operator()(const Composition &alpha) const {
  if (alpha.weight() > max_degree_)
    throw std::out_of_range("composition " + alpha.to_string() + " is above the truncation degree " +
                            std::to_string(max_degree_));
  return at(alpha.weight(), alpha.mask());
}

TruncatedCharacter restrict(const ClosedFormCharacter &c, int max_degree) {
  return TruncatedCharacter::tabulate(max_degree, [&](const Composition &alpha) { return eval_M(c, alpha); });
}

namespace {

struct Piece {
  int n;
  std::uint32_t mask;
};

// Cut positions of the composition (n, mask): 0, each partial sum, n.
std::vector<int> cut_points(int n, std::uint32_t mask) {
  std::vector<int> cuts{0};
  for (int i = 1; i < n; ++i)
    if (mask & (std::uint32_t{1} << (i - 1)))
      cuts.push_back(i);
  if (n > 0)
    cuts.push_back(n);
  return cuts;
}

// The piece of (n, mask) between cut positions s <= t.
Piece slice(std::uint32_t mask, int s, int t) {
  const int w = t - s;
  if (w <= 1)
    return {w, 0};
  const std::uint32_t low = (mask >> s) & ((std::uint32_t{1} << (w - 1)) - 1);
  return {w, low};
}

void require_same_degree(const TruncatedCharacter &a, const TruncatedCharacter &b) {
  if (a.max_degree() != b.max_degree())
    throw std::invalid_argument("characters truncated at different degrees (" + std::to_string(a.max_degree()) +
                                " and " + std::to_string(b.max_degree()) + ")");
}

void require_unital(const TruncatedCharacter &phi) {
  if (phi.at(0, 0) != Rational(1))
    throw std::domain_error("character must take the value 1 on the unit");
}

std::uint32_t table_size(int n) { return n == 0 ? 1u : (std::uint32_t{1} << (n - 1)); }

} // namespace

TruncatedCharacter convolve(const TruncatedCharacter &rho, const TruncatedCharacter &psi) {
  require_same_degree(rho, psi);
  const int N = rho.max_degree();
  TruncatedCharacter out(N);
  for (int n = 0; n <= N; ++n)
    for (std::uint32_t m = 0; m < table_size(n); ++m) {
      Rational total;
      for (int s : cut_points(n, m)) {
        const Piece l = slice(m, 0, s), r = slice(m, s, n);
        total += rho.at(l.n, l.mask) * psi.at(r.n, r.mask);
      }
      out.at(n, m) = total;
    }
  return out;
}

TruncatedCharacter inverse(const TruncatedCharacter &phi) {
  require_unital(phi);
  const int N = phi.max_degree();
  TruncatedCharacter out(N);
  for (int n = 1; n <= N; ++n)
    for (std::uint32_t m = 0; m < table_size(n); ++m) {
      Rational total;
      for (int s : cut_points(n, m)) {
        if (s == 0)
          continue;
        const Piece l = slice(m, 0, s), r = slice(m, s, n);
        total += phi.at(l.n, l.mask) * out.at(r.n, r.mask);
      }
      out.at(n, m) = -total;
    }
  return out;
}

TruncatedCharacter bar(const TruncatedCharacter &phi) {
  TruncatedCharacter out = phi;
  for (int n = 1; n <= phi.max_degree(); n += 2)
    for (std::uint32_t m = 0; m < table_size(n); ++m)
      out.at(n, m) = -phi.at(n, m);
  return out;
}

std::pair<TruncatedCharacter, TruncatedCharacter> decompose(const TruncatedCharacter &phi) {
  require_unital(phi);
  const int N = phi.max_degree();
  const TruncatedCharacter inv = inverse(phi);
  TruncatedCharacter plus(N), minus(N);
  const Rational half = Rational(BigInt(1), BigInt(2));
  for (int n = 1; n <= N; ++n) {
    for (std::uint32_t m = 0; m < table_size(n); ++m) {
      const auto cuts = cut_points(n, m);
      Rational triple;
      for (std::size_t a = 0; a < cuts.size(); ++a)
        for (std::size_t b = a; b < cuts.size(); ++b) {
          const int s = cuts[a], t = cuts[b];
          if ((s == n) || (s == 0 && t == n) || (t == 0))
            continue;
          const Piece x = slice(m, 0, s), y = slice(m, s, t), z = slice(m, t, n);
          triple += plus.at(x.n, x.mask) * inv.at(y.n, y.mask) * plus.at(z.n, z.mask);
        }
      plus.at(n, m) = (Rational(sign_power(n)) * phi.at(n, m) - inv.at(n, m) - triple) * half;
    }
    for (std::uint32_t m = 0; m < table_size(n); ++m) {
      Rational total;
      for (int s : cut_points(n, m)) {
        if (s == 0)
          continue;
        const Piece l = slice(m, 0, s), r = slice(m, s, n);
        total += plus.at(l.n, l.mask) * minus.at(r.n, r.mask);
      }
      minus.at(n, m) = phi.at(n, m) - total;
    }
  }
  return {std::move(plus), std::move(minus)};
}

Rational evaluate(const TruncatedCharacter &phi, const QSymElement &x) {
  Rational total;
  const QSymElement m = to_M(x);
  for (const auto &[alpha, c] : m.terms())
    total += c * phi(alpha);
  return total;
}

TruncatedCharacter compose_antipode(const TruncatedCharacter &phi) {
  return TruncatedCharacter::tabulate(phi.max_degree(), [&](const Composition &alpha) {
    return evaluate(phi, antipode(QSymElement::basis_element(Basis::M, alpha)));
  });
}

TruncatedCharacter compose_T(const TruncatedCharacter &phi) {
  return TruncatedCharacter::tabulate(phi.max_degree(), [&](const Composition &alpha) {
    return evaluate(phi, t_involution(QSymElement::basis_element(Basis::M, alpha)));
  });
}

Rational h_minus(const Composition &alpha) {
  const int half_n = alpha.weight() / 2;
  BigInt total;
  for (const auto &beta : refinements(alpha)) {
    const int p = p_minus(beta);
    const BigInt term = bivariate_catalan(p, half_n - p);
    total += sign_power(beta.length() + p + 1) > 0 ? term : -term;
  }
  return Rational(total);
}

Rational h_plus(const Composition &alpha) {
  if (alpha.weight() % 2 != 0)
    throw std::invalid_argument("h_plus needs even weight, got " + std::to_string(alpha.weight()));
  const int half_n = alpha.weight() / 2;
  BigInt total;
  for (const auto &beta : refinements(alpha)) {
    const int p = p_plus(beta);
    const BigInt term = bivariate_catalan(p, half_n - p);
    total += sign_power(beta.length() + p + 1) > 0 ? term : -term;
  }
  return Rational(total);
}

} // namespace qsymx
