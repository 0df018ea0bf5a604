#include "qsymx/qsym.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qsymx {

char basis_letter(Basis b) { return b == Basis::M ? 'M' : 'F'; }

Basis parse_basis(std::string_view text) {
  if (text == "M" || text == "m")
    return Basis::M;
  if (text == "F" || text == "f")
    return Basis::F;
  throw std::invalid_argument("basis must be M or F, got '" + std::string(text) + "'");
}

namespace {

void require_same_basis(Basis a, Basis b) {
  if (a != b)
    throw std::invalid_argument("mixed-basis arithmetic: convert explicitly with to_M/to_F");
}

std::string render_term(char letter, const Composition &alpha) {
  std::string out(1, letter);
  out += '[';
  if (!alpha.empty())
    out += alpha.to_string();
  out += ']';
  return out;
}

// Appends " + c*X" / " - c*X", or "c*X" / "-c*X" for the first term.
void append_signed(std::string &out, const Rational &c, const std::string &body) {
  const bool negative = c.sign() < 0;
  const Rational magnitude = negative ? -c : c;
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (magnitude != Rational(1))
    out += magnitude.to_string() + "*";
  out += body;
}

} // namespace

QSymElement QSymElement::basis_element(Basis b, const Composition &alpha, const Rational &coeff) {
  QSymElement e(b);
  e.add(alpha, coeff);
  return e;
}

Rational QSymElement::coefficient(const Composition &alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QSymElement::add(const Composition &alpha, const Rational &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

QSymElement &QSymElement::operator+=(const QSymElement &o) {
  require_same_basis(basis_, o.basis_);
  for (const auto &[alpha, c] : o.terms_)
    add(alpha, c);
  return *this;
}

QSymElement &QSymElement::operator-=(const QSymElement &o) {
  require_same_basis(basis_, o.basis_);
  for (const auto &[alpha, c] : o.terms_)
    add(alpha, -c);
  return *this;
}

QSymElement &QSymElement::operator*=(const Rational &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[alpha, v] : terms_)
    v *= c;
  return *this;
}

std::string QSymElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto &[alpha, c] : terms_)
    append_signed(out, c, render_term(basis_letter(basis_), alpha));
  return out;
}

QSymElement QSymElement::parse(std::string_view text, Basis zero_basis) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s += ch;
  if (s.empty())
    throw std::invalid_argument("empty element text");
  if (s == "0")
    return QSymElement(zero_basis);

  std::size_t pos = 0;
  bool have_basis = false;
  QSymElement out(zero_basis);
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected '+' or '-' at offset " + std::to_string(pos));
    }
    Rational coeff(1);
    const auto star = s.find('*', pos);
    const auto bracket = s.find('[', pos);
    if (bracket == std::string::npos || bracket == pos)
      throw std::invalid_argument("expected M[..] or F[..] at offset " + std::to_string(pos));
    std::size_t letter_at = bracket - 1;
    if (star != std::string::npos && star < bracket) {
      coeff = Rational::parse(std::string_view(s).substr(pos, star - pos));
      if (star + 1 != letter_at)
        throw std::invalid_argument("malformed term near offset " + std::to_string(pos));
    } else if (letter_at != pos) {
      throw std::invalid_argument("malformed term near offset " + std::to_string(pos));
    }
    const Basis b = parse_basis(std::string_view(s).substr(letter_at, 1));
    if (!have_basis) {
      out = QSymElement(b);
      have_basis = true;
    } else {
      require_same_basis(out.basis(), b);
    }
    const auto close = s.find(']', bracket);
    if (close == std::string::npos)
      throw std::invalid_argument("unterminated '[' in element text");
    const Composition alpha = Composition::parse(std::string_view(s).substr(bracket + 1, close - bracket - 1));
    out.add(alpha, sign < 0 ? -coeff : coeff);
    pos = close + 1;
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const QSymElement &x) { return os << x.to_string(); }

std::vector<TensorTerm> TensorElement::terms() const {
  std::vector<TensorTerm> out;
  out.reserve(terms_.size());
  for (const auto &[key, c] : terms_)
    out.push_back({key.first, key.second, c});
  return out;
}

Rational TensorElement::coefficient(const Composition &left, const Composition &right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add(const Composition &left, const Composition &right, const Rational &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace({left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

TensorElement &TensorElement::operator+=(const TensorElement &o) {
  require_same_basis(basis_, o.basis_);
  for (const auto &[key, c] : o.terms_)
    add(key.first, key.second, c);
  return *this;
}

std::string TensorElement::to_string() const {
  if (terms_.empty())
    return "0";
  const char letter = basis_letter(basis_);
  std::string out;
  for (const auto &[key, c] : terms_)
    append_signed(out, c, render_term(letter, key.first) + " (x) " + render_term(letter, key.second));
  return out;
}

QSymElement to_F(const QSymElement &x) {
  if (x.basis() == Basis::F)
    return x;
  QSymElement out(Basis::F);
  for (const auto &[alpha, c] : x.terms()) {
    const int k = alpha.length();
    for (const auto &beta : refinements(alpha))
      out.add(beta, sign_power(beta.length() - k) * c);
  }
  return out;
}

QSymElement to_M(const QSymElement &x) {
  if (x.basis() == Basis::M)
    return x;
  QSymElement out(Basis::M);
  for (const auto &[alpha, c] : x.terms())
    for (const auto &beta : refinements(alpha))
      out.add(beta, c);
  return out;
}

QSymElement to_basis(const QSymElement &x, Basis b) { return b == Basis::M ? to_M(x) : to_F(x); }

namespace {

QSymElement multiply_M(const QSymElement &x, const QSymElement &y) {
  QSymElement out(Basis::M);
  for (const auto &[alpha, a] : x.terms())
    for (const auto &[beta, b] : y.terms()) {
      const Rational c = a * b;
      for (const auto &path : delannoy_paths(alpha.length(), beta.length()))
        out.add(quasi_shuffle(alpha, beta, path), c);
    }
  return out;
}

} // namespace

QSymElement multiply(const QSymElement &x, const QSymElement &y) {
  require_same_basis(x.basis(), y.basis());
  if (x.basis() == Basis::M)
    return multiply_M(x, y);
  return to_F(multiply_M(to_M(x), to_M(y)));
}

TensorElement coproduct(const QSymElement &x) {
  TensorElement out(x.basis());
  for (const auto &[alpha, c] : x.terms()) {
    if (x.basis() == Basis::M) {
      for (int i = 0; i <= alpha.length(); ++i) {
        auto [l, r] = deconcatenate(alpha, i);
        out.add(l, r, c);
      }
    } else {
      for (const auto &cut : ribbon_cuts(alpha))
        out.add(cut.left, cut.right, c);
    }
  }
  return out;
}

Rational counit(const QSymElement &x) { return x.coefficient(Composition()); }

QSymElement antipode(const QSymElement &x) {
  QSymElement out(x.basis());
  for (const auto &[alpha, c] : x.terms()) {
    if (x.basis() == Basis::M) {
      const Rational signed_c = sign_power(alpha.length()) * c;
      for (const auto &gamma : coarsenings(reversal(alpha)))
        out.add(gamma, signed_c);
    } else {
      out.add(conjugate(alpha), sign_power(alpha.weight()) * c);
    }
  }
  return out;
}

QSymElement t_involution(const QSymElement &x) {
  QSymElement out(x.basis());
  for (const auto &[alpha, c] : x.terms())
    out.add(reversal(alpha), c);
  return out;
}

QSymElement descent_map(const SSymElement &x) {
  QSymElement out(Basis::F);
  for (const auto &[sigma, c] : x.terms())
    out.add(descent_composition(sigma), c);
  return out;
}

TensorElement multiply(const TensorElement &x, const TensorElement &y) {
  require_same_basis(x.basis(), y.basis());
  const Basis b = x.basis();
  TensorElement out(b);
  for (const auto &s : x.terms())
    for (const auto &t : y.terms()) {
      const QSymElement l = multiply(QSymElement::basis_element(b, s.left), QSymElement::basis_element(b, t.left));
      const QSymElement r =
          multiply(QSymElement::basis_element(b, s.right), QSymElement::basis_element(b, t.right));
      const Rational c = s.coeff * t.coeff;
      for (const auto &[la, lc] : l.terms())
        for (const auto &[ra, rc] : r.terms())
          out.add(la, ra, c * lc * rc);
    }
  return out;
}

TensorElement swap_factors(const TensorElement &x) {
  TensorElement out(x.basis());
  for (const auto &t : x.terms())
    out.add(t.right, t.left, t.coeff);
  return out;
}

} // namespace qsymx
