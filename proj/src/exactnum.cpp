#include "qsymx/exactnum.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace qsymx {

namespace {

bool valid_integer_text(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+'))
    ++i;
  if (i == text.size())
    return false;
  for (; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      return false;
  return true;
}

} // namespace

BigInt BigInt::parse(std::string_view text) {
  if (!valid_integer_text(text))
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  if (text.front() == '+')
    text.remove_prefix(1);
  return BigInt(mpz_class(std::string(text), 10));
}

long BigInt::to_long() const {
  if (!fits_long())
    throw std::overflow_error("integer does not fit in a long: " + to_string());
  return v_.get_si();
}

std::ostream &operator<<(std::ostream &os, const BigInt &x) { return os << x.to_string(); }

BigInt exact_div(const BigInt &n, const BigInt &d) {
  if (d.is_zero())
    throw std::domain_error("division by zero");
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.raw().get_mpz_t(), d.raw().get_mpz_t());
  if (sgn(r) != 0)
    throw std::logic_error("inexact division: " + n.to_string() + " / " + d.to_string());
  return BigInt(std::move(q));
}

BigInt pow(const BigInt &base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exp);
  return BigInt(std::move(r));
}

Rational::Rational(const BigInt &num, const BigInt &den) {
  if (den.is_zero())
    throw std::domain_error("zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(BigInt::parse(text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw std::invalid_argument("sign not allowed in denominator: '" + std::string(text) + "'");
  return Rational(BigInt::parse(text.substr(0, slash)), BigInt::parse(den_text));
}

std::string Rational::to_string() const {
  if (is_integer())
    return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &x) { return os << x.to_string(); }

Rational pow2(long e) {
  const BigInt p = pow(BigInt(2), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

BigInt factorial(long n) {
  if (n < 0)
    throw std::domain_error("factorial of a negative number");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return BigInt(std::move(r));
}

BigInt binomial(long n, long k) {
  if (n < 0)
    throw std::domain_error("binomial: negative upper index");
  if (k < 0 || k > n)
    return BigInt(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigInt(std::move(r));
}

BigInt generalized_binomial(long m, long k) {
  if (k < 0)
    return BigInt(0);
  BigInt falling(1);
  for (long j = 0; j < k; ++j)
    falling *= BigInt(m - j);
  return exact_div(falling, factorial(k));
}

BigInt multinomial(std::span<const long> parts) {
  long total = 0;
  BigInt den(1);
  for (long p : parts) {
    if (p < 0)
      throw std::domain_error("multinomial: negative part");
    total += p;
    den *= factorial(p);
  }
  return exact_div(factorial(total), den);
}

BigInt multinomial(std::initializer_list<long> parts) {
  return multinomial(std::span<const long>(parts.begin(), parts.size()));
}

BigInt bivariate_catalan(long m, long n) {
  if (m < 0 || n < 0)
    throw std::domain_error("bivariate_catalan: negative argument");
  const BigInt num = factorial(2 * m) * factorial(2 * n);
  const BigInt den = factorial(m) * factorial(m + n) * factorial(n);
  return exact_div(num, den);
}

BigInt central_binomial(long m) { return bivariate_catalan(0, m); }

BigInt catalan(long m) { return exact_div(bivariate_catalan(1, m), BigInt(2)); }

Rational central_catalan(int family, long h) {
  if (h < 0)
    throw std::domain_error("central_catalan: negative index");
  BigInt c;
  switch (family) {
  case 1: c = bivariate_catalan(2 * h + 1, h + 1); break;
  case 2: c = bivariate_catalan(2 * h, h + 1); break;
  case 3: c = bivariate_catalan(2 * h, h); break;
  case 4: c = bivariate_catalan(2 * h + 1, h); break;
  default: throw std::invalid_argument("central_catalan: family must be 1..4");
  }
  return Rational(c, BigInt(2));
}

Rational half_binomial(long m, long k) {
  if (k < 0)
    throw std::domain_error("half_binomial: negative k");
  // prod_{j<k} (m - 1/2 - j) = prod_{j<k} (2m - 1 - 2j) / 2^k
  BigInt num(1);
  for (long j = 0; j < k; ++j)
    num *= BigInt(2 * m - 1 - 2 * j);
  return Rational(num, pow(BigInt(2), static_cast<unsigned long>(k)) * factorial(k));
}

unsigned long two_adic_valuation(const BigInt &x) {
  if (x.is_zero())
    throw std::domain_error("two_adic_valuation of zero");
  return mpz_scan1(x.raw().get_mpz_t(), 0);
}

unsigned binary_digit_sum(unsigned long m) { return static_cast<unsigned>(__builtin_popcountl(m)); }

} // namespace qsymx
