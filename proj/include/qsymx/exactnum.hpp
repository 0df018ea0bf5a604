#pragma once

#include <compare>
#include <concepts>
#include <initializer_list>
#include <type_traits>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qsymx {

// Arbitrary-precision signed integer. Thin value wrapper over GMP that keeps
// expression templates out of the public surface.
class BigInt {
public:
  BigInt() = default;
  template <std::integral T>
  BigInt(T v) : v_(from_integral(v)) {}
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}

  // Parses an optionally signed decimal integer; throws std::invalid_argument.
  static BigInt parse(std::string_view text);

  const mpz_class &raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const;
  std::string to_string() const { return v_.get_str(); }

  BigInt operator-() const { return BigInt(mpz_class(-v_)); }
  BigInt &operator+=(const BigInt &o) { v_ += o.v_; return *this; }
  BigInt &operator-=(const BigInt &o) { v_ -= o.v_; return *this; }
  BigInt &operator*=(const BigInt &o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt &b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt &b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt &b) { return a *= b; }

  friend bool operator==(const BigInt &a, const BigInt &b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt &a, const BigInt &b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  template <std::integral T> static mpz_class from_integral(T v) {
    if constexpr (std::is_signed_v<T>)
      return mpz_class(static_cast<long>(v));
    else
      return mpz_class(static_cast<unsigned long>(v));
  }
  mpz_class v_;
};

std::ostream &operator<<(std::ostream &os, const BigInt &x);

// Quotient of an exact division; throws std::logic_error when d does not divide n.
BigInt exact_div(const BigInt &n, const BigInt &d);
BigInt pow(const BigInt &base, unsigned long exp);

// Exact fraction, always in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : v_(BigInt(v).raw()) {}
  Rational(const BigInt &v) : v_(v.raw()) {}
  // Throws std::domain_error on a zero denominator.
  Rational(const BigInt &num, const BigInt &den);

  // Accepts "p" or "p/q" with optional sign; throws std::invalid_argument.
  static Rational parse(std::string_view text);

  BigInt num() const { return BigInt(mpz_class(v_.get_num())); }
  BigInt den() const { return BigInt(mpz_class(v_.get_den())); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  // "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
  Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
  Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
  // Throws std::domain_error on division by zero.
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream &operator<<(std::ostream &os, const Rational &x);

// (-1)^e for any integer e.
inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }
// 2^e as a Rational; negative exponents give 1/2^|e|.
Rational pow2(long e);

BigInt factorial(long n);

// Binomial coefficient for n >= 0; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

// m(m-1)...(m-k+1)/k! for any integer m and k >= 0; zero for k < 0.
BigInt generalized_binomial(long m, long k);

// (sum parts)! / prod(parts!).
BigInt multinomial(std::span<const long> parts);
BigInt multinomial(std::initializer_list<long> parts);

// C(m,n) = (2m)!(2n)! / (m!(m+n)!n!), by the factorial formula. Throws
// std::logic_error if the division leaves a remainder.
BigInt bivariate_catalan(long m, long n);

// binom(2m, m), read off as C(0, m).
BigInt central_binomial(long m);
// C(1, m)/2, the m-th Catalan number.
BigInt catalan(long m);

// Half of C(2h+1,h+1), C(2h,h+1), C(2h,h), C(2h+1,h) for family 1..4.
Rational central_catalan(int family, long h);

// binom(m - 1/2, k) through the falling product.
Rational half_binomial(long m, long k);

// Largest e with 2^e | x; throws std::domain_error for x = 0.
unsigned long two_adic_valuation(const BigInt &x);
unsigned binary_digit_sum(unsigned long m);

} // namespace qsymx
