#include "qsymx/identities.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qsymx/characters.hpp"
#include "qsymx/composition.hpp"
#include "qsymx/permutation.hpp"
#include "qsymx/qsym.hpp"

namespace qsymx::identities {

Depth parse_depth(std::string_view text) {
  if (text == "small")
    return Depth::Small;
  if (text == "standard")
    return Depth::Standard;
  if (text == "deep")
    return Depth::Deep;
  throw std::invalid_argument("depth must be small, standard or deep, got '" + std::string(text) + "'");
}

std::string to_string(Depth d) {
  switch (d) {
  case Depth::Small: return "small";
  case Depth::Standard: return "standard";
  case Depth::Deep: return "deep";
  }
  return "?";
}

int scaled(int bound, Depth d) {
  switch (d) {
  case Depth::Small: return bound / 2;
  case Depth::Standard: return bound;
  case Depth::Deep: return bound + bound / 4;
  }
  return bound;
}

Rational Context::central(int family, long h) const {
  switch (family) {
  case 1: return Rational(C(2 * h + 1, h + 1), BigInt(2));
  case 2: return Rational(C(2 * h, h + 1), BigInt(2));
  case 3: return Rational(C(2 * h, h), BigInt(2));
  case 4: return Rational(C(2 * h + 1, h), BigInt(2));
  }
  throw std::invalid_argument("central Catalan family must be 1..4");
}

std::string Counterexample::describe() const {
  std::string out;
  for (const auto &[k, v] : params) {
    if (!out.empty())
      out += ", ";
    out += k + "=" + v;
  }
  return out + ": lhs=" + lhs.to_string() + ", rhs=" + rhs.to_string();
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::pair<std::string, std::string> kv(std::string name, long v) { return {std::move(name), std::to_string(v)}; }
std::pair<std::string, std::string> kv(std::string name, const Composition &c) {
  return {std::move(name), c.to_string()};
}
std::pair<std::string, std::string> kv(std::string name, std::string v) { return {std::move(name), std::move(v)}; }

class Recorder {
public:
  explicit Recorder(CheckReport &report) : report_(report) {}

  void domain(std::string text) {
    if (!report_.domain.empty())
      report_.domain += "; ";
    report_.domain += text;
  }

  template <class MakeParams> void check(const Rational &lhs, const Rational &rhs, MakeParams &&make) {
    ++report_.cases_run;
    if (lhs == rhs || report_.counterexample)
      return;
    report_.passed = false;
    report_.counterexample = Counterexample{make(), lhs, rhs};
  }

private:
  CheckReport &report_;
};

Rational quarter_power(long e) { return pow2(-2 * e); }
Rational sgn(long e) { return Rational(sign_power(e)); }

// ---- Central binomials and Catalan numbers -------------------------------

void classical_conv(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(30, depth);
  rec.domain("1 <= m <= " + std::to_string(top));
  for (long m = 1; m <= top; ++m) {
    Rational rhs;
    for (long i = 1; i <= m; ++i)
      rhs += 2 * ctx.cat(i - 1) * Rational(ctx.B(m - i));
    rec.check(Rational(ctx.B(m)), rhs, [&] { return Params{kv("m", m)}; });
  }
}

void classical_conv2(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(30, depth);
  rec.domain("0 <= m <= " + std::to_string(top));
  for (long m = 0; m <= top; ++m) {
    BigInt rhs;
    for (long i = 0; i <= m; ++i)
      rhs += ctx.B(i) * ctx.B(m - i);
    rec.check(pow2(2 * m), Rational(rhs), [&] { return Params{kv("m", m)}; });
  }
}

void central_prod(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(12, depth);
  rec.domain("0 <= n,m <= " + std::to_string(top) + ", not both 0");
  for (long n = 0; n <= top; ++n)
    for (long m = 0; m <= top; ++m) {
      if (n == 0 && m == 0)
        continue;
      Rational lhs;
      for (long d = 0; d <= std::min(n, m); ++d) {
        const long h = (n + m - 2 * d) / 2;
        lhs += sgn(d) * quarter_power(h) * Rational(BigInt(n + m - 2 * d), BigInt(n + m - d)) *
               Rational(multinomial({n - d, m - d, d})) * Rational(ctx.B(h));
      }
      const Rational rhs = quarter_power(n / 2 + m / 2) * Rational(ctx.B(n / 2) * ctx.B(m / 2));
      rec.check(lhs, rhs, [&] { return Params{kv("case", "general"), kv("n", n), kv("m", m)}; });
    }

  rec.domain("m = 1 <= n <= " + std::to_string(top));
  for (long n = 1; n <= top; ++n) {
    const long a = (n + 1) / 2, b = (n - 1) / 2;
    const Rational lhs = Rational(n + 1) * quarter_power(a) * Rational(ctx.B(a)) -
                         Rational(n - 1) * quarter_power(b) * Rational(ctx.B(b));
    const Rational rhs = quarter_power(n / 2) * Rational(ctx.B(n / 2));
    rec.check(lhs, rhs, [&] { return Params{kv("case", "m=1"), kv("n", n)}; });
  }

  rec.domain("1 <= n = m <= " + std::to_string(top));
  for (long n = 1; n <= top; ++n) {
    Rational lhs;
    for (long d = 0; d <= n - 1; ++d) {
      const BigInt b = ctx.B(n - d);
      lhs += sgn(d) * quarter_power(n - d) * Rational(binomial(2 * n - d - 1, d) * b * b);
    }
    const BigInt half = ctx.B(n / 2);
    const Rational rhs = quarter_power(2 * (n / 2)) * Rational(half * half);
    rec.check(lhs, rhs, [&] { return Params{kv("case", "n=m"), kv("n", n)}; });
  }
}

void catalan_prod(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(12, depth);
  rec.domain("1 <= n,m <= " + std::to_string(top) + ", n = m mod 2, not both 1");
  for (long n = 1; n <= top; ++n)
    for (long m = 1; m <= top; ++m) {
      if ((n - m) % 2 != 0 || (n == 1 && m == 1))
        continue;
      Rational lhs;
      for (long d = 0; d <= std::min(n, m); ++d) {
        if (n + m - 2 * d == 0)
          continue; // the factor n+m-2d vanishes
        lhs += sgn(d + 1) * pow2(2 * d - 1) * Rational(BigInt(n + m - 2 * d), BigInt(n + m - d)) *
               Rational(BigInt(n + m - 2 * d - 1), BigInt(n + m - d - 1)) *
               Rational(multinomial({n - d, m - d, d})) * ctx.cat((n + m) / 2 - d - 1);
      }
      const Rational rhs = n % 2 == 0 ? ctx.cat(n / 2 - 1) * ctx.cat(m / 2 - 1) : Rational(0);
      rec.check(lhs, rhs, [&] { return Params{kv("case", "general"), kv("n", n), kv("m", m)}; });
    }

  rec.domain("m = 1, n = 2k+1 <= " + std::to_string(top));
  for (long k = 1; 2 * k + 1 <= top; ++k) {
    const Rational rhs = Rational(BigInt(2 * (2 * k - 1)), BigInt(k + 1)) * ctx.cat(k - 1);
    rec.check(ctx.cat(k), rhs, [&] { return Params{kv("case", "m=1"), kv("n", 2 * k + 1)}; });
  }

  rec.domain("2 <= n = m <= " + std::to_string(top));
  for (long n = 2; n <= top; ++n) {
    Rational lhs;
    for (long d = 0; d <= n - 1; ++d) {
      const Rational c = ctx.cat(n - d - 1);
      lhs += sgn(d + 1) * pow2(2 * d) * Rational(2 * n - 2 * d - 1) * Rational(binomial(2 * n - d - 2, d)) * c * c;
    }
    const Rational rhs = n % 2 == 0 ? ctx.cat(n / 2 - 1) * ctx.cat(n / 2 - 1) : Rational(0);
    rec.check(lhs, rhs, [&] { return Params{kv("case", "n=m"), kv("n", n)}; });
  }
}

// (-1)^{k_e} / 4^{floor(k_o/2)} binom(2 floor(k_o/2), floor(k_o/2))
Rational odd_part_weight(const Context &ctx, const CompositionStats &s) {
  const long h = s.k_odd / 2;
  return sgn(s.k_even) * quarter_power(h) * Rational(ctx.B(h));
}

void antipode_sum(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  rec.domain("all beta of 1 <= n <= " + std::to_string(top));
  for (int n = 1; n <= top; ++n)
    for (const auto &beta : all_compositions(n)) {
      Rational lhs;
      for (const auto &alpha : coarsenings(beta))
        if (alpha.first() % 2 == 1)
          lhs += odd_part_weight(ctx, stats(alpha));
      const auto sb = stats(beta);
      const Rational rhs =
          beta.last() % 2 == 1 ? quarter_power(sb.k_odd / 2) * Rational(ctx.B(sb.k_odd / 2)) : Rational(0);
      rec.check(lhs, rhs, [&] { return Params{kv("beta", beta)}; });
    }
}

void app_antipodeM(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  rec.domain("beta of 1 <= n <= " + std::to_string(top) + " with k_e even and b_1 = b_k mod 2");
  for (int n = 1; n <= top; ++n)
    for (const auto &beta : all_compositions(n)) {
      const auto sb = stats(beta);
      if (sb.k_even % 2 != 0 || (beta.first() - beta.last()) % 2 != 0)
        continue;
      Rational lhs;
      for (const auto &alpha : coarsenings(beta))
        if (alpha != beta && alpha.first() % 2 == 1)
          lhs += odd_part_weight(ctx, stats(alpha));
      rec.check(lhs, Rational(0), [&] { return Params{kv("beta", beta)}; });
    }
}

void tn_vandermonde(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(14, depth);
  rec.domain("T_n sum for 1 <= n <= " + std::to_string(top));
  for (long n = 1; n <= top; ++n) {
    Rational lhs;
    for (long r = 1; r < n; ++r) {
      if ((r - n) % 2 != 0)
        continue;
      for (long s = 0; r + 2 * s <= n; ++s)
        lhs += sgn(s) * quarter_power(r / 2) *
               Rational(binomial((n + r) / 2 - 1, r + s - 1) * binomial(r + s - 1, r - 1) * ctx.B(r / 2));
    }
    rec.check(lhs, Rational(0), [&] { return Params{kv("case", "T_n"), kv("n", n)}; });
  }

  rec.domain("inner Vandermonde sums for 0 < r < n <= " + std::to_string(top));
  for (long n = 2; n <= top; ++n)
    for (long r = 1; r < n; ++r) {
      if ((r - n) % 2 != 0)
        continue;
      BigInt lhs;
      for (long s = 0; s <= (n - r) / 2; ++s) {
        const BigInt t = binomial((n + r) / 2 - 1, r + s - 1) * binomial(r + s - 1, r - 1);
        lhs += s % 2 == 0 ? t : -t;
      }
      rec.check(Rational(lhs), Rational(0), [&] { return Params{kv("case", "inner"), kv("n", n), kv("r", r)}; });
    }

  const int count_top = scaled(12, depth);
  rec.domain("composition counts for 1 <= n <= " + std::to_string(count_top));
  for (int n = 1; n <= count_top; ++n) {
    std::map<std::pair<long, long>, long> tally;
    for (const auto &alpha : all_compositions(n)) {
      if (alpha.first() % 2 == 0)
        continue;
      const auto s = stats(alpha);
      ++tally[{s.k_odd, s.k_even}];
    }
    for (long r = 1; r <= n; ++r) {
      if ((r - n) % 2 != 0)
        continue;
      for (long s = 0; r + 2 * s <= n; ++s) {
        const auto it = tally.find({r, s});
        const long brute = it == tally.end() ? 0 : it->second;
        const BigInt formula = binomial((n + r) / 2 - 1, r + s - 1) * binomial(r + s - 1, r - 1);
        rec.check(Rational(brute), Rational(formula),
                  [&] { return Params{kv("case", "count"), kv("n", n), kv("r", r), kv("s", s)}; });
      }
    }
  }
}

// ---- Sign sums and bivariate Catalan convolutions ------------------------

template <class Stat> void signs_common(Depth depth, Recorder &rec, int first_m, bool odd_only, Stat stat) {
  const int top = scaled(14, depth);
  rec.domain(std::to_string(first_m) + " <= m <= " + std::to_string(top) + ", 0 <= j <= m");
  for (int m = first_m; m <= top; ++m) {
    std::map<int, long> tally;
    for (const auto &gamma : all_compositions(m))
      tally[stat(stats(gamma))] += sign_power(gamma.length());
    for (int j = 0; j <= m; ++j) {
      const long lhs = tally.count(j) ? tally[j] : 0;
      Rational rhs = sgn(m + j) * Rational(binomial(m / 2, j));
      if (odd_only && m % 2 == 0)
        rhs = Rational(0);
      rec.check(Rational(lhs), rhs, [&] { return Params{kv("m", m), kv("j", j)}; });
    }
  }
}

void signs_a(const Context &, Depth depth, Recorder &rec) {
  signs_common(depth, rec, 0, false, [](const CompositionStats &s) { return s.v; });
}

void signs_b(const Context &, Depth depth, Recorder &rec) {
  signs_common(depth, rec, 1, true, [](const CompositionStats &s) { return s.u; });
}

void g_convolve(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  rec.domain("0 <= i,j,m <= " + std::to_string(top));
  for (long i = 0; i <= top; ++i)
    for (long j = 0; j <= top; ++j)
      for (long m = 0; m <= top; ++m) {
        BigInt rhs;
        for (long b = 0; b <= m; ++b)
          rhs += binomial(m, b) * ctx.C(i + b, m + j - b);
        rec.check(pow2(2 * m) * Rational(ctx.C(i, j)), Rational(rhs),
                  [&] { return Params{kv("i", i), kv("j", j), kv("m", m)}; });
      }
}

void h_minus_closed(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  rec.domain("all alpha of 1 <= n <= " + std::to_string(top));
  for (int n = 1; n <= top; ++n)
    for (const auto &alpha : all_compositions(n)) {
      const auto s = stats(alpha);
      const Rational rhs = alpha.last() % 2 == 1
                               ? sgn(n - 1) * pow2(n - s.k_odd) * Rational(ctx.B(s.k_odd / 2))
                               : Rational(0);
      rec.check(h_minus(alpha), rhs, [&] { return Params{kv("alpha", alpha)}; });
    }
}

void h_plus_closed(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  rec.domain("all alpha of even 2 <= n <= " + std::to_string(top));
  for (int n = 2; n <= top; n += 2)
    for (const auto &alpha : all_compositions(n)) {
      const auto s = stats(alpha);
      Rational rhs;
      if (alpha.length() == 1)
        rhs = pow2(n);
      else if (alpha.first() % 2 == 1 && alpha.last() % 2 == 1)
        rhs = pow2(n - s.k_odd) * Rational(ctx.C(1, s.k_odd / 2 - 1));
      rec.check(h_plus(alpha), rhs, [&] { return Params{kv("alpha", alpha)}; });
    }
}

void app_f1(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  rec.domain("all alpha of 1 <= n <= " + std::to_string(top));
  for (int n = 1; n <= top; ++n)
    for (const auto &alpha : all_compositions(n)) {
      const auto cuts = ribbon_cuts(alpha);
      BigInt lhs;
      for (int j = 0; j <= n / 2; ++j) {
        const auto &cut = cuts[static_cast<std::size_t>(2 * j)];
        const int l = p_plus(cut.left), r = p_minus(cut.right);
        const BigInt t = ctx.C(l, j - l) * ctx.C(r, n / 2 - j - r);
        lhs += sign_power(l + r) > 0 ? t : -t;
      }
      const Rational rhs = alpha.length() == 1 ? pow2(2 * (n / 2)) : Rational(0);
      rec.check(Rational(lhs), rhs, [&] { return Params{kv("alpha", alpha)}; });
    }
}

void app_f2(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  rec.domain("all alpha of 1 <= n <= " + std::to_string(top));
  for (int n = 1; n <= top; ++n)
    for (const auto &alpha : all_compositions(n)) {
      Rational lhs;
      for (const auto &cut : ribbon_cuts(alpha)) {
        const int i = cut.index;
        const int l = p_minus(cut.left), r = p_minus(cut.right);
        lhs += sgn(l + r + i) * quarter_power(i / 2 + (n - i) / 2) *
               Rational(ctx.C(l, i / 2 - l) * ctx.C(r, (n - i) / 2 - r));
      }
      rec.check(lhs, Rational(0), [&] { return Params{kv("alpha", alpha)}; });
    }
}

void cg6(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(12, depth);
  rec.domain("1 <= h <= " + std::to_string(top));
  for (long h = 1; h <= top; ++h) {
    Rational lhs, rhs;
    for (long j = 0; j <= h; ++j)
      lhs += ctx.central(3, j) * ctx.central(3, h - j);
    for (long j = 0; j <= h - 1; ++j)
      rhs += 2 * ctx.central(2, j) * ctx.central(1, h - 1 - j);
    rec.check(lhs, rhs, [&] { return Params{kv("h", h)}; });
  }
}

void cg7(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(12, depth);
  rec.domain("1 <= h <= " + std::to_string(top));
  for (long h = 1; h <= top; ++h) {
    Rational lhs, rhs;
    for (long j = 0; j <= h; ++j) {
      lhs += ctx.central(3, j) * ctx.central(4, h - j);
      rhs += ctx.central(2, j) * ctx.central(3, h - j);
    }
    for (long j = 0; j <= h - 1; ++j)
      rhs += ctx.central(1, j) * ctx.central(1, h - 1 - j);
    rec.check(lhs, rhs, [&] { return Params{kv("h", h)}; });
  }
}

void cg8(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(12, depth);
  rec.domain("1 <= h <= " + std::to_string(top));
  for (long h = 1; h <= top; ++h) {
    Rational lhs, rhs;
    for (long j = 0; j <= h; ++j) {
      lhs += ctx.central(4, j) * ctx.central(4, h - j);
      rhs += 2 * ctx.central(3, j) * ctx.central(1, h - j);
    }
    rec.check(lhs, rhs, [&] { return Params{kv("h", h)}; });
  }
}

// ---- Permutations ---------------------------------------------------------

// Sum over words of (-1)^p C(p, half - p), where p is the chosen peak count.
template <class Words>
BigInt peak_weight_sum(const Context &ctx, const Words &words, long half, bool augmented) {
  std::map<long, long> tally;
  for (const auto &word : words) {
    const auto peaks = peak_sets(Permutation(word));
    ++tally[static_cast<long>(augmented ? peaks.augmented.size() : peaks.interior.size())];
  }
  BigInt total;
  for (const auto &[p, count] : tally) {
    const BigInt t = ctx.C(p, half - p) * BigInt(count);
    total += p % 2 == 0 ? t : -t;
  }
  return total;
}

void allperms_minus(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(9, depth);
  rec.domain("0 <= n <= " + std::to_string(top));
  for (int n = 0; n <= top; ++n) {
    const BigInt lhs = peak_weight_sum(ctx, all_permutations(n, std::max(n, kDefaultPermutationBound)), n / 2, false);
    rec.check(Rational(lhs), pow2(2 * (n / 2)), [&] { return Params{kv("n", n)}; });
  }
}

void allperms_plus(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(9, depth);
  rec.domain("even 2 <= n <= " + std::to_string(top));
  for (int n = 2; n <= top; n += 2) {
    const BigInt lhs = peak_weight_sum(ctx, all_permutations(n, std::max(n, kDefaultPermutationBound)), n / 2, true);
    rec.check(Rational(lhs), Rational(0), [&] { return Params{kv("n", n)}; });
  }
}

std::vector<std::vector<int>> identity_shuffle_words(int n, int m) {
  std::vector<std::vector<int>> out;
  for (const auto &sigma : shuffles(Permutation::identity(n), Permutation::identity(m)))
    out.push_back(sigma.word());
  return out;
}

void shuffle_minus(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  rec.domain("n,m >= 0, n+m <= " + std::to_string(top));
  for (int n = 0; n <= top; ++n)
    for (int m = 0; n + m <= top; ++m) {
      const BigInt lhs = peak_weight_sum(ctx, identity_shuffle_words(n, m), (n + m) / 2, false);
      BigInt rhs = ctx.B(n / 2) * ctx.B(m / 2);
      if (n % 2 == 1 && m % 2 == 1)
        rhs *= BigInt(4);
      rec.check(Rational(lhs), Rational(rhs), [&] { return Params{kv("n", n), kv("m", m)}; });
    }
}

void shuffle_plus(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  rec.domain("n,m >= 0, n+m even <= " + std::to_string(top));
  for (int n = 0; n <= top; ++n)
    for (int m = 0; n + m <= top; ++m) {
      if ((n + m) % 2 != 0)
        continue;
      const BigInt lhs = peak_weight_sum(ctx, identity_shuffle_words(n, m), (n + m) / 2, true);
      const BigInt rhs = n % 2 == 0 ? ctx.B(n / 2) * ctx.B(m / 2) : BigInt(0);
      rec.check(Rational(lhs), Rational(rhs), [&] { return Params{kv("n", n), kv("m", m)}; });
    }
}

// ---- Inverse characters and recursions ------------------------------------

void app_zetainv_m(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(30, depth);
  rec.domain("1 <= m <= " + std::to_string(top));
  for (long m = 1; m <= top; ++m) {
    Rational lhs;
    for (long j = 0; j <= m - 1; ++j)
      lhs += pow2(2 * m - 2 * j - 1) * ctx.cat(j);
    rec.check(lhs, pow2(2 * m) - Rational(ctx.B(m)), [&] { return Params{kv("m", m)}; });
  }
}

void app_zetainv_plus_m(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  rec.domain("all beta of even 2 <= n <= " + std::to_string(top));
  for (int n = 2; n <= top; n += 2)
    for (const auto &beta : all_compositions(n)) {
      const int kob = stats(beta).k_odd;
      Rational lhs;
      for (const auto &alpha : coarsenings(beta)) {
        if (alpha.first() % 2 == 0 || alpha.last() % 2 == 0)
          continue;
        const auto s = stats(alpha);
        lhs += sgn(s.k_even) * pow2(kob - s.k_odd + 1) * ctx.cat(s.k_odd / 2 - 1);
      }
      const Rational rhs = pow2(kob) - Rational(binomial(kob, kob / 2));
      rec.check(lhs, rhs, [&] { return Params{kv("beta", beta)}; });
    }
}

void gessel_rec(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  rec.domain("0 <= a,b,c <= " + std::to_string(top));
  for (long a = 0; a <= top; ++a)
    for (long b = 0; b <= top; ++b)
      for (long c = 0; c <= top; ++c) {
        Rational rhs = pow2(2 * c) * Rational(ctx.C(b, a));
        for (long j = 1; j <= c; ++j)
          rhs -= pow2(2 * (c - j)) * Rational(ctx.C(b + 1, a + j - 1));
        rec.check(Rational(ctx.C(b, a + c)), rhs, [&] { return Params{kv("a", a), kv("b", b), kv("c", c)}; });
      }
}

void binomial_gessel(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  rec.domain("0 <= b,c <= " + std::to_string(top));
  for (long b = 0; b <= top; ++b)
    for (long c = 0; c <= top; ++c) {
      Rational rhs = quarter_power(c) * Rational(ctx.C(b, c));
      for (long j = 1; j <= c; ++j)
        rhs += quarter_power(j) * Rational(ctx.C(b + 1, j - 1));
      rec.check(Rational(binomial(2 * b, b)), rhs, [&] { return Params{kv("b", b), kv("c", c)}; });
    }
}

void catalan_gessel(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  rec.domain("0 <= b,c <= " + std::to_string(top));
  for (long b = 0; b <= top; ++b)
    for (long c = 0; c <= top; ++c) {
      Rational rhs = quarter_power(c) * Rational(ctx.C(b, c + 1));
      for (long j = 1; j <= c; ++j)
        rhs += quarter_power(j) * Rational(ctx.C(b + 1, j));
      rec.check(Rational(2 * catalan(b)), rhs, [&] { return Params{kv("b", b), kv("c", c)}; });
    }
}

void associator(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  // H(x, y, z) with z >= -1; y + z stays non-negative in every call below.
  auto H = [&](long x, long y, long z) { return ctx.C(x, y + z) - ctx.C(y, x + z); };
  rec.domain("0 <= a,b,c <= " + std::to_string(top));
  for (long a = 0; a <= top; ++a)
    for (long b = 0; b <= top; ++b)
      for (long c = 0; c <= top; ++c) {
        Rational rhs;
        for (long j = 1; j <= c; ++j)
          rhs += quarter_power(j) * Rational(H(b + 1, a + 1, j - 2));
        rec.check(quarter_power(c) * Rational(H(a, b, c)), rhs,
                  [&] { return Params{kv("a", a), kv("b", b), kv("c", c)}; });
      }
}

void power2(const Context &ctx, Depth depth, Recorder &rec) {
  const int top = scaled(40, depth);
  rec.domain("0 < p+q <= " + std::to_string(top));
  for (long total = 1; total <= top; ++total)
    for (long p = 0; p <= total; ++p) {
      const long q = total - p;
      const BigInt c = ctx.C(p, q);
      const long s2 = static_cast<long>(binary_digit_sum(static_cast<unsigned long>(total)));
      const long v2 = c.is_zero() ? -1 : static_cast<long>(two_adic_valuation(c));
      rec.check(Rational(v2), Rational(s2), [&] { return Params{kv("case", "valuation"), kv("p", p), kv("q", q)}; });

      long k = 0;
      for (long t = total; t > 0; t /= 2)
        k += t;
      const Rational reduced = pow2(-2 * total) * Rational(c);
      rec.check(Rational(reduced.den()), pow2(k),
                [&] { return Params{kv("case", "denominator"), kv("p", p), kv("q", q)}; });
      rec.check(Rational(reduced.num().is_odd() ? 1 : 0), Rational(1),
                [&] { return Params{kv("case", "odd numerator"), kv("p", p), kv("q", q)}; });
    }
}

void zeta_power(const Context &, Depth depth, Recorder &rec) {
  const int N = scaled(8, depth);
  rec.domain("-3 <= m <= 3, all alpha of n <= " + std::to_string(N) + ", M and F bases");
  const TruncatedCharacter zeta = restrict(ClosedFormCharacter{CharKind::Zeta}, N);
  std::map<long, TruncatedCharacter> powers;
  powers.emplace(0, TruncatedCharacter(N));
  for (long m = 1; m <= 3; ++m)
    powers.emplace(m, convolve(powers.at(m - 1), zeta));
  for (long m = 1; m <= 3; ++m)
    powers.emplace(-m, inverse(powers.at(m)));

  for (long m = -3; m <= 3; ++m) {
    const auto &phi = powers.at(m);
    const auto closed = ClosedFormCharacter::zeta_power(m);
    for (int n = 0; n <= N; ++n)
      for (const auto &alpha : all_compositions(n)) {
        rec.check(phi(alpha), eval_M(closed, alpha),
                  [&] { return Params{kv("basis", "M"), kv("m", m), kv("alpha", alpha)}; });
        rec.check(evaluate(phi, QSymElement::basis_element(Basis::F, alpha)), eval_F(closed, alpha),
                  [&] { return Params{kv("basis", "F"), kv("m", m), kv("alpha", alpha)}; });
      }
  }
}

void peak_rev_con(const Context &, Depth depth, Recorder &rec) {
  const int top = scaled(10, depth);
  rec.domain("all alpha of 2 <= n <= " + std::to_string(top));
  for (int n = 2; n <= top; ++n)
    for (const auto &alpha : all_compositions(n)) {
      const int pm = p_minus(alpha), pp = p_plus(alpha);
      const bool first_one = alpha.first() == 1, last_one = alpha.last() == 1;

      int rev_expected = pm;
      if (!first_one && last_one)
        rev_expected = pm - 1;
      else if (first_one && !last_one)
        rev_expected = pm + 1;
      rec.check(Rational(p_minus(reversal(alpha))), Rational(rev_expected),
                [&] { return Params{kv("case", "p_minus of reversal"), kv("alpha", alpha)}; });

      int con_expected = pp;
      if (first_one && last_one)
        con_expected = pp - 1;
      else if (!first_one && !last_one)
        con_expected = pp + 1;
      rec.check(Rational(p_plus(conjugate(alpha))), Rational(con_expected),
                [&] { return Params{kv("case", "p_plus of conjugate"), kv("alpha", alpha)}; });

      rec.check(Rational(p_minus(conjugate(alpha))), Rational(pm),
                [&] { return Params{kv("case", "p_minus of conjugate"), kv("alpha", alpha)}; });
      rec.check(Rational(p_plus(reversal(alpha))), Rational(pp),
                [&] { return Params{kv("case", "p_plus of reversal"), kv("alpha", alpha)}; });
    }
}

// The half-integer binomial restatements, evaluated independently of the
// bivariate Catalan closed forms used by eval_M / eval_F.
Rational appendix_value(CharKind kind, Basis basis, const Composition &alpha) {
  const auto s = stats(alpha);
  const int n = s.weight;
  const int ho = s.k_odd / 2;
  if (basis == Basis::M) {
    switch (kind) {
    case CharKind::ZetaMinus:
      return alpha.last() % 2 == 1 ? sgn(s.k_even + ho) * half_binomial(0, ho) : Rational(0);
    case CharKind::ZetaPlus:
      if (n % 2 == 0 && alpha.first() % 2 == 1 && alpha.last() % 2 == 1)
        return sgn(s.k_even + s.k_odd / 2) * half_binomial(1, s.k_odd / 2);
      return Rational(alpha.length() == 1 && n % 2 == 0 ? 1 : 0);
    case CharKind::ZetaInvMinus:
      return alpha.first() % 2 == 1 ? sgn(s.k + ho) * half_binomial(0, ho) : Rational(0);
    case CharKind::ZetaInvPlus:
      return n % 2 == 0 ? sgn(s.k + s.k_odd / 2) * half_binomial(0, s.k_odd / 2) : Rational(0);
    default: break;
    }
  } else {
    switch (kind) {
    case CharKind::ZetaMinus:
      return sgn(n / 2) * half_binomial(p_minus(alpha), n / 2);
    case CharKind::ZetaPlus:
      return n % 2 == 0 ? sgn(n / 2) * half_binomial(p_plus(alpha), n / 2) : Rational(0);
    case CharKind::ZetaInvMinus:
      return sgn((n + 1) / 2) * half_binomial(p_minus(reversal(alpha)), n / 2);
    case CharKind::ZetaInvPlus:
      return n % 2 == 0 ? sgn(n / 2) * half_binomial(p_plus(conjugate(alpha)), n / 2) : Rational(0);
    default: break;
    }
  }
  throw std::logic_error("appendix_value: no restatement for this character");
}

void appendix_forms(const Context &ctx, Depth depth, Recorder &rec) {
  const int N = scaled(9, depth);
  rec.domain("eight restatements on all alpha of 1 <= n <= " + std::to_string(N));
  const CharKind kinds[] = {CharKind::ZetaMinus, CharKind::ZetaPlus, CharKind::ZetaInvMinus, CharKind::ZetaInvPlus};
  for (int n = 1; n <= N; ++n)
    for (const auto &alpha : all_compositions(n))
      for (CharKind kind : kinds)
        for (Basis basis : {Basis::M, Basis::F}) {
          const ClosedFormCharacter c{kind};
          rec.check(appendix_value(kind, basis, alpha), eval(c, basis, alpha), [&] {
            return Params{kv("char", c.id()), kv("basis", std::string(1, basis_letter(basis))), kv("alpha", alpha)};
          });
        }

  const int top = scaled(15, depth);
  rec.domain("half-binomial form of C(m,n) for 0 <= m,n <= " + std::to_string(top));
  for (long m = 0; m <= top; ++m)
    for (long n = 0; n <= top; ++n)
      rec.check(Rational(ctx.C(m, n)), sgn(n) * pow2(2 * (m + n)) * half_binomial(m, m + n),
                [&] { return Params{kv("case", "bridge"), kv("m", m), kv("n", n)}; });
}

struct Entry {
  const char *id;
  void (*run)(const Context &, Depth, Recorder &);
};

const std::vector<Entry> &entries() {
  static const std::vector<Entry> all = {
      {"classical_conv", classical_conv},
      {"classical_conv2", classical_conv2},
      {"central_prod", central_prod},
      {"catalan_prod", catalan_prod},
      {"antipode_sum", antipode_sum},
      {"app_antipodeM", app_antipodeM},
      {"tn_vandermonde", tn_vandermonde},
      {"signs_a", signs_a},
      {"signs_b", signs_b},
      {"g_convolve", g_convolve},
      {"h_minus_closed", h_minus_closed},
      {"h_plus_closed", h_plus_closed},
      {"app_f1", app_f1},
      {"app_f2", app_f2},
      {"cg6", cg6},
      {"cg7", cg7},
      {"cg8", cg8},
      {"allperms_minus", allperms_minus},
      {"allperms_plus", allperms_plus},
      {"shuffle_minus", shuffle_minus},
      {"shuffle_plus", shuffle_plus},
      {"app_zetainv_m", app_zetainv_m},
      {"app_zetainv_plus_m", app_zetainv_plus_m},
      {"gessel_rec", gessel_rec},
      {"binomial_gessel", binomial_gessel},
      {"catalan_gessel", catalan_gessel},
      {"associator", associator},
      {"power2", power2},
      {"zeta_power", zeta_power},
      {"peak_rev_con", peak_rev_con},
      {"appendix_forms", appendix_forms},
  };
  return all;
}

} // namespace

const std::vector<std::string> &registry() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto &e : entries())
      out.emplace_back(e.id);
    return out;
  }();
  return ids;
}

bool is_registered(std::string_view id) {
  const auto &ids = registry();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

CheckReport verify(std::string_view id, Depth depth, const Context &ctx) {
  for (const auto &e : entries()) {
    if (id != e.id)
      continue;
    CheckReport report;
    report.id = e.id;
    Recorder rec(report);
    e.run(ctx, depth, rec);
    return report;
  }
  throw std::invalid_argument("unknown identity id '" + std::string(id) + "'");
}

std::vector<CheckReport> verify_all(Depth depth, const Context &ctx) {
  std::vector<CheckReport> out;
  for (const auto &e : entries())
    out.push_back(verify(e.id, depth, ctx));
  return out;
}

} // namespace qsymx::identities
