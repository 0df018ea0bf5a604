#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsymx/exactnum.hpp"

namespace qsymx::identities {

enum class Depth { Small, Standard, Deep };

// "small", "standard" or "deep"; throws std::invalid_argument.
Depth parse_depth(std::string_view text);
std::string to_string(Depth d);

// Scales a nominal upper bound: small halves it, deep adds a quarter.
int scaled(int bound, Depth d);

// Number sources the identity checks draw from. Replacing `bivariate`
// perturbs every identity built on C(m,n).
struct Context {
  std::function<BigInt(long, long)> bivariate = [](long m, long n) { return bivariate_catalan(m, n); };

  BigInt C(long m, long n) const { return bivariate(m, n); }
  BigInt B(long m) const { return C(0, m); }
  Rational cat(long m) const { return Rational(C(1, m), BigInt(2)); }
  Rational central(int family, long h) const;
};

struct Counterexample {
  std::vector<std::pair<std::string, std::string>> params;
  Rational lhs;
  Rational rhs;

  std::string describe() const;
};

struct CheckReport {
  std::string id;
  std::string domain;
  long cases_run = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;
};

// Registry ids in their fixed order.
const std::vector<std::string> &registry();
bool is_registered(std::string_view id);

// Throws std::invalid_argument for an id not in the registry.
CheckReport verify(std::string_view id, Depth depth, const Context &ctx = Context());
std::vector<CheckReport> verify_all(Depth depth, const Context &ctx = Context());

} // namespace qsymx::identities
