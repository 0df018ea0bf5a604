#include "qsymx/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace qsymx {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int a : parts_) {
    if (a < 1)
      throw std::invalid_argument("composition parts must be positive, got " + std::to_string(a));
    weight_ += a;
  }
}

Composition Composition::from_mask(int weight, std::uint32_t mask) {
  if (weight < 0 || weight > 32)
    throw std::invalid_argument("from_mask: weight out of range");
  if (weight == 0)
    return Composition();
  if (weight < 32 && (mask >> (weight - 1)) != 0)
    throw std::invalid_argument("from_mask: mask exceeds weight");
  std::vector<int> parts;
  int run = 1;
  for (int i = 1; i < weight; ++i) {
    if (mask & (std::uint32_t{1} << (i - 1))) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

Composition Composition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && ((text.front() == '(' && text.back() == ')') ||
                           (text.front() == '[' && text.back() == ']')))
    text = trim(text.substr(1, text.size() - 2));
  if (text.empty())
    return Composition();

  std::vector<int> parts;
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    int value = 0;
    const auto *end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc() || ptr != end)
      throw std::invalid_argument("composition part is not an integer: '" + std::string(token) + "'");
    if (value < 1)
      throw std::invalid_argument("composition parts must be positive integers, got " +
                                  std::to_string(value));
    parts.push_back(value);
    if (comma == std::string_view::npos)
      break;
    text = text.substr(comma + 1);
  }
  return Composition(std::move(parts));
}

std::uint32_t Composition::mask() const {
  if (weight_ > 32)
    throw std::out_of_range("mask: weight above 32");
  std::uint32_t m = 0;
  int s = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    s += parts_[i];
    m |= std::uint32_t{1} << (s - 1);
  }
  return m;
}

std::vector<int> Composition::descent_set() const {
  std::vector<int> out;
  int s = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    s += parts_[i];
    out.push_back(s);
  }
  return out;
}

std::string Composition::to_string() const {
  if (parts_.empty())
    return "()";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Composition &a, const Composition &b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0)
    return c;
  return a.parts_ <=> b.parts_;
}

std::ostream &operator<<(std::ostream &os, const Composition &c) { return os << c.to_string(); }

Composition concat(const Composition &a, const Composition &b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(parts));
}

Composition composition_from_descents(int weight, const std::vector<int> &descents) {
  if (weight == 0) {
    if (!descents.empty())
      throw std::invalid_argument("descents given for weight 0");
    return Composition();
  }
  std::vector<int> parts;
  int prev = 0;
  for (int d : descents) {
    if (d <= prev || d >= weight)
      throw std::invalid_argument("descent set must be increasing within [1, n-1]");
    parts.push_back(d - prev);
    prev = d;
  }
  parts.push_back(weight - prev);
  return Composition(std::move(parts));
}

CompositionStats stats(const Composition &alpha) {
  CompositionStats s;
  const int k = alpha.length();
  s.weight = alpha.weight();
  s.k = k;
  for (int i = 0; i < k; ++i) {
    const int a = alpha[i];
    (a % 2 == 0 ? s.k_even : s.k_odd) += 1;
    s.floor_sum += a / 2;
    if (a > 1) {
      ++s.v;
      if (i != k - 1)
        ++s.p_minus;
      if (i != 0)
        ++s.u;
      if (i != 0 && i != k - 1)
        ++s.p_plus;
    }
  }
  s.p_plus = k > 1 ? s.p_plus + 1 : 0;
  return s;
}

std::vector<Composition> all_compositions(int n) {
  if (n < 0)
    throw std::invalid_argument("all_compositions: negative weight");
  if (n == 0)
    return {Composition()};
  if (n > 31)
    throw std::invalid_argument("all_compositions: weight too large to enumerate");
  const std::uint32_t count = std::uint32_t{1} << (n - 1);
  std::vector<Composition> out;
  out.reserve(count);
  for (std::uint32_t m = 0; m < count; ++m)
    out.push_back(Composition::from_mask(n, m));
  return out;
}

bool refines(const Composition &beta, const Composition &alpha) {
  if (beta.weight() != alpha.weight())
    return false;
  const auto a = alpha.mask();
  return (beta.mask() & a) == a;
}

namespace {

// Every superset (or subset) of `fixed` inside the n-1 available positions,
// ordered by increasing mask.
std::vector<Composition> masks_between(int n, std::uint32_t lower, std::uint32_t upper) {
  std::vector<Composition> out;
  const std::uint32_t free_bits = upper & ~lower;
  // Enumerate submasks of free_bits in increasing numeric order.
  std::vector<std::uint32_t> subs;
  std::uint32_t s = 0;
  do {
    subs.push_back(s | lower);
    s = (s - free_bits) & free_bits;
  } while (s != 0);
  std::sort(subs.begin(), subs.end());
  out.reserve(subs.size());
  for (auto m : subs)
    out.push_back(Composition::from_mask(n, m));
  return out;
}

std::uint32_t full_mask(int n) { return n <= 1 ? 0u : ((std::uint32_t{1} << (n - 1)) - 1u); }

} // namespace

std::vector<Composition> refinements(const Composition &alpha) {
  if (alpha.empty())
    return {alpha};
  return masks_between(alpha.weight(), alpha.mask(), full_mask(alpha.weight()));
}

std::vector<Composition> coarsenings(const Composition &alpha) {
  if (alpha.empty())
    return {alpha};
  return masks_between(alpha.weight(), 0u, alpha.mask());
}

Composition reversal(const Composition &alpha) {
  std::vector<int> parts(alpha.parts().rbegin(), alpha.parts().rend());
  return Composition(std::move(parts));
}

Composition conjugate(const Composition &alpha) {
  const int n = alpha.weight();
  if (n == 0)
    return alpha;
  std::uint32_t reversed = 0;
  for (int d : alpha.descent_set())
    reversed |= std::uint32_t{1} << (n - d - 1);
  return Composition::from_mask(n, full_mask(n) & ~reversed);
}

std::pair<Composition, Composition> deconcatenate(const Composition &alpha, int i) {
  if (i < 0 || i > alpha.length())
    throw std::out_of_range("deconcatenate: index " + std::to_string(i) + " outside [0, " +
                            std::to_string(alpha.length()) + "]");
  const auto &p = alpha.parts();
  return {Composition(std::vector<int>(p.begin(), p.begin() + i)),
          Composition(std::vector<int>(p.begin() + i, p.end()))};
}

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  for (Step s : steps_) {
    switch (s) {
    case Step::Horizontal: ++p_; break;
    case Step::Vertical: ++q_; break;
    case Step::Diagonal: ++p_; ++q_; break;
    default: throw std::invalid_argument("unknown lattice step");
    }
  }
}

LatticePath LatticePath::parse(std::string_view letters) {
  std::vector<Step> steps;
  for (char c : letters) {
    switch (c) {
    case 'H': steps.push_back(Step::Horizontal); break;
    case 'V': steps.push_back(Step::Vertical); break;
    case 'D': steps.push_back(Step::Diagonal); break;
    default: throw std::invalid_argument(std::string("unknown lattice step '") + c + "'");
    }
  }
  return LatticePath(std::move(steps));
}

int LatticePath::diagonals() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::Diagonal));
}

std::string LatticePath::to_string() const {
  std::string out;
  for (Step s : steps_)
    out += static_cast<char>(s);
  return out;
}

namespace {

void extend_paths(int p, int q, std::vector<Step> &prefix, std::vector<LatticePath> &out) {
  if (p == 0 && q == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (p > 0 && q > 0) {
    prefix.push_back(Step::Diagonal);
    extend_paths(p - 1, q - 1, prefix, out);
    prefix.pop_back();
  }
  if (p > 0) {
    prefix.push_back(Step::Horizontal);
    extend_paths(p - 1, q, prefix, out);
    prefix.pop_back();
  }
  if (q > 0) {
    prefix.push_back(Step::Vertical);
    extend_paths(p, q - 1, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<LatticePath> delannoy_paths(int p, int q) {
  if (p < 0 || q < 0)
    throw std::invalid_argument("delannoy_paths: negative endpoint");
  std::vector<LatticePath> out;
  std::vector<Step> prefix;
  extend_paths(p, q, prefix, out);
  return out;
}

Composition quasi_shuffle(const Composition &alpha, const Composition &beta, const LatticePath &path) {
  if (path.p() != alpha.length() || path.q() != beta.length())
    throw std::invalid_argument("quasi_shuffle: path ends at (" + std::to_string(path.p()) + "," +
                                std::to_string(path.q()) + ") but compositions have lengths (" +
                                std::to_string(alpha.length()) + "," + std::to_string(beta.length()) + ")");
  std::vector<int> parts;
  parts.reserve(path.steps().size());
  int i = 0, j = 0;
  for (Step s : path.steps()) {
    switch (s) {
    case Step::Horizontal: parts.push_back(alpha[i++]); break;
    case Step::Vertical: parts.push_back(beta[j++]); break;
    case Step::Diagonal: parts.push_back(alpha[i++] + beta[j++]); break;
    }
  }
  return Composition(std::move(parts));
}

std::vector<CutPair> ribbon_cuts(const Composition &alpha) {
  const int n = alpha.weight();
  const auto descents = alpha.descent_set();
  std::vector<CutPair> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<int> left, right;
    for (int d : descents) {
      if (d < i)
        left.push_back(d);
      else if (d > i)
        right.push_back(d - i);
    }
    out.push_back({composition_from_descents(i, left), composition_from_descents(n - i, right), i});
  }
  return out;
}

} // namespace qsymx

std::size_t std::hash<qsymx::Composition>::operator()(const qsymx::Composition &c) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int a : c.parts())
    h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
