#include "qsymx/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace qsymx {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : word_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  if (text == "()" || text.empty())
    return Permutation();
  std::vector<int> word;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("permutation letter is not a digit 1-9: '" + std::string(1, c) + "'");
      word.push_back(c - '0');
    }
  } else {
    while (true) {
      const auto comma = text.find(',');
      const auto token = text.substr(0, comma);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw std::invalid_argument("permutation letter is not an integer: '" + std::string(token) + "'");
      word.push_back(value);
      if (comma == std::string_view::npos)
        break;
      text = text.substr(comma + 1);
    }
  }
  return Permutation(std::move(word));
}

std::string Permutation::to_string() const {
  if (word_.empty())
    return "()";
  std::string out;
  const bool wide = size() > 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (wide && i)
      out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) { return os << p.to_string(); }

std::vector<int> descent_set(const Permutation &sigma) {
  std::vector<int> out;
  for (int i = 1; i < sigma.size(); ++i)
    if (sigma.at(i) > sigma.at(i + 1))
      out.push_back(i);
  return out;
}

Composition descent_composition(const Permutation &sigma) {
  return composition_from_descents(sigma.size(), descent_set(sigma));
}

PeakSets peak_sets(const Permutation &sigma) {
  PeakSets out;
  for (int i = 1; i < sigma.size(); ++i) {
    const int before = i == 1 ? 0 : sigma.at(i - 1);
    if (before < sigma.at(i) && sigma.at(i) > sigma.at(i + 1)) {
      out.augmented.push_back(i);
      if (i != 1)
        out.interior.push_back(i);
    }
  }
  return out;
}

int interior_peaks(const Permutation &sigma) { return static_cast<int>(peak_sets(sigma).interior.size()); }

int augmented_peaks(const Permutation &sigma) { return static_cast<int>(peak_sets(sigma).augmented.size()); }

namespace {

void interleave(const std::vector<int> &a, std::size_t i, const std::vector<int> &b, std::size_t j,
                std::vector<int> &prefix, std::vector<Permutation> &out) {
  if (i == a.size() && j == b.size()) {
    out.emplace_back(prefix);
    return;
  }
  if (i < a.size()) {
    prefix.push_back(a[i]);
    interleave(a, i + 1, b, j, prefix, out);
    prefix.pop_back();
  }
  if (j < b.size()) {
    prefix.push_back(b[j]);
    interleave(a, i, b, j + 1, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Permutation> shuffles(const Permutation &sigma, const Permutation &tau) {
  const int n = sigma.size();
  std::vector<int> shifted = tau.word();
  for (int &x : shifted)
    x += n;
  std::vector<Permutation> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n + tau.size()));
  interleave(sigma.word(), 0, shifted, 0, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

SSymElement SSymElement::basis(const Permutation &sigma, const Rational &coeff) {
  SSymElement e;
  e.add(sigma, coeff);
  return e;
}

Rational SSymElement::coefficient(const Permutation &sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SSymElement::add(const Permutation &sigma, const Rational &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(sigma, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

SSymElement &SSymElement::operator+=(const SSymElement &o) {
  for (const auto &[sigma, c] : o.terms_)
    add(sigma, c);
  return *this;
}

SSymElement multiply_ssym(const SSymElement &x, const SSymElement &y) {
  SSymElement out;
  for (const auto &[sigma, a] : x.terms())
    for (const auto &[tau, b] : y.terms()) {
      const Rational c = a * b;
      for (const auto &rho : shuffles(sigma, tau))
        out.add(rho, c);
    }
  return out;
}

PermutationRange::iterator &PermutationRange::iterator::operator++() {
  if (!std::next_permutation(word_.begin(), word_.end()))
    done_ = true;
  return *this;
}

PermutationRange all_permutations(int n, int bound) {
  if (n < 0)
    throw std::invalid_argument("all_permutations: negative size");
  if (n > bound)
    throw std::length_error("all_permutations: n = " + std::to_string(n) + " exceeds the bound " +
                            std::to_string(bound));
  return PermutationRange(n);
}

} // namespace qsymx
