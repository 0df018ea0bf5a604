#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsymx/composition.hpp"
#include "qsymx/exactnum.hpp"

namespace qsymx {

// A permutation of {1..n} in one-line notation. n = 0 is the empty word.
class Permutation {
public:
  Permutation() = default;
  // Throws std::invalid_argument unless the word uses each of 1..n once.
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n);
  // "312546" (one digit per letter) or "3,1,2,10,..." when n > 9.
  static Permutation parse(std::string_view text);

  const std::vector<int> &word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  // 1-based access: at(i) = sigma(i) for 1 <= i <= n.
  int at(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  std::string to_string() const;

  friend auto operator<=>(const Permutation &, const Permutation &) = default;
  friend bool operator==(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> word_;
};

std::ostream &operator<<(std::ostream &os, const Permutation &p);

// {i in [n-1] : sigma(i) > sigma(i+1)}.
std::vector<int> descent_set(const Permutation &sigma);
// The composition of n whose partial sums are the descents of sigma.
Composition descent_composition(const Permutation &sigma);

struct PeakSets {
  std::vector<int> interior;  // PeakAug without position 1
  std::vector<int> augmented; // sigma(i-1) < sigma(i) > sigma(i+1), sigma(0) = 0
};

PeakSets peak_sets(const Permutation &sigma);
int interior_peaks(const Permutation &sigma);
int augmented_peaks(const Permutation &sigma);

// All binom(n+m, n) shuffles of sigma(1..n) with n+tau(1..m), in
// lexicographic order.
std::vector<Permutation> shuffles(const Permutation &sigma, const Permutation &tau);

// Linear combination of the F basis of the Hopf algebra of permutations.
class SSymElement {
public:
  SSymElement() = default;
  static SSymElement basis(const Permutation &sigma, const Rational &coeff = Rational(1));

  const std::map<Permutation, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Permutation &sigma) const;

  // Adds c * F_sigma, dropping the term if it cancels.
  void add(const Permutation &sigma, const Rational &c);

  SSymElement &operator+=(const SSymElement &o);
  friend SSymElement operator+(SSymElement a, const SSymElement &b) { return a += b; }
  friend bool operator==(const SSymElement &, const SSymElement &) = default;

private:
  std::map<Permutation, Rational> terms_;
};

SSymElement multiply_ssym(const SSymElement &x, const SSymElement &y);

inline constexpr int kDefaultPermutationBound = 9;

// Lazily enumerates S_n in lexicographic order.
class PermutationRange {
public:
  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::vector<int> *;
    using reference = const std::vector<int> &;

    iterator() = default;
    explicit iterator(int n) : word_(static_cast<std::size_t>(n)), done_(false) {
      for (int i = 0; i < n; ++i)
        word_[static_cast<std::size_t>(i)] = i + 1;
    }
    // The current word; valid until the iterator advances.
    reference operator*() const { return word_; }
    iterator &operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator &a, const iterator &b) { return a.done_ == b.done_; }

  private:
    std::vector<int> word_;
    bool done_ = true;
  };

  explicit PermutationRange(int n) : n_(n) {}
  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

private:
  int n_;
};

// Throws std::length_error when n exceeds the bound.
PermutationRange all_permutations(int n, int bound = kDefaultPermutationBound);

} // namespace qsymx
