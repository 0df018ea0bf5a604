#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsymx {

// A finite sequence of positive integers. The empty composition is the unique
// composition of 0.
//
// Compositions of n correspond to subsets of {1..n-1} (the partial sums
// a_1, a_1+a_2, ...). Bit i-1 of mask() is set iff i is a partial sum; within
// one weight the mask is a dense index in [0, 2^(n-1)).
class Composition {
public:
  Composition() = default;
  // Throws std::invalid_argument if a part is < 1.
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  // Weight must be in [1, 32]; mask must be below 2^(weight-1). Weight 0 gives ().
  static Composition from_mask(int weight, std::uint32_t mask);
  // Inverse of to_string: "2,1,3", "()" or "" for empty. Rejects non-positive parts.
  static Composition parse(std::string_view text);

  const std::vector<int> &parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int first() const { return parts_.front(); }
  int last() const { return parts_.back(); }

  std::uint32_t mask() const;
  // Partial sums a_1, a_1+a_2, ..., a_1+...+a_{k-1}.
  std::vector<int> descent_set() const;

  // "2,1,3"; "()" for the empty composition.
  std::string to_string() const;

  // Weight first, then lexicographic on parts.
  friend std::strong_ordering operator<=>(const Composition &a, const Composition &b);
  friend bool operator==(const Composition &a, const Composition &b) { return a.parts_ == b.parts_; }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

std::ostream &operator<<(std::ostream &os, const Composition &c);

// The concatenation of two compositions.
Composition concat(const Composition &a, const Composition &b);
// From a subset of {1..n-1}; entries must be strictly increasing.
Composition composition_from_descents(int weight, const std::vector<int> &descents);

struct CompositionStats {
  int weight = 0;
  int k = 0;        // number of parts
  int k_even = 0;   // number of even parts
  int k_odd = 0;    // number of odd parts
  int p_minus = 0;  // #{i != k : a_i > 1}
  int p_plus = 0;   // 1 + #{i != 1,k : a_i > 1} when k > 1, else 0
  int u = 0;        // #{i != 1 : a_i > 1}
  int v = 0;        // #{i : a_i > 1}
  int floor_sum = 0; // sum of floor(a_i / 2)
};

CompositionStats stats(const Composition &alpha);
inline int p_minus(const Composition &alpha) { return stats(alpha).p_minus; }
inline int p_plus(const Composition &alpha) { return stats(alpha).p_plus; }

// All 2^(n-1) compositions of n (just () for n = 0), by increasing mask.
std::vector<Composition> all_compositions(int n);

// beta refines alpha: same weight and the partial sums of alpha are among
// those of beta. Different weights give false.
bool refines(const Composition &beta, const Composition &alpha);
// Every beta that refines alpha (alpha included), by increasing mask.
std::vector<Composition> refinements(const Composition &alpha);
// Every gamma refined by alpha (alpha included), by increasing mask.
std::vector<Composition> coarsenings(const Composition &alpha);

Composition reversal(const Composition &alpha);
// Reflection of the ribbon diagram across y = x: the complement of the
// reversed descent set.
Composition conjugate(const Composition &alpha);

// (a_1..a_i, a_{i+1}..a_k); throws std::out_of_range unless 0 <= i <= k.
std::pair<Composition, Composition> deconcatenate(const Composition &alpha, int i);

enum class Step : char { Horizontal = 'H', Vertical = 'V', Diagonal = 'D' };

// A Delannoy path from (0,0) to (p,q).
class LatticePath {
public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps);
  // "HVD..." letters; throws std::invalid_argument on other characters.
  static LatticePath parse(std::string_view letters);

  const std::vector<Step> &steps() const { return steps_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int diagonals() const;
  std::string to_string() const;

  friend bool operator==(const LatticePath &, const LatticePath &) = default;

private:
  std::vector<Step> steps_;
  int p_ = 0;
  int q_ = 0;
};

// Every path in L(p,q), in lexicographic order of the step letters D < H < V.
std::vector<LatticePath> delannoy_paths(int p, int q);

// Reads the labels along the path: H takes the next part of alpha, V the next
// part of beta, D takes one of each and emits their sum. Throws
// std::invalid_argument when the path endpoint is not (k(alpha), k(beta)).
Composition quasi_shuffle(const Composition &alpha, const Composition &beta, const LatticePath &path);

// One cut of a ribbon diagram. weight(left) == index.
struct CutPair {
  Composition left;
  Composition right;
  int index = 0;
};

// The n+1 cuts of the ribbon of alpha, edge 0 through edge n.
std::vector<CutPair> ribbon_cuts(const Composition &alpha);

} // namespace qsymx

template <> struct std::hash<qsymx::Composition> {
  std::size_t operator()(const qsymx::Composition &c) const noexcept;
};
