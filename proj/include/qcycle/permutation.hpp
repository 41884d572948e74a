#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcycle {

/// A permutation of {1,...,n} in one-line notation. All externally visible
/// indexing is 1-based: `perm(i)` is the value at position i.
///
/// The empty permutation (n = 0) is a valid value.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  int operator()(int position) const { return values_[position - 1]; }
  std::span<const int> values() const { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

Permutation make_permutation(std::vector<int> values);

/// Accepts a bare digit string ("213"), a comma-separated list ("2,1,3"), or
/// the empty string. Throws std::invalid_argument on malformed text.
Permutation parse_permutation(std::string_view text);

/// Digit string when n <= 9, comma-separated otherwise.
std::string to_string(const Permutation& perm);

/// Cycles written smallest element first, sorted by first element descending.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  std::size_t count() const { return cycles.size(); }
  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

CycleDecomposition cycle_decomposition(const Permutation& perm);

/// Rebuilds the permutation a set of disjoint cycles describes. Throws
/// std::invalid_argument if the cycles do not cover 1..n exactly once.
Permutation from_cycles(const CycleDecomposition& cycles);

/// "(5,6,7)(4,9,8)(3)(1,2)"; the empty decomposition prints as "".
std::string to_string(const CycleDecomposition& cycles);

/// Number of cycles of the form (i, i+1, ..., i+q-1). Returns 0 when q > n;
/// throws std::invalid_argument when q < 1.
int adjacent_q_cycle_count(const Permutation& perm, int q);

/// Adjacent q-cycle counts for every q at once.
class QCycleProfile {
 public:
  explicit QCycleProfile(int n) : counts_(static_cast<std::size_t>(n) + 1, 0) {}

  /// 0 for any q outside 1..n.
  int count(int q) const;
  int max_q() const { return static_cast<int>(counts_.size()) - 1; }
  void add(int q) { ++counts_.at(static_cast<std::size_t>(q)); }

  friend bool operator==(const QCycleProfile&, const QCycleProfile&) = default;

 private:
  std::vector<int> counts_;
};

QCycleProfile q_cycle_profile(const Permutation& perm);

/// 1-based positions i with perm(j) > perm(i) for every j < i.
std::vector<int> left_to_right_minima(const Permutation& perm);

/// 1-based positions of fixed points i with perm(j) < i before and perm(j) > i after.
std::vector<int> strong_fixed_points(const Permutation& perm);

enum class Symmetry { reverse, inverse, complement };

Symmetry parse_symmetry(std::string_view name);
std::string_view to_string(Symmetry op);

Permutation apply_symmetry(const Permutation& perm, Symmetry op);

/// alpha followed by beta shifted up by |alpha|.
Permutation direct_sum(const Permutation& alpha, const Permutation& beta);

/// Visits every permutation of length n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

/// Visits the permutations of length n whose first entry is `first`, in
/// lexicographic order. Blocks for different `first` partition S_n.
void for_each_permutation_starting_with(int n, int first,
                                        const std::function<void(const Permutation&)>& visit);

}  // namespace qcycle
