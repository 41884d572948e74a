#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcycle/mesh.hpp"
#include "qcycle/permutation.hpp"
#include "qcycle/series.hpp"

namespace qcycle {

/// Largest n for which S_n is enumerated exhaustively unless the caller
/// raises the bound.
inline constexpr int kDefaultBruteForceBound = 9;

BigInt factorial(int n);

/// Binomial coefficient with C(a, 0) = 1 for every a (including a = -1),
/// C(a, b) = 0 for b < 0 or b > a >= 0, and upper negation for a < 0.
BigInt binomial(long a, long b);

/// Number of permutations of length n with exactly k adjacent q-cycles,
/// from the closed inclusion-exclusion formula. Throws for q < 1 or n < 0.
BigInt a_formula(int q, int n, int k);

/// Brute-force counts of permutations of length n by number of adjacent
/// q-cycles.
struct CensusTable {
  int n = 0;
  /// (q, k) -> count; stored for 1 <= q <= max(n, 1) and 0 <= k <= n / q.
  std::map<std::pair<int, int>, BigInt> rows;

  /// 0 for keys that were not stored.
  BigInt at(int q, int k) const;
};

/// Throws std::out_of_range when n exceeds `bound`.
CensusTable census(int n, int bound = kDefaultBruteForceBound);

/// Generating function A(x) of a_2(n, 0), from the recurrence obtained by
/// reading off the x^n coefficient of
///   x^2 (1+x^2) A' - (1+x^2)(1-x-x^2) A + 1 - x^2 = 0,  A(0) = 1.
CoefficientSeries a2_series(int order);

/// Left-hand side of the differential equation above, evaluated with series
/// arithmetic. Zero through the order of `a` iff `a` solves it.
CoefficientSeries a2_ode_residual(const CoefficientSeries& a);

/// F(x) = sum_{m>=0} m! (x / (1+x^2))^m.
CoefficientSeries f_series(int order);

/// Permutations of length n avoiding `pattern`, in lexicographic order.
std::vector<Permutation> avoiders(const MeshPattern& pattern, int n,
                                  int bound = kDefaultBruteForceBound);

/// Coefficient n is the number of permutations of length n avoiding `pattern`.
CoefficientSeries avoider_series(const MeshPattern& pattern, int order,
                                 int bound = kDefaultBruteForceBound);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::optional<std::string> first_counterexample;
};

struct Theorem1Counterexample {
  Permutation pi;
  int q = 0;
  Permutation sigma;
  int adjacent_cycles = 0;
  std::size_t r_occurrences = 0;
  std::size_t s_occurrences = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::uint64_t permutations_scanned = 0;
  std::vector<Theorem1Counterexample> theorem1_counterexamples;

  bool passed() const;
};

/// For every permutation pi of length n <= n_max and every 1 <= q <= n, checks
/// that the adjacent q-cycles of pi equal occ(r_q) + occ(s_q) in the Foata
/// image of pi.
VerificationReport verify_theorem1(int n_max, int bound = kDefaultBruteForceBound);

/// Checks the avoidance identity for the pattern p against F(x) and
/// (1+x^2)A(x), the ODE satisfied by A(x), the coincidence of p with s2', and
/// the direct-sum structure of s2'-avoiders containing r2'.
VerificationReport verify_conjecture(int n_max, int series_terms,
                                     int bound = kDefaultBruteForceBound);

}  // namespace qcycle
