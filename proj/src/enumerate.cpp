#include "qcycle/enumerate.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "qcycle/foata.hpp"

namespace qcycle {

namespace {

void check_bound(int n, int bound) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > bound) {
    throw std::out_of_range("n=" + std::to_string(n) + " exceeds the brute-force bound " +
                            std::to_string(bound));
  }
}

// Splits S_n into blocks by first entry and runs `step` over each block on its
// own thread. Blocks come back in lexicographic order, so merging them in
// sequence is independent of scheduling.
template <typename Block, typename Step>
std::vector<Block> sweep(int n, Step step) {
  if (n == 0) {
    Block block{};
    step(Permutation(), block);
    return {std::move(block)};
  }
  std::vector<std::future<Block>> futures;
  for (int first = 1; first <= n; ++first) {
    futures.push_back(std::async(std::launch::async, [n, first, &step] {
      Block block{};
      for_each_permutation_starting_with(n, first,
                                         [&](const Permutation& perm) { step(perm, block); });
      return block;
    }));
  }
  std::vector<Block> blocks;
  for (auto& f : futures) blocks.push_back(f.get());
  return blocks;
}

CoefficientSeries one_plus_x2(int order) {
  return CoefficientSeries::polynomial({1, 0, 1}, order);
}

std::string join(const std::vector<Permutation>& perms, std::size_t limit = 8) {
  std::string out = "{";
  for (std::size_t i = 0; i < perms.size() && i < limit; ++i) {
    if (i > 0) out += ",";
    out += to_string(perms[i]);
  }
  if (perms.size() > limit) out += ",...";
  return out + "}";
}

}  // namespace

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(long a, long b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a < 0) {
    BigInt magnitude = binomial(b - a - 1, b);
    return (b % 2 == 0) ? magnitude : BigInt(-magnitude);
  }
  if (b > a) return 0;
  b = std::min(b, a - b);
  BigInt result = 1;
  for (long i = 1; i <= b; ++i) result = result * (a - b + i) / i;
  return result;
}

BigInt a_formula(int q, int n, int k) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  if (n < 0 || k < 0) throw std::invalid_argument("n and k must be non-negative");
  BigInt total = 0;
  for (int j = k; j <= n / q; ++j) {
    // (n-(q-1)j)! / j! as the product (j+1)...(n-(q-1)j); j <= n-(q-1)j here.
    BigInt ratio = 1;
    for (int i = j + 1; i <= n - (q - 1) * j; ++i) ratio *= i;
    BigInt term = binomial(j, k) * ratio;
    if ((k + j) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

BigInt CensusTable::at(int q, int k) const {
  auto it = rows.find({q, k});
  return it == rows.end() ? BigInt(0) : it->second;
}

CensusTable census(int n, int bound) {
  check_bound(n, bound);
  const int max_q = std::max(n, 1);
  using Counts = std::vector<std::vector<std::uint64_t>>;  // [q][k]
  auto blocks = sweep<Counts>(n, [n, max_q](const Permutation& perm, Counts& counts) {
    if (counts.empty()) {
      counts.resize(static_cast<std::size_t>(max_q) + 1);
      for (int q = 1; q <= max_q; ++q) counts[q].assign(static_cast<std::size_t>(n / q) + 1, 0);
    }
    const QCycleProfile profile = q_cycle_profile(perm);
    for (int q = 1; q <= max_q; ++q) ++counts[q][profile.count(q)];
  });

  CensusTable table;
  table.n = n;
  for (int q = 1; q <= max_q; ++q) {
    for (int k = 0; k <= n / q; ++k) {
      BigInt total = 0;
      for (const Counts& counts : blocks) total += counts[q][k];
      table.rows[{q, k}] = total;
    }
  }
  return table;
}

CoefficientSeries a2_series(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  // Coefficient of x^n in the ODE gives
  //   a_n = n a_{n-1} + (n-2) a_{n-3} + a_{n-4} + [n=0] - [n=2].
  CoefficientSeries a(order);
  const auto prev = [&](int i) { return i < 0 ? BigInt(0) : a[i]; };
  for (int n = 0; n <= order; ++n) {
    BigInt value = n * prev(n - 1) + (n - 2) * prev(n - 3) + prev(n - 4);
    if (n == 0) value += 1;
    if (n == 2) value -= 1;
    a[n] = value;
  }
  return a;
}

CoefficientSeries a2_ode_residual(const CoefficientSeries& a) {
  const int order = a.order();
  // x^2 (1+x^2) A'; shifting first keeps every degree through `order` known.
  CoefficientSeries derivative_term = one_plus_x2(order + 1) * a.derivative().shifted(2);
  // (1+x^2)(1-x-x^2) = 1 - x - x^3 - x^4
  CoefficientSeries linear_term = CoefficientSeries::polynomial({1, -1, 0, -1, -1}, order) * a;
  CoefficientSeries constant_term = CoefficientSeries::polynomial({1, 0, -1}, order);
  return derivative_term - linear_term + constant_term;
}

CoefficientSeries f_series(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  // [x^n] (x/(1+x^2))^m = (-1)^k C(m+k-1, k) when n = m + 2k.
  CoefficientSeries f(order);
  for (int n = 0; n <= order; ++n) {
    BigInt total = 0;
    for (int m = n % 2; m <= n; m += 2) {
      const int k = (n - m) / 2;
      BigInt term = factorial(m) * binomial(m + k - 1, k);
      if (k % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }
    f[n] = total;
  }
  return f;
}

std::vector<Permutation> avoiders(const MeshPattern& pattern, int n, int bound) {
  check_bound(n, bound);
  auto blocks = sweep<std::vector<Permutation>>(
      n, [&pattern](const Permutation& perm, std::vector<Permutation>& found) {
        if (avoids(pattern, perm)) found.push_back(perm);
      });
  std::vector<Permutation> result;
  for (auto& block : blocks) {
    result.insert(result.end(), std::make_move_iterator(block.begin()),
                  std::make_move_iterator(block.end()));
  }
  return result;
}

CoefficientSeries avoider_series(const MeshPattern& pattern, int order, int bound) {
  check_bound(order, bound);
  CoefficientSeries series(order);
  for (int n = 0; n <= order; ++n) {
    auto blocks = sweep<std::uint64_t>(n, [&pattern](const Permutation& perm, std::uint64_t& c) {
      if (avoids(pattern, perm)) ++c;
    });
    BigInt total = 0;
    for (auto c : blocks) total += c;
    series[n] = total;
  }
  return series;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

constexpr std::size_t kMaxStoredCounterexamples = 100;

CheckResult start_check(std::string name) {
  CheckResult check;
  check.name = std::move(name);
  return check;
}

std::string describe(const Theorem1Counterexample& c) {
  std::ostringstream out;
  out << "pi=" << to_string(c.pi) << " q=" << c.q << " sigma=" << to_string(c.sigma)
      << " adjacent=" << c.adjacent_cycles << " occ(r_q)=" << c.r_occurrences
      << " occ(s_q)=" << c.s_occurrences;
  return out.str();
}

}  // namespace

VerificationReport verify_theorem1(int n_max, int bound) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  check_bound(n_max, bound);

  std::vector<MeshPattern> r_patterns{MeshPattern()};
  std::vector<MeshPattern> s_patterns{MeshPattern()};
  for (int q = 1; q <= n_max; ++q) {
    r_patterns.push_back(r_pattern(q));
    s_patterns.push_back(s_pattern(q));
  }

  struct Block {
    std::uint64_t permutations = 0;
    std::uint64_t cases = 0;
    std::vector<Theorem1Counterexample> failures;
  };

  VerificationReport report;
  for (int n = 0; n <= n_max; ++n) {
    auto blocks = sweep<Block>(n, [&, n](const Permutation& pi, Block& block) {
      ++block.permutations;
      const Permutation sigma = foata_forward(pi);
      const QCycleProfile profile = q_cycle_profile(pi);
      for (int q = 1; q <= n; ++q) {
        ++block.cases;
        const std::size_t r = count_occurrences(r_patterns[q], sigma);
        const std::size_t s = count_occurrences(s_patterns[q], sigma);
        if (static_cast<std::size_t>(profile.count(q)) != r + s &&
            block.failures.size() < kMaxStoredCounterexamples) {
          block.failures.push_back({pi, q, sigma, profile.count(q), r, s});
        }
      }
    });

    CheckResult check = start_check("n=" + std::to_string(n) + ": adjacent q-cycles = occ(r_q) + occ(s_q)");
    for (Block& block : blocks) {
      report.permutations_scanned += block.permutations;
      check.cases += block.cases;
      for (auto& failure : block.failures) {
        if (report.theorem1_counterexamples.size() < kMaxStoredCounterexamples) {
          report.theorem1_counterexamples.push_back(std::move(failure));
        }
      }
    }
    for (const auto& failure : report.theorem1_counterexamples) {
      if (failure.pi.size() == n) {
        check.passed = false;
        check.first_counterexample = describe(failure);
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

VerificationReport verify_conjecture(int n_max, int series_terms, int bound) {
  if (n_max < 0 || series_terms < 0) {
    throw std::invalid_argument("bounds must be non-negative");
  }
  check_bound(n_max, bound);

  const MeshPattern p = named_pattern("p");
  const MeshPattern r2_prime = named_pattern("r2'");
  const MeshPattern s2_prime = named_pattern("s2'");

  VerificationReport report;
  std::vector<std::vector<Permutation>> avoid_p;
  std::vector<std::vector<Permutation>> avoid_s2;
  for (int n = 0; n <= n_max; ++n) {
    avoid_p.push_back(avoiders(p, n, bound));
    avoid_s2.push_back(avoiders(s2_prime, n, bound));
    report.permutations_scanned += static_cast<std::uint64_t>(factorial(n));
  }

  const CoefficientSeries f_small = f_series(n_max);
  {
    CheckResult check = start_check("|S_n(p)| equals [x^n] F(x), n <= " + std::to_string(n_max));
    for (int n = 0; n <= n_max; ++n) {
      ++check.cases;
      if (BigInt(avoid_p[n].size()) != f_small[n] && check.passed) {
        check.passed = false;
        check.first_counterexample = "n=" + std::to_string(n) + ": |S_n(p)|=" +
                                     std::to_string(avoid_p[n].size()) +
                                     " F=" + f_small[n].str();
      }
    }
    report.checks.push_back(std::move(check));
  }
  {
    CheckResult check = start_check("|S_n(p)| = a_2(n,0) + a_2(n-2,0), 2 <= n <= " + std::to_string(n_max));
    for (int n = 2; n <= n_max; ++n) {
      ++check.cases;
      const BigInt expected = a_formula(2, n, 0) + a_formula(2, n - 2, 0);
      if (BigInt(avoid_p[n].size()) != expected && check.passed) {
        check.passed = false;
        check.first_counterexample = "n=" + std::to_string(n) + ": |S_n(p)|=" +
                                     std::to_string(avoid_p[n].size()) +
                                     " a_2(n,0)+a_2(n-2,0)=" + expected.str();
      }
    }
    report.checks.push_back(std::move(check));
  }

  const CoefficientSeries a = a2_series(series_terms);
  const CoefficientSeries f = f_series(series_terms);
  const CoefficientSeries expected_f = one_plus_x2(series_terms) * a;
  {
    CheckResult check = start_check("F(x) = (1+x^2) A(x) through x^" + std::to_string(series_terms));
    for (int n = 0; n <= series_terms; ++n) {
      ++check.cases;
      if (f[n] != expected_f[n] && check.passed) {
        check.passed = false;
        check.first_counterexample = "degree " + std::to_string(n) + ": F=" + f[n].str() +
                                     " (1+x^2)A=" + expected_f[n].str();
      }
    }
    report.checks.push_back(std::move(check));
  }
  {
    CheckResult check = start_check("A(x) satisfies its differential equation through x^" +
                      std::to_string(series_terms));
    const CoefficientSeries residual = a2_ode_residual(a);
    for (int n = 0; n <= residual.order(); ++n) {
      ++check.cases;
      if (residual[n] != 0 && check.passed) {
        check.passed = false;
        check.first_counterexample =
            "degree " + std::to_string(n) + ": residual " + residual[n].str();
      }
    }
    report.checks.push_back(std::move(check));
  }
  {
    CheckResult check = start_check("[x^n] A(x) = a_2(n,0) from the closed formula, n <= " +
                      std::to_string(series_terms));
    for (int n = 0; n <= series_terms; ++n) {
      ++check.cases;
      const BigInt closed = a_formula(2, n, 0);
      if (a[n] != closed && check.passed) {
        check.passed = false;
        check.first_counterexample =
            "n=" + std::to_string(n) + ": series " + a[n].str() + " formula " + closed.str();
      }
    }
    report.checks.push_back(std::move(check));
  }
  {
    CheckResult check = start_check("S_n(p) = S_n(s2') as sets, n <= " + std::to_string(n_max));
    for (int n = 0; n <= n_max; ++n) {
      ++check.cases;
      if (avoid_p[n] != avoid_s2[n] && check.passed) {
        check.passed = false;
        check.first_counterexample = "n=" + std::to_string(n) + ": S_n(p)=" + join(avoid_p[n]) +
                                     " S_n(s2')=" + join(avoid_s2[n]);
      }
    }
    report.checks.push_back(std::move(check));
  }
  {
    CheckResult check = start_check("contains r2' and avoids s2' iff 21 (+) tau with tau avoiding both, n <= " +
                      std::to_string(n_max));
    const Permutation two_one = parse_permutation("21");
    for (int n = 0; n <= n_max; ++n) {
      ++check.cases;
      std::vector<Permutation> structured;
      for (const Permutation& sigma : avoid_s2[n]) {
        if (contains(r2_prime, sigma)) structured.push_back(sigma);
      }
      std::vector<Permutation> sums;
      if (n >= 2) {
        for (const Permutation& tau : avoid_s2[n - 2]) {
          if (avoids(r2_prime, tau)) sums.push_back(direct_sum(two_one, tau));
        }
      }
      std::sort(sums.begin(), sums.end());
      if (structured != sums && check.passed) {
        check.passed = false;
        check.first_counterexample = "n=" + std::to_string(n) + ": contains r2'/avoids s2' " +
                                     join(structured) + " vs direct sums " + join(sums);
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace qcycle
