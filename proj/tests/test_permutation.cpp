#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "qcycle/permutation.hpp"

using namespace qcycle;

namespace {

const Permutation kPi = parse_permutation("213967548");

}  // namespace

TEST(Permutation, ConstructsAndValidates) {
  EXPECT_EQ(make_permutation({2, 1, 3, 9, 6, 7, 5, 4, 8}), kPi);
  EXPECT_EQ(make_permutation({}).size(), 0);
  EXPECT_THROW(make_permutation({1, 1}), std::invalid_argument);
  EXPECT_THROW(make_permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(make_permutation({1, 3}), std::invalid_argument);
}

TEST(Permutation, TextForms) {
  EXPECT_EQ(parse_permutation("2,1,3,9,6,7,5,4,8"), kPi);
  EXPECT_EQ(parse_permutation(""), Permutation());
  EXPECT_EQ(to_string(kPi), "213967548");
  EXPECT_EQ(to_string(Permutation()), "");

  const Permutation ten = parse_permutation("10,9,8,7,6,5,4,3,2,1");
  EXPECT_EQ(ten.size(), 10);
  EXPECT_EQ(to_string(ten), "10,9,8,7,6,5,4,3,2,1");
  EXPECT_EQ(parse_permutation(to_string(ten)), ten);

  EXPECT_THROW(parse_permutation("12a"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("1,,2"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("10"), std::invalid_argument);
}

TEST(CycleDecomposition, WorkedExample) {
  const CycleDecomposition cycles = cycle_decomposition(kPi);
  EXPECT_EQ(to_string(cycles), "(5,6,7)(4,9,8)(3)(1,2)");
  EXPECT_EQ(cycles.count(), 4u);
}

TEST(CycleDecomposition, SmallCases) {
  EXPECT_EQ(to_string(cycle_decomposition(parse_permutation("123"))), "(3)(2)(1)");
  const CycleDecomposition reversed = cycle_decomposition(parse_permutation("321"));
  EXPECT_EQ(to_string(reversed), "(2)(1,3)");
  EXPECT_EQ(from_cycles(reversed), parse_permutation("321"));
  EXPECT_TRUE(cycle_decomposition(Permutation()).cycles.empty());
}

TEST(CycleDecomposition, RoundTripAndCanonicalFormExhaustive) {
  for (int n = 0; n <= 8; ++n) {
    for_each_permutation(n, [](const Permutation& perm) {
      const CycleDecomposition cycles = cycle_decomposition(perm);
      ASSERT_EQ(from_cycles(cycles), perm);
      for (std::size_t c = 0; c < cycles.cycles.size(); ++c) {
        const auto& cycle = cycles.cycles[c];
        ASSERT_EQ(cycle.front(), *std::min_element(cycle.begin(), cycle.end()));
        if (c > 0) ASSERT_GT(cycles.cycles[c - 1].front(), cycle.front());
      }
    });
  }
}

TEST(CycleDecomposition, FromCyclesRejectsOverlap) {
  EXPECT_THROW(from_cycles({{{1, 2}, {2}}}), std::invalid_argument);
  EXPECT_THROW(from_cycles({{{1, 3}}}), std::invalid_argument);
}

TEST(AdjacentQCycles, WorkedExample) {
  EXPECT_EQ(adjacent_q_cycle_count(kPi, 1), 1);
  EXPECT_EQ(adjacent_q_cycle_count(kPi, 2), 1);
  EXPECT_EQ(adjacent_q_cycle_count(kPi, 3), 1);  // (5,6,7) yes, (4,9,8) no
  EXPECT_EQ(adjacent_q_cycle_count(kPi, 4), 0);
  EXPECT_EQ(adjacent_q_cycle_count(Permutation::identity(4), 1), 4);
}

TEST(AdjacentQCycles, EdgeCases) {
  EXPECT_THROW(adjacent_q_cycle_count(kPi, 0), std::invalid_argument);
  EXPECT_EQ(adjacent_q_cycle_count(kPi, 10), 0);
  EXPECT_EQ(adjacent_q_cycle_count(Permutation(), 1), 0);
  // The 3-cycle (4,6,5) lives on an interval but has the wrong orientation.
  EXPECT_EQ(adjacent_q_cycle_count(parse_permutation("123645"), 3), 0);
  EXPECT_EQ(adjacent_q_cycle_count(parse_permutation("123564"), 3), 1);
}

TEST(AdjacentQCycles, MatchesFunctionalOracleExhaustive) {
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [n](const Permutation& perm) {
      const QCycleProfile profile = q_cycle_profile(perm);
      for (int q = 1; q <= n + 1; ++q) {
        const int expected = oracle::adjacent_q_cycles(perm, q);
        ASSERT_EQ(adjacent_q_cycle_count(perm, q), expected) << to_string(perm) << " q=" << q;
        ASSERT_EQ(profile.count(q), expected);
      }
    });
  }
}

TEST(QCycleProfile, Examples) {
  const QCycleProfile profile = q_cycle_profile(kPi);
  EXPECT_EQ(profile.count(1), 1);
  EXPECT_EQ(profile.count(2), 1);
  EXPECT_EQ(profile.count(3), 1);
  for (int q = 4; q <= 12; ++q) EXPECT_EQ(profile.count(q), 0);

  const QCycleProfile empty = q_cycle_profile(Permutation());
  EXPECT_EQ(empty.count(1), 0);

  const QCycleProfile swap = q_cycle_profile(parse_permutation("21"));
  EXPECT_EQ(swap.count(1), 0);
  EXPECT_EQ(swap.count(2), 1);
}

TEST(LeftToRightMinima, Examples) {
  EXPECT_EQ(left_to_right_minima(parse_permutation("567498312")), (std::vector<int>{1, 4, 7, 8}));
  EXPECT_EQ(left_to_right_minima(parse_permutation("54321")), (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(left_to_right_minima(Permutation::identity(6)), (std::vector<int>{1}));
  EXPECT_TRUE(left_to_right_minima(Permutation()).empty());
}

TEST(LeftToRightMinima, MatchesQuadraticScan) {
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& perm) {
      ASSERT_EQ(left_to_right_minima(perm), oracle::left_to_right_minima(perm));
    });
  }
}

TEST(StrongFixedPoints, Examples) {
  EXPECT_EQ(strong_fixed_points(Permutation::identity(3)), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(strong_fixed_points(parse_permutation("213")), (std::vector<int>{3}));
  EXPECT_TRUE(strong_fixed_points(parse_permutation("321")).empty());
}

TEST(StrongFixedPoints, AreFixedPoints) {
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& perm) {
      const auto strong = strong_fixed_points(perm);
      ASSERT_GE(adjacent_q_cycle_count(perm, 1), static_cast<int>(strong.size()));
      for (int i : strong) ASSERT_EQ(perm(i), i);
    });
  }
}

TEST(Symmetry, Examples) {
  EXPECT_EQ(apply_symmetry(parse_permutation("213"), Symmetry::reverse), parse_permutation("312"));
  EXPECT_EQ(apply_symmetry(parse_permutation("231"), Symmetry::inverse), parse_permutation("312"));
  EXPECT_EQ(apply_symmetry(parse_permutation("213"), Symmetry::complement),
            parse_permutation("231"));
  EXPECT_EQ(parse_symmetry("inverse"), Symmetry::inverse);
  EXPECT_THROW(parse_symmetry("rotate"), std::invalid_argument);
}

TEST(Symmetry, InvolutionsExhaustive) {
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& perm) {
      for (Symmetry op : {Symmetry::reverse, Symmetry::inverse, Symmetry::complement}) {
        ASSERT_EQ(apply_symmetry(apply_symmetry(perm, op), op), perm);
      }
    });
  }
}

TEST(DirectSum, Examples) {
  const Permutation two_one = parse_permutation("21");
  EXPECT_EQ(direct_sum(two_one, parse_permutation("1")), parse_permutation("213"));
  EXPECT_EQ(direct_sum(two_one, Permutation()), two_one);
  EXPECT_EQ(direct_sum(two_one, parse_permutation("312")), parse_permutation("21534"));
}

TEST(ForEachPermutation, CountsAndOrder) {
  std::vector<Permutation> seen;
  for_each_permutation(4, [&](const Permutation& perm) { seen.push_back(perm); });
  EXPECT_EQ(seen.size(), 24u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());

  int empty_count = 0;
  for_each_permutation(0, [&](const Permutation& perm) {
    EXPECT_TRUE(perm.empty());
    ++empty_count;
  });
  EXPECT_EQ(empty_count, 1);
}
