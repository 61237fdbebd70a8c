#include "hornlr/partition.hpp"

#include <gtest/gtest.h>

#include <set>

namespace hornlr {
namespace {

TEST(Partition, StripsTrailingZeros) {
  Partition p{8, 6, 5, 4, 3, 1, 0};
  EXPECT_EQ(p.length(), 6);
  EXPECT_EQ(p.weight(), 27);
  EXPECT_EQ(p, (Partition{8, 6, 5, 4, 3, 1}));
  EXPECT_EQ(p.to_string(), "8,6,5,4,3,1");
  EXPECT_EQ(p[7], 0);
}

TEST(Partition, RejectsIncreasingOrNegativeParts) {
  EXPECT_THROW(Partition({1, 2}), InvalidArgument);
  EXPECT_THROW(Partition({2, -1}), InvalidArgument);
}

TEST(Partition, ParsesTextSyntax) {
  EXPECT_EQ(Partition::parse(""), Partition{});
  EXPECT_EQ(Partition::parse("0"), Partition{});
  EXPECT_EQ(Partition::parse(" 4, 2 ,1,0 "), (Partition{4, 2, 1}));
  EXPECT_THROW(Partition::parse("4,,1"), InvalidArgument);
  EXPECT_THROW(Partition::parse("4,x"), InvalidArgument);
  EXPECT_THROW(Partition::parse("1,2"), InvalidArgument);
}

TEST(StrictPartition, RejectsRepeatedParts) {
  EXPECT_THROW(StrictPartition({2, 2}), InvalidArgument);
  EXPECT_NO_THROW(StrictPartition({3, 2, 1}));
  EXPECT_EQ(StrictPartition::from_part_set({1, 4, 2}), (StrictPartition{4, 2, 1}));
  EXPECT_EQ(StrictPartition({3, 1}).as_partition(), (Partition{3, 1}));
}

TEST(Shapes, RejectNonPositiveSides) {
  EXPECT_THROW(Rectangle(0, 3), InvalidArgument);
  EXPECT_THROW(Staircase(0), InvalidArgument);
  EXPECT_EQ(Staircase(4).weight(), 10);
  EXPECT_EQ(Staircase(3).full(), (StrictPartition{3, 2, 1}));
}

TEST(Contains, Rectangle) {
  EXPECT_TRUE(contains(Partition{4, 2, 1}, Rectangle(3, 4)));
  EXPECT_FALSE(contains(Partition{4, 2, 1}, Rectangle(2, 4)));
  EXPECT_FALSE(contains(Partition{5}, Rectangle(3, 4)));
  EXPECT_TRUE(contains(Partition{}, Rectangle(1, 1)));
}

TEST(Contains, Staircase) {
  EXPECT_TRUE(contains(StrictPartition{8, 6, 4, 3}, Staircase(8)));
  EXPECT_FALSE(contains(StrictPartition{3, 2, 1}, Staircase(2)));
  EXPECT_TRUE(contains(StrictPartition{}, Staircase(1)));
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Partition{4, 2, 1}), (Partition{3, 2, 1, 1}));
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_EQ(conjugate(Partition{2, 2}), (Partition{2, 2}));
}

TEST(Complement, Rectangle) {
  const Rectangle box(3, 4);
  EXPECT_EQ(complement(Partition{}, box), box.full());
  EXPECT_EQ(complement(box.full(), box), Partition{});
  EXPECT_EQ(complement(Partition{4, 2, 1}, box), (Partition{3, 2}));
  EXPECT_THROW(complement(Partition{5}, box), InvalidArgument);
}

// Independent route: the complement diagram is the set of boxes of the
// rectangle not covered by lambda placed upper-right, rotated by 180 degrees.
TEST(Complement, RectangleMatchesBoxSubtraction) {
  const Rectangle box(3, 4);
  for (const auto& lambda : partitions_in(box)) {
    std::vector<int> rows(3, 0);
    for (int i = 1; i <= 3; ++i) {
      for (int col = 1; col <= 4; ++col) {
        const bool in_lambda = col > 4 - lambda[i];
        // rotated: row i -> row 4-i
        if (!in_lambda) ++rows[static_cast<std::size_t>(3 - i)];
      }
    }
    EXPECT_EQ(complement(lambda, box), Partition(rows)) << lambda.to_string();
  }
}

TEST(Complement, Staircase) {
  const Staircase s(4);
  EXPECT_EQ(complement(StrictPartition{}, s), s.full());
  EXPECT_EQ(complement(s.full(), s), StrictPartition{});
  EXPECT_EQ(complement(StrictPartition{1}, Staircase(2)), StrictPartition{2});
  EXPECT_THROW(complement(StrictPartition{5}, s), InvalidArgument);
}

TEST(Enumerate, SmallRectangles) {
  EXPECT_EQ(partitions_in(Rectangle(1, 1)),
            (std::vector<Partition>{Partition{}, Partition{1}}));
  EXPECT_EQ(partitions_in(Rectangle(2, 2)).size(), 6u);
  EXPECT_EQ(partitions_in(Rectangle(3, 3)).size(), 20u);
}

TEST(Enumerate, SmallStaircases) {
  EXPECT_EQ(strict_partitions_in(Staircase(1)),
            (std::vector<StrictPartition>{StrictPartition{}, StrictPartition{1}}));
  EXPECT_EQ(strict_partitions_in(Staircase(2)),
            (std::vector<StrictPartition>{StrictPartition{}, StrictPartition{1},
                                          StrictPartition{2},
                                          StrictPartition{2, 1}}));
  EXPECT_EQ(strict_partitions_in(Staircase(5)).size(), 32u);
}

TEST(Enumerate, RectangleCountsDistinctAndSorted) {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 5; ++m) {
      const Rectangle box(n, m);
      const auto all = partitions_in(box);
      EXPECT_EQ(static_cast<std::int64_t>(all.size()), binomial(n + m, n));
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
      EXPECT_EQ(std::set<Partition>(all.begin(), all.end()).size(), all.size());
      for (const auto& p : all) EXPECT_TRUE(contains(p, box));
    }
  }
}

TEST(Enumerate, StrictPartitionsBijectWithSubsets) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::set<int>> subsets;
    for (const auto& p : strict_partitions_in(Staircase(n))) {
      subsets.insert(std::set<int>(p.parts().begin(), p.parts().end()));
    }
    EXPECT_EQ(subsets.size(), std::size_t{1} << n);
  }
}

// Involution and weight identities, exhaustively for n, m <= 5.
TEST(Properties, ComplementInvolutions) {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 5; ++m) {
      const Rectangle box(n, m);
      for (const auto& p : partitions_in(box)) {
        const auto c = complement(p, box);
        EXPECT_TRUE(contains(c, box));
        EXPECT_EQ(complement(c, box), p);
        EXPECT_EQ(p.weight() + c.weight(), n * m);
        EXPECT_EQ(conjugate(conjugate(p)), p);
      }
    }
    const Staircase s(n);
    for (const auto& p : strict_partitions_in(s)) {
      const auto c = complement(p, s);
      EXPECT_EQ(complement(c, s), p);
      EXPECT_EQ(p.weight() + c.weight(), s.weight());
    }
  }
}

TEST(Subdiagrams, CountsAndContainment) {
  const Partition outer{2, 1};
  const auto subs = subdiagrams(outer);
  EXPECT_EQ(subs, (std::vector<Partition>{Partition{}, Partition{1},
                                          Partition{1, 1}, Partition{2},
                                          Partition{2, 1}}));
  for (const auto& p : subs) EXPECT_TRUE(is_subdiagram(p, outer));
  EXPECT_FALSE(is_subdiagram(Partition{3}, outer));
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(1, 2), 0);
  EXPECT_EQ(binomial(0, 2), 0);
  EXPECT_EQ(binomial(4, 2), 6);
}

}  // namespace
}  // namespace hornlr
