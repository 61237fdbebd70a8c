#include "hornlr/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "hornlr/tableaux.hpp"

namespace hornlr {
namespace {

using testing::brute_marked_shifted;
using testing::brute_ssyt;
using testing::Coefficients;

Coefficients as_coefficients(const MonomialMap& p) {
  Coefficients out;
  for (const auto& [e, c] : p.terms()) out[e] = c;
  return out;
}

std::vector<Partition> partitions_of_weight_at_most(int w, int max_len) {
  std::vector<Partition> out;
  for (const auto& p : partitions_in(Rectangle(max_len, w))) {
    if (p.weight() <= w) out.push_back(p);
  }
  return out;
}

std::vector<StrictPartition> strict_up_to(int n) {
  return strict_partitions_in(Staircase(n));
}

TEST(Tableaux, SchurMatchesBruteForce) {
  for (int N = 1; N <= 3; ++N) {
    for (const auto& lambda : partitions_of_weight_at_most(5, 3)) {
      ASSERT_EQ(as_coefficients(schur_poly(lambda, N)), brute_ssyt(lambda, N))
          << lambda.to_string() << " N=" << N;
    }
  }
}

TEST(Tableaux, MarkedShiftedMatchesBruteForce) {
  for (int N = 1; N <= 3; ++N) {
    for (const auto& lambda : strict_up_to(3)) {
      if (lambda.weight() > 5) continue;
      ASSERT_EQ(as_coefficients(schur_q_poly(lambda, N)),
                brute_marked_shifted(lambda.as_partition(), N, false))
          << lambda.to_string() << " N=" << N;
      ASSERT_EQ(as_coefficients(marked_shifted_polynomial(lambda, N,
                                                          DiagonalRule::unprimed)),
                brute_marked_shifted(lambda.as_partition(), N, true))
          << lambda.to_string() << " N=" << N;
    }
  }
}

TEST(Tableaux, PIsQOverPowerOfTwo) {
  for (int N = 1; N <= 4; ++N) {
    for (const auto& lambda : strict_up_to(4)) {
      const auto p = schur_p_poly(lambda, N);
      EXPECT_EQ(p, marked_shifted_polynomial(lambda, N, DiagonalRule::unprimed));
      MonomialMap scaled(N);
      scaled.add_scaled(p, std::int64_t{1} << lambda.length());
      EXPECT_EQ(scaled, schur_q_poly(lambda, N));
    }
  }
}

TEST(Tableaux, LayerMarkings) {
  // A single box: primed or unprimed unless the diagonal is fixed.
  EXPECT_EQ(layer_markings({}, {1}, DiagonalRule::free), 2);
  EXPECT_EQ(layer_markings({}, {1}, DiagonalRule::unprimed), 1);
  // Two boxes in a row: 1'1 or 11.
  EXPECT_EQ(layer_markings({}, {2}, DiagonalRule::free), 2);
  // Not a subdiagram.
  EXPECT_EQ(layer_markings({2}, {1}, DiagonalRule::free), 0);
}

TEST(Expansion, SmallProducts) {
  const auto s1 = schur_poly(Partition{1}, 2);
  const auto e = expand_in_basis(s1 * s1, Basis::schur);
  EXPECT_EQ(e, (std::map<Partition, std::int64_t>{{Partition{2}, 1},
                                                  {Partition{1, 1}, 1}}));
  const auto q1 = schur_q_poly(StrictPartition{1}, 2);
  EXPECT_EQ(expand_in_basis(q1 * q1, Basis::schur_q),
            (std::map<Partition, std::int64_t>{{Partition{2}, 2}}));
  const auto p1 = schur_p_poly(StrictPartition{1}, 2);
  EXPECT_EQ(expand_in_basis(p1 * p1, Basis::schur_p),
            (std::map<Partition, std::int64_t>{{Partition{2}, 1}}));
}

TEST(Expansion, QInThePBasis) {
  for (const auto& lambda : strict_up_to(5)) {
    if (lambda.empty()) continue;
    const int N = lambda.length();
    EXPECT_EQ(expand_in_basis(schur_q_poly(lambda, N), Basis::schur_p),
              (std::map<Partition, std::int64_t>{
                  {lambda.as_partition(), std::int64_t{1} << lambda.length()}}));
  }
}

TEST(Expansion, RejectsNonStrictLeadingTerm) {
  MonomialMap bad(2);
  bad.add({1, 1}, 1);  // fine for Schur, but Q needs a strict index
  EXPECT_THROW(expand_in_basis(bad, Basis::schur_q), InconsistencyError);
}

TEST(Coefficients, HandValues) {
  EXPECT_EQ(lr_a({2}, {1}, {1}), 1);
  EXPECT_EQ(lr_a({1, 1}, {1}, {1}), 1);
  EXPECT_EQ(lr_a({3, 2, 1}, {2, 1}, {2, 1}), 2);
  EXPECT_EQ(lr_a({2, 2}, {2, 1}, {1}), 1);
  EXPECT_EQ(lr_a({3}, {2, 1}, {}), 0);
  EXPECT_EQ(lr_c({2}, {1}, {1}), 2);
  EXPECT_EQ(lr_d({2}, {1}, {1}), 1);
  EXPECT_EQ(lr_c({3}, {2}, {1}), 2);
  EXPECT_EQ(lr_c({2, 1}, {2}, {1}), 1);
  EXPECT_EQ(lr_d({3}, {2}, {1}), 1);
  EXPECT_EQ(lr_d({2, 1}, {2}, {1}), 1);
  EXPECT_EQ(lr_d_direct({2, 1}, {2}, {1}), 1);
}

TEST(Coefficients, RejectsTooFewVariables) {
  EXPECT_THROW(lr_a({1, 1}, {1}, {1}, 1), InvalidArgument);
  EXPECT_EQ(lr_a({1, 1}, {1}, {1}, 4), 1);
}

TEST(Coefficients, PieriRule) {
  const Rectangle box(3, 4);
  for (const auto& lambda : partitions_in(box)) {
    for (const auto& mu : partitions_in(box)) {
      const int k = lambda.weight() - mu.weight();
      if (k < 0 || k > 4) continue;
      bool strip = is_subdiagram(mu, lambda);
      for (int i = 1; strip && i <= 3; ++i) {
        if (lambda[i + 1] > mu[i]) strip = false;  // two boxes in a column
      }
      EXPECT_EQ(lr_a(lambda, mu, k == 0 ? Partition{} : Partition{k}),
                strip ? 1 : 0)
          << lambda.to_string() << " / " << mu.to_string();
    }
  }
}

TEST(Coefficients, ShiftedPieriForOneBox) {
  for (const auto& lambda : strict_up_to(5)) {
    for (const auto& mu : strict_up_to(5)) {
      if (lambda.weight() != mu.weight() + 1) continue;
      const bool adds_box = is_subdiagram(mu.as_partition(), lambda.as_partition());
      EXPECT_EQ(lr_d(lambda, mu, {1}), adds_box ? 1 : 0);
      EXPECT_EQ(lr_d_direct(lambda, mu, {1}), adds_box ? 1 : 0);
    }
  }
}

TEST(Properties, ConjugationAndCommutativity) {
  const auto shapes = partitions_of_weight_at_most(5, 3);
  for (const auto& lambda : shapes) {
    for (const auto& mu : shapes) {
      for (const auto& nu : shapes) {
        if (lambda.weight() != mu.weight() + nu.weight()) continue;
        const auto a = lr_a(lambda, mu, nu);
        EXPECT_EQ(a, lr_a(lambda, nu, mu));
        EXPECT_EQ(a, lr_a(conjugate(lambda), conjugate(mu), conjugate(nu)));
      }
    }
  }
}

TEST(Properties, ProportionalityAndHomogeneity) {
  const auto strict = strict_up_to(4);
  for (const auto& lambda : strict) {
    for (const auto& mu : strict) {
      for (const auto& nu : strict) {
        const auto c = lr_c(lambda, mu, nu);
        const auto d = lr_d_direct(lambda, mu, nu);
        if (lambda.weight() != mu.weight() + nu.weight()) {
          EXPECT_EQ(c, 0);
          EXPECT_EQ(d, 0);
          continue;
        }
        EXPECT_EQ(d << (mu.length() + nu.length()), c << lambda.length());
        EXPECT_EQ(d, lr_d(lambda, mu, nu));
      }
    }
  }
}

TEST(Properties, Identity) {
  for (const auto& lambda : partitions_in(Rectangle(3, 3))) {
    EXPECT_EQ(lr_a(lambda, lambda, {}), 1);
    EXPECT_EQ(lr_a(lambda, {}, lambda), 1);
  }
  for (const auto& lambda : strict_up_to(4)) {
    EXPECT_EQ(lr_c(lambda, lambda, {}), 1);
    EXPECT_EQ(lr_d(lambda, {}, lambda), 1);
  }
}

TEST(Properties, VariableCountStability) {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 60; ++trial) {
    const auto lambda = testing::random_partition(rng, 3, 3);
    const auto mu = testing::random_partition(rng, 3, 2);
    const auto nu = testing::random_partition(rng, 2, 2);
    const auto base = lr_a(lambda, mu, nu);
    const int N = std::max(lambda.length(), 1);
    EXPECT_EQ(lr_a(lambda, mu, nu, N + 1), base);
    EXPECT_EQ(lr_a(lambda, mu, nu, N + 2), base);

    const auto sl = testing::random_strict(rng, 4);
    const auto sm = testing::random_strict(rng, 3);
    const auto sn = testing::random_strict(rng, 3);
    const int M = std::max(sl.length(), 1);
    const auto c = lr_c(sl, sm, sn);
    EXPECT_EQ(lr_c(sl, sm, sn, M + 1), c);
    EXPECT_EQ(lr_c(sl, sm, sn, M + 2), c);
  }
}

TEST(Symmetrized, PermutationInvariant) {
  const Rectangle box(2, 3);
  const auto shapes = partitions_in(box);
  for (const auto& a : shapes) {
    for (const auto& b : shapes) {
      for (const auto& c : shapes) {
        const auto v = sym_a(a, b, c, box);
        EXPECT_EQ(v, sym_a(b, a, c, box));
        EXPECT_EQ(v, sym_a(c, b, a, box));
        EXPECT_EQ(v, sym_a(a, c, b, box));
      }
    }
  }
  const Staircase s(3);
  const auto strict = strict_partitions_in(s);
  for (const auto& a : strict) {
    for (const auto& b : strict) {
      for (const auto& c : strict) {
        EXPECT_EQ(sym_c(a, b, c, s), sym_c(b, c, a, s));
        EXPECT_EQ(sym_d(a, b, c, s), sym_d(c, a, b, s));
        EXPECT_EQ(sym_c(a, b, c, s) != 0, sym_d(a, b, c, s) != 0);
      }
    }
  }
}

TEST(Symmetrized, RejectsShapesOutsideTheBox) {
  EXPECT_THROW(sym_a({4}, {}, {}, Rectangle(2, 3)), InvalidArgument);
  EXPECT_THROW(sym_c({4}, {}, {}, Staircase(3)), InvalidArgument);
}

TEST(Cache, ClearingDoesNotChangeResults) {
  const auto before = lr_a({3, 2, 1}, {2, 1}, {2, 1});
  clear_oracle_cache();
  EXPECT_EQ(lr_a({3, 2, 1}, {2, 1}, {2, 1}), before);
}

}  // namespace
}  // namespace hornlr
