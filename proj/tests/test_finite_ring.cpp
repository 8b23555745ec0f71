#include "rbchar/finite_ring.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace rbchar;
using rbtest::Rng;

namespace {

const CoeffRing Z = CoeffRing::integers();

/// Z/2 × Z/4 as a product ring with idempotents e_0, e_1.
FiniteRing z2_times_z4() { return FiniteRing({2, 4}, {1, 1}, {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}); }

AscentSet zset(std::vector<std::pair<std::size_t, long>> pairs) {
  std::vector<AscentPair> out;
  for (auto [s, w] : pairs) out.push_back({s, KIdeal(Z, w)});
  return AscentSet(Z, std::move(out));
}

}  // namespace

TEST(FiniteRing, Construction) {
  FiniteRing r = z2_times_z4();
  EXPECT_EQ(r.size(), 8u);
  EXPECT_EQ(r.elements().size(), 8u);
  EXPECT_EQ(r.mul({1, 3}, {1, 3}), (RingElem{1, 1}));
  EXPECT_EQ(r.add({1, 3}, {1, 3}), (RingElem{0, 2}));
  EXPECT_EQ(r.scale(mpz_class(-1), {1, 3}), (RingElem{1, 1}));
  // e_0 · e_0 = 2 e_1 is not compatible with 2 e_0 = 0 -> 4 e_1 = 0 is fine,
  // but e_0 · e_1 = e_1 breaks 2 e_0 = 0 (it would force 2 e_1 = 0).
  EXPECT_THROW(FiniteRing({2, 4}, {1, 1}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}}), std::invalid_argument);
  EXPECT_THROW(FiniteRing({4}, {2}, {{{1}}}), std::invalid_argument);
  EXPECT_THROW(FiniteRing({0}, {1}, {{{1}}}), std::invalid_argument);
  EXPECT_THROW(FiniteRing({3, 3}, {1, 0}, {{{1, 0}, {0, 1}}, {{0, 0}, {0, 1}}}), std::invalid_argument);
}

TEST(Operators, VerifyExamples) {
  FiniteRing z2 = FiniteRing::zmod(2);
  EXPECT_TRUE(verify_rb_operator(z2, RBOperatorTable::identity(1), 1));
  EXPECT_FALSE(verify_rb_operator(FiniteRing::zmod(4), RBOperatorTable::multiplication_by(2), 1));
  FiniteRing prod = z2_times_z4();
  for (long w = -2; w <= 3; ++w) {
    EXPECT_TRUE(verify_rb_operator(prod, RBOperatorTable::zero(2), w));
    EXPECT_TRUE(verify_rb_operator(FiniteRing::zmod(6), RBOperatorTable::zero(1), w));
  }
  EXPECT_TRUE(verify_rb_operator(prod, RBOperatorTable({{1, 0}, {0, 3}}), 1));
  EXPECT_FALSE(verify_rb_operator(prod, RBOperatorTable({{1, 0}, {0, 1}}), 1));
  EXPECT_THROW(verify_rb_operator(prod, RBOperatorTable({{0, 1}, {0, 0}}), 1), IllDefinedOperator);
  EXPECT_THROW(verify_rb_operator(prod, RBOperatorTable(std::vector<std::vector<std::int64_t>>{{0}}), 1), IllDefinedOperator);
}

TEST(Operators, EnumerationMatchesClosedCondition) {
  EXPECT_EQ(enumerate_rb_operators(4, 1), (std::vector<std::int64_t>{0, 3}));
  EXPECT_EQ(enumerate_rb_operators(2, 0), (std::vector<std::int64_t>{0}));
  for (std::int64_t n = 2; n <= 16; ++n) {
    for (std::int64_t w = -2; w < n; ++w) {
      std::vector<std::int64_t> expected;
      for (std::int64_t c = 0; c < n; ++c)
        if (((c * c + w * c) % n + n) % n == 0) expected.push_back(c);
      EXPECT_EQ(enumerate_rb_operators(n, w), expected) << n << ' ' << w;
    }
  }
  EXPECT_THROW(enumerate_rb_operators(1, 0), std::invalid_argument);
}

TEST(StructureMap, Images) {
  auto images = structure_map_images(FiniteRing::zmod(4), RBOperatorTable::multiplication_by(3), 1, 4);
  EXPECT_EQ(images, (std::vector<RingElem>{{1}, {3}, {1}, {3}, {1}}));
  auto zero = structure_map_images(z2_times_z4(), RBOperatorTable::zero(2), 5, 3);
  EXPECT_EQ(zero, (std::vector<RingElem>{{1, 1}, {0, 0}, {0, 0}, {0, 0}}));
  auto id = structure_map_images(FiniteRing::zmod(2), RBOperatorTable::identity(1), 1, 3);
  EXPECT_EQ(id, (std::vector<RingElem>{{1}, {1}, {1}, {1}}));
  EXPECT_THROW(structure_map_images(FiniteRing::zmod(4), RBOperatorTable::multiplication_by(2), 1, 3),
               UnverifiedOperator);
}

TEST(StructureMap, IsAHomomorphism) {
  Rng rng(51);
  struct Case {
    FiniteRing ring;
    RBOperatorTable op;
    long weight;
  };
  std::vector<Case> cases{{FiniteRing::zmod(4), RBOperatorTable::multiplication_by(3), 1},
                          {FiniteRing::zmod(12), RBOperatorTable::multiplication_by(8), 4},
                          {FiniteRing::zmod(9), RBOperatorTable::multiplication_by(3), 0},
                          {z2_times_z4(), RBOperatorTable({{1, 0}, {0, 3}}), 1},
                          {FiniteRing::zmod(10), RBOperatorTable::multiplication_by(5), -5}};
  for (const auto& c : cases) {
    auto images = structure_map_images(c.ring, c.op, c.weight, 14);
    AlgebraCtx ctx(Z, c.weight);
    for (int trial = 0; trial < 30; ++trial) {
      RBElement f = rbtest::random_element(ctx, rng, 6, 50), g = rbtest::random_element(ctx, rng, 6, 50);
      EXPECT_EQ(apply_structure_map(c.ring, images, diamond(f, g)),
                c.ring.mul(apply_structure_map(c.ring, images, f), apply_structure_map(c.ring, images, g)));
      EXPECT_EQ(apply_structure_map(c.ring, images, operator_p(f)),
                c.op.apply(c.ring, apply_structure_map(c.ring, images, f)));
    }
  }
}

TEST(Characteristic, Examples) {
  auto r = characteristic(FiniteRing::zmod(4), RBOperatorTable::multiplication_by(3), 1, 6);
  EXPECT_EQ(r.ascent, zset({{0, 4}, {1, 1}}));
  EXPECT_TRUE(r.stable);
  EXPECT_EQ(r.orbit_start, 0u);
  EXPECT_EQ(r.orbit_period, 2u);

  auto zero = characteristic(z2_times_z4(), RBOperatorTable::zero(2), 2, 5);
  EXPECT_EQ(zero.ascent, zset({{0, 4}, {1, 1}}));
  auto z6 = characteristic(FiniteRing::zmod(6), RBOperatorTable::zero(1), 0, 5);
  EXPECT_EQ(z6.ascent, zset({{0, 6}, {1, 1}}));

  auto id = characteristic(FiniteRing::zmod(2), RBOperatorTable::identity(1), 1, 5);
  EXPECT_EQ(id.ascent, zset({{0, 2}, {1, 1}}));

  auto prod = characteristic(z2_times_z4(), RBOperatorTable({{1, 0}, {0, 3}}), 1, 6);
  EXPECT_EQ(prod.ascent, zset({{0, 4}, {1, 1}}));
}

TEST(Characteristic, WitnessesAndExhaustiveCompleteness) {
  for (std::int64_t n = 2; n <= 8; ++n) {
    for (std::int64_t w = 0; w < n; ++w) {
      for (std::int64_t c : enumerate_rb_operators(n, w)) {
        FiniteRing ring = FiniteRing::zmod(n);
        auto op = RBOperatorTable::multiplication_by(c);
        auto r = characteristic(ring, op, w, 6);
        EXPECT_TRUE(r.stable);
        for (std::size_t j = 0; j < r.omegas.size(); ++j) {
          if (r.omegas[j].is_zero()) {
            EXPECT_FALSE(r.witnesses[j]);
            continue;
          }
          ASSERT_TRUE(r.witnesses[j]);
          EXPECT_EQ(r.witnesses[j]->degree(), j);
          EXPECT_EQ(KIdeal::generated_by(Z, r.witnesses[j]->initial_term()->coeff), r.omegas[j]);
          EXPECT_EQ(apply_structure_map(ring, r.images, *r.witnesses[j]), ring.zero());
        }
        // Every kernel element of degree <= 3 with |b_i| <= n has its leading
        // coefficient in the computed ideal.
        std::vector<std::int64_t> phi;
        for (std::size_t i = 0; i <= 3; ++i) phi.push_back(r.images[i][0]);
        for (std::size_t d = 0; d <= 3; ++d) {
          std::vector<std::int64_t> b(d + 1, -n);
          for (;;) {
            if (b[d] != 0) {
              std::int64_t sum = 0;
              for (std::size_t i = 0; i <= d; ++i) sum += b[i] * phi[i];
              if (sum % n == 0) EXPECT_TRUE(kideal_contains(r.omegas[d], Z.make(b[d])));
            }
            std::size_t i = 0;
            while (i <= d && b[i] == n) b[i++] = -n;
            if (i > d) break;
            ++b[i];
          }
        }
      }
    }
  }
}

TEST(Characteristic, UnstableBelowTheOrbit) {
  auto r = characteristic(FiniteRing::zmod(4), RBOperatorTable::multiplication_by(3), 1, 0);
  EXPECT_FALSE(r.stable);
  EXPECT_EQ(r.ascent, zset({{0, 4}}));
  auto z8 = characteristic(FiniteRing::zmod(8), RBOperatorTable::multiplication_by(2), -2, 6);
  EXPECT_TRUE(z8.stable);
  EXPECT_EQ(z8.orbit_start, 3u);
  EXPECT_EQ(z8.orbit_period, 1u);
  EXPECT_EQ(z8.ascent, zset({{0, 8}, {1, 1}}));
}
