#include "rbchar/ring.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace rbchar;

namespace {

std::set<long> residue_span(long n, std::initializer_list<long> gens) {
  std::set<long> out{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (long x : std::set<long>(out))
      for (long g : gens)
        if (out.insert(((x + g) % n + n) % n).second) grew = true;
  }
  return out;
}

std::set<long> as_set(const KIdeal& ideal) {
  long n = ideal.ring().modulus().get_si();
  return residue_span(n, {ideal.generator().get_si()});
}

}  // namespace

TEST(CoeffRing, ParsesDescriptors) {
  EXPECT_EQ(CoeffRing::parse("z").kind(), CoeffRing::Kind::Integers);
  EXPECT_EQ(CoeffRing::parse("q").kind(), CoeffRing::Kind::Rationals);
  CoeffRing r = CoeffRing::parse("z:12");
  EXPECT_EQ(r.kind(), CoeffRing::Kind::IntegersMod);
  EXPECT_EQ(r.modulus(), 12);
  EXPECT_EQ(r.descriptor(), "z:12");
  EXPECT_EQ(r.display(), "Z/12");
  EXPECT_THROW(CoeffRing::parse("z:1"), std::invalid_argument);
  EXPECT_THROW(CoeffRing::parse("r"), std::invalid_argument);
  EXPECT_THROW(CoeffRing::parse("z:"), std::invalid_argument);
  EXPECT_THROW(CoeffRing::integers_mod(0), std::invalid_argument);
}

TEST(CoeffRing, CanonicalValues) {
  CoeffRing q = CoeffRing::rationals();
  Coeff c = q.make(mpq_class(6, -4));
  EXPECT_EQ(c.value(), mpq_class(-3, 2));
  EXPECT_EQ(to_string(c), "-3/2");

  CoeffRing z12 = CoeffRing::integers_mod(12);
  EXPECT_EQ(to_string(z12.make(-1)), "11");
  EXPECT_EQ(to_string(z12.make(mpq_class(1, 5))), "5");
  EXPECT_THROW(z12.make(mpq_class(1, 2)), std::domain_error);

  CoeffRing z = CoeffRing::integers();
  EXPECT_THROW(z.make(mpq_class(1, 2)), std::domain_error);
  EXPECT_EQ(to_string(z.parse_coeff("-17")), "-17");
  EXPECT_EQ(to_string(q.parse_coeff("4/6")), "2/3");
}

TEST(CoeffRing, Arithmetic) {
  CoeffRing z7 = CoeffRing::integers_mod(7);
  EXPECT_EQ(z7.add(z7.make(5), z7.make(4)), z7.make(2));
  EXPECT_EQ(z7.mul(z7.make(3), z7.make(5)), z7.make(1));
  EXPECT_EQ(z7.neg(z7.make(3)), z7.make(4));
  EXPECT_EQ(z7.pow(z7.make(3), 6), z7.make(1));
  CoeffRing z = CoeffRing::integers();
  EXPECT_EQ(z.pow(z.make(-2), 5), z.make(-32));
  EXPECT_EQ(z.sub(z.make(2), z.make(9)), z.make(-7));
}

TEST(KIdeal, CanonicalGenerators) {
  CoeffRing z = CoeffRing::integers();
  EXPECT_EQ(KIdeal(z, -6).generator(), 6);
  EXPECT_EQ(KIdeal(z, -6).to_string(), "6Z");
  EXPECT_EQ(KIdeal::unit(z).to_string(), "Z");
  EXPECT_EQ(KIdeal::zero(z).to_string(), "0");
  CoeffRing q = CoeffRing::rationals();
  EXPECT_EQ(KIdeal(q, 7).generator(), 1);
  EXPECT_EQ(KIdeal(q, 7).to_string(), "Q");
  CoeffRing z12 = CoeffRing::integers_mod(12);
  EXPECT_EQ(KIdeal(z12, 8).generator(), 4);
  EXPECT_EQ(KIdeal(z12, 12).generator(), 0);
  EXPECT_EQ(KIdeal(z12, 2).to_string(), "2(Z/12)");
}

TEST(KIdeal, AddExamples) {
  CoeffRing z = CoeffRing::integers();
  EXPECT_EQ(kideal_add(KIdeal(z, 4), KIdeal(z, 6)), KIdeal(z, 2));
  EXPECT_EQ(kideal_add(KIdeal::zero(z), KIdeal(z, 9)), KIdeal(z, 9));
  CoeffRing z12 = CoeffRing::integers_mod(12);
  KIdeal sum = kideal_add(KIdeal(z12, 4), KIdeal(z12, 6));
  EXPECT_EQ(sum.generator(), 2);
  EXPECT_EQ(as_set(sum), residue_span(12, {4, 6}));
  EXPECT_THROW(kideal_add(KIdeal(z, 2), KIdeal(z12, 2)), RingMismatch);
}

TEST(KIdeal, ContainsAndOrder) {
  CoeffRing z = CoeffRing::integers();
  EXPECT_TRUE(kideal_contains(KIdeal(z, 6), z.make(12)));
  EXPECT_FALSE(kideal_contains(KIdeal(z, 6), z.make(4)));
  CoeffRing q = CoeffRing::rationals();
  EXPECT_TRUE(kideal_contains(KIdeal::unit(q), q.make(mpq_class(-5, 3))));
  EXPECT_TRUE(kideal_leq(KIdeal(z, 6), KIdeal(z, 2)));
  EXPECT_FALSE(kideal_leq(KIdeal(z, 2), KIdeal(z, 6)));
  EXPECT_TRUE(kideal_leq(KIdeal::zero(z), KIdeal::zero(z)));
  EXPECT_TRUE(kideal_leq(KIdeal::zero(z), KIdeal(z, 5)));
  EXPECT_FALSE(kideal_leq(KIdeal(z, 5), KIdeal::zero(z)));
}

TEST(KIdeal, LatticeLawsOverIntegers) {
  CoeffRing z = CoeffRing::integers();
  for (long a = 0; a <= 24; ++a) {
    for (long b = 0; b <= 24; ++b) {
      KIdeal A(z, a), B(z, b);
      KIdeal S = kideal_add(A, B);
      EXPECT_EQ(S, kideal_add(B, A));
      EXPECT_TRUE(kideal_leq(A, S));
      EXPECT_TRUE(kideal_leq(B, S));
      EXPECT_EQ(S.generator(), std::gcd(a, b));
      EXPECT_EQ(kideal_add(A, A), A);
      bool leq_ab = kideal_leq(A, B), leq_ba = kideal_leq(B, A);
      EXPECT_EQ(leq_ab && leq_ba, A == B);
      for (long c = 0; c <= 12; ++c) {
        KIdeal C(z, c);
        EXPECT_EQ(kideal_add(kideal_add(A, B), C), kideal_add(A, kideal_add(B, C)));
        if (leq_ab && kideal_leq(B, C)) EXPECT_TRUE(kideal_leq(A, C));
      }
    }
  }
}

TEST(KIdeal, ModularIdealsMatchResidueSets) {
  for (long n = 2; n <= 24; ++n) {
    CoeffRing r = CoeffRing::integers_mod(n);
    for (long a = 0; a < n; ++a) {
      KIdeal A(r, a);
      ASSERT_EQ(as_set(A), residue_span(n, {a}));
      for (long c = 0; c < n; ++c)
        EXPECT_EQ(kideal_contains(A, r.make(c)), residue_span(n, {a}).count(c) == 1);
      for (long b = 0; b < n; ++b) {
        KIdeal B(r, b);
        auto sa = residue_span(n, {a}), sb = residue_span(n, {b});
        EXPECT_EQ(as_set(kideal_add(A, B)), residue_span(n, {a, b}));
        bool subset = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
        EXPECT_EQ(kideal_leq(A, B), subset) << n << ' ' << a << ' ' << b;
      }
    }
  }
}

TEST(KIdeal, Residues) {
  CoeffRing z = CoeffRing::integers();
  EXPECT_EQ(residue(KIdeal(z, 5), z.make(-7)), z.make(3));
  EXPECT_EQ(residue(KIdeal::zero(z), z.make(-7)), z.make(-7));
  CoeffRing q = CoeffRing::rationals();
  EXPECT_EQ(residue(KIdeal::unit(q), q.make(mpq_class(2, 3))), q.zero());
  CoeffRing z12 = CoeffRing::integers_mod(12);
  EXPECT_EQ(residue(KIdeal(z12, 4), z12.make(11)), z12.make(3));
}
