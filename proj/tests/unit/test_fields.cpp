#include <gtest/gtest.h>

#include "monosite/fields.hpp"
#include "oracles.hpp"

using namespace monosite;
using monosite::testing::NaiveField;

namespace {

const std::vector<std::pair<std::uint32_t, unsigned>> kSmallFields = {
    {2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6}, {3, 4}};

}  // namespace

TEST(Fields, ArithmeticMatchesSchoolbookReference) {
  for (auto [p, m] : kSmallFields) {
    const Field F = Field::finite(p, m);
    const NaiveField ref(F.descriptor());
    for (std::uint64_t a = 0; a < F.size(); ++a)
      for (std::uint64_t b = 0; b < F.size(); ++b) {
        ASSERT_EQ(F.mul(F.element(a), F.element(b)).index(), ref.mul(a, b)) << p << "^" << m;
        ASSERT_EQ(F.add(F.element(a), F.element(b)).index(), ref.add(a, b)) << p << "^" << m;
      }
  }
}

TEST(Fields, AxiomsExhaustiveUpTo81) {
  for (auto [p, m] : kSmallFields) {
    const Field F = Field::finite(p, m);
    if (F.size() > 81) continue;
    const auto els = F.elements();
    for (const auto& a : els) {
      EXPECT_EQ(F.add(a, F.zero()), a);
      EXPECT_EQ(F.mul(a, F.one()), a);
      EXPECT_TRUE(F.is_zero(F.add(a, F.neg(a))));
      if (!F.is_zero(a)) EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
      EXPECT_EQ(F.pow(a, F.size()), a);
      for (const auto& b : els) {
        EXPECT_EQ(F.add(a, b), F.add(b, a));
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        EXPECT_EQ(F.sub(F.add(a, b), b), a);
        for (const auto& c : els) {
          ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
          ASSERT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
          ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST(Fields, ModulusIsLeastIrreducible) {
  for (auto [p, m] : kSmallFields) {
    if (m == 1) continue;
    const auto fd = build_extension(p, m);
    ASSERT_EQ(fd.modulus.size(), m + 1u);
    EXPECT_EQ(fd.modulus.back(), 1u);
    EXPECT_TRUE(monosite::testing::irreducible_by_trial_division(fd.modulus, p)) << p << "^" << m;
    // Lex order compares c0 first, then c1, ...
    for (const auto& g : monosite::testing::monic_polys(p, m)) {
      if (g == fd.modulus) break;
      const bool smaller = std::lexicographical_compare(g.begin(), g.end(), fd.modulus.begin(), fd.modulus.end());
      if (smaller) EXPECT_FALSE(monosite::testing::irreducible_by_trial_division(g, p));
    }
  }
}

TEST(Fields, DescriptorExamples) {
  const auto f25 = build_extension(5, 2);
  EXPECT_EQ(f25.kind, FieldKind::Extension);
  EXPECT_EQ(f25.cardinality(), 25u);
  EXPECT_EQ(build_extension(7, 1).kind, FieldKind::Prime);
  EXPECT_EQ(Field::from_descriptor(f25), Field::finite(5, 2));
}

TEST(Fields, Errors) {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind([] { build_extension(6, 1); }), ErrorKind::NonPrime);
  EXPECT_EQ(kind([] { build_extension(2, 13); }), ErrorKind::DegreeTooLarge);
  EXPECT_EQ(kind([] { Field::rationals().elements(); }), ErrorKind::NotFinite);
  EXPECT_EQ(kind([] { pth_root(Field::rationals(), Field::rationals().one()); }), ErrorKind::CharacteristicZero);
  FieldDescriptor bad = build_extension(3, 2);
  bad.modulus = {0, 0, 1};
  EXPECT_EQ(kind([&] { Field::from_descriptor(bad); }), ErrorKind::InvalidArgument);
}

TEST(Fields, PthRootInvertsFrobenius) {
  for (auto [p, m] : kSmallFields) {
    const Field F = Field::finite(p, m);
    for (const auto& a : F.elements()) EXPECT_EQ(F.pow(pth_root(F, a), p), a);
  }
}

TEST(Fields, Rationals) {
  const Field Q = Field::rationals();
  const auto a = Q.from_rational(mpq_class(3, 4));
  EXPECT_EQ(Q.mul(a, Q.inv(a)), Q.one());
  EXPECT_EQ(Q.format(Q.from_rational(mpq_class(-6, 4))), "-3/2");
  EXPECT_EQ(Q.pow(Q.from_int(-2), 5), Q.from_int(-32));
}

TEST(Fields, FormatAndPrimeSubfieldEmbedding) {
  const Field F = Field::finite(5, 2);
  EXPECT_EQ(F.format(F.generator()), "t");
  EXPECT_EQ(F.format(F.element(11)), "2t + 1");
  EXPECT_EQ(F.from_int(-1).index(), 4u);
  EXPECT_EQ(F.from_rational(mpq_class(1, 2)), F.inv(F.from_int(2)));
}

TEST(Fields, LargeSlowModeConsistent) {
  // F_{2^40} uses digit arithmetic; check inverse and Fermat on a sample.
  const Field F = Field::finite(2, 40);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = F.element(rng() % F.size());
    if (F.is_zero(a)) continue;
    EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
    const auto b = F.element(rng() % F.size());
    EXPECT_EQ(F.pow(F.mul(a, b), 2), F.mul(F.pow(a, 2), F.pow(b, 2)));
  }
}
