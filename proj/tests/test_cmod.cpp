#include "sepcat/cmod.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "sepcat/presentations.hpp"

namespace sepcat {
namespace {

using testing::mat;
using testing::vec;

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime_field(2);
const FieldSpec kF3 = FieldSpec::prime_field(3);

bool mentions(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

template <class S>
std::vector<FinLinCat<S>> sample_categories(const FieldSpec& k) {
  std::vector<FinLinCat<S>> out;
  out.push_back(linearize<S>(group_category(cyclic_group(2)), k));
  out.push_back(linearize<S>(group_category(cyclic_group(3)), k));
  out.push_back(linearize<S>(chain_poset(2), k));
  out.push_back(linearize<S>(chain_poset(3), k));
  out.push_back(linearize<S>(discrete_category(2), k));
  out.push_back(linearize<S>(connected_groupoid({"p", "q"}, cyclic_group(2)), k));
  out.push_back(linearize<S>(transformation_monoid(2, {{0, 0}}), k));
  for (std::uint64_t seed = 1; seed <= 6; ++seed) out.push_back(linearize<S>(random_presentation(seed), k));
  return out;
}

TEST(CanonicalBimodule, GroupAlgebraIsTheRegularBimodule) {
  const auto c = testing::z2_by_hand<Rational>(kQ);
  const Bimodule<Rational> m = canonical_bimodule(c);
  EXPECT_EQ(m.dim(0, 0), 2);
  const Matrix<Rational> g = mat<Rational>(kQ, 2, 2, {0, 1, 1, 0});
  EXPECT_TRUE(equal(m.left(c.label_id("g"), 0), g));
  EXPECT_TRUE(equal(m.right(c.label_id("g"), 0), g));
  EXPECT_TRUE(equal(m.left(c.label_id("e"), 0), identity<Rational>(2)));
  EXPECT_TRUE(validate_module(c, m).ok);
}

TEST(CanonicalBimodule, A2Dimensions) {
  const auto c = testing::a2_by_hand<Rational>(kQ);
  const Bimodule<Rational> m = canonical_bimodule(c);
  const ObjectId x = c.object_id("x");
  const ObjectId y = c.object_id("y");
  EXPECT_EQ(m.dim(x, x), 1);
  EXPECT_EQ(m.dim(y, y), 1);
  EXPECT_EQ(m.dim(y, x), 1);
  EXPECT_EQ(m.dim(x, y), 0);
  EXPECT_TRUE(validate_module(c, m).ok);
}

TEST(CanonicalBimodule, DiscreteCategory) {
  const auto c = linearize<Rational>(discrete_category(2), kQ);
  const Bimodule<Rational> m = canonical_bimodule(c);
  EXPECT_EQ(m.dims(), (std::vector<Index>{1, 0, 0, 1}));
}

TEST(TensorSquare, GroupAlgebra) {
  const auto c = testing::z2_by_hand<Rational>(kQ);
  const TensorSquare<Rational> t = tensor_square(c);
  EXPECT_EQ(t.bimodule.dim(0, 0), 4);
  // Columns e(x)e, e(x)g, g(x)e, g(x)g.
  EXPECT_TRUE(equal(t.comp.block(0, 0), mat<Rational>(kQ, 2, 4, {1, 0, 0, 1, 0, 1, 1, 0})));
  EXPECT_TRUE(validate_module(c, t.bimodule).ok);
  EXPECT_TRUE(validate_module(c, t.bimodule, canonical_bimodule(c), t.comp).ok);
}

TEST(TensorSquare, A2ComponentFromXToY) {
  const auto c = testing::a2_by_hand<Rational>(kQ);
  const TensorSquare<Rational> t = tensor_square(c);
  const ObjectId x = c.object_id("x");
  const ObjectId y = c.object_id("y");
  EXPECT_EQ(t.bimodule.dim(y, x), 2);
  EXPECT_EQ(tensor_square_offset(c, y, x, y), 1);
  EXPECT_TRUE(equal(t.comp.block(y, x), mat<Rational>(kQ, 1, 2, {1, 1})));
}

TEST(TensorSquare, CompIsSurjectiveBimoduleMap) {
  for (const auto& c : sample_categories<Zp>(kF3)) {
    const TensorSquare<Zp> t = tensor_square(c);
    const Bimodule<Zp> reg = canonical_bimodule(c);
    EXPECT_TRUE(validate_module(c, t.bimodule).ok);
    EXPECT_TRUE(validate_module(c, t.bimodule, reg, t.comp).ok);
    for (const auto& b : t.comp.blocks) EXPECT_EQ(rank<Zp>(b), b.rows());
  }
}

TEST(KernelOf, CompOfGroupAlgebra) {
  const auto c = testing::z2_by_hand<Rational>(kQ);
  const TensorSquare<Rational> t = tensor_square(c);
  const Subbimodule<Rational> k = kernel_of(c, t.bimodule, t.comp);
  EXPECT_EQ(k.bimodule.total_dim(), 2);
  EXPECT_TRUE(validate_module(c, k.bimodule).ok);
  EXPECT_TRUE(validate_module(c, k.bimodule, t.bimodule, k.inclusion).ok);
  EXPECT_TRUE(is_zero_matrix(multiply<Rational>(t.comp.block(0, 0), k.inclusion.block(0, 0))));
}

TEST(KernelOf, IdentityAndZeroMaps) {
  const auto c = testing::a2_by_hand<Rational>(kQ);
  const Bimodule<Rational> m = canonical_bimodule(c);
  EXPECT_EQ(kernel_of(c, m, identity_map(m)).bimodule.total_dim(), 0);
  const Subbimodule<Rational> k = kernel_of(c, m, zero_map(m, m));
  EXPECT_EQ(k.bimodule, m);
  EXPECT_EQ(k.inclusion, identity_map(m));
}

TEST(KernelOf, RankNullity) {
  for (const auto& c : sample_categories<Rational>(kQ)) {
    const TensorSquare<Rational> t = tensor_square(c);
    const Subbimodule<Rational> k = kernel_of(c, t.bimodule, t.comp);
    for (ObjectId x = 0; x < c.object_count(); ++x) {
      for (ObjectId y = 0; y < c.object_count(); ++y) {
        EXPECT_EQ(k.bimodule.dim(x, y), t.bimodule.dim(x, y) - rank<Rational>(t.comp.block(x, y)));
      }
    }
    EXPECT_TRUE(validate_module(c, k.bimodule).ok);
    EXPECT_TRUE(validate_module(c, k.bimodule, t.bimodule, k.inclusion).ok);
  }
}

TEST(ValidateModule, BrokenLeftActionNamesThePair) {
  const auto c = testing::z2_by_hand<Rational>(kQ);
  Bimodule<Rational> m = canonical_bimodule(c);
  m.left(c.label_id("g"), 0) = mat<Rational>(kQ, 2, 2, {2, 0, 0, 2});
  const ValidationReport r = validate_module(c, m);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, "left action not functorial on (g, g)"));
}

TEST(ValidateModule, NonCommutingActions) {
  // Left and right actions of a non-commutative monoid swapped on one side.
  const auto c = linearize<Rational>(transformation_monoid(2, {{0, 0}, {1, 0}}), kQ);
  Bimodule<Rational> m = canonical_bimodule(c);
  for (LabelId f = 0; f < c.label_count(); ++f) m.right(f, 0) = m.left(f, 0);
  EXPECT_FALSE(validate_module(c, m).ok);
}

TEST(ValidateModule, WrongShape) {
  const auto c = testing::z2_by_hand<Rational>(kQ);
  Bimodule<Rational> m = canonical_bimodule(c);
  m.left(c.label_id("g"), 0) = identity<Rational>(3);
  const ValidationReport r = validate_module(c, m);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, "wrong shape"));
}

TEST(ValidateModule, KernelCompSequenceIsExact) {
  for (const auto& c : sample_categories<Zp>(kF2)) {
    const ShortExactSeq<Zp> ses = kernel_comp_sequence(c);
    EXPECT_TRUE(validate_module(c, ses).ok);
  }
}

TEST(ValidateModule, BrokenSequence) {
  const auto c = testing::z2_by_hand<Rational>(kQ);
  ShortExactSeq<Rational> ses = kernel_comp_sequence(c);
  ses.q = zero_map(ses.n, ses.p);
  const ValidationReport r = validate_module(c, ses);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, "not surjective"));
}

TEST(ValidateModule, LeftModules) {
  for (const auto& c : sample_categories<Rational>(kQ)) {
    EXPECT_TRUE(validate_module(c, regular_left_module(c)).ok);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const LeftModule<Rational> m = random_left_module(c, seed, 3);
      EXPECT_TRUE(validate_module(c, m).ok);
    }
  }
  const auto z2 = testing::z2_by_hand<Rational>(kQ);
  LeftModule<Rational> broken(z2, {1});
  broken.action(z2.label_id("e")) = identity<Rational>(1);
  broken.action(z2.label_id("g")) = mat<Rational>(kQ, 1, 1, {2});
  const ValidationReport r = validate_module(z2, broken);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(mentions(r, "(g, g)"));
}

TEST(Representable, GroupAlgebraRegularBimodule) {
  const auto c = testing::z2_by_hand<Rational>(kQ);
  const Bimodule<Rational> p = representable(c, 0, 0);
  EXPECT_EQ(p.dim(0, 0), 4);
  EXPECT_TRUE(validate_module(c, p).ok);
  const Subbimodule<Rational> k = kernel_of(c, p, zero_map(p, p));
  EXPECT_EQ(k.bimodule, p);
  EXPECT_TRUE(validate_module(c, k.bimodule).ok);
}

TEST(Representable, EmptySumIsZero) {
  const auto c = testing::a2_by_hand<Rational>(kQ);
  const Bimodule<Rational> z = direct_sum(c, std::vector<Bimodule<Rational>>{});
  EXPECT_EQ(z.total_dim(), 0);
  EXPECT_TRUE(validate_module(c, z).ok);
}

TEST(Representable, YonedaMapIsABimoduleMap) {
  for (const auto& c : sample_categories<Rational>(kQ)) {
    const Bimodule<Rational> reg = canonical_bimodule(c);
    for (ObjectId a = 0; a < c.object_count(); ++a) {
      for (ObjectId b = 0; b < c.object_count(); ++b) {
        const Bimodule<Rational> p = representable(c, a, b);
        Vector<Rational> e(reg.dim(a, b));
        for (Index i = 0; i < e.size(); ++i) e(i) = Rational(static_cast<long>(i % 3) - 1);
        EXPECT_TRUE(validate_module(c, p, reg, yoneda_map(c, a, b, reg, e)).ok);
      }
    }
  }
}

TEST(RandomBimodule, ValidAndDeterministic) {
  for (const auto& c : sample_categories<Zp>(kF3)) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Bimodule<Zp> m = random_bimodule(c, seed, 2);
      EXPECT_TRUE(validate_module(c, m).ok);
      EXPECT_LE(m.max_component_dim(), 2);
      EXPECT_EQ(m, random_bimodule(c, seed, 2));
    }
  }
}

TEST(RandomBimodule, UsuallyNonzero) {
  const auto c = linearize<Rational>(group_category(cyclic_group(2)), kQ);
  int nonzero = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) nonzero += random_bimodule(c, seed, 2).total_dim() > 0;
  EXPECT_GE(nonzero, 8);
}

TEST(RandomShortExactSequence, Exact) {
  for (const auto& c : sample_categories<Rational>(kQ)) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      EXPECT_TRUE(validate_module(c, random_short_exact_sequence(c, seed)).ok);
    }
  }
}

}  // namespace
}  // namespace sepcat
