#include <gtest/gtest.h>

#include <vector>

#include "ghw/error.hpp"
#include "ghw/field.hpp"

using namespace ghw;

namespace {

// Evaluates a polynomial over F_p (constant term first) at t.
unsigned eval_mod(const std::vector<unsigned>& poly, unsigned t, unsigned p) {
  unsigned acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * t + poly[i]) % p;
  return acc;
}

// For degree 2 and 3 irreducible means no root in F_p.
std::vector<unsigned> smallest_rootless_monic(unsigned p, unsigned e) {
  unsigned count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (unsigned c = 0; c < count; ++c) {
    std::vector<unsigned> poly(e + 1, 0);
    poly[e] = 1;
    unsigned rest = c;
    for (unsigned i = e; i-- > 0;) {
      poly[i] = rest % p;
      rest /= p;
    }
    bool root = false;
    for (unsigned t = 0; t < p; ++t) root = root || eval_mod(poly, t, p) == 0;
    if (!root) return poly;
  }
  return {};
}

std::vector<unsigned> modulus_of(const Field& f) { return {f.modulus().begin(), f.modulus().end()}; }

}  // namespace

TEST(Field, PrimeFields) {
  const Field f2 = Field::make(2, 1);
  EXPECT_EQ(f2.order(), 2u);
  EXPECT_EQ(f2.degree(), 1u);
  const Field f3 = Field::make(3);
  EXPECT_EQ(f3.order(), 3u);
  EXPECT_EQ(f3.characteristic(), 3u);
}

TEST(Field, Gf4ModulusIsSmallestIrreducible) {
  const Field f = Field::make(2, 2);
  EXPECT_EQ(modulus_of(f), smallest_rootless_monic(2, 2));
  EXPECT_EQ(modulus_of(f), (std::vector<unsigned>{1, 1, 1}));
}

TEST(Field, CubicModuli) {
  EXPECT_EQ(modulus_of(Field::make(2, 3)), smallest_rootless_monic(2, 3));
  EXPECT_EQ(modulus_of(Field::make(3, 3)), smallest_rootless_monic(3, 3));
  EXPECT_EQ(modulus_of(Field::make(3, 2)), smallest_rootless_monic(3, 2));
}

TEST(Field, OfOrderFactors) {
  EXPECT_EQ(Field::of_order(9), Field::make(3, 2));
  EXPECT_EQ(Field::of_order(8).degree(), 3u);
  EXPECT_THROW(Field::of_order(6), DomainError);
  EXPECT_THROW(Field::of_order(1), DomainError);
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(Field::make(4, 1), DomainError);
  EXPECT_THROW(Field::make(1, 1), DomainError);
  EXPECT_THROW(Field::make(2, 0), DomainError);
  EXPECT_THROW(Field::make(2, 17), DomainError);
  EXPECT_NO_THROW(Field::make(2, 16));
}

TEST(Field, Addition) {
  const Field f2 = Field::make(2), f3 = Field::make(3), f4 = Field::make(2, 2);
  EXPECT_EQ(f2.add(kOne, kOne), kZero);
  EXPECT_EQ(f3.add(Elem{2}, Elem{2}), Elem{1});
  // x = code 2, x + 1 = code 3
  EXPECT_EQ(f4.add(Elem{2}, Elem{3}), kOne);
}

TEST(Field, Multiplication) {
  const Field f3 = Field::make(3), f4 = Field::make(2, 2);
  EXPECT_EQ(f3.mul(Elem{2}, Elem{2}), kOne);
  EXPECT_EQ(f4.mul(Elem{2}, Elem{2}), Elem{3});
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    const Field f = Field::of_order(q);
    for (Elem a : f.elements()) EXPECT_EQ(f.mul(a, kZero), kZero);
  }
}

TEST(Field, Inverse) {
  const Field f3 = Field::make(3), f2 = Field::make(2), f5 = Field::make(5);
  EXPECT_EQ(f3.inv(Elem{2}), Elem{2});
  EXPECT_EQ(f2.inv(kOne), kOne);
  Elem scanned = kZero;
  for (std::uint32_t c = 1; c < 5; ++c) {
    if ((3 * c) % 5 == 1) scanned = Elem{c};
  }
  EXPECT_EQ(f5.inv(Elem{3}), scanned);
  EXPECT_EQ(f5.inv(Elem{3}), Elem{2});
  EXPECT_THROW(f5.inv(kZero), DivisionByZero);
}

class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxioms, HoldExhaustively) {
  const Field f = Field::of_order(GetParam());
  const auto el = f.elements();
  for (Elem a : el) {
    EXPECT_EQ(f.add(a, kZero), a);
    EXPECT_EQ(f.mul(a, kOne), a);
    EXPECT_EQ(f.add(a, f.neg(a)), kZero);
    if (!a.is_zero()) EXPECT_EQ(f.mul(a, f.inv(a)), kOne);
    for (Elem b : el) {
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.sub(f.add(a, b), b), a);
      for (Elem c : el) {
        ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, FieldAxioms, ::testing::Values(2u, 3u, 4u, 5u, 8u, 9u));

TEST(Field, ElementOrderIsStable) {
  const Field a = Field::make(3, 2), b = Field::make(3, 2);
  EXPECT_EQ(a.elements(), b.elements());
  for (std::uint32_t i = 0; i < a.order(); ++i) EXPECT_EQ(a.elements()[i].code, i);
  for (Elem x : a.elements()) {
    for (Elem y : a.elements()) EXPECT_EQ(a.mul(x, y), b.mul(x, y));
  }
}

TEST(Field, PowerBasisIsResidueOfX) {
  const Field f = Field::make(3, 2);
  EXPECT_EQ(f.power_basis(0), kOne);
  EXPECT_EQ(f.power_basis(1), Elem{3});
  // x^2 reduced by the modulus equals x * x
  EXPECT_EQ(f.mul(f.power_basis(1), f.power_basis(1)).code,
            (f.modulus()[0] == 0 ? 0u : 3 - f.modulus()[0]) + 3 * ((3 - f.modulus()[1]) % 3));
}

TEST(FieldElement, CheckedOperations) {
  const Field f4 = Field::make(2, 2);
  const FieldElement x(f4, 2), x1(f4, 3);
  EXPECT_EQ((x + x1).code(), 1u);
  EXPECT_EQ((x * x).code(), 3u);
  EXPECT_EQ((x * x.inverse()).code(), 1u);
  EXPECT_EQ((-x).code(), 2u);
  EXPECT_EQ((x1 / x1).code(), 1u);
  EXPECT_THROW(FieldElement(f4, 4), DomainError);
  EXPECT_THROW(FieldElement(f4, 0).inverse(), DivisionByZero);
  const FieldElement other(Field::make(5), 2);
  EXPECT_THROW(x + other, FieldMismatch);
  EXPECT_THROW(x * other, FieldMismatch);
  EXPECT_FALSE(x == other);
}

TEST(Field, Describe) {
  EXPECT_EQ(Field::make(2, 2).describe(), "GF(4) mod x^2 + x + 1");
  EXPECT_EQ(Field::make(7).describe(), "GF(7)");
}
