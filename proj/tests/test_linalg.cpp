#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ghw/error.hpp"
#include "ghw/limits.hpp"
#include "ghw/linalg.hpp"

using namespace ghw;

namespace {

Vec V(std::initializer_list<std::uint32_t> codes) {
  Vec v;
  for (auto c : codes) v.push_back(Elem{c});
  return v;
}

// All of F_q^m in code order.
std::vector<Vec> all_vectors(std::uint32_t q, int m) {
  std::vector<Vec> out;
  Vec v(m, kZero);
  for (;;) {
    out.push_back(v);
    int i = m - 1;
    while (i >= 0 && ++v[i].code == q) v[i--] = kZero;
    if (i < 0) return out;
  }
}

std::uint64_t product_formula(std::uint64_t m, std::uint64_t r, std::uint64_t q) {
  auto p = [&](std::uint64_t e) {
    std::uint64_t v = 1;
    while (e--) v *= q;
    return v;
  };
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < r; ++i) {
    num *= p(m - i) - 1;
    den *= p(r - i) - 1;
  }
  return num / den;
}

Subspace random_subspace(const Field& f, int m, int gens, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  std::vector<Vec> rows(gens, Vec(m));
  for (auto& r : rows)
    for (auto& x : r) x = Elem{d(rng)};
  return Subspace::span(f, m, rows);
}

}  // namespace

TEST(Rref, IdentityIsFixed) {
  const Field f = Field::make(2);
  const auto r = rref(f, Matrix::identity(3));
  EXPECT_EQ(r.rank, 3);
  EXPECT_EQ(r.reduced, Matrix::identity(3));
  EXPECT_EQ(r.pivots, (std::vector<int>{0, 1, 2}));
}

TEST(Rref, ZeroMatrix) {
  const Field f = Field::make(2);
  const auto r = rref(f, Matrix(2, 4));
  EXPECT_EQ(r.rank, 0);
  EXPECT_EQ(r.reduced, Matrix(2, 4));
}

TEST(Rref, Gf3HandElimination) {
  const Field f = Field::make(3);
  // 2 * (1,2) = (2,1) mod 3, so the rows are proportional.
  const auto r1 = rref(f, Matrix::from_rows({V({1, 2}), V({2, 1})}, 2));
  EXPECT_EQ(r1.rank, 1);
  EXPECT_EQ(r1.reduced, Matrix::from_rows({V({1, 2}), V({0, 0})}, 2));
  const auto r2 = rref(f, Matrix::from_rows({V({1, 1}), V({1, 2})}, 2));
  EXPECT_EQ(r2.rank, 2);
  EXPECT_EQ(r2.reduced, Matrix::identity(2));
}

TEST(NullSpace, FullRankAndZero) {
  const Field f = Field::make(3);
  EXPECT_TRUE(null_space(f, Matrix::identity(3), 3).is_zero());
  EXPECT_EQ(null_space(f, Matrix(2, 3), 3).dim(), 3);
}

TEST(NullSpace, MatchesFilteredEnumeration) {
  const Field f = Field::make(2);
  const Matrix a = Matrix::from_rows({V({1, 1, 0})}, 3);
  const Subspace ns = null_space(f, a, 3);
  EXPECT_EQ(ns.dim(), 2);
  std::set<Vec> expected;
  for (const Vec& v : all_vectors(2, 3)) {
    if (dot(f, a.row(0), v).is_zero()) expected.insert(v);
  }
  const auto got = elements(f, ns);
  EXPECT_EQ(std::set<Vec>(got.begin(), got.end()), expected);
  EXPECT_EQ(ns, Subspace::span(f, 3, {V({1, 1, 0}), V({0, 0, 1})}));
  EXPECT_THROW(null_space(f, a, 4), DomainError);
}

TEST(Dual, Examples) {
  const Field f = Field::make(2);
  EXPECT_TRUE(dual(f, Subspace::full(3)).is_zero());
  EXPECT_EQ(dual(f, Subspace(3)), Subspace::full(3));
  const Subspace h = Subspace::span(f, 2, {V({1, 1})});
  EXPECT_EQ(dual(f, h), h);
}

TEST(Dual, DimensionAndInvolution) {
  for (std::uint32_t q : {2u, 3u}) {
    const Field f = Field::of_order(q);
    const int max_m = q == 2 ? 5 : 4;
    for (int m = 1; m <= max_m; ++m) {
      for (int r = 0; r <= m; ++r) {
        enumerate_subspaces(f, m, r, kDefaultMaxEnum, [&](const Subspace& h) {
          const Subspace d = dual(f, h);
          EXPECT_EQ(h.dim() + d.dim(), m);
          EXPECT_EQ(dual(f, d), h);
          return true;
        });
      }
    }
  }
}

TEST(Gaussian, Examples) {
  EXPECT_EQ(gaussian_binomial(5, 0, 7), 1);
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
  EXPECT_EQ(gaussian_binomial(6, 3, 3), product_formula(6, 3, 3));
  EXPECT_EQ(gaussian_binomial(6, 3, 3), 33880);
  EXPECT_EQ(gaussian_binomial(3, 4, 2), 0);
  EXPECT_THROW(gaussian_binomial(3, -1, 2), DomainError);
  // 2^16 ambient counts overflow 64 bits and stay exact.
  EXPECT_GT(gaussian_binomial(10, 5, 65536), BigCount(std::numeric_limits<std::uint64_t>::max()));
}

TEST(Enumerate, CountsMatchGaussianBinomial) {
  for (std::uint32_t q : {2u, 3u}) {
    const Field f = Field::of_order(q);
    for (int m = 0; m <= 5; ++m) {
      for (int r = 0; r <= m; ++r) {
        std::set<std::vector<std::uint32_t>> seen;
        std::uint64_t count = 0;
        enumerate_subspaces(f, m, r, kDefaultMaxEnum, [&](const Subspace& s) {
          EXPECT_EQ(s.dim(), r);
          EXPECT_EQ(rank(f, s.basis()), r);
          std::vector<std::uint32_t> key;
          for (int i = 0; i < s.dim(); ++i)
            for (int j = 0; j < m; ++j) key.push_back(s.basis()(i, j).code);
          seen.insert(key);
          ++count;
          return true;
        });
        EXPECT_EQ(count, seen.size());
        EXPECT_EQ(BigCount(count), gaussian_binomial(m, r, q)) << "q=" << q << " m=" << m << " r=" << r;
      }
    }
  }
}

TEST(Enumerate, Extremes) {
  const Field f = Field::make(3);
  const auto zero = all_subspaces(f, 4, 0, kDefaultMaxEnum);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero.front().is_zero());
  const auto full = all_subspaces(f, 4, 4, kDefaultMaxEnum);
  ASSERT_EQ(full.size(), 1u);
  EXPECT_EQ(full.front(), Subspace::full(4));
}

TEST(Enumerate, CapIsEnforced) {
  const Field f = Field::make(2);
  try {
    all_subspaces(f, 4, 2, 34);
    FAIL() << "expected ResourceLimit";
  } catch (const ResourceLimit& e) {
    EXPECT_EQ(e.required(), "35");
  }
  EXPECT_EQ(all_subspaces(f, 4, 2, 35).size(), 35u);
}

TEST(Enumerate, OrderIsPivotSetThenFreeEntries) {
  const Field f = Field::make(2);
  const auto subs = all_subspaces(f, 3, 1, kDefaultMaxEnum);
  std::vector<Vec> got;
  for (const auto& s : subs) got.push_back(s.basis().row_vec(0));
  const std::vector<Vec> want = {V({1, 0, 0}), V({1, 0, 1}), V({1, 1, 0}), V({1, 1, 1}),
                                 V({0, 1, 0}), V({0, 1, 1}), V({0, 0, 1})};
  EXPECT_EQ(got, want);
}

TEST(Enumerate, PartitionsCoverStream) {
  const Field f = Field::make(3);
  std::uint64_t total = 0;
  for (const auto& piv : pivot_partitions(4, 2)) {
    SubspaceCursor cur(f, 4, piv);
    std::uint64_t n = 0;
    for (; !cur.done(); cur.advance()) ++n;
    EXPECT_EQ(n, cur.size());
    total += n;
  }
  EXPECT_EQ(BigCount(total), gaussian_binomial(4, 2, 3));
  EXPECT_EQ(pivot_partitions(4, 2).size(), 6u);
}

TEST(Subspace, CanonicalFormIsUnique) {
  std::mt19937 rng(7);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field f = Field::of_order(q);
    for (int trial = 0; trial < 40; ++trial) {
      const int m = 2 + trial % 5;
      const Subspace s = random_subspace(f, m, 1 + trial % 4, rng);
      // A second generating set: random combinations of the basis plus redundancy.
      std::uniform_int_distribution<std::uint32_t> d(0, q - 1);
      Matrix g(0, m);
      for (int i = 0; i < s.dim() + 2; ++i) {
        Vec v(m, kZero);
        for (int j = 0; j < s.dim(); ++j) axpy(f, Elem{d(rng)}, s.basis().row(j), v);
        g.append_row(v);
      }
      for (int j = 0; j < s.dim(); ++j) g.append_row(s.basis().row(j));
      EXPECT_EQ(Subspace::span(f, g), s);
    }
  }
}

TEST(Subspace, ContainsAndElements) {
  const Field f = Field::make(3);
  const Subspace s = Subspace::span(f, 3, {V({1, 2, 0}), V({0, 1, 1})});
  const auto el = elements(f, s);
  EXPECT_EQ(el.size(), 9u);
  std::set<Vec> uniq(el.begin(), el.end());
  EXPECT_EQ(uniq.size(), 9u);
  for (const Vec& v : el) EXPECT_TRUE(s.contains(f, v));
  std::size_t inside = 0;
  for (const Vec& v : all_vectors(3, 3)) inside += s.contains(f, v);
  EXPECT_EQ(inside, 9u);
}

TEST(Subspace, ExtensionFieldElements) {
  const Field f = Field::make(2, 2);
  const Subspace s = Subspace::span(f, 2, {V({1, 2})});
  const auto el = elements(f, s);
  std::set<Vec> got(el.begin(), el.end()), want;
  for (Elem c : f.elements()) want.insert(Vec{f.mul(c, kOne), f.mul(c, Elem{2})});
  EXPECT_EQ(got, want);
}

TEST(Subspace, AxesAndIntersections) {
  const Field f = Field::make(2);
  const Subspace u = Subspace::axes(4, {1, 2}), v = Subspace::axes(4, {2, 3});
  EXPECT_EQ(intersect(f, u, v), Subspace::axes(4, {2}));
  EXPECT_EQ(sum(f, u, v), Subspace::axes(4, {1, 2, 3}));
  EXPECT_FALSE(meets_trivially(f, u, v));
  EXPECT_TRUE(meets_trivially(f, u, Subspace::axes(4, {3, 4})));
}

TEST(Support, Examples) {
  EXPECT_TRUE(support(V({0, 0, 0})).empty());
  EXPECT_EQ(support(V({0, 2, 0, 1})), CoordSet({2, 4}));
  EXPECT_EQ(support(V({1, 1, 1, 1, 1})), CoordSet::full(5));
}
