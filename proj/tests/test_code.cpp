#include <gtest/gtest.h>

#include <random>

#include "ghw/code.hpp"
#include "ghw/error.hpp"

using namespace ghw;

namespace {

ComplexSpec spec(int m, const char* sets, bool complement = false) {
  return normalize(ComplexSpec{m, parse_sets(sets), complement});
}

std::vector<std::int64_t> prop1(std::uint32_t q, const ComplexSpec& s, unsigned threads = 1) {
  Limits lim;
  lim.threads = threads;
  return hierarchy_prop1(Field::of_order(q), s, lim).values;
}

}  // namespace

TEST(BuildCode, WorkedExamples) {
  const Field f2 = Field::make(2);
  const LinearCode a = build_code(f2, spec(4, "1,2,3,4"));
  EXPECT_EQ(a.n, 16);
  EXPECT_EQ(a.k, 4);
  const LinearCode b = build_code(f2, spec(6, "1,2;2,3,4", true));
  EXPECT_EQ(b.n, 54);
  EXPECT_EQ(b.k, 6);
  const LinearCode c = build_code(f2, spec(2, "1"));
  EXPECT_EQ(c.n, 2);
  EXPECT_EQ(c.k, 1);
  EXPECT_EQ(c.kernel, Subspace::axes(2, {2}));
}

TEST(BuildCode, GeneratorColumnsFollowEnumeration) {
  const Field f = Field::make(3);
  const ComplexSpec s = spec(3, "1,2;3");
  const LinearCode c = build_code(f, s);
  const auto d = enumerate(f, s, kDefaultMaxEnum);
  ASSERT_EQ(c.generator.rows(), 3);
  ASSERT_EQ(c.generator.cols(), static_cast<int>(d.size()));
  for (std::size_t j = 0; j < d.size(); ++j)
    for (int i = 0; i < 3; ++i) EXPECT_EQ(c.generator(i, static_cast<int>(j)), d[j][i]);
}

TEST(BuildCode, EmptyDefiningSet) {
  EXPECT_THROW(build_code(Field::make(2), spec(3, "1,2,3", true)), DomainError);
  EXPECT_THROW(Prop1Search(Field::make(2), spec(3, "1,2,3", true)), DomainError);
}

TEST(BuildCode, DimensionFromKernel) {
  const Field f = Field::make(3);
  const LinearCode c = build_code(f, spec(5, "1,2;2,3"));
  EXPECT_EQ(c.k, 3);
  EXPECT_EQ(c.kernel, Subspace::axes(5, {4, 5}));
}

TEST(BuildCode, BinaryComplementDimensionGap) {
  // Two generators of size m-1 force every complement vector to agree on
  // the two left-out coordinates.
  const Field f = Field::make(2);
  const LinearCode c = build_code(f, spec(4, "1,2,3;1,2,4", true));
  EXPECT_EQ(c.k, 3);
  const Prop1Search s(f, spec(4, "1,2,3;1,2,4", true));
  EXPECT_EQ(s.k(), 3);
  EXPECT_EQ(s.kernel(), c.kernel);
  const LinearCode c3 = build_code(Field::make(3), spec(4, "1,2,3;1,2,4", true));
  EXPECT_EQ(c3.k, 4);
}

TEST(Prop1, WorkedExamples) {
  const Field f2 = Field::make(2);
  EXPECT_EQ(ghw_prop1(f2, spec(5, "1,2,3;3,4,5"), 1).value, 4);
  EXPECT_EQ(prop1(2, spec(4, "1,2,3,4")), (std::vector<std::int64_t>{8, 12, 14, 15}));
  EXPECT_EQ(prop1(3, spec(6, "1;2;3,4;5,6")), (std::vector<std::int64_t>{2, 4, 10, 12, 18, 20}));
  EXPECT_EQ(prop1(2, spec(5, "2,3,4", true)), (std::vector<std::int64_t>{12, 18, 21, 23, 24}));
}

TEST(Prop1, TopWeightIsFullSupport) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t q = trial % 2 ? 3 : 2;
    const int m = 2 + trial % 3;
    std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << m) - 2);
    ComplexSpec s{m, {CoordSet(mask(rng)), CoordSet(mask(rng))}, trial % 3 == 0};
    s = normalize(s);
    const CoordSet u = s.support_union();
    if (!s.complement && u != CoordSet::full(m)) continue;
    const Prop1Search search(Field::of_order(q), s);
    if (search.k() != m) continue;
    EXPECT_EQ(search.ghw(m).value, s.complement ? search.n() : search.n() - 1);
  }
}

TEST(Prop1, RangeAndCap) {
  const Field f = Field::make(2);
  const Prop1Search s(f, spec(4, "1,2;2,3"));
  EXPECT_EQ(s.k(), 3);
  EXPECT_THROW(s.ghw(0), DomainError);
  EXPECT_THROW(s.ghw(4), DomainError);
  Limits tight;
  tight.max_enum = 10;
  EXPECT_THROW(ghw_prop1(f, spec(5, "1,2,3;3,4,5"), 2, tight), ResourceLimit);
}

TEST(Prop1, GeneralKernelExample) {
  // Union {1,2,3} inside F_2^4: the code lives on the first three coordinates.
  EXPECT_EQ(prop1(2, spec(4, "1,2;2,3")), (std::vector<std::int64_t>{2, 4, 5}));
  EXPECT_EQ(prop1(2, spec(3, "1,2;2,3")), (std::vector<std::int64_t>{2, 4, 5}));
}

TEST(Prop1, ThreadCountDoesNotChangeResult) {
  const Field f = Field::make(3);
  const ComplexSpec s = spec(5, "1,2;1,3,4;2,3,4,5");
  for (int r = 1; r <= 5; ++r) {
    Limits one, many;
    many.threads = 4;
    const auto a = Prop1Search(f, s, one).ghw(r);
    const auto b = Prop1Search(f, s, many).ghw(r);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
  }
  EXPECT_EQ(prop1(2, spec(6, "1,2;2,3,4", true), 1), prop1(2, spec(6, "1,2;2,3,4", true), 3));
}

TEST(Prop1, WitnessIsFirstOptimum) {
  const Field f = Field::make(2);
  const ComplexSpec s = spec(5, "1,2,3;3,4,5");
  const Prop1Search search(f, s);
  for (int r = 1; r <= 5; ++r) {
    const auto res = search.ghw(r);
    std::optional<Subspace> first;
    std::uint64_t best = 0;
    enumerate_subspaces(f, 5, r, kDefaultMaxEnum, [&](const Subspace& h) {
      const std::uint64_t c = search.count_in_dual(h);
      if (!first || c > best) {
        best = c;
        first = h;
      }
      return true;
    });
    EXPECT_EQ(res.witness, *first);
    EXPECT_EQ(res.value, search.n() - static_cast<std::int64_t>(best));
  }
}

TEST(Prop1, DualCountsPartitionSubspace) {
  const Field f = Field::make(3);
  const ComplexSpec d = spec(4, "1,2;2,3,4");
  ComplexSpec c = d;
  c.complement = true;
  const Prop1Search sd(f, d), sc(f, c);
  const auto dv = enumerate(f, d, kDefaultMaxEnum);
  const auto cv = enumerate(f, c, kDefaultMaxEnum);
  enumerate_subspaces(f, 4, 2, kDefaultMaxEnum, [&](const Subspace& h) {
    const Subspace hp = dual(f, h);
    std::uint64_t in_d = 0, in_c = 0;
    for (const Vec& v : dv) in_d += hp.contains(f, v);
    for (const Vec& v : cv) in_c += hp.contains(f, v);
    EXPECT_EQ(sd.count_in_dual(h), in_d);
    EXPECT_EQ(sc.count_in_dual(h), in_d);
    EXPECT_EQ(in_d + in_c, 9u);
    return true;
  });
}

TEST(Hierarchy, StrictlyIncreasing) {
  EXPECT_TRUE(strictly_increasing({1, 2, 5}));
  EXPECT_FALSE(strictly_increasing({1, 1}));
  EXPECT_TRUE(strictly_increasing({}));
  const auto h = hierarchy_prop1(Field::make(2), spec(6, "1,2;2,3,4", true));
  EXPECT_EQ(h.method, "prop1-search");
  EXPECT_EQ(h.provenance.size(), h.values.size());
  EXPECT_TRUE(strictly_increasing(h.values));
}

TEST(Int64, Overflow) {
  EXPECT_EQ(to_int64(BigCount(42), "x"), 42);
  EXPECT_THROW(to_int64(BigCount(1) << 70, "x"), ResourceLimit);
}
