// Copyright 2026 The qcat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "qcat/contractibility.hpp"
#include "qcat/error.hpp"
#include "qcat/finite_category.hpp"
#include "qcat/homology.hpp"
#include "qcat/simplicial_map.hpp"

namespace qcat {
namespace {

std::vector<std::pair<std::string, FiniteCategory>> corpus() {
  return {{"poset:1", poset_chain(1)},     {"poset:2", poset_chain(2)},
          {"poset:3", poset_chain(3)},     {"cyclic:2", cyclic_group_cat(2)},
          {"cyclic:3", cyclic_group_cat(3)}, {"kronecker", kronecker_cat()},
          {"discrete:2", discrete_cat(2)}, {"square", square_cat()},
          {"idempotent", idempotent_cat()}};
}

int non_identity(const FiniteCategory& c) {
  int n = 0;
  for (int m = 0; m < c.morphisms(); ++m) n += c.is_identity(m) ? 0 : 1;
  return n;
}

TEST(FiniteCategoryTest, CorpusSatisfiesAxioms) {
  for (const auto& [name, c] : corpus()) EXPECT_FALSE(c.check_axioms()) << name;
  EXPECT_EQ(poset_chain(3).morphisms(), 6);
}

TEST(FiniteCategoryTest, NonAssociativeTableIsRejected) {
  FiniteCategory::Builder b;
  b.add_object("*", "1");
  const int a = b.add_morphism("a", 0, 0);
  const int c = b.add_morphism("b", 0, 0);
  b.set_compose(a, a, a);
  b.set_compose(a, c, c);
  b.set_compose(c, a, a);
  b.set_compose(c, c, a);
  auto cat = std::move(b).build_unchecked();
  auto bad = cat.check_axioms();
  ASSERT_TRUE(bad);
  EXPECT_NE(bad->find("associativity"), std::string::npos) << *bad;
  EXPECT_NE(bad->find("'b'"), std::string::npos);
}

TEST(FiniteCategoryTest, MissingCompositeIsRejected) {
  FiniteCategory::Builder b;
  b.add_object("0");
  b.add_object("1");
  b.add_object("2");
  b.add_morphism("f", "0", "1");
  b.add_morphism("g", "1", "2");
  EXPECT_THROW(std::move(b).build(), InputError);
}

TEST(FiniteCategoryTest, OppositeIsInvolution) {
  for (const auto& [name, c] : corpus()) EXPECT_EQ(opposite_cat(opposite_cat(c)), c) << name;
}

TEST(NerveTest, SmallExamples) {
  auto pt = nerve(poset_chain(1), 3);
  EXPECT_EQ(pt.total(), 1u);
  EXPECT_FALSE(pt.truncation());
  auto arrow = nerve(poset_chain(2), 3);
  EXPECT_FALSE(compare_structure(canonical_order(relabel(arrow, [&](SimplexRef r) {
                                   return r.dim == 0 ? "[" + arrow.label(r) + "]" : std::string("[0,1]");
                                 })),
                                 standard_simplex(1), 1));
  auto bz2 = nerve(cyclic_group_cat(2), 3);
  EXPECT_EQ(bz2.truncation(), 3);
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(bz2.count(n), 1);
  EXPECT_FALSE(bz2.check_identities());
}

TEST(NerveTest, CountsAreComposableStrings) {
  for (const auto& [name, c] : corpus()) {
    const auto x = nerve(c, 3);
    EXPECT_FALSE(x.check_identities()) << name;
    // Independent count: strings of non-identity composable morphisms.
    std::vector<std::vector<long long>> ends(4, std::vector<long long>(c.objects(), 0));
    for (int o = 0; o < c.objects(); ++o) ends[0][o] = 1;
    for (int n = 1; n <= 3; ++n)
      for (int m = 0; m < c.morphisms(); ++m)
        if (!c.is_identity(m)) ends[n][c.morphism(m).dst] += ends[n - 1][c.morphism(m).src];
    for (int n = 0; n <= std::min(3, x.dimension()); ++n) {
      long long total = 0;
      for (auto v : ends[n]) total += v;
      EXPECT_EQ(x.count(n), total) << name << " level " << n;
    }
  }
}

TEST(NerveTest, OppositeCommutesWithNerve) {
  for (const auto& [name, c] : corpus()) {
    const auto a = opposite(nerve(c, 3));
    const auto raw = nerve(opposite_cat(c), 3);
    // Reverse each chain label to match.
    const auto b = relabel(raw, [&](SimplexRef r) {
      std::string l = raw.label(r);
      if (r.dim == 0) return l;
      std::vector<std::string> parts;
      std::size_t start = 0, pos;
      while ((pos = l.find(';', start)) != std::string::npos) {
        parts.push_back(l.substr(start, pos - start));
        start = pos + 1;
      }
      parts.push_back(l.substr(start));
      std::string out;
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) out += (out.empty() ? "" : ";") + *it;
      return out;
    });
    EXPECT_FALSE(compare_structure(canonical_order(a), canonical_order(b), 3)) << name;
  }
}

TEST(NerveTest, ProductCommutesWithNerve) {
  const auto c = poset_chain(2);
  const auto d = cyclic_group_cat(2);
  const FiniteCategory cd = product_cat(c, d);
  const Nerve ncd(cd, 3), nc(c, 3), nd(d, 3);
  const auto prod = product(nc.set(), nd.set(), 3);
  std::vector<std::vector<int>> hits(4);
  for (int n = 0; n <= 3; ++n) {
    hits[n].assign(prod.count(n), 0);
    for (int i = 0; i < ncd.set().count(n); ++i) {
      const Chain& ch = ncd.chain({n, i});
      Chain a{ch.start / d.objects(), {}}, b{ch.start % d.objects(), {}};
      for (int m : ch.arrows) {
        a.arrows.push_back(m / d.morphisms());
        b.arrows.push_back(m % d.morphisms());
      }
      const Simplex s = product_simplex(prod, nc.set(), nd.set(), nc.simplex(a), nd.simplex(b));
      ASSERT_TRUE(s.nondegenerate());
      EXPECT_EQ(hits[n][s.base.index]++, 0);
    }
    EXPECT_EQ(ncd.set().count(n), prod.count(n));
  }
}

TEST(TwistedArrowTest, IntervalHasTwoArrowsIntoTheEdge) {
  auto tw = twisted_arrow(poset_chain(2));
  EXPECT_EQ(tw.objects(), 3);
  EXPECT_EQ(non_identity(tw), 2);
  const int edge = *tw.object_index("0<1");
  for (int m = 0; m < tw.morphisms(); ++m)
    if (!tw.is_identity(m)) EXPECT_EQ(tw.morphism(m).dst, edge);
}

TEST(TwistedArrowTest, DiscreteStaysDiscrete) {
  for (int k = 1; k <= 3; ++k) {
    auto tw = twisted_arrow(discrete_cat(k));
    EXPECT_EQ(tw.objects(), k);
    EXPECT_EQ(non_identity(tw), 0);
  }
}

TEST(TwistedArrowTest, CyclicGroupCountsMatchBruteForce) {
  const auto c = cyclic_group_cat(2);
  // Pairs (a, b) with b f a = g, one per (f, a, b).
  int expected = 0;
  for (int f = 0; f < c.morphisms(); ++f)
    for (int a = 0; a < c.morphisms(); ++a)
      for (int b = 0; b < c.morphisms(); ++b) expected += c.compose(b, c.compose(f, a)) >= 0 ? 1 : 0;
  auto tw = twisted_arrow(c);
  EXPECT_EQ(tw.objects(), 2);
  EXPECT_EQ(tw.morphisms(), expected);
  EXPECT_EQ(expected, 8);
  EXPECT_FALSE(tw.check_axioms());
}

TEST(TwistedArrowTest, NerveMatchesEdgewiseOnCorpus) {
  for (const auto& [name, c] : corpus()) {
    auto r = nerve_twisted_vs_edgewise(c, name == "square" ? 2 : 3);
    EXPECT_TRUE(r.ok) << name << ": " << r.witness;
  }
}

TEST(TwistedArrowTest, ProjectionIsLeftFibration) {
  for (const auto& [name, c] : corpus()) {
    if (c.morphisms() > 6) continue;
    auto f = twisted_projection(c, 3);
    ASSERT_FALSE(f.check()) << name;
    auto r = left_fibration_check(f, 3);
    EXPECT_TRUE(r.ok) << name << ": " << r.witness;
  }
}

TEST(CommaTest, IdentityOverTerminalIsContractible) {
  const auto c = poset_chain(3);
  const auto id = identity_functor(c);
  ASSERT_FALSE(id.check());
  auto k = comma(id, 2);
  EXPECT_EQ(k.objects(), 3);
  EXPECT_FALSE(k.check_axioms());
  EXPECT_TRUE(certify_contractible(nerve(k, 4), 3).contractible());
}

TEST(CommaTest, InclusionSliceAndCoslice) {
  const auto small = poset_chain(2);
  const auto big = poset_chain(3);
  FunctorData f{&small, &big, {0, 1}, {}};
  for (int m = 0; m < small.morphisms(); ++m)
    f.on_morphisms.push_back(*big.morphism_index(small.morphism(m).name));
  ASSERT_FALSE(f.check());
  auto s = comma(f, 2, CommaSide::kSlice);
  EXPECT_EQ(s.objects(), 2);
  EXPECT_FALSE(s.check_axioms());
  EXPECT_TRUE(certify_contractible(nerve(s, 3), 2).contractible());
  EXPECT_EQ(comma(f, 2, CommaSide::kCoslice).objects(), 0);
}

TEST(CommaTest, IdentityCommaIsOrdinarySlice) {
  for (const auto& [name, c] : corpus()) {
    const auto id = identity_functor(c);
    for (int x = 0; x < c.objects(); ++x) {
      const auto a = comma(id, x);
      const auto b = slice(c, x);
      EXPECT_FALSE(a.check_axioms());
      EXPECT_FALSE(b.check_axioms());
      ASSERT_EQ(a.objects(), b.objects()) << name;
      ASSERT_EQ(a.morphisms(), b.morphisms()) << name;
      // Comma objects run over (c, h) by c; slice objects over h by index.
      std::vector<int> slice_pos(c.morphisms(), -1), to_slice;
      int k = 0;
      for (int h = 0; h < c.morphisms(); ++h)
        if (c.morphism(h).dst == x) slice_pos[h] = k++;
      for (int o = 0; o < c.objects(); ++o)
        for (int h : c.hom(o, x)) to_slice.push_back(slice_pos[h]);
      for (int i = 0; i < a.objects(); ++i)
        for (int j = 0; j < a.objects(); ++j)
          EXPECT_EQ(a.hom(i, j).size(), b.hom(to_slice[i], to_slice[j]).size());
      EXPECT_EQ(homology(nerve(a, 3), 2), homology(nerve(b, 3), 2));
    }
  }
}

TEST(CommaTest, FunctorCheckCatchesBrokenComposition) {
  const auto c = cyclic_group_cat(2);
  const auto d = cyclic_group_cat(3);
  FunctorData f{&c, &d, {0}, {0, 1}};  // g -> g in Z/3 does not respect g^2 = e
  EXPECT_TRUE(f.check());
}

}  // namespace
}  // namespace qcat
