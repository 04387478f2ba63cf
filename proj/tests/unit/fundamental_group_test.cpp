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

#include <algorithm>
#include <random>

#include "qcat/contractibility.hpp"
#include "qcat/error.hpp"
#include "qcat/finite_category.hpp"
#include "qcat/fundamental_group.hpp"
#include "qcat/homology.hpp"
#include "test_support.hpp"

namespace qcat {
namespace {

AbelianGroup h1_of(const SimplicialSet& x) {
  const auto h = homology(x, 1);
  return {h.at(1).betti, h.at(1).torsion};
}

std::vector<SimplicialSet> connected_fixtures() {
  return {standard_simplex(2),
          simplex_boundary(2),
          simplex_boundary(3),
          test::load_sset("rp2.sset"),
          product(simplex_boundary(2), simplex_boundary(2)),
          product(simplex_boundary(2), standard_simplex(1)),
          nerve(kronecker_cat(), 3),
          nerve(cyclic_group_cat(2), 3),
          nerve(cyclic_group_cat(3), 3)};
}

TEST(FundamentalGroupTest, SimplexIsTrivial) {
  auto t = tietze_simplify(pi1_presentation(standard_simplex(2)));
  EXPECT_EQ(t.presentation.rank(), 0);
  EXPECT_TRUE(t.presentation.relators.empty());
}

TEST(FundamentalGroupTest, CircleIsFreeOfRankOne) {
  auto p = pi1_presentation(simplex_boundary(2));
  // One edge off a spanning tree of a triangle; no 2-simplices.
  EXPECT_EQ(p.rank(), 1);
  EXPECT_TRUE(p.relators.empty());
  EXPECT_EQ(abelianize(p).str(), "Z");
}

TEST(FundamentalGroupTest, ParallelEdgesGiveIntegers) {
  auto p = pi1_presentation(nerve(kronecker_cat(), 2));
  EXPECT_EQ(p.rank(), 1);
  EXPECT_TRUE(p.relators.empty());
  EXPECT_EQ(abelianize(p).str(), "Z");
}

TEST(FundamentalGroupTest, ProjectivePlaneReducesToOneGenerator) {
  auto t = tietze_simplify(pi1_presentation(test::load_sset("rp2.sset")));
  EXPECT_FALSE(t.budget_exhausted);
  EXPECT_EQ(t.presentation.rank(), 1);
  ASSERT_EQ(t.presentation.relators.size(), 1u);
  EXPECT_EQ(t.presentation.relators[0].size(), 2u);
  EXPECT_EQ(abelianize(t.presentation).str(), "Z/2");
}

TEST(FundamentalGroupTest, AbelianizationMatchesFirstHomology) {
  for (const auto& x : connected_fixtures()) {
    const auto p = pi1_presentation(x);
    EXPECT_EQ(abelianize(p), h1_of(x));
    EXPECT_EQ(abelianize(tietze_simplify(p).presentation), h1_of(x));
  }
}

TEST(FundamentalGroupTest, RelatorsAreReducedAndInRange) {
  for (const auto& x : connected_fixtures()) {
    const auto p = tietze_simplify(pi1_presentation(x)).presentation;
    for (const auto& r : p.relators) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        EXPECT_GE(std::abs(r[i]), 1);
        EXPECT_LE(std::abs(r[i]), p.rank());
        if (i + 1 < r.size()) EXPECT_NE(r[i], -r[i + 1]);
      }
    }
  }
}

TEST(FundamentalGroupTest, BudgetIsRespected) {
  auto t = tietze_simplify(pi1_presentation(test::load_sset("rp2.sset")), 2);
  EXPECT_TRUE(t.budget_exhausted);
  EXPECT_EQ(t.moves, 2);
}

TEST(FundamentalGroupTest, DisconnectedInputReportsComponents) {
  auto x = disjoint_union(standard_simplex(1), standard_simplex(2));
  try {
    pi1_presentation(x);
    FAIL() << "expected DisconnectedError";
  } catch (const DisconnectedError& e) {
    EXPECT_EQ(e.components(), 2);
  }
}

TEST(HomologyPropertyTest, InvariantUnderRelabelingAndReordering) {
  std::mt19937 rng(11);
  for (const auto& x : connected_fixtures()) {
    const auto h = homology(x);
    std::vector<std::vector<int>> perm(static_cast<std::size_t>(x.dimension() + 1));
    for (int n = 0; n <= x.dimension(); ++n) {
      perm[n].resize(x.count(n));
      for (int i = 0; i < x.count(n); ++i) perm[n][i] = i;
      std::shuffle(perm[n].begin(), perm[n].end(), rng);
    }
    auto y = relabel(permute(x, perm), [](SimplexRef r) {
      return "s" + std::to_string(r.dim) + "_" + std::to_string(r.index);
    });
    EXPECT_FALSE(y.check_identities());
    EXPECT_EQ(homology(y), h);
  }
}

TEST(HomologyPropertyTest, EulerCharacteristicFromRanks) {
  for (const auto& x : {standard_simplex(3), simplex_boundary(3), test::load_sset("rp2.sset"),
                        product(simplex_boundary(2), simplex_boundary(2))}) {
    long long chi = 0;
    for (int n = 0; n <= x.dimension(); ++n) chi += (n % 2 ? -1 : 1) * x.count(n);
    EXPECT_EQ(homology(x).euler_characteristic(), chi);
  }
}

TEST(HomologyPropertyTest, BoundarySquaresToZero) {
  for (const auto& x : connected_fixtures()) {
    const int top = x.truncation() ? *x.truncation() : x.dimension();
    for (int k = 2; k <= top; ++k) {
      const auto a = boundary_matrix(x, k);
      const auto b = boundary_matrix(x, k - 1);
      for (int r = 0; r < a.rows; ++r) {
        std::map<int, BigInt> acc;
        for (const auto& [c, v] : a.data[r])
          for (const auto& [c2, w] : b.data[c]) acc[c2] += v * w;
        for (const auto& [c2, v] : acc) EXPECT_EQ(v, 0);
      }
    }
  }
}

TEST(HomologyTest, CylinderHomology) {
  auto h = homology(product(simplex_boundary(2), standard_simplex(1)));
  EXPECT_EQ(h.at(0).str(), "Z");
  EXPECT_EQ(h.at(1).str(), "Z");
  EXPECT_EQ(h.at(2).str(), "0");
}

TEST(ContractibilityTest, SimplexIsContractible) {
  auto c = certify_contractible(standard_simplex(3), 3);
  EXPECT_EQ(c.verdict, Verdict::kContractibleUpTo);
  EXPECT_EQ(c.degree, 3);
}

TEST(ContractibilityTest, CircleHasFirstHomologyWitness) {
  auto c = certify_contractible(simplex_boundary(2), 2);
  EXPECT_EQ(c.verdict, Verdict::kNotContractible);
  EXPECT_EQ(c.witness, "H1 = Z");
}

TEST(ContractibilityTest, DisconnectedWitnessIsZerothHomology) {
  auto c = certify_contractible(nerve(discrete_cat(2), 1), 0);
  EXPECT_EQ(c.verdict, Verdict::kNotContractible);
  EXPECT_EQ(c.witness, "H0 = Z^2");
}

TEST(ContractibilityTest, NeedsDepthAboveDegree) {
  EXPECT_THROW(certify_contractible(truncate(standard_simplex(3), 2), 2), DepthError);
}

}  // namespace
}  // namespace qcat
