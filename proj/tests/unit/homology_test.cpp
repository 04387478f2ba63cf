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

#include <boost/rational.hpp>
#include <random>

#include "qcat/error.hpp"
#include "qcat/homology.hpp"
#include "test_support.hpp"

namespace qcat {
namespace {

// Rank over Q by fraction-exact Gaussian elimination.
int rational_rank(const IntMatrix& m) {
  using Q = boost::rational<long long>;
  std::vector<std::vector<Q>> a(m.rows, std::vector<Q>(m.cols));
  for (int r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.data[r]) a[r][c] = Q(static_cast<long long>(v));
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int p = rank;
    while (p < m.rows && a[p][c] == Q(0)) ++p;
    if (p == m.rows) continue;
    std::swap(a[p], a[rank]);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || a[r][c] == Q(0)) continue;
      Q f = a[r][c] / a[rank][c];
      for (int k = c; k < m.cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

TEST(SmithFormTest, SmallKnownMatrix) {
  IntMatrix m(2, 2);
  m.add(0, 0, 2);
  m.add(0, 1, 4);
  m.add(1, 0, 6);
  m.add(1, 1, 8);
  auto s = smith_form(m);
  EXPECT_EQ(s.rank, 2);
  ASSERT_EQ(s.invariants.size(), 2u);
  EXPECT_EQ(s.invariants[0], 2);
  EXPECT_EQ(s.invariants[1], 4);
}

TEST(SmithFormTest, CoprimeDiagonalCombines) {
  IntMatrix m(2, 2);
  m.add(0, 0, 2);
  m.add(1, 1, 3);
  auto s = smith_form(m);
  ASSERT_EQ(s.invariants.size(), 2u);
  EXPECT_EQ(s.invariants[0], 1);
  EXPECT_EQ(s.invariants[1], 6);
}

TEST(SmithFormTest, RandomMatricesAgreeWithRationalRankAndDeterminant) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 5);
    const int c = 1 + static_cast<int>(rng() % 5);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (rng() % 2) m.add(i, j, val(rng));
    auto s = smith_form(m);
    EXPECT_EQ(s.rank, rational_rank(m));
    for (std::size_t k = 1; k < s.invariants.size(); ++k)
      EXPECT_EQ(s.invariants[k] % s.invariants[k - 1], 0);
    if (r == 1) {
      // Single row: the only invariant is the gcd of its entries.
      BigInt g = 0;
      for (const auto& [col, v] : m.data[0]) g = gcd(g, v);
      if (g != 0) {
        ASSERT_EQ(s.invariants.size(), 1u);
        EXPECT_EQ(s.invariants[0], abs(g));
      }
    }
  }
}

TEST(HomologyTest, SimplexIsAcyclic) {
  for (int n = 0; n <= 4; ++n) {
    auto h = homology(standard_simplex(n));
    EXPECT_EQ(h.at(0).str(), "Z");
    for (int k = 1; k <= n; ++k) EXPECT_EQ(h.at(k).str(), "0");
  }
}

TEST(HomologyTest, SpheresFromSimplexBoundaries) {
  for (int n = 1; n <= 4; ++n) {
    auto h = homology(simplex_boundary(n + 1));
    for (int k = 0; k <= n; ++k)
      EXPECT_EQ(h.at(k).betti, (k == 0 || k == n) ? 1 : 0) << "S^" << n << " degree " << k;
  }
}

TEST(HomologyTest, ProjectivePlaneHasTwoTorsion) {
  auto rp2 = test::load_sset("rp2.sset");
  auto h = homology(rp2);
  EXPECT_EQ(h.at(0).str(), "Z");
  EXPECT_EQ(h.at(1).str(), "Z/2");
  EXPECT_EQ(h.at(2).str(), "0");
  EXPECT_EQ(h.euler_characteristic(), 1);
}

TEST(HomologyTest, TruncatedSetReportsLowerDegreesOnly) {
  auto t = truncate(simplex_boundary(3), 2);
  EXPECT_EQ(t.truncation(), std::nullopt);
  auto u = truncate(standard_simplex(3), 2);
  auto h = homology(u);
  EXPECT_EQ(h.valid_through, 1);
  EXPECT_THROW(homology(u, 2), DepthError);
  EXPECT_EQ(h.at(1).str(), "0");
}

TEST(HomologyTest, EulerCharacteristicOfProducts) {
  auto torus = product(simplex_boundary(2), simplex_boundary(2));
  auto h = homology(torus);
  EXPECT_EQ(h.at(0).str(), "Z");
  EXPECT_EQ(h.at(1).str(), "Z^2");
  EXPECT_EQ(h.at(2).str(), "Z");
  EXPECT_EQ(h.euler_characteristic(), 0);
}

}  // namespace
}  // namespace qcat
