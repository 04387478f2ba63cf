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

#include "qcat/error.hpp"
#include "qcat/gamma.hpp"

namespace qcat {
namespace {

DeltaMap dm(int target, std::vector<int> v) { return DeltaMap(target, std::move(v)); }

TEST(GammaTest, SmashSizes) {
  EXPECT_EQ(smash(2, 3), 6);
  EXPECT_EQ(smash(0, 3), 0);
  auto f = smash_mor(LambdaMorphism::identity(2), LambdaMorphism{1, 0, {-1}});
  EXPECT_EQ(f.source, 2);
  EXPECT_EQ(f.target, 0);
  EXPECT_EQ(f.map, (std::vector<int>{-1, -1}));
}

TEST(GammaTest, BasepointIsAbsorbing) {
  LambdaMorphism f{2, 2, {1, -1}};
  LambdaMorphism g{2, 1, {-1, 0}};
  EXPECT_EQ(compose(g, f).map, (std::vector<int>{0, -1}));
  EXPECT_THROW(compose(f, LambdaMorphism::identity(3)), InputError);
}

TEST(GammaTest, SmashIsFunctorial) {
  auto c = check_smash_functoriality(2);
  EXPECT_TRUE(c.ok) << c.witness;
  EXPECT_GT(c.cases, 1000);
}

TEST(GammaTest, USizes) {
  EXPECT_EQ(u_on_objects(1), 1);
  EXPECT_EQ(u_on_objects(3), 3);
  auto c = check_u_sizes(6);
  EXPECT_TRUE(c.ok) << c.witness;
}

TEST(GammaTest, UOfIdentityIsIdentity) {
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(u_on_maps(DeltaMap::identity(n)), LambdaMorphism::identity(n));
}

TEST(GammaTest, UOfMapToPointIsEmpty) {
  auto f = u_on_maps(dm(0, {0, 0, 0}));
  EXPECT_EQ(f.source, 0);
  EXPECT_EQ(f.target, 2);
  EXPECT_TRUE(f.map.empty());
}

TEST(GammaTest, UOnDegeneracyAndFace) {
  // s^0 : [2] -> [1] = (0, 0, 1); eta_1 o s^0 = (0, 0, 1) is the cut at 2.
  EXPECT_EQ(u_on_maps(dm(1, {0, 0, 1})).map, (std::vector<int>{1}));
  // d^1 : [1] -> [2] = (0, 2); both cuts of [2] pull back to the cut at 1.
  EXPECT_EQ(u_on_maps(dm(2, {0, 2})).map, (std::vector<int>{0, 0}));
  // d^0 : [1] -> [2] = (1, 2); the cut at 1 becomes constant.
  EXPECT_EQ(u_on_maps(dm(2, {1, 2})).map, (std::vector<int>{-1, 0}));
}

TEST(GammaTest, UIsAContravariantFunctor) {
  auto c = check_u_functoriality(4);
  EXPECT_TRUE(c.ok) << c.witness;
}

TEST(GammaTest, UPower) {
  auto g = dm(2, {0, 2});
  EXPECT_EQ(u_power({g}), u_on_maps(g));
  EXPECT_EQ(u_power({DeltaMap::identity(2), DeltaMap::identity(3)}), LambdaMorphism::identity(6));
  EXPECT_THROW(u_power({}), InputError);
  auto c = check_u_power_functoriality(2);
  EXPECT_TRUE(c.ok) << c.witness;
}

TEST(GammaTest, RetractionSets) {
  EXPECT_EQ(retraction_set(1, DeltaMap::identity(1)), (std::vector<int>{0}));
  EXPECT_EQ(retraction_set(2, dm(2, {0, 2})).size(), 2u);
  EXPECT_EQ(retraction_set(2, dm(2, {0, 1})), (std::vector<int>{0}));
  EXPECT_EQ(retraction_set(2, dm(2, {1, 2})), (std::vector<int>{1}));
  EXPECT_TRUE(retraction_set(2, dm(2, {1, 1})).empty());
  EXPECT_THROW(retraction_set(3, dm(2, {0, 1})), InputError);
}

TEST(GammaTest, RetractionsMatchEnumeration) {
  auto c = check_retractions(4);
  EXPECT_TRUE(c.ok) << c.witness;
}

TEST(GammaTest, RetractionsAreNatural) {
  auto c = check_retraction_naturality(2);
  EXPECT_TRUE(c.ok) << c.witness;
}

TEST(GammaTest, RetractionPowerIsSmash) {
  auto r = retraction_set_power({2, 2}, {dm(2, {0, 2}), dm(2, {0, 1})});
  EXPECT_EQ(r, (std::vector<int>{0, 2}));
}

TEST(GammaTest, LOfSmallSets) {
  auto l0 = L_of(0);
  EXPECT_EQ(l0.category.objects(), 1);
  EXPECT_EQ(l0.category.morphisms(), 1);
  auto l1 = L_of(1);
  EXPECT_EQ(l1.category.objects(), 2);
  EXPECT_EQ(l1.category.morphisms(), 5);
  EXPECT_EQ(L_of(3).category.objects(), 8);
  auto c = check_L(3);
  EXPECT_TRUE(c.ok) << c.witness;
}

TEST(GammaTest, PreimageAlongIdentityIsIdentityFunctor) {
  auto l = L_of(2);
  auto f = L_restriction(LambdaMorphism::identity(2), l, l);
  auto id = identity_functor(l.category);
  EXPECT_EQ(f.on_objects, id.on_objects);
  EXPECT_EQ(f.on_morphisms, id.on_morphisms);
}

TEST(GammaTest, GammaChecksByName) {
  auto all = gamma_checks("all", 3);
  EXPECT_EQ(all.size(), 7u);
  for (const auto& c : all) EXPECT_TRUE(c.ok) << c.name << ": " << c.witness;
  EXPECT_THROW(gamma_checks("nope", 2), InputError);
}

}  // namespace
}  // namespace qcat
