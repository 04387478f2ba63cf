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

#include <filesystem>

#include "qcat/error.hpp"
#include "qcat/exact.hpp"
#include "qcat/finite_category.hpp"
#include "qcat/homology.hpp"
#include "test_support.hpp"

namespace qcat {
namespace {

namespace fs = std::filesystem;

std::vector<std::string> fixtures_with(const std::string& ext) {
  std::vector<std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(QCAT_FIXTURE_DIR))
    if (e.path().extension() == ext) out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(IoTest, SsetFixturesRoundTrip) {
  auto files = fixtures_with(".sset");
  ASSERT_GE(files.size(), 2u);
  for (const auto& f : files) {
    auto x = read_sset(f);
    auto j = sset_to_json(x);
    auto y = sset_from_json(j);
    EXPECT_EQ(sset_to_json(y), j) << f;
    EXPECT_EQ(homology(x), homology(y)) << f;
  }
}

TEST(IoTest, CircleFixture) {
  auto h = homology(test::load_sset("circle.sset"));
  EXPECT_EQ(h.groups.at(1).str(), "Z");
}

TEST(IoTest, CategoryFixturesRoundTrip) {
  std::vector<std::string> files;
  for (const auto& f : fixtures_with(".json"))
    if (f.find("categories") != std::string::npos) files.push_back(f);
  ASSERT_GE(files.size(), 6u);
  for (const auto& f : files) {
    auto c = read_category(f);
    EXPECT_FALSE(c.check_axioms()) << f;
    auto d = category_from_json(category_to_json(c));
    EXPECT_EQ(c, d) << f;
    EXPECT_EQ(category_to_json(d), category_to_json(c)) << f;
  }
}

TEST(IoTest, BuiltinsMatchTheirFixtures) {
  for (auto [name, file] : {std::pair{"poset:3", "poset3"}, {"cyclic:2", "bz2"}, {"idempotent", "idempotent"}})
    EXPECT_EQ(*builtin_category(name), read_category(test::fixture("categories/" + std::string(file) + ".json")));
}

TEST(IoTest, SwapCategoryIsNotThin) {
  auto c = read_category(test::fixture("categories/swap.json"));
  EXPECT_EQ(c.hom(0, 1).size(), 2u);
  EXPECT_EQ(c.hom(1, 1).size(), 2u);
}

std::string category_error(const std::string& text) {
  try {
    category_from_json(parse_json(text, "inline"));
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(IoTest, MalformedCategoriesCarryLocations) {
  EXPECT_EQ(category_error("[]"), "$: expected an object");
  EXPECT_EQ(category_error(R"({"objects":["a"]})"), "$.morphisms: missing array");
  EXPECT_EQ(category_error(R"({"objects":["a","a"],"morphisms":[]})"), "$.objects[1]: duplicate object 'a'");
  EXPECT_EQ(category_error(R"({"objects":["a"],"morphisms":[{"id":"1","src":"a"}]})"),
            "$.morphisms[0].dst: missing");
  EXPECT_EQ(category_error(R"({"objects":["a"],"morphisms":[{"id":"1","src":"a","dst":"a"}]})"),
            "$.identities[\"a\"]: missing identity");
  EXPECT_EQ(category_error(R"({"objects":["a"],"morphisms":[{"id":"1","src":"a","dst":"a"}],
    "identities":{"a":"1"},"compose":[["1","1","x"]]})"),
            "$.compose[0][2]: unknown morphism 'x'");
  auto bad_assoc = category_error(R"({"objects":["a"],"morphisms":[{"id":"1","src":"a","dst":"a"},
    {"id":"e","src":"a","dst":"a"}],"identities":{"a":"1"}})");
  EXPECT_EQ(bad_assoc.rfind("$: ", 0), 0u) << bad_assoc;
}

TEST(IoTest, MalformedJsonReportsByte) {
  try {
    parse_json("{\"a\": ", "x.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("x.json: byte ", 0), 0u) << e.what();
  }
}

TEST(IoTest, ExactSequenceHomsRoundTrip) {
  for (const auto& s : read_exact_sequences(test::fixture("exact/sequences.json"))) {
    for (const Hom& h : {s.incl, s.proj}) {
      auto j = hom_to_json(*s.instance, h);
      EXPECT_EQ(hom_from_json(*s.instance, j, "$"), h) << s.name;
    }
  }
}

}  // namespace
}  // namespace qcat
