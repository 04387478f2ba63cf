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

#include "qcat/devissage.hpp"
#include "qcat/error.hpp"
#include "qcat/homology.hpp"

namespace qcat {
namespace {

ExactEmbedding vect_to_abp(const char* s, const char* t) { return embed(make_instance(s), make_instance(t)); }

int obj(const ExactEmbedding& e, const char* name) { return *e.target->find(name); }

// The explicit witness: q is onto psi(U_i), kills X_(i-1), and has kernel of
// exactly that size.
void expect_quotients_are_images(const ExactEmbedding& e, const AdmissibleFiltration& f) {
  const ExactInstance& a = *e.target;
  ASSERT_TRUE(f.ok) << f.witness;
  ASSERT_EQ(f.stages.front(), a.zero());
  ASSERT_EQ(f.stages.back(), f.object);
  ASSERT_EQ(f.inclusions.size() + 1, f.stages.size());
  for (std::size_t i = 0; i < f.inclusions.size(); ++i) {
    const Hom& in = f.inclusions[i];
    const Hom& q = f.quotient_maps[i];
    EXPECT_TRUE(a.is_ingressive(in));
    EXPECT_TRUE(a.is_egressive(q));
    EXPECT_EQ(q.dst, e.on_objects[f.witnesses[i]]);
    EXPECT_EQ(a.compose(q, in), a.zero_map(in.src, q.dst));
    int kernel = 0;
    for (int v : q.table) kernel += v == 0 ? 1 : 0;
    EXPECT_EQ(kernel, a.order(in.src));
  }
}

TEST(DevissageTest, EmbeddingIsExact) {
  auto e = vect_to_abp("vect:2:2", "abp:2:4");
  auto bad = e.check();
  EXPECT_FALSE(bad) << *bad;
  EXPECT_EQ(e.on_objects, (std::vector<int>{0, 1, 3}));
}

TEST(DevissageTest, EmbeddingErrors) {
  EXPECT_THROW(vect_to_abp("vect:3:1", "abp:2:4"), InputError);
  EXPECT_THROW(vect_to_abp("vect:2:3", "abp:2:4"), GuardError);
}

TEST(DevissageTest, FiltrationOfC4) {
  auto e = vect_to_abp("vect:2:2", "abp:2:4");
  auto f = admissible_filtration(e, obj(e, "c4"));
  EXPECT_EQ(f.stages, (std::vector<int>{0, obj(e, "c2"), obj(e, "c4")}));
  EXPECT_EQ(f.witnesses, (std::vector<int>{1, 1}));
  expect_quotients_are_images(e, f);
}

TEST(DevissageTest, ElementaryObjectHasLengthOne) {
  auto e = vect_to_abp("vect:2:2", "abp:2:4");
  auto f = admissible_filtration(e, obj(e, "c2+c2"));
  EXPECT_EQ(f.stages.size(), 2u);
  EXPECT_EQ(f.witnesses, (std::vector<int>{2}));
  expect_quotients_are_images(e, f);
}

TEST(DevissageTest, FiltrationOfC2PlusC4) {
  auto e = vect_to_abp("vect:2:2", "abp:2:8");
  auto f = admissible_filtration(e, obj(e, "c4+c2"));
  EXPECT_EQ(f.stages, (std::vector<int>{0, obj(e, "c2+c2"), obj(e, "c4+c2")}));
  EXPECT_EQ(f.witnesses, (std::vector<int>{2, 1}));
  expect_quotients_are_images(e, f);
}

TEST(DevissageTest, EveryTargetObjectIsFiltered) {
  for (auto [s, t] : {std::pair{"vect:2:2", "abp:2:4"}, {"vect:2:3", "abp:2:8"}, {"vect:3:2", "abp:3:9"}}) {
    auto e = vect_to_abp(s, t);
    for (int x = 0; x < e.target->objects(); ++x) expect_quotients_are_images(e, admissible_filtration(e, x));
  }
}

TEST(DevissageTest, SmallSourceIsNotANilimmersion) {
  auto e = vect_to_abp("vect:2:1", "abp:2:4");
  auto f = admissible_filtration(e, obj(e, "c2+c2"));
  EXPECT_FALSE(f.ok);
  EXPECT_NE(f.witness.find("c2+c2"), std::string::npos) << f.witness;
}

TEST(DevissageTest, CommaOverZeroIsAPoint) {
  for (auto [s, t] : {std::pair{"vect:2:2", "abp:2:4"}, {"abp:2:4", "abp:2:4"}, {"vect:2:1", "vect:2:1"}}) {
    DevissageContext ctx(vect_to_abp(s, t));
    auto comma = ctx.comma_category(0);
    EXPECT_EQ(comma.objects(), 1) << s;
    EXPECT_EQ(comma.morphisms(), 1) << s;
  }
}

TEST(DevissageTest, IdentityCommaHasTerminalObject) {
  auto c = make_instance("abp:2:4");
  DevissageContext ctx(embed(c, c));
  for (int x = 0; x < c->objects(); ++x) {
    auto comma = ctx.comma_category(x);
    int terminal = 0;
    for (int o = 0; o < comma.objects(); ++o) {
      bool ok = true;
      for (int p = 0; p < comma.objects() && ok; ++p) ok = comma.hom(p, o).size() == 1;
      terminal += ok ? 1 : 0;
    }
    EXPECT_GE(terminal, 1) << c->object_name(x);
    EXPECT_TRUE(certify_contractible(ctx.comma_over(x, 3), 2).contractible());
  }
}

TEST(DevissageTest, CommaOverC2Regression) {
  DevissageContext ctx(vect_to_abp("vect:2:2", "abp:2:4"));
  auto cert = certify_contractible(ctx.comma_over(obj(ctx.embedding(), "c2"), 4), 3);
  EXPECT_TRUE(cert.contractible()) << cert.str();
}

TEST(DevissageTest, CertificatesAgreeAcrossFiltrationStages) {
  DevissageContext ctx(vect_to_abp("vect:2:2", "abp:2:4"));
  const auto& e = ctx.embedding();
  auto cert = devissage_certificate(ctx, {0, obj(e, "c2"), obj(e, "c4")}, 2);
  EXPECT_TRUE(cert.stable);
  EXPECT_EQ(cert.verdict, Verdict::kContractibleUpTo);
  const auto& c4 = cert.probes[2];
  ASSERT_EQ(c4.stage_homology.size(), 3u);
  EXPECT_EQ(c4.stage_homology[0], c4.stage_homology[2]);
  EXPECT_EQ(c4.stage_homology[1], c4.stage_homology[2]);
}

TEST(DevissageTest, CertificateMonotoneInDepth) {
  DevissageContext ctx(vect_to_abp("vect:2:1", "abp:2:4"));
  std::vector<int> all{0, 1, 2, 3};
  std::vector<Verdict> prev;
  for (int d = 1; d <= 3; ++d) {
    auto cert = devissage_certificate(ctx, all, d);
    for (std::size_t k = 0; k < prev.size(); ++k)
      if (prev[k] == Verdict::kNotContractible)
        EXPECT_EQ(cert.probes[k].certificate.verdict, Verdict::kNotContractible);
    prev.clear();
    for (const auto& p : cert.probes) prev.push_back(p.certificate.verdict);
  }
  // c2+c2 is out of reach of the one-dimensional source.
  EXPECT_EQ(prev[3], Verdict::kNotContractible);
}

TEST(DevissageTest, IdentityCertificate) {
  auto c = make_instance("vect:2:1");
  DevissageContext ctx(embed(c, c));
  auto cert = devissage_certificate(ctx, {0, 1}, 2);
  EXPECT_EQ(cert.verdict, Verdict::kContractibleUpTo);
  EXPECT_TRUE(cert.stable);
}

TEST(DevissageTest, RelativeQObjectsForIdentity) {
  auto c = make_instance("vect:2:1");
  DevissageContext ctx(embed(c, c));
  auto r = relative_q_objects(ctx);
  long long expected = 0;
  for (int u = 0; u < c->objects(); ++u)
    for (int x = 0; x < c->objects(); ++x) expected += c->homs(x, u).size();
  EXPECT_EQ(expected, 5);
  EXPECT_EQ(static_cast<long long>(r.objects.size()), expected);
  EXPECT_FALSE(r.category.check_axioms());
  EXPECT_EQ(r.category.morphisms(), 8);
}

TEST(DevissageTest, RelativeQOfZeroInstanceIsTerminal) {
  auto c = make_instance("vect:2:0");
  DevissageContext ctx(embed(c, c));
  auto r = relative_q_objects(ctx);
  EXPECT_EQ(r.category.objects(), 1);
  EXPECT_EQ(r.category.morphisms(), 1);
}

TEST(DevissageTest, RelativeQIsAssociativeForEmbedding) {
  DevissageContext ctx(vect_to_abp("vect:2:1", "abp:2:4"));
  auto r = relative_q_objects(ctx);
  EXPECT_FALSE(r.category.check_axioms());
}

}  // namespace
}  // namespace qcat
