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
#include <set>

#include "qcat/error.hpp"
#include "qcat/exact.hpp"
#include "qcat/homology.hpp"
#include "test_support.hpp"

namespace qcat {
namespace {

std::shared_ptr<const ExactInstance> inst(const std::string& d) { return make_instance(d); }

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// |Hom(+Z/p^a_j, +Z/p^b_i)| = prod p^min(a_j, b_i).
long long hom_count(int p, const std::vector<int>& a, const std::vector<int>& b) {
  long long n = 1;
  for (int x : a)
    for (int y : b) n *= ipow(p, std::min(x, y));
  return n;
}

// Every subgroup of g, by closure from the trivial group.
std::set<std::vector<int>> all_subgroups(const PGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> todo{{0}};
  seen.insert({0});
  while (!todo.empty()) {
    auto h = todo.back();
    todo.pop_back();
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::set<int> grown(h.begin(), h.end());
      std::vector<int> frontier(h.begin(), h.end());
      frontier.push_back(x);
      grown.insert(x);
      while (!frontier.empty()) {
        int a = frontier.back();
        frontier.pop_back();
        for (int b : std::vector<int>(grown.begin(), grown.end())) {
          int s = g.add(a, b);
          if (grown.insert(s).second) frontier.push_back(s);
        }
      }
      std::vector<int> next(grown.begin(), grown.end());
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

// Span classes X -> Y straight from the subgroup lattice of X + Y.
std::vector<std::vector<int>> span_oracle(const ExactInstance& c, int x, int y) {
  const PGroup& gx = c.object(x);
  std::vector<std::vector<int>> out;
  for (const auto& w : all_subgroups(gx.sum(c.object(y)))) {
    std::set<int> proj;
    bool mono = true;
    for (int v : w) {
      proj.insert(v % gx.order());
      if (v != 0 && v / gx.order() == 0) mono = false;
    }
    if (mono && static_cast<int>(proj.size()) == gx.order()) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Rank of an integer matrix over F_p by Gaussian elimination.
int rank_mod_p(std::vector<std::vector<int>> m, int p) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (((m[r][c] % p) + p) % p) piv = r;
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    int inv = 1;
    while ((inv * (((m[rank][c] % p) + p) % p)) % p != 1) ++inv;
    for (auto& v : m[rank]) v = ((v * inv) % p + p) % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      int f = ((m[r][c] % p) + p) % p;
      for (int k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// |target / image| from the Smith form of [A | diag(p^f_i)].
BigInt coker_order(const ExactInstance& c, const Hom& f) {
  auto a = c.matrix(f);
  const PGroup& t = c.object(f.dst);
  const int m = t.rank();
  const int n = c.object(f.src).rank();
  IntMatrix mat(m, n + m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) mat.add(i, j, a[i][j]);
    mat.add(i, n + i, t.modulus(i));
  }
  auto s = smith_form(mat);
  BigInt prod = 1;
  for (const auto& d : s.invariants) prod *= d;
  return prod;
}

TEST(ExactTest, ObjectsOfInstances) {
  auto v = inst("vect:2:2");
  ASSERT_EQ(v->objects(), 3);
  EXPECT_EQ(v->object_name(2), "F^2");
  auto a = inst("abp:2:8");
  std::vector<std::string> names;
  for (int o = 0; o < a->objects(); ++o) names.push_back(a->object_name(o));
  EXPECT_EQ(names, (std::vector<std::string>{"0", "c2", "c4", "c2+c2", "c8", "c4+c2", "c2+c2+c2"}));
  EXPECT_EQ(a->find("c2+c4"), a->find("c4+c2"));
  EXPECT_FALSE(a->find("c16"));
  EXPECT_FALSE(a->direct_sum(*a->find("c4"), *a->find("c4")));
}

TEST(ExactTest, DescriptorsParse) {
  EXPECT_EQ(inst("vect:3:1")->name(), "vect:3:1");
  EXPECT_EQ(make_instance(std::string(R"({"kind":"abp","p":2,"bound":8})"))->objects(), 7);
  EXPECT_THROW(inst("vect:4:1"), InputError);
  EXPECT_THROW(inst("ring:2:2"), InputError);
  EXPECT_THROW(inst("vect:2"), InputError);
  EXPECT_THROW(inst("abp:2:x"), InputError);
  EXPECT_THROW(inst("vect:2:20"), GuardError);
}

TEST(ExactTest, HomCountsMatchClosedForm) {
  for (const char* d : {"vect:2:2", "vect:3:2", "abp:2:8", "abp:3:9"}) {
    auto c = inst(d);
    for (int a = 0; a < c->objects(); ++a)
      for (int b = 0; b < c->objects(); ++b) {
        const auto& hs = c->homs(a, b);
        EXPECT_EQ(static_cast<long long>(hs.size()),
                  hom_count(c->p(), c->object(a).exps(), c->object(b).exps()))
            << d << " " << c->object_name(a) << " -> " << c->object_name(b);
        std::set<std::vector<int>> distinct;
        for (const auto& h : hs) distinct.insert(h.table);
        EXPECT_EQ(distinct.size(), hs.size());
      }
  }
}

TEST(ExactTest, EnumeratedHomsAreHomomorphisms) {
  auto c = inst("abp:2:8");
  for (int a = 0; a < c->objects(); ++a)
    for (int b = 0; b < c->objects(); ++b)
      for (const auto& h : c->homs(a, b)) ASSERT_TRUE(c->is_hom(h));
}

TEST(ExactTest, MatrixRoundTripAndWellDefinedness) {
  auto c = inst("abp:2:8");
  int c2 = *c->find("c2"), c4 = *c->find("c4");
  Hom times2 = c->from_matrix(c2, c4, {{2}});
  EXPECT_TRUE(c->injective(times2));
  EXPECT_EQ(c->matrix(times2), (std::vector<std::vector<int>>{{2}}));
  EXPECT_THROW(c->from_matrix(c2, c4, {{1}}), InputError);
  for (int a = 0; a < c->objects(); ++a)
    for (int b = 0; b < c->objects(); ++b)
      for (const auto& h : c->homs(a, b)) ASSERT_EQ(c->from_matrix(a, b, c->matrix(h)), h);
}

TEST(ExactTest, VectPredicatesAgreeWithGaussianElimination) {
  for (const char* d : {"vect:2:2", "vect:3:2", "vect:5:2"}) {
    auto c = inst(d);
    for (int a = 0; a < c->objects(); ++a)
      for (int b = 0; b < c->objects(); ++b)
        for (const auto& h : c->homs(a, b)) {
          int r = rank_mod_p(c->matrix(h), c->p());
          EXPECT_EQ(c->is_ingressive(h), r == c->object(a).rank());
          EXPECT_EQ(c->is_egressive(h), r == c->object(b).rank());
        }
  }
}

TEST(ExactTest, AbpPredicatesAgreeWithSmithForm) {
  for (const char* d : {"abp:2:8", "abp:3:9"}) {
    auto c = inst(d);
    for (int a = 0; a < c->objects(); ++a)
      for (int b = 0; b < c->objects(); ++b)
        for (const auto& h : c->homs(a, b)) {
          BigInt coker = coker_order(*c, h);
          BigInt image = BigInt(c->order(b)) / coker;
          EXPECT_EQ(c->is_egressive(h), coker == 1);
          EXPECT_EQ(c->is_ingressive(h), image == c->order(a));
        }
  }
}

TEST(ExactTest, PullbackAlongIdentityIsIdentitySquare) {
  auto c = inst("vect:2:2");
  int f2 = *c->find("F^2");
  Square s = c->ambigressive_pullback(c->identity(f2), c->identity(f2));
  EXPECT_EQ(s.w(), f2);
  EXPECT_TRUE(c->is_iso(s.to_u));
  EXPECT_TRUE(bicartesian_check(*c, s));
}

TEST(ExactTest, PullbackOfLineAlongIdentity) {
  auto c = inst("vect:2:2");
  int f = *c->find("F"), f2 = *c->find("F^2");
  Hom i = c->from_matrix(f, f2, {{1}, {0}});
  Square s = c->ambigressive_pullback(i, c->identity(f2));
  EXPECT_EQ(s.w(), f);
  EXPECT_TRUE(c->is_ingressive(s.to_v));
  EXPECT_TRUE(bicartesian_check(*c, s));
}

TEST(ExactTest, CyclicPullbackIsUniversal) {
  auto c = inst("abp:2:8");
  int c2 = *c->find("c2"), c4 = *c->find("c4"), c8 = *c->find("c8");
  Hom i = c->from_matrix(c2, c4, {{2}});
  Hom e = c->from_matrix(c8, c4, {{1}});
  Square s = c->ambigressive_pullback(i, e);
  // {(u, v) : 2u = v mod 4} in c2 + c8 has (1, 2) of order 4.
  EXPECT_EQ(s.w(), c4);
  EXPECT_TRUE(size_identity(*c, s));
  auto r = universal_check(*c, s);
  EXPECT_TRUE(r.bicartesian()) << r.witness;
}

TEST(ExactTest, ProjectionSquareIsNotBicartesian) {
  auto c = inst("vect:2:2");
  int f = *c->find("F"), f2 = *c->find("F^2");
  Hom pr1 = c->from_matrix(f2, f, {{1, 0}});
  Square s{pr1, pr1, c->identity(f), c->identity(f)};
  auto r = universal_check(*c, s);
  EXPECT_TRUE(r.commutes);
  EXPECT_FALSE(r.pullback);
  EXPECT_FALSE(bicartesian_check(*c, s));
}

TEST(ExactTest, NonCommutingSquareIsRejected) {
  auto c = inst("vect:2:1");
  int f = *c->find("F");
  Square s{c->identity(f), c->zero_map(f, f), c->identity(f), c->identity(f)};
  EXPECT_FALSE(universal_check(*c, s).commutes);
}

TEST(ExactTest, ExactSequenceFixturesAreBicartesian) {
  auto seqs = read_exact_sequences(test::fixture("exact/sequences.json"));
  ASSERT_GE(seqs.size(), 10u);
  for (const auto& s : seqs) {
    auto r = universal_check(*s.instance, s.square());
    EXPECT_TRUE(r.bicartesian()) << s.name << ": " << r.witness;
    EXPECT_TRUE(size_identity(*s.instance, s.square())) << s.name;
  }
}

TEST(ExactTest, MalformedSequenceFixtureNamesLocation) {
  std::string path = ::testing::TempDir() + "/bad_sequences.json";
  write_json(path, parse_json(R"({"sequences":[{"instance":"abp:2:4",
      "incl":{"src":"c2","dst":"c4","matrix":[[1]]},
      "proj":{"src":"c4","dst":"c2","matrix":[[1]]}}]})", "inline"));
  try {
    read_exact_sequences(path);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("$.sequences[0].incl.matrix"), std::string::npos) << e.what();
  }
}

TEST(ExactTest, EveryConstructedPullbackIsBicartesianWithSizeIdentity) {
  for (const char* d : {"vect:2:2", "vect:3:1", "abp:2:4"}) {
    auto c = inst(d);
    for (int y = 0; y < c->objects(); ++y)
      for (int u = 0; u < c->objects(); ++u)
        for (const auto& i : c->ingressives(u, y))
          for (int v = 0; v < c->objects(); ++v)
            for (const auto& e : c->egressives(v, y)) {
              Square s = c->ambigressive_pullback(i, e);
              ASSERT_TRUE(size_identity(*c, s)) << d;
              ASSERT_TRUE(bicartesian_check(*c, s)) << d;
            }
  }
}

TEST(ExactTest, PushoutOfAmbigressiveSpanIsBicartesian) {
  for (const char* d : {"vect:2:2", "abp:2:4"}) {
    auto c = inst(d);
    for (int w = 0; w < c->objects(); ++w)
      for (int v = 0; v < c->objects(); ++v)
        for (const auto& i : c->ingressives(w, v))
          for (int u = 0; u < c->objects(); ++u)
            for (const auto& e : c->egressives(w, u)) {
              Square s = c->ambigressive_pushout(i, e);
              ASSERT_TRUE(c->is_ingressive(s.u_to_y));
              ASSERT_TRUE(c->is_egressive(s.v_to_y));
              ASSERT_TRUE(size_identity(*c, s));
              ASSERT_TRUE(bicartesian_check(*c, s)) << d;
            }
  }
}

TEST(ExactTest, VerifyTriplePasses) {
  for (const char* d : {"vect:2:2", "abp:2:8"}) {
    auto r = verify_triple(*inst(d));
    EXPECT_TRUE(r.ok) << d << ": " << r.witness;
    EXPECT_GT(r.cospans, 0);
  }
}

TEST(ExactTest, VerifyTripleCatchesAllEgressiveCorruption) {
  AllEgressiveInstance bad(*inst("vect:2:2"));
  auto r = verify_triple(bad);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.witness.find("cospan"), std::string::npos) << r.witness;
}

TEST(ExactTest, SpansMatchSubgroupOracle) {
  for (const char* d : {"vect:2:1", "vect:3:1", "vect:2:2", "abp:2:4"}) {
    auto c = inst(d);
    for (int x = 0; x < c->objects(); ++x)
      for (int y = 0; y < c->objects(); ++y) {
        auto ours = spans(*c, x, y);
        std::vector<std::vector<int>> got;
        for (const auto& s : ours) {
          EXPECT_TRUE(is_span(*c, s));
          got.push_back(s.elements);
        }
        EXPECT_EQ(got, span_oracle(*c, x, y)) << d << " " << c->object_name(x) << " -> "
                                              << c->object_name(y);
      }
  }
}

TEST(ExactTest, CanonicalFormIsIdempotent) {
  auto c = inst("abp:2:4");
  for (int x = 0; x < c->objects(); ++x)
    for (int y = 0; y < c->objects(); ++y)
      for (const auto& s : spans(*c, x, y)) {
        EXPECT_EQ(canonicalize(s), s);
        EXPECT_EQ(canonicalize(canonicalize(s)), canonicalize(s));
        auto legs = span_legs(*c, s);
        EXPECT_TRUE(c->is_egressive(legs.to_src));
        EXPECT_TRUE(c->is_ingressive(legs.to_dst));
        EXPECT_EQ(span_of_legs(*c, legs.to_src, legs.to_dst), s);
      }
}

TEST(ExactTest, SpanCompositionIsUnitalAndAssociative) {
  for (const char* d : {"vect:2:1", "vect:2:2"}) {
    auto c = inst(d);
    const int n = c->objects();
    std::vector<std::vector<std::vector<Span>>> hom(n, std::vector<std::vector<Span>>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) hom[x][y] = spans(*c, x, y);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (const auto& s : hom[x][y]) {
          EXPECT_EQ(span_compose(*c, identity_span(*c, x), s), s);
          EXPECT_EQ(span_compose(*c, s, identity_span(*c, y)), s);
        }
    for (int w = 0; w < n; ++w)
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            for (const auto& r : hom[w][x])
              for (const auto& s : hom[x][y])
                for (const auto& t : hom[y][z]) {
                  Span left = span_compose(*c, span_compose(*c, r, s), t);
                  ASSERT_EQ(left, span_compose(*c, r, span_compose(*c, s, t)));
                  ASSERT_TRUE(is_span(*c, left));
                }
  }
}

TEST(ExactTest, ZeroSpanThenIdentity) {
  auto c = inst("vect:2:1");
  int z = c->zero(), f = *c->find("F");
  Span zero_to_f = span_of_legs(*c, c->identity(z), c->zero_map(z, f));
  EXPECT_EQ(span_compose(*c, zero_to_f, identity_span(*c, f)), zero_to_f);
}

}  // namespace
}  // namespace qcat
