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

#include "qcat/q_construction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "qcat/error.hpp"

namespace qcat {

std::optional<int> QCategory::morphism_of(const Span& s) const {
  auto it = index.find(s);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

QCategory q_category(std::shared_ptr<const ExactInstance> c, std::size_t max_morphisms) {
  QCategory q;
  q.instance = c;
  const int n = c->objects();
  FiniteCategory::Builder b;
  for (int o = 0; o < n; ++o) b.add_bare_object(c->object_name(o));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      auto hom = spans(*c, x, y);
      if (max_morphisms > 0 && q.spans.size() + hom.size() > max_morphisms)
        throw GuardError("Q construction exceeds " + std::to_string(max_morphisms) + " morphisms");
      Span id = identity_span(*c, x);
      for (std::size_t k = 0; k < hom.size(); ++k) {
        bool is_id = x == y && hom[k] == id;
        std::string name = is_id ? "1_" + c->object_name(x)
                                 : c->object_name(x) + "->" + c->object_name(y) + "#" +
                                       std::to_string(k);
        int m = b.add_morphism(name, x, y);
        if (is_id) b.set_identity(x, m);
        q.index.emplace(hom[k], m);
        q.spans.push_back(hom[k]);
      }
    }
  }
  std::vector<std::vector<int>> from(static_cast<std::size_t>(n));
  for (std::size_t m = 0; m < q.spans.size(); ++m) from[q.spans[m].src].push_back(static_cast<int>(m));
  for (std::size_t f = 0; f < q.spans.size(); ++f) {
    for (int g : from[q.spans[f].dst]) {
      Span gf = span_compose(*c, q.spans[f], q.spans[g]);
      auto it = q.index.find(gf);
      if (it == q.index.end())
        throw Error("Q construction: composite of spans is not a span of the instance");
      b.set_compose(g, static_cast<int>(f), it->second);
    }
  }
  q.category = std::move(b).build();
  return q;
}

K0Report k0(const QCategory& q, int depth) {
  if (depth < 2) throw InputError("k0 needs depth >= 2");
  K0Report r;
  r.objects = q.category.objects();
  r.morphisms = q.category.morphisms();
  Nerve n(q.category, depth);
  int comps = connected_components(n.set());
  if (comps != 1)
    throw DisconnectedError("nerve of Q(" + q.instance->name() + ") is disconnected", comps);
  r.presentation = pi1_presentation(n.set());
  r.simplified = tietze_simplify(r.presentation);
  r.group = abelianize(r.presentation);
  r.homology = homology(n.set());
  return r;
}

K0Report k0(std::shared_ptr<const ExactInstance> c, int depth) {
  return k0(q_category(std::move(c)), depth);
}

Hom AmbigressiveDiagram::egressive_to(const ExactInstance& c, int i, int j, int l) const {
  Hom h = c.identity(object(i, j));
  for (int m = j; m > l; --m) h = c.compose(egressive(i, m), h);
  return h;
}

Hom AmbigressiveDiagram::ingressive_to(const ExactInstance& c, int i, int j, int k) const {
  Hom h = c.identity(object(i, j));
  for (int m = i; m < k; ++m) h = c.compose(ingressive(m, j), h);
  return h;
}

Span AmbigressiveDiagram::spine(const ExactInstance& c, int k) const {
  return span_of_legs(c, egressive(k, k + 1), ingressive(k, k + 1));
}

namespace {

std::vector<std::pair<int, int>> positions(int n) {
  std::vector<std::pair<int, int>> out;
  for (int len = 0; len <= n; ++len)
    for (int i = 0; i + len <= n; ++i) out.emplace_back(i, i + len);
  return out;
}

}  // namespace

bool diagrams_isomorphic(const ExactInstance& c, const AmbigressiveDiagram& a,
                         const AmbigressiveDiagram& b) {
  if (a.n != b.n || a.objects != b.objects) return false;
  const int n = a.n;
  std::vector<std::vector<int>> phi(a.objects.size());
  for (auto [i, j] : positions(n)) {
    int o = a.object(i, j);
    auto& f = phi[AmbigressiveDiagram::pos(n, i, j)];
    if (i == j) {
      f.resize(static_cast<std::size_t>(c.order(o)));
      std::iota(f.begin(), f.end(), 0);
      continue;
    }
    const auto& right = phi[AmbigressiveDiagram::pos(n, i + 1, j)];
    const auto& below = phi[AmbigressiveDiagram::pos(n, i, j - 1)];
    const Hom& ia = a.ingressive(i, j);
    const Hom& ib = b.ingressive(i, j);
    std::vector<int> inv(static_cast<std::size_t>(c.order(ib.dst)), -1);
    for (int x = 0; x < c.order(o); ++x) inv[ib(x)] = x;
    f.assign(static_cast<std::size_t>(c.order(o)), -1);
    std::vector<char> used(f.size(), 0);
    for (int x = 0; x < c.order(o); ++x) {
      int y = inv[right[ia(x)]];
      if (y < 0 || used[y]) return false;
      if (below[a.egressive(i, j)(x)] != b.egressive(i, j)(y)) return false;
      used[y] = 1;
      f[x] = y;
    }
  }
  return true;
}

std::vector<AmbigressiveDiagram> enumerate_ambigressive(const ExactInstance& c, int n,
                                                        long long max_raw) {
  if (n < 0) throw InputError("enumerate_ambigressive: n must be >= 0");
  if (n > 3) throw GuardError("enumerate_ambigressive: n = " + std::to_string(n) + " exceeds 3");
  const auto pos = positions(n);
  const std::size_t cells = static_cast<std::size_t>((n + 1) * (n + 1));
  AmbigressiveDiagram d;
  d.n = n;
  d.objects.assign(cells, -1);
  d.down.assign(cells, Hom{});
  d.across.assign(cells, Hom{});
  std::vector<AmbigressiveDiagram> reps;
  std::map<std::vector<int>, std::vector<std::size_t>> buckets;
  long long raw = 0;

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == pos.size()) {
      if (max_raw > 0 && ++raw > max_raw)
        throw GuardError("enumerate_ambigressive: more than " + std::to_string(max_raw) +
                         " raw diagrams");
      auto& bucket = buckets[d.objects];
      for (std::size_t r : bucket)
        if (diagrams_isomorphic(c, reps[r], d)) return;
      bucket.push_back(reps.size());
      reps.push_back(d);
      return;
    }
    auto [i, j] = pos[k];
    int at = AmbigressiveDiagram::pos(n, i, j);
    if (i == j) {
      for (int o = 0; o < c.objects(); ++o) {
        d.objects[at] = o;
        rec(k + 1);
      }
      return;
    }
    int lower = d.object(i, j - 1);
    int right = d.object(i + 1, j);
    std::optional<Hom> corner_in, corner_down;
    int want = -1;
    if (j - i >= 2) {
      corner_in = d.ingressive(i, j - 1);
      corner_down = d.egressive(i + 1, j);
      long long num = static_cast<long long>(c.order(lower)) * c.order(right);
      int mid = c.order(d.object(i + 1, j - 1));
      if (num % mid != 0) return;
      want = static_cast<int>(num / mid);
    }
    for (int w = 0; w < c.objects(); ++w) {
      if (want >= 0 && c.order(w) != want) continue;
      auto ins = c.ingressives(w, right);
      if (ins.empty()) continue;
      for (const auto& e : c.egressives(w, lower)) {
        for (const auto& m : ins) {
          if (corner_in && c.compose(*corner_in, e) != c.compose(*corner_down, m)) continue;
          d.objects[at] = w;
          d.down[at] = e;
          d.across[at] = m;
          rec(k + 1);
        }
      }
    }
    d.objects[at] = -1;
  };
  rec(0);
  return reps;
}

bool diagram_bicartesian(const ExactInstance& c, const AmbigressiveDiagram& d) {
  for (int i = 0; i <= d.n; ++i)
    for (int k = i; k <= d.n; ++k)
      for (int l = k; l <= d.n; ++l)
        for (int j = l; j <= d.n; ++j) {
          Square s{d.egressive_to(c, i, j, l), d.ingressive_to(c, i, j, k),
                   d.ingressive_to(c, i, l, k), d.egressive_to(c, k, j, l)};
          if (!bicartesian_check(c, s)) return false;
        }
  return true;
}

long long composable_strings(const FiniteCategory& c, int n) {
  std::vector<long long> ending(static_cast<std::size_t>(c.objects()), 1);
  for (int step = 0; step < n; ++step) {
    std::vector<long long> next(ending.size(), 0);
    for (int m = 0; m < c.morphisms(); ++m) next[c.morphism(m).dst] += ending[c.morphism(m).src];
    ending = std::move(next);
  }
  return std::accumulate(ending.begin(), ending.end(), 0LL);
}

SegalReport segal_spine_check(const QCategory& q, int n) {
  const ExactInstance& c = *q.instance;
  SegalReport r;
  r.n = n;
  auto diagrams = enumerate_ambigressive(c, n);
  r.diagrams = static_cast<long long>(diagrams.size());
  r.strings = composable_strings(q.category, n);
  std::set<std::vector<int>> images;
  for (const auto& d : diagrams) {
    std::vector<int> t;
    if (n == 0) t.push_back(d.object(0, 0));
    for (int k = 0; k < n; ++k) {
      auto m = q.morphism_of(d.spine(c, k));
      if (!m) {
        r.witness = "spine of a diagram is not a morphism of Q";
        return r;
      }
      t.push_back(*m);
    }
    if (!images.insert(t).second) {
      r.witness = "two non-isomorphic diagrams share a spine";
      return r;
    }
  }
  r.bijective = r.diagrams == r.strings;
  if (!r.bijective)
    r.witness = std::to_string(r.diagrams) + " diagram classes vs " + std::to_string(r.strings) +
                " composable strings";
  return r;
}

RigidityReport groupoid_rigidity(const ExactInstance& c, int x, int y) {
  struct Concrete {
    int u;
    Hom e;
    Hom i;
  };
  std::vector<Concrete> all;
  std::map<int, std::vector<Hom>> autos;
  for (int u = 0; u < c.objects(); ++u) {
    auto ins = c.ingressives(u, y);
    auto egs = c.egressives(u, x);
    if (ins.empty() || egs.empty()) continue;
    autos[u] = c.isos(u);
    for (const auto& e : egs)
      for (const auto& i : ins) all.push_back({u, e, i});
  }
  RigidityReport r;
  r.spans = static_cast<int>(all.size());
  std::vector<int> parent(all.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int a) { return parent[a] == a ? a : parent[a] = root(parent[a]); };
  for (std::size_t s = 0; s < all.size(); ++s) {
    for (std::size_t t = 0; t < all.size(); ++t) {
      if (all[s].u != all[t].u) continue;
      int count = 0;
      for (const auto& phi : autos[all[s].u])
        if (c.compose(all[t].e, phi) == all[s].e && c.compose(all[t].i, phi) == all[s].i) ++count;
      r.morphisms += count;
      if (count > 1 && r.ok) {
        r.ok = false;
        r.witness = std::to_string(count) + " parallel isomorphisms between two spans through " +
                    c.object_name(all[s].u);
      }
      if (count > 0) parent[root(static_cast<int>(s))] = root(static_cast<int>(t));
    }
  }
  std::map<int, std::set<Span>> classes;
  for (std::size_t s = 0; s < all.size(); ++s)
    classes[root(static_cast<int>(s))].insert(span_of_legs(c, all[s].e, all[s].i));
  r.components = static_cast<int>(classes.size());
  std::set<Span> seen;
  for (const auto& [_, cls] : classes) {
    if (cls.size() != 1 || !seen.insert(*cls.begin()).second) {
      if (r.ok) r.witness = "components do not match span classes";
      r.ok = false;
    }
  }
  return r;
}

}  // namespace qcat
