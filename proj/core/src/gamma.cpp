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

#include "qcat/gamma.hpp"

#include <algorithm>

#include "qcat/error.hpp"

namespace qcat {

LambdaMorphism LambdaMorphism::identity(int n) {
  LambdaMorphism f{n, n, std::vector<int>(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i) f.map[i] = i;
  return f;
}

bool LambdaMorphism::valid() const {
  if (static_cast<int>(map.size()) != source) return false;
  return std::all_of(map.begin(), map.end(), [&](int v) { return v >= -1 && v < target; });
}

std::string LambdaMorphism::str() const {
  std::string s = std::to_string(source) + "->" + std::to_string(target) + ":[";
  for (std::size_t i = 0; i < map.size(); ++i)
    s += (i ? "," : "") + (map[i] < 0 ? std::string("*") : std::to_string(map[i]));
  return s + "]";
}

LambdaMorphism compose(const LambdaMorphism& g, const LambdaMorphism& f) {
  if (f.target != g.source) throw InputError("Lambda compose: " + f.str() + " then " + g.str());
  LambdaMorphism h{f.source, g.target, f.map};
  for (auto& v : h.map)
    if (v >= 0) v = g.map[v];
  return h;
}

std::vector<LambdaMorphism> all_lambda(int j, int i) {
  std::vector<LambdaMorphism> out;
  LambdaMorphism f{j, i, std::vector<int>(static_cast<std::size_t>(j), -1)};
  while (true) {
    out.push_back(f);
    int k = 0;
    while (k < j && ++f.map[k] == i) f.map[k++] = -1;
    if (k == j) break;
  }
  return out;
}

int smash(int i, int j) { return i * j; }

LambdaMorphism smash_mor(const LambdaMorphism& f, const LambdaMorphism& g) {
  LambdaMorphism h{f.source * g.source, f.target * g.target, {}};
  for (int a = 0; a < f.source; ++a)
    for (int b = 0; b < g.source; ++b)
      h.map.push_back(f.map[a] < 0 || g.map[b] < 0 ? -1 : f.map[a] * g.target + g.map[b]);
  return h;
}

int u_on_objects(int n) { return n; }

DeltaMap cut(int n, int k) {
  std::vector<int> v;
  for (int x = 0; x <= n; ++x) v.push_back(x >= k ? 1 : 0);
  return DeltaMap(1, v);
}

LambdaMorphism u_on_maps(const DeltaMap& g) {
  const int m = g.source();
  const int n = g.target();
  LambdaMorphism f{n, m, {}};
  for (int k = 1; k <= n; ++k) {
    if (g(0) < k && k <= g(m)) {
      int first = 0;
      while (g(first) < k) ++first;
      f.map.push_back(first - 1);
    } else {
      f.map.push_back(-1);
    }
  }
  return f;
}

LambdaMorphism u_power(const std::vector<DeltaMap>& gs) {
  if (gs.empty()) throw InputError("u_power needs at least one map");
  LambdaMorphism f = u_on_maps(gs[0]);
  for (std::size_t i = 1; i < gs.size(); ++i) f = smash_mor(f, u_on_maps(gs[i]));
  return f;
}

std::vector<int> retraction_set(int n, const DeltaMap& alpha) {
  if (alpha.source() != 1 || alpha.target() != n)
    throw InputError("retraction_set: alpha must be a map [1] -> [" + std::to_string(n) + "]");
  std::vector<int> out;
  for (int k = alpha(0) + 1; k <= alpha(1); ++k) out.push_back(k - 1);
  return out;
}

std::vector<int> retraction_set_power(const std::vector<int>& ns, const std::vector<DeltaMap>& alphas) {
  if (ns.size() != alphas.size() || ns.empty())
    throw InputError("retraction_set_power: arity mismatch");
  std::vector<int> out{0};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    auto r = retraction_set(ns[i], alphas[i]);
    std::vector<int> next;
    for (int a : out)
      for (int b : r) next.push_back(a * u_on_objects(ns[i]) + b);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string set_name(int mask) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; (1 << i) <= mask; ++i)
    if (mask >> i & 1) {
      s += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
  return s + "}";
}

int preimage(const LambdaMorphism& phi, int mask) {
  int out = 0;
  for (int i = 0; i < phi.source; ++i)
    if (phi.map[i] >= 0 && (mask >> phi.map[i] & 1)) out |= 1 << i;
  return out;
}

}  // namespace

int LCategory::morphism(int k, int j, int d) const { return index[k][j][d]; }

LCategory L_of(int size) {
  if (size < 0 || size > 6) throw GuardError("L_of: |I| must lie in 0..6");
  const int n = 1 << size;
  LCategory l;
  l.size = size;
  l.index.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, -1)));
  FiniteCategory::Builder b;
  for (int k = 0; k < n; ++k) b.add_bare_object(set_name(k));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const int both = k & j;
      for (int d = both;; d = (d - 1) & both) {
        int m = b.add_morphism(set_name(k) + ">" + set_name(j) + ":" + set_name(d), k, j);
        l.index[k][j][d] = m;
        l.parts.push_back({k, j, d});
        if (k == j && d == k) b.set_identity(k, m);
        if (d == 0) break;
      }
    }
  for (const auto& f : l.parts)
    for (int l2 = 0; l2 < n; ++l2)
      for (int d2 = f[1] & l2;; d2 = (d2 - 1) & (f[1] & l2)) {
        b.set_compose(l.index[f[1]][l2][d2], l.index[f[0]][f[1]][f[2]], l.index[f[0]][l2][f[2] & d2]);
        if (d2 == 0) break;
      }
  l.category = std::move(b).build();
  return l;
}

FunctorData L_restriction(const LambdaMorphism& phi, const LCategory& l_i,
                          const LCategory& l_i_prime) {
  if (phi.target != l_i.size || phi.source != l_i_prime.size)
    throw InputError("L_restriction: " + phi.str() + " does not match the categories");
  FunctorData f;
  f.source = &l_i.category;
  f.target = &l_i_prime.category;
  for (int k = 0; k < (1 << l_i.size); ++k) f.on_objects.push_back(preimage(phi, k));
  for (const auto& p : l_i.parts)
    f.on_morphisms.push_back(
        l_i_prime.morphism(preimage(phi, p[0]), preimage(phi, p[1]), preimage(phi, p[2])));
  return f;
}

GammaCheck check_u_functoriality(int max_arity) {
  GammaCheck c;
  c.name = "u-functoriality";
  for (int a = 0; a <= max_arity; ++a)
    for (int b = 0; b <= max_arity; ++b)
      for (int cc = 0; cc <= max_arity; ++cc) {
        auto hs = DeltaMap::all(a, b);
        for (const auto& g : DeltaMap::all(b, cc))
          for (const auto& h : hs) {
            ++c.cases;
            if (c.ok && u_on_maps(g.after(h)) != compose(u_on_maps(h), u_on_maps(g))) {
              c.ok = false;
              c.witness = "g = " + g.str() + ", h = " + h.str();
            }
          }
      }
  return c;
}

GammaCheck check_u_sizes(int max_n) {
  GammaCheck c;
  c.name = "u-sizes";
  for (int n = 0; n <= max_n; ++n) {
    ++c.cases;
    int surj = 0;
    for (const auto& eta : DeltaMap::all(n, 1)) surj += eta.surjective() ? 1 : 0;
    if (c.ok && (surj != n || u_on_objects(n) != surj)) {
      c.ok = false;
      c.witness = "|u([" + std::to_string(n) + "])| = " + std::to_string(surj);
    }
  }
  return c;
}

GammaCheck check_u_power_functoriality(int max_arity) {
  GammaCheck c;
  c.name = "u-power";
  std::vector<std::pair<DeltaMap, DeltaMap>> pairs;  // (g, h) with g o h defined
  for (int a = 0; a <= max_arity; ++a)
    for (int b = 0; b <= max_arity; ++b)
      for (int cc = 0; cc <= max_arity; ++cc)
        for (const auto& g : DeltaMap::all(b, cc))
          for (const auto& h : DeltaMap::all(a, b)) pairs.emplace_back(g, h);
  for (const auto& [g1, h1] : pairs)
    for (const auto& [g2, h2] : pairs) {
      ++c.cases;
      auto lhs = u_power({g1.after(h1), g2.after(h2)});
      auto rhs = compose(u_power({h1, h2}), u_power({g1, g2}));
      if (c.ok && lhs != rhs) {
        c.ok = false;
        c.witness = "(" + g1.str() + ", " + g2.str() + ") after (" + h1.str() + ", " + h2.str() + ")";
      }
    }
  for (int a = 0; a <= max_arity; ++a)
    for (int b = 0; b <= max_arity; ++b) {
      ++c.cases;
      if (c.ok && u_power({DeltaMap::identity(a), DeltaMap::identity(b)}) !=
                      LambdaMorphism::identity(smash(a, b))) {
        c.ok = false;
        c.witness = "u^(2) of identities on [" + std::to_string(a) + "], [" + std::to_string(b) + "]";
      }
    }
  return c;
}

GammaCheck check_smash_functoriality(int max_size) {
  GammaCheck c;
  c.name = "smash";
  std::vector<std::pair<LambdaMorphism, LambdaMorphism>> pairs;  // (g, f), g o f defined
  for (int i = 0; i <= max_size; ++i)
    for (int j = 0; j <= max_size; ++j)
      for (int k = 0; k <= max_size; ++k)
        for (const auto& f : all_lambda(i, j))
          for (const auto& g : all_lambda(j, k)) pairs.emplace_back(g, f);
  for (const auto& [g1, f1] : pairs)
    for (const auto& [g2, f2] : pairs) {
      ++c.cases;
      if (c.ok && smash_mor(compose(g1, f1), compose(g2, f2)) !=
                      compose(smash_mor(g1, g2), smash_mor(f1, f2))) {
        c.ok = false;
        c.witness = f1.str() + ", " + g1.str() + " ^ " + f2.str() + ", " + g2.str();
      }
    }
  for (int i = 0; i <= max_size; ++i)
    for (int j = 0; j <= max_size; ++j) {
      ++c.cases;
      if (c.ok && smash_mor(LambdaMorphism::identity(i), LambdaMorphism::identity(j)) !=
                      LambdaMorphism::identity(smash(i, j))) {
        c.ok = false;
        c.witness = "identity on " + std::to_string(i) + " ^ " + std::to_string(j);
      }
    }
  return c;
}

GammaCheck check_retractions(int max_n) {
  GammaCheck c;
  c.name = "retractions";
  for (int n = 0; n <= max_n; ++n)
    for (const auto& alpha : DeltaMap::all(1, n)) {
      ++c.cases;
      std::vector<int> direct;
      for (int k = 1; k <= n; ++k)
        if (cut(n, k).after(alpha) == DeltaMap::identity(1)) direct.push_back(k - 1);
      if (c.ok && direct != retraction_set(n, alpha)) {
        c.ok = false;
        c.witness = "alpha = " + alpha.str();
      }
    }
  return c;
}

GammaCheck check_retraction_naturality(int max_arity) {
  GammaCheck c;
  c.name = "naturality";
  struct Case {
    int n;        // S = [n]
    int n_prime;  // S' = [n']
    DeltaMap g;   // S' -> S
    DeltaMap alpha_prime;
  };
  std::vector<Case> cases;
  for (int n = 1; n <= max_arity; ++n)
    for (int np = 1; np <= max_arity; ++np)
      for (const auto& g : DeltaMap::all(np, n))
        for (const auto& ap : DeltaMap::all(1, np))
          if (ap.injective()) cases.push_back({n, np, g, ap});
  auto lands = [](const LambdaMorphism& f, const std::vector<int>& from, const std::vector<int>& into) {
    for (int b : from)
      if (f.map[b] < 0 || !std::binary_search(into.begin(), into.end(), f.map[b])) return false;
    return true;
  };
  for (const auto& x : cases) {
    ++c.cases;
    auto from = retraction_set(x.n, x.g.after(x.alpha_prime));
    auto into = retraction_set(x.n_prime, x.alpha_prime);
    if (c.ok && !lands(u_on_maps(x.g), from, into)) {
      c.ok = false;
      c.witness = "g = " + x.g.str() + ", alpha' = " + x.alpha_prime.str();
    }
  }
  for (const auto& x : cases)
    for (const auto& y : cases) {
      ++c.cases;
      auto from = retraction_set_power({x.n, y.n}, {x.g.after(x.alpha_prime), y.g.after(y.alpha_prime)});
      auto into = retraction_set_power({x.n_prime, y.n_prime}, {x.alpha_prime, y.alpha_prime});
      if (c.ok && !lands(u_power({x.g, y.g}), from, into)) {
        c.ok = false;
        c.witness = "(" + x.g.str() + ", " + y.g.str() + ")";
      }
    }
  return c;
}

GammaCheck check_L(int max_size) {
  GammaCheck c;
  c.name = "L";
  std::vector<LCategory> ls;
  for (int s = 0; s <= max_size; ++s) {
    ls.push_back(L_of(s));
    const auto& l = ls.back();
    ++c.cases;
    if (auto bad = l.category.check_axioms()) {
      c.ok = false;
      c.witness = "L_" + std::to_string(s) + ": " + *bad;
      return c;
    }
    long long brute = 0;
    for (int k = 0; k < (1 << s); ++k)
      for (int j = 0; j < (1 << s); ++j) {
        std::vector<int> elems;
        for (int i = 0; i < s; ++i)
          if (k >> i & 1) elems.push_back(i);
        std::vector<int> jel;
        for (int i = 0; i < s; ++i)
          if (j >> i & 1) jel.push_back(i);
        for (const auto& psi : all_lambda(static_cast<int>(elems.size()), static_cast<int>(jel.size()))) {
          bool square = true;
          for (std::size_t a = 0; a < elems.size(); ++a)
            if (psi.map[a] >= 0 && jel[psi.map[a]] != elems[a]) square = false;
          brute += square ? 1 : 0;
        }
      }
    if (brute != l.category.morphisms()) {
      c.ok = false;
      c.witness = "L_" + std::to_string(s) + " has " + std::to_string(l.category.morphisms()) +
                  " morphisms, enumeration gives " + std::to_string(brute);
      return c;
    }
  }
  for (int s = 0; s <= max_size; ++s)
    for (int sp = 0; sp <= max_size; ++sp)
      for (const auto& phi : all_lambda(sp, s)) {
        ++c.cases;
        auto f = L_restriction(phi, ls[s], ls[sp]);
        if (auto bad = f.check()) {
          c.ok = false;
          c.witness = "preimage along " + phi.str() + ": " + *bad;
          return c;
        }
      }
  return c;
}

std::vector<GammaCheck> gamma_checks(const std::string& which, int max_arity) {
  if (max_arity < 0) throw InputError("gamma: max arity must be >= 0");
  std::vector<GammaCheck> out;
  bool all = which == "all";
  if (all || which == "u-functoriality") out.push_back(check_u_functoriality(max_arity));
  if (all || which == "u-sizes") out.push_back(check_u_sizes(all ? 6 : max_arity));
  if (all || which == "u-power") out.push_back(check_u_power_functoriality(all ? 2 : max_arity));
  if (all || which == "smash") out.push_back(check_smash_functoriality(all ? 2 : max_arity));
  if (all || which == "retractions") out.push_back(check_retractions(max_arity));
  if (all || which == "naturality") out.push_back(check_retraction_naturality(all ? 2 : max_arity));
  if (all || which == "L") out.push_back(check_L(all ? 3 : max_arity));
  if (out.empty()) throw InputError("gamma: unknown check \"" + which + "\"");
  return out;
}

}  // namespace qcat
