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

#include "qcat/simplicial_set.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "qcat/error.hpp"

namespace qcat {

std::size_t SimplexHash::operator()(const Simplex& s) const {
  std::size_t h = std::hash<int>()(s.base.dim) * 1000003u ^ std::hash<int>()(s.base.index);
  for (int v : s.degeneracy.values()) h = h * 31u + static_cast<std::size_t>(v);
  return h;
}

const std::vector<DeltaMap>& surjections(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<DeltaMap>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;
  std::vector<DeltaMap> out;
  if (k >= 0 && k <= n) {
    // Choose the k positions p in 1..n where the value steps up.
    std::vector<int> steps(k);
    std::iota(steps.begin(), steps.end(), 1);
    while (true) {
      std::vector<int> v(n + 1, 0);
      int level = 0;
      std::size_t next = 0;
      for (int p = 1; p <= n; ++p) {
        if (next < steps.size() && steps[next] == p) {
          ++level;
          ++next;
        }
        v[p] = level;
      }
      out.emplace_back(k, std::move(v));
      int i = k - 1;
      while (i >= 0 && steps[i] == n - (k - 1 - i)) --i;
      if (i < 0) break;
      ++steps[i];
      for (int j = i + 1; j < k; ++j) steps[j] = steps[j - 1] + 1;
    }
  }
  return cache.emplace(std::make_pair(n, k), std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// Builder

SimplexRef SimplicialSet::Builder::add(std::string label, std::vector<Simplex> faces) {
  const int n = faces.empty() ? 0 : static_cast<int>(faces.size()) - 1;
  if (!faces.empty() && n == 0)
    throw InputError("simplex '" + label + "': a vertex has no faces");
  if (label.empty()) throw InputError("simplex label must be nonempty");
  if (by_label_.count(label)) throw InputError("duplicate simplex label '" + label + "'");
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const Simplex& f = faces[i];
    const auto where = "simplex '" + label + "' face " + std::to_string(i);
    if (f.dim() != n - 1) throw InputError(where + ": wrong dimension");
    if (!f.degeneracy.surjective()) throw InputError(where + ": degeneracy is not a surjection");
    if (f.base.dim != f.degeneracy.target() || f.base.dim >= n || f.base.dim < 0 ||
        f.base.index < 0 || f.base.index >= count(f.base.dim))
      throw InputError(where + ": unknown target simplex");
  }
  if (static_cast<int>(labels_.size()) <= n) {
    labels_.resize(n + 1);
    faces_.resize(n + 1);
  }
  SimplexRef ref{n, static_cast<int>(labels_[n].size())};
  by_label_.emplace(label, ref);
  labels_[n].push_back(std::move(label));
  faces_[n].push_back(std::move(faces));
  return ref;
}

int SimplicialSet::Builder::count(int dim) const {
  return dim >= 0 && dim < static_cast<int>(labels_.size())
             ? static_cast<int>(labels_[dim].size())
             : 0;
}

SimplicialSet SimplicialSet::Builder::build_unchecked(std::optional<int> truncation) && {
  SimplicialSet x;
  // Trailing empty dimensions never arise from add(), but gaps can.
  x.labels_ = std::move(labels_);
  x.faces_ = std::move(faces_);
  x.by_label_ = std::move(by_label_);
  if (truncation && x.dimension() > *truncation)
    throw InputError("simplices stored above the declared truncation");
  x.truncation_ = truncation;
  return x;
}

SimplicialSet SimplicialSet::Builder::build(std::optional<int> truncation) && {
  SimplicialSet x = std::move(*this).build_unchecked(truncation);
  if (auto bad = x.check_identities()) throw InputError("simplicial identities fail: " + *bad);
  return x;
}

// ---------------------------------------------------------------------------
// Queries

void SimplicialSet::require_depth(int n, const char* what) const {
  if (!stored_through(n))
    throw DepthError(std::string(what) + ": needs simplices through dimension " +
                     std::to_string(n) + " but the set is truncated at " +
                     std::to_string(*truncation_));
}

int SimplicialSet::count(int n) const {
  return n >= 0 && n <= dimension() ? static_cast<int>(labels_[n].size()) : 0;
}

std::size_t SimplicialSet::total() const {
  std::size_t t = 0;
  for (const auto& d : labels_) t += d.size();
  return t;
}

std::optional<SimplexRef> SimplicialSet::lookup(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

Simplex SimplicialSet::apply(const DeltaMap& f, const Simplex& s) const {
  DeltaMap g = s.degeneracy.after(f);
  SimplexRef base = s.base;
  while (true) {
    auto [epi, mono] = g.factor();
    const int m = mono.target();
    if (mono.source() == m) return {std::move(epi), base};
    // Peel off the largest coface: mono = d^j o rest.
    int j = m;
    for (int k = mono.source(); k >= 0 && mono(k) == j; --k) --j;
    std::vector<int> rest(mono.values());
    for (int& v : rest) v = v < j ? v : v - 1;
    const Simplex& fc = faces(base)[j];
    g = fc.degeneracy.after(DeltaMap(m - 1, std::move(rest)).after(epi));
    base = fc.base;
  }
}

Simplex SimplicialSet::face(const Simplex& s, int i) const {
  return apply(DeltaMap::coface(s.dim(), i), s);
}

Simplex SimplicialSet::degeneracy(const Simplex& s, int i) const {
  return {s.degeneracy.after(DeltaMap::codegeneracy(s.dim(), i)), s.base};
}

std::vector<Simplex> SimplicialSet::simplices(int n) const {
  require_depth(n, "simplices");
  std::vector<Simplex> out;
  for (int k = 0; k <= std::min(n, dimension()); ++k) {
    const auto& surj = surjections(n, k);
    for (int idx = 0; idx < count(k); ++idx)
      for (const auto& eta : surj) out.push_back({eta, SimplexRef{k, idx}});
  }
  return out;
}

std::optional<std::string> SimplicialSet::check_identities() const {
  for (int n = 1; n <= dimension(); ++n) {
    for (int idx = 0; idx < count(n); ++idx) {
      const SimplexRef ref{n, idx};
      const auto& fs = faces(ref);
      if (static_cast<int>(fs.size()) != n + 1)
        return "simplex '" + label(ref) + "' has the wrong number of faces";
      for (int i = 0; i <= n; ++i) {
        const Simplex& f = fs[i];
        if (f.dim() != n - 1 || !f.degeneracy.surjective() || f.base.dim >= n ||
            f.base.dim != f.degeneracy.target() || f.base.index >= count(f.base.dim))
          return "simplex '" + label(ref) + "' face " + std::to_string(i) + " is malformed";
      }
      for (int j = 1; n >= 2 && j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (face(fs[j], i) != face(fs[i], j - 1))
            return "d" + std::to_string(i) + " d" + std::to_string(j) + " != d" +
                   std::to_string(j - 1) + " d" + std::to_string(i) + " on '" + label(ref) + "'";
    }
  }
  for (int idx = 0; idx < count(0); ++idx)
    if (!faces(SimplexRef{0, idx}).empty()) return "a vertex carries faces";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

std::string subset_label(const std::vector<int>& vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "]";
}

std::string word_string(const DeltaMap& eta) {
  std::string s;
  for (int w : eta.degeneracy_word()) s += (s.empty() ? "" : ".") + std::to_string(w);
  return s;
}

// Splits a pair of n-simplices into the degeneracies they share and a
// jointly nondegenerate pair.
std::tuple<DeltaMap, Simplex, Simplex> joint_normal_form(const Simplex& a, const Simplex& b) {
  const int m = a.dim();
  std::vector<int> nu(m + 1, 0);
  std::vector<int> ea{a.degeneracy(0)};
  std::vector<int> eb{b.degeneracy(0)};
  for (int t = 1; t <= m; ++t) {
    const bool shared =
        a.degeneracy(t) == a.degeneracy(t - 1) && b.degeneracy(t) == b.degeneracy(t - 1);
    nu[t] = nu[t - 1] + (shared ? 0 : 1);
    if (!shared) {
      ea.push_back(a.degeneracy(t));
      eb.push_back(b.degeneracy(t));
    }
  }
  const int r = nu[m];
  return {DeltaMap(r, std::move(nu)), Simplex{DeltaMap(a.base.dim, std::move(ea)), a.base},
          Simplex{DeltaMap(b.base.dim, std::move(eb)), b.base}};
}

std::string pair_label(const SimplicialSet& x, const SimplicialSet& y, const Simplex& a,
                       const Simplex& b) {
  return "(" + x.label(a.base) + "|" + word_string(a.degeneracy) + "," + y.label(b.base) + "|" +
         word_string(b.degeneracy) + ")";
}

}  // namespace

Simplex product_simplex(const SimplicialSet& xy, const SimplicialSet& x, const SimplicialSet& y,
                        const Simplex& a, const Simplex& b) {
  if (a.dim() != b.dim()) throw InputError("product_simplex: dimensions differ");
  auto [nu, na, nb] = joint_normal_form(a, b);
  auto ref = xy.lookup(pair_label(x, y, na, nb));
  if (!ref) throw InputError("product_simplex: pair not stored in the product");
  return {std::move(nu), *ref};
}

SimplicialSet from_complex(const std::vector<std::vector<int>>& facets) {
  std::vector<std::set<std::vector<int>>> by_dim;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) continue;
    const int k = static_cast<int>(f.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> sub;
      for (int b = 0; b < k; ++b)
        if (mask & (1u << b)) sub.push_back(f[b]);
      if (static_cast<int>(by_dim.size()) < static_cast<int>(sub.size()))
        by_dim.resize(sub.size());
      by_dim[sub.size() - 1].insert(sub);
    }
  }
  SimplicialSet::Builder b;
  std::map<std::vector<int>, SimplexRef> refs;
  for (const auto& level : by_dim) {
    for (const auto& s : level) {
      std::vector<Simplex> faces;
      if (s.size() > 1) {
        for (std::size_t i = 0; i < s.size(); ++i) {
          std::vector<int> t = s;
          t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
          faces.push_back(Simplex::of(refs.at(t)));
        }
      }
      refs[s] = b.add(subset_label(s), std::move(faces));
    }
  }
  return std::move(b).build_unchecked();
}

SimplicialSet standard_simplex(int n) {
  if (n < 0) throw InputError("standard_simplex: negative dimension");
  std::vector<int> all(n + 1);
  std::iota(all.begin(), all.end(), 0);
  return from_complex({all});
}

SimplicialSet simplex_boundary(int n) {
  if (n < 1) throw InputError("simplex_boundary: dimension must be positive");
  std::vector<std::vector<int>> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(f);
  }
  return from_complex(facets);
}

SimplicialSet disjoint_union(const SimplicialSet& a, const SimplicialSet& b) {
  SimplicialSet::Builder out;
  const int top = std::max(a.dimension(), b.dimension());
  for (int n = 0; n <= top; ++n) {
    for (int side = 0; side < 2; ++side) {
      const SimplicialSet& x = side ? b : a;
      for (int i = 0; i < x.count(n); ++i) {
        std::vector<Simplex> faces = x.faces({n, i});
        if (side)
          for (auto& f : faces) f.base.index += a.count(f.base.dim);
        out.add(std::to_string(side) + "/" + x.label({n, i}), std::move(faces));
      }
    }
  }
  std::optional<int> trunc;
  if (a.truncation() || b.truncation())
    trunc = std::min(a.truncation().value_or(top), b.truncation().value_or(top));
  if (trunc) return truncate(std::move(out).build_unchecked(std::max(top, *trunc)), *trunc);
  return std::move(out).build_unchecked();
}

SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y, std::optional<int> depth) {
  const bool complete = !x.truncation() && !y.truncation();
  int top;
  if (depth) {
    top = *depth;
  } else if (complete) {
    top = x.dimension() + y.dimension();
  } else {
    top = std::min(x.truncation().value_or(1 << 20), y.truncation().value_or(1 << 20));
  }
  x.require_depth(top, "product");
  y.require_depth(top, "product");

  using Key = std::tuple<SimplexRef, DeltaMap, SimplexRef, DeltaMap>;
  std::map<Key, SimplexRef> index;
  SimplicialSet::Builder b;
  for (int n = 0; n <= top; ++n) {
    for (int p = 0; p <= std::min(n, x.dimension()); ++p) {
      for (int q = std::max(0, n - p); q <= std::min(n, y.dimension()); ++q) {
        for (const auto& eta : surjections(n, p)) {
          for (const auto& mu : surjections(n, q)) {
            bool joint = true;
            for (int t = 0; t < n && joint; ++t)
              joint = !(eta(t) == eta(t + 1) && mu(t) == mu(t + 1));
            if (!joint) continue;
            for (int i = 0; i < x.count(p); ++i) {
              for (int j = 0; j < y.count(q); ++j) {
                const Simplex a{eta, {p, i}};
                const Simplex c{mu, {q, j}};
                std::vector<Simplex> faces;
                for (int k = 0; n > 0 && k <= n; ++k) {
                  auto [nu, fa, fc] = joint_normal_form(x.face(a, k), y.face(c, k));
                  Key key{fa.base, fa.degeneracy, fc.base, fc.degeneracy};
                  faces.push_back({std::move(nu), index.at(key)});
                }
                const std::string label = pair_label(x, y, a, c);
                index.emplace(Key{SimplexRef{p, i}, eta, SimplexRef{q, j}, mu},
                              b.add(label, std::move(faces)));
              }
            }
          }
        }
      }
    }
  }
  const bool finite = complete && top >= x.dimension() + y.dimension();
  if (finite) return std::move(b).build_unchecked();
  return std::move(b).build_unchecked(top);
}

SimplicialSet opposite(const SimplicialSet& x) {
  SimplicialSet::Builder b;
  for (int n = 0; n <= x.dimension(); ++n) {
    for (int i = 0; i < x.count(n); ++i) {
      const auto& fs = x.faces({n, i});
      std::vector<Simplex> faces;
      for (int k = 0; n > 0 && k <= n; ++k) {
        const Simplex& f = fs[n - k];
        faces.push_back({f.degeneracy.reversed(), f.base});
      }
      b.add(x.label({n, i}), std::move(faces));
    }
  }
  return std::move(b).build_unchecked(x.truncation());
}

SimplicialSet truncate(const SimplicialSet& x, int n) {
  if (!x.truncation() && x.dimension() <= n) return x;
  if (x.truncation() && *x.truncation() <= n) return x;
  SimplicialSet::Builder b;
  for (int d = 0; d <= std::min(n, x.dimension()); ++d)
    for (int i = 0; i < x.count(d); ++i) b.add(x.label({d, i}), x.faces({d, i}));
  return std::move(b).build_unchecked(n);
}

SimplicialSet permute(const SimplicialSet& x, const std::vector<std::vector<int>>& perm) {
  std::vector<std::vector<std::pair<std::string, std::vector<Simplex>>>> slots(
      static_cast<std::size_t>(x.dimension() + 1));
  for (int n = 0; n <= x.dimension(); ++n) {
    slots[n].resize(x.count(n));
    for (int i = 0; i < x.count(n); ++i) {
      std::vector<Simplex> faces = x.faces({n, i});
      for (auto& f : faces) f.base.index = perm[f.base.dim][f.base.index];
      slots[n][perm[n][i]] = {x.label({n, i}), std::move(faces)};
    }
  }
  SimplicialSet::Builder b;
  for (auto& level : slots)
    for (auto& [label, faces] : level) b.add(std::move(label), std::move(faces));
  return std::move(b).build_unchecked(x.truncation());
}

SimplicialSet relabel(const SimplicialSet& x, const std::function<std::string(SimplexRef)>& name) {
  SimplicialSet::Builder b;
  for (int n = 0; n <= x.dimension(); ++n)
    for (int i = 0; i < x.count(n); ++i) b.add(name({n, i}), x.faces({n, i}));
  return std::move(b).build_unchecked(x.truncation());
}

SimplicialSet canonical_order(const SimplicialSet& x) {
  std::vector<std::vector<int>> perm(static_cast<std::size_t>(x.dimension() + 1));
  for (int n = 0; n <= x.dimension(); ++n) {
    std::vector<int> order(x.count(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int c) { return x.label({n, a}) < x.label({n, c}); });
    perm[n].resize(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) perm[n][order[k]] = static_cast<int>(k);
  }
  return permute(x, perm);
}

std::optional<std::string> compare_structure(const SimplicialSet& a, const SimplicialSet& b, int through) {
  for (int n = 0; n <= through; ++n) {
    if (a.count(n) != b.count(n))
      return "dimension " + std::to_string(n) + ": " + std::to_string(a.count(n)) + " vs " +
             std::to_string(b.count(n)) + " simplices";
    for (int i = 0; i < a.count(n); ++i) {
      if (a.label({n, i}) != b.label({n, i}))
        return "dimension " + std::to_string(n) + ": '" + a.label({n, i}) + "' vs '" + b.label({n, i}) + "'";
      if (a.faces({n, i}) != b.faces({n, i})) return "faces of '" + a.label({n, i}) + "' differ";
    }
  }
  return std::nullopt;
}

}  // namespace qcat
