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

#include "qcat/fundamental_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "qcat/error.hpp"
#include "qcat/homology.hpp"

namespace qcat {

namespace {

using Word = std::vector<int>;

void free_reduce(Word& w) {
  Word out;
  for (int a : w) {
    if (!out.empty() && out.back() == -a) {
      out.pop_back();
    } else {
      out.push_back(a);
    }
  }
  w = std::move(out);
}

void cyclic_reduce(Word& w) {
  free_reduce(w);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  w = Word(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (int& a : r) a = -a;
  return r;
}

// Least rotation of w or its inverse, used to detect duplicate relators.
Word canonical(const Word& w) {
  Word best = w;
  for (const Word& v : {w, inverse(w)}) {
    for (std::size_t s = 0; s < v.size(); ++s) {
      Word r(v.begin() + static_cast<std::ptrdiff_t>(s), v.end());
      r.insert(r.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(s));
      best = std::min(best, r);
    }
  }
  return best;
}

std::vector<std::vector<int>> vertex_adjacency(const SimplicialSet& x) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(x.count(0)));
  for (int e = 0; e < x.count(1); ++e) {
    const auto& f = x.faces({1, e});
    const int s = f[1].base.index, t = f[0].base.index;
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  return adj;
}

}  // namespace

std::string GroupPresentation::str() const {
  std::string s = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : "") + generators[i];
  s += " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) s += ", ";
    for (std::size_t k = 0; k < relators[r].size(); ++k) {
      const int a = relators[r][k];
      s += (k ? " " : "") + generators[static_cast<std::size_t>(std::abs(a) - 1)] + (a < 0 ? "^-1" : "");
    }
  }
  return s + ">";
}

int connected_components(const SimplicialSet& x) {
  const auto adj = vertex_adjacency(x);
  std::vector<int> seen(adj.size(), 0);
  int comps = 0;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (seen[v]) continue;
    ++comps;
    std::deque<int> q{static_cast<int>(v)};
    seen[v] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    }
  }
  return comps;
}

GroupPresentation pi1_presentation(const SimplicialSet& x, std::optional<SimplexRef> basepoint) {
  x.require_depth(2, "fundamental group");
  if (x.count(0) == 0) throw DisconnectedError("empty simplicial set", 0);
  const SimplexRef base = basepoint.value_or(SimplexRef{0, 0});
  if (base.dim != 0 || base.index < 0 || base.index >= x.count(0))
    throw InputError("basepoint must be a vertex");
  const int comps = connected_components(x);
  if (comps != 1)
    throw DisconnectedError("simplicial set has " + std::to_string(comps) + " components", comps);

  // BFS spanning tree over edges in index order.
  std::vector<std::vector<std::pair<int, int>>> incident(static_cast<std::size_t>(x.count(0)));
  for (int e = 0; e < x.count(1); ++e) {
    const auto& f = x.faces({1, e});
    incident[f[1].base.index].push_back({e, f[0].base.index});
    incident[f[0].base.index].push_back({e, f[1].base.index});
  }
  for (auto& l : incident) std::sort(l.begin(), l.end());
  std::vector<char> tree(static_cast<std::size_t>(x.count(1)), 0);
  std::vector<char> seen(static_cast<std::size_t>(x.count(0)), 0);
  std::deque<int> q{base.index};
  seen[base.index] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (auto [e, w] : incident[u])
      if (!seen[w]) {
        seen[w] = 1;
        tree[e] = 1;
        q.push_back(w);
      }
  }

  GroupPresentation p;
  std::vector<int> gen(static_cast<std::size_t>(x.count(1)), 0);
  for (int e = 0; e < x.count(1); ++e) {
    if (tree[e]) continue;
    p.generators.push_back(x.label({1, e}));
    gen[e] = p.rank();
  }
  auto letter = [&](const Simplex& s) { return s.nondegenerate() ? gen[s.base.index] : 0; };
  for (int t = 0; t < x.count(2); ++t) {
    const auto& f = x.faces({2, t});
    Word w;
    for (int a : {letter(f[2]), letter(f[0]), -letter(f[1])})
      if (a != 0) w.push_back(a);
    free_reduce(w);
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

TietzeResult tietze_simplify(GroupPresentation p, int budget) {
  TietzeResult res;
  auto spend = [&]() {
    if (res.moves >= budget) {
      res.budget_exhausted = true;
      return false;
    }
    ++res.moves;
    return true;
  };
  // Size cap guarding against substitution blowup.
  const std::size_t cap = [&] {
    std::size_t len = 0;
    for (const auto& r : p.relators) len += r.size();
    return std::max<std::size_t>(4 * len, 1000);
  }();

  auto& rels = p.relators;
  bool changed = true;
  while (changed && !res.budget_exhausted) {
    changed = false;

    // Reduce, drop trivial and duplicate relators.
    std::set<Word> seen;
    std::vector<Word> kept;
    for (auto& r : rels) {
      Word before = r;
      cyclic_reduce(r);
      Word key = canonical(r);
      if (r.empty() || !seen.insert(key).second) {
        if (!spend()) break;
        changed = true;
        continue;
      }
      if (r != before) changed = true;
      kept.push_back(std::move(r));
    }
    if (res.budget_exhausted) break;
    rels = std::move(kept);

    // Eliminate one generator occurring exactly once in some relator,
    // preferring the shortest such relator.
    int best_r = -1, best_g = 0;
    for (std::size_t r = 0; r < rels.size(); ++r) {
      std::map<int, int> occ;
      for (int a : rels[r]) ++occ[std::abs(a)];
      for (const auto& [g, c] : occ) {
        if (c != 1) continue;
        if (best_r < 0 || rels[r].size() < rels[best_r].size()) {
          best_r = static_cast<int>(r);
          best_g = g;
        }
        break;
      }
    }
    if (best_r < 0) break;
    // Rotate so that the generator comes first: g^e w = 1, so g = (w)^{-e}.
    Word r = rels[best_r];
    auto pos = std::find_if(r.begin(), r.end(), [&](int a) { return std::abs(a) == best_g; });
    std::rotate(r.begin(), pos, r.end());
    const int sign = r[0] > 0 ? 1 : -1;
    Word rest(r.begin() + 1, r.end());
    Word image = sign > 0 ? inverse(rest) : rest;
    std::vector<Word> next;
    std::size_t total = 0;
    for (std::size_t k = 0; k < rels.size(); ++k) {
      if (static_cast<int>(k) == best_r) continue;
      Word w;
      for (int a : rels[k]) {
        if (std::abs(a) == best_g) {
          const Word& sub = a > 0 ? image : inverse(image);
          w.insert(w.end(), sub.begin(), sub.end());
        } else {
          w.push_back(a);
        }
      }
      free_reduce(w);
      total += w.size();
      next.push_back(std::move(w));
    }
    if (total > cap) break;
    if (!spend()) break;
    // Renumber generators above best_g.
    for (auto& w : next)
      for (int& a : w) {
        const int g = std::abs(a);
        if (g > best_g) a += a > 0 ? -1 : 1;
      }
    p.generators.erase(p.generators.begin() + (best_g - 1));
    rels = std::move(next);
    changed = true;
  }
  res.presentation = std::move(p);
  return res;
}

AbelianGroup abelianize(const GroupPresentation& p) {
  IntMatrix m(static_cast<int>(p.relators.size()), p.rank());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (int a : p.relators[r]) m.add(static_cast<int>(r), std::abs(a) - 1, a > 0 ? 1 : -1);
  auto s = smith_form(std::move(m));
  AbelianGroup g;
  g.rank = p.rank() - s.rank;
  for (const auto& d : s.invariants)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) { return os << g.str(); }

std::string AbelianGroup::str() const {
  std::string s;
  if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + to_string(t));
  return s.empty() ? "0" : s;
}

}  // namespace qcat
