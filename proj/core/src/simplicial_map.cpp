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

#include "qcat/simplicial_map.hpp"

#include <functional>
#include <unordered_map>

#include "qcat/error.hpp"

namespace qcat {

SimplicialMap::SimplicialMap(std::shared_ptr<const SimplicialSet> source,
                             std::shared_ptr<const SimplicialSet> target,
                             std::vector<std::vector<Simplex>> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  images_.resize(static_cast<std::size_t>(std::max(source_->dimension() + 1, 0)));
  for (int n = 0; n <= source_->dimension(); ++n)
    if (static_cast<int>(images_[n].size()) != source_->count(n))
      throw InputError("simplicial map: wrong number of images in dimension " + std::to_string(n));
}

Simplex SimplicialMap::operator()(const Simplex& s) const {
  return target_->apply(s.degeneracy, image(s.base));
}

std::optional<std::string> SimplicialMap::check() const {
  for (int n = 0; n <= source_->dimension(); ++n) {
    for (int i = 0; i < source_->count(n); ++i) {
      const SimplexRef r{n, i};
      const Simplex& y = image(r);
      if (y.dim() != n) return "image of '" + source_->label(r) + "' has the wrong dimension";
      if (y.base.dim > target_->dimension() || y.base.index >= target_->count(y.base.dim))
        return "image of '" + source_->label(r) + "' is not a simplex of the target";
      if (n == 0) continue;
      const auto& fs = source_->faces(r);
      for (int k = 0; k <= n; ++k)
        if ((*this)(fs[k]) != target_->face(y, k))
          return "face " + std::to_string(k) + " of '" + source_->label(r) + "' not preserved";
    }
  }
  return std::nullopt;
}

SimplicialMap identity_map(std::shared_ptr<const SimplicialSet> x) {
  std::vector<std::vector<Simplex>> images(static_cast<std::size_t>(x->dimension() + 1));
  for (int n = 0; n <= x->dimension(); ++n)
    for (int i = 0; i < x->count(n); ++i) images[n].push_back(Simplex::of({n, i}));
  return SimplicialMap(x, x, std::move(images));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (&f.target() != &g.source() && !(f.target() == g.source()))
    throw InputError("compose: target of the first map is not the source of the second");
  std::vector<std::vector<Simplex>> images(static_cast<std::size_t>(f.source().dimension() + 1));
  for (int n = 0; n <= f.source().dimension(); ++n)
    for (int i = 0; i < f.source().count(n); ++i) images[n].push_back(g(f.image({n, i})));
  return SimplicialMap(f.source_ptr(), g.target_ptr(), std::move(images));
}

namespace {

struct HornHash {
  std::size_t operator()(const std::vector<Simplex>& h) const {
    std::size_t s = 0;
    for (const auto& x : h) s = s * 1000003u ^ SimplexHash()(x);
    return s;
  }
};

using Horn = std::vector<Simplex>;

Horn horn_of(const SimplicialSet& x, const Simplex& s, int k) {
  Horn h;
  for (int i = 0; i <= s.dim(); ++i)
    if (i != k) h.push_back(x.face(s, i));
  return h;
}

// Calls visit(horn) for every Lambda^n_k horn in x, by backtracking with
// face-indexed candidate lists.
void for_each_horn(const SimplicialSet& x, int n, int k, const std::function<void(const Horn&)>& visit) {
  const auto cells = x.simplices(n - 1);
  if (n == 1) {
    for (const auto& c : cells) visit({c});
    return;
  }
  // by_face[i][s] = indices of (n-1)-simplices whose i-th face is s.
  std::vector<std::unordered_map<Simplex, std::vector<int>, SimplexHash>> by_face(static_cast<std::size_t>(n));
  for (int c = 0; c < static_cast<int>(cells.size()); ++c)
    for (int i = 0; i < n; ++i) by_face[i][x.face(cells[c], i)].push_back(c);
  std::vector<int> slots;
  for (int i = 0; i <= n; ++i)
    if (i != k) slots.push_back(i);
  Horn h(slots.size());
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == slots.size()) {
      visit(h);
      return;
    }
    const int j = slots[pos];
    auto consistent = [&](const Simplex& cand) {
      for (std::size_t q = 0; q < pos; ++q) {
        const int i = slots[q];
        if (x.face(cand, i) != x.face(h[q], j - 1)) return false;
      }
      return true;
    };
    if (pos == 0) {
      for (const auto& c : cells) {
        h[0] = c;
        rec(1);
      }
      return;
    }
    // Slot 0 has index i0 < j, so d_{i0} x_j = d_{j-1} x_{i0}.
    const int i0 = slots[0];
    auto it = by_face[i0].find(x.face(h[0], j - 1));
    if (it == by_face[i0].end()) return;
    for (int c : it->second) {
      if (!consistent(cells[c])) continue;
      h[pos] = cells[c];
      rec(pos + 1);
    }
  };
  rec(0);
}

}  // namespace

LeftFibrationReport left_fibration_check(const SimplicialMap& f, int max_dim) {
  const SimplicialSet& x = f.source();
  const SimplicialSet& y = f.target();
  x.require_depth(max_dim, "left fibration check");
  y.require_depth(max_dim, "left fibration check");
  LeftFibrationReport rep;
  for (int n = 1; n <= max_dim; ++n) {
    const auto xs = x.simplices(n);
    const auto ys = y.simplices(n);
    for (int k = 0; k < n; ++k) {
      // Fillers counted by (horn, image).
      std::unordered_map<Horn, int, HornHash> fillers;
      for (const auto& s : xs) {
        Horn key = horn_of(x, s, k);
        key.push_back(f(s));
        ++fillers[key];
      }
      std::unordered_map<Horn, std::vector<Simplex>, HornHash> over;
      for (const auto& z : ys) over[horn_of(y, z, k)].push_back(z);
      for_each_horn(x, n, k, [&](const Horn& h) {
        if (!rep.ok) return;
        ++rep.horns_checked;
        Horn image;
        for (const auto& s : h) image.push_back(f(s));
        auto it = over.find(image);
        if (it == over.end()) return;
        for (const auto& z : it->second) {
          Horn key = h;
          key.push_back(z);
          auto c = fillers.find(key);
          const int count = c == fillers.end() ? 0 : c->second;
          if (count != 1) {
            rep.ok = false;
            std::string hs;
            for (const auto& s : h) hs += (hs.empty() ? "" : ", ") + x.label(s.base) + s.degeneracy.str();
            rep.witness = "horn Lambda^" + std::to_string(n) + "_" + std::to_string(k) + " (" + hs +
                          ") over " + y.label(z.base) + z.degeneracy.str() + " has " +
                          std::to_string(count) + " fillers";
            return;
          }
        }
      });
      if (!rep.ok) return rep;
    }
  }
  return rep;
}

}  // namespace qcat
