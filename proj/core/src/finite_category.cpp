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

#include "qcat/finite_category.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>

#include "qcat/error.hpp"
#include "qcat/subdivision.hpp"

namespace qcat {

// ---------------------------------------------------------------------------
// Builder

int FiniteCategory::Builder::add_object(const std::string& name, const std::string& identity_name) {
  if (object_index_.count(name)) throw InputError("duplicate object '" + name + "'");
  const int o = static_cast<int>(objects_.size());
  objects_.push_back(name);
  object_index_[name] = o;
  identities_.push_back(-1);
  identities_[o] = add_morphism(identity_name.empty() ? "1_" + name : identity_name, o, o);
  return o;
}

int FiniteCategory::Builder::add_bare_object(const std::string& name) {
  if (object_index_.count(name)) throw InputError("duplicate object '" + name + "'");
  const int o = static_cast<int>(objects_.size());
  objects_.push_back(name);
  object_index_[name] = o;
  identities_.push_back(-1);
  return o;
}

int FiniteCategory::Builder::add_morphism(const std::string& name, int src, int dst) {
  if (morphism_index_.count(name)) throw InputError("duplicate morphism '" + name + "'");
  if (src < 0 || dst < 0 || src >= objects() || dst >= objects())
    throw InputError("morphism '" + name + "' has an unknown endpoint");
  const int m = static_cast<int>(morphisms_.size());
  morphisms_.push_back({name, src, dst});
  morphism_index_[name] = m;
  after_.emplace_back();
  return m;
}

int FiniteCategory::Builder::add_morphism(const std::string& name, const std::string& src,
                                          const std::string& dst) {
  auto s = object(src), d = object(dst);
  if (!s || !d) throw InputError("morphism '" + name + "' has an unknown endpoint");
  return add_morphism(name, *s, *d);
}

void FiniteCategory::Builder::set_compose(int g, int f, int gf) {
  const int n = static_cast<int>(morphisms_.size());
  if (g < 0 || f < 0 || gf < 0 || g >= n || f >= n || gf >= n)
    throw InputError("composition refers to an unknown morphism");
  auto [it, fresh] = after_[f].emplace(g, gf);
  if (!fresh && it->second != gf)
    throw InputError("composite of '" + morphisms_[g].name + "' and '" + morphisms_[f].name +
                     "' given twice");
}

void FiniteCategory::Builder::set_compose(const std::string& g, const std::string& f,
                                          const std::string& gf) {
  auto a = morphism(g), b = morphism(f), c = morphism(gf);
  if (!a || !b || !c) throw InputError("composition [" + g + ", " + f + ", " + gf + "] names an unknown morphism");
  set_compose(*a, *b, *c);
}

void FiniteCategory::Builder::set_identity(int object, int morphism) {
  if (morphism < 0 || morphism >= static_cast<int>(morphisms_.size()))
    throw InputError("identity of '" + objects_.at(object) + "' is not a morphism");
  if (morphisms_.at(morphism).src != object || morphisms_.at(morphism).dst != object)
    throw InputError("identity of '" + objects_.at(object) + "' must be an endomorphism");
  identities_[object] = morphism;
}

std::optional<int> FiniteCategory::Builder::object(const std::string& name) const {
  auto it = object_index_.find(name);
  return it == object_index_.end() ? std::nullopt : std::optional<int>(it->second);
}

std::optional<int> FiniteCategory::Builder::morphism(const std::string& name) const {
  auto it = morphism_index_.find(name);
  return it == morphism_index_.end() ? std::nullopt : std::optional<int>(it->second);
}

FiniteCategory FiniteCategory::Builder::build_unchecked() && {
  for (std::size_t o = 0; o < objects_.size(); ++o)
    if (identities_[o] < 0) throw InputError("object '" + objects_[o] + "' has no identity");
  // Identity laws fill in any missing composites.
  for (int f = 0; f < static_cast<int>(morphisms_.size()); ++f) {
    const auto& m = morphisms_[f];
    after_[f].emplace(identities_[m.dst], f);
    after_[identities_[m.src]].emplace(f, f);
  }
  FiniteCategory c;
  c.objects_ = std::move(objects_);
  c.morphisms_ = std::move(morphisms_);
  c.identities_ = std::move(identities_);
  c.after_ = std::move(after_);
  c.object_index_ = std::move(object_index_);
  c.morphism_index_ = std::move(morphism_index_);
  c.index();
  return c;
}

FiniteCategory FiniteCategory::Builder::build() && {
  FiniteCategory c = std::move(*this).build_unchecked();
  if (auto bad = c.check_axioms()) throw InputError("category axioms fail: " + *bad);
  return c;
}

// ---------------------------------------------------------------------------
// Queries

void FiniteCategory::index() {
  const int n = objects();
  out_.assign(n, {});
  hom_.assign(n, std::vector<std::vector<int>>(n));
  for (int m = 0; m < morphisms(); ++m) {
    out_[morphisms_[m].src].push_back(m);
    hom_[morphisms_[m].src][morphisms_[m].dst].push_back(m);
  }
  if (object_index_.empty())
    for (int o = 0; o < n; ++o) object_index_[objects_[o]] = o;
  if (morphism_index_.empty())
    for (int m = 0; m < morphisms(); ++m) morphism_index_[morphisms_[m].name] = m;
}

int FiniteCategory::compose(int g, int f) const {
  if (morphisms_[f].dst != morphisms_[g].src) return -1;
  auto it = after_[f].find(g);
  return it == after_[f].end() ? -1 : it->second;
}

const std::vector<int>& FiniteCategory::hom(int a, int b) const { return hom_[a][b]; }

std::optional<int> FiniteCategory::object_index(const std::string& name) const {
  auto it = object_index_.find(name);
  return it == object_index_.end() ? std::nullopt : std::optional<int>(it->second);
}

std::optional<int> FiniteCategory::morphism_index(const std::string& name) const {
  auto it = morphism_index_.find(name);
  return it == morphism_index_.end() ? std::nullopt : std::optional<int>(it->second);
}

std::optional<std::string> FiniteCategory::check_axioms() const {
  auto nm = [&](int m) { return "'" + morphisms_[m].name + "'"; };
  for (int o = 0; o < objects(); ++o) {
    const int i = identities_[o];
    if (i < 0 || morphisms_[i].src != o || morphisms_[i].dst != o)
      return "identity of '" + objects_[o] + "' is not an endomorphism";
  }
  for (int f = 0; f < morphisms(); ++f) {
    for (const auto& [g, gf] : after_[f]) {
      if (morphisms_[g].src != morphisms_[f].dst)
        return "composite given for non-composable " + nm(g) + " o " + nm(f);
      if (morphisms_[gf].src != morphisms_[f].src || morphisms_[gf].dst != morphisms_[g].dst)
        return nm(g) + " o " + nm(f) + " = " + nm(gf) + " has wrong endpoints";
    }
  }
  for (int f = 0; f < morphisms(); ++f) {
    const auto& m = morphisms_[f];
    if (compose(identities_[m.dst], f) != f) return "left identity law fails at " + nm(f);
    if (compose(f, identities_[m.src]) != f) return "right identity law fails at " + nm(f);
    for (int g : out_[m.dst])
      if (compose(g, f) < 0) return "missing composite " + nm(g) + " o " + nm(f);
  }
  for (int f = 0; f < morphisms(); ++f)
    for (int g : out_[morphisms_[f].dst])
      for (int h : out_[morphisms_[g].dst])
        if (compose(h, compose(g, f)) != compose(compose(h, g), f))
          return "associativity fails on (" + nm(h) + ", " + nm(g) + ", " + nm(f) + ")";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

// Copies objects and morphisms in index order, optionally reversed.
FiniteCategory::Builder copy_shape(const FiniteCategory& c, bool reverse) {
  FiniteCategory::Builder b;
  for (int o = 0; o < c.objects(); ++o) b.add_bare_object(c.object_name(o));
  for (int m = 0; m < c.morphisms(); ++m) {
    const auto& mm = c.morphism(m);
    b.add_morphism(mm.name, reverse ? mm.dst : mm.src, reverse ? mm.src : mm.dst);
  }
  for (int o = 0; o < c.objects(); ++o) b.set_identity(o, c.identity(o));
  return b;
}

}  // namespace

FiniteCategory opposite_cat(const FiniteCategory& c) {
  FiniteCategory::Builder b = copy_shape(c, true);
  for (int f = 0; f < c.morphisms(); ++f)
    for (int g : c.out_of(c.morphism(f).dst)) b.set_compose(f, g, c.compose(g, f));
  return std::move(b).build_unchecked();
}

FiniteCategory product_cat(const FiniteCategory& c, const FiniteCategory& d) {
  FiniteCategory::Builder b;
  auto obj = [&](int x, int y) { return x * d.objects() + y; };
  auto mor = [&](int f, int g) { return f * d.morphisms() + g; };
  for (int x = 0; x < c.objects(); ++x)
    for (int y = 0; y < d.objects(); ++y)
      b.add_bare_object("(" + c.object_name(x) + "," + d.object_name(y) + ")");
  for (int f = 0; f < c.morphisms(); ++f)
    for (int g = 0; g < d.morphisms(); ++g)
      b.add_morphism("(" + c.morphism(f).name + "," + d.morphism(g).name + ")",
                     obj(c.morphism(f).src, d.morphism(g).src), obj(c.morphism(f).dst, d.morphism(g).dst));
  for (int x = 0; x < c.objects(); ++x)
    for (int y = 0; y < d.objects(); ++y) b.set_identity(obj(x, y), mor(c.identity(x), d.identity(y)));
  for (int f = 0; f < c.morphisms(); ++f)
    for (int f2 : c.out_of(c.morphism(f).dst))
      for (int g = 0; g < d.morphisms(); ++g)
        for (int g2 : d.out_of(d.morphism(g).dst))
          b.set_compose(mor(f2, g2), mor(f, g), mor(c.compose(f2, f), d.compose(g2, g)));
  return std::move(b).build_unchecked();
}

namespace {

// Twisted arrow category together with the legs (a, b) of each morphism.
FiniteCategory build_twisted(const FiniteCategory& c, std::vector<std::pair<int, int>>* legs) {
  FiniteCategory::Builder b;
  for (int f = 0; f < c.morphisms(); ++f) b.add_bare_object(c.morphism(f).name);
  // Morphisms f -> g: pairs (a, b) with a: src(g) -> src(f), b: dst(f) -> dst(g).
  struct Arrow {
    int a, bb, f, g;
  };
  std::vector<Arrow> arrows;
  std::map<std::tuple<int, int, int>, int> by_pair;
  for (int f = 0; f < c.morphisms(); ++f) {
    const auto& fm = c.morphism(f);
    for (int a = 0; a < c.morphisms(); ++a) {
      if (c.morphism(a).dst != fm.src) continue;
      const int fa = c.compose(f, a);
      for (int bb : c.out_of(fm.dst)) {
        const int g = c.compose(bb, fa);
        const std::string name = "<" + c.morphism(a).name + "|" + fm.name + "|" + c.morphism(bb).name + ">";
        by_pair[{a, f, bb}] = b.add_morphism(name, f, g);
        arrows.push_back({a, bb, f, g});
      }
    }
  }
  if (legs)
    for (const Arrow& a : arrows) legs->emplace_back(a.a, a.bb);
  for (int f = 0; f < c.morphisms(); ++f) {
    const auto& fm = c.morphism(f);
    b.set_identity(f, by_pair.at({c.identity(fm.src), f, c.identity(fm.dst)}));
  }
  // (a', b') o (a, b) = (a o a', b' o b).
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const Arrow& p = arrows[i];
    for (std::size_t j = 0; j < arrows.size(); ++j) {
      const Arrow& q = arrows[j];
      if (q.f != p.g) continue;
      b.set_compose(static_cast<int>(j), static_cast<int>(i),
                    by_pair.at({c.compose(p.a, q.a), p.f, c.compose(q.bb, p.bb)}));
    }
  }
  return std::move(b).build_unchecked();
}

}  // namespace

FiniteCategory twisted_arrow(const FiniteCategory& c) { return build_twisted(c, nullptr); }

FiniteCategory poset_chain(int n) {
  if (n < 1) throw InputError("poset needs at least one element");
  FiniteCategory::Builder b;
  for (int i = 0; i < n; ++i) b.add_object(std::to_string(i));
  std::vector<std::vector<int>> m(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) m[i][i] = *b.morphism("1_" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m[i][j] = b.add_morphism(std::to_string(i) + "<" + std::to_string(j), i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) b.set_compose(m[j][k], m[i][j], m[i][k]);
  return std::move(b).build();
}

FiniteCategory discrete_cat(int k) {
  FiniteCategory::Builder b;
  for (int i = 0; i < k; ++i) b.add_object(std::to_string(i));
  return std::move(b).build();
}

FiniteCategory cyclic_group_cat(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  FiniteCategory::Builder b;
  b.add_object("*", "e");
  std::vector<int> g{0};
  for (int k = 1; k < n; ++k) g.push_back(b.add_morphism(k == 1 ? "g" : "g^" + std::to_string(k), 0, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.set_compose(g[i], g[j], g[(i + j) % n]);
  return std::move(b).build();
}

FiniteCategory kronecker_cat() {
  FiniteCategory::Builder b;
  b.add_object("0");
  b.add_object("1");
  b.add_morphism("a", 0, 1);
  b.add_morphism("b", 0, 1);
  return std::move(b).build();
}

FiniteCategory square_cat() { return product_cat(poset_chain(2), poset_chain(2)); }

FiniteCategory idempotent_cat() {
  FiniteCategory::Builder b;
  b.add_object("*", "1");
  const int e = b.add_morphism("e", 0, 0);
  b.set_compose(e, e, e);
  return std::move(b).build();
}

std::optional<FiniteCategory> builtin_category(const std::string& name) {
  auto arg = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string rest = name.substr(prefix.size());
    if (rest.empty() || rest.size() > 3 || rest.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("category '" + name + "': expected a small positive integer");
    return std::stoi(rest);
  };
  if (auto n = arg("poset:")) return poset_chain(*n);
  if (auto n = arg("discrete:")) return discrete_cat(*n);
  if (auto n = arg("cyclic:")) return cyclic_group_cat(*n);
  if (name == "kronecker") return kronecker_cat();
  if (name == "square") return square_cat();
  if (name == "idempotent") return idempotent_cat();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Nerves

namespace {

std::string chain_label(const FiniteCategory& c, const Chain& ch) {
  if (ch.arrows.empty()) return c.object_name(ch.start);
  std::string s;
  for (int f : ch.arrows) s += (s.empty() ? "" : ";") + c.morphism(f).name;
  return s;
}

}  // namespace

Nerve::Nerve(const FiniteCategory& c, int depth, std::size_t max_simplices) : c_(&c) {
  if (depth < 0) throw InputError("nerve depth must be nonnegative");
  SimplicialSet::Builder b;
  std::size_t total = 0;
  auto guard = [&] {
    if (max_simplices && ++total > max_simplices)
      throw GuardError("nerve exceeds " + std::to_string(max_simplices) + " nondegenerate simplices");
  };
  bool complete = false;
  for (int n = 0; n <= depth + 1; ++n) {
    std::vector<Chain> level;
    if (n == 0) {
      for (int o = 0; o < c.objects(); ++o) level.push_back({o, {}});
    } else {
      for (const Chain& prev : chains_[n - 1]) {
        const int end = prev.arrows.empty() ? prev.start : c.morphism(prev.arrows.back()).dst;
        for (int f : c.out_of(end)) {
          if (c.is_identity(f)) continue;
          Chain next = prev;
          next.arrows.push_back(f);
          level.push_back(std::move(next));
        }
      }
    }
    if (n == depth + 1) {
      complete = level.empty();
      break;
    }
    chains_.push_back(std::move(level));
    index_.emplace_back();
    for (std::size_t i = 0; i < chains_[n].size(); ++i) {
      guard();
      const Chain& ch = chains_[n][i];
      if (n == 0) {
        b.add_vertex(chain_label(c, ch));
        continue;
      }
      index_[n][ch.arrows] = static_cast<int>(i);
      std::vector<Simplex> faces;
      for (int k = 0; k <= n; ++k) {
        Chain f{ch.start, {}};
        for (int t = 0; t < n; ++t) {
          if (k == 0 && t == 0) {
            f.start = c.morphism(ch.arrows[0]).dst;
            continue;
          }
          if (k == n && t == n - 1) continue;
          if (k > 0 && k < n && t == k) {
            f.arrows.back() = c.compose(ch.arrows[t], f.arrows.back());
            continue;
          }
          f.arrows.push_back(ch.arrows[t]);
        }
        faces.push_back(simplex(f));
      }
      b.add(chain_label(c, ch), std::move(faces));
    }
  }
  set_ = std::move(b).build_unchecked(complete ? std::nullopt : std::optional<int>(depth));
}

Simplex Nerve::simplex(const Chain& ch) const {
  const int n = static_cast<int>(ch.arrows.size());
  std::vector<int> eta(n + 1, 0);
  std::vector<int> kept;
  for (int t = 0; t < n; ++t) {
    const bool id = c_->is_identity(ch.arrows[t]);
    if (!id) kept.push_back(ch.arrows[t]);
    eta[t + 1] = eta[t] + (id ? 0 : 1);
  }
  const int k = static_cast<int>(kept.size());
  DeltaMap d(k, std::move(eta));
  if (k == 0) return {std::move(d), SimplexRef{0, ch.start}};
  auto it = index_.size() > static_cast<std::size_t>(k) ? index_[k].find(kept) : index_[0].end();
  if (k >= static_cast<int>(index_.size()) || it == index_[k].end())
    throw DepthError("nerve: chain of " + std::to_string(k) + " morphisms above the stored depth");
  return {std::move(d), SimplexRef{k, it->second}};
}

SimplicialSet nerve(const FiniteCategory& c, int depth) { return Nerve(c, depth).set(); }

// ---------------------------------------------------------------------------
// Functors and commas

std::optional<std::string> FunctorData::check() const {
  const auto& s = *source;
  const auto& t = *target;
  if (static_cast<int>(on_objects.size()) != s.objects() || static_cast<int>(on_morphisms.size()) != s.morphisms())
    return "functor tables have the wrong size";
  for (int m = 0; m < s.morphisms(); ++m) {
    const int fm = on_morphisms[m];
    if (fm < 0 || fm >= t.morphisms()) return "morphism '" + s.morphism(m).name + "' has no image";
    if (t.morphism(fm).src != on_objects[s.morphism(m).src] || t.morphism(fm).dst != on_objects[s.morphism(m).dst])
      return "image of '" + s.morphism(m).name + "' has wrong endpoints";
  }
  for (int o = 0; o < s.objects(); ++o)
    if (on_morphisms[s.identity(o)] != t.identity(on_objects[o]))
      return "identity of '" + s.object_name(o) + "' not preserved";
  for (int f = 0; f < s.morphisms(); ++f)
    for (int g : s.out_of(s.morphism(f).dst))
      if (on_morphisms[s.compose(g, f)] != t.compose(on_morphisms[g], on_morphisms[f]))
        return "composite '" + s.morphism(g).name + "' o '" + s.morphism(f).name + "' not preserved";
  return std::nullopt;
}

FunctorData identity_functor(const FiniteCategory& c) {
  FunctorData f{&c, &c, {}, {}};
  for (int o = 0; o < c.objects(); ++o) f.on_objects.push_back(o);
  for (int m = 0; m < c.morphisms(); ++m) f.on_morphisms.push_back(m);
  return f;
}

SimplicialMap nerve_map(const FunctorData& f, const Nerve& source, const Nerve& target) {
  const SimplicialSet& x = source.set();
  std::vector<std::vector<Simplex>> images(static_cast<std::size_t>(x.dimension() + 1));
  for (int n = 0; n <= x.dimension(); ++n) {
    for (int i = 0; i < x.count(n); ++i) {
      const Chain& ch = source.chain({n, i});
      Chain img{f.on_objects[ch.start], {}};
      for (int a : ch.arrows) img.arrows.push_back(f.on_morphisms[a]);
      images[n].push_back(target.simplex(img));
    }
  }
  return SimplicialMap(std::make_shared<const SimplicialSet>(x),
                       std::make_shared<const SimplicialSet>(target.set()), std::move(images));
}

FiniteCategory comma(const FunctorData& f, int x, CommaSide side) {
  const FiniteCategory& s = *f.source;
  const FiniteCategory& t = *f.target;
  FiniteCategory::Builder b;
  std::vector<std::pair<int, int>> objs;  // (c, h)
  std::map<std::pair<int, int>, int> obj_index;
  for (int c = 0; c < s.objects(); ++c) {
    const int fc = f.on_objects[c];
    for (int h : side == CommaSide::kSlice ? t.hom(fc, x) : t.hom(x, fc)) {
      obj_index[{c, h}] = b.add_bare_object("(" + s.object_name(c) + "," + t.morphism(h).name + ")");
      objs.emplace_back(c, h);
    }
  }
  struct Arrow {
    int m, from, to;
  };
  std::vector<Arrow> arrows;
  std::vector<std::vector<int>> out(objs.size());
  std::map<std::tuple<int, int, int>, int> arrow_index;
  for (int i = 0; i < static_cast<int>(objs.size()); ++i) {
    const auto [c, h] = objs[i];
    for (int m : s.out_of(c)) {
      const int fm = f.on_morphisms[m];
      const int c2 = s.morphism(m).dst;
      std::vector<int> targets;
      if (side == CommaSide::kSlice) {
        for (int h2 : t.hom(f.on_objects[c2], x))
          if (t.compose(h2, fm) == h) targets.push_back(obj_index.at({c2, h2}));
      } else {
        targets.push_back(obj_index.at({c2, t.compose(fm, h)}));
      }
      for (int j : targets) {
        const int a = b.add_morphism(s.morphism(m).name + "@" + std::to_string(i) + ">" + std::to_string(j), i, j);
        arrows.push_back({m, i, j});
        out[i].push_back(a);
        arrow_index[{m, i, j}] = a;
      }
    }
  }
  for (int i = 0; i < static_cast<int>(objs.size()); ++i)
    b.set_identity(i, arrow_index.at({s.identity(objs[i].first), i, i}));
  for (int p = 0; p < static_cast<int>(arrows.size()); ++p)
    for (int q : out[arrows[p].to])
      b.set_compose(q, p, arrow_index.at({s.compose(arrows[q].m, arrows[p].m), arrows[p].from, arrows[q].to}));
  return std::move(b).build_unchecked();
}

FiniteCategory slice(const FiniteCategory& c, int x) {
  FiniteCategory::Builder b;
  std::vector<int> objs;
  std::map<int, int> obj_index;
  for (int h = 0; h < c.morphisms(); ++h) {
    if (c.morphism(h).dst != x) continue;
    obj_index[h] = b.add_bare_object(c.morphism(h).name);
    objs.push_back(h);
  }
  std::map<std::tuple<int, int, int>, int> arrow;  // (m, from, to)
  std::vector<std::tuple<int, int, int>> list;
  for (int i = 0; i < static_cast<int>(objs.size()); ++i) {
    const int h = objs[i];
    for (int m : c.out_of(c.morphism(h).src)) {
      for (int h2 : c.hom(c.morphism(m).dst, x)) {
        if (c.compose(h2, m) != h) continue;
        const int j = obj_index.at(h2);
        arrow[{m, i, j}] = b.add_morphism(
            c.morphism(m).name + "/" + c.morphism(h).name + ">" + c.morphism(h2).name, i, j);
        list.emplace_back(m, i, j);
      }
    }
  }
  for (int i = 0; i < static_cast<int>(objs.size()); ++i)
    b.set_identity(i, arrow.at({c.identity(c.morphism(objs[i]).src), i, i}));
  for (const auto& [m, i, j] : list)
    for (const auto& [m2, i2, k] : list)
      if (i2 == j) b.set_compose(arrow.at({m2, i2, k}), arrow.at({m, i, j}), arrow.at({c.compose(m2, m), i, k}));
  return std::move(b).build_unchecked();
}

// ---------------------------------------------------------------------------
// Twisted arrows versus edgewise subdivision

TwistedComparison nerve_twisted_vs_edgewise(const FiniteCategory& c, int depth) {
  std::vector<std::pair<int, int>> legs;
  const FiniteCategory tw = build_twisted(c, &legs);
  const Nerve ntw(tw, depth);
  const Nerve nc(c, 2 * depth + 1);
  const Pullback ew(JoinWord::parse("op,id"), nc.set(), depth);
  TwistedComparison out;
  std::vector<std::vector<int>> where(static_cast<std::size_t>(depth + 1));
  for (int n = 0; n <= depth; ++n) {
    const int count = n <= ntw.set().dimension() ? ntw.set().count(n) : 0;
    std::vector<char> hit(static_cast<std::size_t>(ew.set().count(n)), 0);
    for (int i = 0; i < count; ++i) {
      const Chain& ch = ntw.chain({n, i});
      Chain big;
      std::vector<int> as, bs;
      for (int p : ch.arrows) {
        as.push_back(legs[p].first);
        bs.push_back(legs[p].second);
      }
      big.arrows.assign(as.rbegin(), as.rend());
      big.arrows.push_back(ch.start);
      big.arrows.insert(big.arrows.end(), bs.begin(), bs.end());
      big.start = c.morphism(big.arrows.front()).src;
      const Simplex t = ew.normalize(nc.simplex(big), n);
      if (!t.nondegenerate() || hit[t.base.index]) {
        out.ok = false;
        out.witness = "twisted simplex '" + ntw.set().label({n, i}) + "' does not map to a distinct nondegenerate simplex";
        return out;
      }
      hit[t.base.index] = 1;
      where[n].push_back(t.base.index);
    }
    if (count != ew.set().count(n)) {
      out.ok = false;
      out.witness = "level " + std::to_string(n) + ": " + std::to_string(count) + " twisted simplices vs " +
                    std::to_string(ew.set().count(n)) + " edgewise simplices";
      return out;
    }
  }
  // Transport the twisted labels and compare the face structure exactly.
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(depth + 1));
  for (int n = 0; n <= depth; ++n) {
    names[n].resize(where[n].size());
    for (std::size_t i = 0; i < where[n].size(); ++i) names[n][where[n][i]] = ntw.set().label({n, static_cast<int>(i)});
  }
  const SimplicialSet relabelled =
      canonical_order(relabel(ew.set(), [&](SimplexRef r) { return names[r.dim][r.index]; }));
  if (auto diff = compare_structure(canonical_order(ntw.set()), relabelled, depth)) {
    out.ok = false;
    out.witness = *diff;
  }
  return out;
}

SimplicialMap twisted_projection(const FiniteCategory& c, int depth) {
  std::vector<std::pair<int, int>> legs;
  const FiniteCategory tw = build_twisted(c, &legs);
  const FiniteCategory cop = opposite_cat(c);
  const Nerve ntw(tw, depth), nop(cop, depth), nc(c, depth);
  auto target = std::make_shared<const SimplicialSet>(product(nop.set(), nc.set(), depth));
  const SimplicialSet& x = ntw.set();
  std::vector<std::vector<Simplex>> images(static_cast<std::size_t>(x.dimension() + 1));
  for (int n = 0; n <= x.dimension(); ++n) {
    for (int i = 0; i < x.count(n); ++i) {
      const Chain& ch = ntw.chain({n, i});
      Chain a{c.morphism(ch.start).src, {}}, b{c.morphism(ch.start).dst, {}};
      for (int p : ch.arrows) {
        a.arrows.push_back(legs[p].first);
        b.arrows.push_back(legs[p].second);
      }
      images[n].push_back(product_simplex(*target, nop.set(), nc.set(), nop.simplex(a), nc.simplex(b)));
    }
  }
  return SimplicialMap(std::make_shared<const SimplicialSet>(x), target, std::move(images));
}

}  // namespace qcat
