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

#include "qcat/subdivision.hpp"

#include <memory>
#include <sstream>

#include "qcat/error.hpp"

namespace qcat {

JoinWord::JoinWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw InputError("join word must be nonempty");
}

JoinWord JoinWord::constant(int k) {
  if (k < 0) throw InputError("constant word needs k >= 0");
  JoinWord w;
  w.constant_ = k;
  return w;
}

JoinWord JoinWord::parse(const std::string& text) {
  if (text.rfind("const:", 0) == 0) {
    const std::string arg = text.substr(6);
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos || arg.size() > 6)
      throw InputError("word '" + text + "': const needs a nonnegative integer");
    return constant(std::stoi(arg));
  }
  std::vector<Letter> letters;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "id") {
      letters.push_back(Letter::kId);
    } else if (tok == "op") {
      letters.push_back(Letter::kOp);
    } else {
      throw InputError("word '" + text + "': unknown letter '" + tok + "'");
    }
  }
  if (letters.empty() || text.back() == ',') throw InputError("word '" + text + "' is empty or malformed");
  return JoinWord(std::move(letters));
}

std::vector<JoinWord> JoinWord::all_of_length(int length) {
  std::vector<JoinWord> out;
  for (unsigned mask = 0; mask < (1u << length); ++mask) {
    std::vector<Letter> l(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i)
      l[i] = (mask >> (length - 1 - i)) & 1u ? Letter::kOp : Letter::kId;
    out.emplace_back(std::move(l));
  }
  return out;
}

int JoinWord::apply_object(int n) const {
  if (constant_) return *constant_;
  return static_cast<int>(letters_.size()) * (n + 1) - 1;
}

DeltaMap JoinWord::apply_map(const DeltaMap& f) const {
  if (constant_) return DeltaMap::identity(*constant_);
  const int a = f.source(), b = f.target();
  std::vector<int> v;
  v.reserve(letters_.size() * static_cast<std::size_t>(a + 1));
  for (std::size_t r = 0; r < letters_.size(); ++r) {
    const int base = static_cast<int>(r) * (b + 1);
    for (int t = 0; t <= a; ++t)
      v.push_back(base + (letters_[r] == Letter::kId ? f(t) : b - f(a - t)));
  }
  return DeltaMap(apply_object(b), std::move(v));
}

std::string JoinWord::str() const {
  if (constant_) return "const:" + std::to_string(*constant_);
  std::string s;
  for (auto l : letters_) s += (s.empty() ? "" : ",") + std::string(l == Letter::kId ? "id" : "op");
  return s;
}

namespace {

std::string carrier_label(const SimplicialSet& x, const Simplex& s) {
  if (s.nondegenerate()) return x.label(s.base);
  std::string w;
  for (int p : s.degeneracy.degeneracy_word()) w += (w.empty() ? "" : ".") + std::to_string(p);
  return x.label(s.base) + "|" + w;
}

}  // namespace

Pullback::Pullback(JoinWord w, const SimplicialSet& x, int depth)
    : word_(std::move(w)), x_(&x) {
  if (depth < 0) throw InputError("pullback depth must be nonnegative");
  x.require_depth(word_.apply_object(depth), "pullback");
  SimplicialSet::Builder b;
  for (int n = 0; n <= depth; ++n) {
    carriers_.emplace_back();
    index_.emplace_back();
    const int tn = word_.apply_object(n);
    for (const Simplex& s : x.simplices(tn)) {
      bool degenerate = false;
      for (int j = 0; j < n && !degenerate; ++j) {
        const Simplex d = x.apply(word_.apply_map(DeltaMap::coface(n, j)), s);
        degenerate = x.apply(word_.apply_map(DeltaMap::codegeneracy(n - 1, j)), d) == s;
      }
      if (degenerate) continue;
      std::vector<Simplex> faces;
      for (int i = 0; n > 0 && i <= n; ++i)
        faces.push_back(normalize(x.apply(word_.apply_map(DeltaMap::coface(n, i)), s), n - 1));
      const SimplexRef ref = b.add(carrier_label(x, s), std::move(faces));
      index_[n].emplace(s, ref.index);
      carriers_[n].push_back(s);
    }
  }
  set_ = std::move(b).build_unchecked(depth);
}

Simplex Pullback::normalize(const Simplex& s, int n) const {
  auto it = index_[n].find(s);
  if (it != index_[n].end()) return Simplex::of({n, it->second});
  for (int j = 0; j < n; ++j) {
    const Simplex d = x_->apply(word_.apply_map(DeltaMap::coface(n, j)), s);
    if (x_->apply(word_.apply_map(DeltaMap::codegeneracy(n - 1, j)), d) == s) {
      Simplex inner = normalize(d, n - 1);
      return {inner.degeneracy.after(DeltaMap::codegeneracy(n - 1, j)), inner.base};
    }
  }
  throw Error("pullback: simplex missing from the nondegenerate index");
}

SimplicialSet pullback(const JoinWord& w, const SimplicialSet& x, int depth) {
  return Pullback(w, x, depth).set();
}

SimplicialMap pullback_map(const JoinWord& w, const SimplicialMap& f, int depth) {
  auto src = std::make_shared<Pullback>(w, f.source(), depth);
  auto tgt = std::make_shared<Pullback>(w, f.target(), depth);
  std::vector<std::vector<Simplex>> images(static_cast<std::size_t>(depth + 1));
  for (int n = 0; n <= depth; ++n)
    for (int i = 0; i < src->set().count(n); ++i)
      images[n].push_back(tgt->normalize(f(src->carrier({n, i})), n));
  return SimplicialMap(std::make_shared<const SimplicialSet>(src->set()),
                       std::make_shared<const SimplicialSet>(tgt->set()), std::move(images));
}

const char* kind_name(SubdivisionVerdict::Kind k) {
  switch (k) {
    case SubdivisionVerdict::Kind::kSubdivision:
      return "subdivision";
    case SubdivisionVerdict::Kind::kNotSubdivision:
      return "not_subdivision";
    case SubdivisionVerdict::Kind::kInconclusive:
      break;
  }
  return "inconclusive";
}

std::string SubdivisionVerdict::str() const {
  std::string s = kind_name(kind);
  s += "(m_max=" + std::to_string(m_max) + ", depth=" + std::to_string(depth) + ")";
  if (failing_m) s += " at m=" + std::to_string(*failing_m);
  if (!witness.empty()) s += ": " + witness;
  return s;
}

SubdivisionVerdict is_combinatorial_subdivision(const JoinWord& w, int m_max,
                                                std::optional<int> depth) {
  if (m_max < 1) throw InputError("m_max must be at least 1");
  SubdivisionVerdict v;
  v.m_max = m_max;
  v.depth = depth.value_or(m_max + 1);
  if (v.depth < 1) throw InputError("subdivision depth must be at least 1");
  v.kind = SubdivisionVerdict::Kind::kSubdivision;
  for (int m = 0; m <= m_max; ++m) {
    const SimplicialSet sub = pullback(w, standard_simplex(m), v.depth);
    v.per_m.push_back(certify_contractible(sub, v.depth - 1));
    const auto& c = v.per_m.back();
    if (c.verdict == Verdict::kNotContractible) {
      v.kind = SubdivisionVerdict::Kind::kNotSubdivision;
      v.failing_m = m;
      v.witness = c.witness;
      break;
    }
    if (c.verdict == Verdict::kInconclusive && v.kind == SubdivisionVerdict::Kind::kSubdivision) {
      v.kind = SubdivisionVerdict::Kind::kInconclusive;
      v.failing_m = m;
      v.witness = c.witness;
    }
  }
  return v;
}

SimplicialSet edgewise(const SimplicialSet& x, int depth) {
  return pullback(JoinWord::parse("op,id"), x, depth);
}

SimplicialMap edgewise_structure_map(const SimplicialSet& x, int depth) {
  const Pullback sub(JoinWord::parse("op,id"), x, depth);
  const SimplicialSet xop = opposite(x);
  auto target = std::make_shared<const SimplicialSet>(product(xop, x, depth));
  std::vector<std::vector<Simplex>> images(static_cast<std::size_t>(depth + 1));
  for (int n = 0; n <= depth; ++n) {
    std::vector<int> first(n + 1), second(n + 1);
    for (int t = 0; t <= n; ++t) {
      first[t] = t;
      second[t] = n + 1 + t;
    }
    const DeltaMap j1(2 * n + 1, first), j2(2 * n + 1, second);
    for (int i = 0; i < sub.set().count(n); ++i) {
      const Simplex& s = sub.carrier({n, i});
      const Simplex a = x.apply(j1, s);
      const Simplex op_a{a.degeneracy.reversed(), a.base};
      images[n].push_back(product_simplex(*target, xop, x, op_a, x.apply(j2, s)));
    }
  }
  return SimplicialMap(std::make_shared<const SimplicialSet>(sub.set()), target, std::move(images));
}

}  // namespace qcat
