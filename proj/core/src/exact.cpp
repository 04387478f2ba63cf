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

#include "qcat/exact.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "qcat/error.hpp"
#include "qcat/parallel.hpp"

namespace qcat {

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Position of the lowest nonzero coordinate of a nonzero code.
int lowest(const PGroup& g, int code) {
  for (int i = 0; i < g.rank(); ++i)
    if ((code / g.stride(i)) % g.modulus(i) != 0) return i;
  return -1;
}

// The table of the homomorphism sending generator k to images[k].
std::vector<int> table_from_images(const PGroup& src, const PGroup& dst,
                                   const std::vector<int>& images) {
  std::vector<int> t(static_cast<std::size_t>(src.order()), 0);
  for (int c = 1; c < src.order(); ++c) {
    int k = lowest(src, c);
    t[c] = dst.add(t[c - src.stride(k)], images[k]);
  }
  return t;
}

// Identifies the abelian p-group on ids 0..n-1 (0 the identity) with an
// instance object and returns object element -> id.
Identified identify_abstract(const ExactInstance& c, int n,
                             const std::function<int(int, int)>& add) {
  int p = c.p();
  auto times_p = [&](int x) {
    int y = 0;
    for (int k = 0; k < p; ++k) y = add(y, x);
    return y;
  };
  std::vector<int> ord(static_cast<std::size_t>(n), 0);
  int top = 0;
  for (int x = 0; x < n; ++x) {
    int k = 0;
    for (int y = x; y != 0; y = times_p(y)) ++k;
    ord[x] = k;
    top = std::max(top, k);
  }
  // r[k] = number of cyclic summands of exponent >= k.
  std::vector<int> below(static_cast<std::size_t>(top) + 1, 0);
  for (int x = 0; x < n; ++x) ++below[ord[x]];
  for (int k = 1; k <= top; ++k) below[k] += below[k - 1];
  std::vector<int> exps;
  for (int k = top; k >= 1; --k) {
    int ratio = below[k] / below[k - 1];
    int r = 0;
    while (ratio > 1) {
      ratio /= p;
      ++r;
    }
    int already = static_cast<int>(exps.size());
    for (int i = already; i < r; ++i) exps.push_back(k);
  }
  auto o = c.find(exps);
  if (!o) {
    std::ostringstream msg;
    msg << "group of order " << n << " lies outside the bounds of " << c.name();
    throw GuardError(msg.str());
  }
  const PGroup& target = c.object(*o);

  std::vector<int> gens;
  std::vector<char> in_span(static_cast<std::size_t>(n), 0);
  std::vector<int> span{0};
  in_span[0] = 1;
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == exps.size()) return true;
    int m = ipow(p, exps[i]);
    for (int x = 1; x < n; ++x) {
      if (ord[x] != exps[i]) continue;
      std::vector<int> fresh;
      bool direct = true;
      for (int s : span) {
        int y = s;
        for (int t = 1; t < m && direct; ++t) {
          y = add(y, x);
          if (in_span[y]) direct = false;
          else {
            in_span[y] = 1;
            fresh.push_back(y);
          }
        }
        if (!direct) break;
      }
      if (direct) {
        auto saved = span.size();
        span.insert(span.end(), fresh.begin(), fresh.end());
        gens.push_back(x);
        if (search(i + 1)) return true;
        gens.pop_back();
        span.resize(saved);
      }
      for (int y : fresh) in_span[y] = 0;
    }
    return false;
  };
  if (!search(0)) throw Error("identify: no basis found");

  Identified out{*o, std::vector<int>(static_cast<std::size_t>(target.order()), 0)};
  for (int code = 1; code < target.order(); ++code) {
    int k = lowest(target, code);
    out.image[code] = add(out.image[code - target.stride(k)], gens[k]);
  }
  return out;
}

std::string type_name(int p, const std::vector<int>& exps) {
  if (exps.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) s += "+";
    s += "c" + std::to_string(ipow(p, exps[i]));
  }
  return s;
}

std::optional<std::vector<int>> parse_type(int p, const std::string& name) {
  if (name == "0") return std::vector<int>{};
  if (name == "F") return std::vector<int>{1};
  if (name.rfind("F^", 0) == 0) {
    try {
      int k = std::stoi(name.substr(2));
      if (k < 0 || k > 64) return std::nullopt;
      return std::vector<int>(static_cast<std::size_t>(k), 1);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  std::vector<int> exps;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, '+')) {
    if (part.size() < 2 || part[0] != 'c') return std::nullopt;
    int m = 0;
    try {
      m = std::stoi(part.substr(1));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    int e = 0;
    while (m > 1 && m % p == 0) {
      m /= p;
      ++e;
    }
    if (m != 1 || e == 0) return std::nullopt;
    exps.push_back(e);
  }
  std::sort(exps.rbegin(), exps.rend());
  return exps;
}

}  // namespace

PGroup::PGroup(int p, std::vector<int> exps) : p_(p), exps_(std::move(exps)) {
  for (int e : exps_) {
    strides_.push_back(order_);
    moduli_.push_back(ipow(p_, e));
    order_ *= moduli_.back();
  }
}

std::vector<int> PGroup::coords(int code) const {
  std::vector<int> c(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    c[i] = code % moduli_[i];
    code /= moduli_[i];
  }
  return c;
}

int PGroup::encode(const std::vector<int>& coords) const {
  int code = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    int m = moduli_[i];
    code += (((coords[i] % m) + m) % m) * strides_[i];
  }
  return code;
}

int PGroup::add(int a, int b) const {
  int code = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    int m = moduli_[i];
    code += ((a % m + b % m) % m) * strides_[i];
    a /= m;
    b /= m;
  }
  return code;
}

int PGroup::neg(int a) const {
  int code = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    int m = moduli_[i];
    code += ((m - a % m) % m) * strides_[i];
    a /= m;
  }
  return code;
}

int PGroup::times(int k, int a) const {
  int code = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    int m = moduli_[i];
    long long v = (static_cast<long long>(k % m + m) % m) * (a % m) % m;
    code += static_cast<int>(v) * strides_[i];
    a /= m;
  }
  return code;
}

int PGroup::log_order(int a) const {
  int k = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    int m = moduli_[i];
    int x = a % m;
    a /= m;
    int e = 0;
    while (x != 0) {
      x = (x * p_) % m;
      ++e;
    }
    k = std::max(k, e);
  }
  return k;
}

PGroup PGroup::sum(const PGroup& other) const {
  auto e = exps_;
  e.insert(e.end(), other.exps_.begin(), other.exps_.end());
  return PGroup(p_, e);
}

ExactInstance::ExactInstance(std::string name, int p, std::vector<std::vector<int>> types,
                             std::vector<std::string> names)
    : name_(std::move(name)), p_(p), names_(std::move(names)) {
  for (std::size_t i = 0; i < types.size(); ++i) {
    objects_.emplace_back(p, types[i]);
    by_type_[types[i]] = static_cast<int>(i);
  }
}

ExactInstance::ExactInstance(const ExactInstance& other)
    : name_(other.name_ + "+all-egressive"),
      p_(other.p_),
      objects_(other.objects_),
      names_(other.names_),
      by_type_(other.by_type_) {}

std::optional<int> ExactInstance::find(std::vector<int> exps) const {
  std::sort(exps.rbegin(), exps.rend());
  auto it = by_type_.find(exps);
  if (it == by_type_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> ExactInstance::find(const std::string& name) const {
  for (int o = 0; o < objects(); ++o)
    if (names_[o] == name) return o;
  auto t = parse_type(p_, name);
  if (!t) return std::nullopt;
  return find(*t);
}

std::optional<int> ExactInstance::direct_sum(int a, int b) const {
  auto e = objects_[a].exps();
  e.insert(e.end(), objects_[b].exps().begin(), objects_[b].exps().end());
  return find(e);
}

Hom ExactInstance::identity(int o) const {
  Hom h{o, o, std::vector<int>(static_cast<std::size_t>(order(o)))};
  for (int x = 0; x < order(o); ++x) h.table[x] = x;
  return h;
}

Hom ExactInstance::zero_map(int a, int b) const {
  return Hom{a, b, std::vector<int>(static_cast<std::size_t>(order(a)), 0)};
}

Hom ExactInstance::compose(const Hom& g, const Hom& f) const {
  if (f.dst != g.src) throw InputError("compose: " + names_[f.dst] + " != " + names_[g.src]);
  Hom h{f.src, g.dst, f.table};
  for (auto& x : h.table) x = g.table[x];
  return h;
}

Hom ExactInstance::from_matrix(int src, int dst,
                               const std::vector<std::vector<int>>& rows) const {
  const PGroup& a = objects_[src];
  const PGroup& b = objects_[dst];
  if (static_cast<int>(rows.size()) != b.rank())
    throw InputError("matrix needs " + std::to_string(b.rank()) + " rows");
  std::vector<int> images;
  for (int j = 0; j < a.rank(); ++j) {
    std::vector<int> col;
    for (int i = 0; i < b.rank(); ++i) {
      if (static_cast<int>(rows[i].size()) != a.rank())
        throw InputError("matrix row " + std::to_string(i) + " needs " +
                         std::to_string(a.rank()) + " entries");
      col.push_back(rows[i][j]);
    }
    int img = b.encode(col);
    if (b.log_order(img) > a.exps()[j])
      throw InputError("column " + std::to_string(j) + " is not well defined: image order exceeds " +
                       std::to_string(a.modulus(j)));
    images.push_back(img);
  }
  return Hom{src, dst, table_from_images(a, b, images)};
}

std::vector<std::vector<int>> ExactInstance::matrix(const Hom& f) const {
  const PGroup& a = objects_[f.src];
  const PGroup& b = objects_[f.dst];
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(b.rank()),
                                     std::vector<int>(static_cast<std::size_t>(a.rank())));
  for (int j = 0; j < a.rank(); ++j) {
    auto c = b.coords(f(a.stride(j)));
    for (int i = 0; i < b.rank(); ++i) rows[i][j] = c[i];
  }
  return rows;
}

bool ExactInstance::is_hom(const Hom& f) const {
  const PGroup& a = objects_[f.src];
  const PGroup& b = objects_[f.dst];
  if (static_cast<int>(f.table.size()) != a.order()) return false;
  for (int x : f.table)
    if (x < 0 || x >= b.order()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (f(a.add(x, y)) != b.add(f(x), f(y))) return false;
  return true;
}

bool ExactInstance::injective(const Hom& f) const {
  for (std::size_t x = 1; x < f.table.size(); ++x)
    if (f.table[x] == 0) return false;
  return true;
}

bool ExactInstance::surjective(const Hom& f) const {
  std::vector<char> hit(static_cast<std::size_t>(order(f.dst)), 0);
  for (int x : f.table) hit[x] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

bool ExactInstance::is_iso(const Hom& f) const {
  return order(f.src) == order(f.dst) && injective(f);
}

const std::vector<Hom>& ExactInstance::homs(int a, int b) const {
  std::lock_guard lock(cache_mutex_);
  auto key = std::make_pair(a, b);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const PGroup& s = objects_[a];
  const PGroup& t = objects_[b];
  std::vector<std::vector<int>> choices(static_cast<std::size_t>(s.rank()));
  for (int j = 0; j < s.rank(); ++j)
    for (int y = 0; y < t.order(); ++y)
      if (t.log_order(y) <= s.exps()[j]) choices[j].push_back(y);
  std::vector<Hom> out;
  std::vector<int> pick(choices.size(), 0);
  std::vector<int> images(choices.size());
  while (true) {
    for (std::size_t j = 0; j < choices.size(); ++j) images[j] = choices[j][pick[j]];
    out.push_back(Hom{a, b, table_from_images(s, t, images)});
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == static_cast<int>(choices[j].size())) pick[j++] = 0;
    if (j == pick.size()) break;
  }
  return cache_.emplace(key, std::move(out)).first->second;
}

std::vector<Hom> ExactInstance::ingressives(int a, int b) const {
  std::vector<Hom> out;
  for (const auto& f : homs(a, b))
    if (is_ingressive(f)) out.push_back(f);
  return out;
}

std::vector<Hom> ExactInstance::egressives(int a, int b) const {
  std::vector<Hom> out;
  for (const auto& f : homs(a, b))
    if (is_egressive(f)) out.push_back(f);
  return out;
}

std::vector<Hom> ExactInstance::isos(int a) const {
  std::vector<Hom> out;
  for (const auto& f : homs(a, a))
    if (is_iso(f)) out.push_back(f);
  return out;
}

Identified ExactInstance::identify_subgroup(const PGroup& ambient,
                                            const std::vector<int>& elements) const {
  std::vector<int> id(static_cast<std::size_t>(ambient.order()), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) id[elements[i]] = static_cast<int>(i);
  if (elements.empty() || elements[0] != 0) throw InputError("subgroup must contain 0 first");
  auto add = [&](int i, int j) {
    int r = id[ambient.add(elements[i], elements[j])];
    if (r < 0) throw InputError("subset is not closed under addition");
    return r;
  };
  Identified out = identify_abstract(*this, static_cast<int>(elements.size()), add);
  for (auto& x : out.image) x = elements[x];
  return out;
}

Identified ExactInstance::identify_quotient(const PGroup& ambient,
                                            const std::vector<int>& subgroup,
                                            std::vector<int>& cosets) const {
  cosets.assign(static_cast<std::size_t>(ambient.order()), -1);
  std::vector<int> rep;
  for (int g = 0; g < ambient.order(); ++g) {
    if (cosets[g] >= 0) continue;
    int c = static_cast<int>(rep.size());
    rep.push_back(g);
    for (int k : subgroup) cosets[ambient.add(g, k)] = c;
  }
  auto add = [&](int i, int j) { return cosets[ambient.add(rep[i], rep[j])]; };
  return identify_abstract(*this, static_cast<int>(rep.size()), add);
}

Square ExactInstance::ambigressive_pullback(const Hom& i, const Hom& e) const {
  if (i.dst != e.dst) throw InputError("pullback legs have different targets");
  const PGroup& u = objects_[i.src];
  const PGroup& v = objects_[e.src];
  PGroup amb = u.sum(v);
  std::vector<int> elements;
  for (int b = 0; b < v.order(); ++b)
    for (int a = 0; a < u.order(); ++a)
      if (i(a) == e(b)) elements.push_back(a + u.order() * b);
  Identified w = identify_subgroup(amb, elements);
  Square s{Hom{w.object, i.src, {}}, Hom{w.object, e.src, {}}, i, e};
  for (int x : w.image) {
    s.to_u.table.push_back(x % u.order());
    s.to_v.table.push_back(x / u.order());
  }
  return s;
}

Square ExactInstance::ambigressive_pushout(const Hom& i, const Hom& e) const {
  if (i.src != e.src) throw InputError("pushout legs have different sources");
  const PGroup& v = objects_[i.dst];
  const PGroup& u = objects_[e.dst];
  PGroup amb = u.sum(v);
  std::set<int> k;
  for (int w = 0; w < order(i.src); ++w) k.insert(e(w) + u.order() * v.neg(i(w)));
  std::vector<int> cosets;
  Identified y = identify_quotient(amb, std::vector<int>(k.begin(), k.end()), cosets);
  std::vector<int> of_coset(y.image.size());
  for (std::size_t c = 0; c < y.image.size(); ++c) of_coset[y.image[c]] = static_cast<int>(c);
  Square s{e, i, Hom{e.dst, y.object, {}}, Hom{i.dst, y.object, {}}};
  for (int a = 0; a < u.order(); ++a) s.u_to_y.table.push_back(of_coset[cosets[a]]);
  for (int b = 0; b < v.order(); ++b) s.v_to_y.table.push_back(of_coset[cosets[u.order() * b]]);
  return s;
}

VectInstance::VectInstance(int q, int d)
    : ExactInstance(
          "vect:" + std::to_string(q) + ":" + std::to_string(d), q,
          [&] {
            std::vector<std::vector<int>> t;
            for (int n = 0; n <= d; ++n) t.emplace_back(static_cast<std::size_t>(n), 1);
            return t;
          }(),
          [&] {
            std::vector<std::string> names;
            for (int n = 0; n <= d; ++n)
              names.push_back(n == 0 ? "0" : n == 1 ? "F" : "F^" + std::to_string(n));
            return names;
          }()),
      d_(d) {}

namespace {

std::vector<std::vector<int>> abp_types(int p, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Partitions with nonincreasing parts and p^(sum) <= bound.
  std::function<void(int, int)> rec = [&](int max_part, int order) {
    out.push_back(cur);
    for (int e = 1; e <= max_part; ++e) {
      long long next = static_cast<long long>(order) * ipow(p, e);
      if (next > bound) break;
      cur.push_back(e);
      rec(e, static_cast<int>(next));
      cur.pop_back();
    }
  };
  rec(64, 1);
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    int sa = 0, sb = 0;
    for (int e : a) sa += e;
    for (int e : b) sb += e;
    if (sa != sb) return sa < sb;
    return a > b;
  });
  return out;
}

}  // namespace

AbpInstance::AbpInstance(int p, int bound)
    : ExactInstance("abp:" + std::to_string(p) + ":" + std::to_string(bound), p,
                    abp_types(p, bound),
                    [&] {
                      std::vector<std::string> names;
                      for (const auto& t : abp_types(p, bound)) names.push_back(type_name(p, t));
                      return names;
                    }()),
      bound_(bound) {}

std::shared_ptr<const ExactInstance> make_instance(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw InputError("instance descriptor: expected an object with a \"kind\" string");
  auto need = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
      throw InputError(std::string("instance descriptor: $.") + key + " must be an integer");
    return j[key].get<int>();
  };
  std::string kind = j["kind"].get<std::string>();
  if (kind == "vect") {
    int q = need("q");
    int d = need("d");
    if (!is_prime(q)) throw InputError("instance descriptor: $.q must be prime");
    if (d < 0) throw InputError("instance descriptor: $.d must be >= 0");
    long long size = 1;
    for (int k = 0; k < d && size <= 1024; ++k) size *= q;
    if (size > 1024) throw GuardError("instance descriptor: q^d exceeds 1024");
    return std::make_shared<VectInstance>(q, d);
  }
  if (kind == "abp") {
    int p = need("p");
    int b = need("bound");
    if (!is_prime(p)) throw InputError("instance descriptor: $.p must be prime");
    if (b < 1) throw InputError("instance descriptor: $.bound must be >= 1");
    if (b > 1024) throw GuardError("instance descriptor: bound exceeds 1024");
    return std::make_shared<AbpInstance>(p, b);
  }
  throw InputError("instance descriptor: unknown kind \"" + kind + "\"");
}

std::shared_ptr<const ExactInstance> make_instance(const std::string& descriptor) {
  if (!descriptor.empty() && descriptor[0] == '{')
    return make_instance(parse_json(descriptor, "instance descriptor"));
  std::vector<std::string> parts;
  std::stringstream ss(descriptor);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3)
    throw InputError("instance descriptor \"" + descriptor + "\": expected kind:a:b");
  Json j;
  j["kind"] = parts[0];
  for (int k : {1, 2}) {
    try {
      std::size_t used = 0;
      int v = std::stoi(parts[k], &used);
      if (used != parts[k].size()) throw std::invalid_argument("trailing");
      const char* key = parts[0] == "vect" ? (k == 1 ? "q" : "d") : (k == 1 ? "p" : "bound");
      j[key] = v;
    } catch (const std::exception&) {
      throw InputError("instance descriptor \"" + descriptor + "\": field " + std::to_string(k) +
                       " is not an integer");
    }
  }
  return make_instance(j);
}

UniversalReport universal_check(const ExactInstance& c, const Square& s) {
  UniversalReport r;
  if (c.compose(s.u_to_y, s.to_u) != c.compose(s.v_to_y, s.to_v)) {
    r.commutes = false;
    r.witness = "square does not commute";
    return r;
  }
  for (int t = 0; t < c.objects() && r.pullback; ++t) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& h : c.homs(t, s.w())) {
      auto key = std::make_pair(c.compose(s.to_u, h).table, c.compose(s.to_v, h).table);
      if (!seen.insert(key).second) {
        r.pullback = false;
        r.witness = "two maps " + c.object_name(t) + " -> W induce the same cone";
        break;
      }
    }
    if (!r.pullback) break;
    std::map<std::vector<int>, long long> via_u;
    for (const auto& a : c.homs(t, s.u())) ++via_u[c.compose(s.u_to_y, a).table];
    long long cones = 0;
    for (const auto& b : c.homs(t, s.v())) {
      auto it = via_u.find(c.compose(s.v_to_y, b).table);
      if (it != via_u.end()) cones += it->second;
    }
    if (cones != static_cast<long long>(seen.size())) {
      r.pullback = false;
      r.witness = "cones from " + c.object_name(t) + ": " + std::to_string(cones) +
                  ", factorizations: " + std::to_string(seen.size());
    }
  }
  for (int t = 0; t < c.objects() && r.pushout; ++t) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& h : c.homs(s.y(), t)) {
      auto key = std::make_pair(c.compose(h, s.u_to_y).table, c.compose(h, s.v_to_y).table);
      if (!seen.insert(key).second) {
        r.pushout = false;
        if (r.witness.empty())
          r.witness = "two maps Y -> " + c.object_name(t) + " induce the same cocone";
        break;
      }
    }
    if (!r.pushout) break;
    std::map<std::vector<int>, long long> via_u;
    for (const auto& a : c.homs(s.u(), t)) ++via_u[c.compose(a, s.to_u).table];
    long long cocones = 0;
    for (const auto& b : c.homs(s.v(), t)) {
      auto it = via_u.find(c.compose(b, s.to_v).table);
      if (it != via_u.end()) cocones += it->second;
    }
    if (cocones != static_cast<long long>(seen.size())) {
      r.pushout = false;
      if (r.witness.empty())
        r.witness = "cocones to " + c.object_name(t) + ": " + std::to_string(cocones) +
                    ", factorizations: " + std::to_string(seen.size());
    }
  }
  return r;
}

bool is_pullback(const ExactInstance& c, const Square& s) {
  auto r = universal_check(c, s);
  return r.commutes && r.pullback;
}

bool bicartesian_check(const ExactInstance& c, const Square& s) {
  return universal_check(c, s).bicartesian();
}

bool size_identity(const ExactInstance& c, const Square& s) {
  return static_cast<long long>(c.order(s.w())) * c.order(s.y()) ==
         static_cast<long long>(c.order(s.u())) * c.order(s.v());
}

TripleReport verify_triple(const ExactInstance& c) {
  std::vector<TripleReport> per(static_cast<std::size_t>(c.objects()));
  parallel_for(c.objects(), [&](int y) {
    TripleReport& r = per[y];
    for (int u = 0; u < c.objects() && r.ok; ++u) {
      auto ins = c.ingressives(u, y);
      for (int v = 0; v < c.objects() && r.ok; ++v) {
        auto egs = c.egressives(v, y);
        for (const auto& i : ins) {
          for (const auto& e : egs) {
            ++r.cospans;
            std::string where = "cospan " + c.object_name(u) + " >-> " + c.object_name(y) +
                                " <<- " + c.object_name(v) + ": ";
            Square s;
            try {
              s = c.ambigressive_pullback(i, e);
            } catch (const GuardError& err) {
              r.ok = false;
              r.witness = where + err.what();
              break;
            }
            if (!c.is_ingressive(s.to_v)) r.witness = where + "base change of i not ingressive";
            else if (!c.is_egressive(s.to_u)) r.witness = where + "base change of e not egressive";
            else if (!size_identity(c, s))
              r.witness = where + "|W||Y| = " +
                          std::to_string(c.order(s.w()) * c.order(y)) + " but |U||V| = " +
                          std::to_string(c.order(u) * c.order(v));
            else if (c.order(s.w()) > std::max(c.order(u), c.order(v)))
              r.witness = where + "pullback exceeds both legs";
            if (!r.witness.empty()) {
              r.ok = false;
              break;
            }
          }
          if (!r.ok) break;
        }
      }
    }
  });
  TripleReport out;
  for (const auto& r : per) {
    out.cospans += r.cospans;
    if (out.ok && !r.ok) {
      out.ok = false;
      out.witness = r.witness;
    }
  }
  return out;
}

Span canonicalize(Span s) {
  std::sort(s.elements.begin(), s.elements.end());
  s.elements.erase(std::unique(s.elements.begin(), s.elements.end()), s.elements.end());
  return s;
}

Span span_of_legs(const ExactInstance& c, const Hom& e, const Hom& i) {
  if (e.src != i.src) throw InputError("span legs have different sources");
  Span s{e.dst, i.dst, {}};
  int nx = c.order(e.dst);
  for (int u = 0; u < c.order(e.src); ++u) s.elements.push_back(e(u) + nx * i(u));
  return canonicalize(std::move(s));
}

SpanLegs span_legs(const ExactInstance& c, const Span& s) {
  const PGroup& x = c.object(s.src);
  Identified w = c.identify_subgroup(x.sum(c.object(s.dst)), s.elements);
  SpanLegs legs{w.object, Hom{w.object, s.src, {}}, Hom{w.object, s.dst, {}}};
  for (int v : w.image) {
    legs.to_src.table.push_back(v % x.order());
    legs.to_dst.table.push_back(v / x.order());
  }
  return legs;
}

Span identity_span(const ExactInstance& c, int x) {
  Span s{x, x, {}};
  for (int a = 0; a < c.order(x); ++a) s.elements.push_back(a + c.order(x) * a);
  return s;
}

Span span_compose(const ExactInstance& c, const Span& s, const Span& t) {
  if (s.dst != t.src) throw InputError("span_compose: middle objects differ");
  int nx = c.order(s.src);
  int ny = c.order(s.dst);
  std::vector<std::vector<int>> after(static_cast<std::size_t>(ny));
  for (int v : t.elements) after[v % ny].push_back(v / ny);
  Span r{s.src, t.dst, {}};
  for (int v : s.elements)
    for (int z : after[v / nx]) r.elements.push_back(v % nx + nx * z);
  return canonicalize(std::move(r));
}

bool is_span(const ExactInstance& c, const Span& s) {
  const PGroup& x = c.object(s.src);
  PGroup amb = x.sum(c.object(s.dst));
  if (s.elements.empty() || s.elements[0] != 0) return false;
  if (!std::is_sorted(s.elements.begin(), s.elements.end())) return false;
  std::vector<char> in(static_cast<std::size_t>(amb.order()), 0);
  for (int v : s.elements) {
    if (v < 0 || v >= amb.order()) return false;
    in[v] = 1;
  }
  std::vector<char> hit(static_cast<std::size_t>(x.order()), 0);
  for (int a : s.elements) {
    hit[a % x.order()] = 1;
    if (a != 0 && a / x.order() == 0) return false;
    for (int b : s.elements)
      if (!in[amb.add(a, b)]) return false;
  }
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

std::vector<Span> spans(const ExactInstance& c, int x, int y) {
  std::set<Span> out;
  for (int u = 0; u < c.objects(); ++u) {
    if (c.order(u) < c.order(x) || c.order(u) > c.order(y)) continue;
    auto ins = c.ingressives(u, y);
    if (ins.empty()) continue;
    for (const auto& e : c.egressives(u, x))
      for (const auto& i : ins) out.insert(span_of_legs(c, e, i));
  }
  return {out.begin(), out.end()};
}

Json hom_to_json(const ExactInstance& c, const Hom& f) {
  Json j;
  j["src"] = c.object_name(f.src);
  j["dst"] = c.object_name(f.dst);
  j["matrix"] = c.matrix(f);
  return j;
}

Hom hom_from_json(const ExactInstance& c, const Json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto object = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_string())
      throw InputError(where + "." + key + ": expected an object name");
    auto o = c.find(j[key].get<std::string>());
    if (!o)
      throw InputError(where + "." + key + ": unknown object \"" + j[key].get<std::string>() +
                       "\" in " + c.name());
    return *o;
  };
  int src = object("src");
  int dst = object("dst");
  if (!j.contains("matrix") || !j["matrix"].is_array())
    throw InputError(where + ".matrix: expected an array of rows");
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < j["matrix"].size(); ++r) {
    const Json& row = j["matrix"][r];
    if (!row.is_array()) throw InputError(where + ".matrix[" + std::to_string(r) + "]: expected an array");
    std::vector<int> v;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw InputError(where + ".matrix[" + std::to_string(r) + "]: expected integers");
      v.push_back(x.get<int>());
    }
    rows.push_back(std::move(v));
  }
  if (c.object(src).rank() == 0 || c.object(dst).rank() == 0) rows.resize(c.object(dst).rank());
  try {
    return c.from_matrix(src, dst, rows);
  } catch (const InputError& e) {
    throw InputError(where + ".matrix: " + e.what());
  }
}

Square ExactSequence::square() const {
  int z = instance->zero();
  return Square{instance->zero_map(incl.src, z), incl, instance->zero_map(z, proj.dst), proj};
}

std::vector<ExactSequence> read_exact_sequences(const std::string& path) {
  Json j = read_json(path);
  if (!j.is_object() || !j.contains("sequences") || !j["sequences"].is_array())
    throw InputError(path + ": $.sequences must be an array");
  std::vector<ExactSequence> out;
  for (std::size_t k = 0; k < j["sequences"].size(); ++k) {
    const Json& e = j["sequences"][k];
    std::string where = path + ": $.sequences[" + std::to_string(k) + "]";
    if (!e.is_object() || !e.contains("instance"))
      throw InputError(where + ".instance: missing");
    ExactSequence s;
    s.name = e.value("name", "sequence " + std::to_string(k));
    s.instance = e["instance"].is_string() ? make_instance(e["instance"].get<std::string>())
                                           : make_instance(e["instance"]);
    s.incl = hom_from_json(*s.instance, e.value("incl", Json()), where + ".incl");
    s.proj = hom_from_json(*s.instance, e.value("proj", Json()), where + ".proj");
    const ExactInstance& c = *s.instance;
    if (s.incl.dst != s.proj.src) throw InputError(where + ": incl and proj do not compose");
    if (!c.injective(s.incl)) throw InputError(where + ".incl: not injective");
    if (!c.surjective(s.proj)) throw InputError(where + ".proj: not surjective");
    if (c.compose(s.proj, s.incl) != c.zero_map(s.incl.src, s.proj.dst))
      throw InputError(where + ": proj o incl is not zero");
    if (c.order(s.incl.src) * c.order(s.proj.dst) != c.order(s.incl.dst))
      throw InputError(where + ": not exact in the middle");
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace qcat
