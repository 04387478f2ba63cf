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

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcat/io.hpp"

namespace qcat {

/// The finite abelian p-group Z/p^e_1 + ... + Z/p^e_r. Elements are integer
/// codes in mixed radix, the first summand least significant.
class PGroup {
 public:
  PGroup() = default;
  PGroup(int p, std::vector<int> exps);

  int p() const { return p_; }
  const std::vector<int>& exps() const { return exps_; }
  int rank() const { return static_cast<int>(exps_.size()); }
  int order() const { return order_; }
  int modulus(int i) const { return moduli_[i]; }
  int stride(int i) const { return strides_[i]; }

  std::vector<int> coords(int code) const;
  int encode(const std::vector<int>& coords) const;
  int add(int a, int b) const;
  int neg(int a) const;
  int times(int k, int a) const;
  /// Smallest k with p^k a = 0.
  int log_order(int a) const;

  /// Concatenation: code a + |this| * b.
  PGroup sum(const PGroup& other) const;

 private:
  int p_ = 2;
  std::vector<int> exps_;
  std::vector<int> moduli_;
  std::vector<int> strides_;
  int order_ = 1;
};

/// A homomorphism between two objects of an instance, stored as the image of
/// every element.
struct Hom {
  int src = 0;
  int dst = 0;
  std::vector<int> table;

  int operator()(int x) const { return table[static_cast<std::size_t>(x)]; }
  friend bool operator==(const Hom&, const Hom&) = default;
  friend auto operator<=>(const Hom&, const Hom&) = default;
};

/// A commutative square
///     w --to_u--> u
///     |           |
///   to_v        u_to_y
///     v           v
///     v --v_to_y-> y
struct Square {
  Hom to_u;
  Hom to_v;
  Hom u_to_y;
  Hom v_to_y;

  int w() const { return to_u.src; }
  int u() const { return to_u.dst; }
  int v() const { return to_v.dst; }
  int y() const { return u_to_y.dst; }
};

/// A subgroup of an ambient group, identified with an instance object.
struct Identified {
  int object = 0;
  /// Element of the object -> element of the ambient group (or coset id).
  std::vector<int> image;
};

/// A bounded exact category whose objects are finite abelian p-groups
/// (up to isomorphism, one canonical object per type). Ingressives are the
/// injective homomorphisms and egressives the surjective ones.
class ExactInstance {
 public:
  virtual ~ExactInstance() = default;

  const std::string& name() const { return name_; }
  int p() const { return p_; }
  int objects() const { return static_cast<int>(objects_.size()); }
  const PGroup& object(int o) const { return objects_[o]; }
  const std::string& object_name(int o) const { return names_[o]; }
  int order(int o) const { return objects_[o].order(); }
  int zero() const { return 0; }
  std::optional<int> find(std::vector<int> exps) const;
  std::optional<int> find(const std::string& name) const;
  /// The object of the type of a (+) b, when it lies within the bounds.
  std::optional<int> direct_sum(int a, int b) const;

  Hom identity(int o) const;
  Hom zero_map(int a, int b) const;
  Hom compose(const Hom& g, const Hom& f) const;
  /// From a matrix with one row per target summand and one column per source
  /// generator. Throws InputError when the assignment is not well defined.
  Hom from_matrix(int src, int dst, const std::vector<std::vector<int>>& rows) const;
  std::vector<std::vector<int>> matrix(const Hom& f) const;
  bool is_hom(const Hom& f) const;
  bool is_iso(const Hom& f) const;
  bool injective(const Hom& f) const;
  bool surjective(const Hom& f) const;

  virtual bool is_ingressive(const Hom& f) const { return injective(f); }
  virtual bool is_egressive(const Hom& f) const { return surjective(f); }

  /// Every homomorphism a -> b, memoized.
  const std::vector<Hom>& homs(int a, int b) const;
  std::vector<Hom> ingressives(int a, int b) const;
  std::vector<Hom> egressives(int a, int b) const;
  std::vector<Hom> isos(int a) const;

  /// Identifies a subgroup (sorted codes) of an ambient group with an
  /// instance object. Throws GuardError when its type is out of bounds.
  Identified identify_subgroup(const PGroup& ambient, const std::vector<int>& elements) const;
  /// Identifies ambient / subgroup; image maps quotient elements to coset
  /// ids, and `cosets` receives the coset id of every ambient element.
  Identified identify_quotient(const PGroup& ambient, const std::vector<int>& subgroup,
                               std::vector<int>& cosets) const;

  /// Pullback of (i: U >-> Y, e: V ->> Y); to_v is the base change of i and
  /// to_u the base change of e.
  Square ambigressive_pullback(const Hom& i, const Hom& e) const;
  /// Pushout of (i: W >-> V, e: W ->> U).
  Square ambigressive_pushout(const Hom& i, const Hom& e) const;

 protected:
  ExactInstance(std::string name, int p, std::vector<std::vector<int>> types,
                std::vector<std::string> names);
  ExactInstance(const ExactInstance& other);

 private:
  std::string name_;
  int p_ = 2;
  std::vector<PGroup> objects_;
  std::vector<std::string> names_;
  std::map<std::vector<int>, int> by_type_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<int, int>, std::vector<Hom>> cache_;
};

/// F_q-vector spaces of dimension <= d, q prime. Objects "0", "F", "F^2", ...
class VectInstance : public ExactInstance {
 public:
  VectInstance(int q, int d);
  int q() const { return p(); }
  int max_dim() const { return d_; }
  int dim(int o) const { return object(o).rank(); }

 private:
  int d_;
};

/// Finite abelian p-groups of order <= bound. Objects "0", "c2", "c4+c2", ...
class AbpInstance : public ExactInstance {
 public:
  AbpInstance(int p, int bound);
  int bound() const { return bound_; }

 private:
  int bound_;
};

/// Negative control: the same objects with every homomorphism declared
/// egressive.
class AllEgressiveInstance : public ExactInstance {
 public:
  explicit AllEgressiveInstance(const ExactInstance& base) : ExactInstance(base) {}
  bool is_egressive(const Hom&) const override { return true; }
};

/// "vect:q:d", "abp:p:bound", or a JSON object such as
/// {"kind":"vect","q":2,"d":2} / {"kind":"abp","p":2,"bound":8}.
std::shared_ptr<const ExactInstance> make_instance(const std::string& descriptor);
std::shared_ptr<const ExactInstance> make_instance(const Json& descriptor);
inline std::shared_ptr<const ExactInstance> make_instance(const char* descriptor) {
  return make_instance(std::string(descriptor));
}

struct UniversalReport {
  bool commutes = true;
  bool pullback = true;
  bool pushout = true;
  std::string witness;

  bool bicartesian() const { return commutes && pullback && pushout; }
};

/// Both universal properties, tested against every object of the instance.
UniversalReport universal_check(const ExactInstance& c, const Square& s);
bool is_pullback(const ExactInstance& c, const Square& s);
bool bicartesian_check(const ExactInstance& c, const Square& s);

/// |W| |Y| = |U| |V|.
bool size_identity(const ExactInstance& c, const Square& s);

struct TripleReport {
  bool ok = true;
  long long cospans = 0;
  std::string witness;
};

/// For every cospan (U >-> Y <<- V): the pullback exists within bounds, its
/// legs are ingressive and egressive respectively, and the size identity
/// holds. Work over Y is split across worker threads.
TripleReport verify_triple(const ExactInstance& c);

/// A span X <<- U >-> Y up to isomorphism, as the subgroup {(e u, i u)} of
/// X (+) Y (codes x + |X| y), sorted.
struct Span {
  int src = 0;
  int dst = 0;
  std::vector<int> elements;

  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

struct SpanLegs {
  int middle = 0;
  Hom to_src;  // egressive
  Hom to_dst;  // ingressive
};

Span canonicalize(Span s);
Span span_of_legs(const ExactInstance& c, const Hom& e, const Hom& i);
SpanLegs span_legs(const ExactInstance& c, const Span& s);
Span identity_span(const ExactInstance& c, int x);
/// Relation composite: first s: X -> Y, then t: Y -> Z.
Span span_compose(const ExactInstance& c, const Span& s, const Span& t);
/// A subgroup of X (+) Y projecting onto X and injectively to Y.
bool is_span(const ExactInstance& c, const Span& s);
/// Every span X -> Y, sorted, from all pairs of legs.
std::vector<Span> spans(const ExactInstance& c, int x, int y);

Json hom_to_json(const ExactInstance& c, const Hom& f);
Hom hom_from_json(const ExactInstance& c, const Json& j, const std::string& where);

/// A short exact sequence A >-> B ->> C read from a fixture.
struct ExactSequence {
  std::string name;
  std::shared_ptr<const ExactInstance> instance;
  Hom incl;
  Hom proj;

  /// The square with corners A, 0, B, C.
  Square square() const;
};

/// {"sequences": [{"name", "instance", "incl": hom, "proj": hom}]} where a
/// hom is {"src", "dst", "matrix": [[row 1], [row 2], ...]}.
std::vector<ExactSequence> read_exact_sequences(const std::string& path);

}  // namespace qcat
