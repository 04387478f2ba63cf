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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcat/simplicial_map.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat {

/// A finite category with named objects and morphisms and an explicit
/// composition table.
class FiniteCategory {
 public:
  struct Morphism {
    std::string name;
    int src = 0;
    int dst = 0;
    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  class Builder {
   public:
    /// Adds an object together with its identity morphism (named
    /// identity_name, or "1_<name>" when empty).
    int add_object(const std::string& name, const std::string& identity_name = "");
    /// Adds an object whose identity is assigned later with set_identity.
    int add_bare_object(const std::string& name);
    int add_morphism(const std::string& name, int src, int dst);
    int add_morphism(const std::string& name, const std::string& src, const std::string& dst);
    /// Records g o f = gf. Composites with identities are filled in by build().
    void set_compose(int g, int f, int gf);
    void set_compose(const std::string& g, const std::string& f, const std::string& gf);
    /// Replaces the identity of an object by an existing endomorphism.
    void set_identity(int object, int morphism);

    std::optional<int> object(const std::string& name) const;
    std::optional<int> morphism(const std::string& name) const;
    int objects() const { return static_cast<int>(objects_.size()); }

    /// Throws InputError (with a witness) unless the axioms hold.
    FiniteCategory build() &&;
    FiniteCategory build_unchecked() &&;

   private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<int> identities_;
    std::unordered_map<std::string, int> object_index_;
    std::unordered_map<std::string, int> morphism_index_;
    std::vector<std::map<int, int>> after_;
  };

  FiniteCategory() = default;

  int objects() const { return static_cast<int>(objects_.size()); }
  int morphisms() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object_name(int o) const { return objects_[o]; }
  const Morphism& morphism(int m) const { return morphisms_[m]; }
  int identity(int o) const { return identities_[o]; }
  bool is_identity(int m) const { return identities_[morphisms_[m].src] == m; }
  /// g o f, or -1 when the pair is not composable or the table has no entry.
  int compose(int g, int f) const;
  const std::vector<int>& hom(int a, int b) const;
  /// Morphisms with the given source, in index order.
  const std::vector<int>& out_of(int a) const { return out_[a]; }
  std::optional<int> object_index(const std::string& name) const;
  std::optional<int> morphism_index(const std::string& name) const;

  /// First violated axiom: composites defined with correct endpoints,
  /// identity laws, associativity.
  std::optional<std::string> check_axioms() const;

  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
    return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ &&
           a.identities_ == b.identities_ && a.after_ == b.after_;
  }

 private:
  void index();

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  // after_[f] maps g to g o f.
  std::vector<std::map<int, int>> after_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<std::vector<int>>> hom_;
  std::unordered_map<std::string, int> object_index_;
  std::unordered_map<std::string, int> morphism_index_;
};

FiniteCategory opposite_cat(const FiniteCategory& c);
FiniteCategory product_cat(const FiniteCategory& c, const FiniteCategory& d);
/// Objects are the morphisms f: u -> v; a morphism f -> g for g: x -> y is
/// a pair (a: x -> u, b: v -> y) with b o f o a = g, named "<a|f|b>".
FiniteCategory twisted_arrow(const FiniteCategory& c);

// Small categories used throughout tests and the CLI.
FiniteCategory poset_chain(int n);  // 0 < 1 < ... < n-1
FiniteCategory discrete_cat(int k);
FiniteCategory cyclic_group_cat(int n);  // one object, Z/n
FiniteCategory kronecker_cat();          // two parallel arrows 0 => 1
FiniteCategory square_cat();             // the poset [1] x [1]
FiniteCategory idempotent_cat();         // one object, {1, e} with e e = e
/// Looks up "poset:3", "discrete:2", "cyclic:2", "kronecker", "square",
/// "idempotent"; nullopt for unknown names.
std::optional<FiniteCategory> builtin_category(const std::string& name);

/// A chain c_0 -> c_1 -> ... of morphisms; `start` fixes c_0 for n = 0.
struct Chain {
  int start = 0;
  std::vector<int> arrows;
};

/// The nerve, stored through `depth` (complete when no nondegenerate
/// simplices exist above it). Nondegenerate n-simplices are chains of n
/// non-identity morphisms, labelled "f1;f2;...;fn" (vertices by object name).
class Nerve {
 public:
  /// max_simplices > 0 guards the total number of nondegenerate simplices.
  Nerve(const FiniteCategory& c, int depth, std::size_t max_simplices = 0);

  const SimplicialSet& set() const { return set_; }
  const FiniteCategory& category() const { return *c_; }
  const Chain& chain(SimplexRef r) const { return chains_[r.dim][r.index]; }
  /// The simplex of a chain that may contain identities.
  Simplex simplex(const Chain& chain) const;

 private:
  const FiniteCategory* c_;
  SimplicialSet set_;
  std::vector<std::vector<Chain>> chains_;
  std::vector<std::map<std::vector<int>, int>> index_;
  std::vector<int> vertex_;
};

SimplicialSet nerve(const FiniteCategory& c, int depth);

/// A functor between finite categories given on objects and morphisms.
struct FunctorData {
  const FiniteCategory* source = nullptr;
  const FiniteCategory* target = nullptr;
  std::vector<int> on_objects;
  std::vector<int> on_morphisms;

  std::optional<std::string> check() const;
};

FunctorData identity_functor(const FiniteCategory& c);

/// Induced map of nerves.
SimplicialMap nerve_map(const FunctorData& f, const Nerve& source, const Nerve& target);

enum class CommaSide { kSlice, kCoslice };

/// Slice form: objects (c, h: F(c) -> x); coslice form: (c, h: x -> F(c)).
/// Morphisms are source morphisms making the triangle commute.
FiniteCategory comma(const FunctorData& f, int x, CommaSide side = CommaSide::kSlice);

/// The ordinary slice category C/x (objects are morphisms into x).
FiniteCategory slice(const FiniteCategory& c, int x);

struct TwistedComparison {
  bool ok = true;
  std::string witness;
};

/// Compares N(Tw C) with the edgewise subdivision of NC through `depth`
/// under the bijection (a_n..a_1, b_1..b_n) -> a_n...a_1 f b_1...b_n.
TwistedComparison nerve_twisted_vs_edgewise(const FiniteCategory& c, int depth);

/// The simplicial map N(Tw C) -> N(C^op) x N(C) forgetting f.
SimplicialMap twisted_projection(const FiniteCategory& c, int depth);

}  // namespace qcat
