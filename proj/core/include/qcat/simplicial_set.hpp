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

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcat/delta_map.hpp"

namespace qcat {

/// Position of a nondegenerate simplex: its dimension and index within it.
struct SimplexRef {
  int dim = 0;
  int index = 0;
  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

/// A general n-simplex in Eilenberg-Zilber normal form: the degeneracy
/// operator of a surjection [n] -> [base.dim] applied to a nondegenerate
/// simplex. The representation is unique, so equality is structural.
struct Simplex {
  DeltaMap degeneracy;
  SimplexRef base;

  static Simplex of(SimplexRef r) { return {DeltaMap::identity(r.dim), r}; }
  int dim() const { return degeneracy.source(); }
  bool nondegenerate() const { return degeneracy.source() == degeneracy.target(); }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const;
};

/// Surjections [n] -> [k] in lexicographic order.
const std::vector<DeltaMap>& surjections(int n, int k);

/// A finite (possibly truncated) simplicial set presented by its
/// nondegenerate simplices and their normalized faces.
///
/// When `truncation()` is set to T, simplices of dimension > T exist but are
/// not stored; operations needing higher dimensions throw DepthError.
class SimplicialSet {
 public:
  class Builder {
   public:
    /// Adds a nondegenerate simplex whose dimension is faces.size() - 1
    /// (a vertex when `faces` is empty). Faces must already be present.
    SimplexRef add(std::string label, std::vector<Simplex> faces);
    SimplexRef add_vertex(std::string label) { return add(std::move(label), {}); }
    int count(int dim) const;
    /// Validates the simplicial identities; throws InputError on failure.
    SimplicialSet build(std::optional<int> truncation = std::nullopt) &&;
    /// As build(), without the identity check (for trusted constructions).
    SimplicialSet build_unchecked(std::optional<int> truncation = std::nullopt) &&;

   private:
    friend class SimplicialSet;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::vector<std::vector<Simplex>>> faces_;
    std::unordered_map<std::string, SimplexRef> by_label_;
  };

  SimplicialSet() = default;

  /// Highest dimension holding a stored simplex, or -1 when empty.
  int dimension() const { return static_cast<int>(labels_.size()) - 1; }
  std::optional<int> truncation() const { return truncation_; }
  bool stored_through(int n) const { return !truncation_ || n <= *truncation_; }
  /// Throws DepthError unless stored_through(n).
  void require_depth(int n, const char* what) const;

  int count(int n) const;
  std::size_t total() const;
  const std::string& label(SimplexRef r) const { return labels_[r.dim][r.index]; }
  std::optional<SimplexRef> lookup(const std::string& label) const;
  const std::vector<Simplex>& faces(SimplexRef r) const { return faces_[r.dim][r.index]; }

  /// f^* s for f: [a] -> [s.dim()], normalized.
  Simplex apply(const DeltaMap& f, const Simplex& s) const;
  Simplex face(const Simplex& s, int i) const;
  Simplex degeneracy(const Simplex& s, int i) const;

  /// Every n-simplex (degenerate ones included). Requires depth n.
  std::vector<Simplex> simplices(int n) const;

  /// Returns a description of the first violated identity, if any:
  /// normal-form faces of the right dimension and d_i d_j = d_{j-1} d_i.
  std::optional<std::string> check_identities() const;

  friend bool operator==(const SimplicialSet&, const SimplicialSet&) = default;

 private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<std::vector<Simplex>>> faces_;
  std::unordered_map<std::string, SimplexRef> by_label_;
  std::optional<int> truncation_;
};

// Standard constructions.

SimplicialSet standard_simplex(int n);
/// The boundary of the standard n-simplex (n >= 1).
SimplicialSet simplex_boundary(int n);
/// Builds a simplicial set from an ordered simplicial complex given by its
/// maximal faces (vertex lists are sorted internally).
SimplicialSet from_complex(const std::vector<std::vector<int>>& facets);
SimplicialSet disjoint_union(const SimplicialSet& a, const SimplicialSet& b);
/// Levelwise product. Stored through `depth` when given, otherwise through
/// the smaller truncation of the factors (complete if both are).
SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y,
                      std::optional<int> depth = std::nullopt);
/// The simplex of `xy` = product(x, y) with coordinates a and b.
Simplex product_simplex(const SimplicialSet& xy, const SimplicialSet& x, const SimplicialSet& y,
                        const Simplex& a, const Simplex& b);
SimplicialSet opposite(const SimplicialSet& x);
/// Drops everything above dimension n and marks the result truncated at n
/// (unless x is complete and already has nothing above n).
SimplicialSet truncate(const SimplicialSet& x, int n);
/// Renames simplices; the new labels must be distinct.
SimplicialSet relabel(const SimplicialSet& x,
                      const std::function<std::string(SimplexRef)>& name);
/// First difference in labels or faces between a and b in dimensions
/// 0..through (truncation markers are ignored).
std::optional<std::string> compare_structure(const SimplicialSet& a, const SimplicialSet& b, int through);
/// Orders the simplices of each dimension by label.
SimplicialSet canonical_order(const SimplicialSet& x);
/// Applies a permutation per dimension: new index of (d, i) is perm[d][i].
SimplicialSet permute(const SimplicialSet& x, const std::vector<std::vector<int>>& perm);

}  // namespace qcat
