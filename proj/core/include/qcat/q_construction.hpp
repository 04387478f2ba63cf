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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcat/exact.hpp"
#include "qcat/finite_category.hpp"
#include "qcat/fundamental_group.hpp"
#include "qcat/homology.hpp"

namespace qcat {

/// Quillen's span category: objects of the instance, morphisms X -> Y the
/// spans X <<- U >-> Y up to isomorphism, composed by pullback. Morphisms
/// are named "X->Y#k" after their position among the sorted spans, except
/// identities, which are "1_X".
struct QCategory {
  std::shared_ptr<const ExactInstance> instance;
  FiniteCategory category;
  std::vector<Span> spans;
  std::map<Span, int> index;

  std::optional<int> morphism_of(const Span& s) const;
};

/// max_morphisms > 0 guards the number of spans.
QCategory q_category(std::shared_ptr<const ExactInstance> c, std::size_t max_morphisms = 0);

struct K0Report {
  AbelianGroup group;
  GroupPresentation presentation;
  TietzeResult simplified;
  HomologyReport homology;
  int objects = 0;
  int morphisms = 0;
};

/// Abelianized pi_1 of the nerve of Q(C), stored through `depth` (>= 2).
/// Throws DisconnectedError when the nerve is disconnected.
K0Report k0(const QCategory& q, int depth);
K0Report k0(std::shared_ptr<const ExactInstance> c, int depth);

/// Objects X(i, j), 0 <= i <= j <= n, with egressives X(i, j) ->> X(i, j-1)
/// and ingressives X(i, j) >-> X(i+1, j); the remaining structure maps are
/// their composites.
struct AmbigressiveDiagram {
  int n = 0;
  std::vector<int> objects;
  std::vector<Hom> down;    // at pos(i, j), j > i
  std::vector<Hom> across;  // at pos(i, j), j > i

  static int pos(int n, int i, int j) { return i * (n + 1) + j; }
  int object(int i, int j) const { return objects[pos(n, i, j)]; }
  const Hom& egressive(int i, int j) const { return down[pos(n, i, j)]; }
  const Hom& ingressive(int i, int j) const { return across[pos(n, i, j)]; }
  /// The composite structure maps X(i, j) ->> X(i, l) and X(i, j) >-> X(k, j).
  Hom egressive_to(const ExactInstance& c, int i, int j, int l) const;
  Hom ingressive_to(const ExactInstance& c, int i, int j, int k) const;
  /// X(k, k) <<- X(k, k+1) >-> X(k+1, k+1).
  Span spine(const ExactInstance& c, int k) const;
};

/// Isomorphism of diagrams that is the identity on the diagonal X(i, i).
bool diagrams_isomorphic(const ExactInstance& c, const AmbigressiveDiagram& a,
                         const AmbigressiveDiagram& b);

/// Every ambigressive diagram of size n (n <= 3), one per isomorphism class.
/// max_raw > 0 guards the number of raw diagrams visited.
std::vector<AmbigressiveDiagram> enumerate_ambigressive(const ExactInstance& c, int n,
                                                        long long max_raw = 5'000'000);

/// Every square i <= k <= l <= j of the diagram passes bicartesian_check.
bool diagram_bicartesian(const ExactInstance& c, const AmbigressiveDiagram& d);

struct SegalReport {
  int n = 0;
  long long diagrams = 0;
  long long strings = 0;
  bool bijective = false;
  std::string witness;
};

/// Composable n-strings of morphisms (n = 0: objects).
long long composable_strings(const FiniteCategory& c, int n);

/// Compares diagram classes with composable strings through their spines.
SegalReport segal_spine_check(const QCategory& q, int n);

struct RigidityReport {
  bool ok = true;
  int spans = 0;
  long long morphisms = 0;
  int components = 0;
  std::string witness;
};

/// The groupoid of concrete spans X <<- U >-> Y and leg-compatible
/// isomorphisms; ok when parallel morphisms always agree and the components
/// are exactly the span classes.
RigidityReport groupoid_rigidity(const ExactInstance& c, int x, int y);

}  // namespace qcat
