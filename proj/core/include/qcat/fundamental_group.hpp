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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcat/bigint.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat {

/// A finite group presentation. Letters are signed 1-based generator
/// indices: g and -g stand for a generator and its inverse.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;

  int rank() const { return static_cast<int>(generators.size()); }
  std::string str() const;
};

/// Presentation of the fundamental group at the basepoint (default: the first
/// vertex), read off a BFS spanning tree: one generator per nondegenerate
/// edge outside the tree, one relator per nondegenerate 2-simplex. Needs the
/// set stored through dimension 2 and throws DisconnectedError when it has
/// more than one component.
GroupPresentation pi1_presentation(const SimplicialSet& x,
                                   std::optional<SimplexRef> basepoint = std::nullopt);

struct TietzeResult {
  GroupPresentation presentation;
  int moves = 0;
  bool budget_exhausted = false;
};

/// Deterministic Tietze simplification: free and cyclic reduction, removal
/// of trivial and duplicate relators, and elimination of generators that
/// occur exactly once in some relator.
TietzeResult tietze_simplify(GroupPresentation p, int budget = 10000);

struct AbelianGroup {
  int rank = 0;
  std::vector<BigInt> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::string str() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup abelianize(const GroupPresentation& p);
std::ostream& operator<<(std::ostream& os, const AbelianGroup& g);

/// Number of connected components (via the 1-skeleton).
int connected_components(const SimplicialSet& x);

}  // namespace qcat
