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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcat/bigint.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat {

/// Sparse integer matrix stored by rows.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::map<int, BigInt>> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r)) {}
  void add(int r, int c, const BigInt& v);
};

/// Nonzero invariant factors d_1 | d_2 | ... (all positive) and their count.
struct SmithForm {
  int rank = 0;
  std::vector<BigInt> invariants;
};

SmithForm smith_form(IntMatrix m);

/// Boundary of normalized chains, C_k -> C_{k-1}, in the basis of
/// nondegenerate simplices. Requires k <= stored depth.
IntMatrix boundary_matrix(const SimplicialSet& x, int k);

struct HomologyGroup {
  int degree = 0;
  int betti = 0;
  /// Torsion invariants > 1, each dividing the next.
  std::vector<BigInt> torsion;

  std::string str() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyReport {
  std::vector<HomologyGroup> groups;
  /// Highest degree whose group is exact for the underlying (untruncated) set.
  int valid_through = -1;

  const HomologyGroup& at(int k) const { return groups.at(static_cast<std::size_t>(k)); }
  /// Alternating sum of Betti numbers (meaningful when complete).
  long long euler_characteristic() const;
  friend bool operator==(const HomologyReport&, const HomologyReport&) = default;
};

/// Integral homology H_0..H_through. A set truncated at T yields groups
/// through T-1; asking for more throws DepthError. Defaults to everything
/// that can be computed.
std::ostream& operator<<(std::ostream& os, const HomologyGroup& g);
std::ostream& operator<<(std::ostream& os, const HomologyReport& h);

HomologyReport homology(const SimplicialSet& x, std::optional<int> through = std::nullopt);

}  // namespace qcat
