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
#include <string>
#include <utility>
#include <vector>

namespace qcat {

/// A morphism [source] -> [target] of the simplex category: a nondecreasing
/// map {0..source} -> {0..target}.
class DeltaMap {
 public:
  DeltaMap() = default;
  /// Throws InputError unless `values` is nondecreasing with entries in
  /// {0..target} and has source+1 entries.
  DeltaMap(int target, std::vector<int> values);

  static DeltaMap identity(int n);
  /// Coface d^i: [n-1] -> [n], the injection skipping i.
  static DeltaMap coface(int n, int i);
  /// Codegeneracy s^i: [n+1] -> [n], hitting i twice.
  static DeltaMap codegeneracy(int n, int i);
  /// Every nondecreasing map [a] -> [b], in lexicographic order of values.
  static std::vector<DeltaMap> all(int a, int b);

  int source() const { return static_cast<int>(values_.size()) - 1; }
  int target() const { return target_; }
  int operator()(int i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }

  bool injective() const;
  bool surjective() const;

  /// Order-reversed map [a]^op -> [b]^op, i.e. i -> b - f(a - i).
  DeltaMap reversed() const;

  /// Epi-mono factorization: *this == mono.after(epi).
  std::pair<DeltaMap, DeltaMap> factor() const;

  /// Composite (*this) o inner.
  DeltaMap after(const DeltaMap& inner) const;

  /// Positions p with f(p) == f(p+1), listed in decreasing order: the
  /// Eilenberg-Zilber degeneracy word of a surjection.
  std::vector<int> degeneracy_word() const;
  /// Inverse of degeneracy_word for a surjection out of [n].
  static DeltaMap from_degeneracy_word(int n, const std::vector<int>& word);

  std::string str() const;

  friend bool operator==(const DeltaMap&, const DeltaMap&) = default;
  friend auto operator<=>(const DeltaMap&, const DeltaMap&) = default;

 private:
  int target_ = 0;
  std::vector<int> values_{0};
};

}  // namespace qcat
