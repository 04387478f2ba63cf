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

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcat/contractibility.hpp"
#include "qcat/simplicial_map.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat {

/// A functor Delta -> Delta given as a join of copies of id and op, or the
/// constant functor at [k].
class JoinWord {
 public:
  enum class Letter { kId, kOp };

  explicit JoinWord(std::vector<Letter> letters);
  static JoinWord constant(int k);
  /// Parses "op,id", "id", "const:2" (whitespace-free, comma separated).
  static JoinWord parse(const std::string& text);
  /// Every word of the given length, in lexicographic order (id < op).
  static std::vector<JoinWord> all_of_length(int length);

  bool is_constant() const { return constant_.has_value(); }
  const std::vector<Letter>& letters() const { return letters_; }

  int apply_object(int n) const;
  DeltaMap apply_map(const DeltaMap& f) const;
  std::string str() const;

  friend bool operator==(const JoinWord&, const JoinWord&) = default;

 private:
  JoinWord() = default;
  std::vector<Letter> letters_;
  std::optional<int> constant_;
};

/// theta^* X for theta given by a join word, stored through `depth`.
/// Keeps, for every nondegenerate simplex, the simplex of X it came from.
class Pullback {
 public:
  Pullback(JoinWord w, const SimplicialSet& x, int depth);

  const SimplicialSet& set() const { return set_; }
  const JoinWord& word() const { return word_; }
  /// The theta(n)-simplex of X underlying a nondegenerate simplex.
  const Simplex& carrier(SimplexRef r) const { return carriers_[r.dim][r.index]; }
  /// Normal form in theta^* X of a theta(n)-simplex of X, read at level n.
  Simplex normalize(const Simplex& s, int n) const;

 private:
  JoinWord word_;
  const SimplicialSet* x_;
  SimplicialSet set_;
  std::vector<std::vector<Simplex>> carriers_;
  std::vector<std::unordered_map<Simplex, int, SimplexHash>> index_;
};

SimplicialSet pullback(const JoinWord& w, const SimplicialSet& x, int depth);

/// theta^* applied to a simplicial map.
SimplicialMap pullback_map(const JoinWord& w, const SimplicialMap& f, int depth);

struct SubdivisionVerdict {
  enum class Kind { kSubdivision, kNotSubdivision, kInconclusive };
  Kind kind = Kind::kInconclusive;
  int m_max = 0;
  int depth = 0;
  std::optional<int> failing_m;
  std::string witness;
  std::vector<ContractibilityCertificate> per_m;

  std::string str() const;
};

const char* kind_name(SubdivisionVerdict::Kind k);

/// Certifies theta^*(Delta^m) weakly contractible through degree depth - 1
/// for each m <= m_max. Depth defaults to m_max + 1.
SubdivisionVerdict is_combinatorial_subdivision(const JoinWord& w, int m_max,
                                                std::optional<int> depth = std::nullopt);

/// The edgewise subdivision pullback((op,id), X, depth).
SimplicialSet edgewise(const SimplicialSet& x, int depth);

/// The map edgewise(X) -> X^op x X restricting along the two inclusions of
/// [n] into [n]^op * [n]. The target is product(opposite(X), X, depth).
SimplicialMap edgewise_structure_map(const SimplicialSet& x, int depth);

}  // namespace qcat
