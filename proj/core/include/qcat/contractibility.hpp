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

#include "qcat/fundamental_group.hpp"
#include "qcat/homology.hpp"

namespace qcat {

enum class Verdict { kContractibleUpTo, kNotContractible, kInconclusive };

const char* verdict_name(Verdict v);

/// Evidence that a simplicial set is (or is not) weakly contractible
/// through a given degree D: connected, trivial fundamental group (when
/// D >= 1) and vanishing reduced homology in degrees 1..D. By Hurewicz this
/// kills the homotopy groups through degree D.
struct ContractibilityCertificate {
  Verdict verdict = Verdict::kInconclusive;
  int degree = 0;
  std::string witness;
  HomologyReport homology;
  std::optional<GroupPresentation> pi1;

  bool contractible() const { return verdict == Verdict::kContractibleUpTo; }
  std::string str() const;
};

/// Requires the set stored through dimension D + 1 (DepthError otherwise).
ContractibilityCertificate certify_contractible(const SimplicialSet& x, int degree);

}  // namespace qcat
