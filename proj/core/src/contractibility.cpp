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

#include "qcat/contractibility.hpp"

#include "qcat/error.hpp"

namespace qcat {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kContractibleUpTo:
      return "contractible_up_to";
    case Verdict::kNotContractible:
      return "not_contractible";
    case Verdict::kInconclusive:
      break;
  }
  return "inconclusive";
}

std::string ContractibilityCertificate::str() const {
  std::string s = std::string(verdict_name(verdict)) + "(" + std::to_string(degree) + ")";
  if (!witness.empty()) s += ": " + witness;
  return s;
}

ContractibilityCertificate certify_contractible(const SimplicialSet& x, int degree) {
  if (degree < 0) throw InputError("contractibility degree must be nonnegative");
  x.require_depth(degree + 1, "contractibility certificate");
  ContractibilityCertificate c;
  c.degree = degree;
  c.homology = homology(x, degree);
  const auto& h0 = c.homology.at(0);
  if (h0.betti != 1) {
    c.verdict = Verdict::kNotContractible;
    c.witness = "H0 = " + h0.str();
    return c;
  }
  for (int k = 1; k <= degree; ++k) {
    const auto& hk = c.homology.at(k);
    if (hk.betti != 0 || !hk.torsion.empty()) {
      c.verdict = Verdict::kNotContractible;
      c.witness = "H" + std::to_string(k) + " = " + hk.str();
      return c;
    }
  }
  if (degree >= 1) {
    auto simplified = tietze_simplify(pi1_presentation(x));
    c.pi1 = simplified.presentation;
    if (simplified.presentation.rank() != 0) {
      c.verdict = Verdict::kInconclusive;
      c.witness = "perfect fundamental group not shown trivial: " + simplified.presentation.str();
      return c;
    }
  }
  c.verdict = Verdict::kContractibleUpTo;
  return c;
}

}  // namespace qcat
