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
#include <vector>

#include "qcat/delta_map.hpp"
#include "qcat/finite_category.hpp"

namespace qcat {

/// A morphism J -> I of Lambda(F): a map J -> I_+, with -1 standing for the
/// basepoint. Sets are {0, ..., n-1}.
struct LambdaMorphism {
  int source = 0;
  int target = 0;
  std::vector<int> map;

  static LambdaMorphism identity(int n);
  bool valid() const;
  std::string str() const;
  friend bool operator==(const LambdaMorphism&, const LambdaMorphism&) = default;
};

/// g o f; the basepoint is absorbing.
LambdaMorphism compose(const LambdaMorphism& g, const LambdaMorphism& f);

/// Every morphism J -> I, |J| = j, |I| = i.
std::vector<LambdaMorphism> all_lambda(int j, int i);

/// I ^ J = I x J, with (a, b) at a |J| + b.
int smash(int i, int j);
LambdaMorphism smash_mor(const LambdaMorphism& f, const LambdaMorphism& g);

/// u([n]) is the set of surjections [n] -> [1]; element k - 1 is the cut
/// eta_k(x) = [x >= k], 1 <= k <= n.
int u_on_objects(int n);
DeltaMap cut(int n, int k);
/// For g: [m] -> [n], the morphism u([n]) -> u([m]) sending eta to eta o g
/// when that is surjective and to the basepoint otherwise.
LambdaMorphism u_on_maps(const DeltaMap& g);
/// u(g_1) ^ ... ^ u(g_n). Throws InputError on an empty tuple.
LambdaMorphism u_power(const std::vector<DeltaMap>& gs);

/// Indices in u([n]) of the retractions beta of alpha: [1] -> [n]
/// (beta o alpha = id). Empty when alpha is not injective.
std::vector<int> retraction_set(int n, const DeltaMap& alpha);
/// rho_{S_1..S_k}(alpha_1..alpha_k) = rho(alpha_1) ^ ... ^ rho(alpha_k),
/// as indices in u(S_1) ^ ... ^ u(S_k).
std::vector<int> retraction_set_power(const std::vector<int>& ns, const std::vector<DeltaMap>& alphas);

/// L_I: objects the subsets of I = {0..size-1} (object index = bit mask,
/// named "{0,2}"); a morphism K -> J is psi: K -> J_+ with psi(k) = k
/// whenever psi(k) is not the basepoint, determined by D = psi^-1(J), a
/// subset of K n J. Named "K>J:D".
struct LCategory {
  int size = 0;
  FiniteCategory category;
  /// (K, J, D) of every morphism, by index.
  std::vector<std::vector<int>> parts;

  /// Morphism index of (K, J, D), or -1.
  int morphism(int k, int j, int d) const;

  std::vector<std::vector<std::vector<int>>> index;
};

LCategory L_of(int size);

/// For phi: I' -> I, the functor L_I -> L_I' taking preimages.
FunctorData L_restriction(const LambdaMorphism& phi, const LCategory& l_i, const LCategory& l_i_prime);

struct GammaCheck {
  std::string name;
  bool ok = true;
  long long cases = 0;
  std::string witness;
};

/// u(g o h) = u(h) o u(g) for all g: [b] -> [c], h: [a] -> [b], a, b, c <= max_arity.
GammaCheck check_u_functoriality(int max_arity);
/// |u([n])| = n for n <= max_n.
GammaCheck check_u_sizes(int max_n);
/// u^(2) on all pairs of composable pairs between objects [a], a <= max_arity.
GammaCheck check_u_power_functoriality(int max_arity);
/// smash_mor respects composition, on all morphisms between sets of size <= max_size.
GammaCheck check_smash_functoriality(int max_size);
/// Retraction sets agree with a direct enumeration for every alpha: [1] -> [n], n <= max_n.
GammaCheck check_retractions(int max_n);
/// u(g) carries rho(g o alpha') into rho(alpha'), for arities 1 and 2.
GammaCheck check_retraction_naturality(int max_arity);
/// L_I satisfies the category axioms and preimage functors are functors, |I| <= max_size.
GammaCheck check_L(int max_size);

/// Runs the named check ("u-functoriality", "u-sizes", "u-power",
/// "smash", "retractions", "naturality", "L", or "all").
std::vector<GammaCheck> gamma_checks(const std::string& which, int max_arity);

}  // namespace qcat
