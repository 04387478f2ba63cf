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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcat/contractibility.hpp"
#include "qcat/exact.hpp"
#include "qcat/finite_category.hpp"
#include "qcat/q_construction.hpp"

namespace qcat {

/// An exact functor between instances over the same prime that sends each
/// object to the target object of the same type. Homomorphisms keep their
/// element tables, since both sides encode elements identically.
struct ExactEmbedding {
  std::shared_ptr<const ExactInstance> source;
  std::shared_ptr<const ExactInstance> target;
  std::vector<int> on_objects;

  Hom operator()(const Hom& f) const { return Hom{on_objects[f.src], on_objects[f.dst], f.table}; }
  /// Preservation of zero, direct sums, ingressives, egressives and
  /// ambigressive pullbacks, checked by enumeration.
  std::optional<std::string> check() const;
};

/// Throws InputError when the primes differ and GuardError when a source
/// object has no counterpart within the target bounds.
ExactEmbedding embed(std::shared_ptr<const ExactInstance> source,
                     std::shared_ptr<const ExactInstance> target);

/// 0 = X_0 >-> X_1 >-> ... >-> X_m = X with X_i / X_(i-1) the image of a
/// source object U_i; quotient_maps[i] : X_i ->> psi(U_i) has kernel X_(i-1).
struct AdmissibleFiltration {
  int object = 0;
  bool ok = false;
  std::vector<int> stages;
  std::vector<Hom> inclusions;
  std::vector<int> witnesses;
  std::vector<Hom> quotient_maps;
  std::string witness;
};

/// The p-power torsion filtration X_i = X[p^i].
AdmissibleFiltration admissible_filtration(const ExactEmbedding& psi, int x);

/// Q(psi) and the commas over target objects.
class DevissageContext {
 public:
  explicit DevissageContext(ExactEmbedding psi);
  DevissageContext(const DevissageContext&) = delete;
  DevissageContext& operator=(const DevissageContext&) = delete;

  const ExactEmbedding& embedding() const { return psi_; }
  const QCategory& source_q() const { return qs_; }
  const QCategory& target_q() const { return qt_; }
  const FunctorData& functor() const { return f_; }

  /// Objects (U, h: psi U -> X in Q(target)); morphisms are Q(source)
  /// morphisms making the triangle commute.
  FiniteCategory comma_category(int x) const;
  /// Nerve of the comma, stored through `depth` (<= 4).
  SimplicialSet comma_over(int x, int depth) const;

 private:
  ExactEmbedding psi_;
  QCategory qs_;
  QCategory qt_;
  FunctorData f_;
};

SimplicialSet comma_over(const ExactEmbedding& psi, int x, int depth);

/// Pairs (U, g: X -> psi U) with X a target object and g any homomorphism.
/// A morphism (V, h: Y -> psi V) -> (U, g: X -> psi U) is a Q(source)
/// morphism U -> V, represented by U <<- W >-> V, together with y: Y -> X
/// such that (y, h) exhibits Y as X x_(psi U) psi W. Composition composes the
/// spans and the maps y.
struct RelativeQ {
  struct Object {
    int u = 0;
    int x = 0;
    Hom g;
  };
  struct Morphism {
    int span = 0;  // morphism of Q(source)
    Hom y;
  };
  FiniteCategory category;
  std::vector<Object> objects;
  std::vector<Morphism> morphisms;
};

/// max_objects > 0 guards the number of pairs.
RelativeQ relative_q_objects(const DevissageContext& ctx, std::size_t max_objects = 2000);

struct ProbeCertificate {
  int object = 0;
  std::string name;
  ContractibilityCertificate certificate;
  AdmissibleFiltration filtration;
  /// Homology of the comma over each filtration stage, through the degree.
  std::vector<HomologyReport> stage_homology;
  bool stable = false;
  std::string witness;
};

struct DevissageCertificate {
  int degree = 0;
  std::vector<ProbeCertificate> probes;
  Verdict verdict = Verdict::kInconclusive;
  bool stable = false;

  std::string str() const;
};

/// Certifies each probe's comma through `degree` and compares comma homology
/// along its admissible filtration. Probes run on parallel_for workers.
DevissageCertificate devissage_certificate(const DevissageContext& ctx,
                                           const std::vector<int>& probes, int degree);

Json devissage_to_json(const DevissageContext& ctx, const DevissageCertificate& c);

}  // namespace qcat
