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

#include "qcat/simplicial_set.hpp"

namespace qcat {

/// A simplicial map, given by the images of nondegenerate simplices.
class SimplicialMap {
 public:
  SimplicialMap(std::shared_ptr<const SimplicialSet> source,
                std::shared_ptr<const SimplicialSet> target,
                std::vector<std::vector<Simplex>> images);

  const SimplicialSet& source() const { return *source_; }
  const SimplicialSet& target() const { return *target_; }
  const std::shared_ptr<const SimplicialSet>& source_ptr() const { return source_; }
  const std::shared_ptr<const SimplicialSet>& target_ptr() const { return target_; }
  const Simplex& image(SimplexRef r) const { return images_[r.dim][r.index]; }
  Simplex operator()(const Simplex& s) const;

  /// First failure of dimension preservation or face compatibility.
  std::optional<std::string> check() const;

 private:
  std::shared_ptr<const SimplicialSet> source_;
  std::shared_ptr<const SimplicialSet> target_;
  std::vector<std::vector<Simplex>> images_;
};

SimplicialMap identity_map(std::shared_ptr<const SimplicialSet> x);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

struct LeftFibrationReport {
  bool ok = true;
  long long horns_checked = 0;
  std::string witness;
};

/// Unique lifting against the horn inclusions Lambda^n_k -> Delta^n for
/// 0 <= k < n <= max_dim: every horn in the source over an n-simplex z of the
/// target has exactly one filler mapping to z.
LeftFibrationReport left_fibration_check(const SimplicialMap& f, int max_dim = 3);

}  // namespace qcat
