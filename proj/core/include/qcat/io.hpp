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
#include <nlohmann/json.hpp>
#include <string>

#include "qcat/contractibility.hpp"
#include "qcat/finite_category.hpp"
#include "qcat/fundamental_group.hpp"
#include "qcat/homology.hpp"
#include "qcat/simplicial_set.hpp"

namespace qcat {

using Json = nlohmann::ordered_json;

/// Simplicial sets as JSON:
///   {"dims": [[labels of 0-simplices], [labels of 1-simplices], ...],
///    "faces": {"label": [face_0, ..., face_n]},
///    "truncation": T}                                   (optional)
/// A face is either a label or [[degeneracy word], label].
/// Errors are reported as InputError naming the offending location.
SimplicialSet sset_from_json(const Json& j);
Json sset_to_json(const SimplicialSet& x);

SimplicialSet read_sset(const std::string& path);
void write_json(const std::string& path, const Json& j);
Json read_json(const std::string& path);

/// {"objects": [...], "morphisms": [{"id", "src", "dst"}], "identities":
/// {object: morphism}, "compose": [[g, f, gf], ...]}. Composites with an
/// identity may be omitted.
FiniteCategory category_from_json(const Json& j);
Json category_to_json(const FiniteCategory& c);
FiniteCategory read_category(const std::string& path);
Json parse_json(const std::string& text, const std::string& origin);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json bigint_to_json(const BigInt& v);
Json homology_to_json(const HomologyReport& h);
/// {"generators": [...], "relators": [[signed generator indices]], "text"}.
Json presentation_to_json(const GroupPresentation& p);
/// {"rank", "torsion", "text"}.
Json abelian_to_json(const AbelianGroup& g);
Json certificate_to_json(const ContractibilityCertificate& c);

}  // namespace qcat
