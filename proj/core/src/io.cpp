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

#include "qcat/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "qcat/error.hpp"

namespace qcat {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

}  // namespace

SimplicialSet sset_from_json(const Json& j) {
  if (!j.is_object()) fail("$", "expected an object");
  if (!j.contains("dims") || !j["dims"].is_array()) fail("$.dims", "missing array");
  const Json faces = j.value("faces", Json::object());
  if (!faces.is_object()) fail("$.faces", "expected an object");
  std::optional<int> truncation;
  if (j.contains("truncation")) {
    if (!j["truncation"].is_number_integer() || j["truncation"].get<int>() < 0)
      fail("$.truncation", "expected a nonnegative integer");
    truncation = j["truncation"].get<int>();
  }
  SimplicialSet::Builder b;
  std::unordered_map<std::string, SimplexRef> seen;
  const Json& dims = j["dims"];
  for (std::size_t n = 0; n < dims.size(); ++n) {
    const std::string dpath = "$.dims[" + std::to_string(n) + "]";
    if (!dims[n].is_array()) fail(dpath, "expected an array of labels");
    for (std::size_t k = 0; k < dims[n].size(); ++k) {
      const std::string spath = dpath + "[" + std::to_string(k) + "]";
      if (!dims[n][k].is_string()) fail(spath, "expected a string label");
      const std::string label = dims[n][k].get<std::string>();
      std::vector<Simplex> fs;
      if (n > 0) {
        const std::string fpath = "$.faces[\"" + label + "\"]";
        if (!faces.contains(label)) fail(fpath, "missing faces");
        const Json& list = faces[label];
        if (!list.is_array() || list.size() != n + 1)
          fail(fpath, "expected " + std::to_string(n + 1) + " faces");
        for (std::size_t i = 0; i < list.size(); ++i) {
          const std::string ipath = fpath + "[" + std::to_string(i) + "]";
          std::vector<int> word;
          std::string target;
          const Json& f = list[i];
          if (f.is_string()) {
            target = f.get<std::string>();
          } else if (f.is_array() && f.size() == 2 && f[0].is_array() && f[1].is_string()) {
            for (const auto& w : f[0]) {
              if (!w.is_number_integer()) fail(ipath, "degeneracy word must hold integers");
              word.push_back(w.get<int>());
            }
            target = f[1].get<std::string>();
          } else {
            fail(ipath, "expected a label or [word, label]");
          }
          const int fd = static_cast<int>(n) - 1;
          try {
            DeltaMap eta = DeltaMap::from_degeneracy_word(fd, word);
            auto it = seen.find(target);
            if (it == seen.end() || it->second.dim != eta.target())
              fail(ipath, "no " + std::to_string(eta.target()) + "-simplex '" + target + "'");
            fs.push_back({std::move(eta), it->second});
          } catch (const InputError& e) {
            if (std::string(e.what()).rfind("$", 0) == 0) throw;
            fail(ipath, e.what());
          }
        }
      } else if (faces.contains(label) && !faces[label].empty()) {
        fail("$.faces[\"" + label + "\"]", "a vertex has no faces");
      }
      try {
        seen[label] = b.add(label, std::move(fs));
      } catch (const InputError& e) {
        fail(spath, e.what());
      }
    }
  }
  try {
    return std::move(b).build(truncation);
  } catch (const InputError& e) {
    fail("$", e.what());
  }
}

Json sset_to_json(const SimplicialSet& x) {
  Json dims = Json::array();
  Json faces = Json::object();
  for (int n = 0; n <= x.dimension(); ++n) {
    Json level = Json::array();
    for (int i = 0; i < x.count(n); ++i) {
      const std::string& l = x.label({n, i});
      level.push_back(l);
      if (n == 0) continue;
      Json fl = Json::array();
      for (const auto& f : x.faces({n, i})) {
        if (f.nondegenerate()) {
          fl.push_back(x.label(f.base));
        } else {
          fl.push_back(Json::array({f.degeneracy.degeneracy_word(), x.label(f.base)}));
        }
      }
      faces[l] = std::move(fl);
    }
    dims.push_back(std::move(level));
  }
  Json j = Json::object();
  j["dims"] = std::move(dims);
  j["faces"] = std::move(faces);
  if (x.truncation()) j["truncation"] = *x.truncation();
  return j;
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(origin + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

namespace {

template <class F>
auto with_path(const std::string& path, F&& read) {
  try {
    return read(read_json(path));
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + msg);
  }
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

}  // namespace

SimplicialSet read_sset(const std::string& path) {
  return with_path(path, [](const Json& j) { return sset_from_json(j); });
}

FiniteCategory category_from_json(const Json& j) {
  if (!j.is_object()) fail("$", "expected an object");
  for (const char* key : {"objects", "morphisms"})
    if (!j.contains(key) || !j[key].is_array()) fail(std::string("$.") + key, "missing array");
  const Json ids = j.value("identities", Json::object());
  const Json comp = j.value("compose", Json::array());
  if (!ids.is_object()) fail("$.identities", "expected an object");
  if (!comp.is_array()) fail("$.compose", "expected an array");
  FiniteCategory::Builder b;
  for (std::size_t i = 0; i < j["objects"].size(); ++i) {
    const std::string where = "$.objects[" + std::to_string(i) + "]";
    const std::string name = string_at(j["objects"][i], where);
    if (b.object(name)) fail(where, "duplicate object '" + name + "'");
    b.add_bare_object(name);
  }
  for (std::size_t i = 0; i < j["morphisms"].size(); ++i) {
    const std::string where = "$.morphisms[" + std::to_string(i) + "]";
    const Json& m = j["morphisms"][i];
    if (!m.is_object()) fail(where, "expected an object");
    for (const char* key : {"id", "src", "dst"})
      if (!m.contains(key)) fail(where + "." + key, "missing");
    const std::string id = string_at(m["id"], where + ".id");
    const std::string src = string_at(m["src"], where + ".src");
    const std::string dst = string_at(m["dst"], where + ".dst");
    if (b.morphism(id)) fail(where + ".id", "duplicate morphism '" + id + "'");
    if (!b.object(src)) fail(where + ".src", "unknown object '" + src + "'");
    if (!b.object(dst)) fail(where + ".dst", "unknown object '" + dst + "'");
    b.add_morphism(id, src, dst);
  }
  for (std::size_t i = 0; i < j["objects"].size(); ++i) {
    const std::string name = j["objects"][i].get<std::string>();
    const std::string where = "$.identities[\"" + name + "\"]";
    if (!ids.contains(name)) fail(where, "missing identity");
    const std::string id = string_at(ids[name], where);
    auto m = b.morphism(id);
    if (!m) fail(where, "unknown morphism '" + id + "'");
    try {
      b.set_identity(*b.object(name), *m);
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  for (const auto& [name, _] : ids.items())
    if (!b.object(name)) fail("$.identities[\"" + name + "\"]", "unknown object");
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const std::string where = "$.compose[" + std::to_string(i) + "]";
    const Json& t = comp[i];
    if (!t.is_array() || t.size() != 3) fail(where, "expected [g, f, gf]");
    int ms[3];
    for (int k = 0; k < 3; ++k) {
      const std::string w = where + "[" + std::to_string(k) + "]";
      const std::string id = string_at(t[k], w);
      auto m = b.morphism(id);
      if (!m) fail(w, "unknown morphism '" + id + "'");
      ms[k] = *m;
    }
    try {
      b.set_compose(ms[0], ms[1], ms[2]);
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  try {
    return std::move(b).build();
  } catch (const InputError& e) {
    fail("$", e.what());
  }
}

Json category_to_json(const FiniteCategory& c) {
  Json objects = Json::array();
  Json ids = Json::object();
  for (int o = 0; o < c.objects(); ++o) {
    objects.push_back(c.object_name(o));
    ids[c.object_name(o)] = c.morphism(c.identity(o)).name;
  }
  Json morphisms = Json::array();
  for (int m = 0; m < c.morphisms(); ++m) {
    const auto& mor = c.morphism(m);
    morphisms.push_back({{"id", mor.name}, {"src", c.object_name(mor.src)}, {"dst", c.object_name(mor.dst)}});
  }
  Json comp = Json::array();
  for (int f = 0; f < c.morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    for (int g : c.out_of(c.morphism(f).dst)) {
      if (c.is_identity(g)) continue;
      comp.push_back(Json::array({c.morphism(g).name, c.morphism(f).name, c.morphism(c.compose(g, f)).name}));
    }
  }
  return {{"objects", std::move(objects)},
          {"morphisms", std::move(morphisms)},
          {"identities", std::move(ids)},
          {"compose", std::move(comp)}};
}

FiniteCategory read_category(const std::string& path) {
  return with_path(path, [](const Json& j) { return category_from_json(j); });
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError(path + ": cannot write");
  out << j.dump(2) << "\n";
}

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return to_string(v);
}

Json homology_to_json(const HomologyReport& h) {
  Json groups = Json::array();
  for (const auto& g : h.groups) {
    Json t = Json::array();
    for (const auto& d : g.torsion) t.push_back(bigint_to_json(d));
    groups.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", std::move(t)}});
  }
  return {{"groups", std::move(groups)}, {"valid_through", h.valid_through}};
}

Json presentation_to_json(const GroupPresentation& p) {
  return {{"generators", p.generators}, {"relators", p.relators}, {"text", p.str()}};
}

Json abelian_to_json(const AbelianGroup& g) {
  Json t = Json::array();
  for (const auto& d : g.torsion) t.push_back(bigint_to_json(d));
  return {{"rank", g.rank}, {"torsion", std::move(t)}, {"text", g.str()}};
}

Json certificate_to_json(const ContractibilityCertificate& c) {
  Json j{{"verdict", verdict_name(c.verdict)},
         {"degree", c.degree},
         {"witness", c.witness},
         {"homology", homology_to_json(c.homology)}};
  j["pi1"] = c.pi1 ? presentation_to_json(*c.pi1) : Json();
  return j;
}

}  // namespace qcat
