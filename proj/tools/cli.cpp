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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include "qcat/devissage.hpp"
#include "qcat/error.hpp"
#include "qcat/finite_category.hpp"
#include "qcat/gamma.hpp"
#include "qcat/io.hpp"
#include "qcat/parallel.hpp"
#include "qcat/q_construction.hpp"
#include "qcat/subdivision.hpp"

namespace qcat::cli {

namespace {

struct Report {
  Json json;
  std::string summary;
};

using Command = std::function<Report()>;

std::shared_ptr<const ExactInstance> instance_arg(const std::string& text, const std::string& flag) {
  try {
    if (std::filesystem::is_regular_file(text)) return make_instance(read_json(text));
    return make_instance(text);
  } catch (const InputError& e) {
    throw InputError(flag + ": " + e.what());
  }
}

FiniteCategory category_arg(const std::string& text) {
  if (auto c = builtin_category(text)) return *c;
  if (std::filesystem::is_regular_file(text)) return read_category(text);
  throw InputError("--category: '" + text + "' is neither a builtin category nor a file");
}

Json verdict_to_json(const SubdivisionVerdict& v, const JoinWord& w) {
  Json per_m = Json::array();
  for (const auto& c : v.per_m) per_m.push_back(certificate_to_json(c));
  Json j{{"word", w.str()}, {"verdict", kind_name(v.kind)}, {"m_max", v.m_max}, {"depth", v.depth}};
  j["failing_m"] = v.failing_m ? Json(*v.failing_m) : Json();
  j["witness"] = v.witness;
  j["per_m"] = std::move(per_m);
  return j;
}

Json k0_to_json(const std::string& instance, int depth, const K0Report& r) {
  return {{"instance", instance},
          {"depth", depth},
          {"objects", r.objects},
          {"morphisms", r.morphisms},
          {"k0", abelian_to_json(r.group)},
          {"presentation", presentation_to_json(r.presentation)},
          {"simplified",
           {{"presentation", presentation_to_json(r.simplified.presentation)},
            {"moves", r.simplified.moves},
            {"budget_exhausted", r.simplified.budget_exhausted}}},
          {"homology", homology_to_json(r.homology)}};
}

std::vector<int> probes_arg(const ExactInstance& target, const std::string& text) {
  std::vector<int> out;
  if (text.empty()) {
    for (int x = 0; x < target.objects(); ++x) out.push_back(x);
    return out;
  }
  std::stringstream ss(text);
  std::string name;
  while (std::getline(ss, name, ',')) {
    auto x = target.find(name);
    if (!x) throw InputError("--probes: no object '" + name + "' in " + target.name());
    out.push_back(*x);
  }
  return out;
}

int threads_from_env(std::ostream& err) {
  const char* v = std::getenv("QCAT_THREADS");
  if (!v || !*v) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end || n < 1 || n > 256) {
    err << "QCAT_THREADS: expected a positive integer, got '" << v << "'\n";
    return -1;
  }
  return static_cast<int>(n);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite models of Q-construction combinatorics", "qcat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "qcat 0.1.0");
  std::string out_path;
  app.add_option("--out", out_path, "write the JSON report here");
  Command command;

  auto* sub = app.add_subcommand("subdivide", "test a join word for the combinatorial subdivision property");
  std::string word;
  int mmax = 3, depth = 0;
  sub->add_option("--word", word, "join word such as op,id or const:0")->required();
  sub->add_option("--mmax", mmax, "largest simplex tested")->check(CLI::Range(0, 6));
  sub->add_option("--depth", depth, "stored depth (default mmax+1)")->check(CLI::Range(1, 8));
  sub->callback([&] {
    command = [&] {
      const JoinWord w = JoinWord::parse(word);
      auto v = is_combinatorial_subdivision(w, mmax, depth > 0 ? std::optional<int>(depth) : std::nullopt);
      return Report{verdict_to_json(v, w), w.str() + ": " + kind_name(v.kind)};
    };
  });

  sub = app.add_subcommand("twisted", "compare N(Tw C) with the edgewise subdivision of N(C)");
  std::string category;
  int tw_depth = 3;
  sub->add_option("--category", category, "builtin name (poset:3, cyclic:2, ...) or JSON file")->required();
  sub->add_option("--depth", tw_depth, "dimension checked")->check(CLI::Range(1, 5));
  sub->callback([&] {
    command = [&] {
      const FiniteCategory c = category_arg(category);
      const FiniteCategory tw = twisted_arrow(c);
      const auto iso = nerve_twisted_vs_edgewise(c, tw_depth);
      const auto fib = left_fibration_check(twisted_projection(c, tw_depth), tw_depth);
      Json j{{"category", category},
             {"objects", c.objects()},
             {"morphisms", c.morphisms()},
             {"twisted", {{"objects", tw.objects()}, {"morphisms", tw.morphisms()}}},
             {"depth", tw_depth},
             {"edgewise_isomorphism", {{"ok", iso.ok}, {"witness", iso.witness}}},
             {"left_fibration",
              {{"ok", fib.ok}, {"horns_checked", fib.horns_checked}, {"witness", fib.witness}}}};
      return Report{std::move(j), category + ": isomorphism " + (iso.ok ? "holds" : "fails") +
                                      ", left fibration " + (fib.ok ? "holds" : "fails")};
    };
  });

  sub = app.add_subcommand("homology", "integral homology of a simplicial set file");
  std::string in_path;
  int h_depth = -1;
  sub->add_option("--in", in_path, "simplicial set JSON")->required();
  sub->add_option("--depth", h_depth, "top degree")->check(CLI::Range(0, 16));
  sub->callback([&] {
    command = [&] {
      const SimplicialSet x = read_sset(in_path);
      const auto h = homology(x, h_depth >= 0 ? std::optional<int>(h_depth) : std::nullopt);
      std::ostringstream s;
      s << h;
      return Report{Json{{"input", in_path}, {"homology", homology_to_json(h)}}, s.str()};
    };
  });

  sub = app.add_subcommand("pi1", "fundamental group presentation of a simplicial set file");
  std::string pi_path;
  sub->add_option("--in", pi_path, "simplicial set JSON")->required();
  sub->callback([&] {
    command = [&] {
      const SimplicialSet x = read_sset(pi_path);
      const auto p = pi1_presentation(x);
      const auto t = tietze_simplify(p);
      const auto ab = abelianize(t.presentation);
      Json j{{"input", pi_path},
             {"presentation", presentation_to_json(p)},
             {"simplified", presentation_to_json(t.presentation)},
             {"moves", t.moves},
             {"abelianization", abelian_to_json(ab)}};
      return Report{std::move(j), "pi1 = " + t.presentation.str() + ", abelianized " + ab.str()};
    };
  });

  sub = app.add_subcommand("k0", "K0 as the abelianized fundamental group of N(Q(C))");
  std::string instance;
  int k_depth = 3;
  std::size_t max_morphisms = 20000;
  sub->add_option("--instance", instance, "vect:q:d, abp:p:bound, or a JSON descriptor file")->required();
  sub->add_option("--depth", k_depth, "nerve depth")->check(CLI::Range(2, 4));
  sub->add_option("--max-morphisms", max_morphisms, "guard on |Q(C)|")->check(CLI::PositiveNumber);
  sub->callback([&] {
    command = [&] {
      auto c = instance_arg(instance, "--instance");
      const auto r = k0(q_category(c, max_morphisms), k_depth);
      return Report{k0_to_json(c->name(), k_depth, r), c->name() + ": K0 = " + r.group.str()};
    };
  });

  sub = app.add_subcommand("segal", "compare ambigressive diagrams with composable strings");
  std::string s_instance;
  int s_n = 2;
  std::size_t s_max = 20000;
  sub->add_option("--instance", s_instance, "instance descriptor")->required();
  sub->add_option("--n", s_n, "largest simplex level")->check(CLI::Range(0, 3));
  sub->add_option("--max-morphisms", s_max, "guard on |Q(C)|")->check(CLI::PositiveNumber);
  sub->callback([&] {
    command = [&] {
      auto c = instance_arg(s_instance, "--instance");
      const QCategory q = q_category(c, s_max);
      Json levels = Json::array();
      bool all = true;
      for (int n = 0; n <= s_n; ++n) {
        const auto r = segal_spine_check(q, n);
        all = all && r.bijective;
        levels.push_back({{"n", r.n},
                          {"diagrams", r.diagrams},
                          {"strings", r.strings},
                          {"bijective", r.bijective},
                          {"witness", r.witness}});
      }
      Json j{{"instance", c->name()}, {"levels", std::move(levels)}, {"bijective", all}};
      return Report{std::move(j), c->name() + ": spine map " + (all ? "bijective" : "not bijective") +
                                      " through n = " + std::to_string(s_n)};
    };
  });

  sub = app.add_subcommand("devissage", "comma-category certificates for an embedding");
  std::string source, target, probes;
  int d_depth = 2;
  sub->add_option("--source", source, "source instance")->required();
  sub->add_option("--target", target, "target instance")->required();
  sub->add_option("--probes", probes, "comma-separated target objects (default: all)");
  sub->add_option("--depth", d_depth, "certificate degree")->check(CLI::Range(1, 3));
  sub->callback([&] {
    command = [&] {
      DevissageContext ctx(embed(instance_arg(source, "--source"), instance_arg(target, "--target")));
      const auto ps = probes_arg(*ctx.embedding().target, probes);
      const auto cert = devissage_certificate(ctx, ps, d_depth);
      return Report{devissage_to_json(ctx, cert), cert.str()};
    };
  });

  sub = app.add_subcommand("gamma", "exhaustive checks of the Gamma-structure combinatorics");
  std::string check = "all";
  int arity = 4;
  sub->add_option("--check", check,
                  "all, u-functoriality, u-sizes, u-power, smash, retractions, naturality or L");
  sub->add_option("--max-arity", arity, "size bound")->check(CLI::Range(0, 5));
  sub->callback([&] {
    command = [&] {
      Json checks = Json::array();
      int passed = 0;
      const auto results = gamma_checks(check, arity);
      for (const auto& c : results) {
        passed += c.ok ? 1 : 0;
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"cases", c.cases}, {"witness", c.witness}});
      }
      Json j{{"check", check}, {"max_arity", arity}, {"checks", std::move(checks)}};
      return Report{std::move(j), std::to_string(passed) + "/" + std::to_string(results.size()) +
                                      " gamma checks pass"};
    };
  });

  sub = app.add_subcommand("check-instance", "verify the exact-category axioms of an instance");
  std::string c_instance, sequences;
  sub->add_option("--instance", c_instance, "instance descriptor");
  sub->add_option("--sequences", sequences, "exact sequence fixture file");
  sub->callback([&] {
    command = [&] {
      if (c_instance.empty() && sequences.empty())
        throw InputError("check-instance: give --instance, --sequences, or both");
      Json j = Json::object();
      std::string summary;
      bool ok = true;
      if (!c_instance.empty()) {
        auto c = instance_arg(c_instance, "--instance");
        Json names = Json::array();
        for (int x = 0; x < c->objects(); ++x) names.push_back(c->object_name(x));
        const auto t = verify_triple(*c);
        ok = t.ok;
        j["instance"] = c->name();
        j["objects"] = std::move(names);
        j["triple"] = {{"ok", t.ok}, {"cospans", t.cospans}, {"witness", t.witness}};
        summary = c->name() + ": " + std::to_string(t.cospans) + " cospans, " + (t.ok ? "ok" : "FAILS");
      }
      if (!sequences.empty()) {
        Json list = Json::array();
        int passed = 0;
        const auto seqs = read_exact_sequences(sequences);
        for (const auto& s : seqs) {
          const Square sq = s.square();
          const auto u = universal_check(*s.instance, sq);
          const bool sizes = size_identity(*s.instance, sq);
          passed += u.bicartesian() && sizes ? 1 : 0;
          list.push_back({{"name", s.name},
                          {"instance", s.instance->name()},
                          {"bicartesian", u.bicartesian()},
                          {"size_identity", sizes},
                          {"witness", u.witness}});
        }
        ok = ok && passed == static_cast<int>(seqs.size());
        j["sequences"] = std::move(list);
        summary += (summary.empty() ? "" : "; ") + std::to_string(passed) + "/" +
                   std::to_string(seqs.size()) + " sequences bicartesian";
      }
      j["ok"] = ok;
      return Report{std::move(j), summary};
    };
  });

  const int threads = threads_from_env(err);
  if (threads < 0) return 2;
  if (threads > 0) set_thread_count(threads);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "qcat 0.1.0\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qcat: " << e.what() << "\n";
    return 2;
  }

  try {
    Report r = command();
    if (out_path.empty()) {
      out << r.json.dump(2) << "\n";
    } else {
      write_json(out_path, r.json);
      out << r.summary << "\n";
    }
    return 0;
  } catch (const InputError& e) {
    err << "qcat: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    err << "qcat: guard: " << e.what() << "\n";
    return 1;
  } catch (const DisconnectedError& e) {
    err << "qcat: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qcat::cli
