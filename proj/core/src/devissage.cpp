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

#include "qcat/devissage.hpp"

#include <map>
#include <tuple>

#include "qcat/error.hpp"
#include "qcat/homology.hpp"
#include "qcat/parallel.hpp"

namespace qcat {

ExactEmbedding embed(std::shared_ptr<const ExactInstance> source,
                     std::shared_ptr<const ExactInstance> target) {
  if (source->p() != target->p())
    throw InputError("embedding " + source->name() + " -> " + target->name() + ": primes differ");
  ExactEmbedding e{source, target, {}};
  for (int o = 0; o < source->objects(); ++o) {
    auto t = target->find(source->object(o).exps());
    if (!t)
      throw GuardError("embedding: " + source->object_name(o) + " lies outside " + target->name());
    e.on_objects.push_back(*t);
  }
  return e;
}

std::optional<std::string> ExactEmbedding::check() const {
  const ExactInstance& s = *source;
  const ExactInstance& t = *target;
  if (on_objects[s.zero()] != t.zero()) return "zero is not preserved";
  for (int a = 0; a < s.objects(); ++a) {
    for (int b = 0; b < s.objects(); ++b) {
      auto sum = s.direct_sum(a, b);
      if (sum && t.direct_sum(on_objects[a], on_objects[b]) != on_objects[*sum])
        return "direct sum " + s.object_name(a) + " + " + s.object_name(b) + " is not preserved";
      for (const auto& f : s.homs(a, b)) {
        Hom g = (*this)(f);
        if (s.is_ingressive(f) && !t.is_ingressive(g)) return "an ingressive is not preserved";
        if (s.is_egressive(f) && !t.is_egressive(g)) return "an egressive is not preserved";
      }
    }
  }
  for (int y = 0; y < s.objects(); ++y)
    for (int u = 0; u < s.objects(); ++u)
      for (const auto& i : s.ingressives(u, y))
        for (int v = 0; v < s.objects(); ++v)
          for (const auto& e : s.egressives(v, y)) {
            Square sq = s.ambigressive_pullback(i, e);
            Square im{(*this)(sq.to_u), (*this)(sq.to_v), (*this)(sq.u_to_y), (*this)(sq.v_to_y)};
            if (!is_pullback(t, im))
              return "image of the pullback of " + s.object_name(u) + " >-> " + s.object_name(y) +
                     " <<- " + s.object_name(v) + " is not a pullback";
          }
  return std::nullopt;
}

AdmissibleFiltration admissible_filtration(const ExactEmbedding& psi, int x) {
  const ExactInstance& a = *psi.target;
  const PGroup& g = a.object(x);
  AdmissibleFiltration f;
  f.object = x;
  int top = 0;
  for (int e : g.exps()) top = std::max(top, e);
  std::vector<int> prev_image;  // stage element -> element of X
  for (int k = 0; k <= top; ++k) {
    std::vector<int> elements;
    for (int v = 0; v < g.order(); ++v)
      if (g.log_order(v) <= k) elements.push_back(v);
    Identified stage = a.identify_subgroup(g, elements);
    std::vector<int> inv(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t c = 0; c < stage.image.size(); ++c) inv[stage.image[c]] = static_cast<int>(c);
    f.stages.push_back(stage.object);
    if (k > 0) {
      Hom incl{f.stages[k - 1], stage.object, {}};
      for (int v : prev_image) incl.table.push_back(inv[v]);
      std::vector<int> sub(incl.table);
      std::sort(sub.begin(), sub.end());
      std::vector<int> cosets;
      const PGroup& sg = a.object(stage.object);
      Identified q = a.identify_quotient(sg, sub, cosets);
      std::vector<int> of_coset(q.image.size());
      for (std::size_t c = 0; c < q.image.size(); ++c) of_coset[q.image[c]] = static_cast<int>(c);
      const PGroup& qg = a.object(q.object);
      bool elementary = std::all_of(qg.exps().begin(), qg.exps().end(), [](int e) { return e == 1; });
      std::optional<int> u;
      if (elementary) u = psi.source->find(qg.exps());
      if (!u || psi.on_objects[*u] != q.object) {
        f.witness = "quotient X_" + std::to_string(k) + "/X_" + std::to_string(k - 1) + " = " +
                    a.object_name(q.object) + " is not the image of a source object";
        return f;
      }
      Hom quot{stage.object, q.object, {}};
      for (int v = 0; v < sg.order(); ++v) quot.table.push_back(of_coset[cosets[v]]);
      f.inclusions.push_back(std::move(incl));
      f.witnesses.push_back(*u);
      f.quotient_maps.push_back(std::move(quot));
    }
    prev_image = stage.image;
  }
  f.ok = true;
  return f;
}

DevissageContext::DevissageContext(ExactEmbedding psi)
    : psi_(std::move(psi)), qs_(q_category(psi_.source)), qt_(q_category(psi_.target)) {
  f_.source = &qs_.category;
  f_.target = &qt_.category;
  f_.on_objects = psi_.on_objects;
  for (const auto& s : qs_.spans) {
    auto m = qt_.morphism_of(Span{psi_.on_objects[s.src], psi_.on_objects[s.dst], s.elements});
    if (!m) throw Error("Q(psi): image of a span is not a span of the target");
    f_.on_morphisms.push_back(*m);
  }
}

FiniteCategory DevissageContext::comma_category(int x) const {
  return comma(f_, x, CommaSide::kSlice);
}

SimplicialSet DevissageContext::comma_over(int x, int depth) const {
  if (depth < 1 || depth > 4) throw GuardError("comma_over: depth must lie in 1..4");
  return nerve(comma_category(x), depth);
}

SimplicialSet comma_over(const ExactEmbedding& psi, int x, int depth) {
  return DevissageContext(psi).comma_over(x, depth);
}

RelativeQ relative_q_objects(const DevissageContext& ctx, std::size_t max_objects) {
  const ExactEmbedding& psi = ctx.embedding();
  const ExactInstance& b = *psi.source;
  const ExactInstance& a = *psi.target;
  const QCategory& qs = ctx.source_q();
  RelativeQ r;
  FiniteCategory::Builder builder;
  for (int u = 0; u < b.objects(); ++u) {
    for (int x = 0; x < a.objects(); ++x) {
      const auto& gs = a.homs(x, psi.on_objects[u]);
      for (std::size_t k = 0; k < gs.size(); ++k) {
        if (max_objects > 0 && r.objects.size() >= max_objects)
          throw GuardError("relative Q: more than " + std::to_string(max_objects) + " objects");
        builder.add_bare_object(b.object_name(u) + "|" + a.object_name(x) + "|" + std::to_string(k));
        r.objects.push_back({u, x, gs[k]});
      }
    }
  }
  using Key = std::tuple<int, int, int, std::vector<int>>;
  std::map<Key, int> index;
  const int n = static_cast<int>(r.objects.size());
  for (int src = 0; src < n; ++src) {
    const auto& [v, y, h] = r.objects[src];
    for (int dst = 0; dst < n; ++dst) {
      const auto& [u, x, g] = r.objects[dst];
      for (int m : qs.category.hom(u, v)) {
        const Span& s = qs.spans[m];
        std::vector<int> u_of_v(static_cast<std::size_t>(b.order(v)), -1);
        for (int w : s.elements) u_of_v[w / b.order(u)] = w % b.order(u);
        long long fiber = 0;
        std::vector<long long> over(static_cast<std::size_t>(b.order(u)), 0);
        for (int xv = 0; xv < a.order(x); ++xv) ++over[g(xv)];
        for (int w : s.elements) fiber += over[w % b.order(u)];
        if (fiber != a.order(y)) continue;
        for (const auto& yy : a.homs(y, x)) {
          bool good = true;
          std::map<std::pair<int, int>, int> seen;
          for (int t = 0; t < a.order(y) && good; ++t) {
            int uu = u_of_v[h(t)];
            good = uu >= 0 && uu == g(yy(t)) && seen.emplace(std::make_pair(yy(t), h(t)), t).second;
          }
          if (!good) continue;
          int id = static_cast<int>(r.morphisms.size());
          builder.add_morphism("r" + std::to_string(id), src, dst);
          index.emplace(Key{src, dst, m, yy.table}, id);
          r.morphisms.push_back({m, yy});
          if (src == dst && qs.category.is_identity(m) && yy == a.identity(x))
            builder.set_identity(src, id);
        }
      }
    }
  }
  std::vector<std::pair<int, int>> ends(r.morphisms.size());
  for (const auto& [key, id] : index) ends[id] = {std::get<0>(key), std::get<1>(key)};
  for (std::size_t f = 0; f < r.morphisms.size(); ++f) {
    // f : (T, k) -> (V, h); g : (V, h) -> (U, g)
    for (std::size_t g = 0; g < r.morphisms.size(); ++g) {
      if (ends[g].first != ends[f].second) continue;
      int span = qs.category.compose(r.morphisms[f].span, r.morphisms[g].span);
      Hom y = a.compose(r.morphisms[g].y, r.morphisms[f].y);
      auto it = index.find(Key{ends[f].first, ends[g].second, span, y.table});
      if (span < 0 || it == index.end())
        throw Error("relative Q: composite of r" + std::to_string(g) + " and r" +
                    std::to_string(f) + " is missing");
      builder.set_compose(static_cast<int>(g), static_cast<int>(f), it->second);
    }
  }
  r.category = std::move(builder).build();
  return r;
}

std::string DevissageCertificate::str() const {
  std::string s = std::string(verdict_name(verdict)) + "(" + std::to_string(degree) + ")" +
                  (stable ? ", stable along filtrations" : ", NOT stable along filtrations");
  for (const auto& p : probes)
    s += "\n  " + p.name + ": " + p.certificate.str() + (p.stable ? "" : " [" + p.witness + "]");
  return s;
}

DevissageCertificate devissage_certificate(const DevissageContext& ctx,
                                           const std::vector<int>& probes, int degree) {
  DevissageCertificate out;
  out.degree = degree;
  out.probes.resize(probes.size());
  const ExactInstance& a = *ctx.embedding().target;
  parallel_for(static_cast<int>(probes.size()), [&](int k) {
    ProbeCertificate& p = out.probes[k];
    p.object = probes[k];
    p.name = a.object_name(p.object);
    p.certificate = certify_contractible(ctx.comma_over(p.object, degree + 1), degree);
    p.filtration = admissible_filtration(ctx.embedding(), p.object);
    if (!p.filtration.ok) {
      p.witness = p.filtration.witness;
      return;
    }
    std::map<int, HomologyReport> cache;
    for (int stage : p.filtration.stages) {
      auto it = cache.find(stage);
      if (it == cache.end())
        it = cache.emplace(stage, homology(ctx.comma_over(stage, degree + 1), degree)).first;
      p.stage_homology.push_back(it->second);
    }
    p.stable = true;
    for (std::size_t i = 1; i < p.stage_homology.size() && p.stable; ++i) {
      if (!(p.stage_homology[i] == p.stage_homology[i - 1])) {
        p.stable = false;
        p.witness = "comma homology over " + a.object_name(p.filtration.stages[i - 1]) +
                    " and " + a.object_name(p.filtration.stages[i]) + " differ";
      }
    }
  });
  bool all = true;
  bool any_not = false;
  out.stable = true;
  for (const auto& p : out.probes) {
    all = all && p.certificate.contractible();
    any_not = any_not || p.certificate.verdict == Verdict::kNotContractible;
    out.stable = out.stable && p.stable;
  }
  out.verdict = any_not ? Verdict::kNotContractible
                        : all ? Verdict::kContractibleUpTo : Verdict::kInconclusive;
  return out;
}

Json devissage_to_json(const DevissageContext& ctx, const DevissageCertificate& c) {
  const ExactInstance& a = *ctx.embedding().target;
  const ExactInstance& b = *ctx.embedding().source;
  Json probes = Json::array();
  for (const auto& p : c.probes) {
    Json stages = Json::array();
    for (int s : p.filtration.stages) stages.push_back(a.object_name(s));
    Json quotients = Json::array();
    for (int u : p.filtration.witnesses) quotients.push_back(b.object_name(u));
    Json sh = Json::array();
    for (const auto& h : p.stage_homology) sh.push_back(homology_to_json(h));
    probes.push_back({{"object", p.name},
                      {"certificate", certificate_to_json(p.certificate)},
                      {"filtration",
                       {{"ok", p.filtration.ok},
                        {"stages", std::move(stages)},
                        {"quotients", std::move(quotients)},
                        {"witness", p.filtration.witness}}},
                      {"stage_homology", std::move(sh)},
                      {"stable", p.stable},
                      {"witness", p.witness}});
  }
  return {{"source", b.name()},   {"target", a.name()},      {"degree", c.degree},
          {"verdict", verdict_name(c.verdict)}, {"stable", c.stable}, {"probes", std::move(probes)}};
}

}  // namespace qcat
