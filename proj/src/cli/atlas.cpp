#include "lieab/suites.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lieab {

using nlohmann::json;

namespace {

json roots_json(const std::vector<RootVector>& v, int n) {
  json out = json::array();
  for (auto& r : v) out.push_back(r.to_vector(n));
  return out;
}

json set_json(const GradedRoots& gr, const RootSet& s) { return roots_json(gr.roots_of(s), gr.nodes()); }

json heights_json(const Heights& h) {
  json out{{"g0", h.g0}, {"g1", h.g1}};
  if (h.h >= 0) {
    out["h"] = h.h;
    out["h0"] = h.h0;
    out["h1"] = h.h1;
  }
  return out;
}

struct GradingRecord {
  json atlas, classify;
};

GradingRecord grading_record(const GradingDatum& g, int level_bound) {
  auto gr = std::make_shared<const GradedRoots>(g, level_bound);
  auto P = enumerate_iab(gr, false);
  bool special = special_hypotheses(*gr);
  RootSet ab;
  if (special) ab = abar(*gr);

  GradingRecord r;
  json& a = r.atlas;
  a["grading"] = g.spec();
  a["label"] = g.label();
  a["affine"] = g.sys->name();
  a["s"] = g.s;
  a["flip"] = g.flip;
  a["count"] = P.size();
  a["special"] = special;
  a["abar"] = nullptr;
  if (special) {
    a["abar"] = P.find(ab);
    a["abar_is_special"] = ab == special_wp(*gr);
  }
  r.classify = json::array();
  json subs = json::array();
  for (int i = 0; i < P.size(); ++i) {
    auto sub = theta(gr, P[i]);
    auto v = is_spherical_subalgebra(sub, true, special ? &ab : nullptr);
    auto orbits = orthogonal_subsets(*gr, sub.psi);
    json e{{"index", i},
           {"dim", sub.dim()},
           {"maximal", P.maximal(i)},
           {"inversions", set_json(*gr, P[i])},
           {"psi", set_json(*gr, sub.psi)},
           {"orbits", orbits.size()},
           {"open_rep", set_json(*gr, v.open_rep)},
           {"heights", heights_json(v.open_heights)},
           {"spherical", v.spherical},
           {"abar_contained", v.abar_contained ? json(*v.abar_contained) : json(nullptr)},
           {"witness", v.witness ? json(v.witness->to_vector(gr->nodes())) : json(nullptr)}};
    subs.push_back(e);
    r.classify.push_back(json{{"grading", g.spec()},
                              {"index", i},
                              {"dim", e["dim"]},
                              {"heights", e["heights"]},
                              {"spherical", e["spherical"]},
                              {"abar_contained", e["abar_contained"]},
                              {"witness", e["witness"]}});
  }
  a["subalgebras"] = std::move(subs);
  return r;
}

std::vector<GradingRecord> records(const SweepConfig& cfg) {
  auto gs = sweep_gradings(cfg);
  std::vector<GradingRecord> out(gs.size());
  std::vector<std::string> err(gs.size());
#ifdef _OPENMP
  int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long long i = 0; i < (long long)gs.size(); ++i) {
    try {
      out[i] = grading_record(gs[i], cfg.level_bound);
    } catch (const std::exception& e) {
      err[i] = gs[i].label() + ": " + e.what();
    }
  }
  for (auto& e : err)
    if (!e.empty()) throw Error(ErrorCode::TheoremViolation, e);
  return out;
}

}  // namespace

json atlas_json(const SweepConfig& cfg) {
  json out{{"max_rank", cfg.max_rank}, {"level_bound", cfg.level_bound}, {"types", cfg.types}};
  json gs = json::array();
  for (auto& r : records(cfg)) gs.push_back(std::move(r.atlas));
  out["gradings"] = std::move(gs);
  return out;
}

json classify_json(const SweepConfig& cfg) {
  json out = json::array();
  for (auto& r : records(cfg))
    for (auto& e : r.classify) out.push_back(std::move(e));
  return out;
}

json orbits_json(const GradingDatum& g, int subalgebra, int level_bound) {
  auto gr = std::make_shared<const GradedRoots>(g, level_bound);
  auto P = enumerate_iab(gr, false);
  if (subalgebra < 0 || subalgebra >= P.size())
    throw Error(ErrorCode::InvalidArgument, "subalgebra index out of range 0.." + std::to_string(P.size() - 1));
  auto a = theta(gr, P[subalgebra]);
  json orbits = json::array();
  for (auto& o : enumerate_orbits(a))
    orbits.push_back(json{{"rep", set_json(*gr, o.rep)}, {"psi_S", set_json(*gr, o.psiS)}, {"dim", o.dim}, {"open", o.open}});
  return json{{"grading", g.spec()},
              {"subalgebra", subalgebra},
              {"psi", set_json(*gr, a.psi)},
              {"dim", a.dim()},
              {"orbits", std::move(orbits)}};
}

json hermitian_json(const FiniteType& t, int q, bool all_ort, bool antichains) {
  HermitianPair p(t, q);
  const int n = t.n;
  bool tube = is_tube_type(p);
  auto cascade = harish_chandra_cascade(p);
  json out{{"type", t.name()},
           {"node", q + 1},
           {"rank", cascade.size()},
           {"table_rank", hermitian_table_rank(t, q)},
           {"tube", tube},
           {"phi1plus", roots_json(p.phi1plus(), n)},
           {"cascade", roots_json(cascade, n)}};
  if (tube) out["max_antichain"] = roots_json(unique_max_antichain(p), n);
  if (all_ort) {
    json v = json::array();
    for (auto& b : p.ort_subsets()) {
      auto [h, k] = p.type(b);
      json e{{"roots", roots_json(b, n)}, {"type", {h, k}}};
      if (antichains) e["antichain_below"] = roots_json(antichain_below(p, b), n);
      v.push_back(std::move(e));
    }
    out["ort"] = std::move(v);
  }
  if (antichains) {
    json v = json::array();
    for (auto& a : closure_antichains(p)) v.push_back(roots_json(a, n));
    out["closure_antichains"] = std::move(v);
  }
  return out;
}

}  // namespace lieab
