#include "lieab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lieab/oracle.hpp"

namespace lieab {

namespace {

bool filter_ok(const std::string& f) {
  if (f.size() == 1) return std::string("ABCDEFG").find(f[0]) != std::string::npos;
  try {
    parse_finite_type(f);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool wanted(const SweepConfig& cfg, const FiniteType& t) {
  if (cfg.types.empty()) return true;
  for (const auto& f : cfg.types)
    if (f.size() == 1 ? f[0] == t.series : f == t.name()) return true;
  return false;
}

struct Item {
  long checked = 0;
  std::vector<std::string> fail, notes;
};

// runs f over xs, catching library errors per item; reports merge in input order
template <class T>
SuiteReport sweep(const std::string& id, const std::vector<T>& xs, int jobs, const std::function<std::string(const T&)>& name,
                  const std::function<void(const T&, Item&)>& f) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Item> items(xs.size());
#ifdef _OPENMP
  int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long long i = 0; i < (long long)xs.size(); ++i) {
    try {
      f(xs[i], items[i]);
    } catch (const Error& e) {
      items[i].fail.push_back(std::string(error_name(e.code())) + ": " + e.what());
    } catch (const std::exception& e) {
      items[i].fail.push_back(std::string("exception: ") + e.what());
    }
  }
  (void)jobs;
  SuiteReport r;
  r.id = id;
  for (size_t i = 0; i < xs.size(); ++i) {
    r.checked += items[i].checked;
    for (auto& m : items[i].fail) r.failures.push_back(name(xs[i]) + ": " + m);
    for (auto& m : items[i].notes) r.notes.push_back(name(xs[i]) + ": " + m);
  }
  r.ok = r.failures.empty();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SuiteReport grading_sweep(const std::string& id, const SweepConfig& cfg, std::vector<GradingDatum> gs,
                          const std::function<void(const GradingDatum&, Item&)>& f) {
  return sweep<GradingDatum>(id, gs, cfg.jobs, [](const GradingDatum& g) { return g.label(); }, f);
}

SuiteReport pair_sweep(const std::string& id, const SweepConfig& cfg,
                       const std::function<void(const HermitianPair&, Item&)>& f) {
  using P = std::pair<FiniteType, int>;
  return sweep<P>(
      id, hermitian_pairs(cfg), cfg.jobs,
      [](const P& p) { return "(" + p.first.name() + ", alpha_" + std::to_string(p.second + 1) + ")"; },
      [&](const P& p, Item& it) { f(HermitianPair(p.first, p.second), it); });
}

std::shared_ptr<const GradedRoots> graded(const GradingDatum& g, const SweepConfig& cfg) {
  return std::make_shared<const GradedRoots>(g, cfg.level_bound);
}

// orthogonal subsets of every element, deduplicated; subsets of Psi(a) for
// non-maximal a already occur below some maximal element
std::vector<RootSet> all_orthogonal(const IabPoset& p) {
  const auto& gr = *p.graded();
  std::unordered_set<RootSet, RootSetHash> seen;
  std::vector<RootSet> out;
  for (int i : p.maximal_elements())
    for (auto& s : orthogonal_subsets(gr, theta(p.graded(), p[i]).psi))
      if (seen.insert(s).second) out.push_back(s);
  std::sort(out.begin(), out.end(), set_less);
  return out;
}

std::string heights_str(const Heights& h) {
  return "g0=" + std::to_string(h.g0) + " g1=" + std::to_string(h.g1) + " h=" + std::to_string(h.h) +
         " h0=" + std::to_string(h.h0) + " h1=" + std::to_string(h.h1);
}

// ---------------------------------------------------------------------------

void cor73(const GradingDatum& g, const SweepConfig& cfg, Item& it) {
  auto gr = graded(g, cfg);
  auto P = enumerate_iab(gr, false);
  for (auto& s : all_orthogonal(P)) {
    ++it.checked;
    auto h = heights(*gr, s);
    bool ok = h.h <= 4 && h.h0 <= 3 && h.g0 <= 3 && h.g1 <= 4 && h.g1 == h.h1;
    if (!ok) it.fail.push_back("S = " + roots_str(*gr, s) + " has " + heights_str(h));
    if (!height4_identity(*gr, s)) it.fail.push_back("grade-4 identity fails at S = " + roots_str(*gr, s));
  }
}

void mt(const GradingDatum& g, const SweepConfig& cfg, Item& it, bool panyushev_only) {
  auto gr = graded(g, cfg);
  auto P = enumerate_iab(gr, false);
  bool special = special_hypotheses(*gr);
  RootSet ab;
  if (special) {
    ab = abar(*gr);
    if (P.find(ab) < 0) it.fail.push_back("abar is not sigma-minuscule");
  }
  bool any_ns = false;
  for (int i = 0; i < P.size(); ++i) {
    auto a = theta(gr, P[i]);
    auto v = is_spherical_subalgebra(a, !panyushev_only, special ? &ab : nullptr);
    ++it.checked;
    any_ns |= !v.spherical;
    if (panyushev_only) continue;
    if (special ? *v.abar_contained == v.spherical : !v.spherical)
      it.fail.push_back("a #" + std::to_string(i) + " Psi = " + roots_str(*gr, a.psi) +
                        (v.spherical ? " spherical" : " not spherical") + " against the abar test");
  }
  if (any_ns != nonspherical_exists(*gr))
    it.fail.push_back(std::string("existence predicate says ") + (any_ns ? "none" : "some") + ", sweep disagrees");
}

void p63(const GradingDatum& g, const SweepConfig& cfg, Item& it) {
  auto gr = graded(g, cfg);
  if (!special_hypotheses(*gr)) return;
  special_wp(*gr);
  for (auto& s : c1_max_cardinality(*gr)) {
    ++it.checked;
    auto r = p63_check(*gr, s);
    if (!r.affine_listed || !r.label_identity || !r.sum_rule)
      it.fail.push_back("S = " + roots_str(*gr, s) + " gives " + r.pi.cls.name + (r.label_identity ? "" : ", labels") +
                        (r.sum_rule ? "" : ", sum rule"));
  }
}

void dynkin(const GradingDatum& g, const SweepConfig& cfg, Item& it) {
  auto gr = graded(g, cfg);
  if (!special_hypotheses(*gr)) return;
  for (auto& s : c1_maximal(*gr)) {
    ++it.checked;
    weighted_dynkin(*gr, s);
    auto r = special_grading_check(*gr, s);
    if (!r.grade3_in_g1.empty() || !r.grade4_in_g0.empty() || r.grade4_in_g1.size() != 1 || !r.pi00_orthogonal)
      it.fail.push_back("grade pattern wrong at S = " + roots_str(*gr, s));
  }
}

void orbit_dim(const GradingDatum& g, const SweepConfig& cfg, Item& it) {
  auto gr = graded(g, cfg);
  auto P = enumerate_iab(gr, false);
  for (int i = 0; i < P.size(); ++i) {
    auto a = theta(gr, P[i]);
    ++it.checked;
    std::string tag = "a #" + std::to_string(i) + ": ";
    auto c = check_A1A2A3(a);
    if (!c) it.fail.push_back(tag + "(" + c.property + ") fails");
    auto d = check_adding_roots(a);
    if (!d) it.fail.push_back(tag + "adding-roots lemma fails");
    RootSet open = open_orbit_rep(a);
    int opens = 0;
    for (auto& o : enumerate_orbits(a)) {
      if ((o.psiS & ~a.psi).any() || (o.psiS & o.rep).any()) it.fail.push_back(tag + "Psi_S misplaced");
      if (o.dim == a.dim()) {
        ++opens;
        if (o.rep != open) it.fail.push_back(tag + "full-dimensional orbit other than the open representative");
      }
    }
    if (opens != 1) it.fail.push_back(tag + std::to_string(opens) + " full-dimensional orbits");
  }
  if (!MatrixPair::supported(g)) return;
  MatrixPair mp(gr);
  for (auto& s : all_orthogonal(P)) {
    ++it.checked;
    int want = int(s.count() + psi_S(*gr, s).count());
    int got = bracket_dim(mp, s);
    if (got != want)
      it.fail.push_back("S = " + roots_str(*gr, s) + ": bracket rank " + std::to_string(got) + " vs " +
                        std::to_string(want));
  }
}

void oracle(const GradingDatum& g, const SweepConfig& cfg, Item& it) {
  if (!MatrixPair::supported(g)) return;
  auto gr = graded(g, cfg);
  MatrixPair mp(gr);
  if (!mp.closure_check()) it.fail.push_back("matrix model not closed under brackets");
  auto P = enumerate_iab(gr, false);
  int g0_above = 0;
  for (auto& s : all_orthogonal(P)) {
    ++it.checked;
    auto h = heights(*gr, s);
    auto ad = ad_power_height(mp, s);
    if (ad.h != h.h || ad.h0 != h.h0 || ad.h1 != h.h1 || h.g1 != ad.h1)
      it.fail.push_back("S = " + roots_str(*gr, s) + ": ad " + std::to_string(ad.h) + "," + std::to_string(ad.h0) +
                        "," + std::to_string(ad.h1) + " vs " + heights_str(h));
    int want = int(s.count() + psi_S(*gr, s).count());
    if (bracket_dim(mp, s) != want) it.fail.push_back("S = " + roots_str(*gr, s) + ": bracket rank differs");
    if (ad.h0 > h.g0) ++g0_above;
  }
  if (g0_above)
    it.notes.push_back(std::to_string(g0_above) + " subsets with ad height on g_0 above the top Phi_0 grade");
}

void flip(const FiniteType& t, const SweepConfig& cfg, Item& it) {
  auto gr = graded(flip_grading(t), cfg);
  auto ser = enumerate_minuscule_serial(*gr);
  auto par = enumerate_minuscule_parallel(*gr);
  auto bic = enumerate_biconvex(*gr);
  ++it.checked;
  if (ser != par) it.fail.push_back("serial and parallel enumerations differ");
  if (ser != bic)
    it.fail.push_back("search finds " + std::to_string(ser.size()) + ", biconvex scan " + std::to_string(bic.size()));
  if (ser.size() != (size_t(1) << t.n))
    it.fail.push_back(std::to_string(ser.size()) + " elements, expected " + std::to_string(1 << t.n));
}

void hermitian_ranks(const HermitianPair& p, Item& it) {
  ++it.checked;
  auto t = *p.roots().type();
  auto c = harish_chandra_cascade(p);
  int want = hermitian_table_rank(t, p.q());
  if (int(c.size()) != want)
    it.fail.push_back("cascade has " + std::to_string(c.size()) + " roots, table says " + std::to_string(want));
  if (!p.is_orthogonal(c)) it.fail.push_back("cascade not orthogonal");
  for (auto& b : c)
    if (p.index(b) < 0 || !p.is_long(b)) it.fail.push_back("cascade root outside the long roots of Phi_1^+");
}

void antichain(const HermitianPair& p, Item& it) {
  for (auto& b : p.ort_subsets()) {
    ++it.checked;
    auto a = antichain_below(p, b);
    auto [h, k] = p.type(b);
    std::pair<int, int> want = p.simply_laced() ? std::pair<int, int>{0, int(b.size())}
                                                : std::pair<int, int>{h + k / 2, k - 2 * (k / 2)};
    bool ok = p.is_antichain(a) && p.is_orthogonal(a) && p.vdash(a, b);
    ok = ok && (p.simply_laced() ? a.size() == b.size() : p.type(a) == want);
    if (!ok) it.fail.push_back("B of size " + std::to_string(b.size()) + " type (" + std::to_string(h) + "," +
                               std::to_string(k) + ") gives a bad antichain");
  }
}

void unique_antichain(const HermitianPair& p, Item& it) {
  ++it.checked;
  bool tube = is_tube_type(p);
  auto ca = closure_antichains(p);
  if (!tube) {
    if (ca.size() == 1) it.fail.push_back("non-tube pair with a unique closure antichain");
    return;
  }
  if (ca.size() != 1) {
    it.fail.push_back(std::to_string(ca.size()) + " closure antichains");
    return;
  }
  auto a = unique_max_antichain(p);
  if (a != ca[0]) it.fail.push_back("unique_max_antichain disagrees with the scan");
  auto mx = p.ort_max();
  if (std::find(mx.begin(), mx.end(), a) == mx.end()) it.fail.push_back("A* not in Ort_max");
  int antichains = 0;
  for (auto& b : mx) {
    if (p.is_antichain(b)) ++antichains;
    auto up = p.up_closure(b), down = p.down_closure(b);
    for (auto& x : a)
      if (std::find(up.begin(), up.end(), x) == up.end() || std::find(down.begin(), down.end(), x) == down.end())
        it.fail.push_back("A* leaves a closure of some B in Ort_max");
  }
  if (antichains != 1) it.fail.push_back(std::to_string(antichains) + " antichains in Ort_max");
}

}  // namespace

void validate(const SweepConfig& cfg) {
  if (cfg.max_rank < 1) throw Error(ErrorCode::InvalidArgument, "max rank must be at least 1");
  if (cfg.level_bound < 2) throw Error(ErrorCode::LevelBoundTooSmall, "level bound must be at least 2");
  for (auto& f : cfg.types)
    if (!filter_ok(f)) throw Error(ErrorCode::InvalidArgument, "bad type filter '" + f + "'");
}

std::vector<FiniteType> sweep_types(const SweepConfig& cfg) {
  validate(cfg);
  std::vector<FiniteType> out;
  for (auto& [t, k] : twisted_pairs(cfg.max_rank))
    if (k == 1 && wanted(cfg, t)) out.push_back(t);
  return out;
}

std::vector<GradingDatum> sweep_gradings(const SweepConfig& cfg) {
  validate(cfg);
  std::vector<GradingDatum> out;
  for (auto& [t, k] : twisted_pairs(cfg.max_rank)) {
    if (k > 2 || !wanted(cfg, t)) continue;
    auto v = involutions(t, k);
    out.insert(out.end(), v.begin(), v.end());
  }
  SweepConfig half = cfg;
  half.max_rank = cfg.max_rank / 2;
  if (half.max_rank >= 1)
    for (auto& t : sweep_types(half)) out.push_back(flip_grading(t));
  return out;
}

std::vector<std::pair<FiniteType, int>> hermitian_pairs(const SweepConfig& cfg) {
  std::vector<std::pair<FiniteType, int>> out;
  for (auto& t : sweep_types(cfg))
    for (int q : hermitian_nodes(cartan_matrix(t))) out.push_back({t, q});
  return out;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"hermitian-ranks", "antichain", "unique-antichain", "orbit-dim", "cor73",
                                            "weighted-dynkin", "p63",       "mt",               "panyushev", "oracle",
                                            "flip"};
  return ids;
}

std::optional<std::string> canonical_suite(const std::string& id) {
  static const std::map<std::string, std::string> alias{{"73", "cor73"}, {"MT", "mt"}, {"P63", "p63"}};
  if (auto it = alias.find(id); it != alias.end()) return it->second;
  for (auto& s : suite_ids())
    if (s == id) return s;
  return std::nullopt;
}

SuiteReport run_suite(const std::string& raw, const SweepConfig& cfg) {
  auto id = canonical_suite(raw);
  if (!id) throw Error(ErrorCode::InvalidArgument, "unknown theorem id '" + raw + "'");
  validate(cfg);
  const std::string& s = *id;
  if (s == "hermitian-ranks") return pair_sweep(s, cfg, hermitian_ranks);
  if (s == "antichain") return pair_sweep(s, cfg, antichain);
  if (s == "unique-antichain") return pair_sweep(s, cfg, unique_antichain);
  if (s == "flip") {
    std::vector<FiniteType> ts;
    for (auto& t : sweep_types(cfg))
      if (t.series == 'A' || t.series == 'B' || t.series == 'G') ts.push_back(t);
    return sweep<FiniteType>(s, ts, cfg.jobs, [](const FiniteType& t) { return "flip " + t.name(); },
                             [&](const FiniteType& t, Item& it) { flip(t, cfg, it); });
  }
  auto gs = sweep_gradings(cfg);
  using F = std::function<void(const GradingDatum&, Item&)>;
  F f;
  if (s == "cor73") f = [&](const GradingDatum& g, Item& it) { cor73(g, cfg, it); };
  if (s == "mt") f = [&](const GradingDatum& g, Item& it) { mt(g, cfg, it, false); };
  if (s == "panyushev") f = [&](const GradingDatum& g, Item& it) { mt(g, cfg, it, true); };
  if (s == "p63") f = [&](const GradingDatum& g, Item& it) { p63(g, cfg, it); };
  if (s == "weighted-dynkin") f = [&](const GradingDatum& g, Item& it) { dynkin(g, cfg, it); };
  if (s == "orbit-dim") f = [&](const GradingDatum& g, Item& it) { orbit_dim(g, cfg, it); };
  if (s == "oracle") f = [&](const GradingDatum& g, Item& it) { oracle(g, cfg, it); };
  return grading_sweep(s, cfg, std::move(gs), f);
}

std::string roots_str(const GradedRoots& gr, const RootSet& s) {
  std::string out = "{";
  for (int i : members(s)) {
    if (out.size() > 1) out += ", ";
    out += gr.phi1()[i].str(gr.nodes());
  }
  return out + "}";
}

}  // namespace lieab
