#include "lieab/orbits.hpp"

namespace lieab {

namespace {

PropertyCheck fail(const char* prop, std::vector<RootVector> w) { return {false, prop, std::move(w)}; }

}  // namespace

PropertyCheck check_A1A2A3(const AbelianSubalgebra& a) {
  const auto& gr = *a.gr;
  for (int i : members(a.psi)) {
    int n = gr.neg1(i);
    if (n >= 0 && a.psi.test(n)) return fail("A1", {gr.phi1()[i], gr.phi1()[n]});
  }
  for (int i : members(a.psi)) {
    RootSet bad = gr.sum2(i) & a.psi;
    bad.reset(i);
    if (bad.any()) return fail("A2", {gr.phi1()[i], gr.phi1()[bad._Find_first()]});
  }
  for (int i : members(a.psi)) {
    RootSet miss = gr.up(i) & ~a.psi;
    if (miss.any()) return fail("A3", {gr.phi1()[i], gr.phi1()[miss._Find_first()]});
  }
  return {};
}

PropertyCheck check_adding_roots(const AbelianSubalgebra& a) {
  const auto& gr = *a.gr;
  auto psi = members(a.psi);
  for (const auto& g : gr.phi0()) {
    RootSet t;
    for (int i : psi) {
      int j = gr.index1(gr.phi1()[i] + g);
      if (j >= 0 && a.psi.test(j)) t.set(i);
    }
    for (int i : members(t)) {
      RootSet o = gr.orth(i) & t;
      if (o.any()) return fail("adding-roots", {gr.phi1()[i], gr.phi1()[o._Find_first()], g});
    }
  }
  return {};
}

AbelianSubalgebra make_subalgebra(std::shared_ptr<const GradedRoots> gr, const RootSet& psi) {
  AbelianSubalgebra a{std::move(gr), psi, std::nullopt};
  auto c = check_A1A2A3(a);
  if (!c) throw Error(ErrorCode::PropertiesViolated, "(" + c.property + ") fails");
  return a;
}

bool is_orthogonal_pair(const AbelianSubalgebra& a, const RootVector& alpha, const RootVector& beta) {
  const auto& gr = *a.gr;
  int i = gr.index1(alpha), j = gr.index1(beta);
  if (i < 0 || !a.psi.test(i)) throw Error(ErrorCode::NotInPsi, alpha.str(gr.nodes()));
  if (j < 0 || !a.psi.test(j)) throw Error(ErrorCode::NotInPsi, beta.str(gr.nodes()));
  if (i == j) throw Error(ErrorCode::NotDistinct, "orthogonality of a weight with itself");
  bool by_form = gr.orth(i).test(j);
  bool by_diff = !gr.diff0(i).test(j);
  if (by_form != by_diff) throw Error(ErrorCode::TheoremViolation, "orthogonality tests disagree");
  if (gr.grading().m == 2) {
    // lifts delta' + alpha live at level one; their sum has level two
    RootVector s = alpha + beta;
    bool strong = !gr.is_root(s) && !gr.is_root(alpha - beta);
    if (strong != by_form) throw Error(ErrorCode::TheoremViolation, "strong orthogonality disagrees");
  }
  return by_form;
}

bool is_orthogonal_set(const GradedRoots& gr, const RootSet& s) {
  for (int i : members(s)) {
    RootSet o = s;
    o.reset(i);
    if ((o & ~gr.orth(i)).any()) return false;
  }
  return true;
}

RootSet psi_S(const GradedRoots& gr, const RootSet& s) {
  RootSet out;
  for (int i : members(s)) out |= gr.up(i);
  return out;
}

RootSet minimal_elements(const GradedRoots& gr, const RootSet& s) {
  RootSet out;
  for (int i : members(s)) {
    bool minimal = true;
    for (int j : members(s))
      if (j != i && gr.leq(j).test(i)) {
        minimal = false;
        break;
      }
    if (minimal) out.set(i);
  }
  return out;
}

bool is_antichain(const GradedRoots& gr, const RootSet& s) {
  for (int i : members(s)) {
    RootSet above = gr.leq(i) & s;
    above.reset(i);
    if (above.any()) return false;
  }
  return true;
}

std::vector<RootSet> orthogonal_subsets(const GradedRoots& gr, const RootSet& psi) {
  std::vector<RootSet> out;
  RootSet cur;
  auto rec = [&](auto&& self, RootSet cand) -> void {
    out.push_back(cur);
    while (cand.any()) {
      int i = int(cand._Find_first());
      cand.reset(i);
      cur.set(i);
      self(self, cand & gr.orth(i));
      cur.reset(i);
    }
  };
  rec(rec, psi);
  return out;
}

RootSet open_orbit_rep(const AbelianSubalgebra& a) {
  const auto& gr = *a.gr;
  RootSet rest = a.psi, s;
  while (rest.any()) {
    RootSet mins = minimal_elements(gr, rest);
    s |= mins;
    rest &= ~(mins | psi_S(gr, mins));
  }
  if (!is_orthogonal_set(gr, s)) throw Error(ErrorCode::TheoremViolation, "open orbit representative not orthogonal");
  return s;
}

RootSet generic_normal_form(const AbelianSubalgebra& a, const RootSet& support) {
  const auto& gr = *a.gr;
  if ((support & ~a.psi).any()) throw Error(ErrorCode::NotInPsi, "support outside Psi");
  RootSet work = support, s;
  for (;;) {
    work &= ~psi_S(gr, s);
    RootSet cand = work & ~s;
    if (cand.none()) break;
    s |= minimal_elements(gr, cand);
  }
  if (!is_orthogonal_set(gr, s)) throw Error(ErrorCode::TheoremViolation, "normal form not orthogonal");
  return s;
}

std::vector<OrbitRecord> enumerate_orbits(const AbelianSubalgebra& a) {
  auto c = check_A1A2A3(a);
  if (!c) throw Error(ErrorCode::PropertiesViolated, "(" + c.property + ") fails");
  const auto& gr = *a.gr;
  RootSet open = open_orbit_rep(a);
  std::vector<OrbitRecord> out;
  for (const auto& s : orthogonal_subsets(gr, a.psi)) {
    OrbitRecord r;
    r.rep = s;
    r.psiS = psi_S(gr, s);
    r.dim = int(s.count() + r.psiS.count());
    r.open = s == open;
    out.push_back(r);
  }
  return out;
}

}  // namespace lieab
