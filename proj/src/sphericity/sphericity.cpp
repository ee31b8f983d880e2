#include "lieab/sphericity.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>

namespace lieab {

int grade(const GradedRoots& gr, const RootSet& s, const RootVector& alpha) {
  int t = 0;
  for (int g : members(s)) t += gr.pairing(alpha, gr.phi1()[g]);
  return t;
}

namespace {

constexpr int kOff = 32;

int grade1(const GradedRoots& gr, const std::vector<int>& s, int j) {
  int t = 0;
  for (int g : s) t += gr.pair11(j, g);
  return t;
}

int grade0(const GradedRoots& gr, const std::vector<int>& s, int a) {
  int t = 0;
  for (int g : s) t += gr.pair01(a, g);
  return t;
}

}  // namespace

Heights heights(const GradedRoots& gr, const RootSet& s) {
  const auto sv = members(s);
  const auto& g = gr.grading();
  std::array<std::array<int, 2 * kOff>, 2> dim{};
  Heights h;
  dim[0][kOff] = gr.zero_mult(0);
  dim[1][kOff] = gr.zero_mult(1);
  for (int a = 0; a < gr.size0(); ++a) {
    int t = grade0(gr, sv, a);
    if (std::abs(t) > kOff - 3) throw Error(ErrorCode::BoundViolation, "grade out of range");
    h.g0 = std::max(h.g0, t);
    ++dim[0][kOff + t];
  }
  for (int j = 0; j < gr.size1(); ++j) {
    int t = grade1(gr, sv, j);
    if (std::abs(t) > kOff - 3) throw Error(ErrorCode::BoundViolation, "grade out of range");
    h.g1 = std::max(h.g1, t);
    ++dim[1][kOff + t];
  }
  if (g.m != 2 && !g.flip) {
    h.h = h.h0 = h.h1 = -1;
    return h;
  }
  // lowest weight vectors of weight -d and parity p: dim g_p(-d) - dim g_{p+1}(-d-2)
  for (int d = kOff - 3; d >= 0; --d)
    for (int p = 0; p < 2; ++p) {
      int n = dim[p][kOff - d] - dim[1 - p][kOff - d - 2];
      if (n < 0) throw Error(ErrorCode::TheoremViolation, "h_S grading is not an sl2 grading");
      if (n == 0) continue;
      h.h = std::max(h.h, d);
      int& same = p == 0 ? h.h0 : h.h1;
      int& other = p == 0 ? h.h1 : h.h0;
      same = std::max(same, d);
      if (d >= 1) other = std::max(other, d - 1);
    }
  return h;
}

std::pair<int, int> grade_heights(const GradedRoots& gr, const RootSet& s) {
  auto h = heights(gr, s);
  return {h.g0, h.g1};
}

bool height4_identity(const GradedRoots& gr, const RootSet& s) {
  const auto sv = members(s);
  std::vector<RootVector> all(gr.phi0());
  all.insert(all.end(), gr.phi1().begin(), gr.phi1().end());
  for (int j = 0; j < gr.size1(); ++j) {
    if (grade1(gr, sv, j) < 4) continue;
    if (gr.complex1(j)) return false;
    const RootVector& alpha = gr.phi1()[j];
    std::vector<int> plus;
    for (int g : sv)
      if (gr.pair11(j, g) > 0) plus.push_back(g);
    for (const auto& beta : all) {
      int lhs = 0;
      for (int g : plus) lhs += gr.pairing(beta, gr.phi1()[g]);
      if (lhs != 2 * gr.pairing(beta, alpha)) return false;
    }
  }
  for (int a = 0; a < gr.size0(); ++a)
    if (grade0(gr, sv, a) >= 4) return false;
  return true;
}

SphericityVerdict is_spherical_subalgebra(const AbelianSubalgebra& a, bool all_subsets, const RootSet* abar_inv) {
  const auto& gr = *a.gr;
  SphericityVerdict v;
  v.open_rep = open_orbit_rep(a);
  v.open_heights = heights(gr, v.open_rep);
  v.max_h1 = v.open_heights.g1;
  if (all_subsets) {
    for (const auto& s : orthogonal_subsets(gr, a.psi)) v.max_h1 = std::max(v.max_h1, grade_heights(gr, s).second);
    if (v.max_h1 != v.open_heights.g1)
      throw Error(ErrorCode::TheoremViolation, "open representative does not attain the largest height");
  }
  v.spherical = v.open_heights.g1 <= 3;
  if (!v.spherical) {
    for (int j = 0; j < gr.size1() && !v.witness; ++j)
      if (grade(gr, v.open_rep, gr.phi1()[j]) >= 4) v.witness = gr.phi1()[j];
  }
  if (abar_inv)
    v.abar_contained = abar_contained(*abar_inv, a);
  else if (special_hypotheses(gr))
    v.abar_contained = mt_criterion(gr, a);
  return v;
}

PiS pi_S_matrix(const GradedRoots& gr, const std::vector<RootVector>& s, const RootVector& alpha) {
  PiS out;
  for (const auto& g : s)
    if (gr.pairing(alpha, g) > 0) out.nodes.push_back(g);
  out.nodes.push_back(-alpha);
  const int n = int(out.nodes.size());
  std::vector<std::vector<int>> a(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = gr.pairing(out.nodes[j], out.nodes[i]);
  out.matrix = CartanMatrix(a);
  out.cls = classify_gcm(out.matrix);
  return out;
}

RootSet to_psi(const GradedRoots& gr, const RootSet& s) {
  RootSet out;
  for (int i : members(s)) out.set(gr.neg1(i));
  return out;
}

namespace {

RootSet c1_minus_p(const GradedRoots& gr) {
  RootSet c = c1_sigma(gr);
  c.reset(gr.index1(RootVector::unit(special_case(gr).p)));
  return c;
}

}  // namespace

std::vector<RootSet> c1_orthogonal_subsets(const GradedRoots& gr) { return orthogonal_subsets(gr, c1_minus_p(gr)); }

std::vector<RootSet> c1_max_cardinality(const GradedRoots& gr) {
  auto all = c1_orthogonal_subsets(gr);
  size_t mx = 0;
  for (auto& s : all) mx = std::max(mx, s.count());
  std::vector<RootSet> out;
  for (auto& s : all)
    if (s.count() == mx) out.push_back(s);
  return out;
}

std::vector<RootSet> c1_maximal(const GradedRoots& gr) {
  RootSet c = c1_minus_p(gr);
  std::vector<RootSet> out;
  for (auto& s : orthogonal_subsets(gr, c)) {
    RootSet cand = c & ~s;
    for (int i : members(s)) cand &= gr.orth(i);
    if (cand.none()) out.push_back(s);
  }
  return out;
}

const std::vector<std::string>& p63_table() {
  static const std::vector<std::string> t{"D4^(1)", "B3^(1)", "D3^(2)", "G2^(1)", "A2^(2)"};
  return t;
}

P63Report p63_check(const GradedRoots& gr, const RootSet& s) {
  auto sc = special_case(gr);
  RootVector ap = RootVector::unit(sc.p);
  auto roots = gr.roots_of(s);
  P63Report r;
  r.pi = pi_S_matrix(gr, roots, ap);
  if (r.pi.nodes.size() != roots.size() + 1) throw Error(ErrorCode::TheoremViolation, "<eta, alpha_p^vee> <= 0");
  const auto& cls = r.pi.cls;
  if (cls.kind != DiagramClass::Kind::Affine && cls.kind != DiagramClass::Kind::Finite)
    throw Error(ErrorCode::NotFiniteOrAffine, "Pi_S is " + cls.kind_name());
  const auto& tab = p63_table();
  r.affine_listed = cls.kind == DiagramClass::Kind::Affine && std::find(tab.begin(), tab.end(), cls.name) != tab.end();
  if (cls.kind == DiagramClass::Kind::Affine) {
    const int c = int(r.pi.nodes.size()) - 1;
    int sum = 0;
    r.label_identity = true;
    for (int x = 0; x < c; ++x) {
      sum += cls.labels[x];
      if (cls.twist * cls.labels[x] != std::abs(r.pi.matrix(x, c))) r.label_identity = false;
    }
    r.label_identity = r.label_identity && cls.twist * sum == 4;
  }
  RootVector lhs;
  for (const auto& e : roots) lhs += gr.pairing(ap, e) * e;
  r.sum_rule = lhs == gr.sys().twist() * gr.sys().delta() + 2 * ap;
  return r;
}

std::map<int, int> weighted_dynkin(const GradedRoots& gr, const RootSet& s) {
  auto sc = special_case(gr);
  RootSet c = c1_minus_p(gr);
  if ((s & ~c).any() || !is_orthogonal_set(gr, s)) throw Error(ErrorCode::InvalidArgument, "not orthogonal in C^1");
  RootSet cand = c & ~s;
  for (int i : members(s)) cand &= gr.orth(i);
  if (cand.any()) throw Error(ErrorCode::NotMaximal, "an element of C^1 is orthogonal to S");
  RootSet psi = to_psi(gr, s);
  RootVector ap = RootVector::unit(sc.p);
  auto check = [&](const RootVector& a) {
    if (grade(gr, psi, a) != -2 * gr.pairing(a, ap))
      throw Error(ErrorCode::TheoremViolation, "grade formula fails at " + a.str(gr.nodes()));
  };
  for (auto& a : gr.phi0()) check(a);
  for (auto& a : gr.phi1()) check(a);
  std::map<int, int> out;
  for (int i : gr.grading().pi0) out[i] = grade(gr, psi, RootVector::unit(i));
  return out;
}

SpecialGradingReport special_grading_check(const GradedRoots& gr, const RootSet& s) {
  auto sc = special_case(gr);
  RootSet psi = to_psi(gr, s);
  SpecialGradingReport r;
  std::set<int> vals;
  for (auto& a : gr.phi0()) {
    int t = grade(gr, psi, a);
    vals.insert(t);
    if (t == 4) r.grade4_in_g0.push_back(a);
  }
  r.g0_values.assign(vals.begin(), vals.end());
  for (auto& a : gr.phi1()) {
    int t = grade(gr, psi, a);
    if (t == 3) r.grade3_in_g1.push_back(a);
    if (t == 4) r.grade4_in_g1.push_back(a);
  }
  RootVector ap = RootVector::unit(sc.p);
  int lowest = gr.neg1(gr.index1(ap));  // level-one lift of -alpha_p bar
  r.pi00_orthogonal = true;
  for (size_t c = 0; c < sc.sigma.size(); ++c)
    for (int node : sc.sigma[c])
      if (node != sc.alpha_sigma[c] && gr.form(gr.phi1()[lowest], RootVector::unit(node)) != 0)
        r.pi00_orthogonal = false;
  return r;
}

bool nonspherical_exists(const GradedRoots& gr) { return special_hypotheses(gr); }

bool abar_contained(const RootSet& abar_inv, const AbelianSubalgebra& a) {
  return (abar_inv & ~theta_inverse(a)).none();
}

bool mt_criterion(const GradedRoots& gr, const AbelianSubalgebra& a) { return abar_contained(abar(gr), a); }

}  // namespace lieab
