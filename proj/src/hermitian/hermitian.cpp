#include "lieab/hermitian.hpp"

#include <algorithm>

namespace lieab {

namespace {

RootSet orth_candidates(const std::vector<RootSet>& orth, const RootSet& s, int n) {
  RootSet c;
  for (int i = 0; i < n; ++i) c.set(i);
  for (int i : members(s)) c &= orth[i];
  return c;
}

}  // namespace

std::vector<int> hermitian_nodes(const CartanMatrix& finite) {
  FiniteRootSystem sys(finite);
  const auto& th = sys.highest_root();
  std::vector<int> out;
  for (int i = 0; i < finite.rank(); ++i)
    if (th.c[i] == 1) out.push_back(i);
  return out;
}

int hermitian_table_rank(const FiniteType& t, int q) {
  const int n = t.n, q1 = q + 1;
  switch (t.series) {
    case 'A': return std::min(q1, n + 1 - q1);
    case 'B':
      if (q1 == 1) return 2;
      break;
    case 'C':
      if (q1 == n) return n;
      break;
    case 'D':
      if (q1 == 1) return 2;
      if (q1 == n - 1 || q1 == n) return n / 2;
      break;
    case 'E':
      if (n == 6 && (q1 == 1 || q1 == 6)) return 2;
      if (n == 7 && q1 == 7) return 3;
      break;
  }
  throw Error(ErrorCode::NotHermitian, "(" + t.name() + ", alpha_" + std::to_string(q1) + ") is not in the table");
}

HermitianPair::HermitianPair(const CartanMatrix& finite, int q) : a_(finite), sys_(finite), q_(q) {
  if (!finite.indecomposable()) throw Error(ErrorCode::NotHermitian, "reducible diagram");
  if (q < 0 || q >= finite.rank() || sys_.highest_root().c[q] != 1)
    throw Error(ErrorCode::NotHermitian, "[theta : alpha_q] != 1");
  for (const auto& r : sys_.positive_roots())
    if (r.c[q] > 0) phi1_.push_back(r);
  const int n1 = int(phi1_.size());
  leq_.assign(n1, RootSet());
  orth_ = leq_;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) {
      if ((phi1_[j] - phi1_[i]).nonneg()) leq_[i].set(j);
      if (i != j && sys_.form(phi1_[i], phi1_[j]) == 0) orth_[i].set(j);
    }

  auto aff = std::make_shared<const AffineRootSystem>(finite);
  std::vector<int> s(finite.rank() + 1, 0);
  s[0] = 1;
  s[q + 1] = 1;
  auto gr = std::make_shared<const GradedRoots>(build_grading(aff, s));
  RootSet psi;
  for (const auto& b : phi1_) psi.set(gr->index1(to_affine(b)));
  nil_ = make_subalgebra(gr, psi);
}

int HermitianPair::index(const RootVector& b) const {
  auto it = std::lower_bound(phi1_.begin(), phi1_.end(), b, [](const RootVector& x, const RootVector& y) {
    int hx = x.height(), hy = y.height();
    return hx != hy ? hx < hy : x < y;
  });
  return it != phi1_.end() && *it == b ? int(it - phi1_.begin()) : -1;
}

bool HermitianPair::leq(const RootVector& b, const RootVector& c) const { return (c - b).nonneg(); }

RootVector HermitianPair::to_affine(const RootVector& b) const {
  RootVector v;
  for (int i = 0; i + 1 < kMaxNodes; ++i) v.c[i + 1] = b.c[i];
  return v;
}

RootVector HermitianPair::from_affine(const RootVector& v) const {
  if (v.c[0] != 0) throw Error(ErrorCode::InvalidArgument, "root involves alpha_0");
  RootVector b;
  for (int i = 0; i + 1 < kMaxNodes; ++i) b.c[i] = v.c[i + 1];
  return b;
}

RootSet HermitianPair::to_set(const OrtSubset& b) const {
  RootSet s;
  for (const auto& r : b) {
    int i = index(r);
    if (i < 0) throw Error(ErrorCode::InvalidArgument, "not in Phi_1^+: " + r.str(a_.rank()));
    s.set(i);
  }
  return s;
}

OrtSubset HermitianPair::to_roots(const RootSet& s) const {
  OrtSubset out;
  for (int i : members(s)) out.push_back(phi1_[i]);
  return out;
}

std::vector<OrtSubset> HermitianPair::ort_subsets() const {
  std::vector<OrtSubset> out;
  RootSet cur;
  auto rec = [&](auto&& self, RootSet cand) -> void {
    out.push_back(to_roots(cur));
    while (cand.any()) {
      int i = int(cand._Find_first());
      cand.reset(i);
      cur.set(i);
      self(self, cand & orth_[i]);
      cur.reset(i);
    }
  };
  RootSet all;
  for (size_t i = 0; i < phi1_.size(); ++i) all.set(i);
  rec(rec, all);
  return out;
}

std::vector<OrtSubset> HermitianPair::ort_max() const {
  std::vector<OrtSubset> out;
  for (auto& b : ort_subsets()) {
    RootSet s = to_set(b);
    if ((orth_candidates(orth_, s, int(phi1_.size())) & ~s).none()) out.push_back(b);
  }
  return out;
}

std::pair<int, int> HermitianPair::type(const OrtSubset& b) const {
  int h = 0, k = 0;
  for (auto& r : b) (is_long(r) ? k : h)++;
  return {h, k};
}

bool HermitianPair::is_orthogonal(const OrtSubset& b) const {
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j)
      if (b[i] == b[j] || !orthogonal(b[i], b[j])) return false;
  return true;
}

bool HermitianPair::is_antichain(const OrtSubset& b) const {
  for (auto& x : b)
    for (auto& y : b)
      if (x != y && leq(x, y)) return false;
  return true;
}

OrtSubset HermitianPair::up_closure(const OrtSubset& b) const {
  RootSet s;
  for (int i : members(to_set(b))) s |= leq_[i];
  return to_roots(s);
}

OrtSubset HermitianPair::down_closure(const OrtSubset& b) const {
  RootSet t = to_set(b), s;
  for (size_t i = 0; i < phi1_.size(); ++i)
    if ((leq_[i] & t).any()) s.set(i);
  return to_roots(s);
}

bool HermitianPair::vdash(const OrtSubset& a, const OrtSubset& b) const {
  RootSet up = to_set(up_closure(b));
  return (to_set(a) & ~up).none();
}

OrtSubset harish_chandra_cascade(const HermitianPair& p) {
  const auto& nil = p.nilradical();
  OrtSubset out;
  for (auto& v : nil.gr->roots_of(open_orbit_rep(nil))) out.push_back(p.from_affine(v));
  for (auto& r : out)
    if (!p.is_long(r)) throw Error(ErrorCode::TheoremViolation, "short root in the cascade");
  return out;
}

namespace {

RootVector reflect_all(const FiniteRootSystem& sys, const RootVector& g, const RootVector& x) {
  return sys.reflect(g, x);
}

// one reduction step: a set B' with B' ⊢ B and dim a_B' < dim a_B
OrtSubset reduce_once(const HermitianPair& p, const OrtSubset& cur, const RootVector& b, const RootVector& bp) {
  const auto& sys = p.roots();
  OrtSubset rest;
  for (auto& x : cur)
    if (x != b && x != bp) rest.push_back(x);

  auto reflected = [&](const RootVector& g) {
    OrtSubset out;
    for (auto& x : cur) {
      RootVector y = reflect_all(sys, g, x);
      if (x != b && x != bp && y != x) return OrtSubset{};
      out.push_back(y);
    }
    return out;
  };

  if (sys.simply_laced()) {
    auto gam = decompose_orthogonal(sys, b, bp);
    auto out = reflected(gam.front());
    if (out.empty()) throw Error(ErrorCode::TheoremViolation, "reflection moves a third root");
    return out;
  }

  int shorts = 0;
  RootVector the_short;
  for (auto& r : p.phi1plus())
    if (!p.is_long(r)) ++shorts, the_short = r;
  if (shorts == 1) {
    // (B_n, alpha_1): the only comparable orthogonal pairs are {beta_i, beta_i'}
    rest.push_back(the_short);
    return rest;
  }

  if (p.is_long(b) && p.is_long(bp)) {
    RootVector d = bp - b, half;
    for (int i = 0; i < kMaxNodes; ++i) {
      if (d.c[i] % 2) throw Error(ErrorCode::TheoremViolation, "long difference not divisible by 2");
      half.c[i] = int16_t(d.c[i] / 2);
    }
    rest.push_back(b + half);
    return rest;
  }
  // beta' - beta = gamma + gamma' with short gamma, gamma' in Phi_0^+; reflect by gamma
  for (const auto& g : sys.positive_roots()) {
    if (g.c[p.q()] != 0 || p.is_long(g)) continue;
    RootVector g2 = bp - b - g;
    if (!g2.positive() || !sys.contains(g2) || p.is_long(g2)) continue;
    auto out = reflected(g);
    if (out.empty()) continue;
    if (!p.leq(b, reflect_all(sys, g, b)) || reflect_all(sys, g, b) == b) continue;
    if (!p.leq(b, reflect_all(sys, g, bp)) || reflect_all(sys, g, bp) == b) continue;
    return out;
  }
  throw Error(ErrorCode::TheoremViolation, "no reflecting root for a comparable pair");
}

}  // namespace

OrtSubset antichain_below(const HermitianPair& p, const OrtSubset& b) {
  if (!p.is_orthogonal(b)) throw Error(ErrorCode::InvalidArgument, "not an orthogonal subset");
  for (auto& r : b)
    if (p.index(r) < 0) throw Error(ErrorCode::InvalidArgument, "not in Phi_1^+");
  auto [h, k] = p.type(b);
  OrtSubset cur = b;
  auto by_height = [](const RootVector& x, const RootVector& y) {
    int hx = x.height(), hy = y.height();
    return hx != hy ? hx < hy : x < y;
  };
  while (!p.is_antichain(cur)) {
    std::sort(cur.begin(), cur.end(), by_height);
    RootVector lo, hi;
    bool found = false;
    for (auto& x : cur) {
      bool minimal = true;
      for (auto& y : cur)
        if (y != x && p.leq(y, x)) minimal = false;
      if (!minimal) continue;
      for (auto& y : cur)
        if (y != x && p.leq(x, y)) {
          lo = x, hi = y, found = true;
          break;
        }
      if (found) break;
    }
    OrtSubset next = reduce_once(p, cur, lo, hi);
    if (!p.is_orthogonal(next) || !p.vdash(next, cur) || p.dim_generated(next) >= p.dim_generated(cur))
      throw Error(ErrorCode::TheoremViolation, "reduction step lost a property");
    cur = next;
  }
  std::sort(cur.begin(), cur.end(), by_height);
  auto [h2, k2] = p.type(cur);
  bool ok = p.simply_laced() ? cur.size() == b.size() : (h2 == h + k / 2 && k2 == k % 2);
  if (!ok) throw Error(ErrorCode::TheoremViolation, "antichain of the wrong type");
  return cur;
}

RootVector longest_element_image(const FiniteRootSystem& sys, int i) {
  const auto& a = sys.cartan();
  const int n = a.rank();
  std::vector<RootVector> col(n);
  for (int j = 0; j < n; ++j) col[j] = RootVector::unit(j);
  for (;;) {
    int pick = -1;
    for (int j = 0; j < n && pick < 0; ++j)
      if (col[j].positive()) pick = j;
    if (pick < 0) break;
    RootVector ci = col[pick];
    for (int j = 0; j < n; ++j) col[j] = col[j] - a(pick, j) * ci;
  }
  return col[i];
}

bool is_tube_type(const HermitianPair& p) {
  const auto& sys = p.roots();
  bool by_w0 = longest_element_image(sys, p.q()) == -RootVector::unit(p.q());
  // sum rule: (sum of the cascade, alpha) = i (alpha_q, alpha_q) for alpha in Phi_i^+
  RootVector sum;
  for (auto& g : harish_chandra_cascade(p)) sum += g;
  const long long qq = sys.cartan().norm(p.q());
  bool by_sum = true;
  for (auto& r : sys.positive_roots())
    if (sys.form(sum, r) != r.c[p.q()] * qq) by_sum = false;
  if (by_w0 != by_sum) throw Error(ErrorCode::TheoremViolation, "tube type tests disagree");
  return by_w0;
}

std::vector<OrtSubset> closure_antichains(const HermitianPair& p) {
  auto mx = p.ort_max();
  std::vector<OrtSubset> out;
  for (auto& a : mx) {
    if (!p.is_antichain(a)) continue;
    bool ok = true;
    for (auto& b : mx) {
      auto up = p.up_closure(b), down = p.down_closure(b);
      for (auto& r : a)
        if (std::find(up.begin(), up.end(), r) == up.end() || std::find(down.begin(), down.end(), r) == down.end())
          ok = false;
      if (!ok) break;
    }
    if (ok) out.push_back(a);
  }
  return out;
}

OrtSubset unique_max_antichain(const HermitianPair& p) {
  if (!is_tube_type(p)) throw Error(ErrorCode::NotTubeType, "pair is not of tube type");
  int antichains = 0;
  for (auto& b : p.ort_max()) antichains += p.is_antichain(b);
  auto c = closure_antichains(p);
  if (antichains != 1 || c.size() != 1) throw Error(ErrorCode::TheoremViolation, "maximal antichain not unique");
  return c.front();
}

std::pair<RootVector, RootVector> short_root_decomposition(const HermitianPair& p, const RootVector& beta,
                                                           const OrtSubset& s) {
  if (p.simply_laced()) throw Error(ErrorCode::NoShortRoots, "simply laced pair");
  if (p.index(beta) < 0 || p.is_long(beta)) throw Error(ErrorCode::InvalidArgument, "expected a short root of Phi_1^+");
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (s[i] + s[j] == 2 * beta) return {s[i], s[j]};
  throw Error(ErrorCode::NoDecomposition, "no pair of S averages to " + beta.str(p.roots().rank()));
}

}  // namespace lieab
