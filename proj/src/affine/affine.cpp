#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "lieab/affine.hpp"

namespace lieab {

namespace {

std::string kac_twisted_name(const FiniteType& g, int k) {
  auto bad = [&] { return Error(ErrorCode::IllegalTwist, "no twist of order " + std::to_string(k) + " for " + g.name()); };
  if (k == 3) {
    if (g.series == 'D' && g.n == 4) return "D4^(3)";
    throw bad();
  }
  if (k != 2) throw bad();
  switch (g.series) {
    case 'A':
      if (g.n < 2) throw bad();
      if (g.n == 3) return "D3^(2)";
      return "A" + std::to_string(g.n) + "^(2)";
    case 'D': return "D" + std::to_string(g.n) + "^(2)";
    case 'E':
      if (g.n == 6) return "E6^(2)";
      throw bad();
  }
  throw bad();
}

bool multiple_of_delta(const RootVector& v, const RootVector& d) {
  if (v.is_zero()) return false;
  int i0 = 0;
  while (d.c[i0] == 0) ++i0;
  if (v.c[i0] % d.c[i0]) return false;
  return v == (v.c[i0] / d.c[i0]) * d;
}

}  // namespace

AffineRootSystem::AffineRootSystem(const FiniteType& g, int k) : g_(g), k_(k) {
  if (!is_valid_finite_type(g)) throw Error(ErrorCode::InvalidArgument, "bad type " + g.name());
  if (k == 1)
    a_ = untwisted_affine_cartan(cartan_matrix(g));
  else
    a_ = twisted_affine_cartan(kac_twisted_name(g, k));
  if (a_.rank() > 13) throw Error(ErrorCode::InvalidArgument, "rank above the table cap");
  auto dc = classify_gcm(a_);
  if (dc.kind != DiagramClass::Kind::Affine || dc.twist != k)
    throw Error(ErrorCode::TheoremViolation, "built diagram does not classify as expected");
  name_ = dc.name;
  labels_ = dc.labels;
  delta_ = RootVector(labels_);
}

AffineRootSystem::AffineRootSystem(const CartanMatrix& finite) : k_(1) {
  auto fc = classify_gcm(finite);
  if (fc.kind != DiagramClass::Kind::Finite || !finite.indecomposable())
    throw Error(ErrorCode::NotFiniteType, "expected an irreducible finite diagram");
  g_ = parse_finite_type(fc.name);
  a_ = untwisted_affine_cartan(finite);
  auto dc = classify_gcm(a_);
  if (dc.kind != DiagramClass::Kind::Affine || dc.twist != 1)
    throw Error(ErrorCode::TheoremViolation, "built diagram does not classify as expected");
  name_ = dc.name;
  labels_ = dc.labels;
  delta_ = RootVector(labels_);
}

bool AffineRootSystem::is_long_simple(int i) const {
  long long mx = 0;
  for (int j = 0; j < nodes(); ++j) mx = std::max(mx, a_.norm(j));
  return a_.norm(i) == mx;
}

std::shared_ptr<const AffineRootSystem> build_affine(const FiniteType& g, int k) {
  return std::make_shared<const AffineRootSystem>(g, k);
}

std::vector<RootVector> real_roots_up_to_level(const AffineRootSystem& sys, int L) {
  std::vector<int> w(sys.nodes(), 0);
  w[0] = 1;
  auto pos = positive_real_roots(sys.cartan(), w, (long long)L * sys.labels()[0], &sys.delta());
  std::vector<RootVector> out;
  for (auto& r : pos) {
    out.push_back(r);
    out.push_back(-r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int GradingDatum::level(const RootVector& v) const {
  int t = 0;
  for (size_t i = 0; i < s.size(); ++i) t += s[i] * v.c[i];
  return t;
}

std::string GradingDatum::spec() const {
  std::ostringstream os;
  if (flip) return "flip:" + sys->g_type().name();
  os << sys->g_type().name();
  if (sys->twist() != 1) os << "^" << sys->twist();
  os << ":";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os.str();
}

std::string GradingDatum::label() const {
  std::ostringstream os;
  if (flip) os << "flip " << sys->g_type().name() << " ";
  os << sys->name() << " s=(";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ")";
  return os.str();
}

GradingDatum build_grading(std::shared_ptr<const AffineRootSystem> sys, const std::vector<int>& s) {
  if (int(s.size()) != sys->nodes())
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(sys->nodes()) + " Kac coordinates");
  int g = 0;
  for (int x : s) {
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "negative Kac coordinate");
    g = std::gcd(g, x);
  }
  if (g != 1) throw Error(ErrorCode::NotCoprime, "gcd of Kac coordinates is not 1");
  GradingDatum d;
  d.sys = std::move(sys);
  d.s = s;
  int tot = 0;
  for (int i = 0; i < d.sys->nodes(); ++i) {
    tot += s[i] * d.sys->labels()[i];
    if (s[i] == 0) d.pi0.push_back(i);
    if (s[i] == 1) d.pi1.push_back(i);
  }
  d.m = d.sys->twist() * tot;
  return d;
}

GradingDatum flip_grading(const FiniteType& k) {
  auto sys = build_affine(k, 1);
  std::vector<int> s(sys->nodes(), 0);
  s[0] = 1;
  GradingDatum d = build_grading(sys, s);
  d.flip = true;
  return d;
}

GradingDatum parse_grading(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, "grading '" + spec + "' lacks ':'");
  std::string head = spec.substr(0, colon), tail = spec.substr(colon + 1);
  if (head == "flip") return flip_grading(parse_finite_type(tail));
  int k = 1;
  auto caret = head.find('^');
  if (caret != std::string::npos) {
    std::string t = head.substr(caret + 1);
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == '(' || c == ')'; }), t.end());
    try {
      k = std::stoi(t);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad twist in '" + spec + "'");
    }
    head = head.substr(0, caret);
  }
  auto sys = build_affine(parse_finite_type(head), k);
  std::vector<int> s;
  std::stringstream ss(tail);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      s.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad Kac coordinate '" + tok + "'");
    }
  }
  return build_grading(sys, s);
}

std::vector<std::vector<int>> diagram_automorphisms(const CartanMatrix& a) {
  int n = a.rank();
  std::vector<std::vector<int>> out;
  std::vector<int> p(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(p);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || a.norm(c) != a.norm(i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = a(c, p[j]) == a(i, j) && a(p[j], c) == a(j, i);
      if (!ok) continue;
      p[i] = c, used[c] = true;
      self(self, i + 1);
      used[c] = false;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<GradingDatum> involutions(const FiniteType& g, int k) {
  auto sys = build_affine(g, k);
  int n = sys->nodes();
  auto autos = diagram_automorphisms(sys->cartan());
  std::set<std::vector<int>> seen;
  std::vector<GradingDatum> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s(n);
    int tot = 0;
    for (int i = 0; i < n; ++i) {
      s[i] = (mask >> i) & 1;
      tot += s[i] * sys->labels()[i];
    }
    if (k * tot != 2) continue;
    std::vector<int> best;
    for (auto& p : autos) {
      std::vector<int> t(n);
      for (int i = 0; i < n; ++i) t[p[i]] = s[i];
      if (best.empty() || t < best) best = t;
    }
    if (seen.insert(best).second) out.push_back(build_grading(sys, best));
  }
  std::sort(out.begin(), out.end(), [](const GradingDatum& x, const GradingDatum& y) { return x.s < y.s; });
  return out;
}

std::vector<std::pair<FiniteType, int>> twisted_pairs(int max_rank, const std::string& series) {
  std::vector<std::pair<FiniteType, int>> out;
  auto want = [&](char c) { return series.empty() || series.find(c) != std::string::npos; };
  for (int n = 1; n <= max_rank; ++n) {
    if (want('A')) {
      out.push_back({{'A', n}, 1});
      if (n >= 2) out.push_back({{'A', n}, 2});
    }
    if (want('B') && n >= 2) out.push_back({{'B', n}, 1});
    if (want('C') && n >= 3) out.push_back({{'C', n}, 1});
    if (want('D') && n >= 4) {
      out.push_back({{'D', n}, 1});
      out.push_back({{'D', n}, 2});
      if (n == 4) out.push_back({{'D', 4}, 3});
    }
    if (want('E') && n >= 6 && n <= 8) {
      out.push_back({{'E', n}, 1});
      if (n == 6) out.push_back({{'E', 6}, 2});
    }
    if (want('F') && n == 4) out.push_back({{'F', 4}, 1});
    if (want('G') && n == 2) out.push_back({{'G', 2}, 1});
  }
  return out;
}

std::vector<GradingDatum> all_involutions(int max_rank, const std::string& series) {
  std::vector<GradingDatum> out;
  for (auto& [g, k] : twisted_pairs(max_rank, series)) {
    if (k > 2) continue;
    auto v = involutions(g, k);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

GradedRoots::GradedRoots(GradingDatum g, int level_bound) : g_(std::move(g)), L_(level_bound) {
  if (L_ < 2) throw Error(ErrorCode::LevelBoundTooSmall, "level bound must be at least 2");
  const auto& sys = *g_.sys;
  pos_ = positive_real_roots(sys.cartan(), g_.s, L_, &sys.delta());
  std::stable_sort(pos_.begin(), pos_.end(), [&](const RootVector& x, const RootVector& y) {
    int lx = g_.level(x), ly = g_.level(y);
    if (lx != ly) return lx < ly;
    int hx = x.height(), hy = y.height();
    return hx != hy ? hx < hy : x < y;
  });
  for (size_t i = 0; i < pos_.size(); ++i) real_[pos_[i]] = int(i);

  std::vector<RootVector> neg0;
  for (auto& r : pos_) {
    int l = g_.level(r);
    if (l == 1) phi1_.push_back(r);
    if (l == 0) phi0_.push_back(r), neg0.push_back(-r);
  }
  phi0_.insert(phi0_.end(), neg0.begin(), neg0.end());
  if (phi1_.size() > size_t(kMaxSet)) throw Error(ErrorCode::InvalidArgument, "too many level-one roots");
  for (size_t i = 0; i < phi1_.size(); ++i) idx1_[phi1_[i]] = int(i);
  for (size_t i = 0; i < phi0_.size(); ++i) idx0_[phi0_[i]] = int(i);

  const size_t n1 = phi1_.size(), n0 = phi0_.size();
  neg1_.assign(n1, -1);
  up_.assign(n1, RootSet());
  leq_ = orth_ = diff0_ = sum2_ = up_;
  complex1_.assign(n1, false);
  p11_.assign(n1 * n1, 0);
  p01_.assign(n0 * n1, 0);
  for (size_t i = 0; i < n1; ++i) {
    const auto& a = phi1_[i];
    if (auto r = lift(-a, 1)) neg1_[i] = index1(*r);
    complex1_[i] = lift(a, 0).has_value();
    for (size_t j = 0; j < n1; ++j) {
      const auto& b = phi1_[j];
      RootVector d = b - a;
      if (d.positive() && real_.count(d)) up_[i].set(j);
      if (d.nonneg()) leq_[i].set(j);
      if (i != j && form(a, b) == 0) orth_[i].set(j);
      if (i != j && is_real_root(a - b)) diff0_[i].set(j);
      if (is_real_root(a + b)) sum2_[i].set(j);
      p11_[i * n1 + j] = int8_t(pairing(a, b));
    }
  }
  for (size_t a = 0; a < n0; ++a)
    for (size_t j = 0; j < n1; ++j) p01_[a * n1 + j] = int8_t(pairing(phi0_[a], phi1_[j]));
}

bool GradedRoots::is_real_root(const RootVector& v) const {
  int l = level(v);
  if (l > L_ || l < -L_) throw Error(ErrorCode::LevelBoundTooSmall, "root of level " + std::to_string(l));
  if (v.positive()) return real_.count(v) > 0;
  if (v.negative()) return real_.count(-v) > 0;
  return false;
}

bool GradedRoots::is_imaginary_root(const RootVector& v) const {
  int l = level(v);
  if (l > L_ || l < -L_) throw Error(ErrorCode::LevelBoundTooSmall, "root of level " + std::to_string(l));
  return multiple_of_delta(v, sys().delta());
}

int GradedRoots::pairing(const RootVector& u, const RootVector& v) const {
  long long vv = form(v, v);
  if (vv == 0) throw Error(ErrorCode::IsotropicCoroot, "coroot of an isotropic vector");
  long long num = 2 * form(u, v);
  if (num % vv) throw Error(ErrorCode::InvalidArgument, "non-integral pairing");
  return int(num / vv);
}

bool GradedRoots::is_long(const RootVector& v) const {
  long long mx = 0;
  for (int i = 0; i < nodes(); ++i) mx = std::max(mx, sys().cartan().norm(i));
  return form(v, v) == mx;
}

RootVector GradedRoots::weight_key(const RootVector& v) const {
  return g_.m * v - (g_.sys->twist() * level(v)) * sys().delta();
}

std::optional<RootVector> GradedRoots::lift(const RootVector& v, int lev) const {
  RootVector t = weight_key(v) + (g_.sys->twist() * lev) * sys().delta();
  RootVector r;
  for (int i = 0; i < kMaxNodes; ++i) {
    if (t.c[i] % g_.m) return std::nullopt;
    r.c[i] = int16_t(t.c[i] / g_.m);
  }
  if (is_real_root(r)) return r;
  return std::nullopt;
}

int GradedRoots::index1(const RootVector& v) const {
  auto it = idx1_.find(v);
  return it == idx1_.end() ? -1 : it->second;
}

int GradedRoots::index0(const RootVector& v) const {
  auto it = idx0_.find(v);
  return it == idx0_.end() ? -1 : it->second;
}

int GradedRoots::zero_mult(int i) const {
  int k = sys().twist(), m = g_.m, n = nodes() - 1, N = sys().finite_rank();
  if ((i * k) % m) return 0;
  int j = i * k / m;
  if (j % k == 0) return n;
  return (N - n) / (k - 1);
}

RootSet GradedRoots::all1() const {
  RootSet s;
  for (size_t i = 0; i < phi1_.size(); ++i) s.set(i);
  return s;
}

std::vector<RootVector> GradedRoots::roots_of(const RootSet& s) const {
  std::vector<RootVector> out;
  for (int i : members(s)) out.push_back(phi1_[i]);
  return out;
}

RootSet GradedRoots::set_of(const std::vector<RootVector>& v) const {
  RootSet s;
  for (auto& r : v) {
    int i = index1(r);
    if (i < 0) throw Error(ErrorCode::NotInPsi, "not a level-one root: " + r.str(nodes()));
    s.set(i);
  }
  return s;
}

bool is_biconvex(const GradedRoots& gr, const std::vector<RootVector>& a) {
  std::set<RootVector> in(a.begin(), a.end());
  int maxlev = 0;
  for (auto& r : a) {
    if (!r.positive() || !gr.is_real_root(r)) return false;
    maxlev = std::max(maxlev, gr.level(r));
  }
  if (2 * maxlev > gr.level_bound())
    throw Error(ErrorCode::LevelBoundTooSmall, "sums leave the window");
  for (auto& x : a)
    for (auto& y : a)
      if (gr.is_root(x + y) && !in.count(x + y)) return false;
  // complement: no element of a splits into two positive roots outside a
  const auto& d = gr.sys().delta();
  for (auto& c : a) {
    int lc = gr.level(c);
    std::vector<RootVector> parts;
    for (auto& r : gr.positive())
      if (gr.level(r) <= lc) parts.push_back(r);
    for (int j = 1; j * gr.level(d) <= lc; ++j) parts.push_back(j * d);
    for (auto& x : parts) {
      RootVector y = c - x;
      if (!y.positive() || in.count(x) || in.count(y)) continue;
      if (gr.is_root(y)) return false;
    }
  }
  return true;
}

}  // namespace lieab
