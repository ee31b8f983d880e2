#include <algorithm>
#include <climits>
#include <map>
#include <queue>
#include <unordered_set>

#include "lieab/rootsys.hpp"

namespace lieab {

bool positive_definite(const CartanMatrix& a);  // classify.cpp

namespace {

bool multiple_of(const RootVector& v, const RootVector& d) {
  int i0 = 0;
  while (i0 < kMaxNodes && d.c[i0] == 0) ++i0;
  if (i0 == kMaxNodes || v.c[i0] % d.c[i0]) return false;
  int t = v.c[i0] / d.c[i0];
  return t != 0 && v == t * d;
}

long long weigh(const RootVector& v, const std::vector<int>& w) {
  long long s = 0;
  for (size_t i = 0; i < w.size(); ++i) s += (long long)w[i] * v.c[i];
  return s;
}

}  // namespace

std::vector<RootVector> positive_real_roots(const CartanMatrix& a, const std::vector<int>& weight,
                                            long long bound, const RootVector* delta,
                                            std::vector<RootVector>* imaginary) {
  const int n = a.rank();
  std::unordered_set<RootVector, RootVectorHash> real, imag;
  std::vector<RootVector> out, layer;
  for (int i = 0; i < n; ++i) {
    auto e = RootVector::unit(i);
    if (weigh(e, weight) > bound) continue;
    real.insert(e);
    layer.push_back(e);
  }
  auto known = [&](const RootVector& v) { return real.count(v) || imag.count(v); };

  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    std::vector<RootVector> next;
    for (const auto& b : layer) {
      if (imag.count(b)) {
        if (imaginary) imaginary->push_back(b);
      } else {
        out.push_back(b);
      }
      for (int i = 0; i < n; ++i) {
        auto e = RootVector::unit(i);
        if (b == e) continue;
        RootVector g = b + e;
        if (known(g) || weigh(g, weight) > bound) continue;
        int p = 0;
        RootVector t = b - e;
        while (t.positive() && known(t)) {
          ++p;
          t -= e;
        }
        long long pair = 0;
        for (int j = 0; j < n; ++j) pair += (long long)b.c[j] * a(i, j);
        if (p - pair <= 0) continue;
        if (delta && multiple_of(g, *delta))
          imag.insert(g);
        else
          real.insert(g);
        next.push_back(g);
      }
    }
    layer.swap(next);
  }
  return out;
}

FiniteRootSystem::FiniteRootSystem(const CartanMatrix& a) : a_(a) {
  if (!positive_definite(a)) throw Error(ErrorCode::NotFiniteType, "Cartan matrix is not of finite type");
  std::vector<int> w(a.rank(), 1);
  pos_ = positive_real_roots(a, w, LLONG_MAX);
  std::sort(pos_.begin(), pos_.end(), [](const RootVector& x, const RootVector& y) {
    int hx = x.height(), hy = y.height();
    return hx != hy ? hx < hy : x < y;
  });
  for (auto& r : pos_) {
    roots_.push_back(r);
    roots_.push_back(-r);
  }
  std::sort(roots_.begin(), roots_.end());
  for (size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = int(i);

  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j)
      if (i != j && a(i, j) < -1) simply_laced_ = false;

  auto comps = a.components();
  if (comps.size() == 1) {
    // the unique root of maximal height
    highest_.push_back(pos_.back());
    for (char x : std::string("ABCDEFG")) {
      FiniteType t{x, a.rank()};
      if (is_valid_finite_type(t) && cartan_matrix(t) == a) {
        type_ = t;
        break;
      }
    }
  }
}

const RootVector& FiniteRootSystem::highest_root() const {
  if (highest_.empty()) throw Error(ErrorCode::InvalidArgument, "highest root of a reducible system");
  return highest_[0];
}

int FiniteRootSystem::index_of(const RootVector& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

bool FiniteRootSystem::is_long(const RootVector& v) const { return norm2(v) == Rational(2); }

Rational FiniteRootSystem::pairing(const RootVector& lam, const RootVector& mu) const {
  long long mm = form(mu, mu);
  if (mm == 0) throw Error(ErrorCode::IsotropicCoroot, "coroot of an isotropic vector");
  return Rational(2 * form(lam, mu), mm);
}

int FiniteRootSystem::pairing_int(const RootVector& lam, const RootVector& mu) const {
  Rational r = pairing(lam, mu);
  if (r.denominator() != 1) throw Error(ErrorCode::InvalidArgument, "non-integral pairing");
  return int(r.numerator());
}

RootVector FiniteRootSystem::reflect(const RootVector& gamma, const RootVector& v) const {
  return v - pairing_int(v, gamma) * gamma;
}

FiniteRootSystem generate_roots(const CartanMatrix& a) { return FiniteRootSystem(a); }
FiniteRootSystem generate_roots(const FiniteType& t) { return FiniteRootSystem(cartan_matrix(t)); }

std::pair<int, int> root_string(const FiniteRootSystem& sys, const RootVector& mu,
                                const RootVector& lam) {
  if (!sys.contains(mu) || !sys.contains(lam)) throw Error(ErrorCode::InvalidArgument, "not a root");
  if (mu == lam || mu == -lam) throw Error(ErrorCode::SameRootLine, "mu = +-lambda");
  int p = 0, q = 0;
  while (sys.contains(mu - (p + 1) * lam)) ++p;
  while (sys.contains(mu + (q + 1) * lam)) ++q;
  return {p, q};
}

bool dominance_leq(const RootVector& lam, const RootVector& mu, const std::vector<bool>& pi0) {
  RootVector d = mu - lam;
  for (int i = 0; i < kMaxNodes; ++i) {
    if (d.c[i] < 0) return false;
    if (d.c[i] > 0 && (i >= int(pi0.size()) || !pi0[i])) return false;
  }
  return true;
}

std::vector<RootVector> decompose_orthogonal(const FiniteRootSystem& sys, const RootVector& beta,
                                             const RootVector& beta_prime) {
  if (!sys.simply_laced()) throw Error(ErrorCode::NotSimplyLaced, "decompose_orthogonal");
  if (!sys.contains(beta) || !sys.contains(beta_prime) || !beta.positive() || !beta_prime.positive())
    throw Error(ErrorCode::InvalidArgument, "expected positive roots");
  if (!(beta_prime - beta).nonneg()) throw Error(ErrorCode::NotDominated, "beta' - beta not in N Pi");
  if (beta == beta_prime) return {};

  // shortest chain beta -> beta' inside the interval; minimal chains are orthogonal
  std::map<RootVector, std::pair<RootVector, RootVector>> parent;
  std::queue<RootVector> q;
  q.push(beta);
  parent[beta] = {beta, RootVector()};
  while (!q.empty() && !parent.count(beta_prime)) {
    RootVector v = q.front();
    q.pop();
    for (const auto& g : sys.positive_roots()) {
      RootVector w = v + g;
      if (parent.count(w) || !(beta_prime - w).nonneg() || !sys.contains(w)) continue;
      parent[w] = {v, g};
      q.push(w);
    }
  }
  if (!parent.count(beta_prime)) throw Error(ErrorCode::TheoremViolation, "no root chain found");
  std::vector<RootVector> gam;
  for (RootVector v = beta_prime; v != beta; v = parent[v].first) gam.push_back(parent[v].second);
  std::reverse(gam.begin(), gam.end());
  for (size_t i = 0; i < gam.size(); ++i)
    for (size_t j = i + 1; j < gam.size(); ++j)
      if (sys.form(gam[i], gam[j]) != 0)
        throw Error(ErrorCode::TheoremViolation, "minimal chain is not orthogonal");
  return gam;
}

}  // namespace lieab
