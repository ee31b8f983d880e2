#include "lieab/iab.hpp"

#include <algorithm>
#include <map>

namespace lieab {

namespace {

void require_involution(const GradedRoots& gr) {
  const auto& g = gr.grading();
  if (g.m != 2 && !g.flip) throw Error(ErrorCode::NotInvolution, "grading of order " + std::to_string(g.m));
}

void sort_sets(std::vector<RootSet>& v) {
  std::sort(v.begin(), v.end(), [](const RootSet& a, const RootSet& b) {
    size_t ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : set_less(a, b);
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// c - delta a positive level-zero root: c = (c - delta) + delta with neither summand an inversion
bool forbidden(const GradedRoots& gr, int c) {
  const auto& d = gr.sys().delta();
  if (gr.level(d) != 1) return false;
  RootVector r = gr.phi1()[c] - d;
  return r.positive() && gr.is_real_root(r);
}

struct State {
  RootSet inv;
  std::vector<RootVector> cols;  // w(alpha_j)
};

std::vector<State> children(const GradedRoots& gr, const State& s) {
  const auto& a = gr.sys().cartan();
  const int n = gr.nodes();
  std::vector<State> out;
  for (int i = 0; i < n; ++i) {
    const RootVector v = s.cols[i];
    if (!v.positive() || gr.level(v) != 1) continue;
    State t;
    t.inv = s.inv;
    t.inv.set(gr.index1(v));
    t.cols = s.cols;
    for (int j = 0; j < n; ++j) t.cols[j] = s.cols[j] - a(i, j) * v;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<RootSet> bfs(const GradedRoots& gr, bool parallel) {
  require_involution(gr);
  State root;
  for (int j = 0; j < gr.nodes(); ++j) root.cols.push_back(RootVector::unit(j));
  std::vector<RootSet> out{root.inv};
  std::vector<State> layer{root};
  while (!layer.empty()) {
    std::vector<std::vector<State>> kids(layer.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long t = 0; t < (long long)layer.size(); ++t) kids[t] = children(gr, layer[t]);
    std::map<RootSet, State, bool (*)(const RootSet&, const RootSet&)> next(set_less);
    for (auto& v : kids)
      for (auto& s : v) next.emplace(s.inv, std::move(s));
    layer.clear();
    for (auto& [k, s] : next) {
      out.push_back(k);
      layer.push_back(std::move(s));
    }
  }
  sort_sets(out);
  return out;
}

}  // namespace

IabPoset::IabPoset(std::shared_ptr<const GradedRoots> gr, std::vector<RootSet> elems)
    : gr_(std::move(gr)), elems_(std::move(elems)) {
  sort_sets(elems_);
  maximal_.assign(elems_.size(), true);
  for (size_t i = 0; i < elems_.size(); ++i)
    for (size_t j = i + 1; j < elems_.size() && maximal_[i]; ++j)
      if (elems_[j].count() > elems_[i].count() && (elems_[i] & ~elems_[j]).none()) maximal_[i] = false;
}

int IabPoset::find(const RootSet& inv) const {
  for (size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i] == inv) return int(i);
  return -1;
}

std::vector<int> IabPoset::maximal_elements() const {
  std::vector<int> out;
  for (size_t i = 0; i < elems_.size(); ++i)
    if (maximal_[i]) out.push_back(int(i));
  return out;
}

std::vector<RootSet> enumerate_minuscule_serial(const GradedRoots& gr) { return bfs(gr, false); }
std::vector<RootSet> enumerate_minuscule_parallel(const GradedRoots& gr) { return bfs(gr, true); }

bool extends(const GradedRoots& gr, const RootSet& n, int c) {
  if (n.test(c) || forbidden(gr, c)) return false;
  if (gr.sum2(c).test(c) || (gr.sum2(c) & n).any()) return false;
  int neg = gr.neg1(c);
  if (neg == c || (neg >= 0 && n.test(neg))) return false;
  for (int i = 0; i < gr.size1(); ++i)
    if (gr.up(i).test(c) && !n.test(i)) return false;
  return true;
}

std::vector<RootSet> enumerate_biconvex(const GradedRoots& gr) {
  require_involution(gr);
  const int n1 = gr.size1();
  std::vector<RootSet> down(n1), clash(n1);
  std::vector<bool> ok(n1);
  for (int c = 0; c < n1; ++c) {
    for (int i = 0; i < n1; ++i)
      if (gr.up(i).test(c)) down[c].set(i);
    clash[c] = gr.sum2(c);
    if (gr.neg1(c) >= 0) clash[c].set(gr.neg1(c));
    ok[c] = !forbidden(gr, c) && !clash[c].test(c);
  }
  std::vector<RootSet> out;
  RootSet cur;
  auto rec = [&](auto&& self, int c) -> void {
    if (c == n1) {
      out.push_back(cur);
      return;
    }
    self(self, c + 1);
    if (ok[c] && (down[c] & ~cur).none() && (clash[c] & cur).none()) {
      cur.set(c);
      self(self, c + 1);
      cur.reset(c);
    }
  };
  rec(rec, 0);
  sort_sets(out);
  return out;
}

IabPoset enumerate_iab(std::shared_ptr<const GradedRoots> gr, bool parallel) {
  auto v = bfs(*gr, parallel);
  return IabPoset(std::move(gr), std::move(v));
}

IabPoset enumerate_iab(const GradingDatum& g, int level_bound, bool parallel) {
  return enumerate_iab(std::make_shared<const GradedRoots>(g, level_bound), parallel);
}

AbelianSubalgebra theta(std::shared_ptr<const GradedRoots> gr, const RootSet& inv) {
  RootSet psi;
  for (int i : members(inv)) {
    int j = gr->neg1(i);
    if (j < 0) throw Error(ErrorCode::InvalidArgument, "weight without a level-one lift");
    psi.set(j);
  }
  return AbelianSubalgebra{std::move(gr), psi, inv};
}

RootSet theta_inverse(const AbelianSubalgebra& a) {
  RootSet inv;
  for (int i : members(a.psi)) inv.set(a.gr->neg1(i));
  return inv;
}

bool special_hypotheses(const GradedRoots& gr) {
  const auto& g = gr.grading();
  if (g.m != 2 || g.flip || g.pi1.size() != 1 || int(g.pi0.size()) != gr.nodes() - 1) return false;
  int p = g.pi1[0];
  if (!gr.sys().is_long_simple(p)) return false;
  return !gr.complex1(gr.index1(RootVector::unit(p)));
}

SpecialCase special_case(const GradedRoots& gr) {
  if (!special_hypotheses(gr))
    throw Error(ErrorCode::NotApplicable, "needs Pi_1 = {alpha_p} with alpha_p long and non-complex");
  SpecialCase sc;
  sc.p = gr.grading().pi1[0];
  const auto& a = gr.sys().cartan();
  const auto& pi0 = gr.grading().pi0;
  for (auto& comp : a.sub(pi0).components()) {
    std::vector<int> nodes;
    int joined = -1, count = 0;
    for (int l : comp) {
      nodes.push_back(pi0[l]);
      if (a(sc.p, pi0[l]) != 0) joined = pi0[l], ++count;
    }
    if (count != 1) throw Error(ErrorCode::TheoremViolation, "component not joined to alpha_p by one node");
    sc.sigma.push_back(nodes);
    sc.alpha_sigma.push_back(joined);
  }
  return sc;
}

HermitianPair sigma_pair(const GradedRoots& gr, const SpecialCase& sc, int component) {
  const auto& nodes = sc.sigma[component];
  int q = int(std::find(nodes.begin(), nodes.end(), sc.alpha_sigma[component]) - nodes.begin());
  return HermitianPair(gr.sys().cartan().sub(nodes), q);
}

namespace {

RootVector embed(const std::vector<int>& nodes, const RootVector& b) {
  RootVector v;
  for (size_t l = 0; l < nodes.size(); ++l) v.c[nodes[l]] = b.c[l];
  return v;
}

}  // namespace

std::vector<RootVector> sigma_phi1(const GradedRoots& gr, const SpecialCase& sc, int component) {
  auto hp = sigma_pair(gr, sc, component);
  std::vector<RootVector> out;
  for (auto& b : hp.phi1plus()) out.push_back(embed(sc.sigma[component], b));
  return out;
}

RootSet c1_sigma(const GradedRoots& gr) {
  auto sc = special_case(gr);
  RootVector top = RootVector::unit(sc.p) + gr.sys().twist() * gr.sys().delta();
  RootSet out;
  for (int i = 0; i < gr.size1(); ++i) {
    RootVector r = top - gr.phi1()[i];
    if (r.positive() && gr.is_root(r)) out.set(i);
  }
  return out;
}

RootSet special_wp(const GradedRoots& gr) {
  auto sc = special_case(gr);
  RootVector ap = RootVector::unit(sc.p);
  std::vector<RootVector> v{ap};
  for (size_t c = 0; c < sc.sigma.size(); ++c)
    for (auto& g : sigma_phi1(gr, sc, int(c))) v.push_back(g + ap);
  RootSet out = gr.set_of(v);
  if (out != c1_sigma(gr)) throw Error(ErrorCode::TheoremViolation, "N(w_p) differs from C^1");
  return out;
}

RootSet special_antichain(const GradedRoots& gr) {
  auto sc = special_case(gr);
  RootVector ap = RootVector::unit(sc.p);
  std::vector<RootVector> v;
  for (size_t c = 0; c < sc.sigma.size(); ++c) {
    auto hp = sigma_pair(gr, sc, int(c));
    OrtSubset as;
    try {
      as = unique_max_antichain(hp);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotTubeType) throw;
      throw Error(ErrorCode::TheoremViolation, "component pair not of tube type");
    }
    for (auto& b : as) v.push_back(embed(sc.sigma[c], b) + ap);
  }
  return gr.set_of(v);
}

RootSet abar(const GradedRoots& gr) {
  RootSet c1 = c1_sigma(gr), a = special_antichain(gr), out;
  for (int i : members(c1))
    if ((gr.leq(i) & a).any()) out.set(i);
  if ((a & ~out).any() || (out & ~c1).any()) throw Error(ErrorCode::TheoremViolation, "closure containments fail");
  if (!is_biconvex(gr, gr.roots_of(out))) throw Error(ErrorCode::TheoremViolation, "down-closure not biconvex");
  return out;
}

}  // namespace lieab
