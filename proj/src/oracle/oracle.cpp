#include "lieab/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace lieab {

bool Mat::is_zero() const {
  for (auto x : a)
    if (x) return false;
  return true;
}

Mat operator+(const Mat& x, const Mat& y) {
  Mat z(x.n);
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
  return z;
}

Mat operator*(long long t, const Mat& x) {
  Mat z(x.n);
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = t * x.a[i];
  return z;
}

namespace {

Mat mul(const Mat& x, const Mat& y) {
  Mat z(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      long long v = x(i, k);
      if (!v) continue;
      for (int j = 0; j < x.n; ++j) z(i, j) += v * y(k, j);
    }
  return z;
}

Mat transpose(const Mat& x) {
  Mat z(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) z(j, i) = x(i, j);
  return z;
}

Mat unit(int n, int i, int j) {
  Mat z(n);
  z(i, j) = 1;
  return z;
}

bool proportional(const Mat& x, const Mat& y) {
  // x = c y for a rational c
  long long px = 0, py = 0;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (y.a[i]) {
      px = x.a[i], py = y.a[i];
      break;
    }
  if (!py) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] * py != y.a[i] * px) return false;
  return true;
}

int mod2(long long v) { return int(((v % 2) + 2) % 2); }

}  // namespace

Mat bracket(const Mat& x, const Mat& y) {
  Mat p = mul(x, y), q = mul(y, x);
  for (size_t i = 0; i < p.a.size(); ++i) p.a[i] -= q.a[i];
  return p;
}

bool MatrixPair::supported(const GradingDatum& g) {
  if (g.flip || g.m != 2 || g.sys->twist() != 1) return false;
  char c = g.sys->g_type().series;
  return c == 'A' || c == 'B' || c == 'C' || c == 'D';
}

std::vector<int> MatrixPair::eps(const RootVector& v) const {
  const auto& lab = gr_->sys().labels();
  const int w = series_ == 'A' ? rank_ + 1 : rank_;
  std::vector<int> e(w, 0);
  for (int i = 0; i < rank_; ++i) {
    int b = v.c[i + 1] - v.c[0] * lab[i + 1];
    if (!b) continue;
    // Bourbaki simple roots in epsilon coordinates
    if (series_ == 'A' || i < rank_ - 1) {
      e[i] += b, e[i + 1] -= b;
    } else if (series_ == 'B') {
      e[i] += b;
    } else if (series_ == 'C') {
      e[i] += 2 * b;
    } else {  // D, last node
      e[i - 1] += b, e[i] += b;
    }
  }
  return e;
}

MatrixPair::MatrixPair(std::shared_ptr<const GradedRoots> gr) : gr_(std::move(gr)) {
  const auto& g = gr_->grading();
  if (!supported(g)) throw Error(ErrorCode::NotApplicable, "no matrix model for " + g.label());
  series_ = g.sys->g_type().series;
  rank_ = g.sys->finite_rank();
  const int n = rank_;
  const int w = series_ == 'A' ? n + 1 : n;
  n_ = series_ == 'A' ? n + 1 : series_ == 'B' ? 2 * n + 1 : 2 * n;
  const int N = n_;

  weight_.assign(N, std::vector<int>(w, 0));
  for (int a = 0; a < N; ++a) {
    if (series_ == 'A') {
      weight_[a][a] = 1;
    } else if (a < n) {
      weight_[a][a] = 1;
    } else if (N - 1 - a < n) {
      weight_[a][N - 1 - a] = -1;
    }
  }
  // invariant form J and the projection X -> X - J^{-1} X^T J
  Mat J(N), Jinv(N);
  for (int a = 0; a < N; ++a) {
    long long v = (series_ == 'C' && a >= n) ? -1 : 1;
    J(a, N - 1 - a) = v;
  }
  Jinv = series_ == 'C' ? -1 * J : J;
  auto proj = [&](const Mat& x) {
    if (series_ == 'A') return x;
    Mat t = mul(mul(Jinv, transpose(x)), J);
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= t.a[i];
    return z;
  };

  // diagonal element x with alpha_i(x) = s_i, doubled to stay integral
  std::vector<long long> x2(w, 0);
  auto s = [&](int i) { return 2LL * g.s[i + 1]; };
  if (series_ == 'A') {
    for (int i = n - 1; i >= 0; --i) x2[i] = x2[i + 1] + s(i);
  } else {
    int top;
    if (series_ == 'B') {
      x2[n - 1] = s(n - 1);
      top = n - 2;
    } else if (series_ == 'C') {
      x2[n - 1] = s(n - 1) / 2;
      top = n - 2;
    } else {
      x2[n - 2] = (s(n - 2) + s(n - 1)) / 2;
      x2[n - 1] = (s(n - 1) - s(n - 2)) / 2;
      top = n - 3;
    }
    for (int i = top; i >= 0; --i) x2[i] = x2[i + 1] + s(i);
  }

  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      if (a == b) continue;
      std::vector<int> wt(w);
      bool zero = true;
      for (int i = 0; i < w; ++i) {
        wt[i] = weight_[a][i] - weight_[b][i];
        zero &= wt[i] == 0;
      }
      if (zero || roots_.count(wt)) continue;
      Mat y = proj(unit(N, a, b));
      if (y.is_zero()) continue;
      long long t = 0;
      for (int i = 0; i < w; ++i) t += wt[i] * x2[i];
      if (t % 2) throw Error(ErrorCode::DictionaryMismatch, "non-integral matrix grade");
      roots_.emplace(wt, y);
      grade_[wt] = mod2(t / 2);
    }
  if (series_ == 'A') {
    for (int a = 0; a < n; ++a) {
      Mat h = unit(N, a, a);
      h(a + 1, a + 1) = -1;
      cartan_.push_back(h);
    }
  } else {
    for (int a = 0; a < n; ++a) cartan_.push_back(proj(unit(N, a, a)));
  }

  // the dictionary: every combinatorial weight has a matrix root vector of the same parity
  g0_ = cartan_;
  borel_ = cartan_;
  for (const auto& r : gr_->phi0()) {
    const Mat& m = root_vector(r);
    g0_.push_back(m);
    if (r.positive()) borel_.push_back(m);
  }
  for (const auto& r : gr_->phi1()) g1_.push_back(root_vector(r));
  if (size_t(gr_->size0() + gr_->size1()) != roots_.size())
    throw Error(ErrorCode::DictionaryMismatch, "root counts differ");
}

const Mat& MatrixPair::root_vector(const RootVector& v) const {
  int lev = gr_->level(v);
  if (lev != 0 && lev != 1) throw Error(ErrorCode::InvalidArgument, "expected level 0 or 1");
  auto e = eps(v);
  auto it = roots_.find(e);
  if (it == roots_.end()) throw Error(ErrorCode::DictionaryMismatch, "no matrix root for " + v.str(gr_->nodes()));
  if (grade_.at(e) != lev) throw Error(ErrorCode::DictionaryMismatch, "parity differs at " + v.str(gr_->nodes()));
  return it->second;
}

bool MatrixPair::closure_check() const {
  for (const auto& [b, eb] : roots_)
    for (const auto& [c, ec] : roots_) {
      Mat z = bracket(eb, ec);
      if (z.is_zero()) continue;
      std::vector<int> mu(b.size());
      bool zero = true;
      for (size_t i = 0; i < b.size(); ++i) {
        mu[i] = b[i] + c[i];
        zero &= mu[i] == 0;
      }
      if (zero) {
        for (int i = 0; i < n_; ++i)
          for (int j = 0; j < n_; ++j)
            if (i != j && z(i, j)) return false;
        if (grade_.at(b) != grade_.at(c)) return false;
        continue;
      }
      auto it = roots_.find(mu);
      if (it == roots_.end() || !proportional(z, it->second)) return false;
      if (grade_.at(mu) != (grade_.at(b) + grade_.at(c)) % 2) return false;
    }
  return true;
}

Mat MatrixPair::x_of(const RootSet& s) const {
  Mat x(n_);
  for (int i : members(s)) x = x + root_vector(gr_->phi1()[i]);
  return x;
}

AdHeights ad_power_height(const MatrixPair& p, const RootSet& s) {
  Mat x = p.x_of(s);
  auto run = [&](const std::vector<Mat>& basis) {
    int best = 0;
    for (const auto& b : basis) {
      Mat y = b;
      int k = 0;
      for (;;) {
        y = bracket(x, y);
        if (y.is_zero()) break;
        ++k;
      }
      best = std::max(best, k);
    }
    return best;
  };
  AdHeights h;
  h.h0 = run(p.g0_basis());
  h.h1 = run(p.g1_basis());
  h.h = std::max(h.h0, h.h1);
  return h;
}

int bracket_dim(const MatrixPair& p, const RootSet& s) {
  Mat x = p.x_of(s);
  std::vector<std::vector<long long>> rows;
  for (const auto& b : p.borel()) rows.push_back(bracket(b, x).a);
  return exact_rank(rows);
}

int exact_rank(const std::vector<std::vector<long long>>& rows) {
  using boost::multiprecision::cpp_int;
  if (rows.empty()) return 0;
  const size_t m = rows.size(), n = rows[0].size();
  std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(n));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
  // fraction-free elimination
  size_t r = 0;
  cpp_int prev = 1;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t piv = r;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    for (size_t i = r + 1; i < m; ++i) {
      for (size_t j = c + 1; j < n; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return int(r);
}

}  // namespace lieab
