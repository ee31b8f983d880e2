#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "lieab/rootsys.hpp"

namespace lieab {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidCartan: return "InvalidCartan";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::NotFiniteType: return "NotFiniteType";
    case ErrorCode::NotFiniteOrAffine: return "NotFiniteOrAffine";
    case ErrorCode::IsotropicCoroot: return "IsotropicCoroot";
    case ErrorCode::SameRootLine: return "SameRootLine";
    case ErrorCode::NotSimplyLaced: return "NotSimplyLaced";
    case ErrorCode::NotDominated: return "NotDominated";
    case ErrorCode::IllegalTwist: return "IllegalTwist";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::LevelBoundTooSmall: return "LevelBoundTooSmall";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotInPsi: return "NotInPsi";
    case ErrorCode::NotDistinct: return "NotDistinct";
    case ErrorCode::PropertiesViolated: return "PropertiesViolated";
    case ErrorCode::NotTubeType: return "NotTubeType";
    case ErrorCode::NoShortRoots: return "NoShortRoots";
    case ErrorCode::NoDecomposition: return "NoDecomposition";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::DictionaryMismatch: return "DictionaryMismatch";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

std::string RootVector::str(int n) const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < n; ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

std::vector<int> members(const RootSet& s) {
  std::vector<int> out;
  for (size_t i = s._Find_first(); i < s.size(); i = s._Find_next(i)) out.push_back(int(i));
  return out;
}

bool set_less(const RootSet& a, const RootSet& b) {
  size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return members(a) < members(b);
}

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> a) : n_(int(a.size())), a_(std::move(a)) {
  if (n_ == 0 || n_ > kMaxNodes) throw Error(ErrorCode::InvalidCartan, "rank out of range");
  for (auto& row : a_)
    if (int(row.size()) != n_) throw Error(ErrorCode::InvalidCartan, "matrix is not square");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j && a_[i][j] != 2) throw Error(ErrorCode::InvalidCartan, "diagonal entry != 2");
      if (i != j && a_[i][j] > 0) throw Error(ErrorCode::InvalidCartan, "positive off-diagonal entry");
      if (i != j && (a_[i][j] == 0) != (a_[j][i] == 0))
        throw Error(ErrorCode::InvalidCartan, "zero pattern is not symmetric");
    }

  // d_i a_ij = d_j a_ji, propagated along edges
  std::vector<Rational> d(n_, Rational(0));
  for (auto& comp : components()) {
    d[comp[0]] = 1;
    std::queue<int> q;
    q.push(comp[0]);
    std::vector<bool> seen(n_, false);
    seen[comp[0]] = true;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n_; ++j)
        if (j != i && a_[i][j] != 0 && !seen[j]) {
          d[j] = d[i] * Rational(a_[i][j], a_[j][i]);
          seen[j] = true;
          q.push(j);
        }
    }
    Rational mx = 0;
    for (int i : comp) mx = std::max(mx, d[i]);
    for (int i : comp) d[i] /= mx;
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (d[i] * a_[i][j] != d[j] * a_[j][i])
        throw Error(ErrorCode::NotSymmetrizable, "no diagonal symmetrizer exists");

  long long l = 1;
  for (auto& x : d) l = std::lcm(l, x.denominator());
  scale_ = l;
  g_.assign(n_, std::vector<long long>(n_, 0));
  for (int i = 0; i < n_; ++i) {
    long long di = (d[i] * l).numerator();
    for (int j = 0; j < n_; ++j) g_[i][j] = di * a_[i][j];
  }
}

long long CartanMatrix::form(const RootVector& u, const RootVector& v) const {
  long long s = 0;
  for (int i = 0; i < n_; ++i) {
    if (!u.c[i]) continue;
    long long t = 0;
    for (int j = 0; j < n_; ++j) t += g_[i][j] * v.c[j];
    s += t * u.c[i];
  }
  return s;
}

std::vector<std::vector<int>> CartanMatrix::components() const {
  std::vector<int> comp(n_, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> cur{s};
    comp[s] = int(out.size());
    for (size_t k = 0; k < cur.size(); ++k)
      for (int j = 0; j < n_; ++j)
        if (comp[j] < 0 && a_[cur[k]][j] != 0) {
          comp[j] = comp[s];
          cur.push_back(j);
        }
    std::sort(cur.begin(), cur.end());
    out.push_back(cur);
  }
  return out;
}

CartanMatrix CartanMatrix::sub(const std::vector<int>& nodes) const {
  std::vector<std::vector<int>> b(nodes.size(), std::vector<int>(nodes.size()));
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = 0; j < nodes.size(); ++j) b[i][j] = a_[nodes[i]][nodes[j]];
  return CartanMatrix(b);
}

CartanMatrix cartan_from_lengths(const std::vector<int>& len,
                                 const std::vector<std::pair<int, int>>& edges) {
  int n = int(len.size());
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (auto [i, j] : edges) {
    int mx = std::max(len[i], len[j]);
    // a_ij = 2 (a_i, a_j) / (a_i, a_i) = -max / len_i
    a[i][j] = -mx / len[i];
    a[j][i] = -mx / len[j];
  }
  return CartanMatrix(a);
}

bool is_valid_finite_type(const FiniteType& t) {
  switch (t.series) {
    case 'A': return t.n >= 1 && t.n < kMaxNodes;
    case 'B': return t.n >= 2 && t.n < kMaxNodes;
    case 'C': return t.n >= 2 && t.n < kMaxNodes;
    case 'D': return t.n >= 3 && t.n < kMaxNodes;
    case 'E': return t.n >= 6 && t.n <= 8;
    case 'F': return t.n == 4;
    case 'G': return t.n == 2;
  }
  return false;
}

FiniteType parse_finite_type(const std::string& s) {
  if (s.size() < 2) throw Error(ErrorCode::InvalidArgument, "bad type '" + s + "'");
  FiniteType t;
  t.series = char(std::toupper(static_cast<unsigned char>(s[0])));
  try {
    size_t used = 0;
    t.n = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "bad type '" + s + "'");
  }
  if (!is_valid_finite_type(t)) throw Error(ErrorCode::InvalidArgument, "bad type '" + s + "'");
  return t;
}

CartanMatrix cartan_matrix(const FiniteType& t) {
  if (!is_valid_finite_type(t)) throw Error(ErrorCode::InvalidArgument, "bad type " + t.name());
  int n = t.n;
  std::vector<int> len(n, 2);
  std::vector<std::pair<int, int>> e;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) e.push_back({i, i + 1});
  };
  switch (t.series) {
    case 'A': chain(0, n - 1); break;
    case 'B': chain(0, n - 1); len[n - 1] = 1; break;
    case 'C':
      chain(0, n - 1);
      for (int i = 0; i < n - 1; ++i) len[i] = 1;
      break;
    case 'D':
      chain(0, n - 2);
      e.push_back({n - 3, n - 1});
      break;
    case 'E':
      // 1-3-4-5-6-7-8 with 2 hanging off 4
      e = {{0, 2}, {1, 3}, {2, 3}};
      chain(3, n - 1);
      break;
    case 'F':
      chain(0, 3);
      len[2] = len[3] = 1;
      break;
    case 'G':
      e = {{0, 1}};
      len = {1, 3};
      break;
  }
  return cartan_from_lengths(len, e);
}

}  // namespace lieab
