#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lieab/rootsys.hpp"

namespace lieab {

namespace {

struct Definiteness {
  bool psd = false;
  int corank = 0;
};

// symmetric elimination with positive diagonal pivots
Definiteness definiteness(const CartanMatrix& a) {
  int n = a.rank();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rational(a.gram(i, j));
  std::vector<bool> live(n, true);
  int left = n;
  while (left > 0) {
    int k = -1;
    for (int i = 0; i < n; ++i) {
      if (!live[i]) continue;
      if (m[i][i] < Rational(0)) return {false, 0};
      if (k < 0 && m[i][i] > Rational(0)) k = i;
    }
    if (k < 0) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (live[i] && live[j] && m[i][j] != Rational(0)) return {false, 0};
      return {true, left};
    }
    live[k] = false;
    --left;
    for (int i = 0; i < n; ++i) {
      if (!live[i] || m[i][k] == Rational(0)) continue;
      Rational f = m[i][k] / m[k][k];
      for (int j = 0; j < n; ++j)
        if (live[j]) m[i][j] -= f * m[k][j];
    }
  }
  return {true, 0};
}

// positive integral generator of the right kernel (assumed one-dimensional)
std::vector<int> kernel_vector(const CartanMatrix& a) {
  int n = a.rank();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a(i, j);
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (m[i][c] != Rational(0)) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    for (int j = c + 1; j < n; ++j) m[r][j] /= m[r][c];
    m[r][c] = 1;
    for (int i = 0; i < n; ++i)
      if (i != r && m[i][c] != Rational(0)) {
        Rational f = m[i][c];
        for (int j = c; j < n; ++j) m[i][j] -= f * m[r][j];
      }
    pivcol.push_back(c);
    ++r;
  }
  int freec = -1;
  for (int c = 0; c < n; ++c)
    if (std::find(pivcol.begin(), pivcol.end(), c) == pivcol.end()) { freec = c; break; }
  if (freec < 0) return {};
  std::vector<Rational> x(n, 0);
  x[freec] = 1;
  for (int i = 0; i < r; ++i) x[pivcol[i]] = -m[i][freec];
  long long l = 1;
  for (auto& v : x) l = std::lcm(l, v.denominator());
  std::vector<int> out(n);
  long long g = 0;
  for (int i = 0; i < n; ++i) {
    out[i] = int((x[i] * l).numerator());
    g = std::gcd(g, (long long)std::abs(out[i]));
  }
  bool neg = std::any_of(out.begin(), out.end(), [](int v) { return v < 0; });
  for (auto& v : out) v = int(v / g) * (neg ? -1 : 1);
  return out;
}

struct TableEntry {
  std::string name;
  int twist;  // 0 for finite
  CartanMatrix a;
};

CartanMatrix untwisted_from_finite(const CartanMatrix& fin) {
  FiniteRootSystem sys(fin);
  const RootVector& th = sys.highest_root();
  int n = fin.rank();
  std::vector<std::vector<int>> a(n + 1, std::vector<int>(n + 1, 0));
  a[0][0] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i + 1][j + 1] = fin(i, j);
  for (int j = 0; j < n; ++j) {
    auto e = RootVector::unit(j);
    a[0][j + 1] = -sys.pairing_int(e, th);
    a[j + 1][0] = -sys.pairing_int(th, e);
  }
  return CartanMatrix(a);
}

CartanMatrix twisted(char x, int l, int k) {
  std::vector<int> len;
  std::vector<std::pair<int, int>> e;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) e.push_back({i, i + 1});
  };
  if (k == 3) {
    len = {1, 1, 3};
    chain(0, 2);
  } else if (x == 'E') {
    len = {1, 1, 1, 2, 2};
    chain(0, 4);
  } else if (x == 'A' && l == 1) {
    len = {1, 4};
    chain(0, 1);
  } else if (x == 'A') {  // A_{2l}^(2)
    len.assign(l + 1, 2);
    len[0] = 1;
    len[l] = 4;
    chain(0, l);
  } else if (x == 'a') {  // A_{2l-1}^(2)
    len.assign(l + 1, 1);
    len[l] = 2;
    e = {{0, 2}, {1, 2}};
    chain(2, l);
  } else {  // D_{l+1}^(2)
    len.assign(l + 1, 2);
    len[0] = len[l] = 1;
    chain(0, l);
  }
  return cartan_from_lengths(len, e);
}

const std::map<int, std::vector<TableEntry>>& tables() {
  static std::map<int, std::vector<TableEntry>> t;
  static std::once_flag once;
  std::call_once(once, [] {
    const int cap = 12;
    auto fin = [&](char s, int n) {
      FiniteType ft{s, n};
      t[n].push_back({ft.name(), 0, cartan_matrix(ft)});
    };
    for (int r = 1; r <= cap; ++r) {
      fin('A', r);
      if (r >= 2) fin('B', r);
      if (r >= 3) fin('C', r);
      if (r >= 4) fin('D', r);
    }
    fin('E', 6), fin('E', 7), fin('E', 8), fin('F', 4), fin('G', 2);

    auto aff1 = [&](char s, int n) {
      FiniteType ft{s, n};
      t[n + 1].push_back({ft.name() + "^(1)", 1, untwisted_from_finite(cartan_matrix(ft))});
    };
    for (int r = 1; r <= cap; ++r) {
      aff1('A', r);
      if (r >= 3) aff1('B', r);
      if (r >= 2) aff1('C', r);
      if (r >= 4) aff1('D', r);
    }
    aff1('E', 6), aff1('E', 7), aff1('E', 8), aff1('F', 4), aff1('G', 2);

    t[2].push_back({"A2^(2)", 2, twisted('A', 1, 2)});
    for (int l = 2; l <= cap; ++l) t[l + 1].push_back({"A" + std::to_string(2 * l) + "^(2)", 2, twisted('A', l, 2)});
    for (int l = 3; l <= cap; ++l) t[l + 1].push_back({"A" + std::to_string(2 * l - 1) + "^(2)", 2, twisted('a', l, 2)});
    for (int l = 2; l <= cap; ++l) t[l + 1].push_back({"D" + std::to_string(l + 1) + "^(2)", 2, twisted('D', l, 2)});
    t[5].push_back({"E6^(2)", 2, twisted('E', 4, 2)});
    t[3].push_back({"D4^(3)", 3, twisted('D', 2, 3)});
  });
  return t;
}

std::vector<int> signature(const CartanMatrix& a, int i) {
  std::vector<int> r, c;
  for (int j = 0; j < a.rank(); ++j)
    if (j != i) {
      r.push_back(a(i, j));
      c.push_back(a(j, i));
    }
  std::sort(r.begin(), r.end());
  std::sort(c.begin(), c.end());
  r.insert(r.end(), c.begin(), c.end());
  return r;
}

bool extend_iso(const CartanMatrix& a, const CartanMatrix& t, const std::vector<int>& order, size_t k,
                std::vector<int>& map, std::vector<bool>& used,
                const std::vector<std::vector<int>>& sa, const std::vector<std::vector<int>>& st) {
  if (k == order.size()) return true;
  int i = order[k];
  for (int c = 0; c < t.rank(); ++c) {
    if (used[c] || sa[i] != st[c]) continue;
    bool ok = true;
    for (size_t kk = 0; kk < k && ok; ++kk) {
      int j = order[kk];
      ok = a(i, j) == t(c, map[j]) && a(j, i) == t(map[j], c);
    }
    if (!ok) continue;
    map[i] = c;
    used[c] = true;
    if (extend_iso(a, t, order, k + 1, map, used, sa, st)) return true;
    used[c] = false;
  }
  return false;
}

// map with a(i,j) = t(map i, map j), or empty
std::vector<int> find_isomorphism(const CartanMatrix& a, const CartanMatrix& t) {
  int n = a.rank();
  if (t.rank() != n) return {};
  std::vector<std::vector<int>> sa(n), st(n);
  for (int i = 0; i < n; ++i) sa[i] = signature(a, i), st[i] = signature(t, i);
  // connected order keeps the pruning effective
  std::vector<int> order{0};
  std::vector<bool> in(n, false);
  in[0] = true;
  for (size_t k = 0; k < order.size(); ++k)
    for (int j = 0; j < n; ++j)
      if (!in[j] && a(order[k], j) != 0) in[j] = true, order.push_back(j);
  for (int j = 0; j < n; ++j)
    if (!in[j]) order.push_back(j);
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  if (extend_iso(a, t, order, 0, map, used, sa, st)) return map;
  return {};
}

DiagramClass classify_component(const CartanMatrix& a) {
  DiagramClass dc;
  auto d = definiteness(a);
  if (!d.psd || d.corank > 1) {
    dc.kind = DiagramClass::Kind::Indefinite;
    return dc;
  }
  dc.kind = d.corank == 0 ? DiagramClass::Kind::Finite : DiagramClass::Kind::Affine;
  auto it = tables().find(a.rank());
  if (it != tables().end())
    for (const auto& e : it->second) {
      if ((e.twist == 0) != (dc.kind == DiagramClass::Kind::Finite)) continue;
      auto m = find_isomorphism(a, e.a);
      if (m.empty()) continue;
      dc.name = e.name;
      dc.twist = e.twist;
      dc.node_map = m;
      break;
    }
  if (dc.kind == DiagramClass::Kind::Affine) {
    dc.labels = kernel_vector(a);
    if (!dc.node_map.empty()) {
      dc.table_labels.assign(a.rank(), 0);
      for (int i = 0; i < a.rank(); ++i) dc.table_labels[dc.node_map[i]] = dc.labels[i];
    }
  }
  return dc;
}

}  // namespace

bool positive_definite(const CartanMatrix& a) {
  auto d = definiteness(a);
  return d.psd && d.corank == 0;
}

CartanMatrix untwisted_affine_cartan(const CartanMatrix& fin) { return untwisted_from_finite(fin); }

CartanMatrix twisted_affine_cartan(const std::string& kac_name) {
  for (const auto& [n, v] : tables())
    for (const auto& e : v)
      if (e.name == kac_name && e.twist >= 2) return e.a;
  throw Error(ErrorCode::IllegalTwist, "no twisted diagram " + kac_name);
}

std::string DiagramClass::kind_name() const {
  switch (kind) {
    case Kind::Finite: return "finite";
    case Kind::Affine: return "affine";
    case Kind::Indefinite: return "indefinite";
  }
  return "";
}

DiagramClass classify_gcm(const CartanMatrix& a) {
  auto comps = a.components();
  if (comps.size() == 1) return classify_component(a);
  DiagramClass dc;
  bool all_finite = true, any_indef = false;
  for (auto& c : comps) {
    auto sub = classify_component(a.sub(c));
    all_finite &= sub.kind == DiagramClass::Kind::Finite;
    any_indef |= sub.kind == DiagramClass::Kind::Indefinite;
    if (!dc.name.empty()) dc.name += "+";
    dc.name += sub.name.empty() ? "?" : sub.name;
    dc.components.push_back(sub);
  }
  dc.kind = any_indef ? DiagramClass::Kind::Indefinite
                      : (all_finite ? DiagramClass::Kind::Finite : DiagramClass::Kind::Affine);
  if (any_indef) dc.name.clear();
  return dc;
}

std::string to_dot(const CartanMatrix& a, const std::string& title, const std::vector<int>& labels,
                   int first_index) {
  std::ostringstream os;
  os << "graph \"" << title << "\" {\n  node [shape=circle];\n";
  for (int i = 0; i < a.rank(); ++i) {
    os << "  a" << i + first_index << " [label=\"" << i + first_index;
    if (!labels.empty()) os << "\\n" << labels[i];
    os << "\"];\n";
  }
  for (int i = 0; i < a.rank(); ++i)
    for (int j = i + 1; j < a.rank(); ++j) {
      if (a(i, j) == 0) continue;
      int mult = std::max(-a(i, j), -a(j, i));
      os << "  a" << i + first_index << " -- a" << j + first_index << " [mult=" << mult;
      // |a_ij| > |a_ji| means alpha_i is the shorter root
      if (a(i, j) != a(j, i)) os << ", arrow=\"a" << (a(i, j) < a(j, i) ? i : j) + first_index << "\"";
      os << "];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace lieab
