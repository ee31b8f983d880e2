#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieab/hermitian.hpp"

using namespace lieab;

namespace {

RootVector rv(std::vector<int> v) { return RootVector(v); }

std::set<RootVector> as_set(const OrtSubset& s) { return {s.begin(), s.end()}; }

std::vector<std::pair<FiniteType, int>> pairs_up_to(int r) {
  std::vector<std::pair<FiniteType, int>> out;
  for (auto& [t, k] : twisted_pairs(r)) {
    if (k != 1) continue;
    for (int q : hermitian_nodes(cartan_matrix(t))) out.push_back({t, q});
  }
  return out;
}

// Harish-Chandra's construction: start from the lowest noncompact root,
// repeatedly take the lowest root orthogonal to everything chosen so far
OrtSubset bottom_up_cascade(const HermitianPair& p) {
  std::vector<RootVector> rest = p.phi1plus();
  OrtSubset out;
  while (!rest.empty()) {
    auto low = *std::min_element(rest.begin(), rest.end(), [](const RootVector& a, const RootVector& b) {
      return a.height() < b.height();
    });
    int ties = 0;
    for (auto& b : rest) ties += b.height() == low.height();
    REQUIRE(ties == 1);
    out.push_back(low);
    std::vector<RootVector> keep;
    for (auto& b : rest)
      if (p.roots().form(b, low) == 0) keep.push_back(b);
    rest = keep;
  }
  return out;
}

// every subset of Phi_1^+ of size <= k that is an antichain, orthogonal and
// below B in the sense A ⊆ B^{>=0}
std::vector<OrtSubset> antichains_below(const HermitianPair& p, const OrtSubset& b, size_t k) {
  auto up = p.up_closure(b);
  std::vector<OrtSubset> out;
  OrtSubset cur;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == k) return;
    for (size_t j = i; j < up.size(); ++j) {
      bool ok = true;
      for (auto& c : cur) ok = ok && p.orthogonal(c, up[j]) && !p.leq(c, up[j]) && !p.leq(up[j], c);
      if (!ok) continue;
      cur.push_back(up[j]);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("Hermitian nodes") {
  CHECK(hermitian_nodes(cartan_matrix({'A', 4})) == std::vector<int>{0, 1, 2, 3});
  CHECK(hermitian_nodes(cartan_matrix({'B', 4})) == std::vector<int>{0});
  CHECK(hermitian_nodes(cartan_matrix({'C', 4})) == std::vector<int>{3});
  CHECK(hermitian_nodes(cartan_matrix({'D', 5})) == std::vector<int>{0, 3, 4});
  CHECK(hermitian_nodes(cartan_matrix({'E', 6})) == std::vector<int>{0, 5});
  CHECK(hermitian_nodes(cartan_matrix({'E', 7})) == std::vector<int>{6});
  CHECK(hermitian_nodes(cartan_matrix({'E', 8})).empty());
  CHECK(hermitian_nodes(cartan_matrix({'F', 4})).empty());
  CHECK(hermitian_nodes(cartan_matrix({'G', 2})).empty());
  CHECK_THROWS_AS(HermitianPair(FiniteType{'E', 8}, 0), Error);
  CHECK_THROWS_AS(HermitianPair(FiniteType{'B', 3}, 2), Error);
}

TEST_CASE("Harish-Chandra cascades") {
  HermitianPair a3({'A', 3}, 1);
  CHECK(as_set(harish_chandra_cascade(a3)) == std::set<RootVector>{rv({0, 1, 0}), rv({1, 1, 1})});
  HermitianPair c3({'C', 3}, 2);
  // 2 e3, 2 e2, 2 e1
  CHECK(as_set(harish_chandra_cascade(c3)) == std::set<RootVector>{rv({0, 0, 1}), rv({0, 2, 1}), rv({2, 2, 1})});
  for (int n = 2; n <= 7; ++n) CHECK(harish_chandra_cascade(HermitianPair({'B', n}, 0)).size() == 2);
  for (int n = 1; n <= 7; ++n)
    for (int q = 0; q < n; ++q) CHECK(int(harish_chandra_cascade(HermitianPair({'A', n}, q)).size()) == std::min(q + 1, n - q));
}

TEST_CASE("cascades agree with the bottom-up construction and the table") {
  for (auto& [t, q] : pairs_up_to(8)) {
    HermitianPair p(t, q);
    auto c = harish_chandra_cascade(p);
    CHECK_MESSAGE(as_set(c) == as_set(bottom_up_cascade(p)), t.name());
    CHECK(int(c.size()) == hermitian_table_rank(t, q));
    for (auto& b : c) CHECK(p.is_long(b));
    bool in_max = false;
    for (auto& b : p.ort_max()) in_max = in_max || as_set(b) == as_set(c);
    CHECK(in_max);
  }
}

TEST_CASE("antichain reduction examples") {
  HermitianPair a3({'A', 3}, 1);
  OrtSubset b{rv({0, 1, 0}), rv({1, 1, 1})};
  CHECK(as_set(antichain_below(a3, b)) == std::set<RootVector>{rv({1, 1, 0}), rv({0, 1, 1})});
  OrtSubset anti{rv({1, 1, 0}), rv({0, 1, 1})};
  CHECK(as_set(antichain_below(a3, anti)) == as_set(anti));

  HermitianPair c3({'C', 3}, 2);
  auto full = harish_chandra_cascade(c3);
  CHECK(c3.type(full) == std::pair<int, int>{0, 3});
  auto a = antichain_below(c3, full);
  CHECK(c3.type(a) == std::pair<int, int>{1, 1});
  CHECK(c3.is_antichain(a));
  CHECK(c3.vdash(a, full));
}

TEST_CASE("antichain reduction against exhaustive search") {
  for (auto& [t, q] : pairs_up_to(5)) {
    HermitianPair p(t, q);
    for (auto& b : p.ort_subsets()) {
      auto a = antichain_below(p, b);
      auto [h, k] = p.type(b);
      std::pair<int, int> want{h + k / 2, k - 2 * (k / 2)};
      size_t size = p.simply_laced() ? b.size() : size_t(want.first + want.second);
      bool found = b.empty();
      for (auto& c : antichains_below(p, b, size)) {
        bool right = c.size() == size && (p.simply_laced() || p.type(c) == want);
        found = found || right;
      }
      CHECK_MESSAGE(found, t.name());
      CHECK(p.is_antichain(a));
      CHECK(p.is_orthogonal(a));
      CHECK(p.vdash(a, b));
      if (p.simply_laced())
        CHECK(a.size() == b.size());
      else
        CHECK(p.type(a) == want);
    }
  }
}

TEST_CASE("tube type") {
  CHECK(is_tube_type(HermitianPair({'A', 3}, 1)));
  CHECK(!is_tube_type(HermitianPair({'A', 3}, 0)));
  CHECK(is_tube_type(HermitianPair({'E', 7}, 6)));
  CHECK(!is_tube_type(HermitianPair({'E', 6}, 0)));
  for (int n = 2; n <= 6; ++n) CHECK(is_tube_type(HermitianPair({'B', n}, 0)));
  for (int n = 3; n <= 6; ++n) CHECK(is_tube_type(HermitianPair({'C', n}, n - 1)));
  for (int n = 4; n <= 7; ++n) {
    CHECK(is_tube_type(HermitianPair({'D', n}, 0)));
    CHECK(is_tube_type(HermitianPair({'D', n}, n - 1)) == (n % 2 == 0));
  }
  for (int n = 1; n <= 7; ++n)
    for (int q = 0; q < n; ++q) CHECK(is_tube_type(HermitianPair({'A', n}, q)) == (2 * (q + 1) == n + 1));
}

TEST_CASE("the unique maximal antichain") {
  CHECK(as_set(unique_max_antichain(HermitianPair({'A', 3}, 1))) == std::set<RootVector>{rv({1, 1, 0}), rv({0, 1, 1})});
  // e1 + e3 and 2 e2
  CHECK(as_set(unique_max_antichain(HermitianPair({'C', 3}, 2))) == std::set<RootVector>{rv({1, 1, 1}), rv({0, 2, 1})});
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> e1(n, 1);
    CHECK(as_set(unique_max_antichain(HermitianPair({'B', n}, 0))) == std::set<RootVector>{rv(e1)});
  }
  CHECK_THROWS_AS(unique_max_antichain(HermitianPair({'A', 3}, 0)), Error);
}

TEST_CASE("closure antichains single out tube type") {
  for (auto& [t, q] : pairs_up_to(6)) {
    HermitianPair p(t, q);
    auto ca = closure_antichains(p);
    if (!is_tube_type(p)) {
      CHECK(ca.size() != 1);
      continue;
    }
    REQUIRE(ca.size() == 1);
    int count = 0;
    for (auto& b : p.ort_max()) {
      count += p.is_antichain(b);
      auto up = as_set(p.up_closure(b)), down = as_set(p.down_closure(b));
      for (auto& x : ca[0]) {
        CHECK(up.count(x));
        CHECK(down.count(x));
      }
    }
    CHECK(count == 1);
  }
}

TEST_CASE("maximal orthogonal subsets") {
  for (auto& [t, q] : pairs_up_to(6)) {
    HermitianPair p(t, q);
    int r = hermitian_table_rank(t, q);
    auto all = p.ort_subsets();
    auto mx = p.ort_max();
    std::set<std::set<RootVector>> mxs;
    for (auto& b : mx) mxs.insert(as_set(b));
    for (auto& b : all) {
      auto [h, k] = p.type(b);
      bool maximal = p.simply_laced() ? int(b.size()) == r : 2 * h + k == r;
      CHECK_MESSAGE(maximal == (mxs.count(as_set(b)) > 0), t.name());
    }
  }
}

TEST_CASE("short roots as half sums") {
  HermitianPair c2({'C', 2}, 1);
  OrtSubset s{rv({2, 1}), rv({0, 1})};
  auto [g, h] = short_root_decomposition(c2, rv({1, 1}), s);
  CHECK(std::set<RootVector>{g, h} == as_set(s));
  HermitianPair c3({'C', 3}, 2);
  auto full = harish_chandra_cascade(c3);
  auto [x, y] = short_root_decomposition(c3, rv({0, 1, 1}), full);
  CHECK(std::set<RootVector>{x, y} == std::set<RootVector>{rv({0, 2, 1}), rv({0, 0, 1})});
  HermitianPair a3({'A', 3}, 1);
  CHECK_THROWS_AS(short_root_decomposition(a3, rv({0, 1, 0}), harish_chandra_cascade(a3)), Error);
  for (int n = 3; n <= 6; ++n) {
    HermitianPair p({'C', n}, n - 1);
    auto m = harish_chandra_cascade(p);
    for (auto& b : p.phi1plus())
      if (!p.is_long(b)) {
        auto [u, v] = short_root_decomposition(p, b, m);
        CHECK(u != v);
        CHECK(u + v == 2 * b);
      }
  }
}

TEST_CASE("longest element") {
  auto a3 = generate_roots(FiniteType{'A', 3});
  CHECK(longest_element_image(a3, 0) == rv({0, 0, -1}));
  CHECK(longest_element_image(a3, 1) == rv({0, -1, 0}));
  auto d5 = generate_roots(FiniteType{'D', 5});
  CHECK(longest_element_image(d5, 3) == -RootVector::unit(4));
}
