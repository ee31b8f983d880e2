#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieab/iab.hpp"

using namespace lieab;

namespace {

RootVector rv(std::vector<int> v) { return RootVector(v); }

// p_u^+ for (A3, alpha_2), written with finite roots
struct A3 {
  HermitianPair p{FiniteType{'A', 3}, 1};
  const AbelianSubalgebra& a = p.nilradical();
  RootVector r(std::vector<int> v) const { return p.to_affine(rv(std::move(v))); }
  RootSet set(std::vector<std::vector<int>> vs) const {
    std::vector<RootVector> out;
    for (auto& v : vs) out.push_back(r(v));
    return a.gr->set_of(out);
  }
};

// pairwise orthogonal subsets by direct enumeration of all subsets
size_t count_orthogonal(const GradedRoots& gr, const RootSet& psi) {
  auto m = members(psi);
  size_t n = 0;
  for (unsigned long long mask = 0; mask < (1ull << m.size()); ++mask) {
    bool ok = true;
    for (size_t i = 0; i < m.size() && ok; ++i)
      for (size_t j = i + 1; j < m.size() && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1)) ok = gr.form(gr.phi1()[m[i]], gr.phi1()[m[j]]) == 0;
    n += ok;
  }
  return n;
}

}  // namespace

TEST_CASE("orthogonality in the (A3, alpha_2) nilradical") {
  A3 x;
  CHECK(x.a.dim() == 4);
  CHECK(is_orthogonal_pair(x.a, x.r({0, 1, 0}), x.r({1, 1, 1})));
  CHECK(!is_orthogonal_pair(x.a, x.r({0, 1, 0}), x.r({1, 1, 0})));
  CHECK(is_orthogonal_pair(x.a, x.r({1, 1, 0}), x.r({0, 1, 1})));
  CHECK_THROWS_AS(is_orthogonal_pair(x.a, x.r({0, 1, 0}), x.r({0, 1, 0})), Error);
  CHECK_THROWS_AS(is_orthogonal_pair(x.a, x.r({0, 1, 0}), x.r({1, 0, 0})), Error);
}

TEST_CASE("orbits of the (A3, alpha_2) nilradical") {
  A3 x;
  auto orbits = enumerate_orbits(x.a);
  CHECK(orbits.size() == 7);
  CHECK(orbits[0].rep.none());
  CHECK(orbits[0].dim == 0);
  int open = 0;
  for (auto& o : orbits) open += o.open;
  CHECK(open == 1);
  RootSet top = x.set({{0, 1, 0}, {1, 1, 1}});
  CHECK(open_orbit_rep(x.a) == top);
  CHECK(generic_normal_form(x.a, x.a.psi) == top);
  RootSet anti = x.set({{1, 1, 0}, {0, 1, 1}});
  CHECK(generic_normal_form(x.a, anti) == anti);
  CHECK(generic_normal_form(x.a, top) == top);
  // Psi_{alpha_2} = {alpha_1 + alpha_2, alpha_2 + alpha_3}
  CHECK(psi_S(*x.a.gr, x.set({{0, 1, 0}})) == anti);
  CHECK(is_antichain(*x.a.gr, anti));
  CHECK(!is_antichain(*x.a.gr, top));
  CHECK(minimal_elements(*x.a.gr, x.a.psi) == x.set({{0, 1, 0}}));
  // alpha_1 has level zero, so it is not a weight of the nilradical
  CHECK(x.a.gr->index1(x.r({1, 0, 0})) < 0);
}

TEST_CASE("a single weight has two orbits") {
  auto gr = std::make_shared<const GradedRoots>(parse_grading("A1:1,1"));
  RootSet one;
  one.set(0);
  auto a = make_subalgebra(gr, one);
  auto orbits = enumerate_orbits(a);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[1].dim == 1);
  CHECK(orbits[1].open);
  CHECK(open_orbit_rep(theta(gr, RootSet{})).none());
}

TEST_CASE("violations of the defining properties") {
  A3 x;
  CHECK(check_A1A2A3(x.a));
  // add the weight opposite to alpha_2
  auto gr = x.a.gr;
  RootSet bad = x.a.psi;
  bad.set(gr->neg1(gr->index1(x.r({0, 1, 0}))));
  auto c = check_A1A2A3(AbelianSubalgebra{gr, bad, std::nullopt});
  CHECK(!c);
  CHECK(c.property == "A1");
  // {alpha_2} alone is not B_0-stable
  auto d = check_A1A2A3(AbelianSubalgebra{gr, x.set({{0, 1, 0}}), std::nullopt});
  CHECK(!d);
  CHECK(d.property == "A3");
  CHECK_THROWS_AS(make_subalgebra(gr, x.set({{0, 1, 0}})), Error);
}

TEST_CASE("orbit parametrization on every abelian subalgebra") {
  for (auto& g : all_involutions(5)) {
    auto gr = std::make_shared<const GradedRoots>(g);
    auto p = enumerate_iab(gr);
    for (int i = 0; i < p.size(); ++i) {
      auto a = theta(gr, p[i]);
      CHECK(check_A1A2A3(a));
      CHECK(check_adding_roots(a));
      auto orbits = enumerate_orbits(a);
      if (a.dim() <= 14) CHECK(orbits.size() == count_orthogonal(*gr, a.psi));
      RootSet open = open_orbit_rep(a);
      int full = 0;
      for (auto& o : orbits) {
        CHECK(o.dim <= a.dim());
        CHECK((o.psiS & o.rep).none());
        CHECK((o.psiS & ~a.psi).none());
        if (o.dim == a.dim()) {
          ++full;
          CHECK(o.rep == open);
        }
        // generic elements with orthogonal support already are normal forms
        CHECK(generic_normal_form(a, o.rep) == o.rep);
      }
      CHECK_MESSAGE(full == 1, g.label());
      CHECK(generic_normal_form(a, a.psi) == open);
    }
  }
}

TEST_CASE("orthogonality tests agree") {
  for (auto& g : all_involutions(5)) {
    auto gr = std::make_shared<const GradedRoots>(g);
    auto p = enumerate_iab(gr);
    for (int i : p.maximal_elements()) {
      auto a = theta(gr, p[i]);
      auto w = a.weights();
      for (size_t x = 0; x < w.size(); ++x)
        for (size_t y = x + 1; y < w.size(); ++y) CHECK_NOTHROW(is_orthogonal_pair(a, w[x], w[y]));
    }
  }
}
