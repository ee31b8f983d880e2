#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "lieab/iab.hpp"

using namespace lieab;

namespace {

RootVector rv(std::vector<int> v) { return RootVector(v); }

std::shared_ptr<const GradedRoots> graded(const std::string& spec) {
  return std::make_shared<const GradedRoots>(parse_grading(spec));
}

std::set<std::set<RootVector>> weight_sets(const IabPoset& p) {
  const auto& gr = *p.graded();
  std::set<std::set<RootVector>> out;
  for (int i = 0; i < p.size(); ++i) {
    std::set<RootVector> w;
    for (auto& r : theta(p.graded(), p[i]).weights()) w.insert(brute::bar(gr.sys(), r));
    out.insert(w);
  }
  return out;
}

}  // namespace

TEST_CASE("the rank one case") {
  auto p = enumerate_iab(graded("A1:1,1"));
  // zero, and the lines of weight alpha_1 and -alpha_1
  CHECK(p.size() == 3);
  CHECK(p[0].none());
  brute::InnerModel m({'A', 1}, {1, 1});
  CHECK(m.abelian_stable().size() == 3);
}

TEST_CASE("abelian B0-stable subspaces agree with a finite-root model") {
  for (auto& g : all_involutions(5)) {
    if (g.sys->twist() != 1) continue;
    auto gr = std::make_shared<const GradedRoots>(g);
    auto p = enumerate_iab(gr);
    brute::InnerModel m(g.sys->g_type(), g.s);
    auto want = m.abelian_stable();
    std::set<std::set<RootVector>> ws(want.begin(), want.end());
    CHECK_MESSAGE(int(ws.size()) == p.size(), g.label());
    CHECK_MESSAGE(weight_sets(p) == ws, g.label());
  }
}

TEST_CASE("search, parallel search and biconvex scan agree") {
  for (auto& g : all_involutions(6)) {
    GradedRoots gr(g);
    auto a = enumerate_minuscule_serial(gr);
    CHECK_MESSAGE(a == enumerate_minuscule_parallel(gr), g.label());
    CHECK_MESSAGE(a == enumerate_biconvex(gr), g.label());
  }
}

TEST_CASE("flip: abelian ideals of a Borel subalgebra") {
  for (auto t : std::vector<FiniteType>{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'G', 2}, {'B', 3}, {'C', 3}, {'D', 4}}) {
    GradedRoots gr(flip_grading(t));
    auto a = enumerate_minuscule_serial(gr);
    CHECK_MESSAGE(a.size() == (size_t(1) << t.n), t.name());
    CHECK(a == enumerate_biconvex(gr));
  }
}

TEST_CASE("poset structure") {
  for (auto& g : all_involutions(4)) {
    auto gr = std::make_shared<const GradedRoots>(g);
    auto p = enumerate_iab(gr);
    REQUIRE(p.size() > 0);
    CHECK(p[0].none());
    for (int i = 0; i < p.size(); ++i) {
      CHECK(p.find(p[i]) == i);
      bool contained = false;
      for (int j = 0; j < p.size(); ++j)
        if (j != i && p.leq(i, j)) contained = true;
      CHECK(p.maximal(i) == !contained);
      // every nonempty inversion set loses one element and stays minuscule
      if (i > 0) {
        bool down = false;
        for (int c : members(p[i])) {
          RootSet t = p[i];
          t.reset(c);
          if (p.find(t) >= 0) down = true;
        }
        CHECK(down);
      }
      for (int c = 0; c < gr->size1(); ++c) {
        if (p[i].test(c)) continue;
        RootSet t = p[i];
        t.set(c);
        CHECK(extends(*gr, p[i], c) == (p.find(t) >= 0));
      }
    }
  }
}

TEST_CASE("theta and its inverse") {
  for (auto& g : all_involutions(5)) {
    auto gr = std::make_shared<const GradedRoots>(g);
    auto p = enumerate_iab(gr);
    for (int i = 0; i < p.size(); ++i) {
      auto a = theta(gr, p[i]);
      CHECK(a.dim() == int(p[i].count()));
      CHECK(theta_inverse(a) == p[i]);
      CHECK(is_biconvex(*gr, gr->roots_of(p[i])));
    }
  }
  auto gr = graded("D4:0,0,1,0,0");
  CHECK(theta(gr, RootSet{}).dim() == 0);
}

TEST_CASE("random subsets are rarely biconvex, and never wrongly") {
  auto gr = graded("E6:0,0,1,0,0,0,0");
  auto p = enumerate_iab(gr);
  std::set<std::string> inside;
  for (auto& s : p.elements()) inside.insert(s.to_string());
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    RootSet s;
    int k = int(rng() % 6);
    for (int j = 0; j < k; ++j) s.set(rng() % gr->size1());
    bool biconvex = is_biconvex(*gr, gr->roots_of(s));
    CHECK(biconvex == (inside.count(s.to_string()) > 0));
  }
}

TEST_CASE("the special element of D4") {
  auto gr = graded("D4:0,0,1,0,0");
  auto p = enumerate_iab(gr);
  CHECK(p.size() == 23);
  CHECK(special_hypotheses(*gr));
  auto sc = special_case(*gr);
  CHECK(sc.p == 2);
  CHECK(sc.sigma.size() == 4);
  auto wp = special_wp(*gr);
  std::vector<RootVector> want{rv({0, 0, 1, 0, 0}), rv({1, 0, 1, 0, 0}), rv({0, 1, 1, 0, 0}), rv({0, 0, 1, 1, 0}),
                               rv({0, 0, 1, 0, 1})};
  CHECK(wp == gr->set_of(want));
  CHECK(p.find(wp) >= 0);
  CHECK(p.maximal(p.find(wp)));
  CHECK(special_antichain(*gr) == gr->set_of({rv({1, 0, 1, 0, 0}), rv({0, 1, 1, 0, 0}), rv({0, 0, 1, 1, 0}),
                                              rv({0, 0, 1, 0, 1})}));
  CHECK(abar(*gr) == wp);
  // Psi(a_p) = {-alpha_2, -(alpha_2 + alpha_i)}; alpha_0 restricts to -theta
  std::set<RootVector> psi;
  for (auto& r : theta(gr, wp).weights()) psi.insert(brute::bar(gr->sys(), r));
  CHECK(psi == std::set<RootVector>{rv({0, -1, 0, 0}), rv({-1, -1, 0, 0}), rv({0, -1, -1, 0}), rv({0, -1, 0, -1}),
                                    rv({1, 1, 1, 1})});
}

TEST_CASE("special hypotheses") {
  CHECK_THROWS_AS(special_wp(*graded("C2:0,1,0")), Error);
  CHECK_THROWS_AS(special_wp(*graded("A3:1,0,1,0")), Error);
  CHECK(!special_hypotheses(*graded("C2:0,1,0")));
  CHECK(!special_hypotheses(*graded("A3:1,0,1,0")));
  CHECK(special_hypotheses(*graded("E8:0,0,0,0,0,0,0,0,1")));
}

TEST_CASE("N(w_p) equals C^1 and the abar element is minuscule") {
  for (auto& g : all_involutions(7)) {
    auto gr = std::make_shared<const GradedRoots>(g);
    if (!special_hypotheses(*gr)) continue;
    auto wp = special_wp(*gr);
    CHECK(wp == c1_sigma(*gr));
    auto p = enumerate_iab(gr);
    CHECK_MESSAGE(p.find(wp) >= 0, g.label());
    auto ab = abar(*gr);
    CHECK_MESSAGE(p.find(ab) >= 0, g.label());
    CHECK((ab & ~wp).none());
  }
}

TEST_CASE("order-three gradings are rejected") {
  auto g = parse_grading("A2:1,1,1");
  CHECK(g.m == 3);
  GradedRoots gr(g);
  CHECK_THROWS_AS(enumerate_minuscule_serial(gr), Error);
}
