#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "lieab/affine.hpp"

using namespace lieab;

namespace {

RootVector rv(std::vector<int> v) { return RootVector(v); }

int dim_of(const FiniteType& t) {
  auto sys = generate_roots(t);
  return int(sys.roots().size()) + t.n;
}

}  // namespace

TEST_CASE("affine systems and their null roots") {
  CHECK(build_affine({'A', 1}, 1)->labels() == std::vector<int>{1, 1});
  CHECK(build_affine({'D', 4}, 1)->labels() == std::vector<int>{1, 1, 2, 1, 1});
  CHECK(build_affine({'E', 8}, 1)->labels() == std::vector<int>{1, 2, 3, 4, 6, 5, 4, 3, 2});
  for (auto& [g, k] : twisted_pairs(8)) {
    auto sys = build_affine(g, k);
    const auto& a = sys->cartan();
    // <delta, alpha_i^vee> = 0 for every node
    for (int i = 0; i < a.rank(); ++i) {
      int t = 0;
      for (int j = 0; j < a.rank(); ++j) t += a(i, j) * sys->labels()[j];
      CHECK_MESSAGE(t == 0, sys->name());
    }
    auto cls = classify_gcm(a);
    CHECK(cls.kind == DiagramClass::Kind::Affine);
    CHECK_MESSAGE(cls.name == sys->name(), std::string(sys->name() + " vs " + cls.name));
    CHECK(sys->labels()[0] == (k == 2 && g.series == 'A' && g.n % 2 == 0 ? 2 : 1));
  }
  CHECK_THROWS_AS(build_affine({'B', 3}, 2), Error);
  CHECK_THROWS_AS(build_affine({'A', 3}, 3), Error);
}

TEST_CASE("gradings") {
  auto a1 = parse_grading("A1:1,1");
  CHECK(a1.m == 2);
  CHECK(a1.pi0.empty());

  auto d4 = parse_grading("D4:0,0,1,0,0");
  CHECK(d4.m == 2);
  CHECK(d4.pi0 == std::vector<int>{0, 1, 3, 4});
  CHECK(d4.pi1 == std::vector<int>{2});
  CHECK(d4.level(RootVector::unit(0)) == 0);
  CHECK(d4.level(rv({1, 0, 1, 0, 0})) == 1);
  CHECK(d4.level(d4.sys->delta()) == 2);

  auto a3 = parse_grading("A3:1,0,1,0");
  CHECK(a3.m == 2);
  CHECK(a3.pi1 == std::vector<int>{0, 2});

  CHECK_THROWS_AS(parse_grading("A1:2,0"), Error);
  CHECK_THROWS_AS(parse_grading("A3:1,0"), Error);
  CHECK_THROWS_AS(parse_grading("nonsense"), Error);
  CHECK_THROWS_AS(GradedRoots(d4, 1), Error);
}

TEST_CASE("grading specs round-trip") {
  for (auto& g : all_involutions(7)) {
    auto h = parse_grading(g.spec());
    CHECK(h.s == g.s);
    CHECK(h.sys->name() == g.sys->name());
    CHECK(h.m == 2);
  }
  auto f = parse_grading("flip:B3");
  CHECK(f.flip);
  CHECK(parse_grading(f.spec()).flip);
}

TEST_CASE("inner involution classes match a count of Kac coordinates") {
  for (auto& [g, k] : twisted_pairs(8)) {
    if (k != 1) continue;
    auto sys = build_affine(g, 1);
    int want = brute::involution_classes(sys->cartan(), sys->labels());
    CHECK_MESSAGE(int(involutions(g, 1).size()) == want, g.name());
  }
  // sl_n: s(gl_p + gl_q), p <= q
  for (int n = 1; n <= 8; ++n) CHECK(int(involutions({'A', n}, 1).size()) == (n + 1) / 2);
}

TEST_CASE("outer involutions exist exactly for A_n (n >= 2), D_n and E6") {
  for (auto& [g, k] : twisted_pairs(8)) {
    if (k != 2) continue;
    auto v = involutions(g, 2);
    CHECK(!v.empty());
    for (auto& d : v) CHECK(d.m == 2);
  }
}

TEST_CASE("real roots in a level window") {
  auto a1 = build_affine({'A', 1}, 1);
  CHECK(real_roots_up_to_level(*a1, 0).size() == 2);
  CHECK(real_roots_up_to_level(*a1, 1).size() == 6);
  auto d4 = build_affine({'D', 4}, 1);
  CHECK(real_roots_up_to_level(*d4, 0).size() == 24);
  CHECK(real_roots_up_to_level(*d4, 1).size() == 72);
}

TEST_CASE("isotropy weights of inner involutions agree with the finite model") {
  for (auto& g : all_involutions(6)) {
    if (g.sys->twist() != 1) continue;
    GradedRoots gr(g);
    brute::InnerModel m(g.sys->g_type(), g.s);
    std::set<RootVector> phi1, want1(m.phi1.begin(), m.phi1.end());
    for (auto& r : gr.phi1()) phi1.insert(brute::bar(*g.sys, r));
    CHECK_MESSAGE(phi1 == want1, g.label());
    CHECK(gr.size0() + gr.size1() == int(m.sys.roots().size()));
    CHECK(gr.zero_mult(0) == g.sys->finite_rank());
    CHECK(gr.zero_mult(1) == 0);
  }
}

TEST_CASE("dimensions add up for every involution") {
  for (auto& g : all_involutions(7)) {
    GradedRoots gr(g);
    int dim = gr.size0() + gr.size1() + gr.zero_mult(0) + gr.zero_mult(1);
    CHECK_MESSAGE(dim == dim_of(g.sys->g_type()), g.label());
  }
  for (char c : std::string("ABG")) {
    FiniteType t{c, c == 'A' ? 3 : 2};
    GradedRoots gr(flip_grading(t));
    CHECK(gr.size0() + gr.zero_mult(0) == dim_of(t));
    CHECK(gr.size1() + gr.zero_mult(1) == dim_of(t));
  }
}

TEST_CASE("level-one weights have unique lifts and negatives") {
  for (auto& g : all_involutions(5)) {
    GradedRoots gr(g);
    for (int i = 0; i < gr.size1(); ++i) {
      CHECK(gr.level(gr.phi1()[i]) == 1);
      CHECK(gr.index1(gr.phi1()[i]) == i);
      int n = gr.neg1(i);
      REQUIRE(n >= 0);
      CHECK(gr.neg1(n) == i);
      CHECK(gr.weight_key(gr.phi1()[n]) == -gr.weight_key(gr.phi1()[i]));
    }
  }
}

TEST_CASE("biconvex sets") {
  GradedRoots gr(parse_grading("D4:0,0,1,0,0"));
  CHECK(is_biconvex(gr, {}));
  std::vector<RootVector> wp{rv({0, 0, 1, 0, 0}), rv({1, 0, 1, 0, 0}), rv({0, 1, 1, 0, 0}), rv({0, 0, 1, 1, 0}),
                             rv({0, 0, 1, 0, 1})};
  CHECK(is_biconvex(gr, wp));
  CHECK(!is_biconvex(gr, {rv({1, 0, 1, 0, 0})}));
}
