#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>

#include "lieab/suites.hpp"

using namespace lieab;

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(LIEAB_BIN) + " " + args + " >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(st));
  return WEXITSTATUS(st);
}

SweepConfig rank(int r, int jobs = 0) {
  SweepConfig c;
  c.max_rank = r;
  c.jobs = jobs;
  return c;
}

}  // namespace

TEST_CASE("suite ids") {
  CHECK(canonical_suite("73") == "cor73");
  CHECK(canonical_suite("MT") == "mt");
  CHECK(canonical_suite("P63") == "p63");
  CHECK(canonical_suite("antichain") == "antichain");
  CHECK(!canonical_suite("nonsense"));
  for (auto& id : suite_ids()) CHECK(canonical_suite(id) == id);
  CHECK_THROWS_AS(run_suite("nonsense", rank(2)), Error);
}

TEST_CASE("sweep configuration") {
  CHECK_THROWS_AS(validate(rank(0)), Error);
  SweepConfig bad = rank(3);
  bad.types = {"X"};
  CHECK_THROWS_AS(validate(bad), Error);
  bad.types = {"D2"};
  CHECK_THROWS_AS(validate(bad), Error);
  SweepConfig ok = rank(4);
  ok.types = {"D", "A2"};
  CHECK_NOTHROW(validate(ok));

  auto one = sweep_gradings(rank(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].spec() == "A1:1,1");

  // B2 and C2 are one algebra, as are A3 and D3
  auto ts = sweep_types(rank(3));
  int b2 = 0, d3 = 0;
  for (auto& t : ts) {
    b2 += (t.series == 'B' || t.series == 'C') && t.n == 2;
    d3 += t.series == 'D' && t.n == 3;
  }
  CHECK(b2 == 1);
  CHECK(d3 == 0);
  for (auto& [t, q] : hermitian_pairs(rank(4))) CHECK(t.n <= 4);
}

TEST_CASE("the atlas is deterministic and contains the special D4 grading") {
  auto a = atlas_json(rank(4, 1));
  auto b = atlas_json(rank(4, 4));
  CHECK(a.dump() == b.dump());
  bool found = false;
  for (auto& g : a["gradings"]) {
    if (g["grading"] != "D4:0,0,1,0,0") continue;
    found = true;
    CHECK(g["count"] == 23);
    CHECK(g["special"] == true);
    CHECK(g["abar_is_special"] == true);
    int non = 0;
    for (auto& s : g["subalgebras"]) non += s["spherical"] == false;
    CHECK(non >= 1);
  }
  CHECK(found);
  auto c = classify_json(rank(3, 2));
  CHECK(c.is_array());
  CHECK(!c.empty());
  for (auto& r : c) {
    CHECK(r.contains("grading"));
    CHECK(r.contains("heights"));
    CHECK(r.contains("spherical"));
  }
}

TEST_CASE("orbits and hermitian records") {
  auto o = orbits_json(parse_grading("A1:1,1"), 1);
  CHECK(o["orbits"].size() == 2);
  CHECK_THROWS_AS(orbits_json(parse_grading("A1:1,1"), 7), Error);
  auto h = hermitian_json({'A', 3}, 1, true, true);
  CHECK(h["rank"] == 2);
  CHECK(h["tube"] == true);
  CHECK(h["table_rank"] == 2);
}

TEST_CASE("exit codes") {
  CHECK(run("verify p63 --max-rank 4 -q") == 0);
  CHECK(run("verify mt --max-rank 4 -q") == 0);
  CHECK(run("verify nonsense") == 2);
  CHECK(run("verify mt --types X") == 2);
  CHECK(run("verify") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("orbits --grading A1:2,0") == 2);
  CHECK(run("hermitian --type E8 --node 1") == 2);
  CHECK(run("hermitian --type A3 --node 2") == 0);
  CHECK(run("dot --type F4") == 0);
  CHECK(run("dot --affine 'A5^(2)'") == 0);
  CHECK(run("dot") == 2);
  CHECK(run("atlas --max-rank 2") == 0);
}
