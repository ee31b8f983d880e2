// One line per acceptance criterion; exits 1 if any criterion fails or
// exceeds its wall-clock limit.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "lieab/suites.hpp"

using namespace lieab;

namespace {

struct Criterion {
  int n;
  std::string what;
  std::vector<std::string> suites;
  SweepConfig cfg;
  double limit;
};

SweepConfig sweep(int r, std::vector<std::string> types = {}) {
  SweepConfig c;
  c.max_rank = r;
  c.types = std::move(types);
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion> cs{
      {1, "Hermitian ranks, rank <= 8", {"hermitian-ranks"}, sweep(8), 10},
      {2, "antichain theorem, rank <= 6", {"antichain"}, sweep(6), 60},
      {3, "unique antichain in tube type, rank <= 6", {"unique-antichain"}, sweep(6), 60},
      {4, "orbit parametrization, rank <= 6", {"orbit-dim"}, sweep(6), 300},
      {5, "height bounds, rank <= 7", {"cor73"}, sweep(7), 300},
      {6, "five affine diagrams, rank <= 8", {"p63"}, sweep(8), 60},
      {7, "weighted Dynkin formula, rank <= 7", {"weighted-dynkin"}, sweep(7), 60},
      {8, "sphericity criterion and existence, rank <= 7", {"mt", "panyushev"}, sweep(7), 300},
      {9, "matrix oracle on sl4, sl6, so8, sp6", {"oracle"}, sweep(5, {"A3", "A5", "D4", "C3"}), 300},
      {10, "flip counts for A1-A4, B2, G2", {"flip"}, sweep(4, {"A", "B2", "G2"}), 60},
  };

  bool all = true;
  for (auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    long checked = 0;
    std::string why;
    for (auto& id : c.suites) {
      try {
        auto r = run_suite(id, c.cfg);
        checked += r.checked;
        if (!r.ok) {
          ok = false;
          why += " " + id + ": " + std::to_string(r.failures.size()) + " failures";
          if (!r.failures.empty()) why += " (" + r.failures.front() + ")";
        }
      } catch (const std::exception& e) {
        ok = false;
        why += " " + id + ": " + e.what();
      }
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit) {
      ok = false;
      why += " over the " + std::to_string(int(c.limit)) + " s limit";
    }
    if (ok && checked == 0) {
      ok = false;
      why += " nothing checked";
    }
    all = all && ok;
    std::printf("criterion %2d: %s  %s  [%ld checked, %.2f s]%s\n", c.n, ok ? "PASS" : "FAIL", c.what.c_str(), checked,
                s, why.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
