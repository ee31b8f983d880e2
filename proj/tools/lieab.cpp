#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "lieab/suites.hpp"

using namespace lieab;
using nlohmann::json;

namespace {

// usage errors exit 2, failed checks and internal errors exit 1
constexpr int kUsage = 2;

void emit(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << j.dump(2) << "\n";
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << text;
}

void add_sweep_flags(CLI::App* c, SweepConfig& cfg) {
  c->add_option("--max-rank", cfg.max_rank, "largest rank of g")->check(CLI::PositiveNumber);
  c->add_option("--types", cfg.types, "series letters or types, e.g. A,D4")->delimiter(',');
  c->add_option("--level-bound", cfg.level_bound, "root window |level| <= L");
  c->add_option("--jobs", cfg.jobs, "worker threads (0 = all)");
}

std::string sweep_dot(const SweepConfig& cfg) {
  std::string out;
  for (auto& g : sweep_gradings(cfg)) out += to_dot(g.sys->cartan(), g.label(), g.s, 0);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abelian subalgebras of symmetric pairs: enumeration, orbits and sphericity"};
  app.require_subcommand(1);
  SweepConfig cfg;
  std::string json_out, dot_out;

  auto* atlas = app.add_subcommand("atlas", "every grading with its abelian subalgebras and verdicts");
  add_sweep_flags(atlas, cfg);
  atlas->add_option("--json", json_out, "output file (default stdout)");
  atlas->add_option("--dot", dot_out, "also write the affine diagrams with their marks");

  auto* classify = app.add_subcommand("classify", "one record per (grading, subalgebra)");
  add_sweep_flags(classify, cfg);
  classify->add_option("--json", json_out, "output file (default stdout)");

  std::string theorem;
  bool quiet = false;
  auto* verify = app.add_subcommand("verify", "run a theorem-verification suite");
  add_sweep_flags(verify, cfg);
  verify->add_option("theorem,--theorem", theorem, "suite id")->required();
  verify->add_flag("-q,--quiet", quiet, "print only the summary line");
  verify->add_option("--json", json_out, "write the report as JSON");

  std::string grading;
  int index = 0;
  auto* orbits = app.add_subcommand("orbits", "Borel orbits in an abelian subalgebra");
  orbits->add_option("--grading", grading, "e.g. D4:0,0,1,0,0, A5^2:1,0,0,0 or flip:A2")->required();
  orbits->add_option("--subalgebra", index, "index in the enumeration (0 = zero subalgebra)");
  orbits->add_option("--level-bound", cfg.level_bound, "root window |level| <= L");
  orbits->add_option("--json", json_out, "output file (default stdout)");

  std::string type;
  int node = 0;
  bool all_ort = false, antichains = false;
  auto* herm = app.add_subcommand("hermitian", "a Hermitian pair: cascade, tube type, antichains");
  herm->add_option("--type", type, "finite type, e.g. A3")->required();
  herm->add_option("--node", node, "Bourbaki index q, 1-based")->required();
  herm->add_flag("--all-ort", all_ort, "list every orthogonal subset");
  herm->add_flag("--antichain", antichains, "antichain reductions and closure antichains");
  herm->add_option("--json", json_out, "output file (default stdout)");

  std::string affine;
  auto* dot = app.add_subcommand("dot", "Dynkin diagram in DOT");
  dot->add_option("--type", type, "finite type, e.g. F4");
  dot->add_option("--affine", affine, "affine diagram, e.g. A5^(2) or E6^(1)");
  dot->add_option("--grading", grading, "affine diagram labelled by Kac marks");
  dot->add_option("--dot", dot_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (atlas->parsed()) {
      emit(atlas_json(cfg), json_out);
      if (!dot_out.empty()) write_text(sweep_dot(cfg), dot_out);
    } else if (classify->parsed()) {
      emit(classify_json(cfg), json_out);
    } else if (verify->parsed()) {
      auto id = canonical_suite(theorem);
      if (!id) {
        std::cerr << "unknown theorem id '" << theorem << "'; known:";
        for (auto& s : suite_ids()) std::cerr << " " << s;
        std::cerr << " (aliases 73, MT, P63)\n";
        return kUsage;
      }
      validate(cfg);
      auto r = run_suite(*id, cfg);
      if (!quiet) {
        for (auto& f : r.failures) std::cout << "FAIL " << f << "\n";
        for (auto& n : r.notes) std::cout << "note " << n << "\n";
      }
      std::cout << r.id << ": " << (r.ok ? "ok" : "FAILED") << ", " << r.checked << " checked, "
                << r.failures.size() << " failures, " << r.seconds << " s\n";
      if (!json_out.empty())
        emit(json{{"suite", r.id}, {"ok", r.ok}, {"checked", r.checked}, {"failures", r.failures}, {"notes", r.notes}},
             json_out);
      return r.ok ? 0 : 1;
    } else if (orbits->parsed()) {
      emit(orbits_json(parse_grading(grading), index, cfg.level_bound), json_out);
    } else if (herm->parsed()) {
      auto t = parse_finite_type(type);
      if (node < 1 || node > t.n) throw Error(ErrorCode::InvalidArgument, "node out of range");
      emit(hermitian_json(t, node - 1, all_ort, antichains), json_out);
    } else if (dot->parsed()) {
      int given = !type.empty() + !affine.empty() + !grading.empty();
      if (given != 1) throw Error(ErrorCode::InvalidArgument, "give exactly one of --type, --affine, --grading");
      std::string text;
      if (!type.empty()) {
        text = to_dot(cartan_matrix(parse_finite_type(type)), type);
      } else if (!affine.empty()) {
        auto a = affine.find("^(1)") != std::string::npos
                     ? untwisted_affine_cartan(cartan_matrix(parse_finite_type(affine.substr(0, affine.find('^')))))
                     : twisted_affine_cartan(affine);
        text = to_dot(a, affine, {}, 0);
      } else {
        auto g = parse_grading(grading);
        text = to_dot(g.sys->cartan(), g.label(), g.s, 0);
      }
      write_text(text, dot_out);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    bool usage = e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::LevelBoundTooSmall ||
                 e.code() == ErrorCode::NotHermitian || e.code() == ErrorCode::IllegalTwist ||
                 e.code() == ErrorCode::NotCoprime;
    return usage ? kUsage : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
