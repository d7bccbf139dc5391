// Command-line front end. Exit codes: 0 all checks passed, 1 a check failed,
// 2 usage or internal error, 3 malformed input, 4 unusable window. All report
// content goes to stdout and is byte-deterministic for a fixed seed; timing
// goes to stderr.

#include "hvlie/algebra.hpp"
#include "hvlie/families.hpp"
#include "hvlie/fock.hpp"
#include "hvlie/solver.hpp"
#include "hvlie/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

using hvlie::Suite;
using Json = nlohmann::ordered_json;

struct Output {
  bool json = false;
  std::string command;
  std::uint64_t seed = 0;
};

void emit_json(const Output& out, const std::string& report_json) {
  Json j;
  j["schema"] = "hvlie/1";
  j["command"] = out.command;
  j["seed"] = out.seed;
  j["report"] = Json::parse(report_json);
  std::cout << j.dump() << "\n";
}

int emit_suite(const Output& out, const Suite& suite) {
  if (out.json) {
    emit_json(out, hvlie::to_json_string(suite));
  } else {
    std::cout << "suite: " << suite.name << "\n";
    for (const auto& c : suite.checks) {
      std::cout << (c.pass ? "  [PASS] " : "  [FAIL] ") << c.name;
      if (!c.witness.empty()) std::cout << " :: " << c.witness;
      std::cout << "\n";
    }
    for (const auto& n : suite.notes) std::cout << "  note: " << n << "\n";
    std::cout << "result: " << (suite.all_pass() ? "PASS" : "FAIL") << "\n";
  }
  std::cerr << "elapsed " << suite.elapsed_seconds << "s\n";
  return suite.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for a twisted Heisenberg-Virasoro algebra and its weight modules"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config");

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  std::uint64_t seed = 20240817;
  app.add_option("--seed", seed, "seed for randomized samples")
      ->envname("HVLIE_SEED")
      ->capture_default_str();

  auto* sc_algebra = app.add_subcommand("verify-algebra", "bracket axioms and structure constants");
  std::int64_t alg_range = 8, alg_jacobi = 6;
  bool alg_selftest = false;
  sc_algebra->add_option("--range", alg_range, "index bound for pair checks")->capture_default_str();
  sc_algebra->add_option("--jacobi-range", alg_jacobi, "index bound for triple checks")
      ->capture_default_str();
  sc_algebra->add_flag("--self-test", alg_selftest, "inject the cocycle defect; the run must fail");

  auto* sc_boson = app.add_subcommand("verify-boson", "oscillator commutators and the representation");
  std::int64_t boson_range = 4, boson_cap = 3;
  bool boson_selftest = false;
  sc_boson->add_option("--index-range", boson_range, "bound on generator indices")
      ->capture_default_str();
  sc_boson->add_option("--degree-cap", boson_cap, "bound on test-state length")->capture_default_str();
  sc_boson->add_flag("--self-test", boson_selftest, "inject the anomaly sign defect; the run must fail");

  auto* sc_families = app.add_subcommand("verify-families", "bracket compatibility of the module tables");
  std::int64_t fam_N = 12, fam_G = 5;
  bool fam_selftest = false;
  sc_families->add_option("-N,--weights", fam_N, "weight index bound")->capture_default_str();
  sc_families->add_option("-G,--generators", fam_G, "generator index bound")->capture_default_str();
  sc_families->add_flag("--self-test", fam_selftest, "inject the action sign defect; the run must fail");

  auto* sc_simplicity = app.add_subcommand("verify-simplicity", "invariant-subspace scan vs the criterion");
  std::int64_t simp_N = 10, simp_G = 3;
  sc_simplicity->add_option("-N,--weights", simp_N, "weight index bound")->capture_default_str();
  sc_simplicity->add_option("-G,--generators", simp_G, "generator index bound")->capture_default_str();

  auto* sc_scan = app.add_subcommand("scan-submodules", "invariant-subspace scan of one module");
  std::string scan_module;
  std::int64_t scan_N = 10, scan_G = 3;
  sc_scan->add_option("--module", scan_module, "module, e.g. \"A[a=2,b=1,c=0]\"")->required();
  sc_scan->add_option("-N,--weights", scan_N, "weight index bound")->capture_default_str();
  sc_scan->add_option("-G,--generators", scan_G, "generator index bound")->capture_default_str();

  auto* sc_inter = app.add_subcommand("check-intertwiners", "isomorphism witnesses and negative controls");
  std::int64_t int_N = 12, int_G = 4;
  sc_inter->add_option("-N,--weights", int_N, "weight index bound")->capture_default_str();
  sc_inter->add_option("-G,--generators", int_G, "generator index bound")->capture_default_str();

  auto* sc_classify = app.add_subcommand("classify", "solve one case cell, or the whole grid");
  std::string classify_case;
  bool classify_grid = false;
  std::int64_t cls_N = 12, cls_G = 3;
  sc_classify->add_option("--case", classify_case, "case cell, e.g. \"I[a=1/3,b=5]\"");
  sc_classify->add_flag("--grid", classify_grid, "run the standard cells at two windows");
  sc_classify->add_option("-N,--weights", cls_N, "weight index bound")->capture_default_str();
  sc_classify->add_option("-G,--generators", cls_G, "generator index bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  out.json = format == "json";
  out.seed = seed;

  try {
    if (app.got_subcommand(sc_algebra)) {
      out.command = "verify-algebra";
      auto mut = alg_selftest ? hvlie::Mutation::BracketCocycle : hvlie::Mutation::None;
      return emit_suite(out, hvlie::verify_algebra(alg_range, alg_jacobi, mut));
    }
    if (app.got_subcommand(sc_boson)) {
      out.command = "verify-boson";
      auto mut = boson_selftest ? hvlie::Mutation::PhiSign : hvlie::Mutation::None;
      return emit_suite(out, hvlie::verify_boson(boson_range, boson_cap, mut));
    }
    if (app.got_subcommand(sc_families)) {
      out.command = "verify-families";
      auto mut = fam_selftest ? hvlie::Mutation::FamilyActionSign : hvlie::Mutation::None;
      return emit_suite(out, hvlie::verify_families(fam_N, fam_G, seed, mut));
    }
    if (app.got_subcommand(sc_simplicity)) {
      out.command = "verify-simplicity";
      return emit_suite(out, hvlie::verify_simplicity(simp_N, simp_G));
    }
    if (app.got_subcommand(sc_scan)) {
      out.command = "scan-submodules";
      hvlie::ModuleSpec spec = hvlie::parse_module_spec(scan_module);
      hvlie::ScanReport report = hvlie::submodule_scan(spec, scan_N, scan_G);
      bool agree = true;
      if (spec.tag == hvlie::FamilyTag::Aabc) {
        agree = hvlie::simplicity_predicate(spec) == report.sets.empty();
      }
      if (out.json) {
        emit_json(out, hvlie::to_json_string(spec, report));
      } else {
        std::cout << "module: " << hvlie::to_text(spec) << "\n";
        std::cout << "core window: [" << (-report.N + report.G) << ", "
                  << (report.N - report.G) << "]\n";
        std::cout << "proper invariant sets: " << report.sets.size() << "\n";
        for (const auto& s : report.sets) {
          std::cout << "  {";
          for (std::size_t i = 0; i < s.indices.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << s.indices[i];
          }
          std::cout << "}" << (s.boundary ? " (boundary-truncated)" : "") << "\n";
        }
        if (spec.tag == hvlie::FamilyTag::Aabc) {
          std::cout << "criterion: " << (hvlie::simplicity_predicate(spec) ? "simple" : "not simple")
                    << (agree ? " (scan agrees)" : " (SCAN DISAGREES)") << "\n";
        }
      }
      return agree ? 0 : 1;
    }
    if (app.got_subcommand(sc_inter)) {
      out.command = "check-intertwiners";
      return emit_suite(out, hvlie::check_intertwiners(int_N, int_G));
    }
    if (app.got_subcommand(sc_classify)) {
      out.command = "classify";
      if (classify_grid == !classify_case.empty()) {
        // exactly one of --case / --grid
        std::cerr << "classify needs exactly one of --case or --grid\n";
        return 2;
      }
      if (classify_grid) {
        return emit_suite(out, hvlie::classify_suite(seed, 8, 2, cls_N, cls_G));
      }
      hvlie::VirCase vcase = hvlie::parse_vir_case(classify_case);
      try {
        hvlie::ClassificationReport report = hvlie::classify(vcase, cls_N, cls_G, seed);
        if (out.json) {
          emit_json(out, hvlie::to_json_string(report));
        } else {
          std::cout << "case: " << hvlie::to_text(vcase) << "\n";
          std::cout << "window: N = " << report.window.N << ", G = " << report.window.G << "\n";
          std::cout << "rank " << report.rank << ", solution dimension " << report.linear_dim
                    << "\n";
          std::cout << "lines:\n";
          for (const auto& spec : report.families) {
            std::cout << "  " << hvlie::to_text(spec) << "\n";
          }
          std::cout << "probes checked: " << report.probes.size() << "\n";
          std::cout << "mixed-sum violation witnesses: " << report.violations.size() << "\n";
        }
        return 0;
      } catch (const hvlie::ClassificationError& e) {
        std::cout << "classification failed: " << e.what() << "\n";
        return 1;
      }
    }
  } catch (const hvlie::WindowError& e) {
    std::cerr << "window error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
