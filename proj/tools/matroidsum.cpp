// Command-line front end: construct matroids from JSON expressions, report
// structural families, generate seeded instances, and run the property
// suite.  Exit codes: 0 success, 1 a verification check failed, 2 usage or
// input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matroid/constructions.hpp"
#include "matroid/errors.hpp"
#include "matroid/json_io.hpp"
#include "matroid/matroid.hpp"
#include "matroid/transversal.hpp"
#include "matroid/verify.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw matroid::ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw matroid::ParseError(path, e.what());
  }
}

void emit(const json& j, const std::string& path, bool pretty) {
  const std::string text = pretty ? j.dump(2) : j.dump();
  if (path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw matroid::ParseError(path, "cannot open file for writing");
  out << text << "\n";
}

std::vector<std::string> element_labels(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("e" + std::to_string(i));
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace matroid;

  CLI::App app{"semidirect sums of matroids: construction and verification"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  // construct ---------------------------------------------------------------
  auto* construct = app.add_subcommand(
      "construct", "evaluate a construction expression from JSON");
  std::string exprFile;
  std::string outFile = "-";
  construct->add_option("expr", exprFile, "expression file ('-' for stdin)")
      ->required();
  construct->add_option("out", outFile, "output file ('-' for stdout)");

  // props -------------------------------------------------------------------
  auto* props = app.add_subcommand(
      "props", "print structural families of a matroid");
  std::string matroidFile;
  std::vector<std::string> show;
  props->add_option("matroid", matroidFile, "matroid or expression file")
      ->required();
  props->add_option("--show", show, "families to print")
      ->check(CLI::IsMember({"flats", "circuits", "cyclic-flats", "separators",
                             "loops-coloops"}));

  // verify ------------------------------------------------------------------
  auto* verifyCmd = app.add_subcommand("verify", "run the property suite");
  std::string suite = "all";
  verify::CheckParams params;
  int maxN = 5;
  int jobs = 0;
  verifyCmd->add_option("--suite", suite, "'all' or a single check id");
  verifyCmd->add_option("--seed", params.seed, "master seed");
  verifyCmd->add_option("--count", params.instances, "instances per check")
      ->check(CLI::PositiveNumber);
  verifyCmd->add_option("--max-n", maxN, "largest ground set per factor")
      ->check(CLI::Range(1, 16));
  verifyCmd->add_option("--jobs", jobs, "worker threads (0 = hardware)");

  // random ------------------------------------------------------------------
  auto* random = app.add_subcommand("random", "emit one seeded matroid");
  std::uint64_t seed = 1;
  int n = 4;
  std::string source = "mixed";
  random->add_option("--seed", seed, "generator seed");
  random->add_option("--n", n, "ground set size");
  random->add_option("--source", source, "instance family")
      ->check(CLI::IsMember({"mixed", "uniform", "transversal", "matrix"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*construct) {
      Matroid m = io::eval_expression(parse_json(exprFile));
      emit(io::matroid_to_json(m), outFile, pretty);
      return 0;
    }
    if (*props) {
      Matroid m = io::eval_expression(parse_json(matroidFile));
      if (show.empty())
        show = {"flats", "circuits", "cyclic-flats", "separators",
                "loops-coloops"};
      json out;
      for (const std::string& what : show) {
        if (what == "flats")
          out["flats"] = io::family_to_json(m.ground(), flats(m));
        else if (what == "circuits")
          out["circuits"] = io::family_to_json(m.ground(), circuits(m));
        else if (what == "cyclic-flats")
          out["cyclic_flats"] = io::family_to_json(m.ground(), cyclic_flats(m));
        else if (what == "separators")
          out["separators"] = io::family_to_json(m.ground(), separators(m));
        else {
          out["loops"] = json(m.ground().labels_of(loops(m)));
          out["coloops"] = json(m.ground().labels_of(coloops(m)));
        }
      }
      out["rank"] = m.rank();
      out["size"] = m.size();
      emit(out, "-", pretty);
      return 0;
    }
    if (*verifyCmd) {
      params.max_ns = maxN;
      params.max_nt = maxN;
      std::vector<CheckReport> reports;
      if (suite == "all") {
        reports = verify::run_all(params, jobs);
      } else {
        reports.push_back(verify::run_check(suite, params));
      }
      bool ok = true;
      for (const CheckReport& r : reports) {
        std::cout << (pretty ? r.to_json().dump(2) : r.to_json().dump())
                  << "\n";
        ok = ok && r.pass;
      }
      return ok ? 0 : 1;
    }
    if (*random) {
      verify::InstanceGen gen(seed);
      auto labels = element_labels(n);
      Matroid m = source == "transversal" ? gen.transversal_on(labels)
                  : source == "uniform" ? uniform(gen.rng().range(0, n), labels)
                  : source == "matrix"  ? gen.matrix_on(labels)
                                        : gen.matroid(labels);
      emit(io::matroid_to_json(m), "-", pretty);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
