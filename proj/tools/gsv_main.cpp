#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsv/error.hpp"
#include "gsv/report.hpp"
#include "gsv/scan.hpp"
#include "gsv/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive desk-scale verifier for comonad distributive laws, "
               "coefficient structures, and duplicial operators over finite G-sets"};
  app.require_subcommand(1);

  CLI::App* check = app.add_subcommand("check", "run the suites of a scenario file");
  std::string scenario_path;
  std::vector<std::string> suites;
  int cap = -1;
  std::string report_path;
  bool serial = false, parallel = false, timing = false;
  check->add_option("scenario", scenario_path, "scenario file")->required();
  check->add_option("--suite", suites, "suite to run (repeatable; default: scenario's list)");
  check->add_option("--cap", cap, "override the level cap");
  check->add_option("--report", report_path, "write the report to this path instead of stdout");
  check->add_flag("--serial", serial, "force the serial kernels");
  check->add_flag("--parallel", parallel, "force the OpenMP kernels");
  check->add_flag("--timing", timing, "include wall-clock timing (report is no longer byte-stable)");

  CLI11_PARSE(app, argc, argv);

  if (serial) gsv::scan::mode() = gsv::scan::Mode::serial;
  if (parallel) gsv::scan::mode() = gsv::scan::Mode::parallel;

  try {
    gsv::Scenario sc = gsv::load_scenario_file(scenario_path);
    if (!suites.empty()) {
      for (const std::string& s : suites)
        if (std::find(gsv::all_suites().begin(), gsv::all_suites().end(), s) ==
            gsv::all_suites().end())
          gsv::fail(gsv::Errc::ParseError, "unknown suite '" + s + "'");
      std::vector<std::string> ordered;
      for (const std::string& s : gsv::all_suites())
        if (std::find(suites.begin(), suites.end(), s) != suites.end()) ordered.push_back(s);
      sc.suites = ordered;
    }
    if (cap > 0) sc.cap = cap;

    gsv::RunOptions opt = gsv::RunOptions::from_env();
    opt.timing = timing;
    const gsv::RunResult res = gsv::run_scenario(sc, opt);
    const std::string text = res.report.dump(2) + "\n";
    if (report_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(report_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot write report to " << report_path << "\n";
        return 2;
      }
      out << text;
    }
    return res.exit_code;
  } catch (const gsv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
