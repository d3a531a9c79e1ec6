// Front end for the verification suites.  Prints the JSON report to stdout
// (or --out), human-readable progress to stderr.  Exit codes: 0 all checks
// pass, 1 some check failed, 2 configuration or usage error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qmb/report.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

qmb::SuiteReport timed_suite(const std::string& name, const qmb::RunConfig& cfg,
                             const std::string& preset) {
  const auto t0 = std::chrono::steady_clock::now();
  qmb::SuiteReport r = qmb::run_suite(name, cfg, preset);
  r.wall_seconds = seconds_since(t0);
  std::cerr << "suite " << name << ": " << (r.verdict() ? "pass" : "FAIL") << " ("
            << r.items.size() << " items, " << r.wall_seconds << " s)\n";
  return r;
}

int emit(const nlohmann::ordered_json& doc, const std::string& out_path,
         const std::string& format, const std::string& csv) {
  const std::string payload = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "config error: cannot open '" << out_path << "' for writing\n";
      return 2;
    }
    f << payload;
  }
  if (format == "csv") {
    if (csv.empty()) {
      std::cerr << "note: this suite has no norm table; CSV skipped\n";
    } else {
      const auto csv_path =
          std::filesystem::path(out_path).replace_extension("csv").string();
      std::ofstream f(csv_path, std::ios::binary);
      if (!f) {
        std::cerr << "config error: cannot open '" << csv_path << "' for writing\n";
        return 2;
      }
      f << csv;
      std::cerr << "norm table written to " << csv_path << "\n";
    }
  }
  return -1;  // no error
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for the q-deformed 2x2 matrix ball"};
  app.fallthrough();
  app.require_subcommand(1);

  qmb::RunConfig cfg;
  std::string out_path;
  std::string format = "json";
  std::string preset;

  app.add_option("--q", cfg.q, "deformation parameter, in (0,1)")->capture_default_str();
  app.add_option("--N", cfg.N, "truncation level per tensor factor")->capture_default_str();
  app.add_option("--N_rho,--Nrho", cfg.N_rho, "truncation level for boundary-family norms")
      ->capture_default_str();
  app.add_option("--pad", cfg.pad, "interior padding for sampled basis vectors")
      ->capture_default_str();
  app.add_option("--grid", cfg.grid, "points per angle circle in norm sweeps")
      ->capture_default_str();
  app.add_option("--samples", cfg.samples, "random samples per check")->capture_default_str();
  app.add_option("--deg", cfg.deg, "max degree of sampled polynomials")->capture_default_str();
  app.add_option("--matrix_size,--matrix-size", cfg.matrix_size,
                 "matrix level for norm comparisons")
      ->capture_default_str();
  app.add_option("--m", cfg.m, "dilation horizon")->capture_default_str();
  app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  app.add_option("--tol", cfg.tol, "residual tolerance")->capture_default_str();
  app.add_option("--slack", cfg.slack, "relative slack for norm comparisons")
      ->capture_default_str();
  app.add_option("--out", out_path, "write the JSON report to this path (default: stdout)");
  app.add_option("--format", format, "json | csv (csv adds the norm table next to --out)")
      ->check(CLI::IsMember({"json", "csv"}));

  for (const auto& name : qmb::suite_names()) {
    auto* sub = app.add_subcommand(name, "run the " + name + " suite");
    if (name == "relations")
      sub->add_option("--preset", preset, "restrict to a single algebra preset");
  }
  app.add_subcommand("all", "run every suite and aggregate the reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit cleanly; bad usage is a config error
  }

  try {
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  if (format == "csv" && out_path.empty()) {
    std::cerr << "config error: --format csv requires --out\n";
    return 2;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  nlohmann::ordered_json doc;
  std::string csv;
  bool pass = true;

  try {
    if (sub == "all") {
      nlohmann::ordered_json suites = nlohmann::ordered_json::array();
      for (const auto& name : qmb::suite_names()) {
        const qmb::SuiteReport r = timed_suite(name, cfg, preset);
        if (name == "isometry") csv = qmb::isometry_csv(r);
        pass = pass && r.verdict();
        suites.push_back(qmb::suite_to_json(r));
      }
      doc = nlohmann::ordered_json{{"check", "all"},
                                   {"params", qmb::config_to_json(cfg)},
                                   {"suites", suites},
                                   {"verdict", pass ? "pass" : "fail"}};
    } else {
      const qmb::SuiteReport r = timed_suite(sub, cfg, preset);
      if (sub == "isometry") csv = qmb::isometry_csv(r);
      pass = r.verdict();
      doc = qmb::suite_to_json(r);
    }
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  const int emit_err = emit(doc, out_path, format, csv);
  if (emit_err >= 0) return emit_err;

  std::cerr << "verdict: " << (pass ? "pass" : "FAIL") << "\n";
  return pass ? 0 : 1;
}
