#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "p3cay/errors.hpp"
#include "p3cay/kernels.hpp"
#include "p3cay/report.hpp"

namespace {

int write_output(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << path << " for writing\n";
    return 1;
  }
  out << content;
  return out ? 0 : 1;
}

p3cay::ExportGraph parse_graph(const std::string& s) {
  if (s == "gamma") return p3cay::ExportGraph::gamma;
  if (s == "sigma") return p3cay::ExportGraph::sigma;
  return p3cay::ExportGraph::quotient;
}

int run_verify(const p3cay::SuiteConfig& cfg, const std::string& json_path) {
  const p3cay::VerificationReport rep = p3cay::run_suite(cfg);
  std::size_t passed = 0, failed = 0, skipped = 0, informational = 0;
  for (const p3cay::TimedCheck& tc : rep.checks) {
    const char* tag = tc.skipped ? "SKIP" : (tc.result.pass ? "PASS" : "FAIL");
    std::printf("[%s] %s", tag, tc.result.name.c_str());
    if (tc.informational) std::printf(" (informational)");
    if (tc.skipped) {
      std::printf(": %s\n", tc.skip_reason.c_str());
      ++skipped;
    } else {
      std::printf(" (%.1f ms)\n", tc.time_ms);
      if (tc.informational) {
        ++informational;
      } else if (tc.result.pass) {
        ++passed;
      } else {
        ++failed;
      }
      if (!tc.result.pass && !tc.informational) {
        if (!tc.result.expected.is_null())
          std::printf("       expected: %s\n", tc.result.expected.dump().c_str());
        if (!tc.result.actual.is_null())
          std::printf("       actual:   %s\n", tc.result.actual.dump().c_str());
        if (!tc.result.witness.is_null())
          std::printf("       witness:  %s\n", tc.result.witness.dump().c_str());
      }
    }
  }
  std::printf("%zu passed, %zu failed, %zu skipped, %zu informational\n", passed, failed, skipped,
              informational);
  std::printf("overall: %s\n", rep.overall_pass ? "PASS" : "FAIL");
  if (!json_path.empty()) {
    const int rc = write_output(rep.to_json().dump(1) + "\n", json_path);
    if (rc != 0) return rc;
    std::fprintf(stderr, "report written to %s\n", json_path.c_str());
  }
  return rep.overall_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graph family on the extraspecial groups of order p^3: "
               "construction, export, and property verification"};
  app.set_version_flag("--version", std::string(p3cay::kToolVersion));
  app.require_subcommand(1);

  p3cay::SuiteConfig cfg;
  std::string json_path;
  bool serial_kernels = false;
  CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("-p,--prime", cfg.p, "Odd prime parameter")->capture_default_str();
  verify->add_option("--primitive-root", cfg.t,
                     "Primitive root mod p (default: the smallest one)");
  verify
      ->add_option("--checks", cfg.check_filter,
                   "Run only checks whose name starts with one of these prefixes")
      ->delimiter(',');
  verify->add_flag("--skip-aut-search", cfg.skip_aut_search,
                   "Skip the graph automorphism searches and everything needing them");
  verify->add_flag("--force-aut-search", cfg.force_aut_search,
                   "Run the automorphism searches at p = 7 as well");
  verify->add_option("--timeout", cfg.check_timeout_seconds,
                     "Per-check soft timeout in seconds")
      ->capture_default_str();
  verify->add_flag("--serial-kernels", serial_kernels,
                   "Use the serial reference kernels instead of the parallel ones");
  verify->add_option("--json", json_path, "Write the JSON report to this file");

  int build_p = 3;
  std::string build_format = "json";
  std::string build_out;
  CLI::App* build = app.add_subcommand("build", "Construct the Cayley graph and write it");
  build->add_option("-p,--prime", build_p, "Odd prime parameter")->capture_default_str();
  build->add_option("--format", build_format, "Output format")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  build->add_option("-o,--output", build_out, "Output path (default: stdout)");

  int export_p = 3;
  std::string export_graph_name = "gamma";
  std::string export_format = "json";
  std::string export_out;
  CLI::App* exp = app.add_subcommand("export", "Write one of the constructed graphs");
  exp->add_option("-p,--prime", export_p, "Odd prime parameter")->capture_default_str();
  exp->add_option("--graph", export_graph_name, "Which graph")
      ->check(CLI::IsMember({"gamma", "sigma", "quotient"}))
      ->capture_default_str();
  exp->add_option("--format", export_format, "Output format")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  exp->add_option("-o,--output", export_out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (serial_kernels) p3cay::kernels::set_parallel(false);
      return run_verify(cfg, json_path);
    }
    if (build->parsed()) {
      const auto fmt =
          build_format == "dot" ? p3cay::ExportFormat::dot : p3cay::ExportFormat::json;
      return write_output(p3cay::export_graph(build_p, p3cay::ExportGraph::gamma, fmt), build_out);
    }
    if (exp->parsed()) {
      const auto fmt =
          export_format == "dot" ? p3cay::ExportFormat::dot : p3cay::ExportFormat::json;
      return write_output(p3cay::export_graph(export_p, parse_graph(export_graph_name), fmt),
                          export_out);
    }
  } catch (const p3cay::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
