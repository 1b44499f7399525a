#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "p3cay/report.hpp"

using namespace p3cay;

namespace {

const TimedCheck* find_check(const VerificationReport& rep, const std::string& name) {
  for (const TimedCheck& tc : rep.checks) {
    if (tc.result.name == name) return &tc;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("full suite at p = 3") {
  SuiteConfig cfg;
  const VerificationReport rep = run_suite(cfg);
  CHECK(rep.overall_pass);
  CHECK(rep.p == 3);
  CHECK(rep.t == 2);
  CHECK(rep.schema_version == kSchemaVersion);

  std::size_t skipped = 0;
  std::set<std::string> names;
  for (const TimedCheck& tc : rep.checks) {
    if (tc.skipped) ++skipped;
    CHECK(names.insert(tc.result.name).second);  // names are unique
    if (!tc.skipped && !tc.informational) CHECK(tc.result.pass);
  }
  CHECK(skipped == 0);

  for (const char* name :
       {"group.relations", "group.order_p2_subgroups", "cayley.build", "gamma.spheres",
        "normalizer.two_distance_transitive", "normalizer.distance3_split", "aut.search",
        "aut.equals_normalizer", "aut.normal_cayley", "sigma.line_graph_is_gamma",
        "sigma.three_arc_regular", "quotient.normal_cover", "props.kernel_equivalence"}) {
    CAPTURE(name);
    CHECK(find_check(rep, name) != nullptr);
  }

  const TimedCheck* diam = find_check(rep, "gamma.diameter");
  REQUIRE(diam != nullptr);
  CHECK(diam->informational);

  const auto doc = rep.to_json();
  CHECK(doc["summary"]["checks"] == rep.checks.size());
  CHECK(doc["summary"]["failed"] == 0);
  CHECK(doc["overall_pass"] == true);
}

TEST_CASE("report is reproducible modulo timing") {
  SuiteConfig cfg;
  cfg.check_filter = {"group.", "cayley.", "gamma."};
  const VerificationReport a = run_suite(cfg);
  const VerificationReport b = run_suite(cfg);
  CHECK(a.to_json_without_timing().dump() == b.to_json_without_timing().dump());

  // Timing really is scrubbed.
  const auto no_time = a.to_json_without_timing();
  for (const auto& c : no_time["checks"]) CHECK(c["time_ms"] == 0.0);
}

TEST_CASE("prefix filter selects what gets recorded") {
  SuiteConfig cfg;
  cfg.check_filter = {"group."};
  const VerificationReport rep = run_suite(cfg);
  CHECK(rep.overall_pass);
  CHECK(!rep.checks.empty());
  for (const TimedCheck& tc : rep.checks) {
    CHECK(tc.result.name.rfind("group.", 0) == 0);
  }

  // A filter past the construction stage still runs the construction,
  // without recording it.
  SuiteConfig gcfg;
  gcfg.check_filter = {"gamma.girth"};
  const VerificationReport grep = run_suite(gcfg);
  CHECK(grep.overall_pass);
  REQUIRE(grep.checks.size() == 1);
  CHECK(grep.checks[0].result.name == "gamma.girth");
  CHECK(grep.checks[0].result.pass);
}

TEST_CASE("skipping the automorphism searches") {
  SuiteConfig cfg;
  cfg.skip_aut_search = true;
  cfg.check_filter = {"aut."};
  const VerificationReport rep = run_suite(cfg);
  CHECK(rep.overall_pass);  // configured skips do not fail the run
  const TimedCheck* search = find_check(rep, "aut.search");
  REQUIRE(search != nullptr);
  CHECK(search->skipped);
  CHECK(search->skip_reason.find("disabled") != std::string::npos);
}

TEST_CASE("timeouts are honest failures") {
  SuiteConfig cfg;
  cfg.check_filter = {"group.relations"};
  cfg.check_timeout_seconds = 1e-9;
  const VerificationReport rep = run_suite(cfg);
  CHECK_FALSE(rep.overall_pass);
  bool saw_timeout = false;
  for (const TimedCheck& tc : rep.checks) {
    if (tc.skipped && tc.skip_reason.rfind("timed out", 0) == 0) saw_timeout = true;
  }
  CHECK(saw_timeout);
}

TEST_CASE("configuration validation") {
  SuiteConfig bad;
  bad.p = 4;
  CHECK_THROWS_AS(run_suite(bad), ConfigError);
  bad.p = 9;
  CHECK_THROWS_AS(run_suite(bad), ConfigError);

  SuiteConfig nonroot;
  nonroot.p = 5;
  nonroot.t = 4;  // 4^2 = 16 = 1 mod 5, not a primitive root
  CHECK_THROWS_AS(run_suite(nonroot), ConfigError);

  SuiteConfig other_root;
  other_root.p = 5;
  other_root.t = 3;
  other_root.check_filter = {"group.connection_set"};
  CHECK(run_suite(other_root).overall_pass);
}

TEST_CASE("graph export") {
  const std::string gj = export_graph(3, ExportGraph::gamma, ExportFormat::json);
  const auto parsed = nlohmann::json::parse(gj);
  CHECK(parsed["n"] == 27);
  CHECK(parsed["edges"].size() == 54);

  CHECK(export_graph(3, ExportGraph::gamma, ExportFormat::dot).rfind("graph gamma {", 0) == 0);
  CHECK(nlohmann::json::parse(export_graph(3, ExportGraph::sigma, ExportFormat::json))["n"] == 18);
  CHECK(nlohmann::json::parse(export_graph(3, ExportGraph::quotient, ExportFormat::json))["n"] == 9);

  CHECK(export_graph(5, ExportGraph::sigma, ExportFormat::dot) ==
        export_graph(5, ExportGraph::sigma, ExportFormat::dot));
  CHECK_THROWS_AS(export_graph(6, ExportGraph::gamma, ExportFormat::json), ConfigError);
}
