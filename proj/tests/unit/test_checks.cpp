#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "repclust/checks.hpp"

using namespace repclust;
using nlohmann::json;

TEST_SUITE("checks") {

TEST_CASE("suite names") {
  for (auto s : {Suite::Stability, Suite::ExtConsistency, Suite::Tilting, Suite::Embedding, Suite::Derived,
                 Suite::Power, Suite::All})
    CHECK(parse_suite(to_string(s)) == s);
  CHECK_FALSE(parse_suite("nonsense").has_value());
}

TEST_CASE("single suites pass on representative parameters") {
  const auto params = ModelParams::make(3, 1, 3);
  for (auto s : {Suite::Stability, Suite::ExtConsistency, Suite::Embedding, Suite::Derived}) {
    const auto reports = run_suite(s, params);
    REQUIRE_FALSE(reports.empty());
    CHECK_MESSAGE(all_passed(reports), to_json(reports).dump());
  }
  CHECK(all_passed(run_suite(Suite::Tilting, ModelParams::make(2, 2, 2))));
  CHECK(all_passed(run_suite(Suite::Power, ModelParams::make(2, 1, 1))));
}

TEST_CASE("report layout") {
  const auto reports = run_suite(Suite::Stability, ModelParams::make(2, 1, 2));
  const auto doc = to_json(reports);
  CHECK(doc.at("passed").get<bool>());
  CHECK(doc.at("report_count").get<int>() == 1);
  CHECK(doc.at("failed_count").get<int>() == 0);
  const auto& r = doc.at("reports").at(0);
  CHECK(r.at("suite") == "stability");
  CHECK(r.at("params").at("n") == 2);
  CHECK(r.at("checks").is_array());
  for (const auto& c : r.at("checks")) {
    CHECK(c.contains("name"));
    CHECK(c.contains("passed"));
  }
}

TEST_CASE("domains and guards") {
  CHECK_THROWS_AS(run_suite(Suite::Embedding, ModelParams::make(2, 1, 2)), InvalidParams);
  CHECK_THROWS_AS(run_suite(Suite::Embedding, ModelParams::make(2, 2, 3)), InvalidParams);
  CHECK_THROWS_AS(run_suite(Suite::Tilting, ModelParams::make(6, 1, 4)), BoundExceeded);
  CheckOptions force;
  force.force = true;
  CHECK(all_passed(run_suite(Suite::Tilting, ModelParams::make(2, 1, 4), force)));
  // All skips what does not apply instead of failing.
  const auto all = run_suite(Suite::All, ModelParams::make(2, 1, 2));
  for (const auto& r : all) CHECK(r.suite != "embedding");
  CHECK(all_passed(all));
}

TEST_CASE("reports are deterministic") {
  const auto a = to_json(run_suite(Suite::All, ModelParams::make(2, 1, 3))).dump();
  const auto b = to_json(run_suite(Suite::All, ModelParams::make(2, 1, 3))).dump();
  CHECK(a == b);
}

}  // TEST_SUITE

#ifdef REPCLUST_CLI_PATH

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(REPCLUST_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe.release());
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("build") {
  const auto small = run("build --n 1 --m 1 --p 1");
  CHECK(small.status == 0);
  CHECK(json::parse(small.out).at("vertices").size() == 2);
  const auto dot = run("build --n 3 --m 1 --p 3 --format dot");
  CHECK(dot.status == 0);
  CHECK(count(dot.out, "[label=") == 27);
  CHECK(dot.out.find("style=dashed") != std::string::npos);
  CHECK(run("build --n 3 --m 0 --p 1").status == 2);
  CHECK(run("build --n 3 --m 1 --p 1 --format svg").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("out path") {
  const auto path = std::filesystem::temp_directory_path() / "repclust_cli_test.json";
  std::filesystem::remove(path);
  const auto r = run("build --n 2 --m 1 --p 2 --out " + path.string());
  CHECK(r.status == 0);
  CHECK(std::filesystem::exists(path));
  std::filesystem::remove(path);
}

TEST_CASE("check") {
  const auto ext = run("check --suite ext-consistency --n 3 --m 1 --p 3");
  CHECK(ext.status == 0);
  CHECK(json::parse(ext.out).at("passed").get<bool>());
  const auto emb = run("check --suite embedding --n 2 --p 4");
  CHECK(emb.status == 0);
  CHECK(emb.out.find("vertex_map") != std::string::npos);
  CHECK(run("check --suite embedding --n 2 --p 2").status == 2);
  CHECK(run("check --suite nonsense --n 2").status == 2);
}

TEST_CASE("tilt") {
  const auto a = run("tilt --n 3 --m 1 --p 3");
  CHECK(a.status == 0);
  const auto ja = json::parse(a.out);
  CHECK(ja.at("objects").size() == 14);
  for (const auto& t : ja.at("objects")) CHECK(t.size() == 9);
  const auto b = json::parse(run("tilt --n 2 --m 2 --p 2").out);
  CHECK(b.at("objects").size() == 12);
  const auto g = run("tilt --n 1 --m 1 --p 2 --mutation-graph --format dot");
  CHECK(g.status == 0);
  CHECK(count(g.out, "[label=") == 2);
  CHECK(count(g.out, " -- ") == 1);
  CHECK(run("tilt --n 8 --m 3 --p 1").status == 3);
}

TEST_CASE("other subcommands") {
  CHECK(run("ext --n 3 --m 1 --p 3 --x 2,4,1 --y 1,3,1").status == 0);
  CHECK(run("ext --n 3 --m 1 --p 3 --x 1,6,1 --y 1,3,1").status == 2);
  CHECK(run("embed --n 2 --p 3").status == 0);
  CHECK(run("embed --n 2 --p 2").status == 2);
  CHECK(run("derived --n 3 --half-width 2").status == 0);
  CHECK(run("power --n 2").status == 0);
}

TEST_CASE("repeated runs are byte-identical") {
  for (const char* args : {"build --n 3 --m 2 --p 2", "tilt --n 2 --m 1 --p 3 --mutation-graph --format dot",
                           "check --suite all --n 2 --m 1 --p 3", "derived --n 2 --half-width 1 --format dot"}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
  }
}

}  // TEST_SUITE

#endif
