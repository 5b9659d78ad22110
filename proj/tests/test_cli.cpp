#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "cyclerad/cli/config.hpp"
#include "cyclerad/cli/run.hpp"
#include "cyclerad/io.hpp"

using namespace cyclerad;
using namespace cyclerad::cli;

namespace {

std::string data(const std::string& name) { return std::string(CYCLERAD_DATA_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const RunConfig& cfg) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig parse(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclerad");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  CLI::App app;
  return parse_args(app, static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("localize on the hollow triangle") {
  const RunConfig cfg = parse({"localize", "--complex", data("hollow_triangle.off"), "--cycle",
                               data("hollow_triangle_cycle.txt"), "-p", "1"});
  const Outcome o = invoke(cfg);
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  REQUIRE(j["results"].size() == 1);
  const Json& r = j["results"][0];
  CHECK(r["r_v"].get<double>() > 0);
  CHECK(r["r_exact"].get<double>() > 0);
  CHECK(r["cycle"].size() == 3);
  CHECK(r["interval"].is_null());
  CHECK(r["sphere"]["radius"] == r["r_exact"]);
}

TEST_CASE("basis on the figure-eight") {
  const Outcome o = invoke(parse({"basis", "--complex", data("figure_eight.off")}));
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["results"].size() == 2);
  CHECK(j["total_weight"].get<double>() == Catch::Approx(3.0));
}

TEST_CASE("persistent on the nested triangles reports intervals") {
  const Outcome o = invoke(parse({"persistent", "--points", data("perscycle_points.csv"),
                                  "--filtration", data("perscycle.flt"), "--bars", "top:2"}));
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  REQUIRE(j["results"].size() == 2);
  CHECK(j["results"][0]["interval"]["birth_value"] == 1.0);
  CHECK(j["results"][0]["interval"]["death_value"] == 4.0);
  CHECK(j["results"][1]["interval"]["death_value"] == 3.0);
}

TEST_CASE("persistent rips and lower-star sources") {
  Outcome o = invoke(parse({"persistent", "--points", data("circle.csv"), "--rips", "0.6",
                            "--maxdim", "2"}));
  REQUIRE(o.code == 0);
  Json j = Json::parse(o.out);
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["interval"]["death_index"] == "inf");
  CHECK(j["results"][0]["interval"]["death_value"] == "inf");

  o = invoke(parse({"persistent", "--complex", data("annulus.off"), "--lower-star",
                    data("annulus_height.csv")}));
  REQUIRE(o.code == 0);
  j = Json::parse(o.out);
  CHECK(j["barcode"].size() >= 1);
}

TEST_CASE("verify on the annulus stays within factor two") {
  const Outcome o = invoke(parse({"verify", "--complex", data("annulus.off"), "--cycle",
                                  data("annulus_outer_cycle.txt"), "--budget", "12"}));
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["verify"]["passed"] == true);
  for (const auto& c : j["verify"]["checks"]) CHECK(c["ratio"].get<double>() <= 2.0 + 1e-9);
}

TEST_CASE("verify over budget exits with 3") {
  RunConfig cfg = parse({"verify", "--complex", data("annulus.off"), "--cycle",
                         data("annulus_outer_cycle.txt"), "--budget", "4"});
  CHECK(invoke(cfg).code == 3);
}

TEST_CASE("input errors exit with 2 and name the file") {
  RunConfig cfg = parse({"localize", "--complex", data("annulus.off"), "--cycle",
                         data("hollow_triangle_cycle.txt")});
  const Outcome o = invoke(cfg);
  CHECK(o.code == 2);
  CHECK(o.err.find("hollow_triangle_cycle.txt:3:") != std::string::npos);
  CHECK(invoke(parse({"basis", "--complex", data("missing.off")})).code == 2);
  CHECK(invoke(parse({"persistent", "--points", data("circle.csv")})).code == 2);
  CHECK(invoke(parse({"persistent", "--points", data("circle.csv"), "--rips", "1",
                      "--filtration", data("perscycle.flt")})).code == 2);
  CHECK(invoke(parse({"basis", "--complex", data("annulus.off"), "-p", "0"})).code == 2);
  CHECK_THROWS(parse({"localize", "--bars", "top:x"}));
  CHECK_THROWS_AS(parse({"frobnicate"}), CLI::ParseError);
}

TEST_CASE("reports are identical across thread counts") {
  const auto a = invoke(parse({"basis", "--complex", data("annulus.off"), "--threads", "1"}));
  const auto b = invoke(parse({"basis", "--complex", data("annulus.off"), "--threads", "3"}));
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("subsampled sites are labelled") {
  const Outcome o = invoke(parse({"basis", "--complex", data("annulus.off"), "--sites", "0.5"}));
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["sites"]["subsampled"] == true);
  CHECK(j["sites"]["count"] == 4);
}

TEST_CASE("exported cycles read back as cycles") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cyclerad_export_test";
  fs::remove_all(dir);
  RunConfig cfg = parse({"localize", "--complex", data("annulus.off"), "--cycle",
                         data("annulus_outer_cycle.txt"), "--shorten", "--export-obj", dir.string(),
                         "--out", (dir / "report.json").string()});
  REQUIRE(invoke(cfg).code == 0);
  const EmbeddedComplex k = io::read_off(data("annulus.off"));
  const ChainVector z = io::read_cycle((dir / "cycle_0.txt").string(), k, 1);
  CHECK(z.weight() == 4);
  CHECK(fs::exists(dir / "cycle_0.obj"));
  std::ifstream report(dir / "report.json");
  const Json j = Json::parse(report);
  CHECK(j["results"][0]["edges_before"] == 4);
  CHECK(j["results"][0]["edges_after"] == 4);
  fs::remove_all(dir);
}
