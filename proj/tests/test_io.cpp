#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "cyclerad/io.hpp"
#include "fixtures.hpp"

using namespace cyclerad;

namespace {

std::string data(const std::string& name) { return std::string(CYCLERAD_DATA_DIR) + "/" + name; }

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("OFF files load as complexes") {
  const EmbeddedComplex k = io::read_off(data("annulus.off"));
  CHECK(k.size(0) == 8);
  CHECK(k.size(1) == 16);
  CHECK(k.size(2) == 8);
  const EmbeddedComplex eight = io::read_off(data("figure_eight.off"));
  CHECK(eight.cloud().dim() == 2);
  CHECK(eight.size(1) == 6);
}

TEST_CASE("OFF errors carry line numbers") {
  std::istringstream bad_face("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n4 0 1 2 0\n");
  CHECK(error_of([&] { io::read_off(bad_face, "m.off"); }).find("m.off:6:") == 0);
  std::istringstream bad_vertex("OFF\n2 0 0\n0 0 0\n1 x 0\n");
  CHECK(error_of([&] { io::read_off(bad_vertex, "m.off"); }).find("m.off:4:") == 0);
  std::istringstream range("3 1 0\n0 0\n1 0\n0 1\n2 0 7\n");
  CHECK(error_of([&] { io::read_off(range, "m.off"); }).find("out of range") != std::string::npos);
  std::istringstream truncated("OFF\n3 1 0\n0 0 0\n");
  CHECK_THROWS_AS(io::read_off(truncated), InputError);
}

TEST_CASE("CSV points with and without a header") {
  std::istringstream with("x,y\n0,0\n1,2\n");
  CHECK(io::read_points(with).size() == 2);
  std::istringstream spaces("0 0 1\n1 2 3\n# comment\n4 5 6\n");
  const PointCloud c = io::read_points(spaces);
  CHECK(c.dim() == 3);
  CHECK(c.size() == 3);
  std::istringstream ragged("0,0\n1\n");
  CHECK(error_of([&] { io::read_points(ragged, "p.csv"); }).find("p.csv:2:") == 0);
  std::istringstream dup("0,0\n0,0\n");
  CHECK_THROWS_AS(io::read_points(dup), InputError);
}

TEST_CASE("filtration files") {
  const PointCloud cloud = io::read_points(data("perscycle_points.csv"));
  const Filtration f = io::read_filtration(data("perscycle.flt"), cloud);
  CHECK(f.size() == 25);
  CHECK(f.value(f.size() - 1) == 4.0);
  std::istringstream decreasing("1 0\n1 1\n0.5 0 1\n");
  CHECK_THROWS_AS(io::read_filtration(decreasing, cloud), InputError);
  std::istringstream open_face("0 0\n1 0 1\n");
  CHECK_THROWS_AS(io::read_filtration(open_face, cloud), InputError);
}

TEST_CASE("cycle files are validated") {
  const EmbeddedComplex k = io::read_off(data("annulus.off"));
  const ChainVector z = io::read_cycle(data("annulus_outer_cycle.txt"), k, 1);
  CHECK(z == testing::loop(k, {0, 1, 2, 3}));
  std::istringstream open("0 1\n1 2\n");
  CHECK(error_of([&] { io::read_cycle(open, k, 1, "c.txt"); }).find("not a cycle") != std::string::npos);
  std::istringstream missing("0 2\n");
  CHECK(error_of([&] { io::read_cycle(missing, k, 1, "c.txt"); }).find("c.txt:1:") == 0);
  std::istringstream twice("0 1\n1 0\n");
  CHECK_THROWS_AS(io::read_cycle(twice, k, 1), InputError);
}

TEST_CASE("scalar columns") {
  const auto f = io::read_scalars(data("annulus_height.csv"));
  CHECK(f.size() == 8);
  CHECK_THROWS_AS(io::read_scalars(data("annulus_height.csv"), 3), InputError);
  CHECK_THROWS_AS(io::read_scalars(data("no_such_file.csv")), InputError);
}
