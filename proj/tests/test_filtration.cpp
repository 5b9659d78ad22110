#include <catch2/catch_amalgamated.hpp>

#include "cyclerad/errors.hpp"
#include "cyclerad/filtration.hpp"
#include "dense_z2.hpp"
#include "fixtures.hpp"
#include "random_complex.hpp"

using namespace cyclerad;
using Catch::Approx;

TEST_CASE("filtration validation") {
  EmbeddedComplex k = testing::hollow_triangle();
  // edge 01 before vertex 1
  std::vector<SimplexId> bad_order{{0, 0}, {1, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}};
  CHECK_THROWS_AS(Filtration(k, bad_order, std::vector<double>(6, 0.0)), InputError);
  std::vector<SimplexId> order{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}};
  CHECK_NOTHROW(Filtration(k, order, std::vector<double>(6, 0.0)));
  CHECK_THROWS_AS(Filtration(k, order, {0, 0, 0, 2, 1, 3}), InputError);
  std::vector<SimplexId> repeated = order;
  repeated[5] = {1, 1};
  CHECK_THROWS_AS(Filtration(k, repeated, std::vector<double>(6, 0.0)), InputError);
}

TEST_CASE("filtration files must be closed under faces") {
  PointCloud cloud(2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(filtration_from_sequence(cloud, {{{0}, 0}, {{0, 1}, 1}}), InputError);
}

TEST_CASE("rips filtration of a unit square") {
  PointCloud cloud(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const Filtration f = rips_filtration(cloud, 1.2, 2);
  CHECK(f.complex().size(1) == 4);
  CHECK(f.complex().size(2) == 0);
  const PersistenceResult p = compute_persistence(f, 1);
  REQUIRE(p.barcode.intervals.size() == 1);
  CHECK(p.barcode.intervals[0].is_essential());
  CHECK(p.barcode.intervals[0].birth_value == Approx(1.0));

  const Filtration full = rips_filtration(cloud, 2.0, 2);
  CHECK(full.complex().size(2) == 4);
  const PersistenceResult q = compute_persistence(full, 1);
  std::vector<Interval> long_bars;
  for (const Interval& bar : q.barcode.intervals) {
    if (bar.persistence() > 0) long_bars.push_back(bar);
  }
  REQUIRE(long_bars.size() == 1);
  CHECK(long_bars[0].birth_value == Approx(1.0));
  CHECK(long_bars[0].death_value == Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(rips_filtration(cloud, 0.0, 2), std::invalid_argument);
}

TEST_CASE("lower star of a hollow triangle: one essential bar from the last edge") {
  const std::vector<double> f{0.0, 1.0, 2.0};
  const Filtration filt = lower_star_filtration(testing::hollow_triangle(), f);
  const PersistenceResult p = compute_persistence(filt, 1);
  REQUIRE(p.barcode.intervals.size() == 1);
  const Interval& bar = p.barcode.intervals[0];
  CHECK(bar.is_essential());
  CHECK(bar.birth == filt.size() - 1);
  CHECK(bar.birth_value == 2.0);
  CHECK(p.representatives[0].weight() == 3);
}

TEST_CASE("nested triangles barcode") {
  const Filtration f = testing::nested_triangles_filtration();
  const PersistenceResult p = compute_persistence(f, 1);
  std::vector<std::pair<double, double>> bars;
  for (const Interval& bar : p.barcode.intervals) {
    if (bar.persistence() > 0) bars.emplace_back(bar.birth_value, bar.death_value);
  }
  std::sort(bars.begin(), bars.end());
  CHECK(bars == std::vector<std::pair<double, double>>{{1, 4}, {2, 3}});
}

TEST_CASE("alive bars match dense betti numbers on every prefix") {
  testing::Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    EmbeddedComplex k = testing::random_complex(rng, 4 + rng.below(5), 0.5, 0.4, 40);
    const Filtration f = testing::random_filtration(rng, std::move(k));
    for (Index p = 1; p <= 1; ++p) {
      const PersistenceResult pers = compute_persistence(f, p);
      for (Index pos = 0; pos < f.size(); ++pos) {
        CHECK(pers.barcode.alive_at(pos) ==
              testing::betti(f.complex(), testing::prefix_members(f, pos), p));
      }
    }
  }
}

TEST_CASE("persistence representatives represent their bars") {
  testing::Rng rng(202);
  for (int trial = 0; trial < 40; ++trial) {
    EmbeddedComplex k = testing::random_complex(rng, 5 + rng.below(4), 0.6, 0.4, 40);
    const Filtration f = testing::random_filtration(rng, std::move(k));
    const PersistenceResult pers = compute_persistence(f, 1);
    REQUIRE(pers.representatives.size() == pers.barcode.intervals.size());
    for (Index i = 0; i < pers.barcode.intervals.size(); ++i) {
      CHECK(represents(f, pers.barcode.intervals[i], pers.representatives[i]));
    }
  }
}

TEST_CASE("site ordering puts faces first and sorts by r_v") {
  const EmbeddedComplex k = testing::annulus();
  const SiteOrdering o = site_ordering(k, Point{0.1, 0.3});
  REQUIRE(o.order.size() == k.size());
  CHECK(std::is_sorted(o.r_values.begin(), o.r_values.end()));
  std::set<std::pair<Index, Index>> seen;
  for (const SimplexId& id : o.order) {
    if (id.dim > 0) {
      for (Index f : k.facets(id.dim, id.index)) CHECK(seen.count({id.dim - 1, f}));
    }
    seen.insert({id.dim, id.index});
  }
  CHECK_THROWS(site_ordering(k, Point{0.0}));
}

TEST_CASE("essential cycles of a site ordering") {
  const EmbeddedComplex k = testing::figure_eight();
  const EssentialCycles e = essential_cycles(k, site_ordering(k, k.point(1)), 1);
  REQUIRE(e.cycles.size() == 2);
  CHECK(e.cycles[0] == testing::loop(k, {0, 1, 2}));
  CHECK(e.cycles[1] == testing::loop(k, {0, 3, 4}));
  CHECK(e.r_values[0] <= e.r_values[1]);
  for (Index i = 0; i < 2; ++i) CHECK(e.cycles[i].contains(e.kappa[i].index));
}
