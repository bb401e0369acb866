#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "skoro/oracle.hpp"
#include "skoro/value_solver.hpp"
#include "test_util.hpp"

using namespace skoro;

namespace {

PolygonalCurve curve(std::vector<Point> vs) {
  PolygonalCurve c;
  c.vertices = std::move(vs);
  return c;
}

PolygonalCurve curve1d(std::vector<double> vs) {
  PolygonalCurve c;
  for (double v : vs) c.vertices.push_back(Point{v});
  return c;
}

}  // namespace

TEST_CASE("critical_values contains the endpoint distances") {
  {
    const PolygonalCurve f = curve({Point{0, 0}, Point{1, 1}});
    const CriticalValueSet cs = critical_values(f, f, NormKind::L2);
    REQUIRE(cs.size() >= 1);
    CHECK(cs.values.front() == doctest::Approx(0.0));
  }
  {
    const PolygonalCurve f = curve({Point{0, 0}, Point{2, 0}});
    const PolygonalCurve g = curve({Point{0, 1}, Point{2, 1}});
    const CriticalValueSet cs = critical_values(f, g, NormKind::L2);
    bool has_one = false;
    for (double v : cs.values) has_one = has_one || std::abs(v - 1.0) < 1e-12;
    CHECK(has_one);
  }
}

TEST_CASE("critical_values pre-dedup counts for m_f=3, m_g=2") {
  // Complete enumeration: entries for every vertex-segment pair
  // ((m_f+1)*m_g + (m_g+1)*m_f), clamps for every pair of edge lines
  // 1 <= v1 < v2 <= m per crossing segment.
  std::mt19937_64 rng(83);
  const PolygonalCurve f = testutil::random_curve(rng, 3, 2);
  const PolygonalCurve g = testutil::random_curve(rng, 2, 2);
  const CriticalValueSet cs = critical_values(f, g, NormKind::L2);
  CHECK(cs.raw_counts[static_cast<int>(CriticalKind::endpoint)] == 2);
  CHECK(cs.raw_counts[static_cast<int>(CriticalKind::entry)] == 17);
  CHECK(cs.raw_counts[static_cast<int>(CriticalKind::hclamp)] == 6);
  CHECK(cs.raw_counts[static_cast<int>(CriticalKind::vclamp)] == 3);
}

TEST_CASE("critical_values is sorted and deduplicated") {
  std::mt19937_64 rng(89);
  for (int rep = 0; rep < 20; ++rep) {
    const NormKind norm = testutil::kAllNorms[rep % 6];
    const std::size_t dim = testutil::point_dim(norm, 2);
    const PolygonalCurve f = testutil::random_curve(rng, 4, dim);
    const PolygonalCurve g = testutil::random_curve(rng, 3, dim);
    const CriticalValueSet cs = critical_values(f, g, norm);
    for (std::size_t k = 0; k + 1 < cs.size(); ++k)
      CHECK(cs.values[k + 1] - cs.values[k] > kDefaultTol);
    CHECK(cs.values.front() >= 0.0);
  }
}

TEST_CASE("frechet_distance hand cases") {
  std::mt19937_64 rng(97);
  const PolygonalCurve f = testutil::random_curve(rng, 3, 2);
  CHECK(frechet_distance(f, f, NormKind::L2) == doctest::Approx(0.0));

  const PolygonalCurve a = curve({Point{0, 0}, Point{2, 0}});
  const PolygonalCurve b = curve({Point{0, 1}, Point{2, 1}});
  CHECK(frechet_distance(a, b, NormKind::L2) == doctest::Approx(1.0));
}

TEST_CASE("frechet_distance brackets, consistency, criticality") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> segs(1, 5);
  const double tol = kDefaultTol;
  for (int rep = 0; rep < 36; ++rep) {
    const NormKind norm = testutil::kAllNorms[rep % 6];
    const std::size_t dim = testutil::point_dim(norm, rep % 3 + 1);
    const PolygonalCurve f = testutil::random_curve(rng, segs(rng), dim, -3.0, 3.0);
    const PolygonalCurve g = testutil::random_curve(rng, segs(rng), dim, -3.0, 3.0);

    const double value = frechet_distance(f, g, norm);
    const OracleBounds bounds = oracle_frechet(f, g, norm, GridSpec{400});
    CHECK(value >= bounds.lower - 1e-9);
    CHECK(value <= bounds.upper + 1e-9);

    // Decision consistency around the value.
    if (value > 10.0 * tol)
      CHECK_FALSE(decide_frechet(f, g, value - 10.0 * tol, norm, Mode::nonbijective));
    CHECK(decide_frechet(f, g, value + 10.0 * tol, norm, Mode::nonbijective));

    // Criticality: the result is one of the candidates.
    const CriticalValueSet cs = critical_values(f, g, norm);
    bool found = false;
    for (double v : cs.values) found = found || v == value;
    CHECK(found);

    // Sandwich between endpoint distances and the max vertex distance.
    const auto vdist = [&](std::size_t i, std::size_t j) {
      Point d;
      d.coords.resize(dim);
      for (std::size_t k = 0; k < dim; ++k) d.coords[k] = f.vertex(i)[k] - g.vertex(j)[k];
      return norm_eval(norm, d);
    };
    const double ends = std::max(vdist(0, 0), vdist(f.segments(), g.segments()));
    double cellmax = 0.0;
    for (std::size_t i = 0; i <= f.segments(); ++i)
      for (std::size_t j = 0; j <= g.segments(); ++j) cellmax = std::max(cellmax, vdist(i, j));
    CHECK(value >= ends - 1e-9);
    CHECK(value <= cellmax + 1e-9);
  }
}

TEST_CASE("skorokhod_distance hand cases") {
  {
    const SampledTrace x = validate_trace({{0, {0}}, {1, {0}}});
    CHECK(skorokhod_distance(x, x, NormKind::L2) == doctest::Approx(0.0));
  }
  {
    const SampledTrace x = validate_trace({{0, {0}}, {1, {0}}});
    const SampledTrace y = validate_trace({{0, {0.5}}, {1, {0.5}}});
    for (NormKind norm : testutil::kBaseNorms)
      CHECK(skorokhod_distance(x, y, norm) == doctest::Approx(0.5));
  }
  {
    // Endpoint-forced retiming: values match under r(t) = 11t/10, and
    // bijectivity pins r(10) = 11, so the timing discrepancy 1 is optimal.
    const SampledTrace x = validate_trace({{0, {0}}, {10, {100}}});
    const SampledTrace y = validate_trace({{0, {0}}, {11, {100}}});
    for (NormKind norm : testutil::kBaseNorms)
      CHECK(skorokhod_distance(x, y, norm) == doctest::Approx(1.0).epsilon(1e-9));
    const OracleBounds b =
        oracle_frechet(lift_trace(x), lift_trace(y), NormKind::L2Skoro, GridSpec{200});
    CHECK(b.lower <= 1.0 + 0.02);
    CHECK(b.upper >= 1.0 - 0.02);
  }
}

TEST_CASE("skorokhod reduction identity") {
  std::mt19937_64 rng(103);
  for (int rep = 0; rep < 12; ++rep) {
    const NormKind base = testutil::kBaseNorms[rep % 3];
    const SampledTrace x = testutil::random_trace(rng, 4, 2);
    const SampledTrace y = testutil::random_trace(rng, 3, 2);
    CHECK(skorokhod_distance(x, y, base) ==
          frechet_distance(lift_trace(x), lift_trace(y), skoro_norm(base)));
  }
}

TEST_CASE("skorokhod metric properties on random traces") {
  std::mt19937_64 rng(107);
  const double tol = kDefaultTol;
  for (int rep = 0; rep < 10; ++rep) {
    const NormKind base = testutil::kBaseNorms[rep % 3];
    const SampledTrace x = testutil::random_trace(rng, 3, 2);
    const SampledTrace y = testutil::random_trace(rng, 3, 2);
    const SampledTrace z = testutil::random_trace(rng, 3, 2);
    CHECK(skorokhod_distance(x, x, base) == doctest::Approx(0.0).epsilon(tol));
    const double xy = skorokhod_distance(x, y, base);
    const double yx = skorokhod_distance(y, x, base);
    CHECK(xy == doctest::Approx(yx).epsilon(tol));
    const double xz = skorokhod_distance(x, z, base);
    const double yz = skorokhod_distance(y, z, base);
    CHECK(xz <= xy + yz + 10.0 * tol);
  }
}

TEST_CASE("window laws") {
  std::mt19937_64 rng(109);
  for (int rep = 0; rep < 15; ++rep) {
    const NormKind norm = testutil::kAllNorms[rep % 6];
    const std::size_t dim = testutil::point_dim(norm, 2);
    const PolygonalCurve f = testutil::random_curve(rng, 4, dim, -3.0, 3.0);
    const PolygonalCurve g = testutil::random_curve(rng, 3, dim, -3.0, 3.0);
    const double plain = frechet_distance(f, g, norm);
    const double w1 = frechet_distance(f, g, norm, WindowSpec::bounded(1));
    const double wmax = frechet_distance(
        f, g, norm,
        WindowSpec::bounded(static_cast<long>(std::max(f.segments(), g.segments()))));
    CHECK(w1 >= plain - kDefaultTol);
    CHECK(wmax == doctest::Approx(plain).epsilon(1e-9));
  }
}

TEST_CASE("windowed distance of the shifted pulse") {
  const PolygonalCurve f = curve1d({0, 0, 0, 1, 0});  // pulse shifted by 2 segments
  const PolygonalCurve g = curve1d({0, 1, 0});
  CHECK(frechet_distance(f, g, NormKind::L2) == doctest::Approx(0.0));
  CHECK(std::isinf(frechet_distance(f, g, NormKind::L2, WindowSpec::bounded(1))));
  CHECK(frechet_distance(f, g, NormKind::L2, WindowSpec::bounded(2)) == doctest::Approx(0.0));
}

TEST_CASE("achieved_bijective flag") {
  // Dwell segment: the infimum 0 is nonbijective-only at exact tolerance 0.
  const PolygonalCurve f = curve1d({0, 1});
  const PolygonalCurve g = curve1d({0, 1, 1});
  const FrechetResult strict =
      frechet_compute(f, g, NormKind::L2, WindowSpec::unbounded(), 0.0);
  CHECK(strict.value == doctest::Approx(0.0));
  CHECK_FALSE(strict.achieved_bijective);

  const PolygonalCurve a = curve({Point{0, 0}, Point{2, 0}});
  const PolygonalCurve b = curve({Point{0, 1}, Point{2, 1}});
  const FrechetResult res = frechet_compute(a, b, NormKind::L2);
  CHECK(res.value == doctest::Approx(1.0));
  CHECK(res.achieved_bijective);
  CHECK(res.critical_value_count >= 1);
}
