#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "skoro/core_types.hpp"
#include "test_util.hpp"

using namespace skoro;

TEST_CASE("validate_trace accepts a minimal well-formed input") {
  const SampledTrace t = validate_trace({{0, {0}}, {1, {10}}});
  CHECK(t.dim() == 1);
  CHECK(t.size() == 2);
}

TEST_CASE("validate_trace rejects malformed inputs") {
  CHECK_THROWS_AS(validate_trace({{0, {0}}, {0, {10}}}), Error);
  CHECK_THROWS_AS(validate_trace({{1, {0}}, {0, {10}}}), Error);
  CHECK_THROWS_AS(validate_trace({{0, {0, 1}}, {1, {10}}}), Error);
  CHECK_THROWS_AS(validate_trace({{0, {0}}}), Error);
  CHECK_THROWS_AS(validate_trace({{0, {0}}, {1, {std::nan("")}}}), Error);

  try {
    validate_trace({{0, {0}}, {0, {10}}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIncreasingTime);
  }
  try {
    validate_trace({{0, {0, 1}}, {1, {10}}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("interpolate keeps the sample values as vertices") {
  const SampledTrace t = validate_trace({{0, {0, 0}}, {2, {2, 2}}, {3, {2, 0}}});
  const PolygonalCurve c = interpolate(t);
  CHECK(c.segments() == 2);
  CHECK(c.vertex(1) == Point{2, 2});
}

TEST_CASE("curve_point interpolates affinely") {
  PolygonalCurve c;
  c.vertices = {Point{0}, Point{2}};
  CHECK(curve_point(c, 0.5)[0] == doctest::Approx(1.0));

  PolygonalCurve d;
  d.vertices = {Point{0, 0}, Point{2, 2}};
  const Point mid = curve_point(d, 0.5);
  CHECK(mid[0] == doctest::Approx(1.0));
  CHECK(mid[1] == doctest::Approx(1.0));
  const Point end = curve_point(d, 1.0);
  CHECK(end[0] == doctest::Approx(2.0));
  CHECK_THROWS_AS(curve_point(d, 1.5), Error);
}

TEST_CASE("lift_trace appends the timestamp as the last coordinate") {
  const SampledTrace t = validate_trace({{0, {0}}, {10, {100}}});
  const PolygonalCurve c = lift_trace(t);
  CHECK(c.dim() == 2);
  CHECK(c.vertex(0) == Point{0, 0});
  CHECK(c.vertex(1) == Point{100, 10});

  const SampledTrace t2 = validate_trace({{0, {0, 0}}, {1, {10, 1}}});
  const Point p = curve_point(lift_trace(t2), 0.25);
  CHECK(p[0] == doctest::Approx(2.5));
  CHECK(p[1] == doctest::Approx(0.25));
  CHECK(p[2] == doctest::Approx(0.25));
}

TEST_CASE("lift then project equals interpolate vertex-wise") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const SampledTrace t = testutil::random_trace(rng, 5, 3);
    const PolygonalCurve plain = interpolate(t);
    const PolygonalCurve lifted = lift_trace(t);
    for (std::size_t v = 0; v < plain.vertices.size(); ++v)
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(lifted.vertex(v)[k] == plain.vertex(v)[k]);
  }
}

TEST_CASE("norm_eval handles the hand cases") {
  CHECK(norm_eval(NormKind::L1, Point{1, -2}) == doctest::Approx(3.0));
  CHECK(norm_eval(NormKind::Linf, Point{1, -2}) == doctest::Approx(2.0));
  CHECK(norm_eval(NormKind::L2Skoro, Point{3, -4, 2}) == doctest::Approx(5.0));
  CHECK_THROWS_AS(norm_eval(NormKind::L1Skoro, Point{1}), Error);
}

TEST_CASE("norm axioms hold on random vectors") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> scalar(-5.0, 5.0);
  for (NormKind norm : testutil::kAllNorms) {
    for (int rep = 0; rep < 500; ++rep) {
      const std::size_t dim = testutil::point_dim(norm, 3);
      const Point u = testutil::random_point(rng, dim);
      const Point v = testutil::random_point(rng, dim);
      const double a = scalar(rng);

      Point au = u, sum = u;
      for (std::size_t k = 0; k < dim; ++k) {
        au[k] *= a;
        sum[k] += v[k];
      }
      const double nu = norm_eval(norm, u), nv = norm_eval(norm, v);
      CHECK(nu >= 0.0);
      CHECK(norm_eval(norm, au) == doctest::Approx(std::abs(a) * nu).epsilon(1e-12));
      CHECK(norm_eval(norm, sum) <= nu + nv + 1e-12 * (nu + nv));
    }
    const Point zero(std::vector<double>(testutil::point_dim(norm, 3), 0.0));
    CHECK(norm_eval(norm, zero) == 0.0);
  }
}

TEST_CASE("LinfSkoro equals Linf over all coordinates") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 200; ++rep) {
    const Point p = testutil::random_point(rng, 4);
    CHECK(norm_eval(NormKind::LinfSkoro, p) == norm_eval(NormKind::Linf, p));
  }
}

TEST_CASE("EpsValue ordering is a strict total order") {
  const EpsValue a = EpsValue::exact(1.0);
  const EpsValue ap = EpsValue::just_above(1.0);
  const EpsValue b = EpsValue::exact(2.0);
  CHECK(a < ap);
  CHECK(ap < b);
  CHECK(a < b);
  CHECK_FALSE(a < a);
  CHECK(ap.raised() == ap);  // idempotent
  CHECK(a.raised() == ap);

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> base(0, 4);
  std::vector<EpsValue> xs;
  for (int k = 0; k < 200; ++k)
    xs.push_back({static_cast<double>(base(rng)), bit(rng) == 1});
  std::sort(xs.begin(), xs.end());
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    CHECK(xs[k] <= xs[k + 1]);
    CHECK((xs[k] < xs[k + 1] || xs[k] == xs[k + 1]));
  }
}

TEST_CASE("Interval basics") {
  CHECK(Interval::empty_interval().empty());
  CHECK_FALSE(Interval(0.0, 0.0).empty());
  CHECK(Interval(0.0, 2.0).intersect(Interval(1.0, 3.0)).lo == doctest::Approx(1.0));
  CHECK(Interval(0.0, 1.0).intersect(Interval(2.0, 3.0)).empty());
}
