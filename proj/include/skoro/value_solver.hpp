#ifndef SKORO_VALUE_SOLVER_HPP
#define SKORO_VALUE_SOLVER_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "skoro/core_types.hpp"
#include "skoro/reach_dp.hpp"

namespace skoro {

enum class CriticalKind : std::uint8_t { endpoint = 0, entry = 1, hclamp = 2, vclamp = 3 };

// Sorted, tolerance-deduplicated candidate deltas guaranteed to contain the
// Frechet distance; raw_counts records the per-kind candidate counts before
// deduplication.
struct CriticalValueSet {
  std::vector<double> values;
  std::vector<CriticalKind> kinds;
  std::array<std::size_t, 4> raw_counts{0, 0, 0, 0};

  std::size_t size() const { return values.size(); }
};

CriticalValueSet critical_values(const PolygonalCurve& f, const PolygonalCurve& g,
                                 NormKind norm, WindowSpec window = WindowSpec::unbounded(),
                                 double tol = kDefaultTol);

struct FrechetResult {
  double value = 0.0;               // +infinity when no window-respecting path exists
  bool achieved_bijective = false;  // strictly increasing reparameterizations reach it
  std::size_t critical_value_count = 0;
};

FrechetResult frechet_compute(const PolygonalCurve& f, const PolygonalCurve& g, NormKind norm,
                              WindowSpec window = WindowSpec::unbounded(),
                              double tol = kDefaultTol);

double frechet_distance(const PolygonalCurve& f, const PolygonalCurve& g, NormKind norm,
                        WindowSpec window = WindowSpec::unbounded(),
                        double tol = kDefaultTol);

// Skorokhod distance of two traces: the Frechet distance of their lifted
// curves under the skoro variant of the base norm.
double skorokhod_distance(const SampledTrace& x, const SampledTrace& y, NormKind base,
                          WindowSpec window = WindowSpec::unbounded(),
                          double tol = kDefaultTol);

FrechetResult skorokhod_compute(const SampledTrace& x, const SampledTrace& y, NormKind base,
                                WindowSpec window = WindowSpec::unbounded(),
                                double tol = kDefaultTol);

}  // namespace skoro

#endif
