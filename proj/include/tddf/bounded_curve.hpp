#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tddf/ddf.hpp"

namespace tddf {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
  bool contains(double v) const { return lo <= v && v <= hi; }
};

struct CurvePoint {
  double x = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

/// Rigorous enclosure of a monotone curve h on [0, inf].
///
/// Each point carries lo <= h(x) <= hi. Between samples only monotonicity is
/// known: h(x) lies in [lo_k, hi_{k+1}] for x_k <= x <= x_{k+1}. `tail` encloses
/// h(inf-); the value at inf itself is 1 for tensor outputs. When an exact path
/// produced the curve, `exact` holds the function and every width is 0.
struct BoundedCurve {
  std::vector<CurvePoint> points;  // finite x, strictly increasing
  Interval tail{0.0, 1.0};
  std::string provenance;
  bool converged = true;
  double resolution = 0.0;  // smallest x spacing the sampler was allowed to use
  std::optional<DDF> exact;

  /// max(hi - lo) over the samples and the tail.
  double width() const;
  /// Bounds on h(x) at any x, from the samples and monotonicity.
  Interval at(double x) const;

  static BoundedCurve from_exact(const DDF& f, std::string provenance);
};

/// `curve v1` text. Exact curves are written as the vertices of the completed
/// graph (a repeated x marks a jump); enclosures as `x lo hi` rows on a strictly
/// increasing grid, ending with the `inf 1 1` row.
std::string to_text(const BoundedCurve& c);
BoundedCurve curve_from_text(std::string_view text);

using PointBounds = std::function<Interval(double)>;

struct SampleOptions {
  double x_end = 1.0;              // last finite sample
  double rise = 1e-2;              // bisect while hi_{k+1} - lo_k exceeds this
  bool relative_rise = false;      // ... times max(1, lo_k)
  double resolution = 1e-6;        // relative; no spacing below resolution * max(floor, x)
  double floor = 1.0;
  std::size_t max_points = 4096;
  std::vector<double> seeds;       // extra sample locations in [0, x_end]
  std::size_t uniform = 32;
};

/// Samples a monotone curve on [0, x_end], refining where consecutive
/// enclosures leave a rise above `rise`. Jumps are chased down to the
/// resolution; the point cap bounds the work.
std::vector<CurvePoint> sample_adaptive(const PointBounds& h, const SampleOptions& opt, bool* capped = nullptr);

/// Largest spacing a sample needs from its neighbour to be refined further.
double min_spacing(double x, double resolution, double floor = 1.0);

}  // namespace tddf
