#pragma once

#include <span>
#include <vector>

#include "tddf/ext_real.hpp"

namespace tddf {

struct Vertex {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// The completed graph of a monotone map [lo, hi] -> [bottom, top].
///
/// A polyline through vertices that are non-decreasing in both coordinates,
/// starting at (lo, bottom) and ending at (hi, top). Jumps of the map show up
/// as vertical runs, plateaus as horizontal runs. Every regularization and
/// both quasi-inverses of a monotone map are read off this one object:
///   - lower_at(x) is the left limit f(x-) (and `bottom` at lo),
///   - upper_at(x) is the right limit f(x+) (and `top` at hi),
///   - swapped() is the graph of the quasi-inverses.
///
/// Coordinates are finite or +inf. A segment touching an infinite coordinate
/// must be horizontal or vertical.
///
/// Canonical form: no repeated vertices and no vertex interior to a straight
/// run. Two graphs describe the same map iff their canonical forms are equal.
class MonotoneGraph {
 public:
  MonotoneGraph() = default;

  /// Validates and canonicalizes. Throws std::invalid_argument.
  explicit MonotoneGraph(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const { return v_; }
  double lo() const { return v_.front().x; }
  double hi() const { return v_.back().x; }
  double bottom() const { return v_.front().y; }
  double top() const { return v_.back().y; }

  /// Smallest y on the graph above x: f(x-) for x > lo, bottom at lo.
  double lower_at(double x) const;
  /// Largest y on the graph above x: f(x+) for x < hi, top at hi.
  double upper_at(double x) const;

  /// Distinct x coordinates of the vertices, ascending.
  std::vector<double> knots() const;

  /// Graph reflected in the diagonal: the graph of the quasi-inverses.
  MonotoneGraph swapped() const;

  friend bool operator==(const MonotoneGraph&, const MonotoneGraph&) = default;

 private:
  std::vector<Vertex> v_;
};

/// Interpolates along a non-vertical segment; exact when the true value is
/// representable (multiply first, divide last).
double interpolate(const Vertex& a, const Vertex& b, double x);

enum class PointOp { max, min, plus, lukasiewicz };

double apply(PointOp op, double a, double b);

/// Pointwise combination of two graphs over the same x-domain, where the
/// operation is monotone and maps pairs of affine pieces to piecewise-affine
/// results (one kink per piece at most). Kinks are located by solving the
/// affine crossing equation.
MonotoneGraph combine(const MonotoneGraph& a, const MonotoneGraph& b, PointOp op);

}  // namespace tddf
