#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tddf/ext_real.hpp"
#include "tddf/graph.hpp"

namespace tddf {

/// One affine piece of a d.d.f.: f(x) = a + b (x - x_lo) on ]x_lo, x_hi].
struct Piece {
  double x_lo = 0.0;
  double x_hi = 0.0;  // may be inf; then b must be 0
  double a = 0.0;
  double b = 0.0;
};

struct StepParams {
  ExtReal r;
  double p = 0.0;
};

/// Which point value a monotone map takes at a jump.
///   lower: left-continuous, a sup-map (f-, and quasi_inf's f^)
///   upper: right-continuous, an inf-map (f+, and quasi_sup's f v)
enum class Reading { lower, upper };

/// A monotone map given by its completed graph plus a jump convention.
/// This is the type of regularizations and of quasi-inverses.
class MonotoneMap {
 public:
  MonotoneMap(MonotoneGraph graph, Reading reading) : graph_(std::move(graph)), reading_(reading) {}

  double operator()(double x) const {
    return reading_ == Reading::lower ? graph_.lower_at(x) : graph_.upper_at(x);
  }
  const MonotoneGraph& graph() const { return graph_; }
  Reading reading() const { return reading_; }

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

 private:
  MonotoneGraph graph_;
  Reading reading_;
};

/// Quasi-inverses live on [0,1] with values in [0,inf]. The sup-kind (largest)
/// quasi-inverse reads the upper branch, the inf-kind (smallest) the lower.
using QuasiInverse = MonotoneMap;

/// Distance distribution function in canonical piecewise-linear form.
///
/// Backed by a completed graph from (0,0) to (inf,1). Point values follow the
/// left-continuous convention on ]0,inf[, with f(0) = 0 and f(inf) = 1.
/// Any finite piece ending at inf is constant, so f(inf-) is the height of the
/// last horizontal run and the vertical run at inf carries the defect.
class DDF {
 public:
  /// Top element eps(0,1).
  DDF();
  /// Validates that the graph spans [0,inf] x [0,1]. Throws std::invalid_argument.
  explicit DDF(MonotoneGraph graph);

  /// Contiguous pieces covering ]0,inf[; pieces[0].x_lo must be 0.
  static DDF from_pieces(std::span<const Piece> pieces);
  /// From the vertices of the completed graph, (0,0) through (inf,1).
  static DDF from_vertices(std::vector<Vertex> vertices) { return DDF(MonotoneGraph(std::move(vertices))); }

  double operator()(double x) const;
  double eval(ExtReal x) const { return (*this)(x.value()); }
  double left_limit(double x) const { return graph_.lower_at(x); }
  double right_limit(double x) const { return graph_.upper_at(x); }
  /// f(inf-)
  double limit_at_infinity() const { return graph_.lower_at(kInf); }

  std::vector<Piece> pieces() const;
  std::vector<double> knots() const;  // finite knots, ascending, starting with 0
  /// Finite point beyond which f is constant.
  double last_knot() const;
  const MonotoneGraph& graph() const { return graph_; }

  friend bool operator==(const DDF&, const DDF&) = default;

 private:
  MonotoneGraph graph_;
};

DDF make_step(StepParams params);

/// If f is a step function eps(r,p) (including the degenerate bottom), its parameters.
std::optional<StepParams> as_step(const DDF& f);

double eval(const DDF& f, ExtReal x);

/// f-(x) = sup_{y<x} f(y): a sup-map on [0,inf].
MonotoneMap left_reg(const DDF& f);
/// f+(x) = inf_{y>x} f(y): an inf-map on [0,inf].
MonotoneMap right_reg(const DDF& f);

/// f v(y) = sup{x : f(x) <= y}
QuasiInverse quasi_sup(const DDF& f);
/// f ^(y) = inf{x : f(x) >= y}
QuasiInverse quasi_inf(const DDF& f);

/// Converts between the two quasi-inverse kinds: right regularization of an
/// inf-kind map gives the sup-kind one and left regularization goes back.
QuasiInverse reg_of_quasi(const QuasiInverse& v);

/// Recovers the d.d.f. whose largest quasi-inverse is `v`.
DDF ddf_from_quasi(const QuasiInverse& v);

/// Exact pointwise supremum of a non-empty family. Throws on an empty family.
DDF sup_family(std::span<const DDF> fs);

/// Exact pointwise order test f <= g.
bool pointwise_leq(const DDF& f, const DDF& g);

/// Pointwise order for maps on the same domain: u <= v everywhere.
bool pointwise_leq(const MonotoneMap& u, const MonotoneMap& v);

// Text format `ddf v1`.
std::string to_text(const DDF& f);
DDF ddf_from_text(std::string_view text);
DDF read_ddf_file(const std::string& path);

}  // namespace tddf
