#pragma once

#include <cstdint>
#include <optional>

#include "tddf/bnb.hpp"
#include "tddf/bounded_curve.hpp"
#include "tddf/ddf.hpp"
#include "tddf/ops.hpp"

namespace tddf {

/// Which evaluation route the engine takes. `automatic` tries the exact
/// routes in order (identity, steps, L = max, T = min) before falling back to
/// branch-and-bound.
enum class TensorPath { automatic, identity, step, pointwise_max, dual_min, bnb };

std::string_view to_string(TensorPath p);

struct TensorRequest {
  LOp L;
  TNorm T;
  DDF f;
  DDF g;
  double tolerance = 1e-3;  // per-point enclosure width
  int max_depth = 24;
  TensorPath path = TensorPath::automatic;
  double rise = 0.0;        // sampler refinement threshold; 0 means 10 * tolerance
  double resolution = 1e-6;  // relative; matches what max_depth splits can still separate
  std::size_t max_points = 2048;
  std::size_t max_cells = 200000;

  BnbOptions bnb() const { return {tolerance, max_depth, max_cells}; }
  double rise_threshold() const { return rise > 0.0 ? rise : 10.0 * tolerance; }
};

/// Throws HypothesisError unless L is declared right continuous and T left continuous.
void require_hypotheses(const LOp& l, const TNorm& t);

/// The exact result when one of the closed-form routes applies.
std::optional<DDF> tensor_exact(const LOp& l, const TNorm& t, const DDF& f, const DDF& g,
                                TensorPath path = TensorPath::automatic);

/// Bounds on L⊗T(f,g)(x).
Interval tensor_at(const TensorRequest& req, double x);
/// The whole curve: exact when a closed-form route applies, otherwise an
/// adaptively sampled enclosure.
BoundedCurve tensor(const TensorRequest& req);

/// Bounds on inf { L(u(p), v(q)) : T(p,q) > y } for sup-kind u, v. Exact for T = min.
Interval tensor_quasi(const LOp& l, const TNorm& t, const QuasiInverse& u, const QuasiInverse& v, double y,
                      const BnbOptions& opt = {});
/// Sampled enclosure of the largest quasi-inverse of the tensor on [0, 1[,
/// refined until rises are below rise_threshold() * max(1, h∨),
/// stored with y as the abscissa.
BoundedCurve tensor_quasi_curve(const TensorRequest& req);

/// Bounds on τ(f,g)(x) = sup { T(f(r), g(s)) : L(r,s) <= x }.
Interval tau_at(const TensorRequest& req, double x);
BoundedCurve tau_curve(const TensorRequest& req);

struct TauTensorVerdict {
  bool witness_found = false;
  std::optional<DDF> f, g;
  double x0 = 0.0;
  Interval tau;     // τ(f,g)(x0)
  Interval tensor;  // L⊗T(f,g)(x0), which is also its own left limit
  std::size_t trials = 0;
};

/// Looks for (f, g, x) where τ exceeds the tensor. Step pairs built from an
/// LCS-violating tuple are tried first, then random step pairs.
TauTensorVerdict tau_equals_tensor(const LOp& l, const TNorm& t, std::size_t budget = 100000,
                                   std::uint64_t seed = 1, double tolerance = 1e-3);

}  // namespace tddf
