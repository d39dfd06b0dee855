#pragma once

#include <cstddef>

#include "tddf/bounded_curve.hpp"
#include "tddf/ddf.hpp"
#include "tddf/kernels.hpp"
#include "tddf/ops.hpp"

namespace tddf {

using kernels::Region;

struct BnbOptions {
  double tolerance = 1e-3;
  int max_depth = 24;            // splits per axis of any one cell
  std::size_t max_cells = 200000;
};

struct BnbResult {
  Interval bounds;
  bool converged = true;  // bounds.width() <= tolerance
  std::size_t cells = 0;
};

/// Encloses sup { T(f(r), g(s)) : L(r,s) < x } (strict) or with L(r,s) <= x
/// (weak). x = inf encloses the left limit at infinity, that is the sup over
/// L(r,s) < inf. Cells are split on a knot-aware partition of [0,x]^2; joint
/// monotonicity gives the cell bounds, and feasibility of a cell is decided
/// at its corners.
BnbResult sup_bnb(const LOp& l, const TNorm& t, const DDF& f, const DDF& g, double x, Region region,
                  const BnbOptions& opt = {});

/// Encloses inf { L(u(p), v(q)) : T(p,q) > y } over [0,1]^2 for sup-kind
/// quasi-inverses u and v. The tolerance is relative to max(1, value).
BnbResult inf_bnb_quasi(const LOp& l, const TNorm& t, const QuasiInverse& u, const QuasiInverse& v, double y,
                        const BnbOptions& opt = {});

}  // namespace tddf
