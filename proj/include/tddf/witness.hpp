#pragma once

#include "tddf/ddf.hpp"
#include "tddf/falsify.hpp"
#include "tddf/ops.hpp"

namespace tddf {

struct WitnessPair {
  DDF f;
  DDF g;
  double x0 = 0.0;  // the point of interest, when the construction has one
};

/// From an LCS-violating tuple (r<r', s<s', L(r,s) = L(r',s') < inf):
/// f = ε(r,1), g = ε(s,1), x0 = L(r,s). τ(f,g) is 0 below x0 and 1 at x0.
WitnessPair witness_thm38(const LOp& l, const ConditionWitness& lcs);

/// From a zero divisor x0 (L(x0,x0) = inf, x0 finite): the strict ramp
/// (0,0) (x0,1/2) (2x0,3/4) (4x0,1). Any feasible (r,s) has r < x0 or s < x0,
/// so the tensor stays at or below f(x0) = 1/2 at every finite point.
DDF witness_thm42(const LOp& l, double x0);

/// f = p on ]0,1] then min(p x, 1); g(x) = min(x, 1). For p in ]0,1[ the
/// tensor equals T(p, x) on ]0,1].
WitnessPair witness_prop43(double p);

/// Two-ramp continuous pair from L(r,s) = L(r',s') with 0<r<r', 0<s<s':
/// f climbs to y0 on [0,r] and to 1 on [r,r']; g likewise on s, s'.
/// Throws std::invalid_argument on bad ordering or when L(r,s) != L(r',s').
WitnessPair witness_prop44(const LOp& l, double r, double r2, double s, double s2, double y0);
/// Same, taking the parameters from an LS or LCS witness (moved inside it when
/// a coordinate is 0).
WitnessPair witness_prop44(const LOp& l, const ConditionWitness& ls, double y0);

/// From L(r,s) = L(r,s') with 0<r<inf, 0<s<s': f climbs to y0 at r and jumps
/// to 1 right after; g is a strict ramp with g(s) = y0, g(s') = 1.
WitnessPair witness_thm49(const LOp& l, double r, double s, double s2, double y0);
WitnessPair witness_thm49(const LOp& l, const ConditionWitness& cl, double y0);

/// Strict pair threaded through a TS-violating tuple (x<x', y<y',
/// T(x,y) = T(x',y')): f passes (1,x), (2,x'), g passes (1,y), (2,y').
WitnessPair witness_cor48(const ConditionWitness& ts);

/// Strict ramp (0,0) (1,1/2) (2,1), the default strict input.
DDF strict_ramp(double scale = 1.0);

}  // namespace tddf
