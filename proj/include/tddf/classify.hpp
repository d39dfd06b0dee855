#pragma once

#include <optional>
#include <string_view>

#include "tddf/bounded_curve.hpp"
#include "tddf/ddf.hpp"

namespace tddf {

enum class Membership { holds, fails, undecided };
std::string_view to_string(Membership m);

/// A rise of at least `size` somewhere in [x_left, x_right]. On exact input
/// x_left == x_right is the jump location; x_right == inf is the defect.
struct Discontinuity {
  double x_left = 0.0;
  double x_right = 0.0;
  double size = 0.0;
};

/// Membership in the chain D+_sc ⊆ D+_c ⊆ D+_0 ⊆ D+ ⊆ Δ+.
///
/// D+_0 means continuous on ]0, inf], so it includes non-defectiveness.
/// "Strict" is read as strictly increasing below saturation: a curve that
/// reaches 1 at a finite point and stays there can still be strict.
struct DDFClass {
  Membership delta = Membership::holds;
  Membership nondefective = Membership::undecided;
  Membership cont_open = Membership::undecided;  // D+_0
  Membership cont = Membership::undecided;       // D+_c
  Membership strict = Membership::undecided;     // D+_sc
  std::optional<Discontinuity> jump;             // first on ]0, inf]
  std::optional<Discontinuity> jump_at_zero;
  std::optional<Discontinuity> plateau;          // x-extent of a flat run below 1, as h∨ jump
  double envelope_width = 0.0;
};

/// Exact, read off the canonical form.
DDFClass classify(const DDF& f);

/// On an enclosure. A jump is asserted when lo - hi across two samples no
/// further apart than the sampling resolution exceeds `threshold`; continuity
/// when every rise hi_{k+1} - lo_k is at most `threshold`. Anything else is
/// undecided. Strictness needs the sampled largest quasi-inverse `quasi`
/// (abscissa y): a flat run of h is a jump of h∨. Its rises are measured
/// relative to max(1, h∨).
DDFClass classify(const BoundedCurve& h, double threshold, const BoundedCurve* quasi = nullptr);

/// Restores the chain: a smaller class never holds while a larger one does not.
void enforce_chain(DDFClass& c);
bool chain_consistent(const DDFClass& c);

struct FlatRun {
  double from = 0.0;
  double to = 0.0;
  double length() const { return to - from; }
};

/// Longest sample range [from, to] with hi(to) - lo(from) <= tol.
FlatRun longest_flat_run(const BoundedCurve& c, double tol, double x_max = kInf);

}  // namespace tddf
