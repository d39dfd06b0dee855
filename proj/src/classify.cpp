#include "tddf/classify.hpp"

#include <algorithm>

namespace tddf {

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::holds: return "holds";
    case Membership::fails: return "fails";
    case Membership::undecided: return "undecided";
  }
  return "?";
}

namespace {

int rank(Membership m) { return m == Membership::holds ? 2 : m == Membership::undecided ? 1 : 0; }

Membership at_most(Membership m, Membership cap) { return rank(m) <= rank(cap) ? m : cap; }

}  // namespace

void enforce_chain(DDFClass& c) {
  c.nondefective = at_most(c.nondefective, c.delta);
  c.cont_open = at_most(c.cont_open, c.nondefective);
  c.cont = at_most(c.cont, c.cont_open);
  c.strict = at_most(c.strict, c.cont);
}

bool chain_consistent(const DDFClass& c) {
  return rank(c.nondefective) <= rank(c.delta) && rank(c.cont_open) <= rank(c.nondefective) &&
         rank(c.cont) <= rank(c.cont_open) && rank(c.strict) <= rank(c.cont);
}

DDFClass classify(const DDF& f) {
  DDFClass c;
  const auto v = f.graph().vertices();
  const double tail = f.limit_at_infinity();
  c.nondefective = tail == 1.0 ? Membership::holds : Membership::fails;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Vertex& a = v[i];
    const Vertex& b = v[i + 1];
    if (a.x == b.x && b.y > a.y) {
      const Discontinuity d{a.x, a.x, b.y - a.y};
      if (a.x == 0.0) {
        c.jump_at_zero = d;
      } else if (!c.jump) {
        c.jump = d;
      }
    } else if (a.y == b.y && a.y < 1.0 && b.x > a.x && !c.plateau && a.x != kInf) {
      c.plateau = Discontinuity{a.x, b.x, b.x - a.x};
    }
  }
  c.cont_open = c.jump ? Membership::fails : Membership::holds;
  c.cont = c.cont_open == Membership::holds && !c.jump_at_zero ? Membership::holds : Membership::fails;
  c.strict = c.cont == Membership::holds && !c.plateau ? Membership::holds : Membership::fails;
  enforce_chain(c);
  return c;
}

DDFClass classify(const BoundedCurve& h, double threshold, const BoundedCurve* quasi) {
  if (h.exact) return classify(*h.exact);
  DDFClass c;
  c.envelope_width = h.width();
  if (h.tail.hi < 1.0) {
    c.nondefective = Membership::fails;
    c.jump = Discontinuity{h.points.empty() ? 0.0 : h.points.back().x, kInf, 1.0 - h.tail.hi};
  } else if (h.tail.lo >= 1.0 - threshold) {
    c.nondefective = Membership::holds;
  }
  const auto& p = h.points;
  const double near = 2.0;
  bool open_ok = true, zero_ok = true;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    const double rise = p[k + 1].hi - p[k].lo;
    if (!(rise > threshold)) continue;
    const double drop = p[k + 1].lo - p[k].hi;
    const bool tight = p[k + 1].x - p[k].x <= near * min_spacing(p[k + 1].x, h.resolution);
    const bool at_zero = p[k].x == 0.0;
    if (tight && drop > threshold) {
      const Discontinuity d{p[k].x, p[k + 1].x, drop};
      if (at_zero) {
        if (!c.jump_at_zero) c.jump_at_zero = d;
      } else if (!c.jump || c.jump->x_right == kInf) {
        c.jump = d;
      }
    }
    (at_zero ? zero_ok : open_ok) = false;
  }
  if (!p.empty() && h.tail.hi - p.back().lo > threshold) open_ok = false;

  if (c.jump && c.jump->x_right != kInf) c.cont_open = Membership::fails;
  else if (c.nondefective == Membership::fails) c.cont_open = Membership::fails;
  else if (open_ok && c.nondefective == Membership::holds) c.cont_open = Membership::holds;

  if (c.cont_open == Membership::fails || c.jump_at_zero) c.cont = Membership::fails;
  else if (c.cont_open == Membership::holds && zero_ok) c.cont = Membership::holds;

  if (c.cont == Membership::fails) {
    c.strict = Membership::fails;
  } else if (quasi) {
    // A flat run of h at level y is a jump of h∨ at y; h∨(0) > 0 is a flat run at level 0.
    const auto& q = quasi->points;
    bool ok = true;
    if (!q.empty() && q.front().lo > threshold) c.plateau = Discontinuity{0.0, q.front().lo, q.front().lo};
    for (std::size_t k = 0; k + 1 < q.size() && !c.plateau; ++k) {
      // Abscissae of h are compared relatively, as in the sampler.
      const double scale = std::max(1.0, q[k].lo);
      const double rise = q[k + 1].hi - q[k].lo;
      if (!(rise > threshold * scale)) continue;
      ok = false;
      // h∨ is right continuous, so a gap right after level 0 is a steep
      // start of h rather than a flat run; that is already covered by h∨(0).
      if (q[k].x == 0.0) continue;
      const double drop = q[k + 1].lo - q[k].hi;
      if (q[k + 1].x - q[k].x <= near * min_spacing(q[k + 1].x, quasi->resolution) && drop > threshold * scale)
        c.plateau = Discontinuity{q[k].hi, q[k + 1].lo, drop};
    }
    if (c.plateau) c.strict = Membership::fails;
    else if (ok && c.cont == Membership::holds) c.strict = Membership::holds;
  }
  enforce_chain(c);
  return c;
}

FlatRun longest_flat_run(const BoundedCurve& c, double tol, double x_max) {
  FlatRun best;
  const auto& p = c.points;
  std::size_t j = 0;
  for (std::size_t i = 0; i < p.size() && p[i].x <= x_max; ++i) {
    j = std::max(j, i);
    while (j + 1 < p.size() && p[j + 1].x <= x_max && p[j + 1].hi - p[i].lo <= tol) ++j;
    if (p[j].hi - p[i].lo <= tol && p[j].x - p[i].x > best.length()) best = {p[i].x, p[j].x};
  }
  return best;
}

}  // namespace tddf
