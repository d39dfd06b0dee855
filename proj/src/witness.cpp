#include "tddf/witness.hpp"

#include <cmath>
#include <stdexcept>

namespace tddf {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// A point strictly inside [a, b] when a = 0, so ramps keep positive length.
double inside(double a, double b) { return a > 0.0 ? a : a + (b - a) / 4.0; }

std::vector<Vertex> strict_through(std::initializer_list<Vertex> mids, double end) {
  std::vector<Vertex> v{{0.0, 0.0}};
  for (const Vertex& m : mids)
    if (m.y > v.back().y && m.y < 1.0) v.push_back(m);
  v.push_back({end, 1.0});
  v.push_back({kInf, 1.0});
  return v;
}

}  // namespace

WitnessPair witness_thm38(const LOp& l, const ConditionWitness& lcs) {
  require(lcs.condition == Condition::LCS || lcs.condition == Condition::LS, "witness_thm38 needs an LCS witness");
  require(verify(l, lcs), "LCS witness does not re-evaluate as a violation");
  const double r = lcs.points[0], s = lcs.points[2];
  return {make_step({r, 1.0}), make_step({s, 1.0}), l(r, s)};
}

DDF witness_thm42(const LOp& l, double x0) {
  require(x0 > 0.0 && x0 < kInf, "zero divisor must be finite and positive");
  require(l(x0, x0) == kInf, "L(x0,x0) is finite; not a zero divisor");
  return DDF::from_vertices({{0.0, 0.0}, {x0, 0.5}, {2.0 * x0, 0.75}, {4.0 * x0, 1.0}, {kInf, 1.0}});
}

WitnessPair witness_prop43(double p) {
  require(p > 0.0 && p < 1.0, "p must lie in ]0,1[");
  DDF f = DDF::from_vertices({{0.0, 0.0}, {0.0, p}, {1.0, p}, {1.0 / p, 1.0}, {kInf, 1.0}});
  DDF g = DDF::from_vertices({{0.0, 0.0}, {1.0, 1.0}, {kInf, 1.0}});
  return {std::move(f), std::move(g), 1.0};
}

WitnessPair witness_prop44(const LOp& l, double r, double r2, double s, double s2, double y0) {
  require(0.0 < r && r < r2 && r2 < kInf && 0.0 < s && s < s2 && s2 < kInf, "need 0<r<r'<inf and 0<s<s'<inf");
  require(y0 > 0.0 && y0 < 1.0, "y0 must lie in ]0,1[");
  require(values_equal(l(r, s), l(r2, s2), l.closed_form()), "L(r,s) != L(r',s'): no LS violation here");
  DDF f = DDF::from_vertices({{0.0, 0.0}, {r, y0}, {r2, 1.0}, {kInf, 1.0}});
  DDF g = DDF::from_vertices({{0.0, 0.0}, {s, y0}, {s2, 1.0}, {kInf, 1.0}});
  return {std::move(f), std::move(g), l(r, s)};
}

WitnessPair witness_prop44(const LOp& l, const ConditionWitness& ls, double y0) {
  require(ls.condition == Condition::LS || ls.condition == Condition::LCS, "witness_prop44 needs an LS witness");
  require(verify(l, ls), "LS witness does not re-evaluate as a violation");
  const auto& p = ls.points;
  return witness_prop44(l, inside(p[0], p[1]), p[1], inside(p[2], p[3]), p[3], y0);
}

WitnessPair witness_thm49(const LOp& l, double r, double s, double s2, double y0) {
  require(0.0 < r && r < kInf && 0.0 < s && s < s2 && s2 < kInf, "need 0<r<inf and 0<s<s'<inf");
  require(y0 > 0.0 && y0 < 1.0, "y0 must lie in ]0,1[");
  require(values_equal(l(r, s), l(r, s2), l.closed_form()), "L(r,s) != L(r,s'): no CL violation here");
  DDF f = DDF::from_vertices({{0.0, 0.0}, {r, y0}, {r, 1.0}, {kInf, 1.0}});
  DDF g = DDF::from_vertices({{0.0, 0.0}, {s, y0}, {s2, 1.0}, {kInf, 1.0}});
  return {std::move(f), std::move(g), l(r, s)};
}

WitnessPair witness_thm49(const LOp& l, const ConditionWitness& cl, double y0) {
  require(cl.condition == Condition::CL, "witness_thm49 needs a CL witness");
  require(verify(l, cl), "CL witness does not re-evaluate as a violation");
  const auto& p = cl.points;
  const double lo = std::min(p[1], p[2]), hi = std::max(p[1], p[2]);
  return witness_thm49(l, p[0], inside(lo, hi), hi, y0);
}

WitnessPair witness_cor48(const ConditionWitness& ts) {
  require(ts.condition == Condition::TS && ts.reading == TsReading::joint, "witness_cor48 needs a joint TS witness");
  const auto& p = ts.points;
  DDF f = DDF::from_vertices(strict_through({{1.0, p[0]}, {2.0, p[1]}}, 3.0));
  DDF g = DDF::from_vertices(strict_through({{1.0, p[2]}, {2.0, p[3]}}, 3.0));
  return {std::move(f), std::move(g), 2.0};
}

DDF strict_ramp(double scale) {
  return DDF::from_vertices({{0.0, 0.0}, {scale, 0.5}, {2.0 * scale, 1.0}, {kInf, 1.0}});
}

}  // namespace tddf
