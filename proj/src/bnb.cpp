#include "tddf/bnb.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace tddf {
namespace {

struct Cell {
  double a1, a2, b1, b2;  // [a1,a2] x [b1,b2]
  int da = 0, db = 0;     // split depth per axis
  double lb = 0.0, ub = 0.0;
};

std::vector<double> breaks(const std::vector<double>& knots, double lo, double hi) {
  std::vector<double> out{lo};
  for (double k : knots)
    if (k > lo && k < hi) out.push_back(k);
  out.push_back(hi);
  return out;
}

double split_point(double a1, double a2) {
  if (a2 == kInf) return std::max(2.0 * a1, a1 + 1.0);
  return a1 + (a2 - a1) / 2.0;
}

std::vector<double> seed_axis(const std::vector<double>& knots, double x) {
  std::vector<double> pts{0.0};
  const double top = x == kInf ? (knots.empty() ? 1.0 : knots.back()) * 2.0 + 1.0 : x;
  for (double k : knots)
    if (k < top) pts.push_back(k);
  for (int i = 1; i < 16; ++i) pts.push_back(top * i / 16.0);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

BnbResult sup_bnb(const LOp& l, const TNorm& t, const DDF& f, const DDF& g, double x, Region region,
                  const BnbOptions& opt) {
  BnbResult res;
  if (x <= 0.0 && region == Region::strict) return res;  // empty region
  const bool strict = region == Region::strict || x == kInf;
  auto feasible = [&](double r, double s) {
    if (r == kInf || s == kInf) return false;
    const double v = l(r, s);
    return strict ? v < x : v <= x;
  };
  auto fv = [&](double r) { return r == kInf ? f.limit_at_infinity() : f(r); };
  auto gv = [&](double s) { return s == kInf ? g.limit_at_infinity() : g(s); };

  // Sampled feasible points give a lower bound to prune against.
  double best = 0.0;
  {
    const auto rs = seed_axis(f.knots(), x), ss = seed_axis(g.knots(), x);
    std::vector<double> as, bs;
    for (double r : rs) as.push_back(f(r));
    for (double s : ss) bs.push_back(g(s));
    best = kernels::masked_max(l, t, {rs, as, ss, bs}, x, strict ? Region::strict : Region::weak);
  }

  // Last feasible and first infeasible parameter on the segment from a
  // feasible (r1,s1) to an infeasible (r2,s2).
  auto edge = [&](double r1, double s1, double r2, double s2) {
    double in = 0.0, out = 1.0;
    for (int k = 0; k < 40; ++k) {
      const double m = (in + out) / 2;
      (feasible(r1 + m * (r2 - r1), s1 + m * (s2 - s1)) ? in : out) = m;
    }
    return std::pair{in, out};
  };

  auto eval = [&](Cell& c) {
    if (!feasible(c.a1, c.b1)) return false;
    c.ub = t(fv(c.a2), gv(c.b2));
    if (feasible(c.a2, c.b2)) {
      c.lb = c.ub;
      return true;
    }
    // Feasible points satisfy L(r, b1) < x and L(a1, s) < x, so they lie
    // before the first infeasible point of the bottom and left edges.
    if (c.a2 < kInf && c.b2 < kInf) {
      const double ra = feasible(c.a2, c.b1) ? c.a2 : c.a1 + edge(c.a1, c.b1, c.a2, c.b1).second * (c.a2 - c.a1);
      const double sb = feasible(c.a1, c.b2) ? c.b2 : c.b1 + edge(c.a1, c.b1, c.a1, c.b2).second * (c.b2 - c.b1);
      c.ub = std::min(c.ub, t(f(ra), g(sb)));
    }
    c.lb = t(f(c.a1), g(c.b1));
    if (feasible(c.a2, c.b1)) c.lb = std::max(c.lb, t(f(c.a2), g(c.b1)));
    if (feasible(c.a1, c.b2)) c.lb = std::max(c.lb, t(f(c.a1), g(c.b2)));
    // Farthest feasible point on the diagonal. When jumps of f and g sit on
    // the constraint boundary the supremum is only approached there, at a
    // scale far below what max_depth splits can reach.
    if (c.a2 < kInf && c.b2 < kInf) {
      const double in = edge(c.a1, c.b1, c.a2, c.b2).first;
      if (in > 0.0) c.lb = std::max(c.lb, t(f(c.a1 + in * (c.a2 - c.a1)), g(c.b1 + in * (c.b2 - c.b1))));
    }
    return true;
  };

  auto by_ub = [](const Cell& p, const Cell& q) { return p.ub < q.ub; };
  std::priority_queue<Cell, std::vector<Cell>, decltype(by_ub)> heap(by_ub);
  auto push = [&](Cell c) {
    ++res.cells;
    if (!eval(c)) return;
    best = std::max(best, c.lb);
    if (c.ub > best) heap.push(c);
  };

  const double hi_edge = x;  // x = inf gives the infinite cell edge directly
  const auto ra = breaks(f.knots(), 0.0, hi_edge), sb = breaks(g.knots(), 0.0, hi_edge);
  for (std::size_t i = 0; i + 1 < ra.size(); ++i)
    for (std::size_t j = 0; j + 1 < sb.size(); ++j) push({ra[i], ra[i + 1], sb[j], sb[j + 1]});

  double frozen = 0.0;
  while (!heap.empty()) {
    const Cell c = heap.top();
    if (c.ub <= best || c.ub - best <= opt.tolerance / 4.0 || res.cells >= opt.max_cells) break;
    heap.pop();
    const bool can_a = c.da < opt.max_depth, can_b = c.db < opt.max_depth;
    if (!can_a && !can_b) {
      frozen = std::max(frozen, c.ub);
      continue;
    }
    const double spread_a = fv(c.a2) - f(c.a1), spread_b = gv(c.b2) - g(c.b1);
    bool split_a = can_a && (!can_b || spread_a > spread_b || (spread_a == spread_b && c.a2 - c.a1 >= c.b2 - c.b1));
    const double m = split_a ? split_point(c.a1, c.a2) : split_point(c.b1, c.b2);
    const bool ok = split_a ? (m > c.a1 && m < c.a2) : (m > c.b1 && m < c.b2);
    if (!ok) {
      Cell d = c;
      (split_a ? d.da : d.db) = opt.max_depth;
      heap.push(d);
      continue;
    }
    Cell lo = c, hi = c;
    if (split_a) {
      lo.a2 = hi.a1 = m;
      ++lo.da, ++hi.da;
    } else {
      lo.b2 = hi.b1 = m;
      ++lo.db, ++hi.db;
    }
    push(lo);
    push(hi);
  }
  double upper = std::max(best, frozen);
  if (!heap.empty()) upper = std::max(upper, heap.top().ub);
  res.bounds = {best, upper};
  res.converged = upper - best <= opt.tolerance;
  return res;
}

BnbResult inf_bnb_quasi(const LOp& l, const TNorm& t, const QuasiInverse& u, const QuasiInverse& v, double y,
                        const BnbOptions& opt) {
  BnbResult res;
  if (y >= 1.0) {
    res.bounds = {kInf, kInf};
    return res;
  }
  auto feasible = [&](double p, double q) { return t(p, q) > y; };
  auto close_enough = [&](double lo, double hi) {
    if (lo == hi) return true;
    if (hi == kInf) return false;
    return hi - lo <= opt.tolerance * std::max(1.0, lo);
  };
  auto eval = [&](Cell& c) {
    if (!feasible(c.a2, c.b2)) return false;
    c.lb = l(u(c.a1), v(c.b1));
    if (feasible(c.a1, c.b1)) {
      c.ub = c.lb;
      return true;
    }
    c.ub = l(u(c.a2), v(c.b2));
    if (feasible(c.a1, c.b2)) c.ub = std::min(c.ub, l(u(c.a1), v(c.b2)));
    if (feasible(c.a2, c.b1)) c.ub = std::min(c.ub, l(u(c.a2), v(c.b1)));
    return true;
  };
  double best = kInf;
  auto by_lb = [](const Cell& p, const Cell& q) { return p.lb > q.lb; };
  std::priority_queue<Cell, std::vector<Cell>, decltype(by_lb)> heap(by_lb);
  auto push = [&](Cell c) {
    ++res.cells;
    if (!eval(c)) return;
    best = std::min(best, c.ub);
    if (c.lb < best) heap.push(c);
  };
  const auto pa = breaks(u.graph().knots(), 0.0, 1.0), qb = breaks(v.graph().knots(), 0.0, 1.0);
  for (std::size_t i = 0; i + 1 < pa.size(); ++i)
    for (std::size_t j = 0; j + 1 < qb.size(); ++j) push({pa[i], pa[i + 1], qb[j], qb[j + 1]});

  double frozen = kInf;
  while (!heap.empty()) {
    const Cell c = heap.top();
    if (c.lb >= best || close_enough(c.lb, best) || res.cells >= opt.max_cells) break;
    heap.pop();
    const bool can_a = c.da < opt.max_depth, can_b = c.db < opt.max_depth;
    if (!can_a && !can_b) {
      frozen = std::min(frozen, c.lb);
      continue;
    }
    const double spread_a = u(c.a2) - u(c.a1), spread_b = v(c.b2) - v(c.b1);
    bool split_a;
    if (std::isnan(spread_a) || std::isnan(spread_b) || spread_a == spread_b)
      split_a = c.a2 - c.a1 >= c.b2 - c.b1;
    else
      split_a = spread_a > spread_b;
    if (!can_a) split_a = false;
    if (!can_b) split_a = true;
    const double m = split_a ? split_point(c.a1, c.a2) : split_point(c.b1, c.b2);
    Cell lo = c, hi = c;
    if (split_a) {
      lo.a2 = hi.a1 = m;
      ++lo.da, ++hi.da;
    } else {
      lo.b2 = hi.b1 = m;
      ++lo.db, ++hi.db;
    }
    push(lo);
    push(hi);
  }
  double lower = std::min(best, frozen);
  if (!heap.empty()) lower = std::min(lower, heap.top().lb);
  res.bounds = {lower, best};
  res.converged = close_enough(lower, best);
  return res;
}

}  // namespace tddf
