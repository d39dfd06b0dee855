#include "tddf/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "tddf/error.hpp"
#include "tddf/falsify.hpp"

namespace tddf {
namespace {

const DDF& bottom() {
  static const DDF b = make_step({ExtReal::infinity(), 0.0});
  return b;
}

struct ExactHit {
  DDF h;
  TensorPath path;
};

std::optional<ExactHit> try_exact(const LOp& l, const TNorm& t, const DDF& f, const DDF& g, TensorPath want) {
  const bool any = want == TensorPath::automatic;
  if (any || want == TensorPath::identity) {
    const DDF top;
    if (f == top) return ExactHit{g, TensorPath::identity};
    if (g == top) return ExactHit{f, TensorPath::identity};
    if (f == bottom() || g == bottom()) return ExactHit{bottom(), TensorPath::identity};
  }
  if (any || want == TensorPath::step) {
    const auto a = as_step(f), b = as_step(g);
    if (a && b) return ExactHit{make_step({l(a->r, b->r), t(a->p, b->p)}), TensorPath::step};
  }
  if ((any || want == TensorPath::pointwise_max) && l.kind() == LOpKind::max) {
    if (t.kind() == TNormKind::godel)
      return ExactHit{DDF(combine(f.graph(), g.graph(), PointOp::min)), TensorPath::pointwise_max};
    if (t.kind() == TNormKind::lukasiewicz)
      return ExactHit{DDF(combine(f.graph(), g.graph(), PointOp::lukasiewicz)), TensorPath::pointwise_max};
  }
  if ((any || want == TensorPath::dual_min) && t.kind() == TNormKind::godel &&
      (l.kind() == LOpKind::max || l.kind() == LOpKind::plus)) {
    const PointOp op = l.kind() == LOpKind::max ? PointOp::max : PointOp::plus;
    const MonotoneGraph q = combine(f.graph().swapped(), g.graph().swapped(), op);
    return ExactHit{DDF(q.swapped()), TensorPath::dual_min};
  }
  return std::nullopt;
}

bool pointwise_route(const TensorRequest& req) {
  return req.L.kind() == LOpKind::max &&
         (req.path == TensorPath::automatic || req.path == TensorPath::pointwise_max);
}

void check_forced(const TensorRequest& req) {
  switch (req.path) {
    case TensorPath::pointwise_max:
      if (req.L.kind() != LOpKind::max) throw std::invalid_argument("path pointwise_max needs L = max");
      break;
    case TensorPath::identity:
    case TensorPath::step:
    case TensorPath::dual_min:
      if (!try_exact(req.L, req.T, req.f, req.g, req.path))
        throw std::invalid_argument("path " + std::string(to_string(req.path)) + " does not apply to these inputs");
      break;
    default: break;
  }
}

std::vector<double> seeds_for(const LOp& l, const DDF& f, const DDF& g, double x_end) {
  std::vector<double> out;
  const auto kf = f.knots(), kg = g.knots();
  for (double a : kf)
    for (double b : kg) {
      const double v = l(a, b);
      if (v <= x_end) out.push_back(v);
    }
  for (double a : kf) out.push_back(a);
  for (double b : kg) out.push_back(b);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() > 512) {
    std::vector<double> thin;
    for (std::size_t i = 0; i < out.size(); i += out.size() / 512 + 1) thin.push_back(out[i]);
    out = std::move(thin);
  }
  return out;
}

double end_of_sampling(const LOp& l, const DDF& f, const DDF& g) {
  const double rf = f.last_knot(), rg = g.last_knot();
  const double x0 = l(rf, rg);
  if (x0 == kInf) return 64.0 * std::max({1.0, rf, rg});
  return x0 + std::max(1.0, x0) / 8.0;
}

BoundedCurve sampled(const TensorRequest& req, const PointBounds& h, Interval tail, std::string provenance) {
  SampleOptions opt;
  opt.x_end = end_of_sampling(req.L, req.f, req.g);
  opt.rise = req.rise_threshold();
  opt.resolution = req.resolution;
  opt.max_points = req.max_points;
  opt.seeds = seeds_for(req.L, req.f, req.g, opt.x_end);
  bool capped = false;
  BoundedCurve c;
  c.points = sample_adaptive(h, opt, &capped);
  c.tail = tail;
  c.provenance = std::move(provenance);
  c.resolution = req.resolution;
  c.converged = !capped && c.width() <= req.tolerance;
  return c;
}

}  // namespace

std::string_view to_string(TensorPath p) {
  switch (p) {
    case TensorPath::automatic: return "automatic";
    case TensorPath::identity: return "identity";
    case TensorPath::step: return "step";
    case TensorPath::pointwise_max: return "pointwise_max";
    case TensorPath::dual_min: return "dual_min";
    case TensorPath::bnb: return "bnb";
  }
  return "?";
}

void require_hypotheses(const LOp& l, const TNorm& t) {
  if (l.flags().right_continuous != Tri::yes)
    throw HypothesisError("L-operation '" + l.id() + "' is not declared right continuous; the tensor needs it");
  if (t.flags().left_continuous != Tri::yes)
    throw HypothesisError("t-norm '" + t.id() + "' is not declared left continuous; the tensor needs it");
}

std::optional<DDF> tensor_exact(const LOp& l, const TNorm& t, const DDF& f, const DDF& g, TensorPath path) {
  if (auto hit = try_exact(l, t, f, g, path)) return hit->h;
  return std::nullopt;
}

Interval tensor_at(const TensorRequest& req, double x) {
  require_hypotheses(req.L, req.T);
  check_forced(req);
  if (x == kInf) return {1.0, 1.0};
  if (x <= 0.0) return {0.0, 0.0};
  if (req.path != TensorPath::bnb)
    if (auto hit = try_exact(req.L, req.T, req.f, req.g, req.path)) {
      const double v = hit->h(x);
      return {v, v};
    }
  if (pointwise_route(req)) {
    const double v = req.T(req.f(x), req.g(x));
    return {v, v};
  }
  return sup_bnb(req.L, req.T, req.f, req.g, x, Region::strict, req.bnb()).bounds;
}

BoundedCurve tensor(const TensorRequest& req) {
  require_hypotheses(req.L, req.T);
  check_forced(req);
  if (req.path != TensorPath::bnb)
    if (auto hit = try_exact(req.L, req.T, req.f, req.g, req.path))
      return BoundedCurve::from_exact(hit->h, std::string(to_string(hit->path)));
  if (pointwise_route(req)) {
    const double t = req.T(req.f.limit_at_infinity(), req.g.limit_at_infinity());
    return sampled(req, [&](double x) { return tensor_at(req, x); }, {t, t}, "pointwise_max");
  }
  const auto tail = sup_bnb(req.L, req.T, req.f, req.g, kInf, Region::strict, req.bnb()).bounds;
  return sampled(req, [&](double x) { return tensor_at(req, x); }, tail, "bnb");
}

Interval tensor_quasi(const LOp& l, const TNorm& t, const QuasiInverse& u, const QuasiInverse& v, double y,
                      const BnbOptions& opt) {
  require_hypotheses(l, t);
  if (t.kind() == TNormKind::godel) {
    const double w = l(u(y), v(y));
    return {w, w};
  }
  return inf_bnb_quasi(l, t, u, v, y, opt).bounds;
}

BoundedCurve tensor_quasi_curve(const TensorRequest& req) {
  require_hypotheses(req.L, req.T);
  SampleOptions opt;
  opt.x_end = 1.0 - 1.0 / 1048576.0;
  opt.rise = req.rise_threshold();
  opt.relative_rise = true;
  // h∨ is often steep near level 0 (h grows like x^2 there); keep refining
  // geometrically instead of stopping at an absolute spacing.
  opt.floor = 1e-9;
  opt.resolution = req.resolution;
  opt.max_points = req.max_points;
  PointBounds h;
  std::optional<DDF> exact;
  if (req.path != TensorPath::bnb) exact = tensor_exact(req.L, req.T, req.f, req.g, req.path);
  const QuasiInverse u = quasi_sup(req.f), v = quasi_sup(req.g);
  if (exact) {
    const QuasiInverse hq = quasi_sup(*exact);
    for (double k : hq.graph().knots()) opt.seeds.push_back(k);
    h = [hq](double y) { return Interval{hq(y), hq(y)}; };
  } else {
    for (double k : u.graph().knots()) opt.seeds.push_back(k);
    for (double k : v.graph().knots()) opt.seeds.push_back(k);
    const BnbOptions b = req.bnb();
    h = [&, b](double y) { return tensor_quasi(req.L, req.T, u, v, y, b); };
  }
  bool capped = false;
  BoundedCurve c;
  c.points = sample_adaptive(h, opt, &capped);
  c.tail = {c.points.back().lo, kInf};
  c.provenance = exact ? "quasi_exact" : "quasi_bnb";
  c.resolution = req.resolution;
  c.converged = !capped;
  for (const auto& p : c.points)
    if (p.hi != p.lo && !(p.hi - p.lo <= req.tolerance * std::max(1.0, p.lo))) c.converged = false;
  return c;
}

Interval tau_at(const TensorRequest& req, double x) {
  require_hypotheses(req.L, req.T);
  if (x == kInf) return {1.0, 1.0};
  return sup_bnb(req.L, req.T, req.f, req.g, x, Region::weak, req.bnb()).bounds;
}

BoundedCurve tau_curve(const TensorRequest& req) {
  require_hypotheses(req.L, req.T);
  const auto tail = sup_bnb(req.L, req.T, req.f, req.g, kInf, Region::strict, req.bnb()).bounds;
  return sampled(req, [&](double x) { return tau_at(req, x); }, tail, "tau_bnb");
}

TauTensorVerdict tau_equals_tensor(const LOp& l, const TNorm& t, std::size_t budget, std::uint64_t seed,
                                   double tolerance) {
  TauTensorVerdict out;
  const BnbOptions opt{tolerance, 24, 200000};
  auto attempt = [&](double r, double s) {
    ++out.trials;
    const double x0 = l(r, s);
    if (!(x0 > 0.0) || x0 == kInf) return false;
    const DDF f = make_step({r, 1.0}), g = make_step({s, 1.0});
    const DDF h = make_step({x0, t(1.0, 1.0)});
    const double tv = h(x0);
    const auto tau = sup_bnb(l, t, f, g, x0, Region::weak, opt).bounds;
    if (tau.lo - tv > tolerance) {
      out.witness_found = true;
      out.f = f;
      out.g = g;
      out.x0 = x0;
      out.tau = tau;
      out.tensor = {tv, tv};
      return true;
    }
    return false;
  };
  const Verdict lcs = falsify(l, Condition::LCS, budget, seed);
  if (lcs.found() && attempt(lcs.witness->points[0], lcs.witness->points[2])) return out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 4.0);
  const std::size_t trials = std::min<std::size_t>(64, std::max<std::size_t>(1, budget / 1000));
  for (std::size_t i = 0; i < trials; ++i)
    if (attempt(unit(rng), unit(rng))) return out;
  return out;
}

}  // namespace tddf
