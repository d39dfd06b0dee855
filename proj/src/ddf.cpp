#include "tddf/ddf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tddf {
namespace {

std::vector<double> merged_knots(const MonotoneGraph& a, const MonotoneGraph& b) {
  std::vector<double> ks = a.knots();
  const std::vector<double> kb = b.knots();
  ks.insert(ks.end(), kb.begin(), kb.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

}  // namespace

DDF::DDF() : DDF(MonotoneGraph({{0, 0}, {0, 1}, {kInf, 1}})) {}

DDF::DDF(MonotoneGraph graph) : graph_(std::move(graph)) {
  const auto v = graph_.vertices();
  if (v.front() != Vertex{0, 0}) throw std::invalid_argument("d.d.f. graph must start at (0,0)");
  if (v.back() != Vertex{kInf, 1}) throw std::invalid_argument("d.d.f. graph must end at (inf,1)");
  for (const Vertex& p : v)
    if (p.y > 1.0) throw std::invalid_argument("d.d.f. value exceeds 1");
}

DDF DDF::from_pieces(std::span<const Piece> pieces) {
  if (pieces.empty()) throw std::invalid_argument("d.d.f. needs at least one piece");
  std::vector<Vertex> v{{0, 0}};
  double expect = 0.0;
  for (const Piece& p : pieces) {
    if (p.x_lo != expect) throw std::invalid_argument("pieces must be contiguous from 0");
    if (!(p.x_hi > p.x_lo)) throw std::invalid_argument("piece has empty interval");
    if (!(p.a >= 0.0 && p.a <= 1.0)) throw std::invalid_argument("piece start value outside [0,1]");
    if (!(p.b >= 0.0) || !std::isfinite(p.b)) throw std::invalid_argument("piece slope must be finite and non-negative");
    if (std::isinf(p.x_hi) && p.b != 0.0) throw std::invalid_argument("piece reaching inf must be constant");
    v.push_back({p.x_lo, p.a});
    v.push_back({p.x_hi, std::isinf(p.x_hi) ? p.a : p.a + p.b * (p.x_hi - p.x_lo)});
    expect = p.x_hi;
  }
  if (!std::isinf(expect)) throw std::invalid_argument("pieces must extend to inf");
  v.push_back({kInf, 1});
  return DDF(MonotoneGraph(std::move(v)));
}

double DDF::operator()(double x) const {
  if (x == kInf) return 1.0;
  return graph_.lower_at(x);
}

std::vector<Piece> DDF::pieces() const {
  std::vector<Piece> out;
  const auto v = graph_.vertices();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Vertex& a = v[i];
    const Vertex& b = v[i + 1];
    if (a.x == b.x) continue;
    const double slope = std::isinf(b.x) ? 0.0 : (b.y - a.y) / (b.x - a.x);
    out.push_back({a.x, b.x, a.y, slope});
  }
  return out;
}

std::vector<double> DDF::knots() const {
  std::vector<double> ks = graph_.knots();
  ks.pop_back();  // inf
  return ks;
}

double DDF::last_knot() const { return knots().back(); }

DDF make_step(StepParams params) {
  const double r = params.r.value();
  const double p = params.p;
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("step height outside [0,1]");
  if (std::isinf(r) || p == 0.0) return DDF(MonotoneGraph({{0, 0}, {kInf, 0}, {kInf, 1}}));
  return DDF(MonotoneGraph({{0, 0}, {r, 0}, {r, p}, {kInf, p}, {kInf, 1}}));
}

std::optional<StepParams> as_step(const DDF& f) {
  const double r = f.graph().swapped().upper_at(0.0);
  const double p = f.limit_at_infinity();
  const StepParams params{std::isinf(r) ? ExtReal::infinity() : ExtReal(r), std::isinf(r) ? 0.0 : p};
  if (make_step(params) == f) return params;
  return std::nullopt;
}

double eval(const DDF& f, ExtReal x) { return f.eval(x); }

MonotoneMap left_reg(const DDF& f) { return MonotoneMap(f.graph(), Reading::lower); }
MonotoneMap right_reg(const DDF& f) { return MonotoneMap(f.graph(), Reading::upper); }

QuasiInverse quasi_sup(const DDF& f) { return QuasiInverse(f.graph().swapped(), Reading::upper); }
QuasiInverse quasi_inf(const DDF& f) { return QuasiInverse(f.graph().swapped(), Reading::lower); }

QuasiInverse reg_of_quasi(const QuasiInverse& v) {
  return QuasiInverse(v.graph(), v.reading() == Reading::lower ? Reading::upper : Reading::lower);
}

DDF ddf_from_quasi(const QuasiInverse& v) { return DDF(v.graph().swapped()); }

DDF sup_family(std::span<const DDF> fs) {
  if (fs.empty()) throw std::invalid_argument("supremum of an empty family");
  MonotoneGraph acc = fs.front().graph();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = combine(acc, fs[i].graph(), PointOp::max);
  return DDF(std::move(acc));
}

bool pointwise_leq(const MonotoneMap& u, const MonotoneMap& v) {
  const MonotoneGraph& a = u.graph();
  const MonotoneGraph& b = v.graph();
  if (a.lo() != b.lo() || a.hi() != b.hi()) throw std::invalid_argument("pointwise_leq: domains differ");
  const std::vector<double> ks = merged_knots(a, b);
  for (std::size_t k = 0; k < ks.size(); ++k) {
    if (u(ks[k]) > v(ks[k])) return false;
    if (k + 1 < ks.size()) {
      if (a.upper_at(ks[k]) > b.upper_at(ks[k])) return false;
      if (a.lower_at(ks[k + 1]) > b.lower_at(ks[k + 1])) return false;
    }
  }
  return true;
}

bool pointwise_leq(const DDF& f, const DDF& g) {
  // f(inf) = g(inf) = 1, so the left-continuous reading decides everything else.
  return pointwise_leq(left_reg(f), left_reg(g));
}

}  // namespace tddf
