#include "tddf/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tddf {
namespace {

bool finite(const Vertex& v) { return std::isfinite(v.x) && std::isfinite(v.y); }

bool collinear(const Vertex& a, const Vertex& b, const Vertex& c) {
  if (a.x == b.x && b.x == c.x) return true;
  if (a.y == b.y && b.y == c.y) return true;
  if (!(finite(a) && finite(b) && finite(c))) return false;
  if (!(a.x < b.x && b.x < c.x && a.y < b.y && b.y < c.y)) return false;
  const long double lhs = (static_cast<long double>(b.x) - a.x) * (static_cast<long double>(c.y) - b.y);
  const long double rhs = (static_cast<long double>(b.y) - a.y) * (static_cast<long double>(c.x) - b.x);
  return lhs == rhs;
}

void check_segment(const Vertex& a, const Vertex& b) {
  if (std::isnan(a.x) || std::isnan(a.y) || std::isnan(b.x) || std::isnan(b.y))
    throw std::invalid_argument("graph vertex is NaN");
  if (a.x == -kInf || a.y == -kInf || b.x == -kInf || b.y == -kInf)
    throw std::invalid_argument("graph vertex is -inf");
  if (b.x < a.x || b.y < a.y) throw std::invalid_argument("graph is not monotone");
  if (a.x < b.x && a.y < b.y && !(finite(a) && finite(b)))
    throw std::invalid_argument("sloped segment reaches infinity");
}

}  // namespace

MonotoneGraph::MonotoneGraph(std::vector<Vertex> vertices) {
  if (vertices.size() < 2) throw std::invalid_argument("graph needs at least two vertices");
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) check_segment(vertices[i], vertices[i + 1]);
  if (!(vertices.front().x < vertices.back().x)) throw std::invalid_argument("graph has an empty domain");

  v_.reserve(vertices.size());
  for (const Vertex& p : vertices) {
    if (!v_.empty() && v_.back() == p) continue;
    v_.push_back(p);
    while (v_.size() >= 3 && collinear(v_[v_.size() - 3], v_[v_.size() - 2], v_.back()))
      v_.erase(v_.end() - 2);
  }
}

double interpolate(const Vertex& a, const Vertex& b, double x) {
  if (a.y == b.y) return a.y;
  const double r = a.y + ((x - a.x) * (b.y - a.y)) / (b.x - a.x);
  return std::clamp(r, a.y, b.y);
}

double MonotoneGraph::lower_at(double x) const {
  if (!(x >= lo() && x <= hi())) throw std::out_of_range("point outside graph domain");
  auto it = std::lower_bound(v_.begin(), v_.end(), x, [](const Vertex& v, double t) { return v.x < t; });
  if (it->x == x) return it->y;
  return interpolate(*(it - 1), *it, x);
}

double MonotoneGraph::upper_at(double x) const {
  if (!(x >= lo() && x <= hi())) throw std::out_of_range("point outside graph domain");
  auto it = std::upper_bound(v_.begin(), v_.end(), x, [](double t, const Vertex& v) { return t < v.x; });
  if ((it - 1)->x == x) return (it - 1)->y;
  return interpolate(*(it - 1), *it, x);
}

std::vector<double> MonotoneGraph::knots() const {
  std::vector<double> out;
  for (const Vertex& v : v_)
    if (out.empty() || out.back() != v.x) out.push_back(v.x);
  return out;
}

MonotoneGraph MonotoneGraph::swapped() const {
  std::vector<Vertex> w;
  w.reserve(v_.size());
  for (const Vertex& v : v_) w.push_back({v.y, v.x});
  return MonotoneGraph(std::move(w));
}

double apply(PointOp op, double a, double b) {
  switch (op) {
    case PointOp::max: return std::max(a, b);
    case PointOp::min: return std::min(a, b);
    case PointOp::plus: return a + b;
    case PointOp::lukasiewicz: return std::max(a + b - 1.0, 0.0);
  }
  return 0.0;
}

MonotoneGraph combine(const MonotoneGraph& a, const MonotoneGraph& b, PointOp op) {
  if (a.lo() != b.lo() || a.hi() != b.hi()) throw std::invalid_argument("combine: domains differ");
  std::vector<double> ks = a.knots();
  const std::vector<double> kb = b.knots();
  ks.insert(ks.end(), kb.begin(), kb.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  std::vector<Vertex> out;
  out.reserve(ks.size() * 3);
  for (std::size_t k = 0; k < ks.size(); ++k) {
    const double x = ks[k];
    out.push_back({x, apply(op, a.lower_at(x), b.lower_at(x))});
    out.push_back({x, apply(op, a.upper_at(x), b.upper_at(x))});
    if (k + 1 == ks.size()) break;

    const double x1 = ks[k + 1];
    if (!std::isfinite(x1) || op == PointOp::plus) continue;
    const double a0 = a.upper_at(x), a1 = a.lower_at(x1);
    const double b0 = b.upper_at(x), b1 = b.lower_at(x1);
    if (!(std::isfinite(a0) && std::isfinite(a1) && std::isfinite(b0) && std::isfinite(b1))) continue;
    double d0 = 0.0, d1 = 0.0;
    if (op == PointOp::lukasiewicz) {
      d0 = a0 + b0 - 1.0;
      d1 = a1 + b1 - 1.0;
    } else {
      d0 = a0 - b0;
      d1 = a1 - b1;
    }
    if (!((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0))) continue;
    const double t = d0 / (d0 - d1);
    const double xk = x + t * (x1 - x);
    if (!(xk > x && xk < x1)) continue;
    out.push_back({xk, apply(op, a.lower_at(xk), b.lower_at(xk))});
  }
  return MonotoneGraph(std::move(out));
}

}  // namespace tddf
