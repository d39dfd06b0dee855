#include "tddf/bounded_curve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tddf/error.hpp"

namespace tddf {

double BoundedCurve::width() const {
  double w = exact ? 0.0 : std::max(tail.width(), 0.0);
  for (const auto& p : points) w = std::max(w, p.hi - p.lo);
  return w;
}

Interval BoundedCurve::at(double x) const {
  if (x == kInf) return {1.0, 1.0};
  if (exact) {
    const double v = (*exact)(x);
    return {v, v};
  }
  Interval out{0.0, tail.hi};
  for (const auto& p : points) {
    if (p.x <= x) out.lo = std::max(out.lo, p.lo);
    if (p.x >= x) {
      out.hi = std::min(out.hi, p.hi);
      break;
    }
  }
  return out;
}

BoundedCurve BoundedCurve::from_exact(const DDF& f, std::string provenance) {
  BoundedCurve c;
  for (double k : f.knots()) c.points.push_back({k, f(k), f(k)});
  const double t = f.limit_at_infinity();
  c.tail = {t, t};
  c.provenance = std::move(provenance);
  c.exact = f;
  return c;
}

std::string to_text(const BoundedCurve& c) {
  std::ostringstream os;
  os << "curve v1\n";
  os << "mode " << (c.exact ? "exact" : "enclosure") << "\n";
  os << "provenance " << (c.provenance.empty() ? "unknown" : c.provenance) << "\n";
  os << "converged " << (c.converged ? "yes" : "no") << "\n";
  os << "tail " << format_number(c.tail.lo) << ' ' << format_number(c.tail.hi) << "\n";
  if (c.exact) {
    for (const auto& v : c.exact->graph().vertices())
      os << format_number(v.x) << ' ' << format_number(v.y) << ' ' << format_number(v.y) << "\n";
    return os.str();
  }
  for (const auto& p : c.points)
    os << format_number(p.x) << ' ' << format_number(p.lo) << ' ' << format_number(p.hi) << "\n";
  os << "inf 1 1\n";
  return os.str();
}

BoundedCurve curve_from_text(std::string_view text) {
  BoundedCurve c;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  bool header = false, exact = false;
  std::vector<Vertex> verts;
  while (std::getline(in, line)) {
    ++no;
    std::istringstream ls(line);
    std::string a;
    if (!(ls >> a) || a.starts_with('#')) continue;
    if (!header) {
      std::string b;
      if (a != "curve" || !(ls >> b) || b != "v1") throw ParseError(no, "expected header 'curve v1'");
      header = true;
      continue;
    }
    std::string b, d;
    try {
      if (a == "mode") {
        ls >> b;
        if (b != "exact" && b != "enclosure") throw ParseError(no, "unknown mode '" + b + "'");
        exact = b == "exact";
      } else if (a == "provenance") {
        ls >> c.provenance;
      } else if (a == "converged") {
        ls >> b;
        c.converged = b == "yes";
      } else if (a == "tail") {
        if (!(ls >> b >> d)) throw ParseError(no, "tail needs two numbers");
        c.tail = {parse_number(b), parse_number(d)};
      } else {
        if (!(ls >> b >> d)) throw ParseError(no, "row needs three fields: x lo hi");
        const double x = parse_number(a), lo = parse_number(b), hi = parse_number(d);
        if (!(lo <= hi)) throw ParseError(no, "lo exceeds hi");
        if (exact) {
          verts.push_back({x, lo});
        } else if (x != kInf) {
          if (!c.points.empty() && !(c.points.back().x < x)) throw ParseError(no, "x not strictly increasing");
          c.points.push_back({x, lo, hi});
        }
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(no, e.what());
    }
  }
  if (!header) throw ParseError(no == 0 ? 1 : no, "missing header 'curve v1'");
  if (exact) {
    try {
      c.exact = DDF::from_vertices(std::move(verts));
    } catch (const std::invalid_argument& e) {
      throw ParseError(no, e.what());
    }
    const std::string prov = c.provenance;
    c = BoundedCurve::from_exact(*c.exact, prov);
  }
  return c;
}

double min_spacing(double x, double resolution, double floor) { return resolution * std::max(floor, std::abs(x)); }

std::vector<CurvePoint> sample_adaptive(const PointBounds& h, const SampleOptions& opt, bool* capped) {
  std::map<double, Interval> pts;
  auto add = [&](double x) {
    if (x < 0.0 || x > opt.x_end || !std::isfinite(x) || pts.count(x)) return;
    pts.emplace(x, h(x));
  };
  add(0.0);
  add(opt.x_end);
  for (std::size_t k = 1; k < opt.uniform; ++k) add(opt.x_end * static_cast<double>(k) / opt.uniform);
  for (double s : opt.seeds) add(s);
  bool hit_cap = false;
  // Sweep until no interval needs splitting; each sweep splits every offender once.
  for (bool again = true; again;) {
    again = false;
    std::vector<double> mids;
    for (auto it = pts.begin(); std::next(it) != pts.end(); ++it) {
      const auto nx = std::next(it);
      const double gap = nx->second.hi - it->second.lo;
      const double allowed = opt.relative_rise ? opt.rise * std::max(1.0, it->second.lo) : opt.rise;
      if (!(gap > allowed)) continue;
      if (nx->first - it->first <= min_spacing(nx->first, opt.resolution, opt.floor)) continue;
      const double mid = it->first + (nx->first - it->first) / 2.0;
      if (mid > it->first && mid < nx->first) mids.push_back(mid);
    }
    for (double m : mids) {
      if (pts.size() >= opt.max_points) {
        hit_cap = true;
        break;
      }
      add(m);
      again = true;
    }
    if (hit_cap) break;
  }
  if (capped) *capped = hit_cap;
  std::vector<CurvePoint> out;
  out.reserve(pts.size());
  for (const auto& [x, iv] : pts) out.push_back({x, iv.lo, iv.hi});
  return out;
}

}  // namespace tddf
