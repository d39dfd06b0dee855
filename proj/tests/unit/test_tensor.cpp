#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "tddf/bnb.hpp"
#include "tddf/error.hpp"
#include "tddf/tensor.hpp"

using namespace tddf;
using tddf::testing::all_lops;
using tddf::testing::all_tnorms;
using tddf::testing::random_ddf;

namespace {

// Exhaustive 64x64 grid over [0, span] plus one cell reaching inf. The point
// maximum is a lower bound on the supremum; the cell maximum, taking the top
// corner of every cell whose bottom corner is feasible, is an upper bound.
Interval grid_oracle(const LOp& l, const TNorm& t, const DDF& f, const DDF& g, double x, double span) {
  constexpr int n = 64;
  std::vector<double> r(n + 1);
  for (int i = 0; i < n; ++i) r[i] = span * i / (n - 1);
  r[n] = kInf;
  auto fv = [](const DDF& h, double v) { return v == kInf ? h.limit_at_infinity() : h(v); };
  Interval out{0.0, 0.0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!(l(r[i], r[j]) < x)) continue;
      out.lo = std::max(out.lo, t(f(r[i]), g(r[j])));
      out.hi = std::max(out.hi, t(fv(f, r[i + 1]), fv(g, r[j + 1])));
    }
  return out;
}

TensorRequest request(const LOp& l, const TNorm& t, const DDF& f, const DDF& g) { return {l, t, f, g}; }

}  // namespace

TEST_CASE("steps combine by the step law, exactly") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> q(0, 32);
  for (const auto& l : all_lops())
    for (const auto& t : all_tnorms())
      for (int n = 0; n < 20; ++n) {
        const double r = q(rng) / 8.0, s = q(rng) / 8.0, p = q(rng) / 32.0, pp = q(rng) / 32.0;
        const BoundedCurve c = tensor(request(l, t, make_step({r, p}), make_step({s, pp})));
        REQUIRE(c.exact);
        CHECK(c.width() == 0.0);
        CHECK(*c.exact == make_step({l(r, s), t(p, pp)}));
      }
}

TEST_CASE("the identity step is neutral") {
  std::mt19937_64 rng(2);
  for (const auto& l : all_lops())
    for (const auto& t : all_tnorms()) {
      const DDF f = random_ddf(rng);
      const BoundedCurve c = tensor(request(l, t, f, make_step({0.0, 1.0})));
      REQUIRE(c.exact);
      CHECK(*c.exact == f);
    }
}

TEST_CASE("enclosures contain the grid oracle") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> X(0.05, 9.0);
  for (const auto& l : all_lops())
    for (const auto& t : all_tnorms())
      for (int n = 0; n < 50; ++n) {
        const DDF f = random_ddf(rng), g = random_ddf(rng);
        TensorRequest req = request(l, t, f, g);
        req.path = TensorPath::bnb;
        const double span = std::max(f.last_knot(), g.last_knot()) + 1.0;
        for (int k = 0; k < 3; ++k) {
          const double x = X(rng);
          const Interval e = tensor_at(req, x);
          const Interval o = grid_oracle(l, t, f, g, x, span);
          CHECK_MESSAGE(o.lo <= e.hi + 1e-12, l.id(), " ", t.id(), " x=", x);
          CHECK_MESSAGE(e.lo <= o.hi + 1e-12, l.id(), " ", t.id(), " x=", x);
          CHECK(e.width() <= req.tolerance);
        }
      }
}

TEST_CASE("exact paths agree with each other and with branch and bound") {
  std::mt19937_64 rng(4);
  const LOp mx = builtin_lop("max"), pl = builtin_lop("plus");
  const TNorm mn = builtin_tnorm("godel");
  for (int n = 0; n < 100; ++n) {
    const DDF f = random_ddf(rng), g = random_ddf(rng);
    const auto a = tensor_exact(mx, mn, f, g, TensorPath::pointwise_max);
    const auto b = tensor_exact(mx, mn, f, g, TensorPath::dual_min);
    REQUIRE(a);
    REQUIRE(b);
    // The dual path inserts rounded crossing points, so agreement is to 1e-12.
    for (double x : f.knots()) CHECK(std::abs((*a)(x) - (*b)(x)) <= 1e-12);
    for (double x : g.knots()) CHECK(std::abs((*a)(x) - (*b)(x)) <= 1e-12);

    for (const LOp& l : {mx, pl}) {
      TensorRequest req = request(l, mn, f, g);
      const auto h = tensor_exact(l, mn, f, g);
      REQUIRE(h);
      req.path = TensorPath::bnb;
      const BoundedCurve c = tensor(req);
      CHECK(c.converged);
      for (const auto& p : c.points) {
        CHECK(p.lo <= (*h)(p.x) + 1e-12);
        CHECK((*h)(p.x) <= p.hi + 1e-12);
      }
    }
  }
}

TEST_CASE("dual formula for the minimum t-norm") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> Y(0.0, 1.0);
  for (const char* ln : {"max", "plus", "w_star"}) {
    const LOp l = builtin_lop(ln);
    const TNorm mn = builtin_tnorm("godel");
    for (int n = 0; n < 50; ++n) {
      const DDF f = random_ddf(rng), g = random_ddf(rng);
      const QuasiInverse u = quasi_sup(f), v = quasi_sup(g);
      const double y = Y(rng);
      const Interval a = tensor_quasi(l, mn, u, v, y);
      CHECK(a.lo == l(u(y), v(y)));
      const auto b = inf_bnb_quasi(l, mn, u, v, y);
      CHECK(b.bounds.lo <= a.lo * (1 + 1e-12) + 1e-12);
      CHECK(a.lo <= b.bounds.hi * (1 + 1e-12) + 1e-12);
    }
  }
}

TEST_CASE("tensor is increasing in each place") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> X(0.05, 8.0);
  for (const auto& l : all_lops())
    for (const auto& t : all_tnorms())
      for (int n = 0; n < 10; ++n) {
        const DDF f = random_ddf(rng), g = random_ddf(rng), h = random_ddf(rng);
        std::vector<Vertex> squeezed;
        for (const auto& v : f.graph().vertices()) squeezed.push_back({v.x / 2, v.y});
        const DDF f2 = DDF::from_vertices(squeezed);  // f <= f2
        const DDF g2 = sup_family(std::vector<DDF>{g, h});
        const TensorRequest lo = request(l, t, f, g), hi = request(l, t, f2, g2);
        for (int k = 0; k < 4; ++k) {
          const double x = X(rng);
          CHECK(tensor_at(lo, x).lo <= tensor_at(hi, x).hi + 1e-12);
        }
        const auto a = tensor_exact(l, t, f, g), b = tensor_exact(l, t, f2, g2);
        if (a && b) {
          for (double x : a->knots()) CHECK((*a)(x) <= (*b)(x) + 1e-12);
          for (double x : b->knots()) CHECK((*a)(x) <= (*b)(x) + 1e-12);
        }
      }
}

TEST_CASE("tau dominates the tensor") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> X(0.05, 8.0);
  for (const auto& l : all_lops())
    for (const auto& t : all_tnorms())
      for (int n = 0; n < 10; ++n) {
        const TensorRequest req = request(l, t, random_ddf(rng), random_ddf(rng));
        for (int k = 0; k < 4; ++k) {
          const double x = X(rng);
          CHECK(tau_at(req, x).hi + 1e-12 >= tensor_at(req, x).lo);
        }
      }
}

TEST_CASE("associativity") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> q(0, 16);
  for (const auto& l : all_lops())
    for (const auto& t : all_tnorms())
      for (int n = 0; n < 10; ++n) {
        const DDF a = make_step({q(rng) / 4.0, q(rng) / 16.0}), b = make_step({q(rng) / 4.0, q(rng) / 16.0}),
                  c = make_step({q(rng) / 4.0, q(rng) / 16.0});
        const DDF ab = *tensor(request(l, t, a, b)).exact, bc = *tensor(request(l, t, b, c)).exact;
        const auto u = as_step(*tensor(request(l, t, ab, c)).exact), v = as_step(*tensor(request(l, t, a, bc)).exact);
        REQUIRE(u);
        REQUIRE(v);
        // Exact for closed-form operations, 1e-12 through exp and log.
        CHECK(values_equal(u->r.value(), v->r.value(), l.closed_form()));
        CHECK(values_equal(u->p, v->p, t.closed_form()));
        CHECK(*tensor(request(l, t, a, b)).exact == *tensor(request(l, t, b, a)).exact);
      }
  // Piecewise-linear inputs, with the inner product taken on an exact path.
  std::uniform_real_distribution<double> X(0.05, 8.0);
  for (const char* ln : {"max", "plus"})
    for (const char* tn : {"godel", "product", "lukasiewicz"}) {
      const LOp l = builtin_lop(ln);
      const TNorm t = builtin_tnorm(tn);
      for (int n = 0; n < 10; ++n) {
        const DDF f = random_ddf(rng), g = random_ddf(rng), h = random_ddf(rng);
        const auto fg = tensor_exact(l, t, f, g), gh = tensor_exact(l, t, g, h);
        if (!fg || !gh) continue;
        TensorRequest left = request(l, t, *fg, h), right = request(l, t, f, *gh);
        left.path = right.path = TensorPath::bnb;
        for (int k = 0; k < 4; ++k) {
          const double x = X(rng);
          const Interval u = tensor_at(left, x), v = tensor_at(right, x);
          CHECK(u.lo <= v.hi + 1e-12);
          CHECK(v.lo <= u.hi + 1e-12);
        }
      }
    }
}

TEST_CASE("tensor never exceeds either input") {
  std::mt19937_64 rng(9);
  for (const auto& l : all_lops())
    for (const auto& t : all_tnorms())
      for (int n = 0; n < 5; ++n) {
        const DDF f = random_ddf(rng), g = random_ddf(rng);
        const BoundedCurve c = tensor(request(l, t, f, g));
        for (const auto& p : c.points) CHECK(p.lo <= std::min(f(p.x), g(p.x)) + 1e-12);
        CHECK(c.tail.lo <= std::min(f.limit_at_infinity(), g.limit_at_infinity()) + 1e-12);
      }
}

TEST_CASE("hypotheses are enforced") {
  const LOp bare("bare", [](double a, double b) { return a + b; }, {});
  const TensorRequest req{bare, builtin_tnorm("godel"), make_step({1.0, 0.5}), make_step({1.0, 0.5})};
  CHECK_THROWS_AS(tensor(req), HypothesisError);
}

TEST_CASE("curve v1 round trip") {
  std::mt19937_64 rng(10);
  const TensorRequest req{builtin_lop("plus"), builtin_tnorm("product"), random_ddf(rng), random_ddf(rng)};
  const BoundedCurve c = tensor(req);
  const BoundedCurve d = curve_from_text(to_text(c));
  REQUIRE(c.points.size() == d.points.size());
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    CHECK(c.points[i].x == d.points[i].x);
    CHECK(c.points[i].lo == d.points[i].lo);
    CHECK(c.points[i].hi == d.points[i].hi);
  }
  CHECK(to_text(d) == to_text(c));
  const BoundedCurve e = tensor({builtin_lop("plus"), builtin_tnorm("godel"), random_ddf(rng), random_ddf(rng)});
  REQUIRE(e.exact);
  const BoundedCurve e2 = curve_from_text(to_text(e));
  REQUIRE(e2.exact);
  CHECK(*e2.exact == *e.exact);
}

TEST_CASE("tau differs from the tensor exactly where LCS fails") {
  const TauTensorVerdict bad = tau_equals_tensor(parse_lop("transpose(ordinal033_2)"), builtin_tnorm("godel"));
  CHECK(bad.witness_found);
  CHECK(bad.tau.lo - bad.tensor.hi > 0.5);
  const TauTensorVerdict good = tau_equals_tensor(builtin_lop("plus"), builtin_tnorm("godel"), 2000);
  CHECK_FALSE(good.witness_found);
}
