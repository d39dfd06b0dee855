#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "tddf/falsify.hpp"

using namespace tddf;
using tddf::testing::all_lops;
using tddf::testing::all_tnorms;

namespace {

const double ln2 = std::log(2.0);

// Independent statement of the dyadic block t-norm: locate the blocks by
// repeated halving rather than frexp.
double dyadic_oracle(double x, double y) {
  if (x == 0.0 || y == 0.0) return 0.0;
  int m = 0, n = 0;
  double sx = x, sy = y;
  while (sx <= 0.5) sx *= 2, ++m;
  while (sy <= 0.5) sy *= 2, ++n;
  const double F = 2 * (sx * sy) - (sx + sy) + 1;
  return std::ldexp(F, -(m + n));
}

double ordinal_oracle(double x, double y) {
  if (x <= 0.5 && y <= 0.5) return 2 * x * y;
  if (x >= 0.5 && y >= 0.5) return std::max(x + y - 1, 0.5);
  return std::min(x, y);
}

bool is(Tri t) { return t == Tri::yes; }

}  // namespace

TEST_CASE("builtin t-norm values") {
  CHECK(builtin_tnorm("godel")(0.3, 0.8) == 0.3);
  CHECK(builtin_tnorm("product")(0.5, 0.25) == 0.125);
  CHECK(builtin_tnorm("lukasiewicz")(0.6, 0.7) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(builtin_tnorm("lukasiewicz")(0.25, 0.5) == 0.0);
  const TNorm d = builtin_tnorm("dyadic_033_3");
  CHECK(d(0.75, 0.75) == 0.625);
  const TNorm o = builtin_tnorm("ordinal_033_2");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = U(rng), y = U(rng);
    CHECK(d(x, y) == doctest::Approx(dyadic_oracle(x, y)).epsilon(1e-14));
    CHECK(o(x, y) == doctest::Approx(ordinal_oracle(x, y)).epsilon(1e-14));
  }
  for (int m = 0; m < 6; ++m)
    for (int n = 0; n < 6; ++n) {
      const double x = std::ldexp(1.0, -m), y = std::ldexp(1.0, -n);
      CHECK(d(x, y) == dyadic_oracle(x, y));
    }
  CHECK_THROWS_AS(builtin_tnorm("hamacher"), std::invalid_argument);
}

TEST_CASE("builtin L-operation values") {
  CHECK(builtin_lop("max")(2, 3) == 3);
  CHECK(builtin_lop("plus")(2, kInf) == kInf);
  CHECK(builtin_lop("plus")(2, 3) == 5);
  const LOp w = builtin_lop("w_star");
  CHECK(w(ln2, ln2) == kInf);
  CHECK(w(0, 5) == 5);
  CHECK(w(0.1, 0.2) == doctest::Approx(-std::log(std::exp(-0.1) + std::exp(-0.2) - 1)).epsilon(1e-12));
  CHECK(w(1, 2) == kInf);
  CHECK_THROWS_AS(builtin_lop("min"), std::invalid_argument);
}

TEST_CASE("every builtin passes the law suite") {
  for (const auto& t : all_tnorms()) {
    const auto rep = check_laws(t);
    CHECK_MESSAGE(rep.ok, t.id(), ": ", rep.failure);
    CHECK(rep.checks >= 10000);
  }
  for (const auto& l : all_lops()) {
    const auto rep = check_laws(l);
    CHECK_MESSAGE(rep.ok, l.id(), ": ", rep.failure);
    for (double x : {0.0, 1.0, 17.0, kInf}) CHECK(l(x, kInf) == kInf);
  }
}

TEST_CASE("registration rejects operations that break a law") {
  TNorm skew("skew", [](double a, double b) { return a * b * b; }, {});
  CHECK_THROWS_AS(register_tnorm(skew), std::invalid_argument);
  LOp finite_inf("capped", [](double a, double b) { return std::min(a + b, 100.0); }, {});
  CHECK_THROWS_AS(register_lop(finite_inf), std::invalid_argument);
  TNorm ok("min2", [](double a, double b) { return std::min(a, b); }, {});
  CHECK_NOTHROW(register_tnorm(ok));
}

TEST_CASE("transposes of godel and product are max and plus") {
  const LOp m = transpose(builtin_tnorm("godel")), p = transpose(builtin_tnorm("product"));
  std::vector<double> grid;
  for (int i = 0; i < 99; ++i) grid.push_back(i * 0.37);
  grid.push_back(kInf);
  for (double x : grid)
    for (double y : grid) {
      CHECK(values_equal(m(x, y), std::max(x, y), false));
      CHECK(values_equal(p(x, y), x + y, false));
    }
}

TEST_CASE("transposition is undone by the inverse map") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(1e-3, 1.0);
  for (const auto& t : all_tnorms()) {
    const LOp l = transpose(t);
    auto back = [&](double x, double y) {
      const double v = l(x == 0.0 ? kInf : -std::log(x), y == 0.0 ? kInf : -std::log(y));
      return v == kInf ? 0.0 : std::exp(-v);
    };
    for (int i = 0; i < 2000; ++i) {
      const double x = U(rng), y = U(rng);
      CHECK(std::abs(back(x, y) - t(x, y)) <= 1e-12);
    }
    for (double x : {0.0, 1.0}) {
      CHECK(back(0.0, x) == 0.0);
      CHECK(back(1.0, x) == x);
      CHECK(back(x, 1.0) == x);
    }
    CHECK(std::abs(back(1.0, 0.3) - 0.3) <= 1e-12);
  }
}

TEST_CASE("declared flags") {
  const TNorm d = builtin_tnorm("dyadic_033_3");
  CHECK(is(d.flags().left_continuous));
  CHECK(d.flags().continuous == Tri::no);
  CHECK(is(d.flags().cancellative));
  const LOp dt = transpose(d);
  CHECK(is(dt.flags().right_continuous));
  CHECK(dt.flags().continuous == Tri::no);
  CHECK(is(dt.flags().cl));

  const LOp w = builtin_lop("w_star");
  CHECK(w.flags().nzd == Tri::no);
  CHECK(w.flags().ls == Tri::no);
  CHECK(is(w.flags().lcs));
  const LOp m = builtin_lop("max");
  CHECK(m.flags().cl == Tri::no);
  CHECK(is(m.flags().ls));
  const LOp ot = transpose(builtin_tnorm("ordinal_033_2"));
  CHECK(is(ot.flags().nzd));
  CHECK(ot.flags().lcs == Tri::no);
}

TEST_CASE("declared flags respect the implication chain") {
  for (const auto& l : all_lops()) {
    const auto& f = l.flags();
    if (is(f.cl)) CHECK(is(f.ls));
    CHECK((is(f.ls)) == (is(f.lcs) && is(f.nzd)));
  }
}

TEST_CASE("the falsifier never contradicts a declared-true flag") {
  for (const auto& l : all_lops()) {
    const auto& f = l.flags();
    for (auto [c, declared] : {std::pair{Condition::CL, f.cl}, {Condition::LS, f.ls}, {Condition::LCS, f.lcs},
                               {Condition::NZD, f.nzd}}) {
      const Verdict v = falsify(l, c, 20000, 1);
      if (is(declared)) CHECK_MESSAGE(!v.found(), l.id(), " ", to_string(c));
      if (v.found()) CHECK(verify(l, *v.witness));
    }
  }
  for (const auto& t : all_tnorms()) {
    const Verdict v = falsify(t, Condition::TS, 20000, 1);
    if (is(t.flags().ts)) CHECK_MESSAGE(!v.found(), t.id());
    if (v.found()) CHECK(verify(t, *v.witness));
  }
}

TEST_CASE("falsifier examples") {
  const Verdict nzd = falsify(builtin_lop("wstar"), Condition::NZD, 10000, 7);
  REQUIRE(nzd.found());
  CHECK(nzd.witness->points[0] == doctest::Approx(ln2).epsilon(1e-15));
  CHECK(nzd.witness->points[1] == doctest::Approx(ln2).epsilon(1e-15));
  CHECK(nzd.witness->values[0] == kInf);

  const LOp ot = parse_lop("transpose(ordinal033_2)");
  const Verdict lcs = falsify(ot, Condition::LCS, 100000, 1);
  REQUIRE(lcs.found());
  const auto& p = lcs.witness->points;
  REQUIRE(p.size() == 4);
  CHECK(p[0] < p[1]);
  CHECK(p[2] < p[3]);
  CHECK(ot(p[1], p[3]) < kInf);
  CHECK(values_equal(ot(p[0], p[2]), ot(p[1], p[3]), ot.closed_form()));

  const LOp m = builtin_lop("max");
  ConditionWitness hand{Condition::CL, {2.0, 0.5, 1.0}, {2.0, 2.0}};
  CHECK(verify(m, hand));
  CHECK(falsify(m, Condition::CL, 10000, 1).found());
  CHECK_FALSE(falsify(builtin_lop("plus"), Condition::NZD, 100000, 3).found());
  CHECK_THROWS_AS(falsify(builtin_lop("plus"), Condition::TS, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(falsify(builtin_tnorm("godel"), Condition::CL, 100, 1), std::invalid_argument);
}

TEST_CASE("both readings of joint strictness") {
  const TNorm g = builtin_tnorm("godel");
  CHECK_FALSE(falsify(g, Condition::TS, 100000, 1, TsReading::joint).found());
  const Verdict lit = falsify(g, Condition::TS, 100000, 1, TsReading::literal);
  REQUIRE(lit.found());
  CHECK(lit.witness->reading == TsReading::literal);
  CHECK(verify(g, *lit.witness));
  CHECK(falsify(builtin_tnorm("lukasiewicz"), Condition::TS, 100000, 1).found());
  CHECK_FALSE(falsify(builtin_tnorm("product"), Condition::TS, 100000, 1).found());
}

TEST_CASE("falsifier is deterministic in its seed") {
  const LOp w = builtin_lop("w_star");
  const Verdict a = falsify(w, Condition::LS, 5000, 42), b = falsify(w, Condition::LS, 5000, 42);
  REQUIRE(a.found() == b.found());
  CHECK(a.evaluations == b.evaluations);
  if (a.found()) CHECK(a.witness->points == b.witness->points);
}

TEST_CASE("operation expression grammar") {
  CHECK(parse_tnorm("min").id() == "godel");
  CHECK(parse_tnorm("prod").id() == "product");
  CHECK(parse_tnorm("luk").id() == "lukasiewicz");
  CHECK(parse_tnorm("ordinal033_2").id() == "ordinal_033_2");
  CHECK(parse_tnorm("dyadic033_3").id() == "dyadic_033_3");
  CHECK(parse_lop("wstar").id() == "w_star");
  CHECK(parse_lop(" transpose( prod ) ").kind() == LOpKind::transpose);
  CHECK_THROWS_AS(parse_lop("transpose(max)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lop("system(\"rm\")"), std::invalid_argument);
}
