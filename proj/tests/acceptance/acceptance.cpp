// Acceptance run: one PASS/FAIL line per criterion, with the evidence behind
// it. Exits non-zero when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "tddf/classify.hpp"
#include "tddf/experiments.hpp"
#include "tddf/falsify.hpp"
#include "tddf/tensor.hpp"
#include "tddf/witness.hpp"

using namespace tddf;

namespace {

constexpr double kTol = 1e-3;
const double kLn2 = std::log(2.0);

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

// Exact routes place vertices at rounded crossing points, so their levels can
// sit an ulp above what any representable point reaches.
bool overlap(Interval a, Interval b) { return a.lo <= b.hi + 1e-12 && b.lo <= a.hi + 1e-12; }

std::string counts(const TheoremReport& r) {
  std::ostringstream os;
  os << r.holds << "/" << r.samples << " hold, " << r.fails << " fail, " << r.undecided << " undecided";
  return os.str();
}

ExperimentOptions samples(std::size_t n) {
  ExperimentOptions opt;
  opt.samples = n;
  opt.tolerance = kTol;
  return opt;
}

// 1. Step law on random steps for every builtin pair.
void step_law(Result& res) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> R(0.0, 6.0), P(0.0, 1.0);
  std::size_t checked = 0;
  for (int i = 0; i < 200; ++i) {
    double r = R(rng), s = R(rng), p = P(rng), q = P(rng);
    if (i % 10 == 0) r = 0.0;
    if (i % 13 == 0) p = 1.0;
    if (i % 17 == 0) s = kInf;
    for (const auto& ln : builtin_lop_names())
      for (const auto& tn : builtin_tnorm_names()) {
        const LOp l = builtin_lop(ln);
        const TNorm t = builtin_tnorm(tn);
        const BoundedCurve h = tensor({l, t, make_step({r, p}), make_step({s, q}), kTol});
        const DDF want = make_step({l(r, s), t(p, q)});
        res.require(h.exact && *h.exact == want && h.width() == 0.0, ln + " " + tn);
        ++checked;
      }
  }
  res.detail << checked << " (seed, L, T) cases, exact";
}

// 2. Quasi-inverse identities on random d.d.f.s.
void adjunctions(Result& res) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::size_t pairs = 0;
  for (int n = 0; n < 1000; ++n) {
    const DDF f = tddf::testing::random_ddf(rng);
    const MonotoneMap lo = left_reg(f), hi = right_reg(f);
    const QuasiInverse up = quasi_sup(f), dn = quasi_inf(f);
    std::vector<double> xs = f.knots(), ys{0.0, 1.0, U(rng), U(rng)};
    xs.push_back(kInf);
    xs.push_back(8.0 * U(rng));
    for (const auto& v : f.graph().vertices()) ys.push_back(v.y);
    for (double x : xs)
      for (double y : ys) {
        res.require((lo(x) <= y) == (x <= up(y)), "f-(x) <= y iff x <= f∨(y)");
        res.require((dn(y) <= x) == (y <= hi(x)), "f∧(y) <= x iff y <= f+(x)");
        ++pairs;
      }
    res.require(reg_of_quasi(dn) == up, "f∨ is the right regularization of f∧");
    res.require(reg_of_quasi(up) == dn, "f∧ is the left regularization of f∨");
  }
  res.detail << "1000 d.d.f.s, " << pairs << " (x, y) pairs, canonical forms equal";
}

// 3. Exact paths inside branch-and-bound enclosures.
void exact_in_enclosures(Result& res) {
  struct Case {
    const char* l;
    const char* t;
  };
  std::mt19937_64 rng(3);
  double widest = 0.0;
  for (Case c : {Case{"max", "godel"}, Case{"max", "lukasiewicz"}, Case{"plus", "godel"}}) {
    const LOp l = builtin_lop(c.l);
    const TNorm t = builtin_tnorm(c.t);
    for (int i = 0; i < 50; ++i) {
      const DDF f = tddf::testing::random_ddf(rng), g = tddf::testing::random_ddf(rng);
      const auto exact = tensor_exact(l, t, f, g);
      res.require(bool(exact), std::string("no exact path for ") + c.l + " " + c.t);
      if (!exact) continue;
      TensorRequest req{l, t, f, g, kTol, 24};
      req.path = TensorPath::bnb;
      const BoundedCurve h = tensor(req);
      for (const auto& p : h.points) {
        const double v = (*exact)(p.x);
        // Crossing points of the exact route are rounded doubles.
        res.require(p.lo <= v + 1e-12 && v <= p.hi + 1e-12, std::string(c.l) + " " + c.t + " containment");
        res.require(p.hi - p.lo <= kTol, "width");
        widest = std::max(widest, p.hi - p.lo);
      }
    }
  }
  res.detail << "L=max (T=godel, lukasiewicz) and T=godel (L=plus), 50 pairs each; widest enclosure " << widest;
}

// 4. tau against the tensor.
void tau_vs_tensor(Result& res) {
  std::mt19937_64 rng(4);
  std::size_t points = 0;
  for (const char* ln : {"plus", "w_star", "max"}) {
    const LOp l = builtin_lop(ln);
    for (int i = 0; i < 100; ++i) {
      const TNorm t = builtin_tnorm(i % 2 ? "product" : "godel");
      const DDF f = random_member(ClassId::dplus, rng), g = random_member(ClassId::dplus, rng);
      TensorRequest req{l, t, f, g, kTol};
      const BoundedCurve h = tensor(req);
      const std::size_t step = std::max<std::size_t>(1, h.points.size() / 12);
      for (std::size_t k = 0; k < h.points.size(); k += step) {
        const auto& p = h.points[k];
        res.require(overlap(tau_at(req, p.x), {p.lo, p.hi}), std::string(ln) + " overlap");
        ++points;
      }
    }
  }
  const LOp ot = builtin_lop("transpose(ordinal_033_2)");
  const Verdict v = falsify(ot, Condition::LCS, 100000, 1);
  res.require(v.found(), "no LCS witness for transpose(ordinal_033_2)");
  if (v.found()) {
    const WitnessPair wp = witness_thm38(ot, *v.witness);
    TensorRequest req{ot, builtin_tnorm("godel"), wp.f, wp.g, kTol};
    res.require(tau_at(req, wp.x0).lo == 1.0, "tau(x0) = 1");
    for (int k = 0; k < 32; ++k) res.require(tau_at(req, wp.x0 * k / 32.0).hi == 0.0, "tau below x0 = 0");
    res.require(tau_at(req, wp.x0 * (1 - 1e-9)).hi == 0.0, "tau just below x0 = 0");
    res.detail << "jump 1 at x0=" << wp.x0 << "; ";
  }
  res.detail << points << " overlap checks over 300 pairs";
}

// 5. Non-defectiveness.
void defect(Result& res) {
  std::mt19937_64 rng(5);
  double lowest = 1.0;
  for (const char* ln : {"plus", "max"}) {
    const LOp l = builtin_lop(ln);
    for (int i = 0; i < 100; ++i) {
      const TNorm t = builtin_tnorm(i % 2 ? "product" : "godel");
      const DDF f = random_member(ClassId::dplus, rng), g = random_member(ClassId::dplus, rng);
      const double far = l(f.last_knot(), g.last_knot()) + 1.0;
      const double hi = tensor_at({l, t, f, g, kTol}, far).hi;
      res.require(hi > 1.0 - kTol, std::string(ln) + " defective output");
      lowest = std::min(lowest, hi);
    }
  }
  const LOp w = builtin_lop("w_star");
  const DDF f = witness_thm42(w, kLn2);
  for (const char* tn : {"godel", "product"}) {
    const TNorm t = builtin_tnorm(tn);
    const double bound = t(f(kLn2), f(kLn2));
    const BoundedCurve h = tensor({w, t, f, f, kTol});
    double sup = 0.0;
    for (const auto& p : h.points) sup = std::max(sup, p.hi);
    for (double x : {10.0, 100.0, 1e6}) sup = std::max(sup, tensor_at({w, t, f, f, kTol}, x).hi);
    res.require(1.0 - sup >= 1.0 - bound - kTol, std::string("w_star ") + tn + " not bounded away from 1");
    res.detail << "w_star/" << tn << " sup " << sup << " <= " << bound << "; ";
  }
  res.detail << "plus/max: lowest far value " << lowest << " over 200 pairs";
}

// 6. Continuity on ]0, inf].
void continuity_open(Result& res) {
  const TheoremReport r = reproduce("prop43", builtin_lop("plus"), builtin_tnorm("dyadic_033_3"), samples(1));
  const auto& in = r.instances.at(0);
  res.require(in.jump && in.jump->size > 10 * kTol && in.jump->x_left <= 1.0, "dyadic witness jump");
  if (in.jump) res.detail << "dyadic jump " << in.jump->size << " at ]" << in.jump->x_left << "; ";
  std::size_t total = 0;
  for (const char* ln : {"max", "plus"})
    for (const char* tn : {"godel", "product", "lukasiewicz"}) {
      const TheoremReport c = closure_experiment(builtin_lop(ln), builtin_tnorm(tn), ClassId::dplus0, samples(100));
      res.require(c.holds == 100, std::string(ln) + " " + tn + ": " + counts(c));
      total += c.holds;
    }
  res.detail << total << "/600 pairs stay in D+_0";
}

// 7. Continuity on [0, inf].
void continuity(Result& res) {
  const TheoremReport r =
      reproduce("prop44", builtin_lop("transpose(ordinal_033_2)"), builtin_tnorm("godel"), samples(1));
  const auto& in = r.instances.at(0);
  double plateau = 0.0;
  std::string membership;
  for (const auto& [k, v] : in.fields) {
    if (k == "quasi_plateau_length") plateau = std::stod(v);
    if (k == "membership") membership = v;
  }
  res.require(membership == "fails", "prop44 output not flagged outside D+_0");
  res.require(plateau >= 0.25, "plateau shorter than (1 - y0)/2");
  res.detail << "h∨ plateau " << plateau << " >= 0.25; ";
  std::size_t total = 0;
  for (const char* ln : {"max", "plus"})
    for (const char* tn : {"godel", "product"}) {
      const TheoremReport c = closure_experiment(builtin_lop(ln), builtin_tnorm(tn), ClassId::dplus_c, samples(100));
      res.require(c.holds == 100, std::string(ln) + " " + tn + ": " + counts(c));
      total += c.holds;
    }
  res.require(classify(DDF()).cont == Membership::fails, "identity classified continuous");
  res.detail << total << "/400 pairs stay in D+_c; identity not in D+_c";
}

// 8. The ideal property.
void ideal(Result& res) {
  const LOp m = builtin_lop("max");
  const WitnessPair wp = witness_thm49(m, 2.0, 0.5, 1.0, 0.5);
  const QuasiInverse u = quasi_sup(wp.f), v = quasi_sup(wp.g);
  for (const char* tn : {"godel", "product"}) {
    const TNorm t = builtin_tnorm(tn);
    for (double d : {0.4, 0.1, 1e-2, 1e-3, 1e-4}) {
      const Interval q = tensor_quasi(m, t, u, v, 1.0 - d);
      res.require(q.contains(2.0) && q.width() <= 2 * kTol, std::string("h∨ not constant for ") + tn);
    }
    res.require(tensor_quasi(m, t, u, v, 0.5).contains(2.0), "h∨(0.5) != 2");
    TensorRequest req{m, t, wp.f, wp.g, kTol};
    const BoundedCurve h = tensor(req), q = tensor_quasi_curve(req);
    res.require(classify(h, 10 * kTol, &q).cont_open == Membership::fails, std::string("max ") + tn + " continuous");
  }
  res.detail << "max witness: h∨ = 2 on [0.5, 1 - 1e-4], flagged discontinuous; ";
  std::size_t total = 0;
  for (const char* tn : {"godel", "product"}) {
    const TheoremReport c = closure_experiment(builtin_lop("plus"), builtin_tnorm(tn), ClassId::ideal, samples(100));
    res.require(c.holds == 100, std::string("plus ") + tn + ": " + counts(c));
    total += c.holds;
  }
  res.detail << total << "/200 (jumpy f, continuous g) pairs give continuous outputs";
}

// 9. Strictness.
void strictness(Result& res) {
  // min violates TS as literally stated (min(0.3,0.9) = min(0.3,0.8)) but not
  // the reading x<x', y<y'. Look for a strict pair that loses strictness.
  const TNorm g = builtin_tnorm("godel");
  std::size_t tried = 0, lost = 0;
  for (const char* ln : {"plus", "max"}) {
    ExperimentOptions opt = samples(100);
    opt.fallback = false;
    const TheoremReport c = closure_experiment(builtin_lop(ln), g, ClassId::dplus_sc, opt);
    tried += c.samples;
    lost += c.fails;
  }
  const bool literal = falsify(g, Condition::TS, 100000, 1, TsReading::literal).found();
  const bool joint = falsify(g, Condition::TS, 100000, 1, TsReading::joint).found();
  res.detail << "min TS witness: literal " << (literal ? "found" : "none") << ", joint " << (joint ? "found" : "none")
             << "; ";
  res.require(lost > 0, "no strict pair left D+_sc under T=godel");
  res.detail << "godel: " << lost << "/" << tried << " strict pairs left D+_sc; ";
  const TheoremReport c =
      closure_experiment(builtin_lop("plus"), builtin_tnorm("product"), ClassId::dplus_sc, samples(50));
  res.require(c.holds == 50, "plus product: " + counts(c));
  res.detail << "plus/product: " << counts(c);
}

// 10. Declared condition failures against the falsifier.
void flag_audit(Result& res) {
  struct Expect {
    const char* op;
    Condition c;
    bool fails;
  };
  const std::vector<Expect> table{
      {"w_star", Condition::NZD, true},  {"w_star", Condition::LS, true},    {"w_star", Condition::LCS, false},
      {"max", Condition::CL, true},      {"max", Condition::LS, false},      {"max", Condition::LCS, false},
      {"max", Condition::NZD, false},    {"plus", Condition::CL, false},     {"plus", Condition::LS, false},
      {"plus", Condition::LCS, false},   {"plus", Condition::NZD, false},
      {"transpose(ordinal_033_2)", Condition::LCS, true},
      {"transpose(ordinal_033_2)", Condition::NZD, false},
      {"transpose(dyadic_033_3)", Condition::CL, false},
      {"transpose(dyadic_033_3)", Condition::LS, false},
  };
  for (const auto& e : table) {
    const LOp l = builtin_lop(e.op);
    const Verdict v = falsify(l, e.c, 100000, 1);
    const bool ok = v.found() == e.fails && (!v.found() || verify(l, *v.witness));
    res.require(ok, std::string(e.op) + " " + std::string(to_string(e.c)));
  }
  res.detail << table.size() << " (operation, condition) verdicts at budget 1e5, seed 1";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Result&)>>> criteria{
      {"step law", step_law},
      {"quasi-inverse adjunctions", adjunctions},
      {"exact paths inside enclosures", exact_in_enclosures},
      {"tau and tensor", tau_vs_tensor},
      {"non-defectiveness", defect},
      {"continuity on ]0,inf]", continuity_open},
      {"continuity on [0,inf]", continuity},
      {"ideal", ideal},
      {"strictness", strictness},
      {"condition audit", flag_audit},
  };
  int failed = 0, n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Result res;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(res);
    } catch (const std::exception& e) {
      res.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s (%.1fs): %s\n", res.pass ? "PASS" : "FAIL", n, name, secs, res.detail.str().c_str());
    std::fflush(stdout);
    failed += !res.pass;
  }
  std::printf("%d of %d criteria passed\n", n - failed, n);
  return failed ? 1 : 0;
}
