// Command-line front end for the d.d.f. toolkit.
//
// Exit codes: 0 success, 1 usage or input errors, 2 when a theorem
// reproduction is refuted or inconclusive.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tddf/classify.hpp"
#include "tddf/error.hpp"
#include "tddf/experiments.hpp"
#include "tddf/falsify.hpp"
#include "tddf/report.hpp"
#include "tddf/tensor.hpp"

using namespace tddf;

namespace {

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  write_atomically(path, content);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<double> numbers(const std::vector<std::string>& tokens) {
  std::vector<double> out;
  for (const auto& t : tokens) out.push_back(parse_number(t));
  return out;
}

TensorPath parse_path(const std::string& s) {
  for (TensorPath p : {TensorPath::automatic, TensorPath::identity, TensorPath::step, TensorPath::pointwise_max,
                       TensorPath::dual_min, TensorPath::bnb})
    if (s == to_string(p)) return p;
  if (s == "auto") return TensorPath::automatic;
  throw std::invalid_argument("unknown path '" + s + "'");
}

std::string class_text(const DDFClass& c) {
  std::ostringstream os;
  os << "delta: " << to_string(c.delta) << "\n"
     << "dplus: " << to_string(c.nondefective) << "\n"
     << "dplus0: " << to_string(c.cont_open) << "\n"
     << "dplus_c: " << to_string(c.cont) << "\n"
     << "dplus_sc: " << to_string(c.strict) << "\n";
  if (c.jump_at_zero) os << "jump_at_zero: " << format_number(c.jump_at_zero->size) << "\n";
  if (c.jump)
    os << "jump_location: " << format_number(c.jump->x_left) << " " << format_number(c.jump->x_right)
       << "\njump_size: " << format_number(c.jump->size) << "\n";
  if (c.plateau)
    os << "plateau: " << format_number(c.plateau->x_left) << " " << format_number(c.plateau->x_right) << "\n";
  os << "envelope_width: " << format_number(c.envelope_width) << "\n";
  return os.str();
}

std::string witness_text(const Verdict& v, const std::string& op, Condition c) {
  std::ostringstream os;
  os << "operation: " << op << "\ncondition: " << to_string(c) << "\n";
  os << "verdict: " << (v.found() ? "witness_found" : "no_witness_found") << "\n";
  os << "evaluations: " << v.evaluations << "\n";
  if (v.witness) {
    const auto& w = *v.witness;
    os << "points:";
    for (double p : w.points) os << ' ' << format_number(p);
    os << "\nvalues:";
    for (double p : w.values) os << ' ' << format_number(p);
    os << "\nmargin: " << format_number(w.margin) << "\nvalue_gap: " << format_number(w.value_gap)
       << "\ncomparison: " << (w.exact ? "exact" : "tolerance 1e-12") << "\n";
    if (c == Condition::TS) os << "reading: " << (w.reading == TsReading::joint ? "joint" : "literal") << "\n";
  }
  return os.str();
}

std::string csv(const BoundedCurve& c) {
  std::ostringstream os;
  os << "x,lo,hi\n";
  if (c.exact) {
    for (const auto& v : c.exact->graph().vertices())
      os << format_number(v.x) << ',' << format_number(v.y) << ',' << format_number(v.y) << "\n";
    return os.str();
  }
  for (const auto& p : c.points) os << format_number(p.x) << ',' << format_number(p.lo) << ',' << format_number(p.hi) << "\n";
  os << "inf,1,1\n";
  return os.str();
}

std::string svg(const BoundedCurve& c) {
  std::vector<CurvePoint> pts;
  if (c.exact) {
    for (const auto& v : c.exact->graph().vertices())
      if (v.x != kInf) pts.push_back({v.x, v.y, v.y});
  } else {
    pts = c.points;
  }
  double xmax = 1.0;
  for (const auto& p : pts) xmax = std::max(xmax, p.x);
  const double w = 640, h = 400, pad = 20;
  auto X = [&](double x) { return pad + (w - 2 * pad) * x / xmax; };
  auto Y = [&](double y) { return h - pad - (h - 2 * pad) * y; };
  auto line = [&](bool upper) {
    std::ostringstream os;
    for (const auto& p : pts) os << X(p.x) << ',' << Y(upper ? p.hi : p.lo) << ' ';
    return os.str();
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  os << "<polygon fill=\"#9ecae1\" fill-opacity=\"0.5\" points=\"" << line(true);
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) os << X(it->x) << ',' << Y(it->lo) << ' ';
  os << "\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"#08519c\" points=\"" << line(false) << "\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"#de2d26\" points=\"" << line(true) << "\"/>\n";
  os << "</svg>\n";
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"tddf: distance distribution functions, tensor triangle functions and their characterizations"};
  app.require_subcommand(1);

  std::string f_path, g_path, out_path, l_name = "plus", t_name = "godel", path_name = "automatic";
  std::vector<std::string> xs;
  double tol = 1e-3, threshold = 0.0;
  int max_depth = 24;
  std::size_t budget = 100000, samples = 20;
  std::uint64_t seed = 1;

  auto* eval = app.add_subcommand("eval", "evaluate a d.d.f. at points");
  std::string reading = "point";
  eval->add_option("--f", f_path, "ddf v1 file")->required();
  eval->add_option("--x", xs, "points (decimal or inf)")->required();
  eval->add_option("--reading", reading, "point, left or right")->check(CLI::IsMember({"point", "left", "right"}));

  auto* qinv = app.add_subcommand("qinv", "evaluate a quasi-inverse");
  std::string kind = "sup";
  qinv->add_option("--f", f_path, "ddf v1 file")->required();
  qinv->add_option("--y", xs, "levels in [0,1]")->required();
  qinv->add_option("--kind", kind, "sup (largest) or inf (smallest)")->check(CLI::IsMember({"sup", "inf"}));

  auto engine_opts = [&](CLI::App* sub) {
    sub->add_option("--L", l_name, "L-operation expression");
    sub->add_option("--T", t_name, "t-norm expression");
    sub->add_option("--f", f_path, "ddf v1 file")->required();
    sub->add_option("--g", g_path, "ddf v1 file")->required();
    sub->add_option("--tol", tol, "enclosure width target")->check(CLI::PositiveNumber);
    sub->add_option("--max-depth", max_depth, "branch-and-bound depth cap")->check(CLI::Range(1, 60));
    sub->add_option("--x", xs, "evaluate at these points instead of emitting the curve");
    sub->add_option("-o,--output", out_path, "output file (default stdout)");
  };
  auto* ten = app.add_subcommand("tensor", "compute the tensor of two d.d.f.s");
  engine_opts(ten);
  ten->add_option("--path", path_name, "automatic, identity, step, pointwise_max, dual_min or bnb");
  auto* tau = app.add_subcommand("tau", "compute tau with the weak constraint");
  engine_opts(tau);

  auto* cls = app.add_subcommand("classify", "classify a d.d.f. or an enclosure");
  std::string curve_path, quasi_path;
  auto* cls_src = cls->add_option_group("source");
  cls_src->add_option("--f", f_path, "ddf v1 file");
  cls_src->add_option("--curve", curve_path, "curve v1 file");
  cls_src->require_option(1);
  cls->add_option("--quasi", quasi_path, "curve v1 file of the largest quasi-inverse (for strictness)");
  cls->add_option("--threshold", threshold, "jump threshold for enclosures")->check(CLI::PositiveNumber);

  auto* chk = app.add_subcommand("check-op", "law suite and condition falsifier for an operation");
  std::string op_name, cond_name, ts_reading = "joint";
  chk->add_option("--op", op_name, "operation expression")->required();
  chk->add_option("--cond", cond_name, "CL, LS, LCS, NZD or TS")->check(CLI::IsMember({"CL", "LS", "LCS", "NZD", "TS"}));
  chk->add_option("--budget", budget, "evaluation budget");
  chk->add_option("--seed", seed, "64-bit seed");
  chk->add_option("--reading", ts_reading, "TS reading: joint or literal")->check(CLI::IsMember({"joint", "literal"}));

  auto* rep = app.add_subcommand("reproduce", "reproduce one characterization for one (L, T)");
  std::string theorem;
  std::string witness_dir;
  rep->add_option("id", theorem, "theorem id")->required()->check(CLI::IsMember(theorem_ids()));
  rep->add_option("--L", l_name, "L-operation expression");
  rep->add_option("--T", t_name, "t-norm expression");
  auto lab_opts = [&](CLI::App* sub) {
    sub->add_option("--samples", samples, "random instances per experiment");
    sub->add_option("--seed", seed, "64-bit seed");
    sub->add_option("--tol", tol, "enclosure width target")->check(CLI::PositiveNumber);
    sub->add_option("--budget", budget, "falsifier budget");
    sub->add_option("--witness-dir", witness_dir, "write witness d.d.f.s and curves here");
    sub->add_option("-o,--output", out_path, "report file (default stdout)");
  };
  lab_opts(rep);

  auto* suite = app.add_subcommand("suite", "run the theorem suite on its default operation pairs");
  std::vector<std::string> ids;
  suite->add_option("ids", ids, "theorem ids (default: all)")->check(CLI::IsMember(theorem_ids()));
  lab_opts(suite);

  auto* exp = app.add_subcommand("export", "convert a d.d.f. or curve to csv, svg, ddf or curve");
  std::string format = "csv";
  auto* exp_src = exp->add_option_group("source");
  exp_src->add_option("--f", f_path, "ddf v1 file");
  exp_src->add_option("--curve", curve_path, "curve v1 file");
  exp_src->require_option(1);
  exp->add_option("--format", format, "csv, svg, ddf or curve")->check(CLI::IsMember({"csv", "svg", "ddf", "curve"}));
  exp->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*eval) {
      const DDF f = read_ddf_file(f_path);
      std::ostringstream os;
      for (double x : numbers(xs)) {
        const double v = reading == "left" ? left_reg(f)(x) : reading == "right" ? right_reg(f)(x) : f(x);
        os << format_number(x) << ' ' << format_number(v) << "\n";
      }
      emit("", os.str());
    } else if (*qinv) {
      const DDF f = read_ddf_file(f_path);
      const QuasiInverse q = kind == "sup" ? quasi_sup(f) : quasi_inf(f);
      std::ostringstream os;
      for (double y : numbers(xs)) {
        if (y < 0.0 || y > 1.0) throw std::invalid_argument("level " + format_number(y) + " is outside [0,1]");
        os << format_number(y) << ' ' << format_number(q(y)) << "\n";
      }
      emit("", os.str());
    } else if (*ten || *tau) {
      TensorRequest req{parse_lop(l_name), parse_tnorm(t_name), read_ddf_file(f_path), read_ddf_file(g_path), tol,
                        max_depth};
      if (*ten) req.path = parse_path(path_name);
      if (!xs.empty()) {
        std::ostringstream os;
        for (double x : numbers(xs)) {
          const Interval v = *ten ? tensor_at(req, x) : tau_at(req, x);
          os << format_number(x) << ' ' << format_number(v.lo) << ' ' << format_number(v.hi) << "\n";
        }
        emit(out_path, os.str());
      } else {
        const BoundedCurve c = *ten ? tensor(req) : tau_curve(req);
        emit(out_path, to_text(c));
        if (!c.converged) std::cerr << "warning: enclosure width " << format_number(c.width()) << " exceeds --tol\n";
      }
    } else if (*cls) {
      DDFClass c;
      if (!f_path.empty()) {
        c = classify(read_ddf_file(f_path));
      } else {
        const BoundedCurve h = curve_from_text(slurp(curve_path));
        std::optional<BoundedCurve> q;
        if (!quasi_path.empty()) q = curve_from_text(slurp(quasi_path));
        c = classify(h, threshold > 0.0 ? threshold : 10.0 * std::max(h.width(), 1e-3), q ? &*q : nullptr);
      }
      emit("", class_text(c));
    } else if (*chk) {
      std::ostringstream os;
      std::optional<LOp> l;
      std::optional<TNorm> t;
      try {
        l = parse_lop(op_name);
      } catch (const std::invalid_argument&) {
        t = parse_tnorm(op_name);
      }
      const LawReport laws = l ? check_laws(*l) : check_laws(*t);
      if (cond_name.empty()) {
        os << "operation: " << (l ? l->id() : t->id()) << "\nlaws: " << (laws.ok ? "pass" : "fail") << "\nchecks: "
           << laws.checks << "\n";
        if (!laws.ok) os << "failure: " << laws.failure << "\n";
        emit("", os.str());
      } else {
        const Condition c = parse_condition(cond_name);
        const Verdict v = l ? falsify(*l, c, budget, seed)
                            : falsify(*t, c, budget, seed, ts_reading == "joint" ? TsReading::joint : TsReading::literal);
        emit("", witness_text(v, l ? l->id() : t->id(), c));
      }
    } else if (*rep || *suite) {
      ExperimentOptions opt;
      opt.samples = samples;
      opt.seed = seed;
      opt.tolerance = tol;
      opt.falsify_budget = budget;
      std::vector<TheoremReport> reports;
      if (*rep) reports.push_back(reproduce(theorem, parse_lop(l_name), parse_tnorm(t_name), opt));
      else reports = run_suite(ids.empty() ? theorem_ids() : ids, opt);
      if (!witness_dir.empty())
        for (auto& r : reports) attach_witness_files(r, witness_dir);
      emit(out_path, to_text(reports));
      for (const auto& r : reports)
        if (r.verdict != Outcome::reproduced) return 2;
    } else if (*exp) {
      BoundedCurve c = f_path.empty() ? curve_from_text(slurp(curve_path))
                                      : BoundedCurve::from_exact(read_ddf_file(f_path), "file");
      std::string text;
      if (format == "csv") text = csv(c);
      else if (format == "svg") text = svg(c);
      else if (format == "curve") text = to_text(c);
      else if (c.exact) text = to_text(*c.exact);
      else throw std::invalid_argument("an enclosure has no exact ddf form; export it as curve, csv or svg");
      emit(out_path, text);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
