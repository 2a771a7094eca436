#include "fhle/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "fhle/error.hpp"
#include "fhle/exponents.hpp"
#include "fhle/extension.hpp"
#include "fhle/io.hpp"
#include "fhle/kernels.hpp"
#include "fhle/monotonicity.hpp"
#include "fhle/estimates.hpp"
#include "fhle/parallel.hpp"
#include "fhle/specfun.hpp"
#include "fhle/verify.hpp"

namespace fhle::cli {

using nlohmann::json;

void SweepConfig::validate() const {
  if (!(lo < hi)) fail(ErrorKind::InvalidParameter, "sweep range needs lo < hi");
  if (count < 2) fail(ErrorKind::InvalidParameter, "sweep needs count >= 2");
  if (spacing == Spacing::Geometric && !(lo > 0.0)) fail(ErrorKind::InvalidParameter, "geometric spacing needs lo > 0");
  if (axis == SweepAxis::N) {
    for (double v : nodes())
      if (std::abs(v - std::round(v)) > 1e-9) fail(ErrorKind::InvalidParameter, "n axis nodes must be integers");
  }
  // The fixed parameters are validated row by row through ProblemParams.
  at(lo);
}

std::vector<double> SweepConfig::nodes() const {
  std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) {
    const double t = static_cast<double>(k) / (count - 1);
    out[k] = spacing == Spacing::Linear ? lo + t * (hi - lo) : lo * std::pow(hi / lo, t);
  }
  if (count >= 2) out.back() = hi;
  return out;
}

ProblemParams SweepConfig::at(double v) const {
  switch (axis) {
    case SweepAxis::P: return ProblemParams::make(n, s, a, v);
    case SweepAxis::N: return ProblemParams::make(static_cast<int>(std::lround(v)), s, a, p);
    case SweepAxis::S: return ProblemParams::make(n, v, a, p);
    case SweepAxis::A: return ProblemParams::make(n, s, v, p);
  }
  return ProblemParams::make(n, s, a, p);
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const auto xs = cfg.nodes();
  std::vector<SweepRow> rows(xs.size());
  parallel_for(xs.size(), [&](std::size_t k) {
    const ProblemParams P = cfg.at(xs[k]);
    const auto c = classify(P);
    SweepRow& row = rows[k];
    row.axis_value = cfg.axis == SweepAxis::N ? std::round(xs[k]) : xs[k];
    row.p_sobolev = c.p_sobolev;
    row.margin = c.margin;
    row.verdict = std::string(to_string(c.verdict));
    row.lambda_alpha = NAN;
    row.amplitude = NAN;
    try {
      row.lambda_alpha = lambda_alpha(P, P.alpha());
    } catch (const Error&) {
    }
    try {
      row.amplitude = singular_amplitude(P);
    } catch (const Error&) {
    }
  });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream o;
  o << "axis_value,p_sobolev,margin,verdict,lambda_alpha,amplitude_A\n";
  for (const auto& r : rows)
    o << io::fmt(r.axis_value) << ',' << io::fmt(r.p_sobolev) << ',' << io::fmt(r.margin) << ',' << r.verdict << ','
      << io::fmt(r.lambda_alpha) << ',' << io::fmt(r.amplitude) << '\n';
  return o.str();
}

namespace {

struct Globals {
  bool json = false;
  std::string output = "-";
  std::string config;
};

struct Tuple {
  int n = 3;
  double s = 0.5;
  double a = 0.0;
  double p = 2.0;
};

void add_tuple(CLI::App* c, Tuple& t, bool with_p = true) {
  c->add_option("--n", t.n, "dimension")->capture_default_str();
  c->add_option("--s", t.s, "order")->capture_default_str();
  c->add_option("--a", t.a, "weight exponent")->capture_default_str();
  if (with_p) c->add_option("--p", t.p, "nonlinearity exponent")->capture_default_str();
}

struct GridFlags {
  double r_max = 5.0;
  int nr = 11;
  double y_min = 1e-3;
  double y_max = 5.0;
  int ny = 11;
};

void add_grid(CLI::App* c, GridFlags& g) {
  c->add_option("--r-max", g.r_max)->capture_default_str();
  c->add_option("--nr", g.nr)->capture_default_str();
  c->add_option("--y-min", g.y_min)->capture_default_str();
  c->add_option("--y-max", g.y_max)->capture_default_str();
  c->add_option("--ny", g.ny)->capture_default_str();
}

json header(const char* command) { return {{"schema_version", io::kSchemaVersion}, {"command", command}}; }

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(io::number(x));
  return a;
}

class Emitter {
 public:
  Emitter(const Globals& g, std::ostream& out) : g_(g), out_(out) {}
  void operator()(const std::string& content) const {
    if (g_.output == "-") {
      out_ << content;
      out_.flush();
    } else {
      io::write_output(g_.output, content);
    }
  }
  void operator()(const json& j) const { (*this)(j.dump(2) + "\n"); }

 private:
  const Globals& g_;
  std::ostream& out_;
};

RadialProfile make_profile(const std::string& kind, const std::string& input, double tail_c, double tail_k) {
  if (kind == "poisson")
    return RadialProfile::analytic([](double x) { return 1.0 / (1.0 + x * x); }, 1.0, TailModel::power_law(1.0, 2.0));
  if (kind == "gaussian") return RadialProfile::analytic([](double x) { return std::exp(-x * x); });
  if (kind == "csv") {
    if (input.empty()) fail(ErrorKind::InvalidParameter, "--profile csv needs --input");
    auto d = io::read_profile_csv(input);
    const TailModel tail = tail_k > 0.0 ? TailModel::power_law(tail_c, tail_k) : TailModel::none();
    return RadialProfile::sampled(std::move(d.r), std::move(d.values), tail);
  }
  fail(ErrorKind::InvalidParameter, "unknown profile '" + kind + "'");
}

HalfSpaceField make_field(const std::string& kind, const ProblemParams& P, const HalfSpaceGrid& grid) {
  if (kind == "homogeneous") {
    const double g = P.beta();
    return HalfSpaceField::from_function(grid, P, [g](double r, double y) {
      const double rho = std::hypot(r, y), t = y / rho;
      return std::pow(rho, -g) * (1.0 + 0.5 * t * t + 0.2 * t);
    });
  }
  if (kind == "bubble") {
    const double e = -0.5 * (P.n - 2.0 * P.s);
    return HalfSpaceField::from_function(grid, P, [e](double r, double y) { return std::pow(r * r + (1 + y) * (1 + y), e); });
  }
  if (kind == "bump") {
    return HalfSpaceField::from_function(grid, P, [](double r, double y) {
      const double q = (r * r + y * y) / 9.0;
      return q >= 1.0 ? 0.0 : (1.0 + 0.5 * y * y + 0.3 * r * r) * std::exp(1.0 - 1.0 / (1.0 - q));
    });
  }
  if (kind == "gaussian") {
    auto f = extend_radial(make_profile("gaussian", "", 0, 0), grid, P.n, P.s);
    f.params = P;
    return f;
  }
  fail(ErrorKind::InvalidParameter, "unknown field '" + kind + "'");
}

// Config entries become --key=value tokens placed right after the subcommand,
// skipping any key also given on the command line so flags win.
std::vector<std::string> expand_config(const std::vector<std::string>& args, const std::vector<std::string>& subcommands) {
  std::string path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  const auto entries = io::read_config(path);
  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    return std::any_of(args.begin(), args.end(),
                       [&](const std::string& t) { return t == flag || t.rfind(flag + "=", 0) == 0; });
  };
  std::vector<std::string> extra;
  for (const auto& [key, values] : entries) {
    if (key == "config" || given(key)) continue;
    std::string joined;
    for (std::size_t k = 0; k < values.size(); ++k) joined += (k ? "," : "") + values[k];
    extra.push_back("--" + key + "=" + joined);
  }
  auto it = std::find_if(args.begin() + 1, args.end(), [&](const std::string& t) {
    return std::find(subcommands.begin(), subcommands.end(), t) != subcommands.end();
  });
  std::vector<std::string> out(args.begin(), it == args.end() ? args.end() : it + 1);
  out.insert(out.end(), extra.begin(), extra.end());
  if (it != args.end()) out.insert(out.end(), it + 1, args.end());
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  apply_thread_cap();
  CLI::App app{"Constants, kernels and energy functionals for the fractional Henon-Lane-Emden equation", "fhle"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "emit JSON instead of CSV or text");
  app.add_option("--output,-o", g.output, "result file, '-' for standard output")->capture_default_str();
  app.add_option("--config", g.config, "key=value or JSON file of flag values; flags override it");

  Tuple ct;
  double p_max = 1e6;
  auto* classify_cmd = app.add_subcommand("classify", "classify (n, s, a, p); always emits JSON");
  add_tuple(classify_cmd, ct);
  classify_cmd->add_option("--p-max", p_max, "upper end of the JL-threshold scan")->capture_default_str();

  SweepConfig sc;
  std::string axis = "p", spacing = "linear";
  auto* sweep_cmd = app.add_subcommand("sweep", "classification table along one parameter axis");
  sweep_cmd->add_option("--axis", axis)->check(CLI::IsMember({"p", "n", "s", "a"}))->capture_default_str();
  sweep_cmd->add_option("--lo", sc.lo)->required();
  sweep_cmd->add_option("--hi", sc.hi)->required();
  sweep_cmd->add_option("--count", sc.count)->required();
  sweep_cmd->add_option("--spacing", spacing)->check(CLI::IsMember({"linear", "geometric"}))->capture_default_str();
  sweep_cmd->add_option("--n", sc.n)->capture_default_str();
  sweep_cmd->add_option("--s", sc.s)->capture_default_str();
  sweep_cmd->add_option("--a", sc.a)->capture_default_str();
  sweep_cmd->add_option("--p", sc.p)->capture_default_str();

  Tuple jt;
  JlOptions jo;
  auto* jl_cmd = app.add_subcommand("jl", "all sign changes of the stability margin on (p_S, p_max]");
  add_tuple(jl_cmd, jt, false);
  jl_cmd->add_option("--p-max", p_max)->capture_default_str();
  jl_cmd->add_option("--nodes", jo.nodes)->capture_default_str();

  Tuple st;
  st.p = 4.0;
  std::vector<double> radii{1, 2, 4, 8};
  auto* singular_cmd = app.add_subcommand("singular", "singular solution amplitude and power-integral scaling");
  add_tuple(singular_cmd, st);
  singular_cmd->add_option("--radii", radii)->delimiter(',')->capture_default_str();

  int kn = 3;
  double ks = 0.5, kalpha = 0.5, ka = -1.0, kp = -1.0;
  std::vector<double> cs;
  auto* kernel_cmd = app.add_subcommand("kernel", "spherical kernel K_alpha(c), or the ratio identity with --a/--p");
  kernel_cmd->add_option("--n", kn)->capture_default_str();
  kernel_cmd->add_option("--s", ks)->capture_default_str();
  kernel_cmd->add_option("--alpha", kalpha)->capture_default_str();
  kernel_cmd->add_option("--c", cs, "cosines (default: 21 nodes on [-0.95, 0.95])")->delimiter(',');
  auto* ka_opt = kernel_cmd->add_option("--a", ka, "weight exponent; with --p reports A, H and lambda/Lambda");
  auto* kp_opt = kernel_cmd->add_option("--p", kp);
  ka_opt->needs(kp_opt);
  kp_opt->needs(ka_opt);

  int en = 1;
  double es = 0.5;
  std::string profile = "poisson", input;
  double tail_c = 0.0, tail_k = 0.0;
  bool trace = false;
  GridFlags eg;
  eg.nr = 21;
  eg.ny = 12;
  eg.y_max = 2.0;
  auto* extend_cmd = app.add_subcommand("extend", "extension of a radial profile; field snapshot or Neumann trace");
  extend_cmd->add_option("--n", en)->capture_default_str();
  extend_cmd->add_option("--s", es)->capture_default_str();
  extend_cmd->add_option("--profile", profile)->check(CLI::IsMember({"poisson", "gaussian", "csv"}))->capture_default_str();
  extend_cmd->add_option("--input", input, "CSV profile (header line, then r,u rows)");
  extend_cmd->add_option("--tail-coefficient", tail_c);
  extend_cmd->add_option("--tail-exponent", tail_k, "power-law decay c*r^-k beyond the sampled range");
  extend_cmd->add_flag("--trace", trace, "emit the Neumann trace instead of the field");
  add_grid(extend_cmd, eg);

  Tuple nt;
  nt.a = 1.0;
  nt.p = 4.0;
  std::string field = "homogeneous", sphere = "p-1";
  std::vector<double> lambdas{1, 2, 4};
  int order = 1;
  bool derivative = false;
  double fd_step = 0.0;
  GridFlags ng;
  auto* energy_cmd = app.add_subcommand("energy", "monotonicity energy E(lambda) on a model field");
  add_tuple(energy_cmd, nt);
  energy_cmd->add_option("--field", field)->check(CLI::IsMember({"homogeneous", "bubble", "bump", "gaussian"}))->capture_default_str();
  energy_cmd->add_option("--lambda", lambdas)->delimiter(',')->capture_default_str();
  energy_cmd->add_option("--order", order)->check(CLI::IsMember({1, 2}))->capture_default_str();
  energy_cmd->add_option("--sphere", sphere, "sphere-term coefficient (s+a/2)/(p-1) or the (p+1) variant")
      ->check(CLI::IsMember({"p-1", "p+1"}))->capture_default_str();
  energy_cmd->add_flag("--derivative", derivative, "emit dE/dlambda (first order) instead of E");
  energy_cmd->add_option("--fd-step", fd_step, "higher-order radial step, 0 picks 1e-3*lambda");
  add_grid(energy_cmd, ng);

  std::string suite_name;
  double tol_scale = 1.0;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite; exit 1 on any failure");
  verify_cmd->add_option("suite", suite_name)->required()
      ->check(CLI::IsMember({"constants", "kernels", "extension", "energy", "estimates", "all"}));
  verify_cmd->add_option("--tolerance-scale", tol_scale, "multiplies every tolerance")->capture_default_str();

  std::vector<std::string> args(argv, argv + argc);
  try {
    std::vector<std::string> names;
    for (auto* c : app.get_subcommands({})) names.push_back(c->get_name());
    args = expand_config(args, names);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::IoFailure ? kIoFailure : kInvalidInput;
  }
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  const Emitter emit(g, out);
  try {
    if (classify_cmd->parsed()) {
      ProblemParams::validate(ct.n, ct.s, ct.a, ct.p);
      const auto c = classify(ct.n, ct.s, ct.a, ct.p);
      if (c.verdict == Verdict::Invalid) fail(ErrorKind::InvalidParameter, c.reason);
      json j = header("classify");
      j["params"] = io::to_json(ProblemParams::make(ct.n, ct.s, ct.a, ct.p));
      j["verdict"] = std::string(to_string(c.verdict));
      j["p_sobolev"] = io::number(c.p_sobolev);
      j["margin"] = io::number(c.margin);
      j["jl_threshold"] = nullptr;
      if (ct.n > 2.0 * ct.s) {
        try {
          if (auto r = jl_threshold(ct.n, ct.s, ct.a, p_max))
            j["jl_threshold"] = {{"root", io::number(r->root)}, {"lo", io::number(r->lo)}, {"hi", io::number(r->hi)}};
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::PoleOrNegativeArgument && e.kind() != ErrorKind::NotSupercritical) throw;
        }
      }
      emit(j);
    } else if (sweep_cmd->parsed()) {
      sc.axis = axis == "p" ? SweepAxis::P : axis == "n" ? SweepAxis::N : axis == "s" ? SweepAxis::S : SweepAxis::A;
      sc.spacing = spacing == "linear" ? Spacing::Linear : Spacing::Geometric;
      sc.output_path = g.output;
      const auto rows = run_sweep(sc);
      if (g.json) {
        json j = header("sweep");
        j["axis"] = axis;
        j["rows"] = json::array();
        for (const auto& r : rows)
          j["rows"].push_back({{"axis_value", io::number(r.axis_value)}, {"p_sobolev", io::number(r.p_sobolev)},
                               {"margin", io::number(r.margin)}, {"verdict", r.verdict},
                               {"lambda_alpha", io::number(r.lambda_alpha)}, {"amplitude_A", io::number(r.amplitude)}});
        emit(j);
      } else {
        emit(sweep_csv(rows));
      }
    } else if (jl_cmd->parsed()) {
      const auto roots = jl_brackets(jt.n, jt.s, jt.a, p_max, jo);
      if (g.json) {
        json j = header("jl");
        j["brackets"] = json::array();
        for (const auto& r : roots)
          j["brackets"].push_back({{"lo", io::number(r.lo)}, {"hi", io::number(r.hi)}, {"root", io::number(r.root)},
                                   {"residual", io::number(r.residual)}});
        emit(j);
      } else {
        std::ostringstream o;
        o << "lo,hi,root,residual\n";
        for (const auto& r : roots)
          o << io::fmt(r.lo) << ',' << io::fmt(r.hi) << ',' << io::fmt(r.root) << ',' << io::fmt(r.residual) << '\n';
        emit(o.str());
      }
    } else if (singular_cmd->parsed()) {
      const auto P = ProblemParams::make(st.n, st.s, st.a, st.p);
      const auto rep = singular_scaling_check(P, radii);
      if (g.json) {
        json j = header("singular");
        j["amplitude_A"] = io::number(singular_amplitude(P));
        j["scaling"] = io::to_json(rep);
        emit(j);
      } else {
        std::ostringstream o;
        o << "R,integral\n";
        for (std::size_t k = 0; k < rep.radii.size(); ++k) o << io::fmt(rep.radii[k]) << ',' << io::fmt(rep.values[k]) << '\n';
        emit(o.str());
      }
    } else if (kernel_cmd->parsed()) {
      validate_order(kn, ks);
      if (ka_opt->count() > 0) {
        const auto P = ProblemParams::make(kn, ks, ka, kp);
        const double A = a_constant(P), H = hardy_integral(kn, ks);
        const double ratio = lambda_alpha(P, P.alpha()) / hardy_gamma(kn, ks);
        if (g.json) {
          json j = header("kernel");
          j["params"] = io::to_json(P);
          j["a_constant"] = io::number(A);
          j["hardy_integral"] = io::number(H);
          j["ratio"] = io::number(A / H);
          j["lambda_over_Lambda"] = io::number(ratio);
          emit(j);
        } else {
          emit("quantity,value\na_constant," + io::fmt(A) + "\nhardy_integral," + io::fmt(H) + "\nratio," +
               io::fmt(A / H) + "\nlambda_over_Lambda," + io::fmt(ratio) + "\n");
        }
      } else {
        if (cs.empty())
          for (int k = 0; k <= 20; ++k) cs.push_back(-0.95 + 0.095 * k);
        std::vector<double> ks_out(cs.size());
        const KernelSpec spec{kalpha, kn, ks};
        parallel_for(cs.size(), [&](std::size_t k) { ks_out[k] = kernel_K(spec, cs[k]); });
        if (g.json) {
          json j = header("kernel");
          j["alpha"] = io::number(kalpha);
          j["c"] = numbers(cs);
          j["K"] = numbers(ks_out);
          emit(j);
        } else {
          emit(io::radial_csv({cs, ks_out}, "K").replace(0, 1, "c"));
        }
      }
    } else if (extend_cmd->parsed()) {
      validate_order(en, es);
      const auto u = make_profile(profile, input, tail_c, tail_k);
      const auto grid = HalfSpaceGrid::make(eg.r_max, eg.nr, eg.y_min, eg.y_max, eg.ny, 1.0 - 2.0 * es);
      const auto f = extend_radial(u, grid, en, es);
      if (trace) {
        const auto tr = neumann_trace(f);
        if (g.json) {
          json j = header("extend");
          j["r"] = numbers(tr.r);
          j["trace"] = numbers(tr.values);
          emit(j);
        } else {
          emit(io::radial_csv(tr, "trace"));
        }
      } else if (g.json) {
        json j = header("extend");
        j["r"] = numbers(f.grid.r);
        j["y"] = numbers(f.grid.y);
        j["boundary"] = numbers(f.boundary);
        j["values"] = numbers(f.values);
        j["residual"] = io::number(degenerate_residual(f));
        emit(j);
      } else {
        emit(io::field_csv(f));
      }
    } else if (energy_cmd->parsed()) {
      const auto P = ProblemParams::make(nt.n, nt.s, nt.a, nt.p);
      const double wexp = order == 1 ? 1.0 - 2.0 * nt.s : 3.0 - 2.0 * nt.s;
      const auto grid = HalfSpaceGrid::make(ng.r_max, ng.nr, ng.y_min, ng.y_max, ng.ny, wexp);
      const auto f = make_field(field, P, grid);
      if (order == 1) {
        EnergyOptions eo;
        eo.sphere = sphere == "p-1" ? SphereCoefficient::PMinusOne : SphereCoefficient::PPlusOne;
        if (derivative) {
          std::vector<double> d;
          for (double l : lambdas) d.push_back(energy_derivative_first_order(f, l, eo));
          if (g.json) {
            json j = header("energy");
            j["lambda"] = numbers(lambdas);
            j["dE"] = numbers(d);
            emit(j);
          } else {
            emit(io::radial_csv({lambdas, d}, "dE").replace(0, 1, "lambda"));
          }
        } else {
          const auto curve = energy_curve(f, lambdas, eo);
          if (g.json) {
            json j = header("energy");
            j["order"] = 1;
            j["lambda"] = numbers(curve.lambdas);
            j["E"] = numbers(curve.values);
            std::vector<double> b, nl, sp;
            for (const auto& p : curve.parts) {
              b.push_back(p.bulk);
              nl.push_back(p.nonlinear);
              sp.push_back(p.sphere);
            }
            j["part_bulk"] = numbers(b);
            j["part_nonlinear"] = numbers(nl);
            j["part_sphere"] = numbers(sp);
            emit(j);
          } else {
            emit(io::energy_curve_csv(curve));
          }
        }
      } else {
        std::vector<HigherOrderParts> parts;
        for (double l : lambdas) parts.push_back(energy_higher_order_parts(f, l, fd_step));
        if (g.json) {
          json j = header("energy");
          j["order"] = 2;
          j["lambda"] = numbers(lambdas);
          std::vector<double> e;
          for (const auto& p : parts) e.push_back(p.total());
          j["E"] = numbers(e);
          emit(j);
        } else {
          emit(io::higher_order_csv(lambdas, parts));
        }
      }
    } else if (verify_cmd->parsed()) {
      if (!(tol_scale > 0.0) || !std::isfinite(tol_scale)) fail(ErrorKind::InvalidParameter, "--tolerance-scale must be > 0");
      VerifyOptions vo;
      vo.tolerance_scale = tol_scale;
      const auto reports = run_suite(*parse_suite(suite_name), vo);
      bool ok = true;
      if (g.json) {
        json j = header("verify");
        j["suites"] = json::array();
        for (const auto& r : reports) {
          json checks = json::array();
          for (const auto& c : r.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"measured", io::number(c.measured)},
                              {"expected", io::number(c.expected)}, {"tolerance", io::number(c.tolerance)},
                              {"note", c.note}});
          j["suites"].push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
          ok = ok && r.passed();
        }
        emit(j);
      } else {
        std::string text;
        for (const auto& r : reports) {
          text += format_report(r);
          ok = ok && r.passed();
        }
        emit(text);
      }
      return ok ? kOk : kVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::IoFailure ? kIoFailure : kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kOk;
}

}  // namespace fhle::cli
