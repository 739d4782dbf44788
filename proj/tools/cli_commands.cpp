#include "cli_commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "swsh/geometry.hpp"
#include "swsh/harmonics.hpp"
#include "swsh/theorems.hpp"
#include "swsh/verify.hpp"

namespace swsh::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_real(double x, int digits) {
  if (!std::isfinite(x)) return "null";
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

std::string json_string(std::string_view s) { return "\"" + std::string(s) + "\""; }

/// Flat JSON object written in insertion order.
class JsonLine {
 public:
  JsonLine& field(std::string_view key, const std::string& raw_value) {
    body_ += (body_.empty() ? "" : ",") + json_string(key) + ":" + raw_value;
    return *this;
  }
  std::string str() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
};

HalfInt parse_spin(const std::string& token, const char* name) {
  try {
    return HalfInt::parse(token);
  } catch (const DomainError& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

double angle(const RunConfig& c, double v) { return c.degrees ? v * std::numbers::pi / 180.0 : v; }

Direction make_direction(double theta, double phi) {
  try {
    return Direction(theta, phi);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

Form parse_form(const std::string& name) {
  if (name == "verified") return Form::verified;
  if (name == "as_printed") return Form::as_printed;
  throw UsageError("--form must be 'verified' or 'as_printed'");
}

// Writes to --output when given, otherwise to the supplied stream.
class Sink {
 public:
  Sink(const RunConfig& c, std::ostream& fallback) : stream_(&fallback) {
    if (c.output_path) {
      file_.open(*c.output_path);
      if (!file_) throw UsageError("cannot open output file '" + *c.output_path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::vector<TheoremId> theorem_list(const std::string& name) {
  if (name == "all") return {kAllTheorems.begin(), kAllTheorems.end()};
  if (auto id = theorem_from_string(name)) return {*id};
  throw UsageError("unknown theorem '" + name + "' (expected Base, DThetaLeft, MWeight, DThetaBoth, M2Weight, "
                   "MDTheta or all)");
}

std::vector<VerifyMode> mode_list(const std::string& name) {
  if (name == "all") return {VerifyMode::two_point, VerifyMode::coincidence, VerifyMode::spinsame};
  if (auto m = mode_from_string(name)) return {*m};
  throw UsageError("unknown mode '" + name + "' (expected two_point, coincidence, spinsame or all)");
}

std::vector<TheoremParams> verify_grid(const RunConfig& c) {
  if (c.single_point) {
    const HalfInt s = parse_spin(c.s, "s");
    const TheoremParams p{s, c.sprime ? parse_spin(*c.sprime, "sprime") : s,
                          c.ell ? parse_spin(*c.ell, "ell") : abs(s)};
    if (!p.valid())
      throw UsageError("invalid parameters s=" + p.s.to_string() + " s'=" + p.sprime.to_string() +
                       " ell=" + p.ell.to_string());
    return {p};
  }
  const HalfInt spin_max = parse_spin(c.spin_max, "spin-max");
  const HalfInt ell_max = parse_spin(c.ell_max, "ell-max");
  if (spin_max < HalfInt{} || ell_max < HalfInt{}) throw UsageError("--spin-max and --ell-max must be non-negative");
  auto grid = parameter_grid(static_cast<int>(spin_max.twice()), static_cast<int>(ell_max.twice()));
  if (grid.empty()) throw UsageError("empty parameter grid");
  return grid;
}

void write_report(std::ostream& os, OutputFormat format, const CheckReport& r) {
  const auto& [d, dp] = r.worst_case;
  switch (format) {
    case OutputFormat::json:
      os << JsonLine()
                .field("theorem", json_string(to_string(r.theorem)))
                .field("s", json_string(r.params.s.to_string()))
                .field("sprime", json_string(r.params.sprime.to_string()))
                .field("ell", json_string(r.params.ell.to_string()))
                .field("mode", json_string(to_string(r.mode)))
                .field("samples", std::to_string(r.samples))
                .field("max_abs_residual", format_real(r.max_abs_residual, 17))
                .field("tolerance", format_real(r.tolerance, 17))
                .field("pass", r.pass ? "true" : "false")
                .field("worst_theta", format_real(d.theta(), 17))
                .field("worst_phi", format_real(d.phi(), 17))
                .field("worst_theta_p", format_real(dp.theta(), 17))
                .field("worst_phi_p", format_real(dp.phi(), 17))
                .str()
         << '\n';
      break;
    case OutputFormat::csv:
      os << to_string(r.theorem) << ',' << r.params.s.to_string() << ',' << r.params.sprime.to_string() << ','
         << r.params.ell.to_string() << ',' << to_string(r.mode) << ',' << r.samples << ','
         << format_real(r.max_abs_residual, 17) << ',' << format_real(r.tolerance, 17) << ','
         << (r.pass ? "true" : "false") << ',' << format_real(d.theta(), 17) << ',' << format_real(d.phi(), 17)
         << ',' << format_real(dp.theta(), 17) << ',' << format_real(dp.phi(), 17) << '\n';
      break;
    case OutputFormat::text:
      os << (r.pass ? "PASS " : "FAIL ") << to_string(r.theorem) << " [" << to_string(r.mode)
         << "] s=" << r.params.s.to_string() << " s'=" << r.params.sprime.to_string()
         << " ell=" << r.params.ell.to_string() << " max|res|=" << format_real(r.max_abs_residual, 6)
         << " tol=" << format_real(r.tolerance, 6) << '\n';
      break;
  }
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

int cmd_eval(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const QuantumNumbers q{parse_spin(c.s, "s"), c.ell ? parse_spin(*c.ell, "ell") : 0_hi, parse_spin(c.m, "m")};
    q.check();
    const Direction dir = make_direction(angle(c, c.theta), angle(c, c.phi));

    std::complex<double> value;
    if (c.target == "Y") {
      value = swsh_eval(q, dir);
    } else if (c.target == "dtheta") {
      value = dtheta(q, dir);
    } else if (c.target == "dphi") {
      value = dphi(q, dir);
    } else if (c.target == "edth") {
      value = edth_analytic(q, dir, Edth::raise);
    } else if (c.target == "edthbar") {
      value = edth_analytic(q, dir, Edth::lower);
    } else if (c.target == "de_residual") {
      value = de_residual(q, dir);
    } else {
      throw UsageError("unknown --target '" + c.target + "' (Y, dtheta, dphi, edth, edthbar, de_residual)");
    }

    Sink sink(c, out);
    auto& os = sink.get();
    switch (c.format) {
      case OutputFormat::json:
        os << JsonLine()
                  .field("s", json_string(q.s.to_string()))
                  .field("ell", json_string(q.ell.to_string()))
                  .field("m", json_string(q.m.to_string()))
                  .field("theta", format_real(dir.theta(), 15))
                  .field("phi", format_real(dir.phi(), 15))
                  .field("target", json_string(c.target))
                  .field("re", format_real(value.real(), 15))
                  .field("im", format_real(value.imag(), 15))
                  .str()
           << '\n';
        break;
      case OutputFormat::csv:
        os << "s,ell,m,theta,phi,target,re,im\n"
           << q.s.to_string() << ',' << q.ell.to_string() << ',' << q.m.to_string() << ','
           << format_real(dir.theta(), 15) << ',' << format_real(dir.phi(), 15) << ',' << c.target << ','
           << format_real(value.real(), 15) << ',' << format_real(value.imag(), 15) << '\n';
        break;
      case OutputFormat::text:
        os << format_real(value.real(), 15) << ' ' << format_real(value.imag(), 15) << '\n';
        break;
    }
    return kExitPass;
  });
}

int cmd_euler(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Direction dir = make_direction(angle(c, c.theta), angle(c, c.phi));
    const Direction dirp = make_direction(angle(c, c.theta_p), angle(c, c.phi_p));
    const EulerAngles eu = relative_euler(dir, dirp);
    Sink sink(c, out);
    auto& os = sink.get();
    switch (c.format) {
      case OutputFormat::json:
        os << JsonLine()
                  .field("alpha", format_real(eu.alpha, 17))
                  .field("beta", format_real(eu.beta, 17))
                  .field("gamma", format_real(eu.gamma, 17))
                  .str()
           << '\n';
        break;
      case OutputFormat::csv:
        os << "alpha,beta,gamma\n"
           << format_real(eu.alpha, 17) << ',' << format_real(eu.beta, 17) << ',' << format_real(eu.gamma, 17)
           << '\n';
        break;
      case OutputFormat::text:
        os << format_real(eu.alpha, 17) << ' ' << format_real(eu.beta, 17) << ' ' << format_real(eu.gamma, 17)
           << '\n';
        break;
    }
    return kExitPass;
  });
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (c.samples < 1) throw UsageError("--samples must be >= 1");
    if (!(c.tol_scale > 0.0)) throw UsageError("--tol-scale must be positive");
    const auto theorems = theorem_list(c.theorem);
    const auto modes = mode_list(c.mode);
    const auto grid = verify_grid(c);
    const Form form = parse_form(c.form);

    Sink sink(c, out);
    auto& os = sink.get();
    if (c.format == OutputFormat::csv)
      os << "theorem,s,sprime,ell,mode,samples,max_abs_residual,tolerance,pass,worst_theta,worst_phi,"
            "worst_theta_p,worst_phi_p\n";

    bool all_pass = true;
    std::size_t reports = 0;
    for (VerifyMode mode : modes) {
      for (TheoremId id : theorems) {
        for (const TheoremParams& p : grid) {
          if (mode == VerifyMode::spinsame && p.s != p.sprime) continue;
          VerifyRequest req{id, p, c.samples, default_tolerance(id, mode, p.ell, c.tol_scale), c.seed, mode, form};
          const CheckReport r = verify(req);
          write_report(os, c.format, r);
          all_pass = all_pass && r.pass;
          ++reports;
        }
      }
    }
    if (reports == 0) throw UsageError("grid produced no checks (spinsame needs s' == s)");
    return all_pass ? kExitPass : kExitNumericFailure;
  });
}

int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto id = theorem_from_string(c.theorem);
    if (!id) throw UsageError("sweep needs a single --theorem (Base, DThetaLeft, MWeight, DThetaBoth, M2Weight, MDTheta)");
    if (c.thetas.empty()) throw UsageError("sweep needs a non-empty --thetas list");
    if (!(c.tol_scale > 0.0)) throw UsageError("--tol-scale must be positive");
    const HalfInt s = parse_spin(c.s, "s");
    const HalfInt ell = c.ell ? parse_spin(*c.ell, "ell") : abs(s);
    const TheoremParams p{s, s, ell};
    if (!p.valid()) throw UsageError("invalid parameters s=" + s.to_string() + " ell=" + ell.to_string());
    const Form form = parse_form(c.form);
    const double tol = default_tolerance(*id, VerifyMode::spinsame, ell, c.tol_scale);

    Sink sink(c, out);
    auto& os = sink.get();
    if (c.format == OutputFormat::csv) os << "theta,lhs_re,lhs_im,rhs_re,rhs_im,abs_err\n";

    bool all_pass = true;
    for (double t : c.thetas) {
      const Direction dir = make_direction(angle(c, t), angle(c, c.phi));
      const auto lhs = std::conj(sign_phase(s)) * lhs_sum(*id, p, dir, dir);
      const auto rhs = spinsame_rhs(*id, s, ell, dir, form);
      const double abs_err = std::abs(lhs - rhs);
      all_pass = all_pass && abs_err <= tol;
      switch (c.format) {
        case OutputFormat::json:
          os << JsonLine()
                    .field("theta", format_real(dir.theta(), 17))
                    .field("lhs_re", format_real(lhs.real(), 17))
                    .field("lhs_im", format_real(lhs.imag(), 17))
                    .field("rhs_re", format_real(rhs.real(), 17))
                    .field("rhs_im", format_real(rhs.imag(), 17))
                    .field("abs_err", format_real(abs_err, 17))
                    .str()
             << '\n';
          break;
        case OutputFormat::csv:
          os << format_real(dir.theta(), 17) << ',' << format_real(lhs.real(), 17) << ','
             << format_real(lhs.imag(), 17) << ',' << format_real(rhs.real(), 17) << ','
             << format_real(rhs.imag(), 17) << ',' << format_real(abs_err, 17) << '\n';
          break;
        case OutputFormat::text:
          os << format_real(dir.theta(), 10) << "  lhs=" << format_real(lhs.real(), 12) << "  rhs="
             << format_real(rhs.real(), 12) << "  err=" << format_real(abs_err, 3) << '\n';
          break;
      }
    }
    return all_pass ? kExitPass : kExitNumericFailure;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv(kSeedEnv)) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: " << kSeedEnv << " must be a non-negative integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Spin-weighted spherical harmonics: evaluation, Euler geometry and addition-theorem checks"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"text", OutputFormat::text}};
  OutputFormat sweep_format = OutputFormat::csv;
  auto add_common = [&](CLI::App* sub, OutputFormat& format) {
    sub->add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(formats))
        ->option_text("json|csv|text");
    sub->add_option("--output", cfg.output_path, "write to this file instead of stdout");
    sub->add_flag("--degrees", cfg.degrees, "angles are given in degrees");
  };

  auto* eval = app.add_subcommand("eval", "evaluate a harmonic or operator at a point");
  eval->add_option("--s", cfg.s, "spin weight, e.g. 1 or -1/2");
  eval->add_option("--ell", cfg.ell, "degree")->required();
  eval->add_option("--m", cfg.m, "azimuthal number");
  eval->add_option("--theta", cfg.theta)->required();
  eval->add_option("--phi", cfg.phi)->required();
  eval->add_option("--target", cfg.target, "Y, dtheta, dphi, edth, edthbar or de_residual");
  add_common(eval, cfg.format);

  auto* euler = app.add_subcommand("euler", "relative Euler angles between two directions");
  euler->add_option("--theta", cfg.theta)->required();
  euler->add_option("--phi", cfg.phi)->required();
  euler->add_option("--theta-p", cfg.theta_p)->required();
  euler->add_option("--phi-p", cfg.phi_p)->required();
  add_common(euler, cfg.format);

  auto* verify_cmd = app.add_subcommand("verify", "check addition theorems on seeded random points");
  auto* opt_s = verify_cmd->add_option("--s", cfg.s, "single spin s (otherwise the full grid)");
  auto* opt_sp = verify_cmd->add_option("--sprime", cfg.sprime, "single spin s'");
  auto* opt_ell = verify_cmd->add_option("--ell", cfg.ell, "single degree");
  verify_cmd->add_option("--theorem", cfg.theorem, "theorem name or 'all'");
  verify_cmd->add_option("--mode", cfg.mode, "two_point, coincidence, spinsame or all");
  verify_cmd->add_option("--form", cfg.form, "verified or as_printed");
  verify_cmd->add_option("--spin-max", cfg.spin_max, "grid: largest |s|, |s'|");
  verify_cmd->add_option("--ell-max", cfg.ell_max, "grid: largest ell");
  verify_cmd->add_option("--samples", cfg.samples, "random points per check");
  verify_cmd->add_option("--tol-scale", cfg.tol_scale, "multiplies every tolerance");
  verify_cmd->add_option("--seed", cfg.seed, std::string("RNG seed (default from ") + kSeedEnv + " or 42)");
  add_common(verify_cmd, cfg.format);

  auto* sweep = app.add_subcommand("sweep", "tabulate a coincident s'=s sum against its closed form over theta");
  sweep->add_option("--theorem", cfg.theorem, "theorem name")->required();
  sweep->add_option("--s", cfg.s, "spin weight");
  sweep->add_option("--ell", cfg.ell, "degree");
  sweep->add_option("--thetas", cfg.thetas, "comma-separated theta values")->delimiter(',')->required();
  sweep->add_option("--phi", cfg.phi, "azimuth used for every row");
  sweep->add_option("--form", cfg.form, "verified or as_printed");
  sweep->add_option("--tol-scale", cfg.tol_scale, "multiplies the tolerance");
  add_common(sweep, sweep_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (eval->parsed()) return cmd_eval(cfg, out, err);
  if (euler->parsed()) return cmd_euler(cfg, out, err);
  if (verify_cmd->parsed()) {
    cfg.command = Command::verify;
    cfg.single_point = opt_s->count() + opt_sp->count() + opt_ell->count() > 0;
    return cmd_verify(cfg, out, err);
  }
  cfg.command = Command::sweep;
  cfg.format = sweep_format;
  return cmd_sweep(cfg, out, err);
}

}  // namespace swsh::cli
