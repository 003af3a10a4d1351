#include "regshannon/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "regshannon/bounds.hpp"
#include "regshannon/diagnostics.hpp"
#include "regshannon/errors.hpp"
#include "regshannon/harness.hpp"
#include "regshannon/reconstruction.hpp"

namespace regshannon {
namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string g6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct EvalArgs {
  std::string family, delta, samples;
  int m = 0;
  double t = 0.0, alpha = 1.0, lambda = 0.0;
};

struct SweepArgs {
  std::string family = "all", delta = "pi/4,pi/2,3pi/4", m = "2:10", alpha = "1", lambda = "0";
  std::string interval = "-1,1", out;
  long long points = 100000;
  bool strict = false;
};

struct DiagArgs {
  std::string family = "sinh,ckb", delta = "pi/4,pi/2,3pi/4", m = "2:12", alpha = "1", out;
};

struct VerifyArgs {
  std::string beta, width;
  bool strict = false;
};

int run_eval(const EvalArgs& a, std::ostream& out) {
  const WindowFamily fam = parse_family(a.family);
  const double delta = parse_delta(a.delta);
  const WindowSpec spec = alpha_spec(fam, a.m, delta, a.alpha, a.lambda);
  if (!a.samples.empty()) {
    const SampleSet s = read_samples_csv_file(a.samples, delta);
    out << g17(reconstruct(s, spec, a.t)) << '\n';
    return kOk;
  }
  const auto lo = static_cast<std::int64_t>(std::floor(a.t)) - a.m - 1;
  const auto hi = static_cast<std::int64_t>(std::ceil(a.t)) + a.m + 1;
  const SampleSet s = sample_function([delta](double x) { return test_function(x, delta); }, lo, hi, delta);
  const double r = reconstruct(s, spec, a.t);
  const double f = test_function(a.t, delta);
  out << "window   " << spec.describe() << '\n'
      << "t        " << g17(a.t) << '\n'
      << "R f(t)   " << g17(r) << '\n'
      << "f(t)     " << g17(f) << '\n'
      << "error    " << g17(std::fabs(f - r)) << '\n';
  return kOk;
}

int run_sweep(const SweepArgs& a, std::ostream& out) {
  ExperimentConfig cfg;
  cfg.families = parse_family_list(a.family);
  cfg.delta_list = parse_delta_list(a.delta);
  cfg.m_list = parse_int_list(a.m);
  cfg.alpha_list = parse_real_list(a.alpha);
  cfg.lambda_list = parse_delta_list(a.lambda);
  const auto ab = parse_real_list(a.interval);
  if (ab.size() != 2) throw PreconditionError("--interval expects a,b");
  cfg.a = ab[0];
  cfg.b = ab[1];
  cfg.grid_points = a.points;
  cfg.output_path = a.out;
  const ErrorReport rep = run_error_sweep(cfg);
  if (a.out.empty()) {
    write_error_csv(out, rep);
  } else {
    std::size_t bounded = 0;
    for (const auto& r : rep.rows) bounded += r.bound.has_value();
    out << "rows " << rep.rows.size() << ", with bound " << bounded << ", violations " << rep.violations()
        << " -> " << a.out << '\n';
  }
  return a.strict && rep.violations() > 0 ? kFailed : kOk;
}

int run_diag(const DiagArgs& a, std::ostream& out) {
  ExperimentConfig cfg;
  cfg.families = parse_family_list(a.family);
  cfg.delta_list = parse_delta_list(a.delta);
  cfg.m_list = parse_int_list(a.m);
  cfg.alpha_list = parse_real_list(a.alpha);
  cfg.output_path = a.out;
  const auto series = run_diagnostics_sweep(cfg);
  if (a.out.empty()) {
    write_series_csv(out, series);
    return kOk;
  }
  for (const auto& s : series) {
    out << family_name(s.family) << " alpha=" << g6(s.alpha) << " delta=" << g6(s.delta)
        << " points=" << s.m_values.size()
        << " slope_d1=" << (s.slope_d1 ? g6(*s.slope_d1) : "n/a")
        << " slope_d2=" << (s.slope_d2 ? g6(*s.slope_d2) : "n/a") << '\n';
    for (const auto& n : s.notes) out << "  skipped " << n << '\n';
  }
  return kOk;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const auto betas = a.beta.empty() ? default_identity_betas() : parse_real_list(a.beta);
  const auto widths = a.width.empty() ? default_identity_widths() : parse_real_list(a.width);
  const IdentityReport rep = verify_identities(betas, widths);
  for (const auto& c : rep.checks) {
    char line[320];
    std::snprintf(line, sizeof line, "%-13s %-26s %-40s lhs=%-22.15g rhs=%-22.15g residual=%.3e\n",
                  std::string(status_name(c.status)).c_str(), c.name.c_str(), c.params.c_str(), c.lhs,
                  c.rhs, c.residual);
    out << line;
  }
  out << rep.count(CheckStatus::Pass) << " pass, " << rep.count(CheckStatus::Fail) << " fail, "
      << rep.count(CheckStatus::Inconclusive) << " inconclusive\n";
  return a.strict && !rep.all_pass() ? kFailed : kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regularized Shannon sampling: reconstruction, error sweeps, diagnostics"};
  app.name("regshannon");
  app.require_subcommand(1);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "reconstruct one point (test function unless --samples)");
  eval->add_option("--family", ea.family, "gauss|modgauss|sinh|ckb")->required();
  eval->add_option("--m", ea.m, "truncation parameter")->required();
  eval->add_option("--delta", ea.delta, "bandwidth, e.g. pi/2")->required();
  eval->add_option("--t", ea.t, "evaluation point")->required();
  eval->add_option("--alpha", ea.alpha, "parameter scale (1 = optimal)");
  eval->add_option("--lambda", ea.lambda, "modgauss frequency");
  eval->add_option("--samples", ea.samples, "CSV with columns k,value");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "max-error sweep of the test function");
  sweep->add_option("--family", sa.family, "family list or 'all'");
  sweep->add_option("--delta", sa.delta, "delta list");
  sweep->add_option("--m", sa.m, "m range or list, e.g. 2:10");
  sweep->add_option("--alpha", sa.alpha, "alpha list");
  sweep->add_option("--lambda", sa.lambda, "modgauss lambda list");
  sweep->add_option("--points", sa.points, "grid size S");
  sweep->add_option("--interval", sa.interval, "a,b");
  sweep->add_option("--out", sa.out, "CSV path (stdout when omitted)");
  sweep->add_flag("--strict", sa.strict, "exit 1 on any bound violation");

  DiagArgs da;
  auto* diag = app.add_subcommand("diag", "D1/D2 split series for sinh and ckb");
  diag->add_option("--family", da.family, "sinh,ckb");
  diag->add_option("--delta", da.delta, "delta list");
  diag->add_option("--m", da.m, "m range or list");
  diag->add_option("--alpha", da.alpha, "alpha list");
  diag->add_option("--out", da.out, "CSV path (stdout when omitted)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "numerical identity checks");
  verify->add_option("--beta", va.beta, "beta list");
  verify->add_option("--width", va.width, "W list for the finite J1 integral");
  verify->add_flag("--strict", va.strict, "exit 1 on any failed or inconclusive check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*eval) return run_eval(ea, out);
    if (*sweep) return run_sweep(sa, out);
    if (*diag) return run_diag(da, out);
    if (*verify) return run_verify(va, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace regshannon
