#include "radon/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "radon/arith.hpp"
#include "radon/census.hpp"
#include "radon/kernel.hpp"
#include "radon/parallel.hpp"
#include "radon/probe.hpp"
#include "radon/signal.hpp"
#include "radon/transform.hpp"

namespace radon {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// One output cell; doubles carry 17 significant digits so reruns and
// refinement comparisons reproduce byte for byte.
struct Cell {
  std::string token;
  bool quoted = false;
  Cell(std::int64_t v) : token(std::to_string(v)) {}
  Cell(int v) : token(std::to_string(v)) {}
  Cell(double v) : token(fmt17(v)) {}
  Cell(const std::string& v) : token(v), quoted(true) {}
  Cell(const char* v) : token(v), quoted(true) {}
};

// Streams rows as CSV (header + lines) or as a JSON array of objects
// mirroring the CSV fields.
class RowWriter {
 public:
  RowWriter(std::ostream& os, bool json, std::vector<std::string> columns)
      : os_(os), json_(json), columns_(std::move(columns)) {
    if (json_) {
      os_ << "[";
    } else {
      for (std::size_t i = 0; i < columns_.size(); ++i)
        os_ << (i ? "," : "") << columns_[i];
      os_ << "\n";
    }
  }

  void row(const std::vector<Cell>& cells) {
    if (json_) {
      os_ << (first_ ? "\n" : ",\n") << "{";
      for (std::size_t i = 0; i < cells.size(); ++i) {
        os_ << (i ? "," : "") << json_quote(columns_[i]) << ":";
        os_ << (cells[i].quoted ? json_quote(cells[i].token)
                                : cells[i].token);
      }
      os_ << "}";
    } else {
      for (std::size_t i = 0; i < cells.size(); ++i)
        os_ << (i ? "," : "") << cells[i].token;
      os_ << "\n";
    }
    first_ = false;
  }

  void finish() {
    if (json_) os_ << (first_ ? "]" : "\n]") << "\n";
  }

 private:
  std::ostream& os_;
  bool json_;
  std::vector<std::string> columns_;
  bool first_ = true;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string fn = "phi";
  std::string parity = "even";
  std::string p_spec = "phi:even";
  std::string q_spec = "d:signodd";
  std::int64_t limit = 0;
  std::int64_t t0 = 1000;
  int jmax = 8;
  double delta = 1.0;
  bool star = false;

  bool check_telescope = false;
  int telescope_j = 20;
  int samples = 10000;
  int sigma_j = -1;
  int grid = 32;
  int rho_order = 0;  // 0 = C-infinity bump, k >= 1 = polynomial order k

  std::string signal = "cauchy";
  double center = 0.0;
  double scale = 1.0;
  double x_min = -15.0;
  double x_max = 15.0;
  double step = 0.1;

  int eta_grid = 1024;
  int m_start = 2;
  int probe_jmax = 14;
  double epsilon = 0.9;
  double lambda_min = 1e-3;
  double lambda_max = 1.0;
  std::int64_t window = 256;
  std::int64_t m_max = 1000;
  std::int64_t n_min = -20;
  std::int64_t n_max = 20;

  std::string out = "-";
  std::string format = "csv";
  unsigned threads = 0;
  std::uint64_t seed = 0;
};

std::filesystem::path cache_dir_from_env() {
  const char* dir = std::getenv("RADON_CENSUS_CACHE");
  return dir ? std::filesystem::path(dir) : std::filesystem::path();
}

// "phi:even" / "d:signodd" selectors for P and Q
ArithFn fn_from_spec(const std::string& spec, std::int64_t limit) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw UsageError("function selector must look like name:parity, got '" +
                     spec + "'");
  std::string name = spec.substr(0, colon);
  std::string parity = spec.substr(colon + 1);
  Parity par;
  if (parity == "even")
    par = Parity::even;
  else if (parity == "signodd")
    par = Parity::sign_odd;
  else
    throw UsageError("parity must be even or signodd, got '" + parity + "'");
  return make_arith_fn(name, par, limit, cache_dir_from_env());
}

SignalSpec signal_from_config(const RunConfig& cfg) {
  if (cfg.signal != "cauchy")
    throw UsageError("only the cauchy signal is available from the CLI");
  return SignalSpec::cauchy(cfg.center, cfg.scale);
}

DyadicKernel kernel_from_config(const RunConfig& cfg) {
  return cfg.rho_order == 0 ? DyadicKernel::bump()
                            : DyadicKernel::smoothstep(cfg.rho_order);
}

class Output {
 public:
  explicit Output(const std::string& target) {
    if (target != "-") {
      file_.open(target);
      if (!file_) throw std::runtime_error("cannot open output " + target);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void run_sieve(const RunConfig& cfg) {
  ArithTable table = cached_sieve(cfg.fn, cfg.limit, cache_dir_from_env());
  Output out(cfg.out);
  RowWriter w(out.stream(), cfg.format == "json", {"n", "value"});
  for (std::int64_t n = 1; n <= table.limit(); ++n)
    w.row({n, table[n]});
  w.finish();
}

void run_census(const RunConfig& cfg) {
  Parity parity = cfg.parity == "even" ? Parity::even : Parity::sign_odd;
  Output out(cfg.out);
  if (cfg.star) {
    if (cfg.limit < 1) throw UsageError("census --star needs --limit");
    ArithFn fn =
        make_arith_fn(cfg.fn, parity, cfg.limit, cache_dir_from_env());
    StarReport report = star_report(fn, cfg.limit);
    out.stream() << "{\"fn\":" << json_quote(cfg.fn)
                 << ",\"parity\":" << json_quote(cfg.parity)
                 << ",\"limit\":" << report.range_limit
                 << ",\"d1\":" << fmt17(report.d1) << ",\"d2\":" << report.d2
                 << "}\n";
    return;
  }
  std::int64_t limit = std::int64_t{1} << (cfg.jmax + 1);
  ArithFn fn = make_arith_fn(cfg.fn, parity, limit, cache_dir_from_env());
  auto records = census_grid(fn, cfg.jmax, cfg.delta);
  RowWriter w(out.stream(), cfg.format == "json",
              {"j1", "j2", "M", "N", "count", "ratio"});
  for (const auto& r : records)
    w.row({r.j1, r.j2, r.scale_m, r.scale_n, r.count, r.ratio});
  w.finish();
}

void run_kernel(const RunConfig& cfg) {
  if (cfg.check_telescope == (cfg.sigma_j >= 0))
    throw UsageError("kernel needs exactly one of --check-telescope, --sigma");
  DyadicKernel kernel = kernel_from_config(cfg);
  Output out(cfg.out);
  if (cfg.check_telescope) {
    double err = max_telescoping_error(kernel, cfg.telescope_j, cfg.samples);
    RowWriter w(out.stream(), cfg.format == "json",
                {"J", "samples", "max_error"});
    w.row({cfg.telescope_j, cfg.samples, err});
    w.finish();
    return;
  }
  std::int64_t limit = std::int64_t{1} << (cfg.sigma_j + 1);
  Piece piece{cfg.sigma_j, fn_from_spec(cfg.p_spec, limit),
              fn_from_spec(cfg.q_spec, limit), kernel};
  RowWriter w(out.stream(), cfg.format == "json", {"xi", "eta", "re", "im"});
  for (int i = 0; i < cfg.grid; ++i) {
    double xi = static_cast<double>(i) / cfg.grid;
    for (int k = 0; k < cfg.grid; ++k) {
      double eta = static_cast<double>(k) / cfg.grid;
      std::complex<double> v = eval_sigma(piece, xi, eta);
      w.row({xi, eta, v.real(), v.imag()});
    }
  }
  w.finish();
}

void run_transform(const RunConfig& cfg) {
  ArithFn p = fn_from_spec(cfg.p_spec, cfg.t0);
  ArithFn q = fn_from_spec(cfg.q_spec, cfg.t0);
  SignalSpec f = signal_from_config(cfg);
  auto series = figure_series(f, f, p, q, cfg.x_min, cfg.x_max, cfg.step,
                              cfg.t0);
  double budget;
  try {
    budget = tail_budget(f, f, p, q, XRange{cfg.x_min, cfg.x_max}, cfg.t0)
                 .tail_bound;
  } catch (const std::domain_error&) {
    // no certifiable minorant on either side (mu, omega, d): report an
    // infinite budget rather than refusing to plot
    budget = std::numeric_limits<double>::infinity();
  }
  Output out(cfg.out);
  RowWriter w(out.stream(), cfg.format == "json",
              {"x", "re", "im", "tail_bound"});
  for (const auto& s : series)
    w.row({s.x, s.value.real(), s.value.imag(), budget});
  w.finish();
}

void run_probe_v(const RunConfig& cfg) {
  std::int64_t limit = std::int64_t{1} << (cfg.probe_jmax + 1);
  ArithFn p = fn_from_spec(cfg.p_spec, limit);
  ArithFn q = fn_from_spec(cfg.q_spec, limit);
  DyadicKernel kernel = kernel_from_config(cfg);
  VCensusBound census = v_census_bound(p, cfg.m_start, cfg.probe_jmax,
                                       cfg.delta);
  double ceiling = census.bound * kernel.sup_abs() * kernel.sup_abs();
  Output out(cfg.out);
  RowWriter w(out.stream(), cfg.format == "json", {"eta", "exact", "bound"});
  std::vector<double> exact(static_cast<std::size_t>(cfg.eta_grid));
  parallel_for(cfg.eta_grid, [&](std::int64_t i) {
    double eta = static_cast<double>(i) / cfg.eta_grid;
    exact[static_cast<std::size_t>(i)] =
        v_exact(p, q, kernel, eta, cfg.m_start, cfg.probe_jmax);
  });
  for (int i = 0; i < cfg.eta_grid; ++i) {
    double eta = static_cast<double>(i) / cfg.eta_grid;
    w.row({eta, exact[static_cast<std::size_t>(i)], ceiling});
  }
  w.finish();
}

void run_probe_level_sets(const RunConfig& cfg) {
  ArithFn p = fn_from_spec(cfg.p_spec, cfg.t0);
  ArithFn q = fn_from_spec(cfg.q_spec, cfg.t0);
  SignalSpec f = signal_from_config(cfg).normalized();
  Window window{-cfg.window, cfg.window};
  auto profile = level_sets(f, f, p, q, cfg.t0, window,
                            lambda_grid(cfg.lambda_min, cfg.lambda_max),
                            cfg.epsilon);
  Output out(cfg.out);
  RowWriter w(out.stream(), cfg.format == "json",
              {"lambda", "size", "weight"});
  for (std::size_t i = 0; i < profile.lambdas.size(); ++i) {
    double lambda = profile.lambdas[i];
    std::int64_t size = profile.sizes[i];
    double weight =
        size > 0 ? lambda * std::pow(static_cast<double>(size),
                                     1.0 / (1.0 + profile.epsilon))
                 : 0.0;
    w.row({lambda, size, weight});
  }
  w.finish();
}

void run_probe_maximal(const RunConfig& cfg) {
  ArithFn p = fn_from_spec(cfg.p_spec, cfg.m_max);
  ArithFn q = fn_from_spec(cfg.q_spec, cfg.m_max);
  SignalSpec f = signal_from_config(cfg);
  Output out(cfg.out);
  RowWriter w(out.stream(), cfg.format == "json", {"n", "value"});
  for (std::int64_t n = cfg.n_min; n <= cfg.n_max; ++n)
    w.row({n, maximal_operator(f, f, p, q, static_cast<double>(n),
                               cfg.m_max)});
  w.finish();
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"discrete bilinear Radon transform toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", cfg.threads, "cap on worker threads (0 = auto)");
  app.add_option("--seed", cfg.seed,
                 "seed for randomized probes (current subcommands are "
                 "deterministic)");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  const std::vector<std::string> fn_names{"phi", "pi", "d", "mu", "omega"};

  auto* sieve = app.add_subcommand("sieve", "emit an arithmetic table as CSV");
  sieve->add_option("--fn", cfg.fn, "arithmetic function")
      ->required()
      ->check(CLI::IsMember(fn_names));
  sieve->add_option("--limit", cfg.limit, "table limit T")
      ->required()
      ->check(CLI::PositiveNumber);
  sieve->add_option("--out", cfg.out, "output file, - for stdout");

  auto* census = app.add_subcommand(
      "census", "count collision pairs over dyadic strips");
  census->add_option("--fn", cfg.fn, "arithmetic function")
      ->required()
      ->check(CLI::IsMember(fn_names));
  census->add_option("--parity", cfg.parity, "extension rule")
      ->check(CLI::IsMember({"even", "signodd"}));
  census->add_option("--jmax", cfg.jmax, "largest strip index")
      ->check(CLI::PositiveNumber);
  census->add_option("--delta", cfg.delta, "ratio exponent delta")
      ->check(CLI::PositiveNumber);
  census->add_flag("--star", cfg.star, "emit a Condition-(star) report");
  census->add_option("--limit", cfg.limit, "scan range for --star")
      ->check(CLI::PositiveNumber);
  census->add_option("--out", cfg.out, "output file, - for stdout");

  auto* kernel = app.add_subcommand("kernel", "dyadic cutoff diagnostics");
  kernel->add_flag("--check-telescope", cfg.check_telescope,
                   "report the max telescoping error");
  kernel->add_option("--J", cfg.telescope_j, "largest scale in the check")
      ->check(CLI::PositiveNumber);
  kernel->add_option("--samples", cfg.samples, "sample points")
      ->check(CLI::PositiveNumber);
  kernel->add_option("--sigma", cfg.sigma_j, "emit sigma_j on a grid")
      ->check(CLI::NonNegativeNumber);
  kernel->add_option("--grid", cfg.grid, "grid points per axis")
      ->check(CLI::PositiveNumber);
  kernel->add_option("--order", cfg.rho_order,
                     "cutoff profile: 0 = smooth bump, k >= 1 = polynomial")
      ->check(CLI::NonNegativeNumber);
  kernel->add_option("--P", cfg.p_spec, "P selector name:parity");
  kernel->add_option("--Q", cfg.q_spec, "Q selector name:parity");
  kernel->add_option("--out", cfg.out, "output file, - for stdout");

  auto* transform = app.add_subcommand(
      "transform", "evaluate the truncated transform on an x grid");
  transform->add_option("--P", cfg.p_spec, "P selector name:parity");
  transform->add_option("--Q", cfg.q_spec, "Q selector name:parity");
  transform->add_option("--signal", cfg.signal, "input signal kind");
  transform->add_option("--center", cfg.center, "cauchy center");
  transform->add_option("--scale", cfg.scale, "cauchy scale")
      ->check(CLI::PositiveNumber);
  transform->add_option("--xmin", cfg.x_min, "grid start");
  transform->add_option("--xmax", cfg.x_max, "grid end");
  transform->add_option("--step", cfg.step, "grid step")
      ->check(CLI::PositiveNumber);
  transform->add_option("--T0", cfg.t0, "truncation cutoff")
      ->check(CLI::PositiveNumber);
  transform->add_option("--out", cfg.out, "output file, - for stdout");

  auto* probe = app.add_subcommand("probe", "proof-step diagnostics");
  probe->require_subcommand(1);
  probe->fallthrough();

  auto* probe_v = probe->add_subcommand(
      "v", "V functional: exact value vs census bound over an eta grid");
  probe_v->add_option("--P", cfg.p_spec, "P selector name:parity");
  probe_v->add_option("--Q", cfg.q_spec, "Q selector name:parity");
  probe_v->add_option("--eta-grid", cfg.eta_grid, "eta grid points")
      ->check(CLI::PositiveNumber);
  probe_v->add_option("--M", cfg.m_start, "lowest scale index")
      ->check(CLI::NonNegativeNumber);
  probe_v->add_option("--Jmax", cfg.probe_jmax, "highest scale index")
      ->check(CLI::PositiveNumber);
  probe_v->add_option("--delta", cfg.delta, "census fit exponent")
      ->check(CLI::PositiveNumber);
  probe_v->add_option("--order", cfg.rho_order, "cutoff profile")
      ->check(CLI::NonNegativeNumber);
  probe_v->add_option("--out", cfg.out, "output file, - for stdout");

  auto* probe_ls = probe->add_subcommand(
      "level-sets", "level sets of the truncated transform");
  probe_ls->add_option("--P", cfg.p_spec, "P selector name:parity");
  probe_ls->add_option("--Q", cfg.q_spec, "Q selector name:parity");
  probe_ls->add_option("--signal", cfg.signal, "input signal kind");
  probe_ls->add_option("--T0", cfg.t0, "truncation cutoff")
      ->check(CLI::PositiveNumber);
  probe_ls->add_option("--window", cfg.window,
                       "count over integers in [-window, window]")
      ->check(CLI::PositiveNumber);
  probe_ls->add_option("--lambda-min", cfg.lambda_min, "grid floor")
      ->check(CLI::PositiveNumber);
  probe_ls->add_option("--lambda-max", cfg.lambda_max, "grid ceiling")
      ->check(CLI::PositiveNumber);
  probe_ls->add_option("--epsilon", cfg.epsilon, "weak-norm exponent")
      ->check(CLI::PositiveNumber);
  probe_ls->add_option("--out", cfg.out, "output file, - for stdout");

  auto* probe_max = probe->add_subcommand(
      "maximal", "running-average maximal operator over an n range");
  probe_max->add_option("--P", cfg.p_spec, "P selector name:parity");
  probe_max->add_option("--Q", cfg.q_spec, "Q selector name:parity");
  probe_max->add_option("--signal", cfg.signal, "input signal kind");
  probe_max->add_option("--Mmax", cfg.m_max, "sup range cap")
      ->check(CLI::PositiveNumber);
  probe_max->add_option("--nmin", cfg.n_min, "first n");
  probe_max->add_option("--nmax", cfg.n_max, "last n");
  probe_max->add_option("--out", cfg.out, "output file, - for stdout");

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  set_max_threads(cfg.threads);
  try {
    if (sieve->parsed()) run_sieve(cfg);
    if (census->parsed()) run_census(cfg);
    if (kernel->parsed()) run_kernel(cfg);
    if (transform->parsed()) run_transform(cfg);
    if (probe->parsed()) {
      if (probe_v->parsed()) run_probe_v(cfg);
      if (probe_ls->parsed()) run_probe_level_sets(cfg);
      if (probe_max->parsed()) run_probe_maximal(cfg);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace radon
