// orfkit: closed-form moments, bounds and Monte-Carlo checks for random
// Fourier features (RFF) and orthogonal random features (ORF).
//
// Exit codes: 0 success, 2 invalid arguments, 3 numerical failure, 4 I/O failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orfkit/orfkit.hpp"

namespace {

using namespace orfkit;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Options {
  int d = 32;
  int p = 8;
  int s = 1000;
  int m = 10;
  int n = 64;
  int trials = 5;
  int repeats = 1;
  int workers = 1;
  std::uint64_t seed = 42;
  std::optional<double> z_min;
  std::optional<double> z_max;
  std::optional<double> z_step;
  std::string estimator = "orf";
  std::string format = "csv";
  std::string out;
  std::string dataset;
  std::string delimiter = ",";
  bool header = false;
  std::optional<int> drop_label_col;
  std::vector<int> p_grid;
  std::string quantity = "moments";
};

struct ZGrid {
  double min = 0.0;
  double max = 0.0;
  double step = 0.0;
  std::vector<double> points() const {
    std::vector<double> z;
    const auto count = static_cast<long>(std::floor((max - min) / step + 1e-9));
    for (long k = 0; k <= count; ++k) z.push_back(min + k * step);
    return z;
  }
};

ZGrid resolve_grid(const Options& o, double default_max, double default_step) {
  ZGrid g;
  g.min = o.z_min.value_or(0.0);
  g.max = o.z_max.value_or(default_max);
  g.step = o.z_step.value_or(default_step);
  if (!(g.min >= 0) || !(g.max >= g.min) || !(g.step > 0) || !std::isfinite(g.max)) {
    throw InvalidArgument("z-grid needs 0 <= z-min <= z-max and z-step > 0");
  }
  if ((g.max - g.min) / g.step > 1e7) throw InvalidArgument("z-grid has more than 1e7 points");
  return g;
}

// Step min(0.01, interval/1000) over [0, end].
double default_step(double end) { return end > 0 ? std::min(0.01, end / 1000.0) : 0.01; }

void add_grid_config(ExperimentReport& r, const ZGrid& g) {
  r.config.emplace_back("z_min", g.min);
  r.config.emplace_back("z_max", g.max);
  r.config.emplace_back("z_step", g.step);
}

void write(const ExperimentReport& report, const Options& o) {
  const ReportFormat format = parse_format(o.format);
  if (o.out.empty()) {
    std::cout << (format == ReportFormat::json ? to_json(report) : to_csv(report));
    std::cout.flush();
  } else {
    emit_report(report, format, o.out);
  }
}

ExperimentReport run_bias(const Options& o) {
  const Estimator est = parse_estimator(o.estimator);
  const BoundConstants c = bound_constants(o.d);
  const ZGrid grid = resolve_grid(o, c.bias_interval_end, default_step(c.bias_interval_end));
  ExperimentReport r = make_report("bias");
  r.config = {{"estimator", o.estimator}, {"d", static_cast<std::uint64_t>(o.d)}};
  add_grid_config(r, grid);
  r.extra_columns = {"rff_bias", "orf_bias", "lower", "upper", "in_interval", "joshi_lower"};
  for (double z : grid.points()) {
    const BoundPair b = bias_bounds(c, z);
    const double orf = orf_bias(o.d, z);
    r.add(z, est == Estimator::rff ? rff_bias(z) : orf, kNaN, kNaN, "bias",
          {rff_bias(z), orf, b.lower, b.upper, b.in_validity_interval ? 1.0 : 0.0,
           joshi_lower_bound(o.d, z)});
  }
  r.summary = {{"bias_interval_end", c.bias_interval_end}, {"first_zero", c.first_zero}};
  return r;
}

ExperimentReport run_variance(const Options& o) {
  const Estimator est = parse_estimator(o.estimator);
  const BoundConstants c = bound_constants(o.d);
  const ZGrid grid = resolve_grid(o, c.bias_interval_end, default_step(c.bias_interval_end));
  ExperimentReport r = make_report("variance");
  r.config = {{"estimator", o.estimator},
              {"d", static_cast<std::uint64_t>(o.d)},
              {"p", static_cast<std::uint64_t>(o.p)}};
  add_grid_config(r, grid);
  r.extra_columns = {"rff_variance", "orf_variance", "envelope_lower", "envelope_upper",
                     "in_bias_interval", "in_dominance_interval"};
  for (double z : grid.points()) {
    const BoundPair v = variance_bounds(c, o.p, z);
    const double rff = rff_variance(o.p, z);
    const double orf = orf_variance(o.d, o.p, z);
    r.add(z, est == Estimator::rff ? rff : orf, kNaN, kNaN, "variance",
          {rff, orf, v.lower, v.upper, v.in_validity_interval ? 1.0 : 0.0,
           z <= c.variance_interval_end ? 1.0 : 0.0});
  }
  r.summary = {{"bias_interval_end", c.bias_interval_end},
               {"variance_interval_end", c.variance_interval_end}};
  return r;
}

ExperimentReport run_bounds(const Options& o) {
  const BoundConstants c = bound_constants(o.d);
  ExperimentReport r = make_report("bounds");
  r.config = {{"d", static_cast<std::uint64_t>(o.d)}};
  r.summary = {{"b_d", c.b_d},
               {"c_d", c.c_d.value_or(kNaN)},
               {"alpha_d", c.alpha_d},
               {"beta_d", c.beta_d},
               {"bias_interval_end", c.bias_interval_end},
               {"variance_interval_end", c.variance_interval_end},
               {"first_zero", c.first_zero},
               {"zero_lower_bound_ismail", specfun::zero_lower_bound_ismail(o.d)},
               {"zero_lower_bound_watson", specfun::zero_lower_bound_watson(o.d)}};
  for (const auto& [name, value] : r.summary) r.add(kNaN, value, kNaN, kNaN, name);
  return r;
}

ExperimentReport run_zeros(const Options& o) {
  if (o.m < 1) throw InvalidArgument("--m must be >= 1");
  const specfun::ZeroTable table = specfun::zeros(o.d, o.m);
  ExperimentReport r = make_report("zeros");
  r.config = {{"d", static_cast<std::uint64_t>(o.d)}, {"m", static_cast<std::uint64_t>(o.m)}};
  r.extra_columns = {"index", "rayleigh_limit"};
  double partial = 0.0;
  for (std::size_t j = 0; j < table.size(); ++j) {
    partial += 1.0 / (table[j] * table[j]);
    r.add(table[j], partial, kNaN, kNaN, "zero",
          {static_cast<double>(j + 1), 1.0 / (2.0 * o.d)});
  }
  r.summary = {{"rayleigh_partial", specfun::rayleigh_partial(table)},
               {"rayleigh_limit", 1.0 / (2.0 * o.d)},
               {"zero_tolerance", table.tolerance()}};
  return r;
}

ExperimentReport run_mc(const Options& o) {
  if (o.repeats < 1) throw InvalidArgument("--repeats must be >= 1");
  const ZGrid grid = resolve_grid(o, 4.0, 0.5);
  const std::vector<double> zs = grid.points();
  ExperimentReport r = make_report("mc");
  r.config = {{"quantity", o.quantity},
              {"estimator", o.estimator},
              {"d", static_cast<std::uint64_t>(o.d)},
              {"s", static_cast<std::uint64_t>(o.s)},
              {"repeats", static_cast<std::uint64_t>(o.repeats)},
              {"seed", o.seed}};
  add_grid_config(r, grid);
  r.extra_columns = {"p", "repeat", "error_in_stderrs"};

  if (o.quantity == "covariance") {
    for (int rep = 0; rep < o.repeats; ++rep) {
      const std::uint64_t rs = sub_seed(o.seed, static_cast<std::uint64_t>(rep));
      for (std::size_t k = 0; k < zs.size(); ++k) {
        const CovarianceEstimate c = mc_covariance(o.d, zs[k], o.s, sub_seed(rs, k), o.workers);
        const double theory = orf_covariance_term(o.d, zs[k]);
        r.add(zs[k], theory, c.covariance, c.stderr_, "covariance",
              {2.0, static_cast<double>(rep), std::abs(c.covariance - theory) / c.stderr_});
      }
    }
    return r;
  }
  if (o.quantity != "moments") throw InvalidArgument("--quantity must be moments or covariance");

  const Estimator est = parse_estimator(o.estimator);
  std::vector<int> ps = o.p_grid.empty() ? std::vector<int>{o.p} : o.p_grid;
  std::string p_list;
  for (int p : ps) p_list += (p_list.empty() ? "" : ",") + std::to_string(p);
  r.config.emplace_back("p_grid", p_list);
  for (std::size_t pi = 0; pi < ps.size(); ++pi) {
    const int p = ps[pi];
    std::vector<double> mean_err;
    std::vector<double> var_err;
    for (int rep = 0; rep < o.repeats; ++rep) {
      const std::uint64_t rs = sub_seed(o.seed, static_cast<std::uint64_t>(rep));
      const std::uint64_t pair_seed = sub_seed(rs, 0);
      for (std::size_t k = 0; k < zs.size(); ++k) {
        const auto [x, y] = synthetic_pair(o.d, zs[k], pair_seed);
        const std::uint64_t draws = sub_seed(sub_seed(rs, pi + 1), k);
        const EmpiricalMoments m = empirical_moments(est, o.d, p, x, y, o.s, draws, o.workers);
        const double bias = estimator_bias(est, o.d, zs[k]);
        const double var = estimator_variance(est, o.d, p, zs[k]);
        const double pp = p;
        const double rr = rep;
        r.add(zs[k], bias, m.mean, m.mean_stderr, "mean",
              {pp, rr, std::abs(m.mean - bias) / m.mean_stderr});
        r.add(zs[k], var, m.variance, m.variance_stderr, "variance",
              {pp, rr, std::abs(m.variance - var) / m.variance_stderr});
        mean_err.push_back(std::abs(m.mean - bias));
        var_err.push_back(std::abs(m.variance - var));
      }
    }
    auto mean_std = [](const std::vector<double>& v) {
      double mu = 0.0;
      for (double x : v) mu += x;
      mu /= v.size();
      double s2 = 0.0;
      for (double x : v) s2 += (x - mu) * (x - mu);
      return std::pair{mu, v.size() > 1 ? std::sqrt(s2 / (v.size() - 1)) : 0.0};
    };
    const auto [me, ms] = mean_std(mean_err);
    const auto [ve, vs] = mean_std(var_err);
    const std::string tag = "p" + std::to_string(p) + "_";
    r.summary.emplace_back(tag + "mean_abs_error", me);
    r.summary.emplace_back(tag + "mean_abs_error_std", ms);
    r.summary.emplace_back(tag + "variance_abs_error", ve);
    r.summary.emplace_back(tag + "variance_abs_error_std", vs);
  }
  return r;
}

ExperimentReport run_mse_cmd(const Options& o) {
  const Dataset data = [&] {
    if (o.dataset.empty()) return synthetic_dataset(o.n, o.d, sub_seed(o.seed, 0xD47A));
    if (o.delimiter.size() != 1) throw InvalidArgument("--delimiter must be a single character");
    CsvOptions csv;
    csv.delimiter = o.delimiter == "\\t" ? '\t' : o.delimiter[0];
    csv.header = o.header;
    csv.drop_column = o.drop_label_col;
    return load_dataset(o.dataset, csv);
  }();
  const std::vector<int> ps = o.p_grid.empty() ? std::vector<int>{16, 32, 64, 128, 256} : o.p_grid;
  MseOptions opts;
  opts.trials = o.trials;
  opts.kind = parse_estimator(o.estimator);
  opts.seed = o.seed;
  opts.workers = o.workers;
  ExperimentReport r = mse_report_header(data, opts);
  std::string p_list;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    opts.p = ps[i];
    opts.seed = sub_seed(o.seed, i);
    const MseResult res = run_mse(data, opts);
    append_mse_rows(r, opts, res);
    const std::string tag = "p" + std::to_string(ps[i]) + "_";
    r.summary.emplace_back(tag + "mse_mean", res.mean);
    r.summary.emplace_back(tag + "mse_std", res.stddev);
    r.summary.emplace_back(tag + "mse_predicted", res.predicted);
    if (i == 0) {
      r.summary.emplace_back("bandwidth", res.bandwidth);
      r.summary.emplace_back("dominance_interval_end", res.dominance_interval_end);
      r.summary.emplace_back("fraction_inside", res.fraction_inside);
    }
    p_list += (p_list.empty() ? "" : ",") + std::to_string(ps[i]);
  }
  r.config.emplace_back("p_grid", p_list);
  return r;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--d", o.d, "Input dimension d (>= 2)");
  cmd->add_option("--out", o.out, "Output path (stdout when omitted)");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_grid(CLI::App* cmd, Options& o) {
  cmd->add_option("--z-min", o.z_min, "Grid start");
  cmd->add_option("--z-max", o.z_max, "Grid end (default: the relevant validity interval)");
  cmd->add_option("--z-step", o.z_step, "Grid step (default: min(0.01, interval/1000))");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orfkit: random Fourier / orthogonal random feature moments and bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ORFKIT_VERSION));
  Options o;

  auto* bias = app.add_subcommand("bias", "ORF/RFF bias and the Gaussian sandwich over a z-grid");
  add_common(bias, o);
  add_grid(bias, o);
  bias->add_option("--estimator", o.estimator)->check(CLI::IsMember({"rff", "orf"}));

  auto* variance = app.add_subcommand("variance", "ORF/RFF variance and its envelope over a z-grid");
  add_common(variance, o);
  add_grid(variance, o);
  variance->add_option("--p", o.p, "Number of random features");
  variance->add_option("--estimator", o.estimator)->check(CLI::IsMember({"rff", "orf"}));

  auto* bounds = app.add_subcommand("bounds", "Interval constants b_d, c_d, alpha_d, beta_d");
  add_common(bounds, o);

  auto* zeros = app.add_subcommand("zeros", "First m zeros of j_{d/2-1} and Rayleigh partial sums");
  add_common(zeros, o);
  zeros->add_option("--m", o.m, "Number of zeros");

  auto* mc = app.add_subcommand("mc", "Monte-Carlo moments or covariance against closed forms");
  add_common(mc, o);
  add_grid(mc, o);
  mc->add_option("--p", o.p, "Number of random features");
  mc->add_option("--p-grid", o.p_grid, "Several p values (overrides --p)")->delimiter(',');
  mc->add_option("--s", o.s, "Weight draws per grid point");
  mc->add_option("--seed", o.seed, "Base seed");
  mc->add_option("--repeats", o.repeats, "Independent repetitions of the sweep");
  mc->add_option("--estimator", o.estimator)->check(CLI::IsMember({"rff", "orf"}));
  mc->add_option("--quantity", o.quantity)->check(CLI::IsMember({"moments", "covariance"}));
  mc->add_option("--workers", o.workers, "Worker threads (results do not depend on it)");

  auto* mse = app.add_subcommand("mse", "Frobenius MSE of the approximate Gram matrix");
  add_common(mse, o);
  mse->add_option("--p-grid", o.p_grid, "Feature counts (default 16,32,64,128,256)")->delimiter(',');
  mse->add_option("--p", o.p_grid, "Alias of --p-grid")->delimiter(',');
  mse->add_option("--trials", o.trials, "Independent weight draws per p");
  mse->add_option("--seed", o.seed, "Base seed");
  mse->add_option("--estimator", o.estimator)->check(CLI::IsMember({"rff", "orf"}));
  mse->add_option("--dataset", o.dataset, "CSV file, one point per row (synthetic when omitted)");
  mse->add_option("--n", o.n, "Synthetic point count");
  mse->add_option("--delimiter", o.delimiter, "CSV delimiter (use \\t for tab)");
  mse->add_flag("--header", o.header, "Skip the first non-empty line");
  mse->add_option("--drop-label-col", o.drop_label_col, "Zero-based label column to drop");
  mse->add_option("--workers", o.workers, "Worker threads (results do not depend on it)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ExperimentReport report;
    if (*bias) report = run_bias(o);
    else if (*variance) report = run_variance(o);
    else if (*bounds) report = run_bounds(o);
    else if (*zeros) report = run_zeros(o);
    else if (*mc) report = run_mc(o);
    else report = run_mse_cmd(o);
    write(report, o);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
