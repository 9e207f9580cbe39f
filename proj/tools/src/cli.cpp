// SPDX-License-Identifier: Apache-2.0
#include "rcg_cli/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "rcg/asymptotics.hpp"
#include "rcg/bell.hpp"
#include "rcg/community.hpp"
#include "rcg/critical.hpp"
#include "rcg/errors.hpp"
#include "rcg/exactdist.hpp"
#include "rcg/oracle.hpp"
#include "rcg/sampler.hpp"

namespace rcg::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BiasFlags {
  std::optional<double> p;
  std::optional<double> t;
  std::optional<double> w;

  void attach(CLI::App* app) {
    auto* op = app->add_option("--p", p, "edge probability");
    auto* ot = app->add_option("--t", t, "log-odds t = log(p/(1-p))");
    auto* ow = app->add_option("--w", w, "edge weight w = p/(1-p)");
    op->excludes(ot)->excludes(ow);
    ot->excludes(ow);
  }

  EdgeBias resolve() const {
    const int given = static_cast<int>(p.has_value()) + static_cast<int>(t.has_value()) +
                      static_cast<int>(w.has_value());
    if (given != 1) throw UsageError("exactly one of --p, --t, --w is required");
    if (p) return EdgeBias::from_p(*p);
    if (t) return EdgeBias::from_t(*t);
    return EdgeBias::from_w(*w);
  }
};

// Writes to the stream chosen by --output ("-" is the caller's stdout).
class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& stdout_stream) {
    if (path == "-") {
      stream_ = &stdout_stream;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open output file " + path);
      stream_ = file_.get();
    }
    *stream_ << std::setprecision(12);
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

void require_n(std::int64_t n, std::int64_t lo) {
  if (n < lo) throw UsageError("--n must be >= " + std::to_string(lo));
}

void cmd_bell(std::int64_t n, const EdgeBias& bias, std::ostream& out) {
  require_n(n, 0);
  const BellTable table = build_bell_table(n, bias);
  out << "log_bell=" << table.log_b(n) << '\n';
  if (n == 0) {
    out << "coefficients=1\n";
  } else if (n <= kOracleMaxN) {
    const BellPolynomial poly = bell_polynomial(static_cast<int>(n));
    const std::int64_t top = poly.coeff.empty() ? 0 : poly.coeff.rbegin()->first;
    out << "coefficients=";
    for (std::int64_t m = 0; m <= top; ++m) {
      auto it = poly.coeff.find(m);
      if (m > 0) out << ',';
      out << (it == poly.coeff.end() ? BigInt(0) : it->second);
    }
    out << '\n';
  }
}

void write_pmf(const Pmf& pmf, const std::string& column, std::int64_t shift, std::ostream& out) {
  out << column << ",prob\n";
  for (std::int64_t i = 0; i < pmf.size(); ++i) {
    out << pmf.support_offset + i + shift << ',' << pmf.probs[i] << '\n';
  }
}

void cmd_dist(std::int64_t n, const EdgeBias& bias, const std::string& stat, std::ostream& out) {
  require_n(n, 1);
  const BellTable table = build_bell_table(n, bias);
  Pmf pmf;
  if (stat == "degree") {
    pmf = degree_pmf(table, n);
  } else if (stat == "edges") {
    pmf = edge_count_pmf(table, n);
  } else {
    pmf = clique_count_pmf(table, n);
  }
  write_pmf(pmf, "value", 0, out);
}

void cmd_sample(std::int64_t n, const EdgeBias& bias, std::int64_t samples, std::uint64_t seed,
                std::ostream& out) {
  require_n(n, 1);
  if (samples < 0) throw UsageError("--samples must be >= 0");
  const ClusterSampler sampler(build_bell_table(n, bias), n);
  RngStream rng(seed);
  out << "sample_id,c,m,max_block\n";
  for (std::int64_t i = 0; i < samples; ++i) {
    const Partition part = sampler.sample(rng);
    out << i << ',' << part.num_blocks() << ',' << part.edges() << ',' << part.max_block() << '\n';
  }
}

void cmd_critical(std::int64_t n_min, std::int64_t n_max, std::int64_t step, double q,
                  std::ostream& out) {
  if (n_min < 2 || n_max < n_min || step < 1) throw UsageError("invalid n range");
  out << "n,p_star,p_L,p_U,residual\n";
  for (std::int64_t n = n_min; n <= n_max; n += step) {
    const CriticalResult r = solve_critical(n, q);
    const auto [p_lo, p_hi] = critical_bounds(n);
    out << n << ',' << r.p_star << ',' << p_lo << ',' << p_hi << ',' << r.residual << '\n';
  }
}

struct FigureFlags {
  int fig = 0;
  std::optional<std::int64_t> n;
  std::int64_t n_min = 100;
  std::int64_t n_max = 500;
  std::int64_t n_step = 1;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> replicas;
  std::optional<int> threads;
};

void cmd_figure(const FigureFlags& f, std::ostream& out) {
  switch (f.fig) {
    case 2:
      cmd_critical(f.n_min, f.n_max, f.n_step, 0.5, out);
      return;
    case 3: {
      const std::int64_t n = f.n.value_or(30);
      require_n(n, 2);
      const BellTable table = build_bell_table(n, EdgeBias::from_p(1.0 / static_cast<double>(n)));
      write_pmf(degree_pmf(table, n), "s", 1, out);
      return;
    }
    case 4: {
      SweepConfig config = f.config.empty() ? SweepConfig::figure4_default() : SweepConfig::load(f.config);
      if (f.seed) config.seed = *f.seed;
      if (f.replicas) config.replicas = *f.replicas;
      if (f.threads) config.threads = *f.threads;
      if (config.replicas < 1) throw UsageError("--replicas must be >= 1");
      write_sweep_csv(out, figure4_sweep(config, RngStream(config.seed)));
      return;
    }
    case 5: {
      const std::int64_t n = f.n.value_or(100);
      require_n(n, 2);
      const CriticalResult crit = solve_critical(n, 0.5);
      const BellTable table = build_bell_table(n, EdgeBias::from_t(crit.t_star));
      out << "s,expected_cliques\n";
      for (std::int64_t s = 1; s <= n; ++s) {
        out << s << ',' << expected_clique_count_by_size(table, n, s) << '\n';
      }
      return;
    }
    case 6: {
      const std::int64_t n = f.n.value_or(2000);
      require_n(n, 2);
      const double p = std::pow(static_cast<double>(n), -2.0 / 9.0);
      const BellTable table = build_bell_table(n, EdgeBias::from_p(p));
      write_pmf(degree_pmf(table, n), "s", 1, out);
      return;
    }
    default:
      throw UsageError("--fig must be one of 2, 3, 4, 5, 6");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random cluster graphs: exact laws, sampling, critical sequence, figures", "rcg"};
  app.require_subcommand(1);
  std::string output = "-";

  std::int64_t n = 0;
  BiasFlags bias;
  std::string stat;
  std::int64_t samples = 1;
  std::uint64_t seed = 1;
  std::int64_t n_min = 100;
  std::int64_t n_max = 500;
  std::int64_t n_step = 1;
  double q = 0.5;
  FigureFlags fig;

  auto* bell = app.add_subcommand("bell", "log B_n(w) and, for n <= 13, its coefficients");
  bell->add_option("--n", n, "number of vertices")->required();
  bias.attach(bell);
  bell->add_option("--output", output, "output path, - for stdout");

  auto* dist = app.add_subcommand("dist", "exact pmf of a statistic as CSV value,prob");
  dist->add_option("--n", n, "number of vertices")->required();
  bias.attach(dist);
  dist->add_option("--stat", stat, "degree | edges | cliques")
      ->required()
      ->check(CLI::IsMember({"degree", "edges", "cliques"}));
  dist->add_option("--output", output, "output path, - for stdout");

  auto* sample = app.add_subcommand("sample", "exact samples as CSV sample_id,c,m,max_block");
  sample->add_option("--n", n, "number of vertices")->required();
  bias.attach(sample);
  sample->add_option("--samples", samples, "number of samples");
  sample->add_option("--seed", seed, "random seed");
  sample->add_option("--output", output, "output path, - for stdout");

  auto* critical = app.add_subcommand("critical", "critical sequence p_n(q) with bounds");
  critical->add_option("--n-min", n_min, "first n");
  critical->add_option("--n-max", n_max, "last n");
  critical->add_option("--n-step", n_step, "step in n");
  critical->add_option("--q", q, "target probability of a single clique");
  critical->add_option("--output", output, "output path, - for stdout");

  auto* figure = app.add_subcommand("figure", "data behind figures 2 to 6");
  figure->add_option("--fig", fig.fig, "figure number")->required();
  figure->add_option("--n", fig.n, "number of vertices (figures 3, 5, 6)");
  figure->add_option("--n-min", fig.n_min, "first n (figure 2)");
  figure->add_option("--n-max", fig.n_max, "last n (figure 2)");
  figure->add_option("--n-step", fig.n_step, "step in n (figure 2)");
  figure->add_option("--config", fig.config, "JSON sweep config (figure 4)");
  figure->add_option("--seed", fig.seed, "seed override (figure 4)");
  figure->add_option("--replicas", fig.replicas, "replica override (figure 4)");
  figure->add_option("--threads", fig.threads, "worker threads (figure 4)");
  figure->add_option("--output", output, "output path, - for stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    OutputSink sink(output, out);
    std::ostream& os = sink.get();
    if (*bell) cmd_bell(n, bias.resolve(), os);
    if (*dist) cmd_dist(n, bias.resolve(), stat, os);
    if (*sample) cmd_sample(n, bias.resolve(), samples, seed, os);
    if (*critical) cmd_critical(n_min, n_max, n_step, q, os);
    if (*figure) cmd_figure(fig, os);
    os.flush();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace rcg::cli
