// SPDX-License-Identifier: Apache-2.0
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "rcg/community.hpp"
#include "rcg/errors.hpp"

namespace rcg {

SweepConfig SweepConfig::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("sweep config: ") + e.what());
  }
  SweepConfig c;
  try {
    if (j.contains("p_grid")) {
      c.p_grid = j.at("p_grid").get<std::vector<double>>();
    } else {
      const double lo = j.at("p_min").get<double>();
      const double hi = j.at("p_max").get<double>();
      const double step = j.at("p_step").get<double>();
      if (!(step > 0.0) || hi < lo) throw InvalidArgument("sweep config: bad p range");
      const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
      for (int i = 0; i < count; ++i) c.p_grid.push_back(lo + step * i);
    }
    c.replicas = j.value("replicas", 20);
    c.community_sizes = j.at("sizes").get<std::vector<int>>();
    c.p_in = j.at("p_in").get<double>();
    c.p_out = j.at("p_out").get<double>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.threads = j.value("threads", 0);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("sweep config: ") + e.what());
  }
  if (c.replicas < 1) throw InvalidArgument("sweep config: replicas must be >= 1");
  if (c.p_grid.empty()) throw InvalidArgument("sweep config: empty p grid");
  PpmParams{c.community_sizes, c.p_in, c.p_out}.validate();
  for (double p : c.p_grid) gamma_resolution(c.p_in, c.p_out, p);
  return c;
}

SweepConfig SweepConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("sweep config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

SweepConfig SweepConfig::figure4_default() {
  SweepConfig c;
  for (int i = 0; i <= 20; ++i) c.p_grid.push_back(0.5 + 0.0005 * i);
  c.replicas = 20;
  c.community_sizes = {200, 200, 200, 200, 200};
  c.p_in = 10.0 / 199.0;
  c.p_out = 1.0 / 80.0;
  c.seed = 20240601;
  return c;
}

std::vector<SweepRow> figure4_sweep(const SweepConfig& config, const RngStream& rng) {
  const PpmParams params{config.community_sizes, config.p_in, config.p_out};
  params.validate();
  const int R = config.replicas;
  const int P = static_cast<int>(config.p_grid.size());
  for (double p : config.p_grid) gamma_resolution(config.p_in, config.p_out, p);

  unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
  threads = std::max(1u, threads);

  auto run_jobs = [&](int count, auto&& job) {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int i = next++; i < count; i = next++) job(i);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::min<unsigned>(threads, static_cast<unsigned>(count)); ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  };

  std::vector<LabeledGraph> graphs(static_cast<std::size_t>(R));
  run_jobs(R, [&](int i) {
    RngStream r = rng.split(2 * static_cast<std::uint64_t>(i));
    graphs[i] = generate_ppm(params, r);
  });

  std::vector<double> edges(static_cast<std::size_t>(R) * P);
  std::vector<double> corr(static_cast<std::size_t>(R) * P);
  run_jobs(R * P, [&](int job) {
    const int pi = job / R;
    const int i = job % R;
    const double gamma = gamma_resolution(config.p_in, config.p_out, config.p_grid[pi]);
    RngStream r = rng.split(2 * static_cast<std::uint64_t>(i) + 1);
    const Partition found = louvain(graphs[i].graph, gamma, r);
    edges[job] = static_cast<double>(found.edges());
    try {
      corr[job] = correlation_coefficient(found, graphs[i].truth);
    } catch (const UndefinedCorrelation&) {
      corr[job] = 0.0;
    }
  });

  std::vector<SweepRow> rows;
  for (int pi = 0; pi < P; ++pi) {
    double se = 0.0;
    double sc = 0.0;
    for (int i = 0; i < R; ++i) {
      se += edges[pi * R + i];
      sc += corr[pi * R + i];
    }
    const double mc = sc / R;
    double ss = 0.0;
    for (int i = 0; i < R; ++i) ss += (corr[pi * R + i] - mc) * (corr[pi * R + i] - mc);
    const double sd = R > 1 ? std::sqrt(ss / (R - 1)) : 0.0;
    rows.push_back({config.p_grid[pi], se / R, mc, sd / std::sqrt(static_cast<double>(R))});
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "p,mean_detected_edges,mean_correlation,stderr_correlation\n";
  out << std::setprecision(12);
  for (const auto& r : rows) {
    out << r.p << ',' << r.mean_detected_edges << ',' << r.mean_correlation << ',' << r.stderr_correlation << '\n';
  }
}

}  // namespace rcg
