// Copyright 2026 The gnmd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gnmd/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "gnmd/error.hpp"
#include "gnmd/parallel.hpp"
#include "gnmd/rng.hpp"
#include "gnmd/sampler.hpp"
#include "gnmd/truncpoisson.hpp"

namespace gnmd {
namespace {

using nlohmann::json;

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

template <typename Get>
MeanStd mean_std(std::span<const TrialResult> trials, Get get) {
  MeanStd out;
  std::size_t k = 0;
  for (const TrialResult& t : trials) {
    if (!t.ok) continue;
    out.mean += get(t);
    ++k;
  }
  if (k == 0) return out;
  out.mean /= static_cast<double>(k);
  if (k > 1) {
    double ss = 0.0;
    for (const TrialResult& t : trials) {
      if (t.ok) ss += (get(t) - out.mean) * (get(t) - out.mean);
    }
    out.std = std::sqrt(ss / static_cast<double>(k - 1));
  }
  return out;
}

std::size_t failures(std::span<const TrialResult> trials) {
  return static_cast<std::size_t>(
      std::count_if(trials.begin(), trials.end(), [](const TrialResult& t) { return !t.ok; }));
}

std::string join_flags(const std::vector<std::string>& tags) {
  if (tags.empty()) return "ok";
  std::string out;
  for (const auto& t : tags) {
    if (!out.empty()) out += ';';
    out += t;
  }
  return out;
}

void check_grid(int d, std::span<const double> grid, std::size_t n, std::size_t trials) {
  if (d < 2) throw DomainError("d must be >= 2");
  if (grid.empty()) throw DomainError("mean-degree grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !(grid[i] < d)) {
      throw DomainError(fmt::format("grid value {} outside (0, {})", grid[i], d));
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw DomainError("mean-degree grid must be strictly increasing");
    }
  }
  if (trials < 1) throw DomainError("trials must be >= 1");
  if (n < 10) throw DomainError("n must be >= 10");
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

double mu_star_approximation(int d) {
  if (d < 1) throw DomainError("mu_star_approximation: d must be >= 1");
  const double e = std::numbers::e;
  const double fact_prev = std::tgamma(static_cast<double>(d));  // (d-1)!
  return 1.0 + 1.0 / (e * fact_prev) - 1.0 / (e * fact_prev * d);
}

std::vector<ThresholdRow> threshold_table(int d_max) {
  if (d_max < 2 || d_max > 20) throw DomainError("threshold table needs 2 <= d_max <= 20");
  std::vector<ThresholdRow> rows;
  for (int d = 2; d <= d_max; ++d) rows.push_back({d, mu_star(d), mu_star_approximation(d)});
  return rows;
}

std::string format_threshold_table(std::span<const ThresholdRow> rows) {
  std::string out = fmt::format("{:>3}  {:>9}  {:>16}  {:>16}\n", "d", "mu_star",
                                "mu_star (full)", "1+1/(e(d-1)!)-1/(e d!)");
  for (const ThresholdRow& r : rows) {
    if (std::isinf(r.mu_star)) {
      out += fmt::format("{:>3}  {:>9}  {:>16}  {:>16.12f}\n", r.d, "∞", "∞",
                         r.approximation);
    } else {
      out += fmt::format("{:>3}  {:>9.5f}  {:>16.12f}  {:>16.12f}\n", r.d, r.mu_star,
                         r.mu_star, r.approximation);
    }
  }
  return out;
}

std::string format_prediction(const PhasePrediction& p) {
  std::string out;
  out += fmt::format("d             {}\n", p.d);
  out += fmt::format("mu            {:.10g}\n", p.mu);
  out += fmt::format("lambda        {:.12f}\n", p.lambda);
  out += std::isinf(p.mu_star) ? std::string("mu_star       ∞\n")
                               : fmt::format("mu_star       {:.12f}\n", p.mu_star);
  out += fmt::format("Q             {:.12g}\n", p.q);
  out += fmt::format("D             {:.12f}\n", p.big_d);
  out += fmt::format("phase         {}\n", to_string(p.phase));
  if (p.psi) out += fmt::format("psi           {:.12f}\n", *p.psi);
  if (p.theta) out += fmt::format("theta         {:.12f}\n", *p.theta);
  if (p.near_critical) out += "warning       near-critical: |mu - mu_star| is tiny, prediction unreliable\n";
  return out;
}

std::string prediction_json(const PhasePrediction& p) {
  json j = {{"d", p.d},
            {"mu", p.mu},
            {"lambda", p.lambda},
            {"q", p.q},
            {"mu_star", finite_or_null(p.mu_star)},
            {"mu_star_infinite", std::isinf(p.mu_star)},
            {"phase", to_string(p.phase)},
            {"psi", p.psi ? json(*p.psi) : json(nullptr)},
            {"theta", p.theta ? json(*p.theta) : json(nullptr)},
            {"big_d", p.big_d},
            {"near_critical", p.near_critical}};
  return j.dump();
}

std::string format_report(const ComponentReport& r) {
  std::string out;
  out += fmt::format("n                 {}\n", r.n);
  out += fmt::format("m                 {}\n", r.m);
  out += fmt::format("components        {}\n", r.sizes.size());
  out += fmt::format("largest_fraction  {:.6f}\n", r.largest_fraction);
  out += fmt::format("second_fraction   {:.6f}\n", r.second_fraction);
  out += "largest_sizes    ";
  for (std::size_t i = 0; i < std::min<std::size_t>(10, r.sizes.size()); ++i) {
    out += fmt::format(" {}", r.sizes[i]);
  }
  out += "\ndegree_counts    ";
  for (auto c : r.degree_counts) out += fmt::format(" {}", c);
  out += '\n';
  return out;
}

std::string report_json(const ComponentReport& r) {
  std::vector<std::size_t> top(r.sizes.begin(),
                               r.sizes.begin() + static_cast<std::ptrdiff_t>(
                                                     std::min<std::size_t>(10, r.sizes.size())));
  json j = {{"n", r.n},
            {"m", r.m},
            {"component_count", r.sizes.size()},
            {"largest_fraction", r.largest_fraction},
            {"second_fraction", r.second_fraction},
            {"largest_sizes", top},
            {"degree_counts", r.degree_counts}};
  return j.dump();
}

std::size_t edges_for_mean_degree(double mu, std::size_t n) {
  const double half = mu * static_cast<double>(n) / 2.0;
  return static_cast<std::size_t>(std::ceil(half - 1e-9 * std::max(1.0, half)));
}

std::vector<double> linear_grid(double from, double to, std::size_t steps) {
  if (steps == 0) throw DomainError("grid needs at least one step");
  if (steps == 1) return {from};
  std::vector<double> grid(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    grid[i] = from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return grid;
}

std::vector<TrialResult> run_trials(int d, double mu, std::size_t n, std::size_t trials,
                                    std::uint64_t seed, std::uint64_t tag) {
  const DegreeLaw law = make_degree_law(d, mu);
  const std::size_t m = edges_for_mean_degree(mu, n);
  std::vector<TrialResult> results(trials);
  parallel_for(trials, [&](std::size_t t) {
    TrialResult& out = results[t];
    try {
      Rng rng = Rng::stream(seed, t, tag);
      const ComponentReport r = report(sample_graph(n, m, d, rng));
      out.largest_fraction = r.largest_fraction;
      out.second_fraction = r.second_fraction;
      out.degree_deviation = degree_deviation(r, law.probs());
      out.ok = true;
    } catch (const std::exception& e) {
      out.error = error_kind(e) + ": " + e.what();
    }
  });
  return results;
}

void validate(const SweepConfig& config) {
  check_grid(config.d, config.mu_grid, config.n, config.trials);
}

SweepRow summarize(int d, double mu, std::size_t n, std::span<const TrialResult> trials) {
  const PhasePrediction prediction = predict(d, mu);
  SweepRow row;
  row.d = d;
  row.mu = mu;
  row.n = n;
  row.m = edges_for_mean_degree(mu, n);
  row.trials = trials.size();
  row.predicted_theta = prediction.theta.value_or(0.0);
  const MeanStd largest = mean_std(trials, [](const TrialResult& t) { return t.largest_fraction; });
  row.mean_largest_frac = largest.mean;
  row.std_largest_frac = largest.std;
  row.mean_second_frac =
      mean_std(trials, [](const TrialResult& t) { return t.second_fraction; }).mean;
  row.max_degree_dev =
      mean_std(trials, [](const TrialResult& t) { return t.degree_deviation; }).mean;
  row.failed_trials = failures(trials);

  std::vector<std::string> tags;
  if (prediction.near_critical) tags.emplace_back("near_critical");
  if (row.failed_trials > 0) tags.push_back(fmt::format("failed_trials={}", row.failed_trials));
  if (prediction.phase == Phase::Supercritical && n >= 100000 && row.trials >= 20 &&
      row.std_largest_frac > 0.03) {
    tags.emplace_back("wide_spread");
  }
  row.flags = join_flags(tags);
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  validate(config);
  std::vector<SweepRow> rows;
  for (std::size_t k = 0; k < config.mu_grid.size(); ++k) {
    const double mu = config.mu_grid[k];
    const auto trials = run_trials(config.d, mu, config.n, config.trials, config.seed, k);
    rows.push_back(summarize(config.d, mu, config.n, trials));
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "d,mu,n,m,trials,predicted_theta,mean_largest_frac,std_largest_frac,"
         "mean_second_frac,max_degree_dev,flags\n";
  for (const SweepRow& r : rows) {
    out << fmt::format("{},{:.6f},{},{},{},{:.8f},{:.8f},{:.8f},{:.8f},{:.8f},{}\n", r.d, r.mu,
                       r.n, r.m, r.trials, r.predicted_theta, r.mean_largest_frac,
                       r.std_largest_frac, r.mean_second_frac, r.max_degree_dev, r.flags);
  }
}

TrialResult percolated_regular_trial(int d, double mu, std::size_t n, std::uint64_t seed,
                                     std::uint64_t trial, std::uint64_t tag) {
  TrialResult out;
  try {
    Rng rng = Rng::stream(seed, trial, tag);
    // Simple acceptance of a d-regular pairing is about exp(-(d^2 - 1) / 4).
    SamplerLimits limits;
    limits.simplicity_restarts = std::max<std::size_t>(
        limits.simplicity_restarts,
        static_cast<std::size_t>(std::ceil(50.0 * std::exp((d * d - 1) / 4.0))));
    const SimpleGraph regular = sample_regular_graph(n, d, rng, limits);
    const ComponentReport r = report(percolate(regular, mu / d, rng));
    out.largest_fraction = r.largest_fraction;
    out.second_fraction = r.second_fraction;
    out.ok = true;
  } catch (const std::exception& e) {
    out.error = error_kind(e) + ": " + e.what();
  }
  return out;
}

std::vector<DuelRow> run_percolation_duel(const DuelConfig& config) {
  if (config.d < 3) throw DomainError("percolation duel needs d >= 3");
  check_grid(config.d, config.mu_grid, config.n, config.trials);
  std::vector<DuelRow> rows;
  for (std::size_t k = 0; k < config.mu_grid.size(); ++k) {
    const double mu = config.mu_grid[k];
    // Tags: 2k for the uniform model, 2k + 1 for the percolated regular graph.
    const auto uniform = run_trials(config.d, mu, config.n, config.trials, config.seed, 2 * k);
    std::vector<TrialResult> percolated(config.trials);
    parallel_for(config.trials, [&](std::size_t t) {
      percolated[t] = percolated_regular_trial(config.d, mu, config.n, config.seed, t, 2 * k + 1);
    });

    DuelRow row;
    row.d = config.d;
    row.mu = mu;
    row.n = config.n;
    row.m = edges_for_mean_degree(mu, config.n);
    row.trials = config.trials;
    row.retention = mu / config.d;
    row.mu_star = mu_star(config.d);
    row.percolation_threshold = 1.0 + 1.0 / (config.d - 1);
    const auto largest = [](const TrialResult& t) { return t.largest_fraction; };
    const MeanStd a = mean_std(uniform, largest);
    const MeanStd b = mean_std(percolated, largest);
    row.gnmd_mean_largest = a.mean;
    row.gnmd_std_largest = a.std;
    row.percolated_mean_largest = b.mean;
    row.percolated_std_largest = b.std;
    const auto by_largest = [](const TrialResult& x, const TrialResult& y) {
      return x.largest_fraction < y.largest_fraction;
    };
    row.gnmd_min_largest =
        std::min_element(uniform.begin(), uniform.end(), by_largest)->largest_fraction;
    row.percolated_max_largest =
        std::max_element(percolated.begin(), percolated.end(), by_largest)->largest_fraction;
    row.failed_trials = failures(uniform) + failures(percolated);
    std::vector<std::string> tags;
    if (row.failed_trials > 0) tags.push_back(fmt::format("failed_trials={}", row.failed_trials));
    row.flags = join_flags(tags);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_duel_csv(std::ostream& out, std::span<const DuelRow> rows) {
  out << "d,mu,n,m,trials,retention,mu_star,percolation_threshold,gnmd_mean_largest,"
         "gnmd_std_largest,percolated_mean_largest,percolated_std_largest,flags\n";
  for (const DuelRow& r : rows) {
    out << fmt::format("{},{:.6f},{},{},{},{:.8f},{:.8f},{:.8f},{:.8f},{:.8f},{:.8f},{:.8f},{}\n",
                       r.d, r.mu, r.n, r.m, r.trials, r.retention, r.mu_star,
                       r.percolation_threshold, r.gnmd_mean_largest, r.gnmd_std_largest,
                       r.percolated_mean_largest, r.percolated_std_largest, r.flags);
  }
}

RateMeasurement measure_conditioning_acceptance(std::size_t n, std::size_t target_sum, int d,
                                                std::uint64_t draws, std::uint64_t seed) {
  if (n == 0 || target_sum == 0 || target_sum >= static_cast<std::size_t>(d) * n) {
    throw DomainError("conditioning measurement needs 0 < target_sum < d n");
  }
  const double mean = static_cast<double>(target_sum) / static_cast<double>(n);
  const DegreeLaw law = DegreeLaw::from_rate(d, invert_truncated_mean(d, mean));
  constexpr std::uint64_t kBlock = 10000;
  const std::uint64_t blocks = (draws + kBlock - 1) / kBlock;
  std::vector<std::uint64_t> hits(blocks, 0);
  parallel_for(blocks, [&](std::size_t b) {
    Rng rng = Rng::stream(seed, b);
    const std::uint64_t count = std::min(kBlock, draws - b * kBlock);
    for (std::uint64_t i = 0; i < count; ++i) {
      const auto counts = draw_degree_counts(law, n, rng);
      std::size_t sum = 0;
      for (std::size_t k = 0; k < counts.size(); ++k) sum += k * counts[k];
      if (sum == target_sum) ++hits[b];
    }
  });
  RateMeasurement r;
  r.attempts = draws;
  for (auto h : hits) r.accepted += h;
  return r;
}

RateMeasurement measure_simplicity_acceptance(std::size_t n, std::size_t m, int d,
                                              std::uint64_t attempts, std::uint64_t seed) {
  std::vector<std::uint8_t> simple(attempts, 0);
  std::vector<double> alpha(attempts, 0.0);
  parallel_for(attempts, [&](std::size_t t) {
    Rng rng = Rng::stream(seed, t);
    const DegreeSequence x = sample_degree_sequence(n, m, d, rng);
    alpha[t] = alpha_diagnostic(x);
    simple[t] = is_simple(pair_configuration(x, rng)) ? 1 : 0;
  });
  RateMeasurement r;
  r.attempts = attempts;
  double alpha_sum = 0.0;
  for (std::size_t t = 0; t < attempts; ++t) {
    r.accepted += simple[t];
    alpha_sum += alpha[t];
  }
  r.mean_alpha = attempts ? alpha_sum / static_cast<double>(attempts) : 0.0;
  return r;
}

}  // namespace gnmd
