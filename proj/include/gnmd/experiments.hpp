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

#ifndef GNMD_EXPERIMENTS_HPP_
#define GNMD_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gnmd/components.hpp"
#include "gnmd/giant.hpp"

namespace gnmd {

// ---------------------------------------------------------------------------
// Threshold table

// 1 + 1/(e (d-1)!) - 1/(e d!), the large-d expansion of mu_star.
double mu_star_approximation(int d);

struct ThresholdRow {
  int d = 0;
  double mu_star = 0.0;  // +infinity for d == 2
  double approximation = 0.0;
};

// Rows for d = 2..d_max; 2 <= d_max <= 20.
std::vector<ThresholdRow> threshold_table(int d_max);
std::string format_threshold_table(std::span<const ThresholdRow> rows);

// ---------------------------------------------------------------------------
// Formatting of single results

std::string format_prediction(const PhasePrediction& p);
std::string prediction_json(const PhasePrediction& p);
std::string format_report(const ComponentReport& r);
std::string report_json(const ComponentReport& r);

// ---------------------------------------------------------------------------
// Monte Carlo harness

// m = ceil(mu n / 2), tolerant of the representation error in mu.
std::size_t edges_for_mean_degree(double mu, std::size_t n);

// Evenly spaced grid from..to with `steps` points (steps == 1 gives {from}).
std::vector<double> linear_grid(double from, double to, std::size_t steps);

struct TrialResult {
  bool ok = false;
  std::string error;
  double largest_fraction = 0.0;
  double second_fraction = 0.0;
  double degree_deviation = 0.0;  // max_i |nu_i / n - lambda_i|
};

// `trials` independent samples of G(n, ceil(mu n / 2), d); trial t draws from
// stream (seed, t, tag). Sampler failures are recorded, not thrown.
std::vector<TrialResult> run_trials(int d, double mu, std::size_t n, std::size_t trials,
                                    std::uint64_t seed, std::uint64_t tag = 0);

struct SweepConfig {
  int d = 3;
  std::vector<double> mu_grid;
  std::size_t n = 10000;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::string output_path;
};

// Throws DomainError for an invalid configuration.
void validate(const SweepConfig& config);

struct SweepRow {
  int d = 0;
  double mu = 0.0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t trials = 0;
  double predicted_theta = 0.0;  // 0 when subcritical
  double mean_largest_frac = 0.0;
  double std_largest_frac = 0.0;
  double mean_second_frac = 0.0;
  double max_degree_dev = 0.0;  // mean over trials of the per-trial maximum
  std::size_t failed_trials = 0;
  std::string flags;  // "ok" or ';'-joined tags
};

SweepRow summarize(int d, double mu, std::size_t n, std::span<const TrialResult> trials);

// Grid point k uses stream tag k; results depend only on the config.
std::vector<SweepRow> run_sweep(const SweepConfig& config);
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

struct DuelConfig {
  int d = 4;
  std::vector<double> mu_grid;
  std::size_t n = 10000;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
};

struct DuelRow {
  int d = 0;
  double mu = 0.0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t trials = 0;
  double retention = 0.0;  // p = mu / d
  double mu_star = 0.0;
  double percolation_threshold = 0.0;  // 1 + 1/(d - 1)
  double gnmd_mean_largest = 0.0;
  double gnmd_std_largest = 0.0;
  double percolated_mean_largest = 0.0;
  double percolated_std_largest = 0.0;
  double gnmd_min_largest = 0.0;
  double percolated_max_largest = 0.0;
  std::size_t failed_trials = 0;
  std::string flags;
};

// Largest component of a uniform random d-regular graph with each edge kept
// with probability mu / d.
TrialResult percolated_regular_trial(int d, double mu, std::size_t n, std::uint64_t seed,
                                     std::uint64_t trial, std::uint64_t tag);

std::vector<DuelRow> run_percolation_duel(const DuelConfig& config);
void write_duel_csv(std::ostream& out, std::span<const DuelRow> rows);

// ---------------------------------------------------------------------------
// Acceptance-rate measurements

struct RateMeasurement {
  std::uint64_t attempts = 0;
  std::uint64_t accepted = 0;
  double mean_alpha = 0.0;  // simplicity measurement only

  double rate() const {
    return attempts ? static_cast<double>(accepted) / static_cast<double>(attempts) : 0.0;
  }
};

// Fraction of i.i.d. degree vectors (rate mean-matched to target_sum / n)
// whose sum equals target_sum.
RateMeasurement measure_conditioning_acceptance(std::size_t n, std::size_t target_sum, int d,
                                                std::uint64_t draws, std::uint64_t seed);

// Fraction of configuration pairings (fresh degree sequence each) that are
// simple.
RateMeasurement measure_simplicity_acceptance(std::size_t n, std::size_t m, int d,
                                              std::uint64_t attempts, std::uint64_t seed);

}  // namespace gnmd

#endif  // GNMD_EXPERIMENTS_HPP_
