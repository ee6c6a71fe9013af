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

#ifndef GNMD_GIANT_HPP_
#define GNMD_GIANT_HPP_

#include <optional>
#include <span>

#include "gnmd/truncpoisson.hpp"

namespace gnmd {

// The functions below accept any degree distribution p_0..p_L as a span;
// the DegreeLaw overloads forward to them.

// D = sum_i i p_i.
double mean_degree(std::span<const double> probs);

// g(x) = D - 2x - sum_{i>=1} i p_i (1 - 2x/D)^{i/2} on [0, D/2].
double g_eval(std::span<const double> probs, double x);
inline double g_eval(const DegreeLaw& law, double x) { return g_eval(law.probs(), x); }

// Smallest positive root of g. Requires Q > 0, otherwise PreconditionError.
double solve_psi(std::span<const double> probs);
inline double solve_psi(const DegreeLaw& law) { return solve_psi(law.probs()); }

// Number of forward-scan points solve_psi uses on (0, D/2].
inline constexpr int kPsiScanPoints = 1 << 14;

// Giant-component fraction 1 - sum_{i>=0} p_i (1 - 2 psi/D)^{i/2}. The i = 0
// term is included: degree-0 vertices never join the giant.
double theta(std::span<const double> probs, double psi);
inline double theta(const DegreeLaw& law, double psi) { return theta(law.probs(), psi); }

enum class Phase { Subcritical, Supercritical };

const char* to_string(Phase phase);

struct PhasePrediction {
  int d = 0;
  double mu = 0.0;
  double lambda = 0.0;
  double q = 0.0;
  double mu_star = 0.0;  // +infinity when d == 2
  Phase phase = Phase::Subcritical;
  std::optional<double> psi;    // set iff supercritical
  std::optional<double> theta;  // set iff supercritical
  double big_d = 0.0;
  // |mu - mu_star| < kNearCriticalBand: the asymptotic dichotomy says
  // nothing this close to the threshold.
  bool near_critical = false;
};

inline constexpr double kNearCriticalBand = 1e-6;

// Phase classification and giant-component prediction for G(n, m, d) with
// m ~ mu n / 2. Preconditions as make_degree_law.
PhasePrediction predict(int d, double mu);

}  // namespace gnmd

#endif  // GNMD_GIANT_HPP_
