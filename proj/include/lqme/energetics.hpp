#pragma once

#include <cstdint>

#include "lqme/core.hpp"

namespace lqme {

// Steady-state power bookkeeping at one (theta, p_lazy, ratio_r) point.
// Rates are per cycle duration tau = theta/Omega, in units of Omega*k_B*T.
struct PowerReport {
    double theta = 0.0;
    double p_lazy = 0.0;
    double ratio_r = 0.0;
    double gross_rate = 0.0;  // backaction work extracted
    double info_rate = 0.0;   // Landauer erasure cost
    double net_power = 0.0;   // gross_rate - info_rate
};

struct OptimalLaziness {
    double p_lazy = 0.0;  // argmax of net power over [0,1]
    double power = 0.0;   // achieved net power
};

// Landauer cost per cycle, (1 - p_l) S(p_j), in k_B*T (nats).
double info_cost(double p_jump, double p_lazy);

// Mean work extracted during cycle t (t >= 1), in units of hbar*omega0/2:
// W_theta [ (1-p_l)/D + 2 p_j p_l ((1-2p_j) p_l)^t / D ], D = 1 - p_l + 2 p_j p_l.
double mean_work_increment(std::int64_t t, const EngineParams& params);

// Steady-state limit W_theta (1-p_l)/D.
double mean_work_increment_ss(const EngineParams& params);

// Net steady-state power in Omega*k_B*T units:
// ((1-p_l)/theta) [ (r/2) sin(theta)/(1 - p_l cos(theta)) - S(sin^2(theta/2)) ].
double power_ss(double theta, double p_lazy, double ratio_r);

PowerReport power_report(double theta, double p_lazy, double ratio_r);

// Laziness maximizing power_ss over [0,1]: the closed-form stationary point
// clamped to [0,1] and compared against both endpoints; near cos(theta) = 0
// falls back to golden-section maximization.
OptimalLaziness optimal_laziness(double theta, double ratio_r);

// Separatrix ratio r_c = ln 4 between erasure-dominated and
// backaction-dominated optimal-laziness regimes.
double critical_ratio();

}  // namespace lqme
