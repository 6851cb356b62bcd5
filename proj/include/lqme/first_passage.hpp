#pragma once

#include <cstdint>
#include <optional>

#include "lqme/core.hpp"
#include "lqme/propagators.hpp"
#include "lqme/transforms.hpp"

namespace lqme {

// First passage of the work index to n_target, started from (n0, +theta)
// with n0 < n_target. t_cap is the censoring horizon for pmf tables and
// sampling.
struct FptQuery {
    std::int64_t n_target = 1;
    std::int64_t n0 = 0;
    EngineParams params;
    std::int64_t t_cap = 10'000;

    std::int64_t span() const { return n_target - n0; }
    void validate() const;
};

// Divergent moments are values, not errors: nullopt flags divergence so
// sweep tables stay total over the parameter grid.
struct FptSummary {
    std::optional<double> mean;
    std::optional<double> second_moment;
    std::optional<double> snr;
    std::int64_t n_samples = 0;  // 0 for analytic summaries
    std::int64_t censored = 0;
    bool analytic = true;
};

// Generating function of the first-passage probability:
// chi^(n0-n_T) z_u^(n_T-n0) generically, u^(n_T-n0) at p_l = 0, and the
// single-root form at p_j = 1. Exactly 1 at u = 1 for p_l < 1.
Complex fpt_gf(Complex u, const FptQuery& query);

// F_T via invert_series on fpt_gf; exact shortcuts for the p_l = 0 delta,
// T below the span, and parity-forbidden T.
double fpt_pmf(std::int64_t T, const FptQuery& query, const InversionOptions& opts = {});

// Analytic pmf table over T in [0, t_cap]; the tail mass beyond the cap is
// reported as censored_mass.
DistTable fpt_pmf_table(const FptQuery& query, const InversionOptions& opts = {});

// (n_T - n0)(1 - p_l + 2 p_j p_l)/(1 - p_l); nullopt at p_l = 1.
std::optional<double> mfpt(const FptQuery& query);

std::optional<double> fpt_second_moment(const FptQuery& query);

// Squared mean over variance of the FPT; nullopt when it diverges
// (p_j p_l = 0) or when the moments themselves diverge (p_l = 1).
std::optional<double> fpt_snr(const FptQuery& query);

FptSummary fpt_summary(const FptQuery& query);

// Dwell-length pmf at the end-of-cycle tag: geometric with stay probability
// 1 - p_j p_l from +theta and (1 - p_j) p_l from -theta; k counts completed
// extra cycles in the state (k = 0: the state changes at the next cycle).
// nullopt when the stay probability is 1 (the dwell never ends).
std::optional<double> waiting_time_pmf(std::int64_t k, QubitTag from_tag,
                                       const EngineParams& params);

}  // namespace lqme
