#pragma once

#include <cstdint>
#include <optional>

#include "lqme/core.hpp"

namespace lqme {

// Closed-form time-dependent moments of the work index, for the engine
// started from (n0, +theta).
struct MomentReport {
    std::int64_t t = 0;
    double mean_n = 0.0;
    double second_moment = 0.0;
    double variance = 0.0;
    double msd = 0.0;
    std::optional<double> alpha;  // defined for t >= 2
};

double mean_n(std::int64_t t, const EngineParams& params);
double second_moment_n(std::int64_t t, const EngineParams& params);

// <(n_t - n0)^2>; independent of n0.
double msd(std::int64_t t, const EngineParams& params);

// ln(msd(t)) / ln(t). Throws DomainError for t < 2 or msd = 0.
double anomalous_alpha(std::int64_t t, const EngineParams& params);

MomentReport moment_report(std::int64_t t, const EngineParams& params);

}  // namespace lqme
