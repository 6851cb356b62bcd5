#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lqme/core.hpp"
#include "lqme/first_passage.hpp"
#include "lqme/propagators.hpp"

namespace lqme {

// SplitMix64 hash step; used to derive independent per-trajectory seeds.
std::uint64_t splitmix64(std::uint64_t x);

inline std::uint64_t trajectory_seed(std::uint64_t base_seed, std::int64_t index) {
    return base_seed ^ splitmix64(static_cast<std::uint64_t>(index));
}

// Deterministic per-trajectory generator. Two uniform draws per cycle, in a
// fixed order: first the measurement jump, then the laziness.
class CycleRng {
  public:
    explicit CycleRng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {
        // 53-bit mantissa draw, bit-stable across platforms
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

  private:
    std::mt19937_64 engine_;
};

// One cycle of the run-and-tumble update. Consumes the two uniforms in the
// documented order; the laziness draw is consumed even when feedback is a
// no-op so the draw stream stays aligned with the protocol tape.
EngineState step(const EngineState& state, const EngineParams& params, double jump_draw,
                 double lazy_draw);

struct Trajectory {
    std::uint64_t seed = 0;
    std::vector<EngineState> states;      // length t_max + 1, index = cycle count
    std::vector<bool> laziness_draws;     // ell_1 .. ell_{t_max + 1}
    std::int64_t erasure_count = 0;       // cycles k with ell_{k+1} = false
};

// Deterministic given the seed. Starts from (params.n0, +theta). The final
// cycle's erasure requirement is resolved by one extra laziness draw.
Trajectory run_trajectory(const EngineParams& params, std::int64_t t_max, std::uint64_t seed);

struct EnsembleStats {
    std::int64_t n_samples = 0;
    std::vector<double> mean_n;        // per cycle count 0..t_max
    std::vector<double> se_mean;
    std::vector<double> msd;           // mean of (n - n0)^2
    std::vector<double> se_msd;
    DistTable final_histogram;         // over n at t_max
    double erasure_fraction = 0.0;     // pooled erasure_count / (n_samples * t_max)
};

// Ensemble of independent trajectories with seeds
// seed_i = base_seed XOR splitmix64(i); aggregation order is fixed by the
// trajectory index, so results do not depend on scheduling.
EnsembleStats run_ensemble(const EngineParams& params, std::int64_t t_max,
                           std::int64_t n_samples, std::uint64_t base_seed);

struct FptSampleResult {
    FptSummary summary;   // empirical moments over uncensored samples
    DistTable histogram;  // over T in [0, t_cap]; censored runs in censored_mass
};

// First-passage sampling: runs until n = n_target or t = t_cap (censored).
FptSampleResult sample_fpt(const FptQuery& query, std::int64_t n_samples,
                           std::uint64_t base_seed);

}  // namespace lqme
