#include "lqme/montecarlo.hpp"

#include <cassert>
#include <cmath>

namespace lqme {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

EngineState step(const EngineState& state, const EngineParams& params, double jump_draw,
                 double lazy_draw) {
    const bool jumped = jump_draw < params.p_jump;
    const bool lazy = lazy_draw < params.p_lazy;
    // post-measurement outcome: "-" iff the backaction flipped the state
    const bool outcome_minus = (state.tag == QubitTag::PlusTheta) ? jumped : !jumped;
    // feedback rectifies to "+" unless this cycle is lazy
    const bool down = outcome_minus && lazy;
    return EngineState{state.n + (down ? -1 : +1),
                       down ? QubitTag::MinusTheta : QubitTag::PlusTheta};
}

Trajectory run_trajectory(const EngineParams& params, std::int64_t t_max, std::uint64_t seed) {
    if (t_max < 0) throw DomainError("t_max must be >= 0");
    params.validate();
    Trajectory tr;
    tr.seed = seed;
    tr.states.reserve(static_cast<std::size_t>(t_max + 1));
    tr.laziness_draws.reserve(static_cast<std::size_t>(t_max + 1));
    tr.states.push_back(EngineState{params.n0, QubitTag::PlusTheta});

    CycleRng rng(seed);
    for (std::int64_t t = 0; t < t_max; ++t) {
        const double jump_draw = rng.uniform();
        const double lazy_draw = rng.uniform();
        tr.laziness_draws.push_back(lazy_draw < params.p_lazy);
        const EngineState next = step(tr.states.back(), params, jump_draw, lazy_draw);
        assert(std::llabs(next.n - tr.states.back().n) == 1);
        assert((next.tag == QubitTag::PlusTheta) == (next.n > tr.states.back().n));
        tr.states.push_back(next);
    }
    // cycle k needs erasure iff ell_{k+1} = false; one extra draw resolves
    // the final cycle
    tr.laziness_draws.push_back(rng.uniform() < params.p_lazy);
    for (std::int64_t k = 0; k < t_max; ++k) {
        if (!tr.laziness_draws[static_cast<std::size_t>(k + 1)]) ++tr.erasure_count;
    }
    return tr;
}

EnsembleStats run_ensemble(const EngineParams& params, std::int64_t t_max,
                           std::int64_t n_samples, std::uint64_t base_seed) {
    if (n_samples < 1) throw DomainError("n_samples must be >= 1");
    if (t_max < 0) throw DomainError("t_max must be >= 0");
    params.validate();

    const std::size_t len = static_cast<std::size_t>(t_max + 1);
    std::vector<double> sum_n(len, 0.0), sum_n2(len, 0.0);
    std::vector<double> sum_d2(len, 0.0), sum_d4(len, 0.0);
    std::int64_t total_erasures = 0;

    std::int64_t hist_min = params.n0 - t_max;
    std::vector<std::int64_t> final_counts(static_cast<std::size_t>(2 * t_max + 1), 0);

    for (std::int64_t i = 0; i < n_samples; ++i) {
        const Trajectory tr = run_trajectory(params, t_max, trajectory_seed(base_seed, i));
        for (std::size_t t = 0; t < len; ++t) {
            const double n = static_cast<double>(tr.states[t].n);
            const double d = n - static_cast<double>(params.n0);
            sum_n[t] += n;
            sum_n2[t] += n * n;
            sum_d2[t] += d * d;
            sum_d4[t] += d * d * d * d;
        }
        total_erasures += tr.erasure_count;
        ++final_counts[static_cast<std::size_t>(tr.states.back().n - hist_min)];
    }

    EnsembleStats out;
    out.n_samples = n_samples;
    out.mean_n.resize(len);
    out.se_mean.resize(len);
    out.msd.resize(len);
    out.se_msd.resize(len);
    const double nd = static_cast<double>(n_samples);
    for (std::size_t t = 0; t < len; ++t) {
        const double mean = sum_n[t] / nd;
        const double var_n = std::max(0.0, sum_n2[t] / nd - mean * mean);
        const double mean_d2 = sum_d2[t] / nd;
        const double var_d2 = std::max(0.0, sum_d4[t] / nd - mean_d2 * mean_d2);
        out.mean_n[t] = mean;
        out.se_mean[t] = std::sqrt(var_n / nd);
        out.msd[t] = mean_d2;
        out.se_msd[t] = std::sqrt(var_d2 / nd);
    }

    out.final_histogram.support_offset = hist_min;
    out.final_histogram.masses.resize(final_counts.size());
    double total = 0.0;
    for (std::size_t i = 0; i < final_counts.size(); ++i) {
        const double mass = static_cast<double>(final_counts[i]) / nd;
        out.final_histogram.masses[i] = mass;
        total += mass;
    }
    out.final_histogram.total_mass = total;
    out.final_histogram.censored_mass = 0.0;

    out.erasure_fraction = t_max > 0 ? static_cast<double>(total_erasures) /
                                           (nd * static_cast<double>(t_max))
                                     : 0.0;
    return out;
}

FptSampleResult sample_fpt(const FptQuery& query, std::int64_t n_samples,
                           std::uint64_t base_seed) {
    query.validate();
    if (n_samples < 1) throw DomainError("n_samples must be >= 1");
    const EngineParams& params = query.params;

    std::vector<std::int64_t> counts(static_cast<std::size_t>(query.t_cap + 1), 0);
    std::int64_t censored = 0;
    double sum_t = 0.0, sum_t2 = 0.0;

    for (std::int64_t i = 0; i < n_samples; ++i) {
        CycleRng rng(trajectory_seed(base_seed, i));
        EngineState state{query.n0, QubitTag::PlusTheta};
        std::int64_t t = 0;
        while (state.n != query.n_target && t < query.t_cap) {
            const double jump_draw = rng.uniform();
            const double lazy_draw = rng.uniform();
            state = step(state, params, jump_draw, lazy_draw);
            ++t;
        }
        if (state.n == query.n_target) {
            ++counts[static_cast<std::size_t>(t)];
            sum_t += static_cast<double>(t);
            sum_t2 += static_cast<double>(t) * static_cast<double>(t);
        } else {
            ++censored;
        }
    }

    FptSampleResult out;
    const double nd = static_cast<double>(n_samples);
    out.histogram.support_offset = 0;
    out.histogram.masses.resize(counts.size());
    double total = 0.0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        out.histogram.masses[i] = static_cast<double>(counts[i]) / nd;
        total += out.histogram.masses[i];
    }
    out.histogram.total_mass = total;
    out.histogram.censored_mass = static_cast<double>(censored) / nd;

    out.summary.analytic = false;
    out.summary.n_samples = n_samples;
    out.summary.censored = censored;
    const std::int64_t hits = n_samples - censored;
    if (hits > 0) {
        const double mean = sum_t / static_cast<double>(hits);
        const double second = sum_t2 / static_cast<double>(hits);
        out.summary.mean = mean;
        out.summary.second_moment = second;
        const double var = second - mean * mean;
        if (var > 0.0) out.summary.snr = mean * mean / var;
    }
    return out;
}

}  // namespace lqme
