// Test-only oracles, independent of the library's analytic code paths.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lqme/core.hpp"

namespace oracles {

using StateKey = std::pair<std::int64_t, bool>;  // (n, tag is +theta)
using StateDist = std::map<StateKey, double>;

inline double up_probability(bool plus, double pj, double pl) {
    return plus ? 1.0 - pj * pl : 1.0 - (1.0 - pj) * pl;
}

// One application of the joint master-equation update (push-forward).
inline StateDist push_forward(const StateDist& dist, double pj, double pl) {
    StateDist next;
    for (const auto& [key, p] : dist) {
        const auto& [n, plus] = key;
        const double up = up_probability(plus, pj, pl);
        next[{n + 1, true}] += p * up;
        next[{n - 1, false}] += p * (1.0 - up);
    }
    return next;
}

// Literal enumeration over all 2^t step sequences; independent of the
// master-equation recursion above.
inline StateDist enumerate_paths(double pj, double pl, std::int64_t n0, bool plus0,
                                 std::int64_t t) {
    StateDist out;
    const std::uint64_t paths = 1ULL << t;
    for (std::uint64_t bits = 0; bits < paths; ++bits) {
        std::int64_t n = n0;
        bool plus = plus0;
        double prob = 1.0;
        for (std::int64_t s = 0; s < t; ++s) {
            const bool go_up = (bits >> s) & 1ULL;
            const double up = up_probability(plus, pj, pl);
            prob *= go_up ? up : 1.0 - up;
            n += go_up ? 1 : -1;
            plus = go_up;
        }
        if (prob > 0.0) out[{n, plus}] += prob;
    }
    return out;
}

inline StateDist iterate_master(double pj, double pl, std::int64_t n0, bool plus0,
                                std::int64_t t) {
    StateDist dist;
    dist[{n0, plus0}] = 1.0;
    for (std::int64_t s = 0; s < t; ++s) dist = push_forward(dist, pj, pl);
    return dist;
}

// First-passage pmf by absorbing-boundary recursion.
inline std::vector<double> fpt_recursion(double pj, double pl, std::int64_t n0,
                                         std::int64_t n_target, std::int64_t t_max) {
    std::vector<double> out(static_cast<std::size_t>(t_max + 1), 0.0);
    StateDist dist;
    dist[{n0, true}] = 1.0;
    for (std::int64_t t = 1; t <= t_max; ++t) {
        StateDist next;
        for (const auto& [key, p] : dist) {
            const auto& [n, plus] = key;
            const double up = up_probability(plus, pj, pl);
            if (n + 1 == n_target) {
                out[static_cast<std::size_t>(t)] += p * up;
            } else {
                next[{n + 1, true}] += p * up;
            }
            next[{n - 1, false}] += p * (1.0 - up);
        }
        dist = std::move(next);
    }
    return out;
}

// Independent golden-section maximizer used to cross-check the library's
// optimizer and stationary-point formula.
template <typename F>
double golden_argmax(F f, double lo, double hi, double tol = 1e-10) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return (a + b) / 2.0;
}

}  // namespace oracles
