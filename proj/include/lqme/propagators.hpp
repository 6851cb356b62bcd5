#pragma once

#include <cstdint>
#include <vector>

#include "lqme/core.hpp"
#include "lqme/transforms.hpp"

namespace lqme {

// Indexed probability table over a contiguous integer support, with the mass
// beyond any truncation horizon kept in censored_mass.
struct DistTable {
    std::int64_t support_offset = 0;  // index of masses[0]
    std::vector<double> masses;
    double total_mass = 0.0;
    double censored_mass = 0.0;

    double mass_at(std::int64_t index) const {
        const std::int64_t i = index - support_offset;
        if (i < 0 || i >= static_cast<std::int64_t>(masses.size())) return 0.0;
        return masses[static_cast<std::size_t>(i)];
    }

    // Every mass in [0,1] and total_mass + censored_mass = 1 within 1e-9.
    void validate() const;
};

struct PropagatorQuery {
    std::int64_t n = 0;
    QubitTag tag = QubitTag::PlusTheta;
    std::int64_t n0 = 0;
    QubitTag tag0 = QubitTag::PlusTheta;
    bool marginal_over_tag = false;  // sum over the final tag
};

// u-domain propagator P~_u(n, tag | n0, tag0), valid on the full lattice
// (no n0 < n restriction). Dispatches to the ballistic, oscillating, and
// single-root special cases where the two-root formula degenerates.
Complex propagator_gf(const PropagatorQuery& query, Complex u, const EngineParams& params);

// P_t(n, tag | n0, tag0) via numerical inversion of propagator_gf. Structural
// zeros (parity, reachability, tag/step-direction) are returned exactly.
double propagator_pmf(std::int64_t t, const PropagatorQuery& query, const EngineParams& params,
                      const InversionOptions& opts = {});

// Marginal-over-tag table on the full reachable support [n0 - t, n0 + t].
// total_mass = 1 within 1e-9 or an IntegrityError is thrown; censored_mass = 0.
DistTable pmf_table(std::int64_t t, std::int64_t n0, QubitTag tag0, const EngineParams& params,
                    const InversionOptions& opts = {});

}  // namespace lqme
