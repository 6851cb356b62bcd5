#include "lqme/propagators.hpp"

#include <cmath>
#include <string>

namespace lqme {

namespace {

constexpr double kNormalizationTol = 1e-9;
constexpr double kNoiseFloor = 1e-15;

Complex cpow_int(Complex base, std::int64_t e) {
    // e >= 0 throughout this file
    Complex acc(1.0, 0.0);
    Complex b = base;
    for (std::int64_t k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= b;
        b *= b;
    }
    return acc;
}

// Coefficient of z^m in 1/[(z - z_in)(z - z_out)], Laurent-expanded on the
// annulus |z_in| < |z| < |z_out|. z_in = 0 is allowed (single-root case).
Complex annulus_coefficient(std::int64_t m, Complex z_in, Complex z_out) {
    const Complex diff = z_in - z_out;
    if (m <= -1) {
        if (z_in == Complex(0.0, 0.0)) {
            return (m == -1) ? 1.0 / diff : Complex(0.0, 0.0);
        }
        return cpow_int(z_in, -m - 1) / diff;
    }
    return 1.0 / (cpow_int(z_out, m + 1) * diff);
}

bool is_plus(QubitTag t) { return t == QubitTag::PlusTheta; }

// Two-root (or single-root with z_in = 0) evaluation of the u-domain
// propagator from the rational (z,u)-domain solution: the numerator is a
// short Laurent polynomial in z anchored at z^{n0}, the denominator
// u(1 - p_j p_l)(z - z_in)(z - z_out).
Complex rational_gf(const PropagatorQuery& q, Complex u, double pj, double pl, Complex z_in,
                    Complex z_out) {
    const double pr = 1.0 - pj;
    const std::int64_t d = q.n - q.n0;
    Complex num(0.0, 0.0);
    if (is_plus(q.tag0)) {
        if (is_plus(q.tag)) {
            num = pr * pl * u * annulus_coefficient(d, z_in, z_out) -
                  annulus_coefficient(d - 1, z_in, z_out);
        } else {
            num = -pj * pl * u * annulus_coefficient(d, z_in, z_out);
        }
    } else {
        if (is_plus(q.tag)) {
            num = -(1.0 - pr * pl) * u * annulus_coefficient(d - 2, z_in, z_out);
        } else {
            num = (1.0 - pj * pl) * u * annulus_coefficient(d - 2, z_in, z_out) -
                  annulus_coefficient(d - 1, z_in, z_out);
        }
    }
    return num / (u * (1.0 - pj * pl));
}

Complex single_tag_gf(const PropagatorQuery& q, Complex u, const EngineParams& params) {
    const double pj = params.p_jump;
    const double pl = params.p_lazy;
    const std::int64_t d = q.n - q.n0;

    if (u == Complex(0.0, 0.0)) {
        // t = 0 coefficient: the initial condition
        return (d == 0 && q.tag == q.tag0) ? 1.0 : 0.0;
    }

    // Ballistic: with p_l = 0 every feedback rectifies, with p_j = 0 the
    // +theta state never tumbles. From -theta with p_j = 0, p_l > 0 the walk
    // first dwells downwards, so that case stays on the two-root path.
    if (pl == 0.0 || (pj == 0.0 && is_plus(q.tag0))) {
        if (!is_plus(q.tag0) && !is_plus(q.tag)) {
            return d == 0 ? 1.0 : 0.0;  // only the t = 0 point
        }
        if (!is_plus(q.tag)) return 0.0;
        const std::int64_t d_min = is_plus(q.tag0) ? 0 : 1;
        return d >= d_min ? cpow_int(u, d) : 0.0;
    }

    if (pj * pl == 1.0) {
        // tumbles every cycle: oscillates between the work-state pair
        const Complex osc = 1.0 / (1.0 - u * u);
        if (is_plus(q.tag0)) {
            if (is_plus(q.tag) && d == 0) return osc;
            if (!is_plus(q.tag) && d == -1) return u * osc;
        } else {
            if (!is_plus(q.tag) && d == 0) return osc;
            if (is_plus(q.tag) && d == 1) return u * osc;
        }
        return 0.0;
    }

    if ((1.0 - pj) * pl == 0.0) {
        // p_j = 1 with 0 < p_l < 1: chi = 0 and the denominator quadratic
        // loses one root to the origin; the surviving pole sits at
        // (1 - p_l u^2) / (u (1 - p_l)).
        const Complex z_out = (1.0 - pl * u * u) / (u * (1.0 - pl));
        return rational_gf(q, u, pj, pl, Complex(0.0, 0.0), z_out);
    }

    const RootPair roots = quadratic_roots(u, pj, pl);
    return rational_gf(q, u, pj, pl, roots.inner(), roots.outer());
}

// Exact structural zeros: support, step parity, and the tag fixed by the
// direction of the last step.
bool structurally_zero(std::int64_t t, const PropagatorQuery& q) {
    const std::int64_t d = q.n - q.n0;
    if (t == 0) return !(d == 0 && q.tag == q.tag0);
    if (std::llabs(d) > t) return true;
    if (((d % 2) + 2) % 2 != ((t % 2) + 2) % 2) return true;
    // last step up must land from a reachable point, same for down
    if (is_plus(q.tag)) return std::llabs(d - 1) > t - 1;
    return std::llabs(d + 1) > t - 1;
}

}  // namespace

void DistTable::validate() const {
    for (double m : masses) {
        if (!(m >= 0.0 && m <= 1.0)) {
            throw IntegrityError("table mass " + std::to_string(m) + " outside [0,1]");
        }
    }
    if (std::abs(total_mass + censored_mass - 1.0) > kNormalizationTol) {
        throw IntegrityError("table mass " + std::to_string(total_mass) + " + censored " +
                             std::to_string(censored_mass) + " != 1 beyond 1e-9");
    }
}

Complex propagator_gf(const PropagatorQuery& query, Complex u, const EngineParams& params) {
    if (std::abs(u) >= 1.0) {
        throw DomainError("propagator generating function requires |u| < 1");
    }
    if (query.marginal_over_tag) {
        PropagatorQuery plus = query;
        plus.marginal_over_tag = false;
        plus.tag = QubitTag::PlusTheta;
        PropagatorQuery minus = plus;
        minus.tag = QubitTag::MinusTheta;
        return single_tag_gf(plus, u, params) + single_tag_gf(minus, u, params);
    }
    return single_tag_gf(query, u, params);
}

double propagator_pmf(std::int64_t t, const PropagatorQuery& query, const EngineParams& params,
                      const InversionOptions& opts) {
    if (t < 0) throw DomainError("t must be >= 0");
    if (query.marginal_over_tag) {
        PropagatorQuery plus = query;
        plus.marginal_over_tag = false;
        plus.tag = QubitTag::PlusTheta;
        PropagatorQuery minus = plus;
        minus.tag = QubitTag::MinusTheta;
        return propagator_pmf(t, plus, params, opts) + propagator_pmf(t, minus, params, opts);
    }
    if (structurally_zero(t, query)) return 0.0;

    const double pj = params.p_jump;
    const double pl = params.p_lazy;
    const std::int64_t d = query.n - query.n0;

    // delta and oscillation cases in the time domain, no inversion needed
    if (pl == 0.0 || (pj == 0.0 && is_plus(query.tag0))) {
        const bool from_minus_at_start = !is_plus(query.tag0) && !is_plus(query.tag);
        if (from_minus_at_start) return (t == 0 && d == 0) ? 1.0 : 0.0;
        if (!is_plus(query.tag)) return 0.0;
        return (d == t && (is_plus(query.tag0) || t >= 1)) ? 1.0 : 0.0;
    }
    if (pj * pl == 1.0) {
        const bool even = (t % 2 == 0);
        if (is_plus(query.tag0)) {
            if (is_plus(query.tag) && d == 0) return even ? 1.0 : 0.0;
            if (!is_plus(query.tag) && d == -1) return even ? 0.0 : 1.0;
        } else {
            if (!is_plus(query.tag) && d == 0) return even ? 1.0 : 0.0;
            if (is_plus(query.tag) && d == 1) return even ? 0.0 : 1.0;
        }
        return 0.0;
    }

    const SeriesGF gf = [&query, &params](Complex u) {
        return propagator_gf(query, u, params);
    };
    const double value = invert_series(gf, t, opts);
    return value < kNoiseFloor ? 0.0 : value;
}

DistTable pmf_table(std::int64_t t, std::int64_t n0, QubitTag tag0, const EngineParams& params,
                    const InversionOptions& opts) {
    if (t < 0) throw DomainError("t must be >= 0");
    DistTable table;
    table.support_offset = n0 - t;
    table.masses.resize(static_cast<std::size_t>(2 * t + 1), 0.0);
    PropagatorQuery q;
    q.n0 = n0;
    q.tag0 = tag0;
    q.marginal_over_tag = true;
    double total = 0.0;
    for (std::int64_t n = n0 - t; n <= n0 + t; ++n) {
        q.n = n;
        const double mass = propagator_pmf(t, q, params, opts);
        table.masses[static_cast<std::size_t>(n - table.support_offset)] = mass;
        total += mass;
    }
    table.total_mass = total;
    table.censored_mass = 0.0;
    if (std::abs(total - 1.0) > kNormalizationTol) {
        throw IntegrityError("propagator table at t = " + std::to_string(t) + " sums to " +
                             std::to_string(total));
    }
    return table;
}

}  // namespace lqme
