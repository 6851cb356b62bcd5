#include "lqme/moments.hpp"

#include <cmath>
#include <string>

namespace lqme {

namespace {

// base^e for possibly negative base and large e, in log space with sign
// tracking; underflow flushes to 0.
double pow_signed(double base, std::int64_t e) {
    if (e == 0) return 1.0;
    if (base == 0.0) return 0.0;
    if (base == 1.0) return 1.0;
    if (base == -1.0) return (e % 2 == 0) ? 1.0 : -1.0;
    const double mag = std::exp(static_cast<double>(e) * std::log(std::abs(base)));
    const bool negative = base < 0.0 && (e % 2 != 0);
    return negative ? -mag : mag;
}

// (1-2 p_j)^(t+1) * p_l^(t+1)
double decay_factor(double pj, double pl, std::int64_t t) {
    return pow_signed((1.0 - 2.0 * pj) * pl, t + 1);
}

}  // namespace

double mean_n(std::int64_t t, const EngineParams& params) {
    if (t < 0) throw DomainError("t must be >= 0");
    const double pj = params.p_jump;
    const double pl = params.p_lazy;
    const double n0 = static_cast<double>(params.n0);
    const double td = static_cast<double>(t);

    if (pl == 0.0 || pj == 0.0) return n0 + td;  // ballistic
    if (pl == 1.0) {
        return n0 - 1.0 + (1.0 - pow_signed(1.0 - 2.0 * pj, t + 1)) / (2.0 * pj);
    }
    const double d = 1.0 - pl + 2.0 * pj * pl;
    return n0 - 1.0 + (1.0 - pl) * (td + 1.0) / d +
           2.0 * pj * pl * (1.0 - decay_factor(pj, pl, t)) / (d * d);
}

double second_moment_n(std::int64_t t, const EngineParams& params) {
    if (t < 0) throw DomainError("t must be >= 0");
    const double pj = params.p_jump;
    const double pl = params.p_lazy;
    const double n0 = static_cast<double>(params.n0);
    const double td = static_cast<double>(t);

    if (pl == 0.0 || pj == 0.0) {
        return (n0 + td) * (n0 + td);
    }
    if (pl == 1.0) {
        const double g = pow_signed(1.0 - 2.0 * pj, t + 1);
        return (n0 - 1.0) * (n0 - 1.0) + (1.0 - pj) * (td + 1.0) / pj +
               (1.0 - 2.0 * pj * n0) * (g - 1.0) / (2.0 * pj * pj);
    }
    const double d = 1.0 - pl + 2.0 * pj * pl;
    const double d2 = d * d;
    const double g = decay_factor(pj, pl, t);
    double out = (n0 - 1.0) * (n0 - 1.0);
    out += 2.0 * n0 * (1.0 - pl) * (td + 1.0) / d;
    out += (1.0 - pl) * (1.0 - pl) * (td + 1.0) * (td + 2.0) / d2;
    out += 4.0 * pj * (1.0 - pl) * g * pl * (td + 1.0) / (d2 * d);
    out -= (td + 1.0) * (3.0 - 3.0 * pl + 2.0 * pj * pl) *
           (1.0 - 2.0 * pl + (1.0 - 2.0 * pj) * (1.0 - 2.0 * pj) * pl * pl) / (d2 * d);
    out += 4.0 * pj * pl *
           (n0 * d2 + 2.0 * pl * (pj + pl - 2.0 * pj * pl) - 2.0) * (1.0 - g) / (d2 * d2);
    return out;
}

double msd(std::int64_t t, const EngineParams& params) {
    if (t < 0) throw DomainError("t must be >= 0");
    const double pj = params.p_jump;
    const double pl = params.p_lazy;
    const double td = static_cast<double>(t);

    if (pl == 0.0 || pj == 0.0) return td * td;
    if (pl == 1.0) {
        const double g = pow_signed(1.0 - 2.0 * pj, t + 1);
        return 1.0 + (g - 1.0) / (2.0 * pj * pj) + (td + 1.0) * (1.0 - pj) / pj;
    }
    const double d = 1.0 - pl + 2.0 * pj * pl;
    const double g = decay_factor(pj, pl, t);
    const double q = 1.0 - pl;
    double bracket = q * q * q * q * (td * td - 1.0);
    bracket += 4.0 * pj * (td + 1.0) * pl *
               (q * q * (q * (td - 3.0) + 3.0) + pj * pl * q * (q * (td - 10.0) + 8.0) -
                4.0 * pj * pj * pj * pl * pl * pl - 4.0 * pj * pj * (2.0 - 3.0 * pl) * pl * pl);
    bracket -= 4.0 * pj * pl *
               (2.0 * ((2.0 * pj - 1.0) * q * q - (3.0 * pj - 2.0) * q + pj) * (1.0 - g) -
                q * (td + 1.0) * d * g);
    return 1.0 + bracket / (d * d * d * d);
}

double anomalous_alpha(std::int64_t t, const EngineParams& params) {
    if (t < 2) throw DomainError("anomalous exponent defined for t >= 2");
    const double m = msd(t, params);
    if (m <= 0.0) throw DomainError("anomalous exponent undefined at msd = 0");
    return std::log(m) / std::log(static_cast<double>(t));
}

MomentReport moment_report(std::int64_t t, const EngineParams& params) {
    MomentReport r;
    r.t = t;
    r.mean_n = mean_n(t, params);
    r.second_moment = second_moment_n(t, params);
    r.variance = r.second_moment - r.mean_n * r.mean_n;
    if (r.variance < 0.0) r.variance = 0.0;  // fp cancellation guard
    r.msd = msd(t, params);
    if (t >= 2 && r.msd > 0.0) r.alpha = anomalous_alpha(t, params);
    return r;
}

}  // namespace lqme
