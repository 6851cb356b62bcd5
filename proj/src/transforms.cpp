#include "lqme/transforms.hpp"

#include <cmath>

namespace lqme {

namespace {

constexpr double kTieTol = 1e-12;
const double kPi = std::acos(-1.0);

}  // namespace

Complex RootPair::inner() const {
    const double ap = std::abs(z_plus);
    const double am = std::abs(z_minus);
    if (std::abs(ap - am) <= kTieTol * std::max(ap, am)) {
        throw TieBreakError("|z+| and |z-| tie at u = (" + std::to_string(at_u.real()) + ", " +
                            std::to_string(at_u.imag()) + ")");
    }
    return ap < am ? z_plus : z_minus;
}

Complex RootPair::outer() const {
    const double ap = std::abs(z_plus);
    const double am = std::abs(z_minus);
    if (std::abs(ap - am) <= kTieTol * std::max(ap, am)) {
        throw TieBreakError("|z+| and |z-| tie");
    }
    return ap > am ? z_plus : z_minus;
}

RootPair quadratic_roots(Complex u, double p_jump, double p_lazy) {
    const double pj = validate_probability(p_jump, "p_jump");
    const double pl = validate_probability(p_lazy, "p_lazy");
    if (pj * pl == 1.0) {
        throw SpecialCaseError("roots undefined at p_jump*p_lazy = 1");
    }
    if ((1.0 - pj) * pl == 0.0) {
        throw SpecialCaseError("roots degenerate at (1-p_jump)*p_lazy = 0");
    }
    if (u == Complex(0.0, 0.0)) {
        throw SingularityError("root formula singular at u = 0");
    }
    const double x = chi(pj, pl);
    // half-sum of the roots
    const Complex q = (1.0 + (1.0 - 2.0 * pj) * pl * u * u) / (2.0 * u * (1.0 - pj * pl));
    const Complex s = std::sqrt(q * q - x);
    RootPair out;
    out.product_chi = x;
    out.at_u = u;
    // take the larger-magnitude combination first to avoid cancellation
    if (std::abs(q + s) >= std::abs(q - s)) {
        out.z_plus = q + s;
        out.z_minus = x / out.z_plus;
    } else {
        out.z_minus = q - s;
        out.z_plus = x / out.z_minus;
    }
    return out;
}

Complex inner_root(Complex u, double p_jump, double p_lazy) {
    return quadratic_roots(u, p_jump, p_lazy).inner();
}

double invert_series(const SeriesGF& gf, std::int64_t t, const InversionOptions& opts) {
    if (t < 0) throw DomainError("coefficient index t must be >= 0");
    if (t > opts.max_terms) {
        throw DomainError("coefficient index t = " + std::to_string(t) + " exceeds max_terms");
    }

    auto finish = [&](double raw) {
        if (raw < 0.0) {
            if (raw < -1e-8) {
                throw IntegrityError("inverted coefficient " + std::to_string(raw) +
                                     " below 0 beyond clamping threshold");
            }
            return 0.0;
        }
        if (raw > 1.0) {
            if (raw > 1.0 + 1e-8) {
                throw IntegrityError("inverted coefficient " + std::to_string(raw) +
                                     " above 1 beyond clamping threshold");
            }
            return 1.0;
        }
        return raw;
    };

    if (t == 0) {
        return finish(gf(Complex(0.0, 0.0)).real());
    }

    const double gamma = opts.target_digits;
    if (!(gamma > 0.0)) throw DomainError("target_digits must be > 0");
    double rho = opts.radius_override ? *opts.radius_override
                                      : std::pow(10.0, -gamma / (2.0 * static_cast<double>(t)));
    if (!(rho > 0.0 && rho < 1.0)) throw DomainError("inversion radius outside (0,1)");

    const std::int64_t m = 2 * t;
    for (int attempt = 0;; ++attempt) {
        try {
            double sum = 0.0;
            for (std::int64_t k = 0; k < m; ++k) {
                const double phi = kPi * static_cast<double>(k) / static_cast<double>(t);
                const Complex uk = rho * Complex(std::cos(phi), std::sin(phi));
                const double term = gf(uk).real();
                sum += (k % 2 == 0) ? term : -term;
            }
            const double rho_t = std::pow(rho, static_cast<double>(t));
            const double value = sum / (2.0 * static_cast<double>(t)) / rho_t;

            const double rho_2t = rho_t * rho_t;
            const double aliasing = rho_2t / (1.0 - rho_2t);
            if (aliasing > std::pow(10.0, -gamma / 2.0) && opts.on_warning) {
                opts.on_warning("aliasing bound " + std::to_string(aliasing) +
                                " exceeds 10^(-gamma/2) at t = " + std::to_string(t));
            }
            return finish(value);
        } catch (const TieBreakError&) {
            if (attempt >= 3) throw;
            rho *= 0.99;  // branch points are measure-zero in u
        }
    }
}

}  // namespace lqme
