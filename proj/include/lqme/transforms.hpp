#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "lqme/core.hpp"

namespace lqme {

using Complex = std::complex<double>;

// Generating-function handle: maps u inside the unit disk to a complex value.
// Handles must be callable concurrently (no internal mutable state).
using SeriesGF = std::function<Complex(Complex)>;

// Both roots of z^2 - z*[1+(1-2 p_j) p_l u^2]/[u(1-p_j p_l)] + chi = 0.
// z_plus carries the +sqrt branch of the discriminant, z_minus the -sqrt.
struct RootPair {
    Complex z_plus;
    Complex z_minus;
    double product_chi = 0.0;  // expected product of the roots
    Complex at_u;              // evaluation point

    Complex inner() const;  // smaller-modulus root; throws TieBreakError on a tie
    Complex outer() const;
};

struct InversionOptions {
    double target_digits = 10.0;             // gamma: aliasing error ~ 10^-gamma
    std::int64_t max_terms = 1'000'000;      // cap on the coefficient index t
    std::optional<double> radius_override;   // sampling radius in (0,1)

    // Called with a message when the estimated aliasing bound exceeds
    // 10^(-gamma/2). Null by default.
    std::function<void(const std::string&)> on_warning;
};

// Numerically stable solve: the larger-magnitude root from the closed form,
// the other as chi divided by it. Throws SpecialCaseError when p_j p_l = 1 or
// (1-p_j) p_l = 0, SingularityError at u = 0.
RootPair quadratic_roots(Complex u, double p_jump, double p_lazy);

// The root inside the unit disk (|z+ z-| = chi <= 1, so exactly one root lies
// inside for |u| < 1 in the generic case).
Complex inner_root(Complex u, double p_jump, double p_lazy);

// t-th power-series coefficient of gf by sampling 2t points on a circle of
// radius rho = 10^(-gamma/(2t)) with alternating signs (the standard
// probability-generating-function inversion). Coefficients are assumed real
// and in [0,1]; overshoot below 1e-8 is clamped, larger violations throw
// IntegrityError. TieBreakError from gf triggers up to 3 retries with the
// radius shrunk by 0.99.
double invert_series(const SeriesGF& gf, std::int64_t t, const InversionOptions& opts = {});

}  // namespace lqme
