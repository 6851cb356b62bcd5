#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "lqme/transforms.hpp"

using namespace lqme;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("roots at u = 1 are the unit root and chi") {
    const RootPair r = quadratic_roots(1.0, 0.25, 0.5);
    CHECK(std::abs(r.z_plus - Complex(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(r.z_minus - Complex(0.4285714285714286, 0.0)) < 1e-12);
}

TEST_CASE("roots at u = 0.9, p_j = 0.25, p_l = 0.5") {
    const RootPair r = quadratic_roots(0.9, 0.25, 0.5);
    CHECK(r.z_plus.real() == doctest::Approx(1.1563644377).epsilon(1e-9));
    CHECK(r.z_minus.real() == doctest::Approx(0.3706196892).epsilon(1e-9));
    CHECK(std::abs(r.z_plus * r.z_minus - Complex(r.product_chi, 0.0)) < 1e-12);
    CHECK(r.inner().real() == doctest::Approx(0.3706196892).epsilon(1e-9));
}

TEST_CASE("degenerate pair at u = 1, p_l = 1") {
    const RootPair r = quadratic_roots(1.0, 0.3, 1.0);
    CHECK(std::abs(r.z_plus - Complex(1.0, 0.0)) < 1e-10);
    CHECK(std::abs(r.z_minus - Complex(1.0, 0.0)) < 1e-10);
    CHECK_THROWS_AS(r.inner(), TieBreakError);
}

TEST_CASE("special-case and singularity guards") {
    CHECK_THROWS_AS(quadratic_roots(0.5, 1.0, 1.0), SpecialCaseError);
    CHECK_THROWS_AS(quadratic_roots(0.5, 0.3, 0.0), SpecialCaseError);
    CHECK_THROWS_AS(quadratic_roots(0.5, 1.0, 0.7), SpecialCaseError);
    CHECK_THROWS_AS(quadratic_roots(Complex(0.0, 0.0), 0.3, 0.5), SingularityError);
}

TEST_CASE("Vieta identities hold on a random sample of the disk") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> radius(0.05, 0.99);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> prob(0.01, 0.99);
    for (int i = 0; i < 500; ++i) {
        const double pj = prob(gen);
        const double pl = prob(gen);
        const Complex u = std::polar(radius(gen), angle(gen));
        const RootPair r = quadratic_roots(u, pj, pl);
        const Complex sum_expected =
            (1.0 + (1.0 - 2.0 * pj) * pl * u * u) / (u * (1.0 - pj * pl));
        const Complex prod = r.z_plus * r.z_minus;
        const Complex sum = r.z_plus + r.z_minus;
        CHECK(std::abs(prod - Complex(r.product_chi, 0.0)) <= 1e-10 * std::abs(prod) + 1e-14);
        CHECK(std::abs(sum - sum_expected) <= 1e-10 * std::abs(sum_expected));
    }
}

TEST_CASE("real u in (0,1) gives real ordered roots around the unit circle") {
    for (double pj : {0.05, 0.3, 0.45}) {
        for (double pl : {0.2, 0.6, 0.95}) {
            for (double u = 0.05; u < 1.0; u += 0.05) {
                const RootPair r = quadratic_roots(u, pj, pl);
                CHECK(std::abs(r.z_plus.imag()) < 1e-12);
                CHECK(std::abs(r.z_minus.imag()) < 1e-12);
                CHECK(r.z_minus.real() > 0.0);
                CHECK(r.z_minus.real() < 1.0);
                CHECK(r.z_plus.real() > 1.0);
            }
        }
    }
}

TEST_CASE("inner root approaches chi as u -> 1-") {
    const double expected_chi = 0.4285714285714286;
    CHECK(std::abs(inner_root(1.0 - 1e-8, 0.25, 0.5) - Complex(expected_chi, 0.0)) < 1e-6);
}

TEST_CASE("inversion of closed-form series") {
    const SeriesGF geometric = [](Complex u) { return 1.0 / (1.0 - u); };
    const SeriesGF squared = [](Complex u) { return 1.0 / ((1.0 - u) * (1.0 - u)); };
    const SeriesGF cube_monomial = [](Complex u) { return u * u * u; };

    for (std::int64_t t : {0, 1, 2, 5, 17, 60}) {
        CHECK(invert_series(geometric, t) == doctest::Approx(1.0).epsilon(1e-8));
    }
    CHECK(invert_series(cube_monomial, 3) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(invert_series(cube_monomial, 2) == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(invert_series(cube_monomial, 7) == doctest::Approx(0.0).epsilon(1e-8));

    // (1-u)^-2 has coefficients t+1; rescale into [0,1] by a factor 1/64
    const SeriesGF scaled = [&](Complex u) { return squared(u) / 64.0; };
    for (std::int64_t t : {0, 1, 5, 20, 63}) {
        CHECK(invert_series(scaled, t) ==
              doctest::Approx((static_cast<double>(t) + 1.0) / 64.0).epsilon(1e-8));
    }
}

TEST_CASE("ballistic first-passage series is a pure delta") {
    // gf(u) = u^4: the p_l = 0 first-passage generating function at span 4
    const SeriesGF gf = [](Complex u) { return u * u * u * u; };
    for (std::int64_t t = 0; t <= 10; ++t) {
        const double expected = t == 4 ? 1.0 : 0.0;
        CHECK(invert_series(gf, t) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("round trip through an empirical generating function") {
    // arbitrary normalized table on offsets 0..5
    const std::vector<double> masses = {0.05, 0.2, 0.35, 0.25, 0.1, 0.05};
    const SeriesGF gf = [&](Complex u) {
        Complex acc(0.0, 0.0);
        Complex power(1.0, 0.0);
        for (double m : masses) {
            acc += m * power;
            power *= u;
        }
        return acc;
    };
    for (std::size_t t = 0; t < masses.size(); ++t) {
        CHECK(invert_series(gf, static_cast<std::int64_t>(t)) ==
              doctest::Approx(masses[t]).epsilon(1e-8));
    }
}

TEST_CASE("tie-break retries shrink the radius up to three times") {
    const double rho0 = std::pow(10.0, -10.0 / (2.0 * 12.0));

    // refuses the first two radii, then behaves like the geometric series
    const SeriesGF needs_two = [&](Complex u) -> Complex {
        if (std::abs(u) > rho0 * 0.99 * 0.99 * 1.0000001) throw TieBreakError("tie");
        return 1.0 / (1.0 - u);
    };
    CHECK(invert_series(needs_two, 12) == doctest::Approx(1.0).epsilon(1e-7));

    const SeriesGF always_ties = [](Complex) -> Complex { throw TieBreakError("tie"); };
    CHECK_THROWS_AS(invert_series(always_ties, 12), TieBreakError);
}

TEST_CASE("range violations beyond the clamp threshold are errors") {
    const SeriesGF too_big = [](Complex) { return Complex(2.0, 0.0); };
    CHECK_THROWS_AS(invert_series(too_big, 0), IntegrityError);
    const SeriesGF slightly_negative = [](Complex) { return Complex(-5e-9, 0.0); };
    CHECK(invert_series(slightly_negative, 0) == 0.0);
    const SeriesGF slightly_above = [](Complex) { return Complex(1.0 + 5e-9, 0.0); };
    CHECK(invert_series(slightly_above, 0) == 1.0);
}

TEST_CASE("aliasing warning fires for a forced wide radius") {
    std::atomic<int> warnings{0};
    InversionOptions opts;
    opts.radius_override = 0.9;  // estimated bound ~ 0.9^(2t), far above 1e-5
    opts.on_warning = [&warnings](const std::string&) { ++warnings; };
    const SeriesGF cube_monomial = [](Complex u) { return u * u * u; };
    CHECK(invert_series(cube_monomial, 3, opts) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(warnings.load() >= 1);
}

TEST_CASE("coefficient index cap") {
    InversionOptions opts;
    opts.max_terms = 10;
    const SeriesGF geometric = [](Complex u) { return 1.0 / (1.0 - u); };
    CHECK_THROWS_AS(invert_series(geometric, 11, opts), DomainError);
}
