#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lqme/core.hpp"

using namespace lqme;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("jump probability") {
    CHECK(jump_probability(0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(jump_probability(kPi / 2.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(jump_probability(kPi / 3.0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK_THROWS_AS(jump_probability(-0.1), DomainError);
    CHECK_THROWS_AS(jump_probability(kPi + 0.1), DomainError);
}

TEST_CASE("jump probability matches the half-angle identity") {
    for (int i = 0; i <= 200; ++i) {
        const double theta = kPi * i / 200.0;
        CHECK(jump_probability(theta) ==
              doctest::Approx((1.0 - std::cos(theta)) / 2.0).epsilon(1e-12));
    }
}

TEST_CASE("work quantum") {
    CHECK(work_quantum(kPi / 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(work_quantum(0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(work_quantum(kPi / 3.0) == doctest::Approx(0.8660254).epsilon(1e-7));
    CHECK_THROWS_AS(work_quantum(3.5), DomainError);
}

TEST_CASE("chi values and guards") {
    CHECK(chi(0.7, 0.0) == 0.0);
    CHECK(chi(0.7, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(chi(0.25, 0.5) == doctest::Approx(0.4285714285714286).epsilon(1e-12));
    CHECK_THROWS_AS(chi(1.0, 1.0), SpecialCaseError);
}

TEST_CASE("chi is monotone nondecreasing in p_lazy") {
    for (double pj : {0.0, 0.2, 0.5, 0.9}) {
        double prev = -1.0;
        for (int i = 0; i <= 50; ++i) {
            const double pl = i / 50.0;
            const double value = chi(pj, pl);
            CHECK(value >= prev);
            CHECK(value >= 0.0);
            CHECK(value <= 1.0);
            prev = value;
        }
    }
}

TEST_CASE("binary entropy") {
    CHECK(shannon_binary(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(shannon_binary(0.0) == 0.0);
    CHECK(shannon_binary(1.0) == 0.0);
    CHECK(shannon_binary(0.25) == doctest::Approx(0.5623351).epsilon(1e-7));
    for (int i = 0; i <= 100; ++i) {
        const double p = i / 100.0;
        CHECK(shannon_binary(p) == doctest::Approx(shannon_binary(1.0 - p)).epsilon(1e-12));
    }
}

TEST_CASE("tumble-rate identity 1 - p_l + 2 p_j p_l = 1 - p_l cos(theta)") {
    for (int i = 1; i < 100; ++i) {
        const double theta = kPi * i / 100.0;
        const double pj = jump_probability(theta);
        for (double pl : {0.0, 0.3, 0.7, 1.0}) {
            const double lhs = 1.0 - pl + 2.0 * pj * pl;
            const double rhs = 1.0 - pl * std::cos(theta);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("probability validation clamps a 1e-12 boundary band") {
    CHECK(validate_probability(-0.5e-12, "p") == 0.0);
    CHECK(validate_probability(1.0 + 0.5e-12, "p") == 1.0);
    CHECK_THROWS_AS(validate_probability(-1e-9, "p"), DomainError);
    CHECK_THROWS_AS(validate_probability(1.0 + 1e-9, "p"), DomainError);
}

TEST_CASE("engine params construction and consistency") {
    const EngineParams p = EngineParams::from_theta(kPi / 3.0, 0.5);
    CHECK(p.p_jump == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(p.work_quantum() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));

    const EngineParams q = EngineParams::from_jump_probability(0.25, 0.5);
    CHECK(q.theta == doctest::Approx(kPi / 3.0).epsilon(1e-12));
    q.validate();

    // boundary jump probabilities are allowed on the abstract walk
    EngineParams::from_jump_probability(0.0, 0.5).validate();
    EngineParams::from_jump_probability(1.0, 1.0).validate();

    CHECK_THROWS_AS(EngineParams::from_theta(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(EngineParams::from_theta(kPi, 0.5), DomainError);
    CHECK_THROWS_AS(EngineParams::from_jump_probability(1.5, 0.5), DomainError);
    CHECK_THROWS_AS(EngineParams::from_jump_probability(0.5, -0.2), DomainError);

    EngineParams bad = p;
    bad.p_jump = 0.3;  // inconsistent with theta
    CHECK_THROWS_AS(bad.validate(), DomainError);

    EngineParams bad_r = p;
    bad_r.ratio_r = 0.0;
    CHECK_THROWS_AS(bad_r.validate(), DomainError);
}
