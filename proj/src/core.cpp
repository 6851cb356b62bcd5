#include "lqme/core.hpp"

#include <cmath>

namespace lqme {

double validate_probability(double p, const char* name) {
    if (!std::isfinite(p)) {
        throw DomainError(std::string(name) + " is not finite");
    }
    if (p < -kProbabilityTol || p > 1.0 + kProbabilityTol) {
        throw DomainError(std::string(name) + " = " + std::to_string(p) + " outside [0,1]");
    }
    if (p < 0.0) return 0.0;
    if (p > 1.0) return 1.0;
    return p;
}

namespace {

double validate_angle(double theta) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > std::acos(-1.0)) {
        throw DomainError("theta = " + std::to_string(theta) + " outside [0, pi]");
    }
    return theta;
}

}  // namespace

double jump_probability(double theta) {
    validate_angle(theta);
    const double s = std::sin(theta / 2.0);
    return s * s;
}

double work_quantum(double theta) {
    validate_angle(theta);
    return std::sin(theta);
}

double chi(double p_jump, double p_lazy) {
    const double pj = validate_probability(p_jump, "p_jump");
    const double pl = validate_probability(p_lazy, "p_lazy");
    const double denom = 1.0 - pj * pl;
    if (denom == 0.0) {
        throw SpecialCaseError("chi undefined at p_jump*p_lazy = 1 (oscillating case)");
    }
    return (1.0 - pj) * pl / denom;
}

double shannon_binary(double p) {
    const double q = validate_probability(p, "p");
    if (q == 0.0 || q == 1.0) return 0.0;
    return -q * std::log(q) - (1.0 - q) * std::log(1.0 - q);
}

EngineParams EngineParams::from_theta(double theta, double p_lazy, double ratio_r,
                                      double coupling_omega, std::int64_t n0) {
    const double pi = std::acos(-1.0);
    if (!std::isfinite(theta) || theta <= 0.0 || theta >= pi) {
        throw DomainError("theta = " + std::to_string(theta) + " outside (0, pi)");
    }
    EngineParams p;
    p.theta = theta;
    p.p_jump = jump_probability(theta);
    p.p_lazy = validate_probability(p_lazy, "p_lazy");
    p.ratio_r = ratio_r;
    p.coupling_omega = coupling_omega;
    p.n0 = n0;
    p.validate();
    return p;
}

EngineParams EngineParams::from_jump_probability(double p_jump, double p_lazy, double ratio_r,
                                                 double coupling_omega, std::int64_t n0) {
    EngineParams p;
    p.p_jump = validate_probability(p_jump, "p_jump");
    p.theta = 2.0 * std::asin(std::sqrt(p.p_jump));
    p.p_lazy = validate_probability(p_lazy, "p_lazy");
    p.ratio_r = ratio_r;
    p.coupling_omega = coupling_omega;
    p.n0 = n0;
    p.validate();
    return p;
}

void EngineParams::validate() const {
    validate_probability(p_jump, "p_jump");
    validate_probability(p_lazy, "p_lazy");
    if (theta < 0.0 || theta > std::acos(-1.0) || !std::isfinite(theta)) {
        throw DomainError("theta outside [0, pi]");
    }
    const double derived = jump_probability(theta);
    if (std::abs(derived - p_jump) > kProbabilityTol) {
        throw DomainError("p_jump inconsistent with theta: sin^2(theta/2) = " +
                          std::to_string(derived) + ", p_jump = " + std::to_string(p_jump));
    }
    if (!(ratio_r > 0.0) || !std::isfinite(ratio_r)) {
        throw DomainError("ratio_r must be > 0");
    }
    if (!(coupling_omega > 0.0) || !std::isfinite(coupling_omega)) {
        throw DomainError("coupling_omega must be > 0");
    }
}

}  // namespace lqme
