#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lqme {

// Unit conventions used throughout: hbar = k_B = 1 internally. Work indices
// count quanta of W_theta = sin(theta) in units of (hbar*omega0)/2; energetic
// quantities (information cost, power brackets) are in units of k_B*T; power
// is in units of Omega*k_B*T. The only dimensionful knob is ratio_r =
// hbar*omega0 / (k_B*T).
enum class EnergyUnit { HalfHbarOmega, KBT };

struct UnitConvention {
    EnergyUnit energy_unit;
    std::string note;
};

inline UnitConvention default_units() {
    return {EnergyUnit::HalfHbarOmega,
            "hbar = k_B = 1; work quanta in hbar*omega0/2, energetics in k_B*T, "
            "power in Omega*k_B*T; conversions use only ratio_r"};
}

// Qubit tag at the end of a cycle: +theta after an up (work-extracting) step,
// -theta after a down step.
enum class QubitTag : std::uint8_t { PlusTheta, MinusTheta };

inline const char* to_string(QubitTag tag) {
    return tag == QubitTag::PlusTheta ? "+theta" : "-theta";
}

// One point of the run-and-tumble phase space: work index and final tag.
struct EngineState {
    std::int64_t n = 0;
    QubitTag tag = QubitTag::PlusTheta;

    friend bool operator==(const EngineState&, const EngineState&) = default;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Parameter combination needs one of the dedicated special-case paths.
struct SpecialCaseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |z+| == |z-| within tolerance; the caller must perturb the evaluation radius.
struct TieBreakError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed quantity violated an exactness guarantee (normalization, range).
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kProbabilityTol = 1e-12;

// Validates p in [0,1] with absolute tolerance 1e-12 at the boundaries;
// values inside the tolerance band are clamped onto the boundary.
double validate_probability(double p, const char* name);

// p_j = sin^2(theta/2), theta in [0, pi].
double jump_probability(double theta);

// W_theta = sin(theta) in units of hbar*omega0/2, theta in [0, pi].
double work_quantum(double theta);

// chi = (1-p_j) p_l / (1 - p_j p_l), the product of the propagator
// denominator roots. Rejects p_j p_l = 1 (oscillating special case).
double chi(double p_jump, double p_lazy);

// Binary Shannon entropy in nats; endpoints return exactly 0.
double shannon_binary(double p);

// Protocol and physics configuration. theta and p_jump are kept consistent:
// build from one and the other is derived; supplying both cross-checks them.
struct EngineParams {
    double theta = 0.0;           // radians
    double p_jump = 0.0;          // tumble probability from +theta
    double p_lazy = 0.0;          // probability to ignore the outcome
    double ratio_r = 1.0;         // hbar*omega0 / (k_B*T)
    double coupling_omega = 1.0;  // qubit-field coupling rate
    std::int64_t n0 = 0;          // initial work index

    static EngineParams from_theta(double theta, double p_lazy, double ratio_r = 1.0,
                                   double coupling_omega = 1.0, std::int64_t n0 = 0);

    // Abstract run-and-tumble entry point: p_jump set directly, theta derived
    // as 2*asin(sqrt(p_jump)) so the pair stays consistent.
    static EngineParams from_jump_probability(double p_jump, double p_lazy, double ratio_r = 1.0,
                                              double coupling_omega = 1.0, std::int64_t n0 = 0);

    void validate() const;

    double p_stay() const { return 1.0 - p_jump; }  // p_r
    double work_quantum() const { return lqme::work_quantum(theta); }
};

}  // namespace lqme
