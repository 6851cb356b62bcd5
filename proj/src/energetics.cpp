#include "lqme/energetics.hpp"

#include <cmath>

namespace lqme {

namespace {

const double kPi = std::acos(-1.0);

void validate_open_angle(double theta) {
    if (!std::isfinite(theta) || theta <= 0.0 || theta >= kPi) {
        throw DomainError("theta must lie in (0, pi)");
    }
}

void validate_ratio(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("ratio_r must be > 0");
}

template <typename F>
double golden_max(F f, double lo, double hi, double tol) {
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
    const double x = (a + b) / 2.0;
    return x;
}

double pow_signed(double base, std::int64_t e) {
    if (e == 0) return 1.0;
    if (base == 0.0) return 0.0;
    if (base == 1.0) return 1.0;
    if (base == -1.0) return (e % 2 == 0) ? 1.0 : -1.0;
    const double mag = std::exp(static_cast<double>(e) * std::log(std::abs(base)));
    return (base < 0.0 && e % 2 != 0) ? -mag : mag;
}

}  // namespace

double info_cost(double p_jump, double p_lazy) {
    const double pj = validate_probability(p_jump, "p_jump");
    const double pl = validate_probability(p_lazy, "p_lazy");
    return (1.0 - pl) * shannon_binary(pj);
}

double mean_work_increment(std::int64_t t, const EngineParams& params) {
    if (t < 1) throw DomainError("work increments start at cycle t = 1");
    const double pj = params.p_jump;
    const double pl = params.p_lazy;
    const double w = params.work_quantum();
    const double d = 1.0 - pl + 2.0 * pj * pl;
    if (d == 0.0) return w;  // p_j = 0, p_l = 1: deterministic up-steps
    const double g = pow_signed((1.0 - 2.0 * pj) * pl, t);
    return w * ((1.0 - pl) / d + 2.0 * pj * pl * g / d);
}

double mean_work_increment_ss(const EngineParams& params) {
    const double pj = params.p_jump;
    const double pl = params.p_lazy;
    const double w = params.work_quantum();
    const double d = 1.0 - pl + 2.0 * pj * pl;
    if (d == 0.0) return w;
    return w * (1.0 - pl) / d;
}

double power_ss(double theta, double p_lazy, double ratio_r) {
    validate_open_angle(theta);
    validate_ratio(ratio_r);
    const double pl = validate_probability(p_lazy, "p_lazy");
    const double pj = jump_probability(theta);
    const double bracket =
        (ratio_r / 2.0) * std::sin(theta) / (1.0 - pl * std::cos(theta)) - shannon_binary(pj);
    return (1.0 - pl) / theta * bracket;
}

PowerReport power_report(double theta, double p_lazy, double ratio_r) {
    validate_open_angle(theta);
    validate_ratio(ratio_r);
    const double pl = validate_probability(p_lazy, "p_lazy");
    const double pj = jump_probability(theta);
    PowerReport r;
    r.theta = theta;
    r.p_lazy = pl;
    r.ratio_r = ratio_r;
    r.gross_rate = (1.0 - pl) / theta * (ratio_r / 2.0) * std::sin(theta) /
                   (1.0 - pl * std::cos(theta));
    r.info_rate = (1.0 - pl) / theta * shannon_binary(pj);
    r.net_power = r.gross_rate - r.info_rate;
    return r;
}

OptimalLaziness optimal_laziness(double theta, double ratio_r) {
    validate_open_angle(theta);
    validate_ratio(ratio_r);
    auto net = [&](double pl) { return power_ss(theta, pl, ratio_r); };

    const double c = std::cos(theta);
    double best_pl;
    if (std::abs(c) < 1e-6) {
        // stationary-point formula is 0/0 at theta = pi/2
        best_pl = golden_max(net, 0.0, 1.0, 1e-9);
    } else {
        const double pj = jump_probability(theta);
        const double s_entropy = shannon_binary(pj);
        const double stationary =
            (1.0 - std::sqrt(ratio_r * std::sin(theta) * pj / s_entropy)) / c;
        best_pl = std::min(1.0, std::max(0.0, stationary));
    }
    // the stationary point can be a minimum or sit outside [0,1]; the argmax
    // over the closed interval is always among {p*, 0, 1}
    OptimalLaziness out{best_pl, net(best_pl)};
    for (double candidate : {0.0, 1.0}) {
        const double value = net(candidate);
        if (value > out.power) out = {candidate, value};
    }
    return out;
}

double critical_ratio() { return std::log(4.0); }

}  // namespace lqme
