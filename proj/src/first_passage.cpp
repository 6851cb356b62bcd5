#include "lqme/first_passage.hpp"

#include <cmath>
#include <string>

namespace lqme {

namespace {

Complex cpow_int(Complex base, std::int64_t e) {
    Complex acc(1.0, 0.0);
    Complex b = base;
    for (std::int64_t k = e; k > 0; k >>= 1) {
        if (k & 1) acc *= b;
        b *= b;
    }
    return acc;
}

}  // namespace

void FptQuery::validate() const {
    params.validate();
    if (n_target <= n0) {
        throw DomainError("first-passage threshold requires n_target > n0");
    }
    if (t_cap < 1) throw DomainError("t_cap must be >= 1");
}

Complex fpt_gf(Complex u, const FptQuery& query) {
    query.validate();
    const double pj = query.params.p_jump;
    const double pl = query.params.p_lazy;
    const std::int64_t span = query.span();

    if (u == Complex(0.0, 0.0)) return 0.0;  // span >= 1, so F_0 = 0
    if (pl == 0.0) return cpow_int(u, span);
    if (pj * pl == 1.0) return 0.0;  // oscillates below the threshold forever
    if ((1.0 - pj) * pl == 0.0) {
        // p_j = 1, 0 < p_l < 1: every unit climbed is either a direct up-step
        // or a down-up excursion, giving u(1-p_l)/(1-p_l u^2) per unit
        return cpow_int(u * (1.0 - pl) / (1.0 - pl * u * u), span);
    }
    if (u == Complex(1.0, 0.0)) return 1.0;  // roots are exactly {1, chi} there

    const RootPair roots = quadratic_roots(u, pj, pl);
    return cpow_int(roots.inner() / roots.product_chi, span);
}

double fpt_pmf(std::int64_t T, const FptQuery& query, const InversionOptions& opts) {
    query.validate();
    if (T < 0) throw DomainError("T must be >= 0");
    const std::int64_t span = query.span();
    if (T < span) return 0.0;                 // needs at least span up-steps
    if ((T - span) % 2 != 0) return 0.0;      // every down-step is repaid
    if (query.params.p_lazy == 0.0) return T == span ? 1.0 : 0.0;
    if (query.params.p_jump * query.params.p_lazy == 1.0) return 0.0;

    const SeriesGF gf = [&query](Complex u) { return fpt_gf(u, query); };
    return invert_series(gf, T, opts);
}

DistTable fpt_pmf_table(const FptQuery& query, const InversionOptions& opts) {
    query.validate();
    DistTable table;
    table.support_offset = 0;
    table.masses.resize(static_cast<std::size_t>(query.t_cap + 1), 0.0);
    double total = 0.0;
    for (std::int64_t T = 0; T <= query.t_cap; ++T) {
        const double f = fpt_pmf(T, query, opts);
        table.masses[static_cast<std::size_t>(T)] = f;
        total += f;
    }
    table.total_mass = total;
    table.censored_mass = 1.0 - total;
    table.validate();
    return table;
}

std::optional<double> mfpt(const FptQuery& query) {
    query.validate();
    const double pl = query.params.p_lazy;
    if (pl == 1.0) return std::nullopt;
    const double pj = query.params.p_jump;
    const double span = static_cast<double>(query.span());
    return span * (1.0 - pl + 2.0 * pj * pl) / (1.0 - pl);
}

std::optional<double> fpt_second_moment(const FptQuery& query) {
    query.validate();
    const double pl = query.params.p_lazy;
    if (pl == 1.0) return std::nullopt;
    const double pj = query.params.p_jump;
    const double span = static_cast<double>(query.span());
    const double q = 1.0 - pl;
    return span * span + 4.0 * pj * span * pl * (1.0 - pl + pj * pl) *
                             ((span - 1.0) * q - 2.0 * pj * pl + 2.0) / (q * q * q);
}

std::optional<double> fpt_snr(const FptQuery& query) {
    query.validate();
    const double pj = query.params.p_jump;
    const double pl = query.params.p_lazy;
    if (pj * pl == 0.0) return std::nullopt;  // zero-variance stopping: SNR diverges
    if (pl == 1.0) return std::nullopt;       // moments diverge
    const double span = static_cast<double>(query.span());
    const double num = span * (1.0 - pl) * (1.0 - pl + 2.0 * pj * pl) * (1.0 - pl + 2.0 * pj * pl);
    const double den =
        4.0 * pj * pl * (1.0 - pl + pj * pl) * (1.0 + pl - 2.0 * pj * pl);
    return num / den;
}

FptSummary fpt_summary(const FptQuery& query) {
    FptSummary s;
    s.mean = mfpt(query);
    s.second_moment = fpt_second_moment(query);
    s.snr = fpt_snr(query);
    s.analytic = true;
    return s;
}

std::optional<double> waiting_time_pmf(std::int64_t k, QubitTag from_tag,
                                       const EngineParams& params) {
    if (k < 0) throw DomainError("dwell length must be >= 0");
    const double stay = from_tag == QubitTag::PlusTheta
                            ? 1.0 - params.p_jump * params.p_lazy
                            : (1.0 - params.p_jump) * params.p_lazy;
    if (stay == 1.0) return std::nullopt;  // the dwell never ends
    return std::pow(stay, static_cast<double>(k)) * (1.0 - stay);
}

}  // namespace lqme
