#include "ptbath/otto.hpp"

#include <cmath>

namespace ptbath {

namespace {

// coth(x) for x > 0; the expm1 form stays accurate for large x where
// cosh/sinh would overflow or cancel.
double coth(double x) { return 1.0 + 2.0 / std::expm1(2.0 * x); }

}  // namespace

double OttoCycleSpec::effective_beta_hot() const {
    return std::sqrt(1.0 + 4.0 * epsilon * epsilon) * beta_hot;
}

OttoCycleResult stroke_energies(const OttoCycleSpec& spec) {
    // Tr[sigma] = 2 coth(beta omega / 2) for a thermal state at (beta, omega).
    const double coth_cold = coth(spec.omega_i * spec.beta_cold / 2.0);
    const double coth_hot = coth(spec.omega_f * spec.effective_beta_hot() / 2.0);

    // Evaluate the coth difference once; forming w_net as w1 + w3 would lose
    // the exact cancellation of the shared factor near the regime boundary.
    const double diff = coth_hot - coth_cold;

    OttoCycleResult r;
    r.w1 = (spec.omega_f - spec.omega_i) * coth_cold / 2.0;
    r.w3 = -(spec.omega_f - spec.omega_i) * coth_hot / 2.0;
    r.w_net = -(spec.omega_f - spec.omega_i) * diff / 2.0;
    r.q2 = spec.omega_f * diff / 2.0;
    r.q4 = -spec.omega_i * diff / 2.0;
    r.regime = classify_regime(r);
    if (r.regime == CycleRegime::Engine)
        r.figure_of_merit = -r.w_net / r.q2;
    else if (r.regime == CycleRegime::Refrigerator)
        r.figure_of_merit = r.q4 / r.w_net;
    return r;
}

CycleRegime classify_regime(const OttoCycleResult& result) {
    if (result.w_net < 0.0 && result.q2 > 0.0 && result.q4 < 0.0)
        return CycleRegime::Engine;
    if (result.w_net > 0.0 && result.q2 < 0.0 && result.q4 > 0.0)
        return CycleRegime::Refrigerator;
    return CycleRegime::Other;
}

double performance(const OttoCycleResult& result) {
    switch (result.regime) {
        case CycleRegime::Engine:
            return -result.w_net / result.q2;
        case CycleRegime::Refrigerator:
            return result.q4 / result.w_net;
        case CycleRegime::Other:
            break;
    }
    throw std::domain_error("performance: undefined outside engine/refrigerator");
}

std::optional<double> critical_epsilon(const OttoCycleSpec& spec) {
    const double cold = spec.omega_i * spec.beta_cold;
    const double hot = spec.omega_f * spec.beta_hot;
    if (cold < hot) return std::nullopt;
    return std::sqrt(cold * cold - hot * hot) / (2.0 * hot);
}

std::vector<OttoCycleResult> sweep_epsilon(const OttoCycleSpec& base,
                                           const std::vector<double>& eps_grid) {
    std::vector<OttoCycleResult> results;
    results.reserve(eps_grid.size());
    double prev = -1.0;
    for (double eps : eps_grid) {
        if (!(eps >= 0.0) || eps <= prev)
            throw std::invalid_argument(
                "sweep_epsilon: grid must be nonnegative and strictly increasing");
        prev = eps;
        results.push_back(stroke_energies(
            {base.omega_i, base.omega_f, base.beta_cold, base.beta_hot, eps}));
    }
    return results;
}

}  // namespace ptbath
