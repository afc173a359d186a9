#include "ptbath/thermalization.hpp"

#include <cmath>

namespace ptbath {

GaussianState evolve(const GaussianState& initial, const PTReservoirSpec& spec,
                     double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("evolve: t must be >= 0");
    const double decay = std::exp(-spec.gamma * t);
    const Mat2 asymptotic = ancilla_state(spec).sigma();
    return {std::sqrt(decay) * initial.d(),
            decay * initial.sigma() + (1.0 - decay) * asymptotic};
}

double heat_exchanged(const GaussianState& initial, const PTReservoirSpec& spec,
                      double t) {
    const GaussianState evolved = evolve(initial, spec, t);
    return spec.omega * (evolved.sigma().trace() - initial.sigma().trace()) / 4.0;
}

double entropy_production(const GaussianState& initial, const PTReservoirSpec& spec,
                          double t1, double t2, ProductionBeta which) {
    if (!(t1 >= 0.0) || t2 < t1)
        throw std::invalid_argument("entropy_production: need 0 <= t1 <= t2");
    const GaussianState a = evolve(initial, spec, t1);
    const GaussianState b = evolve(initial, spec, t2);
    const double delta_s = von_neumann_entropy(b) - von_neumann_entropy(a);
    const double delta_u = mean_energy(b, spec.omega, EnergyTerms::CovarianceOnly) -
                           mean_energy(a, spec.omega, EnergyTerms::CovarianceOnly);
    const double beta =
        which == ProductionBeta::Effective ? effective_beta(spec) : spec.beta;
    return delta_s - beta * delta_u;
}

ThermalizationTrajectory run_trajectory(const GaussianState& initial,
                                        const PTReservoirSpec& spec, double t_max,
                                        std::size_t n_points) {
    if (!(t_max > 0.0)) throw std::invalid_argument("run_trajectory: t_max must be > 0");
    if (n_points < 2) throw std::invalid_argument("run_trajectory: need n_points >= 2");

    ThermalizationTrajectory traj;
    traj.times.reserve(n_points);
    traj.states.reserve(n_points);
    traj.heat.reserve(n_points);
    traj.coherence.reserve(n_points);
    traj.entropy.reserve(n_points);
    traj.entropy_production.reserve(n_points);

    const double s0 = von_neumann_entropy(evolve(initial, spec, 0.0));
    const double u0 = mean_energy(initial, spec.omega, EnergyTerms::CovarianceOnly);
    const double beta_eff = effective_beta(spec);

    for (std::size_t i = 0; i < n_points; ++i) {
        const double t = t_max * static_cast<double>(i) /
                         static_cast<double>(n_points - 1);
        GaussianState state = evolve(initial, spec, t);
        const double s = von_neumann_entropy(state);
        const double u = mean_energy(state, spec.omega, EnergyTerms::CovarianceOnly);
        traj.times.push_back(t);
        traj.heat.push_back(spec.omega *
                            (state.sigma().trace() - initial.sigma().trace()) / 4.0);
        traj.coherence.push_back(coherence(state));
        traj.entropy.push_back(s);
        traj.entropy_production.push_back((s - s0) - beta_eff * (u - u0));
        traj.states.push_back(std::move(state));
    }
    return traj;
}

}  // namespace ptbath
