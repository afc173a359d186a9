#include "ptbath/collision.hpp"

#include <cmath>
#include <numbers>

namespace ptbath {

double mixing_angle(double gamma, double dt, AngleRule rule) {
    if (!(gamma > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("mixing_angle: gamma and dt must be > 0");
    double theta = 0.0;
    switch (rule) {
        case AngleRule::Exact:
            theta = std::asin(std::sqrt(-std::expm1(-gamma * dt)));
            break;
        case AngleRule::Naive:
            theta = std::sqrt(gamma * dt);
            break;
    }
    if (!(theta > 0.0) || theta > std::numbers::pi / 2.0)
        throw std::domain_error("mixing_angle: resulting theta outside (0, pi/2]");
    return theta;
}

GaussianState collide_once(const GaussianState& system, const GaussianState& ancilla,
                           double theta) {
    if (!(theta >= 0.0) || theta > std::numbers::pi / 2.0)
        throw std::invalid_argument("collide_once: theta must lie in [0, pi/2]");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * system.d() + s * ancilla.d(),
            (c * c) * system.sigma() + (s * s) * ancilla.sigma()};
}

ThermalizationTrajectory simulate(const GaussianState& initial,
                                  const PTReservoirSpec& spec,
                                  const CollisionConfig& config) {
    const double theta = mixing_angle(spec.gamma, config.dt, config.angle_rule);
    const GaussianState ancilla = ancilla_state(spec);

    ThermalizationTrajectory traj;
    const std::size_t n = config.n_steps + 1;
    traj.times.reserve(n);
    traj.states.reserve(n);
    traj.heat.reserve(n);
    traj.coherence.reserve(n);
    traj.entropy.reserve(n);
    traj.entropy_production.reserve(n);

    const double trace0 = initial.sigma().trace();
    const double s0 = von_neumann_entropy(initial);
    const double u0 = mean_energy(initial, spec.omega, EnergyTerms::CovarianceOnly);
    const double beta_eff = effective_beta(spec);

    GaussianState state = initial;
    for (std::size_t k = 0; k <= config.n_steps; ++k) {
        if (k > 0) state = collide_once(state, ancilla, theta);
        const double s = von_neumann_entropy(state);
        const double u = mean_energy(state, spec.omega, EnergyTerms::CovarianceOnly);
        traj.times.push_back(static_cast<double>(k) * config.dt);
        traj.heat.push_back(spec.omega * (state.sigma().trace() - trace0) / 4.0);
        traj.coherence.push_back(coherence(state));
        traj.entropy.push_back(s);
        traj.entropy_production.push_back((s - s0) - beta_eff * (u - u0));
        traj.states.push_back(state);
    }
    return traj;
}

}  // namespace ptbath
