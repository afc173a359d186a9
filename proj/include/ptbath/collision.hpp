#ifndef PTBATH_COLLISION_HPP
#define PTBATH_COLLISION_HPP

#include <cstddef>

#include "ptbath/thermalization.hpp"

namespace ptbath {

enum class AngleRule {
    /// theta = arcsin(sqrt(1 - e^{-gamma dt})); the discrete map then
    /// reproduces the Lindblad closed form exactly at every step.
    Exact,
    /// theta = sqrt(gamma dt); first-order accurate in dt, kept to exhibit
    /// the dt -> 0 limit.
    Naive,
};

struct CollisionConfig {
    double dt;            // duration of one collision
    std::size_t n_steps;  // number of collisions
    AngleRule angle_rule = AngleRule::Exact;

    CollisionConfig(double dt_, std::size_t n_steps_,
                    AngleRule rule = AngleRule::Exact)
        : dt(dt_), n_steps(n_steps_), angle_rule(rule) {
        if (!(dt > 0.0)) throw std::domain_error("CollisionConfig: dt must be > 0");
        if (n_steps < 1) throw std::domain_error("CollisionConfig: n_steps must be >= 1");
    }
};

/// Mixing angle for one collision; must land in (0, pi/2].
double mixing_angle(double gamma, double dt, AngleRule rule);

/// Partial-swap (beam-splitter) collision between uncorrelated system and
/// ancilla, reduced back to the system mode:
///   sigma' = cos^2(theta) sigma_sys + sin^2(theta) sigma_anc
///   d'     = cos(theta) d_sys + sin(theta) d_anc
GaussianState collide_once(const GaussianState& system, const GaussianState& ancilla,
                           double theta);

/// Repeated collisions with fresh reservoir ancillas, sampled at t_k = k dt
/// (the k = 0 entry is the initial state). Observables mirror run_trajectory.
ThermalizationTrajectory simulate(const GaussianState& initial,
                                  const PTReservoirSpec& spec,
                                  const CollisionConfig& config);

}  // namespace ptbath

#endif  // PTBATH_COLLISION_HPP
