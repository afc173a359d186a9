#ifndef PTBATH_THERMALIZATION_HPP
#define PTBATH_THERMALIZATION_HPP

#include <cstddef>
#include <vector>

#include "ptbath/gaussian.hpp"
#include "ptbath/reservoir.hpp"

namespace ptbath {

/// Sampled thermalization run. All series share the time grid; heat and
/// entropy production are cumulative from t = times[0].
struct ThermalizationTrajectory {
    std::vector<double> times;
    std::vector<GaussianState> states;
    std::vector<double> heat;                // units of hbar omega
    std::vector<double> coherence;           // nats
    std::vector<double> entropy;             // nats
    std::vector<double> entropy_production;  // nats, against beta_eff
};

/// Closed-form Markovian relaxation:
///   d(t)     = d(0) e^{-gamma t / 2}
///   sigma(t) = sigma(0) e^{-gamma t} + (1 - e^{-gamma t}) (2N+1) I
GaussianState evolve(const GaussianState& initial, const PTReservoirSpec& spec,
                     double t);

/// Cumulative heat (hbar omega / 4)(Tr sigma(t) - Tr sigma(0)). Positive
/// means heat flows from the reservoir into the system. For an isotropic
/// thermal initial covariance this equals hbar omega (N - nbar)(1 - e^{-gamma t}).
double heat_exchanged(const GaussianState& initial, const PTReservoirSpec& spec,
                      double t);

enum class ProductionBeta {
    Effective,  // beta_eff = mu beta; guarantees Sigma >= 0 for this map
    Bare,       // the reservoir's bare beta
};

/// Entropy production Sigma = Delta S - beta * Delta U over [t1, t2], with
/// Delta U taken from the covariance-only energy (equal to the heat here).
double entropy_production(const GaussianState& initial, const PTReservoirSpec& spec,
                          double t1, double t2,
                          ProductionBeta which = ProductionBeta::Effective);

/// Uniform grid over [0, t_max] with n_points samples (endpoints included).
ThermalizationTrajectory run_trajectory(const GaussianState& initial,
                                        const PTReservoirSpec& spec, double t_max,
                                        std::size_t n_points);

}  // namespace ptbath

#endif  // PTBATH_THERMALIZATION_HPP
