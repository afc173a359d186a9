#ifndef PTBATH_RESERVOIR_HPP
#define PTBATH_RESERVOIR_HPP

#include "ptbath/gaussian.hpp"

namespace ptbath {

/// Thermal reservoir built from ancillas prepared with the non-Hermitian
/// oscillator H = p^2/2m + m w^2 q^2 / 2 + 2 i w eps p q. Its Hermitized
/// form rescales the kinetic term by mu^2 = 1 + 4 eps^2, so the ancilla
/// occupation is that of a standard bath at the effective inverse
/// temperature mu * beta.
struct PTReservoirSpec {
    double beta;     // inverse temperature, k_B = 1
    double omega;    // reservoir mode frequency
    double epsilon;  // PT-symmetry parameter, >= 0
    double gamma;    // decay rate of the master equation

    PTReservoirSpec(double beta_, double omega_, double epsilon_, double gamma_)
        : beta(beta_), omega(omega_), epsilon(epsilon_), gamma(gamma_) {
        if (!(beta > 0.0)) throw std::domain_error("PTReservoirSpec: beta must be > 0");
        if (!(omega > 0.0)) throw std::domain_error("PTReservoirSpec: omega must be > 0");
        if (!(epsilon >= 0.0))
            throw std::domain_error("PTReservoirSpec: epsilon must be >= 0");
        if (!(gamma > 0.0)) throw std::domain_error("PTReservoirSpec: gamma must be > 0");
    }
};

/// mu = sqrt(1 + 4 eps^2); 1 in the Hermitian limit.
double mu(const PTReservoirSpec& spec);

/// beta_eff = mu * beta.
double effective_beta(const PTReservoirSpec& spec);

/// N = 1 / (e^{beta omega mu} - 1). For beta*omega*mu beyond the exp range
/// the occupation underflows to 0; `underflowed`, when non-null, reports it.
ThermalOccupation reservoir_occupation(const PTReservoirSpec& spec,
                                       bool* underflowed = nullptr);

/// Thermal ancilla state of the reservoir; its covariance (2N+1) I is also
/// the asymptotic covariance of the thermalization map.
GaussianState ancilla_state(const PTReservoirSpec& spec);

/// The constant + hbar omega eps term of the Hermitized Hamiltonian. It is
/// state independent and cancels in every heat or work difference.
double hermitized_energy_shift(const PTReservoirSpec& spec);

}  // namespace ptbath

#endif  // PTBATH_RESERVOIR_HPP
