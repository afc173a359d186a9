#include "ptbath/reservoir.hpp"

#include <cmath>

namespace ptbath {

double mu(const PTReservoirSpec& spec) {
    return std::sqrt(1.0 + 4.0 * spec.epsilon * spec.epsilon);
}

double effective_beta(const PTReservoirSpec& spec) { return mu(spec) * spec.beta; }

ThermalOccupation reservoir_occupation(const PTReservoirSpec& spec, bool* underflowed) {
    const double x = spec.beta * spec.omega * mu(spec);
    if (underflowed) *underflowed = false;
    if (x > 700.0) {
        // e^x overflows a double; the occupation is 0 to machine precision.
        if (underflowed) *underflowed = true;
        return ThermalOccupation{0.0};
    }
    return ThermalOccupation{1.0 / std::expm1(x)};
}

GaussianState ancilla_state(const PTReservoirSpec& spec) {
    return thermal_state(reservoir_occupation(spec));
}

double hermitized_energy_shift(const PTReservoirSpec& spec) {
    return spec.omega * spec.epsilon;
}

}  // namespace ptbath
