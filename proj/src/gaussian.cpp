#include "ptbath/gaussian.hpp"

#include <cmath>

namespace ptbath {

void GaussianState::validate() const {
    if (std::abs(sigma_.qp - sigma_.pq) > kSymmetryTol)
        throw std::domain_error("GaussianState: covariance matrix not symmetric");
    if (!(sigma_.trace() > 0.0))
        throw std::domain_error("GaussianState: covariance trace must be positive");
    if (sigma_.det() < 1.0 - kPurityTol)
        throw std::domain_error(
            "GaussianState: covariance violates the uncertainty principle");
}

GaussianState thermal_state(ThermalOccupation nbar) {
    return {{}, Mat2::scaled_identity(2.0 * nbar.nbar + 1.0)};
}

GaussianState displace(const GaussianState& state, double q0, double p0) {
    return {state.d() + Vec2{q0, p0}, state.sigma()};
}

GaussianState squeeze(const GaussianState& state, double r) {
    if (!std::isfinite(r))
        throw std::invalid_argument("squeeze: r must be finite");
    const double em = std::exp(-r);
    const double ep = std::exp(r);
    const Mat2& s = state.sigma();
    // S sigma S^T with S = diag(e^{-r}, e^{+r}); off-diagonals are invariant.
    Mat2 out{s.qq * em * em, s.qp, s.pq, s.pp * ep * ep};
    return {{em * state.d().q, ep * state.d().p}, out};
}

double symplectic_eigenvalue(const GaussianState& state) {
    const double det = state.sigma().det();
    if (det < 1.0 - kPurityTol)
        throw std::domain_error(
            "symplectic_eigenvalue: covariance violates the uncertainty principle");
    return det < 1.0 ? 1.0 : std::sqrt(det);
}

namespace {

// x ln x continued to 0 at x = 0.
double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double entropy_of_nu(double nu) {
    return xlogx((nu + 1.0) / 2.0) - xlogx((nu - 1.0) / 2.0);
}

}  // namespace

double thermal_entropy(ThermalOccupation nbar) {
    return entropy_of_nu(2.0 * nbar.nbar + 1.0);
}

double von_neumann_entropy(const GaussianState& state) {
    return entropy_of_nu(symplectic_eigenvalue(state));
}

ThermalOccupation reference_occupation(const GaussianState& state) {
    const double k = (state.sigma().trace() + state.d().norm_sq() - 2.0) / 4.0;
    // Rounding can push a vacuum-like state infinitesimally below zero.
    return ThermalOccupation{k < 0.0 && k > -kSymmetryTol ? 0.0 : k};
}

double coherence(const GaussianState& state) {
    return thermal_entropy(reference_occupation(state)) - von_neumann_entropy(state);
}

double mean_energy(const GaussianState& state, double omega, EnergyTerms terms) {
    if (!(omega > 0.0))
        throw std::invalid_argument("mean_energy: omega must be positive");
    double e = state.sigma().trace() / 4.0;
    if (terms == EnergyTerms::Full) e += state.d().norm_sq() / 2.0;
    return omega * e;
}

}  // namespace ptbath
