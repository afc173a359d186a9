#ifndef PTBATH_GAUSSIAN_HPP
#define PTBATH_GAUSSIAN_HPP

#include <stdexcept>

namespace ptbath {

struct Vec2 {
    double q = 0.0;
    double p = 0.0;

    double norm_sq() const { return q * q + p * p; }
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.q + b.q, a.p + b.p}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.q, s * v.p}; }

// 2x2 real matrix, row-major over the (q, p) quadrature basis.
struct Mat2 {
    double qq = 1.0;
    double qp = 0.0;
    double pq = 0.0;
    double pp = 1.0;

    static Mat2 identity() { return {}; }
    static Mat2 scaled_identity(double s) { return {s, 0.0, 0.0, s}; }

    double trace() const { return qq + pp; }
    double det() const { return qq * pp - qp * pq; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.qq + b.qq, a.qp + b.qp, a.pq + b.pq, a.pp + b.pp};
}
inline Mat2 operator*(double s, const Mat2& m) {
    return {s * m.qq, s * m.qp, s * m.pq, s * m.pp};
}

/// Mean photon number of a thermal state. Rejects negative values.
struct ThermalOccupation {
    double nbar;

    explicit ThermalOccupation(double n) : nbar(n) {
        if (!(n >= 0.0))
            throw std::domain_error("ThermalOccupation: nbar must be >= 0");
    }
};

// Symmetry tolerance for covariance matrices and the clamp zone below
// det(sigma) = 1 inside which states are still treated as physical.
inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kPurityTol = 1e-9;

/// Single-mode Gaussian state: first moments d = (<q>, <p>) and covariance
/// matrix sigma in the convention where the vacuum has sigma = I and a
/// thermal state with occupation nbar has sigma = (2 nbar + 1) I.
class GaussianState {
  public:
    GaussianState() = default;  // vacuum

    GaussianState(Vec2 d, Mat2 sigma) : d_(d), sigma_(sigma) { validate(); }

    const Vec2& d() const { return d_; }
    const Mat2& sigma() const { return sigma_; }

  private:
    void validate() const;

    Vec2 d_{};
    Mat2 sigma_ = Mat2::identity();
};

GaussianState thermal_state(ThermalOccupation nbar);

/// Shift the first moments by (q0, p0); covariance untouched.
GaussianState displace(const GaussianState& state, double q0, double p0);

/// Apply the single-mode squeezer S = diag(e^{-r}, e^{r}) to moments and
/// covariance.
GaussianState squeeze(const GaussianState& state, double r);

/// nu = sqrt(det sigma). States with det in [1 - kPurityTol, 1) are clamped
/// to nu = 1; anything below is rejected.
double symplectic_eigenvalue(const GaussianState& state);

/// Entropy of a thermal state with the given occupation, in nats:
/// (n+1) ln(n+1) - n ln n.
double thermal_entropy(ThermalOccupation nbar);

/// von Neumann entropy in nats,
/// S = ((nu+1)/2) ln((nu+1)/2) - ((nu-1)/2) ln((nu-1)/2),
/// with the second term continued to 0 at nu = 1.
double von_neumann_entropy(const GaussianState& state);

/// Occupation of the reference thermal state entering the coherence measure:
/// kbar = (sigma_qq + sigma_pp + <q>^2 + <p>^2 - 2) / 4.
ThermalOccupation reference_occupation(const GaussianState& state);

/// Relative-entropy coherence, C = S(thermal(kbar)) - S(state), in nats.
/// Zero exactly for undisplaced, unsqueezed thermal states.
double coherence(const GaussianState& state);

enum class EnergyTerms {
    CovarianceOnly,  // hbar omega Tr[sigma] / 4
    Full,            // adds the first-moment contribution hbar omega |d|^2 / 2
};

/// Mean energy in units of hbar times the frequency unit (hbar = 1 in code).
double mean_energy(const GaussianState& state, double omega,
                   EnergyTerms terms = EnergyTerms::Full);

}  // namespace ptbath

#endif  // PTBATH_GAUSSIAN_HPP
