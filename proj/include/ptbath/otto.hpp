#ifndef PTBATH_OTTO_HPP
#define PTBATH_OTTO_HPP

#include <optional>
#include <stdexcept>
#include <vector>

namespace ptbath {

/// Quasistatic four-stroke Otto cycle: adiabatic compression omega_i ->
/// omega_f, complete thermalization with the PT hot bath, adiabatic
/// expansion back to omega_i, complete thermalization with the cold bath.
struct OttoCycleSpec {
    double omega_i;    // cold-isochore frequency
    double omega_f;    // hot-isochore frequency, > omega_i
    double beta_cold;  // cold-bath inverse temperature
    double beta_hot;   // hot-bath inverse temperature, < beta_cold
    double epsilon;    // PT parameter of the hot reservoir

    OttoCycleSpec(double omega_i_, double omega_f_, double beta_cold_,
                  double beta_hot_, double epsilon_)
        : omega_i(omega_i_),
          omega_f(omega_f_),
          beta_cold(beta_cold_),
          beta_hot(beta_hot_),
          epsilon(epsilon_) {
        if (!(omega_i > 0.0) || !(omega_f > omega_i))
            throw std::domain_error("OttoCycleSpec: need omega_f > omega_i > 0");
        if (!(beta_hot > 0.0) || !(beta_cold > beta_hot))
            throw std::domain_error("OttoCycleSpec: need beta_cold > beta_hot > 0");
        if (!(epsilon >= 0.0))
            throw std::domain_error("OttoCycleSpec: epsilon must be >= 0");
    }

    double effective_beta_hot() const;  // sqrt(1 + 4 eps^2) beta_hot
};

enum class CycleRegime { Engine, Refrigerator, Other };

struct OttoCycleResult {
    double w1 = 0.0;     // work, compression stroke
    double w3 = 0.0;     // work, expansion stroke
    double w_net = 0.0;  // w1 + w3
    double q2 = 0.0;     // heat from the hot reservoir
    double q4 = 0.0;     // heat from the cold reservoir
    CycleRegime regime = CycleRegime::Other;
    std::optional<double> figure_of_merit;  // eta or COP
};

/// Sign-convention note: energies are in units of hbar times the frequency
/// unit; w_net < 0 means net work is extracted (engine).
OttoCycleResult stroke_energies(const OttoCycleSpec& spec);

CycleRegime classify_regime(const OttoCycleResult& result);

/// Engine -> efficiency -w_net/q2, Refrigerator -> COP q4/w_net.
/// Throws on the Other regime.
double performance(const OttoCycleResult& result);

/// PT parameter at which the cycle flips from engine to refrigerator.
/// Empty when omega_i beta_cold <= omega_f beta_hot: no engine window exists
/// and the cycle refrigerates for every epsilon >= 0.
std::optional<double> critical_epsilon(const OttoCycleSpec& spec);

/// Evaluate the cycle over a strictly increasing grid of epsilon values.
std::vector<OttoCycleResult> sweep_epsilon(const OttoCycleSpec& base,
                                           const std::vector<double>& eps_grid);

}  // namespace ptbath

#endif  // PTBATH_OTTO_HPP
