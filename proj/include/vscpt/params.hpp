#pragma once

#include <stdexcept>

namespace vscpt {

// Physical constants in natural units: rates and frequencies in Gamma,
// momenta in hbar k, times in 1/Gamma. omega_r is the recoil frequency
// hbar k^2 / 2M; delta = omega_L - omega_0 is the laser detuning.
struct SimParams {
  double omega_plus = 0.3;
  double omega_minus = 0.3;
  double delta = 0.0;
  double omega_r = 5e-3;

  void validate() const {
    if (omega_plus < 0.0) throw std::invalid_argument("SimParams: omega_plus must be >= 0");
    if (omega_minus < 0.0) throw std::invalid_argument("SimParams: omega_minus must be >= 0");
    if (omega_r <= 0.0) throw std::invalid_argument("SimParams: omega_r must be > 0");
  }
};

}  // namespace vscpt
