#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vscpt/liouvillian.hpp"

namespace vscpt {

struct IntegratorConfig {
  double dt = 0.02;  // units 1/Gamma
  double t_final = 0.0;
  int observation_stride = 50;
  void validate() const;
};

struct Snapshot {
  double t = 0.0;
  double trace = 0.0;
  double lost_trace = 0.0;
  double dark_lambda = 0.0;  // NaN when both Rabi frequencies vanish
  double dark_iw = 0.0;
  Eigen::VectorXd density;  // on Trajectory::dist_grid
};

struct Trajectory {
  MomentumGrid dist_grid;
  std::vector<Snapshot> snapshots;
  std::vector<double> times() const;
};

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double gamma_t)
      : std::runtime_error(what), gamma_t_(gamma_t) {}
  double gamma_t() const { return gamma_t_; }

 private:
  double gamma_t_;
};

struct Rk4Workspace {
  FamilyBlockState k1, k2, k3, k4, stage;
  explicit Rk4Workspace(const MomentumGrid& g);
};

// One classical 4th-order Runge-Kutta step; the output is re-hermitized to
// suppress round-off drift. Rejects dt above the 0.1/Gamma stability guard
// and flags diagonal entries below -1e-9 as integration failure.
void rk4_step_inplace(const Liouvillian& liou, FamilyBlockState& state, double dt,
                      Rk4Workspace& ws);

FamilyBlockState rk4_step(const FamilyBlockState& state, const SimParams& params, double dt);

// Fixed-step propagation with observable snapshots every observation_stride
// steps (plus the initial and final states). Deterministic: identical inputs
// give bit-identical outputs. Snapshot times are offset by t0.
std::pair<FamilyBlockState, Trajectory> evolve(const FamilyBlockState& state0,
                                               const SimParams& params,
                                               const IntegratorConfig& config,
                                               double t0 = 0.0);

}  // namespace vscpt
