#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "vscpt/basis.hpp"
#include "vscpt/hamiltonian.hpp"
#include "vscpt/params.hpp"

namespace vscpt {

// Density operator in the family-block structure: one Hermitian 3x3 block per
// lambda family and one 5x5 block per inverted-W family at each grid point.
// Coherences between different families are identically zero for the initial
// states built here and are not stored. Probability fed outside the grid goes
// to lost_trace instead of being dropped.
struct FamilyBlockState {
  MomentumGrid grid;
  std::vector<Eigen::Matrix3cd> lambda_blocks;
  std::vector<Matrix5cd> iw_blocks;
  double lost_trace = 0.0;

  FamilyBlockState() = default;
  explicit FamilyBlockState(const MomentumGrid& g);

  void set_zero();
  double total_trace() const;
  double min_diagonal() const;
  double hermiticity_defect() const;  // max |rho_ij - conj(rho_ji)|
  void hermitize();                   // rho <- (rho + rho^dagger)/2
  void add_scaled(const FamilyBlockState& x, double a);  // this += a*x
};

double max_abs_difference(const FamilyBlockState& a, const FamilyBlockState& b);

// Continuous 1D projection of the dipole radiation pattern onto the beam
// axis: N_pi(u) = 3/4 (1-u^2), N_sigma(u) = 3/8 (1+u^2), u in [-1, 1].
double emission_density(EmissionClass c, double u);

// N sampled at the grid offsets u_j = j/points_per_recoil and renormalized to
// unit total weight, so discrete feeding conserves trace exactly.
struct EmissionKernel {
  EmissionClass polarization_class;
  int points_per_recoil;
  std::vector<double> weights;  // offset j stored at index j + points_per_recoil
  double weight(int j) const { return weights[j + points_per_recoil]; }
};

EmissionKernel emission_kernel(EmissionClass c, int points_per_recoil);

// Equal populations in the five ground sublevels, each distributed over
// momentum as a Gaussian of standard deviation delta_q centered at p = 0.
// Total trace is exactly 1.
FamilyBlockState build_initial_state(const MomentumGrid& grid, double delta_q);

// Right-hand side of the generalized optical Bloch equation in the family
// basis: coherent evolution, excited-state decay at Gamma, and ground-state
// feeding by spontaneous emission with the recoil kernels above.
class Liouvillian {
 public:
  Liouvillian(const MomentumGrid& grid, const SimParams& params);

  // Production kernel: gather formulation, parallel over target blocks.
  // Deterministic for fixed inputs regardless of thread count.
  void rhs(const FamilyBlockState& rho, FamilyBlockState& drho) const;

  // Reference kernel: scatter formulation, single-threaded. Kept as an
  // independent route for testing the gather kernel.
  void rhs_serial(const FamilyBlockState& rho, FamilyBlockState& drho) const;

  const MomentumGrid& grid() const { return grid_; }
  const SimParams& params() const { return params_; }

 private:
  void coherent_and_decay(const FamilyBlockState& rho, FamilyBlockState& drho, int q) const;

  MomentumGrid grid_;
  SimParams params_;
  std::vector<Eigen::Matrix3cd> h_lambda_;
  std::vector<Matrix5cd> h_iw_;
  EmissionKernel w_pi_;
  EmissionKernel w_sigma_;
  // off-grid feeding rate per excited slot (e0, e-1, e+1); nonzero near edges
  std::vector<std::array<double, 3>> loss_rate_;
};

// Convenience wrapper returning d(rho)/dt; lost_trace of the result holds
// d(lost_trace)/dt.
FamilyBlockState apply_rhs(const FamilyBlockState& state, const SimParams& params);

}  // namespace vscpt
