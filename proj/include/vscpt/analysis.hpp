#pragma once

#include <Eigen/Dense>
#include <vector>

#include "vscpt/liouvillian.hpp"
#include "vscpt/propagation.hpp"

namespace vscpt {

struct MomentumDistribution {
  MomentumGrid grid;
  Eigen::VectorXd density;  // probability per hbar k
  double integral() const { return density.sum() * grid.spacing(); }
};

// Diagonal populations deposited at the physical momenta q + offset of the
// family members. The output grid is the state grid widened by the largest
// member offset (2 hbar k) so that every deposit is representable and the
// integral equals the total trace.
MomentumDistribution momentum_distribution(const FamilyBlockState& state);

// Sum over grid points of <psi_dark| rho_kind(q) |psi_dark>, with the
// q-independent dark-state coefficients.
double dark_population(const FamilyBlockState& state, FamilyKind kind, const SimParams& params);

// Like dark_population but returns NaN instead of throwing when both Rabi
// frequencies vanish (no dark state defined without light).
double dark_population_or_nan(const FamilyBlockState& state, FamilyKind kind,
                              const SimParams& params);

struct GaussianPeak {
  double amplitude;
  double center;
  double sigma;
};

double peak_model(const std::vector<GaussianPeak>& peaks, double p);

struct PeakFit {
  std::vector<GaussianPeak> peaks;
  double residual_norm = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Damped (Levenberg-Marquardt) least squares over a sum of Gaussians, one
// (amplitude, center, sigma) triple per requested center. Initial sigma is
// 0.15 hbar k; centers stay within 0.3 hbar k of their initialization and
// amplitudes stay nonnegative. Converged when the relative residual change
// drops below 1e-10, capped at 500 iterations (non-convergence is reported
// with the best parameters found).
PeakFit fit_gaussian_peaks(const MomentumDistribution& dist,
                           const std::vector<double>& centers_init);

struct LifetimeFit {
  double tau;
  double r_squared;  // of the log-linear fit
  double asymptote;
};

// Log-linear fit of the dark population of `kind` over [t_start, t_end],
// after subtracting the final-snapshot value as the asymptote floor.
// Rejects windows where the adjusted population is non-positive or
// non-monotone.
LifetimeFit estimate_lifetime(const Trajectory& traj, FamilyKind kind, double t_start,
                              double t_end);

// Discrete Gaussian convolution, kernel renormalized on the grid so the
// integral is preserved exactly. sigma_p = 0 is the identity.
MomentumDistribution convolve_detector(const MomentumDistribution& dist, double sigma_p);

}  // namespace vscpt
