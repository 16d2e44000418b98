#pragma once

#include <Eigen/Dense>
#include <complex>

#include "vscpt/basis.hpp"
#include "vscpt/params.hpp"

namespace vscpt {

using Matrix5cd = Eigen::Matrix<std::complex<double>, 5, 5>;
using Vector5cd = Eigen::Matrix<std::complex<double>, 5, 1>;

struct FamilyBlock {
  FamilyBasis basis;
  Eigen::MatrixXcd matrix;  // Hermitian, entries in units of Gamma
};

// Rotating-frame Hamiltonian restricted to one family: kinetic energies
// omega_r*(q + offset)^2 on the diagonal, -delta on excited members, and
// (Omega/2)*coupling_amplitude on each ground-excited laser link.
FamilyBlock family_hamiltonian(const FamilyBasis& basis, const SimParams& params);

// Laser-coupling (off-diagonal) part alone.
Eigen::MatrixXcd family_coupling(const FamilyBasis& basis, const SimParams& params);

// Light-decoupled superposition in family member order. The lambda state is
// a kinetic-energy eigenstate at q = 0 (stable); the inverted-W state mixes
// momenta 0 and +-2 hbar k and is not (metastable).
Eigen::VectorXcd dark_state(FamilyKind kind, const SimParams& params);

// ||V_fam * state||; zero identifies a dark state.
double coupling_norm(const Eigen::VectorXcd& state, const FamilyBasis& basis,
                     const SimParams& params);

}  // namespace vscpt
