#pragma once

#include <array>
#include <vector>

namespace vscpt {

enum class Manifold { ground, excited };

// Zeeman sublevel of the J=2 (ground) or J=1 (excited) manifold.
struct InternalState {
  Manifold manifold;
  int m;
  bool excited() const { return manifold == Manifold::excited; }
  friend bool operator==(const InternalState&, const InternalState&) = default;
};

bool is_valid(const InternalState& s);

enum class Polarization { sigma_plus, sigma_minus };

// Photon angular momentum along the beam axis for a decay e_m -> g_m',
// q = m_e - m_g. sigma_plus and sigma_minus photons are distinct modes;
// only amplitudes of the same mode interfere in the feeding term.
enum class DecayMode { sigma_plus, pi, sigma_minus };

// Spatial recoil profile class: linear (pi) vs circular (sigma) dipole.
enum class EmissionClass { pi, sigma };

EmissionClass emission_class(DecayMode mode);

// Dimensionless prefactor of (1/2)*Omega for the stimulated transition
// g_m -> e_{m+1} (sigma+) or g_m -> e_{m-1} (sigma-). Zero when the target
// excited sublevel does not exist. Squared amplitudes are in ratio 6:3:1.
double coupling_amplitude(int m_g, Polarization pol);

// Spontaneous decay channel with its amplitude (square root of the branching
// ratio; the three branchings of each excited sublevel sum to 1).
struct DecayChannel {
  int m_e;
  int m_g;
  DecayMode mode;
  double amplitude;
};

const std::array<DecayChannel, 9>& decay_channels();

enum class FamilyKind { lambda, inverted_w };

constexpr int family_size(FamilyKind k) { return k == FamilyKind::lambda ? 3 : 5; }

struct FamilyMember {
  InternalState state;
  int offset;  // momentum offset from the family label q, units of hbar k
};

// Closed set of internal/momentum pairs connected by stimulated photon
// exchange; families couple to each other only through spontaneous emission.
struct FamilyBasis {
  FamilyKind kind;
  double q;  // family momentum, units of hbar k
  std::vector<FamilyMember> members;
};

FamilyBasis family_members(FamilyKind kind, double q);

// Member indices in the order fixed by family_members.
namespace lam {
constexpr int e0 = 0, gm1 = 1, gp1 = 2;
}
namespace iw {
constexpr int gm2 = 0, em1 = 1, g0 = 2, ep1 = 3, gp2 = 4;
}

// Uniform symmetric momentum grid. The spacing is (hbar k)/points_per_recoil
// and p = 0 is a grid point, so one- and two-recoil shifts are exact index
// shifts.
class MomentumGrid {
 public:
  MomentumGrid() : ppr_(1), half_(1) {}
  MomentumGrid(double p_max, int points_per_recoil);

  int size() const { return 2 * half_ + 1; }
  int points_per_recoil() const { return ppr_; }
  double spacing() const { return 1.0 / ppr_; }
  double p_max() const { return static_cast<double>(half_) / ppr_; }
  int half_index() const { return half_; }
  double momentum(int i) const { return static_cast<double>(i - half_) / ppr_; }
  bool contains(int i) const { return i >= 0 && i < size(); }
  std::vector<double> values() const;

  friend bool operator==(const MomentumGrid&, const MomentumGrid&) = default;

 private:
  int ppr_;
  int half_;
};

MomentumGrid build_momentum_grid(double p_max, int points_per_recoil);

}  // namespace vscpt
