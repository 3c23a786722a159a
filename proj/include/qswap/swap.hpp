#ifndef QSWAP_SWAP_HPP
#define QSWAP_SWAP_HPP

#include <array>
#include <optional>

#include "qswap/evolution.hpp"
#include "qswap/state.hpp"

namespace qswap {

// Success probabilities below this are reported as undefined concurrence
// rather than computed from numerical noise.
inline constexpr double kDefaultBsmEpsilon = 1e-9;

// Amplitude order within TwoQubitState::amps.
enum TwoQubitIndex { kUpUp = 0, kUpDown = 1, kDownUp = 2, kDownDown = 3 };

// Two-qubit state after the Bell-state measurement.
struct TwoQubitState {
    std::array<Complex, 4> amps{};  // c_uu, c_ud, c_du, c_dd
    double norm_sq = 0.0;           // of the unnormalized projected vector
    bool normalized = false;
};

struct BsmOutcome {
    TwoQubitState state;      // unnormalized
    double success_prob = 0;  // (1/2) * norm_sq
};

// Projection of the joint photon pair onto psi^- = (|01> - |10>)/sqrt(2).
// Only Fock levels 0 and 1 of each table enter; everything above is
// discarded by the projection.
BsmOutcome bsm_project(const CoefficientTable& c1, const CoefficientTable& c2);

// Returns the unit-norm copy; throws ContractViolation on (near-)zero norm.
TwoQubitState normalize(const TwoQubitState& s);

// Pure-state concurrence 2|c_uu c_dd - c_ud c_du|. Requires a normalized
// input (ContractViolation otherwise).
double concurrence_pure(const TwoQubitState& s);

// The same quantity from the magic-basis expansion |sum_i alpha_i^2| and
// from the spin-flip overlap |<s|sigma_y (x) sigma_y|s*>|. Used as
// cross-oracles; all three agree to machine precision.
double concurrence_magic_basis(const TwoQubitState& s);
double concurrence_spin_flip(const TwoQubitState& s);

struct SwapResult {
    std::optional<double> concurrence;  // empty: success prob below epsilon
    double success_prob = 0.0;
};

// Propagate both subsystems to the same t', project, normalize, measure.
SwapResult swap_at(const Propagator& prop1, const Propagator& prop2,
                   const StateVector& psi1, const StateVector& psi2, double t,
                   double eps_bsm = kDefaultBsmEpsilon);

}  // namespace qswap

#endif
