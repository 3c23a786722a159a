#ifndef QSWAP_OPERATORS_HPP
#define QSWAP_OPERATORS_HPP

#include <Eigen/Dense>

#include "qswap/params.hpp"

namespace qswap {

// Dense complex operator on the 2*n_fock product space (or the n_fock
// Fock factor alone, for the ladder operators).
struct OperatorMatrix {
    Eigen::MatrixXcd matrix;
    bool hermitian = false;
};

// Annihilation operator on the Fock factor: <n-1|a|n> = sqrt(n).
// The truncation drops the coupling out of the top level.
Eigen::MatrixXcd build_annihilation(int n_fock);

// H = H_Q + H_C + H_int on the 2*n_fock space.
//   H_Q   = c * Omega * sigma_z (x) 1,  c = 1/2 or 1 per convention,
//           sign fixed so |down> (excited) has the higher energy
//   H_C   = omega (a^dag a + 1/2)
//   H_int = g sigma_x (x) (a + a^dag)            (rabi)
//         = g (sigma^+ (x) a + sigma^- (x) a^dag) (jc)
OperatorMatrix build_hamiltonian(const SubsystemParams& p);

// Parity sigma_z (x) (-1)^{a^dag a}, with the sign fixed so the
// ground-qubit, even-photon sector has parity +1. Commutes with the
// Rabi Hamiltonian; source of the selection rules.
OperatorMatrix build_parity(int n_fock);

// Total excitation number sigma^+ sigma^- (x) 1 + 1 (x) a^dag a,
// conserved by the JC Hamiltonian.
OperatorMatrix build_excitation_number(int n_fock);

}  // namespace qswap

#endif
