#ifndef QSWAP_EVOLUTION_HPP
#define QSWAP_EVOLUTION_HPP

#include <cstdint>

#include <Eigen/Dense>

#include "qswap/operators.hpp"
#include "qswap/state.hpp"

namespace qswap {

// Eigendecomposition of a Hermitian H, reused across a whole t' sweep.
// Immutable after construction; propagate calls at distinct t are
// independent.
struct Propagator {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXcd eigenvectors; // columns are eigenstates
    std::uint64_t fingerprint = 0; // of the source matrix bytes

    int dim() const { return static_cast<int>(eigenvalues.size()); }
};

// Throws ContractViolation if H is not flagged and checked Hermitian.
Propagator diagonalize(const OperatorMatrix& h);

// Convenience: build_hamiltonian + diagonalize.
Propagator make_propagator(const SubsystemParams& p);

// psi(t) = V exp(-i Lambda t) V^dag psi0.
StateVector propagate(const Propagator& prop, const StateVector& psi0,
                      double t);

// The (a_n, b_n) decomposition of a subsystem state:
// a_n amplitudes of |up n>, b_n of |down n>.
struct CoefficientTable {
    Eigen::VectorXcd a;
    Eigen::VectorXcd b;

    int n_fock() const { return static_cast<int>(a.size()); }
};

CoefficientTable coefficients(const StateVector& psi);

// Truncation adequacy, judged against a reference run in a
// factor * n_fock space.
struct LeakageReport {
    double max_leakage = 0.0;   // max population above level n_fock-1
    double min_fidelity = 1.0;  // |<psi_small | psi_big truncated>|^2
    bool pass = false;          // max_leakage <= 0.01
};

LeakageReport truncation_check(const SubsystemParams& p,
                               const StateVector& psi0, double t_max,
                               int factor, double dt = 0.5);

}  // namespace qswap

#endif
