#ifndef QSWAP_STATE_HPP
#define QSWAP_STATE_HPP

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qswap/errors.hpp"

namespace qswap {

using Complex = std::complex<double>;

// Qubit pseudo-spin labels: up = ground, down = excited.
inline constexpr int kSpinUp = 0;    // |up>, ground
inline constexpr int kSpinDown = 1;  // |down>, excited

// State on the qubit (x) Fock product space, amplitudes indexed as
// index(q, n) = q * n_fock + n.
struct StateVector {
    Eigen::VectorXcd amplitudes;
    int n_fock = 0;

    StateVector() = default;
    StateVector(Eigen::VectorXcd amps, int nf);

    int dim() const { return 2 * n_fock; }
    int index(int q, int n) const { return q * n_fock + n; }

    Complex& at(int q, int n) { return amplitudes[index(q, n)]; }
    Complex at(int q, int n) const { return amplitudes[index(q, n)]; }

    double norm() const { return amplitudes.norm(); }
};

// Normalized product state sum_s gamma_s |s> (x) sum_n beta_n |n>.
// photon_amps may be shorter than n_fock; missing entries are zero.
StateVector make_initial_state(const std::array<Complex, 2>& qubit_amps,
                               const std::vector<Complex>& photon_amps,
                               int n_fock);

// Basis state |q, n>.
StateVector basis_state(int q, int n, int n_fock);

}  // namespace qswap

#endif
