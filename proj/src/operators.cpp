#include "qswap/operators.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "qswap/state.hpp"

namespace qswap {

namespace {

// Qubit operators in the (up = ground, down = excited) ordering.
// sigma_z gives the excited |down> state the +1 eigenvalue, so
// H_Q = c * Omega * sigma_z puts it at the higher energy.
Eigen::Matrix2cd sigma_z_op() {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(kSpinUp, kSpinUp) = -1.0;
    m(kSpinDown, kSpinDown) = 1.0;
    return m;
}

Eigen::Matrix2cd sigma_x_op() {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(kSpinUp, kSpinDown) = 1.0;
    m(kSpinDown, kSpinUp) = 1.0;
    return m;
}

// sigma^+ raises |up> -> |down>.
Eigen::Matrix2cd sigma_plus_op() {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(kSpinDown, kSpinUp) = 1.0;
    return m;
}

}  // namespace

Eigen::MatrixXcd build_annihilation(int n_fock) {
    if (n_fock < 2) throw InvalidParameter("n_fock must be at least 2");
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n_fock, n_fock);
    for (int n = 1; n < n_fock; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

OperatorMatrix build_hamiltonian(const SubsystemParams& p) {
    p.validate();
    const int nf = p.n_fock;
    const Eigen::MatrixXcd a = build_annihilation(nf);
    const Eigen::MatrixXcd adag = a.adjoint();
    const Eigen::MatrixXcd id_fock = Eigen::MatrixXcd::Identity(nf, nf);
    const Eigen::Matrix2cd id_q = Eigen::Matrix2cd::Identity();

    const double c = (p.convention == QubitConvention::half) ? 0.5 : 1.0;
    Eigen::MatrixXcd h =
        Eigen::kroneckerProduct(c * p.qubit_freq * sigma_z_op(), id_fock);
    h += Eigen::kroneckerProduct(
        id_q, p.cavity_freq * (adag * a + 0.5 * id_fock));

    if (p.model == Model::rabi) {
        h += p.coupling *
             Eigen::kroneckerProduct(sigma_x_op(), (a + adag).eval());
    } else {
        const Eigen::Matrix2cd sp = sigma_plus_op();
        h += p.coupling * (Eigen::kroneckerProduct(sp, a) +
                           Eigen::kroneckerProduct(sp.adjoint().eval(), adag));
    }
    return {std::move(h), true};
}

OperatorMatrix build_parity(int n_fock) {
    if (n_fock < 2) throw InvalidParameter("n_fock must be at least 2");
    Eigen::MatrixXcd pi = Eigen::MatrixXcd::Zero(2 * n_fock, 2 * n_fock);
    for (int q = 0; q < 2; ++q)
        for (int n = 0; n < n_fock; ++n) {
            double qubit_sign = (q == kSpinUp) ? 1.0 : -1.0;
            double photon_sign = (n % 2 == 0) ? 1.0 : -1.0;
            pi(q * n_fock + n, q * n_fock + n) = qubit_sign * photon_sign;
        }
    return {std::move(pi), true};
}

OperatorMatrix build_excitation_number(int n_fock) {
    if (n_fock < 2) throw InvalidParameter("n_fock must be at least 2");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * n_fock, 2 * n_fock);
    for (int q = 0; q < 2; ++q)
        for (int n = 0; n < n_fock; ++n)
            m(q * n_fock + n, q * n_fock + n) = double(n + q);
    return {std::move(m), true};
}

}  // namespace qswap
