#include "qswap/state.hpp"

namespace qswap {

StateVector::StateVector(Eigen::VectorXcd amps, int nf)
    : amplitudes(std::move(amps)), n_fock(nf) {
    if (n_fock < 1 || amplitudes.size() != 2 * n_fock)
        throw InvalidParameter("state length must be 2 * n_fock");
}

StateVector make_initial_state(const std::array<Complex, 2>& qubit_amps,
                               const std::vector<Complex>& photon_amps,
                               int n_fock) {
    if (n_fock < 2) throw InvalidParameter("n_fock must be at least 2");
    if (photon_amps.size() > static_cast<std::size_t>(n_fock))
        throw InvalidParameter("photon amplitude list longer than n_fock");

    double qn = std::sqrt(std::norm(qubit_amps[0]) + std::norm(qubit_amps[1]));
    double pn = 0.0;
    for (const auto& b : photon_amps) pn += std::norm(b);
    pn = std::sqrt(pn);
    if (qn == 0.0 || pn == 0.0)
        throw InvalidParameter("initial state factor is identically zero");

    StateVector psi(Eigen::VectorXcd::Zero(2 * n_fock), n_fock);
    for (int q = 0; q < 2; ++q)
        for (std::size_t n = 0; n < photon_amps.size(); ++n)
            psi.at(q, static_cast<int>(n)) =
                (qubit_amps[q] / qn) * (photon_amps[n] / pn);
    return psi;
}

StateVector basis_state(int q, int n, int n_fock) {
    if (q < 0 || q > 1 || n < 0 || n >= n_fock)
        throw InvalidParameter("basis index out of range");
    StateVector psi(Eigen::VectorXcd::Zero(2 * n_fock), n_fock);
    psi.at(q, n) = 1.0;
    return psi;
}

}  // namespace qswap
