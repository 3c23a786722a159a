#include "qswap/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>

namespace qswap {

namespace {

// FNV-1a over the raw matrix bytes.
std::uint64_t fingerprint_of(const Eigen::MatrixXcd& m) {
    std::uint64_t h = 1469598103934665603ull;
    const auto* bytes = reinterpret_cast<const unsigned char*>(m.data());
    const std::size_t n = sizeof(Complex) * static_cast<std::size_t>(m.size());
    for (std::size_t i = 0; i < n; ++i) {
        h ^= bytes[i];
        h *= 1099511628211ull;
    }
    return h;
}

double hermiticity_defect(const Eigen::MatrixXcd& m) {
    double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

Propagator diagonalize(const OperatorMatrix& h) {
    if (h.matrix.rows() != h.matrix.cols())
        throw InvalidParameter("hamiltonian must be square");
    if (!h.hermitian || hermiticity_defect(h.matrix) > 1e-12)
        throw ContractViolation("diagonalize requires a Hermitian matrix");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix);
    if (solver.info() != Eigen::Success)
        throw ContractViolation("eigendecomposition failed to converge");

    Propagator prop;
    prop.eigenvalues = solver.eigenvalues();
    prop.eigenvectors = solver.eigenvectors();
    prop.fingerprint = fingerprint_of(h.matrix);
    return prop;
}

Propagator make_propagator(const SubsystemParams& p) {
    return diagonalize(build_hamiltonian(p));
}

StateVector propagate(const Propagator& prop, const StateVector& psi0,
                      double t) {
    if (psi0.dim() != prop.dim())
        throw InvalidParameter("state dimension does not match propagator");
    if (t == 0.0) return psi0;

    const Complex minus_i(0.0, -1.0);
    Eigen::VectorXcd modal = prop.eigenvectors.adjoint() * psi0.amplitudes;
    for (Eigen::Index k = 0; k < modal.size(); ++k)
        modal[k] *= std::exp(minus_i * prop.eigenvalues[k] * t);
    return StateVector(prop.eigenvectors * modal, psi0.n_fock);
}

CoefficientTable coefficients(const StateVector& psi) {
    CoefficientTable table;
    table.a = psi.amplitudes.segment(0, psi.n_fock);
    table.b = psi.amplitudes.segment(psi.n_fock, psi.n_fock);
    return table;
}

LeakageReport truncation_check(const SubsystemParams& p,
                               const StateVector& psi0, double t_max,
                               int factor, double dt) {
    p.validate();
    if (factor < 2) throw InvalidParameter("reference factor must be >= 2");
    if (psi0.n_fock != p.n_fock)
        throw InvalidParameter("initial state does not match n_fock");

    SubsystemParams big = p;
    big.n_fock = factor * p.n_fock;

    // Embed psi0 into the larger space.
    StateVector psi0_big(Eigen::VectorXcd::Zero(big.dim()), big.n_fock);
    for (int q = 0; q < 2; ++q)
        for (int n = 0; n < p.n_fock; ++n) psi0_big.at(q, n) = psi0.at(q, n);

    const Propagator prop_small = make_propagator(p);
    const Propagator prop_big = make_propagator(big);

    LeakageReport report;
    for (double t = 0.0; t <= t_max + 0.5 * dt; t += dt) {
        const StateVector small = propagate(prop_small, psi0, t);
        const StateVector bigst = propagate(prop_big, psi0_big, t);

        double leaked = 0.0;
        Complex overlap = 0.0;
        for (int q = 0; q < 2; ++q)
            for (int n = 0; n < big.n_fock; ++n) {
                if (n < p.n_fock)
                    overlap += std::conj(small.at(q, n)) * bigst.at(q, n);
                else
                    leaked += std::norm(bigst.at(q, n));
            }
        report.max_leakage = std::max(report.max_leakage, leaked);
        report.min_fidelity = std::min(report.min_fidelity, std::norm(overlap));
    }
    report.pass = report.max_leakage <= 0.01;
    return report;
}

}  // namespace qswap
