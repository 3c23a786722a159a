#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qswap/evolution.hpp"

using namespace qswap;
using namespace qswap::testing;

TEST_CASE("diagonalize reconstructs the input") {
    std::mt19937 rng(23);
    Eigen::MatrixXcd h = random_hermitian(20, rng);
    Propagator prop = diagonalize({h, true});
    Eigen::MatrixXcd recon =
        prop.eigenvectors *
        prop.eigenvalues.cast<Complex>().asDiagonal() *
        prop.eigenvectors.adjoint();
    CHECK((recon - h).norm() <= 1e-10 * h.norm());
    CHECK((prop.eigenvectors.adjoint() * prop.eigenvectors -
           Eigen::MatrixXcd::Identity(20, 20))
              .norm() <= 1e-10);
    for (int i = 1; i < 20; ++i)
        CHECK(prop.eigenvalues[i] >= prop.eigenvalues[i - 1]);
}

TEST_CASE("diagonalize rejects non-hermitian input") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(diagonalize({m, true}), ContractViolation);
    CHECK_THROWS_AS(diagonalize({Eigen::MatrixXcd::Identity(4, 4), false}),
                    ContractViolation);
}

TEST_CASE("uncoupled spectrum is exact") {
    SubsystemParams p;
    p.coupling = 0.0;
    p.n_fock = 5;
    Propagator prop = make_propagator(p);
    std::vector<double> expected;
    for (int q = 0; q < 2; ++q)
        for (int n = 0; n < p.n_fock; ++n)
            expected.push_back((q == kSpinDown ? 0.5 : -0.5) + (n + 0.5));
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < p.dim(); ++i)
        CHECK(prop.eigenvalues[i] ==
              doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("propagate at t = 0 is the identity") {
    SubsystemParams p;
    Propagator prop = make_propagator(p);
    StateVector psi0 = basis_state(kSpinDown, 0, p.n_fock);
    StateVector psi = propagate(prop, psi0, 0.0);
    CHECK((psi.amplitudes - psi0.amplitudes).norm() <= 1e-12);
}

TEST_CASE("jc vacuum Rabi oscillation at resonance") {
    SubsystemParams p;
    p.model = Model::jc;
    Propagator prop = make_propagator(p);
    StateVector psi0 = basis_state(kSpinDown, 0, p.n_fock);
    for (double t : {0.3, 1.0, 4.0, 17.5, 60.0}) {
        StateVector psi = propagate(prop, psi0, t);
        double excited_pop = std::norm(psi.at(kSpinDown, 0));
        CHECK(excited_pop ==
              doctest::Approx(std::pow(std::cos(p.coupling * t), 2))
                  .epsilon(1e-10));
    }
}

TEST_CASE("norm and energy are conserved") {
    std::mt19937 rng(31);
    SubsystemParams p;
    p.coupling = 0.35;
    Propagator prop = make_propagator(p);
    Eigen::MatrixXcd h = build_hamiltonian(p).matrix;
    StateVector psi0(random_state(p.dim(), rng), p.n_fock);
    const double e0 = (psi0.amplitudes.adjoint() * h * psi0.amplitudes)(0).real();
    for (double t = 0.0; t <= 100.0; t += 2.5) {
        StateVector psi = propagate(prop, psi0, t);
        CHECK(std::abs(psi.norm() - 1.0) <= 1e-10);
        double e =
            (psi.amplitudes.adjoint() * h * psi.amplitudes)(0).real();
        CHECK(std::abs(e - e0) <= 1e-10 * std::max(1.0, std::abs(e0)));
    }
}

TEST_CASE("parity expectation is constant under Rabi evolution") {
    std::mt19937 rng(37);
    SubsystemParams p;
    Propagator prop = make_propagator(p);
    Eigen::MatrixXcd pi = build_parity(p.n_fock).matrix;
    StateVector psi0(random_state(p.dim(), rng), p.n_fock);
    const double p0 =
        (psi0.amplitudes.adjoint() * pi * psi0.amplitudes)(0).real();
    for (double t = 0.0; t <= 50.0; t += 1.7) {
        StateVector psi = propagate(prop, psi0, t);
        double pv = (psi.amplitudes.adjoint() * pi * psi.amplitudes)(0).real();
        CHECK(std::abs(pv - p0) <= 1e-10);
    }
}

TEST_CASE("selection rules: forbidden sector stays empty from |down 0>") {
    SubsystemParams p;
    Propagator prop = make_propagator(p);
    StateVector psi0 = basis_state(kSpinDown, 0, p.n_fock);
    for (double t = 0.0; t <= 100.0; t += 3.3) {
        CoefficientTable c = coefficients(propagate(prop, psi0, t));
        for (int n = 0; n < p.n_fock; ++n) {
            if (n % 2 == 0)
                CHECK(std::abs(c.a[n]) <= 1e-10);  // up-even forbidden
            else
                CHECK(std::abs(c.b[n]) <= 1e-10);  // down-odd forbidden
        }
    }
}

TEST_CASE("jc excitation number is conserved") {
    std::mt19937 rng(41);
    SubsystemParams p;
    p.model = Model::jc;
    Propagator prop = make_propagator(p);
    Eigen::MatrixXcd nexc = build_excitation_number(p.n_fock).matrix;
    StateVector psi0(random_state(p.dim(), rng), p.n_fock);
    const double n0 =
        (psi0.amplitudes.adjoint() * nexc * psi0.amplitudes)(0).real();
    for (double t = 0.0; t <= 50.0; t += 2.1) {
        StateVector psi = propagate(prop, psi0, t);
        double nv =
            (psi.amplitudes.adjoint() * nexc * psi.amplitudes)(0).real();
        CHECK(std::abs(nv - n0) <= 1e-9);
    }
}

TEST_CASE("propagate matches the RK4 oracle") {
    std::mt19937 rng(43);
    SubsystemParams p;
    p.n_fock = 6;
    Eigen::MatrixXcd h = build_hamiltonian(p).matrix;
    Propagator prop = make_propagator(p);
    for (int trial = 0; trial < 5; ++trial) {
        StateVector psi0(random_state(p.dim(), rng), p.n_fock);
        const double t_end = 5.0;
        Eigen::VectorXcd ref = rk4_evolve(h, psi0.amplitudes, t_end, 1e-3);
        StateVector psi = propagate(prop, psi0, t_end);
        CHECK((psi.amplitudes - ref).cwiseAbs().maxCoeff() <= 1e-6);
    }
}

TEST_CASE("coefficients re-indexing is lossless") {
    auto psi = basis_state(kSpinUp, 1, 5);
    auto c = coefficients(psi);
    CHECK(std::abs(c.a[1] - Complex(1.0)) == 0.0);
    CHECK(c.b.norm() == 0.0);

    auto psi2 = make_initial_state({Complex(0), Complex(1)}, {1.0, 1.0}, 5);
    auto c2 = coefficients(psi2);
    CHECK(c2.a.norm() == 0.0);
    CHECK(std::abs(c2.b[0] - Complex(1.0 / std::sqrt(2.0))) < 1e-14);

    // round trip with make_initial_state
    std::mt19937 rng(47);
    auto psi3 = make_initial_state({Complex(0.6, 0.1), Complex(0.2, -0.7)},
                                   {0.5, 0.3, 0.2}, 5);
    auto c3 = coefficients(psi3);
    for (int n = 0; n < 5; ++n) {
        CHECK(c3.a[n] == psi3.at(kSpinUp, n));
        CHECK(c3.b[n] == psi3.at(kSpinDown, n));
    }
    (void)rng;
}

TEST_CASE("truncation check") {
    SubsystemParams p;

    SUBCASE("g = 0 has zero leakage") {
        SubsystemParams p0 = p;
        p0.coupling = 0.0;
        auto psi0 = basis_state(kSpinDown, 0, p0.n_fock);
        auto rep = truncation_check(p0, psi0, 50.0, 2);
        CHECK(rep.max_leakage == 0.0);
        CHECK(rep.pass);
    }

    SUBCASE("paper parameters pass with n_fock = 10") {
        auto psi0 = basis_state(kSpinDown, 0, p.n_fock);
        auto rep = truncation_check(p, psi0, 100.0, 2);
        CHECK(rep.max_leakage <= 0.01);
        CHECK(rep.pass);
    }

    SUBCASE("n_fock = 2 leaks more than n_fock = 10") {
        auto psi0_small = basis_state(kSpinDown, 0, 2);
        SubsystemParams p2 = p;
        p2.n_fock = 2;
        auto rep2 = truncation_check(p2, psi0_small, 100.0, 2);
        auto psi0 = basis_state(kSpinDown, 0, p.n_fock);
        auto rep10 = truncation_check(p, psi0, 100.0, 2);
        CHECK(rep2.max_leakage > rep10.max_leakage);
    }

    SUBCASE("factor below 2 is rejected") {
        auto psi0 = basis_state(kSpinDown, 0, p.n_fock);
        CHECK_THROWS_AS(truncation_check(p, psi0, 10.0, 1), InvalidParameter);
    }
}
