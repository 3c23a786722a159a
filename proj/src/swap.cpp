#include "qswap/swap.hpp"

#include <cmath>

namespace qswap {

namespace {

double norm_sq_of(const std::array<Complex, 4>& amps) {
    double s = 0.0;
    for (const auto& c : amps) s += std::norm(c);
    return s;
}

void require_normalized(const TwoQubitState& s) {
    if (!s.normalized ||
        std::abs(norm_sq_of(s.amps) - 1.0) > 1e-10)
        throw ContractViolation("concurrence requires a normalized state");
}

}  // namespace

BsmOutcome bsm_project(const CoefficientTable& c1, const CoefficientTable& c2) {
    if (c1.n_fock() < 2 || c2.n_fock() < 2)
        throw InvalidParameter("coefficient tables need Fock levels 0 and 1");

    const Complex a0 = c1.a[0], a1 = c1.a[1], b0 = c1.b[0], b1 = c1.b[1];
    const Complex ta0 = c2.a[0], ta1 = c2.a[1], tb0 = c2.b[0], tb1 = c2.b[1];

    BsmOutcome out;
    out.state.amps[kUpUp] = a0 * ta1 - a1 * ta0;
    out.state.amps[kUpDown] = a0 * tb1 - a1 * tb0;
    out.state.amps[kDownUp] = b0 * ta1 - b1 * ta0;
    out.state.amps[kDownDown] = b0 * tb1 - b1 * tb0;
    out.state.norm_sq = norm_sq_of(out.state.amps);
    out.state.normalized = false;
    out.success_prob = 0.5 * out.state.norm_sq;
    return out;
}

TwoQubitState normalize(const TwoQubitState& s) {
    const double n2 = norm_sq_of(s.amps);
    if (n2 <= 0.0)
        throw ContractViolation("cannot normalize a zero two-qubit state");
    TwoQubitState out = s;
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& c : out.amps) c *= inv;
    out.norm_sq = s.norm_sq;
    out.normalized = true;
    return out;
}

double concurrence_pure(const TwoQubitState& s) {
    require_normalized(s);
    const auto& c = s.amps;
    return 2.0 * std::abs(c[kUpUp] * c[kDownDown] - c[kUpDown] * c[kDownUp]);
}

double concurrence_magic_basis(const TwoQubitState& s) {
    require_normalized(s);
    const Complex i(0.0, 1.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const auto& c = s.amps;
    // Coefficients alpha_i = <e_i|psi> in the magic basis
    //   e1 = (|uu> + |dd>)/sqrt2,    e2 = i(|uu> - |dd>)/sqrt2,
    //   e3 = i(|du> + |ud>)/sqrt2,   e4 = (|du> - |ud>)/sqrt2.
    const Complex alpha1 = inv_sqrt2 * (c[kUpUp] + c[kDownDown]);
    const Complex alpha2 = -i * inv_sqrt2 * (c[kUpUp] - c[kDownDown]);
    const Complex alpha3 = -i * inv_sqrt2 * (c[kDownUp] + c[kUpDown]);
    const Complex alpha4 = inv_sqrt2 * (c[kDownUp] - c[kUpDown]);
    return std::abs(alpha1 * alpha1 + alpha2 * alpha2 + alpha3 * alpha3 +
                    alpha4 * alpha4);
}

double concurrence_spin_flip(const TwoQubitState& s) {
    require_normalized(s);
    const auto& c = s.amps;
    // <psi|sigma_y (x) sigma_y|psi*> = 2 (c_ud c_du - c_uu c_dd), taking
    // conjugates into the flipped ket.
    const Complex overlap =
        2.0 * (c[kUpDown] * c[kDownUp] - c[kUpUp] * c[kDownDown]);
    return std::abs(overlap);
}

SwapResult swap_at(const Propagator& prop1, const Propagator& prop2,
                   const StateVector& psi1, const StateVector& psi2, double t,
                   double eps_bsm) {
    const CoefficientTable c1 = coefficients(propagate(prop1, psi1, t));
    const CoefficientTable c2 = coefficients(propagate(prop2, psi2, t));
    const BsmOutcome outcome = bsm_project(c1, c2);

    SwapResult result;
    result.success_prob = outcome.success_prob;
    if (outcome.success_prob >= eps_bsm)
        result.concurrence = concurrence_pure(normalize(outcome.state));
    return result;
}

}  // namespace qswap
