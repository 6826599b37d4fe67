#include "prymlab/genus1.hpp"

#include "prymlab/theta.hpp"

#include <cmath>
#include <stdexcept>

namespace prymlab {

namespace {

cplx pow4(cplx v) {
    const cplx v2 = v * v;
    return v2 * v2;
}

// Optimal-branch AGM: the square root sign is chosen so the iterates stay in the same
// half plane, which keeps the sequence quadratically convergent off the slit.
cplx agm(cplx a, cplx b) {
    for (int it = 0; it < 64; ++it) {
        if (std::abs(a - b) <= 1e-14 * std::abs(a)) return a;
        const cplx a1 = 0.5 * (a + b);
        cplx b1 = std::sqrt(a * b);
        if (std::abs(a1 - b1) > std::abs(a1 + b1)) b1 = -b1;
        a = a1;
        b = b1;
    }
    throw std::runtime_error("AGM did not converge");
}

} // namespace

cplx lambda_of_tau(cplx tau, double eps) {
    const ThetaConstantsG1 t = theta_constants_g1(tau, eps);
    return -pow4(t.t01) / pow4(t.t10);
}

cplx k_of_tau(cplx tau, double eps) {
    const ThetaConstantsG1 t = theta_constants_g1(tau, eps);
    const cplx a = pow4(t.t10);
    const cplx b = pow4(t.t01);
    return -(a * a + b * b) / (a * b);
}

LegendreCurveWithMarking curve_from_k(cplx k) {
    if (std::abs(k) < 1e-12 || std::abs(k - cplx(2, 0)) < 1e-12)
        throw std::invalid_argument("k must avoid {0, 2}");
    // Roots of lambda^2 - k*lambda + 1; they multiply to 1, so exactly one has
    // |lambda| >= 1 unless both sit on the unit circle.
    const cplx disc = std::sqrt(k * k - cplx(4, 0));
    const cplx r1 = 0.5 * (k + disc);
    const cplx r2 = 0.5 * (k - disc);
    auto better = [](const cplx& a, const cplx& b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (std::abs(ma - mb) > 1e-14 * (ma + mb)) return ma > mb;
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    };
    return LegendreCurveWithMarking{better(r1, r2) ? r1 : r2};
}

cplx tau_from_lambda(cplx lambda) {
    if (std::abs(lambda) < 1e-14 || std::abs(lambda - cplx(1, 0)) < 1e-14)
        throw std::invalid_argument("lambda must avoid {0, 1}");
    // Modular lambda value of the same curve: m = theta10^4/theta00^4 = 1/(1 - lambda).
    const cplx m = cplx(1, 0) / (cplx(1, 0) - lambda);
    const cplx tau = cplx(0, 1) * agm(cplx(1, 0), std::sqrt(cplx(1, 0) - m)) /
                     agm(cplx(1, 0), std::sqrt(m));
    if (!(tau.imag() > 0)) throw std::runtime_error("period computation left the upper half plane");
    return tau;
}

} // namespace prymlab
