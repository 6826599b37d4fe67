#pragma once

#include <complex>
#include <string_view>
#include <utility>

namespace prymlab {

// Legendre curve y^2 = x(x-1)(x-lambda) with the marked two-torsion points
// p1 = (0,0), p2 = (1,0) and the distinguished class mu = cl(p1 - p2). The marking is
// part of the data: it is what the double cover of the moduli space remembers.
struct LegendreCurveWithMarking {
    std::complex<double> lambda;

    static constexpr std::pair<double, double> p1{0.0, 0.0};
    static constexpr std::pair<double, double> p2{1.0, 0.0};
    static constexpr std::string_view mu_class = "cl(p1 - p2)";
};

// lambda(tau) = -theta01(0,tau)^4 / theta10(0,tau)^4. Invariant under the level
// subgroup generated by S: tau -> -1/tau and T^2: tau -> tau + 2.
std::complex<double> lambda_of_tau(std::complex<double> tau, double eps = 1e-12);

// k(tau) = -(theta10^8 + theta01^8) / (theta10^4 * theta01^4) = lambda + 1/lambda.
// Exchanging lambda <-> 1/lambda (the two labelings of the marked points) fixes k,
// so k is the coordinate on the quotient. k(i) = -2.
std::complex<double> k_of_tau(std::complex<double> tau, double eps = 1e-12);

// Inverse of the moduli map on curves: picks the root of lambda^2 - k*lambda + 1 = 0
// with |lambda| >= 1 (ties: larger real part, then larger imaginary part). Rejects
// k in {0, 2} (within 1e-12): k = 2 forces the degenerate lambda = 1.
LegendreCurveWithMarking curve_from_k(std::complex<double> k);

// Inverse period map via the arithmetic-geometric mean: with m = 1/(1 - lambda) the
// modular lambda value, tau = i * AGM(1, sqrt(1-m)) / AGM(1, sqrt(m)). The AGM uses
// the optimal square root branch (|a-b| <= |a+b|), at most 64 iterations, relative
// threshold 1e-14. Throws std::runtime_error on non-convergence or Im(tau) <= 0 and
// std::invalid_argument for lambda in {0, 1}.
std::complex<double> tau_from_lambda(std::complex<double> lambda);

} // namespace prymlab
