#pragma once

#include "prymlab/char2.hpp"

#include <complex>
#include <vector>

namespace prymlab {

using cplx = std::complex<double>;

// Symmetric g x g complex matrix with positive definite imaginary part (a point of the
// Siegel upper half space). Symmetry is checked to 1e-12 entrywise and the matrix is
// symmetrized; positive definiteness is certified by the smallest eigenvalue of Im(tau),
// computed with a cyclic Jacobi sweep and cached.
class PeriodMatrix {
  public:
    PeriodMatrix(int g, std::vector<cplx> row_major_entries);
    static PeriodMatrix diagonal(int g, cplx tau);

    int genus() const { return g_; }
    const cplx& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * g_ + j]; }
    double im_min_eigenvalue() const { return im_lambda_min_; }

  private:
    int g_;
    std::vector<cplx> entries_;
    double im_lambda_min_;
};

// Half-integer characteristic: every entry of top and bottom is 0 or 1/2, carried by the
// doubled F_2 characteristic.
struct RationalCharacteristic {
    Characteristic2 doubled;

    explicit RationalCharacteristic(const Characteristic2& doubled_bits) : doubled(doubled_bits) {}
    int g() const { return doubled.g; }
    double top_at(int i) const { return 0.5 * doubled.top_bit(i); }
    double bottom_at(int i) const { return 0.5 * doubled.bottom_bit(i); }
};

// Smallest box radius R whose certified tail bound is <= eps. Terms with index n,
// m = n + c' (|c'_i| <= 1/2), satisfy |term| <= exp(-pi*lmin*|m|^2 + 2*pi*|m|*s) with
// lmin the smallest eigenvalue of Im(tau) and s = ||Im z||_2; the shell
// {||n||_inf = k} has (2k+1)^g - (2k-1)^g points, each of norm >= k - 1/2. R is accepted
// once the shells beyond R are dominated by a geometric series of ratio <= 1/2 and twice
// the first omitted shell bound is <= eps. The scan accepts the first R, which makes R
// monotone in eps and in lmin by construction. Requires eps in (0,1).
int truncation_radius(const PeriodMatrix& tau, const std::vector<cplx>& z, double eps);

// theta[c](z, tau) = sum over n in Z^g of
//   exp(pi*i*(n+c')tau(n+c')^T + 2*pi*i*(n+c').(z+c'')),
// summed over the certified box ||n||_inf <= truncation_radius(tau, z, eps).
// eps below 1e-13 is clamped to 1e-13 (double precision floor); eps >= 1 is an error.
cplx theta_eval(const RationalCharacteristic& c, const std::vector<cplx>& z,
                const PeriodMatrix& tau, double eps);

// Genus-1 theta constants at z = 0: t00 = theta[0,0], t01 = theta[0,1/2],
// t10 = theta[1/2,0]. theta[1/2,1/2] is identically zero (odd) and not returned.
struct ThetaConstantsG1 {
    cplx t00;
    cplx t01;
    cplx t10;
};
ThetaConstantsG1 theta_constants_g1(cplx tau, double eps);

} // namespace prymlab
