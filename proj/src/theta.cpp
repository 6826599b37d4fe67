#include "prymlab/theta.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace prymlab {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxGenus = 10;
constexpr int kMaxRadius = 2000;
constexpr double kMaxBoxTerms = 5e7;

// Cyclic Jacobi on a small symmetric matrix; returns the smallest eigenvalue.
// Plenty for g <= 10; avoids dragging a linear algebra dependency into the core.
double symmetric_min_eigenvalue(int n, std::vector<double> a) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-28) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    double mn = at(0, 0);
    for (int i = 1; i < n; ++i) mn = std::min(mn, at(i, i));
    return mn;
}

double im_z_norm(const std::vector<cplx>& z) {
    double s2 = 0;
    for (const cplx& v : z) s2 += v.imag() * v.imag();
    return std::sqrt(s2);
}

// (2k+1)^g - (2k-1)^g, the number of lattice points on the inf-norm shell of radius k.
double shell_count(int k, int g) {
    return std::pow(2.0 * k + 1, g) - std::pow(2.0 * k - 1, g);
}

} // namespace

PeriodMatrix::PeriodMatrix(int g, std::vector<cplx> row_major_entries)
    : g_(g), entries_(std::move(row_major_entries)) {
    if (g < 1 || g > kMaxGenus) throw std::invalid_argument("period matrix genus must be in [1, 10]");
    if (entries_.size() != static_cast<std::size_t>(g) * g)
        throw std::invalid_argument("period matrix needs g*g entries");
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j) {
            const cplx d = entries_[static_cast<std::size_t>(i) * g + j] -
                           entries_[static_cast<std::size_t>(j) * g + i];
            if (std::abs(d) > 1e-12) throw std::invalid_argument("period matrix is not symmetric");
            const cplx avg = 0.5 * (entries_[static_cast<std::size_t>(i) * g + j] +
                                    entries_[static_cast<std::size_t>(j) * g + i]);
            entries_[static_cast<std::size_t>(i) * g + j] = avg;
            entries_[static_cast<std::size_t>(j) * g + i] = avg;
        }
    std::vector<double> im(static_cast<std::size_t>(g) * g);
    for (std::size_t k = 0; k < im.size(); ++k) im[k] = entries_[k].imag();
    im_lambda_min_ = symmetric_min_eigenvalue(g, std::move(im));
    if (!(im_lambda_min_ > 0))
        throw std::domain_error("period matrix imaginary part is not positive definite");
}

PeriodMatrix PeriodMatrix::diagonal(int g, cplx tau) {
    std::vector<cplx> e(static_cast<std::size_t>(g) * g, cplx(0, 0));
    for (int i = 0; i < g; ++i) e[static_cast<std::size_t>(i) * g + i] = tau;
    return PeriodMatrix(g, std::move(e));
}

int truncation_radius(const PeriodMatrix& tau, const std::vector<cplx>& z, double eps) {
    const int g = tau.genus();
    if (z.size() != static_cast<std::size_t>(g))
        throw std::invalid_argument("argument vector length must equal the genus");
    if (!(eps > 0) || !(eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");

    const double lmin = tau.im_min_eigenvalue();
    const double s = im_z_norm(z);
    const double ratio_cap = std::pow(5.0 / 3.0, g);

    for (int R = 1; R <= kMaxRadius; ++R) {
        const double r1 = R + 0.5; // smallest possible |n + c'| in the first omitted shell
        if (r1 * lmin < s) continue;
        // consecutive-shell ratio <= (5/3)^g * exp(-2*pi*lmin*k + 2*pi*s) at k = R+1
        if (ratio_cap * std::exp(-2 * kPi * lmin * (R + 1) + 2 * kPi * s) > 0.5) continue;
        const double first_omitted =
            shell_count(R + 1, g) * std::exp(-kPi * lmin * r1 * r1 + 2 * kPi * s * r1);
        if (2 * first_omitted <= eps) return R;
    }
    throw std::runtime_error("truncation radius exceeds hard cap; eps unreachable");
}

cplx theta_eval(const RationalCharacteristic& c, const std::vector<cplx>& z,
                const PeriodMatrix& tau, double eps) {
    const int g = tau.genus();
    if (c.g() != g) throw std::invalid_argument("characteristic genus mismatch");
    if (z.size() != static_cast<std::size_t>(g))
        throw std::invalid_argument("argument vector length must equal the genus");
    if (!(eps < 1)) throw std::invalid_argument("eps must be below 1");
    const double eff_eps = std::max(eps, 1e-13);

    const int R = truncation_radius(tau, z, eff_eps);
    const double box = std::pow(2.0 * R + 1, g);
    if (box > kMaxBoxTerms) throw std::runtime_error("truncation box too large to sum");

    std::vector<double> m(g);   // n + c'
    std::vector<int> n(g, -R);
    cplx sum(0, 0);
    const cplx two_pi_i(0, 2 * kPi);
    const cplx pi_i(0, kPi);
    while (true) {
        for (int i = 0; i < g; ++i) m[i] = n[i] + c.top_at(i);
        cplx quad(0, 0);
        for (int i = 0; i < g; ++i) {
            quad += tau.at(i, i) * m[i] * m[i];
            for (int j = i + 1; j < g; ++j) quad += 2.0 * tau.at(i, j) * m[i] * m[j];
        }
        cplx lin(0, 0);
        for (int i = 0; i < g; ++i) lin += m[i] * (z[i] + c.bottom_at(i));
        sum += std::exp(pi_i * quad + two_pi_i * lin);

        int k = g - 1;
        while (k >= 0 && n[k] == R) n[k--] = -R;
        if (k < 0) break;
        ++n[k];
    }
    return sum;
}

ThetaConstantsG1 theta_constants_g1(cplx tau, double eps) {
    const PeriodMatrix pm(1, {tau});
    const std::vector<cplx> z{cplx(0, 0)};
    ThetaConstantsG1 out;
    out.t00 = theta_eval(RationalCharacteristic(Characteristic2(1, 0, 0)), z, pm, eps);
    out.t01 = theta_eval(RationalCharacteristic(Characteristic2(1, 0, 1)), z, pm, eps);
    out.t10 = theta_eval(RationalCharacteristic(Characteristic2(1, 1, 0)), z, pm, eps);
    return out;
}

} // namespace prymlab
