#include "prymlab/hyperjac.hpp"

#include <algorithm>
#include <bit>

namespace prymlab {

namespace {

std::vector<std::uint64_t> sorted_reduced_distinct(const PrimeField& F, std::vector<std::uint64_t> xs) {
    for (auto& x : xs) x %= F.modulus();
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
        throw std::invalid_argument("branch points must be distinct mod p");
    return xs;
}

} // namespace

std::optional<std::uint64_t> MoebiusChange::to_model(const PrimeField& F,
                                                     std::optional<std::uint64_t> original) const {
    if (!applied) return original;
    if (!original.has_value()) return 0; // infinity -> 0
    const std::uint64_t x = *original % F.modulus();
    if (x == pivot) return std::nullopt;
    return F.inv(F.sub(x, pivot));
}

std::optional<std::uint64_t> MoebiusChange::to_original(const PrimeField& F,
                                                        std::optional<std::uint64_t> model) const {
    if (!applied) return model;
    if (!model.has_value()) return pivot;
    const std::uint64_t t = *model % F.modulus();
    if (t == 0) return std::nullopt; // 0 -> infinity
    return F.add(pivot, F.inv(t));
}

HyperellipticCurve::HyperellipticCurve(std::uint64_t p, std::vector<std::uint64_t> branch_xs)
    : F_(p) {
    original_branch_ = sorted_reduced_distinct(F_, std::move(branch_xs));
    const std::size_t n = original_branch_.size();
    if (n < 3) throw std::invalid_argument("need at least 3 branch points for genus >= 1");

    if (n % 2 == 1) {
        branch_ = original_branch_;
    } else {
        // Even branch set: pivot the first point whose cofactor K = prod (b* - b) is a
        // square, so the monic odd model is F_p-isomorphic (not a quadratic twist).
        bool found = false;
        for (std::uint64_t pivot : original_branch_) {
            std::uint64_t K = 1;
            for (std::uint64_t b : original_branch_)
                if (b != pivot) K = F_.mul(K, F_.sub(pivot, b));
            if (F_.legendre(K) != 1) continue;
            change_ = MoebiusChange{true, pivot};
            branch_.clear();
            for (std::uint64_t b : original_branch_)
                if (b != pivot) branch_.push_back(*change_.to_model(F_, b));
            std::sort(branch_.begin(), branch_.end());
            found = true;
            break;
        }
        if (!found)
            throw NormalizationError("no branch point gives a square cofactor; curve has no odd model over F_p");
    }

    genus_ = static_cast<int>((branch_.size() - 1) / 2);
    f_ = poly::from_roots(F_, branch_);
}

bool HyperellipticCurve::on_curve(const CurvePoint& pt) const {
    if (pt.at_infinity) return true;
    if (pt.x >= F_.modulus() || pt.y >= F_.modulus()) return false;
    return F_.mul(pt.y, pt.y) == poly::eval(F_, f_, pt.x);
}

bool is_reduced(const HyperellipticCurve& C, const MumfordDivisor& D) {
    const PrimeField& F = C.field();
    if (poly::is_zero(D.u) || D.u.back() != 1) return false;
    if (poly::deg(D.u) > C.genus()) return false;
    if (!poly::is_zero(D.v) && poly::deg(D.v) >= poly::deg(D.u)) return false;
    const Poly w = poly::sub(F, poly::mul(F, D.v, D.v), C.f());
    return poly::divides(F, D.u, w);
}

MumfordDivisor cantor_neg(const HyperellipticCurve& C, const MumfordDivisor& a) {
    if (!is_reduced(C, a)) throw std::invalid_argument("divisor is not reduced");
    return MumfordDivisor{a.u, poly::neg(C.field(), a.v)};
}

MumfordDivisor cantor_add(const HyperellipticCurve& C, const MumfordDivisor& a, const MumfordDivisor& b) {
    if (!is_reduced(C, a) || !is_reduced(C, b)) throw std::invalid_argument("divisor is not reduced");
    const PrimeField& F = C.field();
    const Poly& f = C.f();

    // Composition (Cantor): d = gcd(u1, u2, v1 + v2) = s1*u1 + s2*u2 + s3*(v1+v2).
    const poly::XgcdResult g1 = poly::xgcd(F, a.u, b.u);
    const Poly vsum = poly::add(F, a.v, b.v);
    const poly::XgcdResult g2 = poly::xgcd(F, g1.d, vsum);
    const Poly s1 = poly::mul(F, g2.s, g1.s);
    const Poly s2 = poly::mul(F, g2.s, g1.t);
    const Poly& s3 = g2.t;
    const Poly& d = g2.d;

    Poly u = poly::divmod(F, poly::mul(F, a.u, b.u), poly::mul(F, d, d)).quot;
    Poly t = poly::add(F, poly::add(F, poly::mul(F, s1, poly::mul(F, a.u, b.v)),
                                    poly::mul(F, s2, poly::mul(F, b.u, a.v))),
                       poly::mul(F, s3, poly::add(F, poly::mul(F, a.v, b.v), f)));
    Poly v = poly::mod(F, poly::divmod(F, t, d).quot, u);

    // Reduction.
    while (poly::deg(u) > C.genus()) {
        u = poly::divmod(F, poly::sub(F, f, poly::mul(F, v, v)), u).quot;
        u = poly::monic(F, u);
        v = poly::mod(F, poly::neg(F, v), u);
    }
    return MumfordDivisor{poly::monic(F, u), v};
}

MumfordDivisor divisor_of_point(const HyperellipticCurve& C, const CurvePoint& pt) {
    if (pt.at_infinity) return MumfordDivisor::identity();
    if (!C.on_curve(pt)) throw std::invalid_argument("point is not on the curve");
    const PrimeField& F = C.field();
    MumfordDivisor D;
    D.u = Poly{F.neg(pt.x), 1};
    D.v = pt.y == 0 ? Poly{} : Poly{pt.y};
    return D;
}

bool is_on_abel_image(const HyperellipticCurve& C, const MumfordDivisor& D) {
    if (!is_reduced(C, D)) throw std::invalid_argument("divisor is not reduced");
    return poly::deg(D.u) <= 1;
}

std::optional<CurvePoint> lift_from_abel_image(const HyperellipticCurve& C, const MumfordDivisor& D) {
    if (!is_reduced(C, D)) throw std::invalid_argument("divisor is not reduced");
    if (poly::deg(D.u) > 1) return std::nullopt;
    if (poly::deg(D.u) == 0) return CurvePoint::infinity();
    const PrimeField& F = C.field();
    const std::uint64_t x0 = F.neg(D.u[0]);
    const std::uint64_t y0 = D.v.empty() ? 0 : D.v[0];
    const CurvePoint pt = CurvePoint::affine(x0, y0);
    if (!C.on_curve(pt)) return std::nullopt;
    return pt;
}

std::vector<CurvePoint> weierstrass_points(const HyperellipticCurve& C) {
    std::vector<CurvePoint> pts;
    for (std::uint64_t b : C.branch_xs()) pts.push_back(CurvePoint::affine(b, 0));
    pts.push_back(CurvePoint::infinity());
    return pts;
}

TwoTorsionClass two_torsion_class(const HyperellipticCurve& C, std::vector<std::uint64_t> finite_xs,
                                  bool include_infinity) {
    const auto& branch = C.branch_xs();
    std::vector<std::uint64_t> xs = sorted_reduced_distinct(C.field(), std::move(finite_xs));
    for (std::uint64_t x : xs)
        if (!std::binary_search(branch.begin(), branch.end(), x))
            throw std::invalid_argument("subset member is not a branch point");
    if ((xs.size() + (include_infinity ? 1 : 0)) % 2 != 0)
        throw std::invalid_argument("two-torsion subsets must have even size");

    if (xs.size() > static_cast<std::size_t>(C.genus())) {
        std::vector<std::uint64_t> comp;
        std::set_difference(branch.begin(), branch.end(), xs.begin(), xs.end(), std::back_inserter(comp));
        xs = std::move(comp);
    }
    return TwoTorsionClass{std::move(xs)};
}

TwoTorsionClass two_torsion_sum(const HyperellipticCurve& C, const TwoTorsionClass& a,
                                const TwoTorsionClass& b) {
    std::vector<std::uint64_t> sym;
    std::set_symmetric_difference(a.finite_part.begin(), a.finite_part.end(), b.finite_part.begin(),
                                  b.finite_part.end(), std::back_inserter(sym));
    const bool inf = (a.finite_part.size() % 2) != (b.finite_part.size() % 2);
    return two_torsion_class(C, std::move(sym), inf);
}

MumfordDivisor two_torsion_from_subset(const HyperellipticCurve& C, const TwoTorsionClass& cls) {
    if (cls.finite_part.size() > static_cast<std::size_t>(C.genus()))
        throw std::invalid_argument("two-torsion class is not canonical");
    MumfordDivisor D;
    D.u = poly::from_roots(C.field(), cls.finite_part);
    D.v = Poly{};
    return D;
}

std::vector<TwoTorsionClass> enumerate_two_torsion(const HyperellipticCurve& C) {
    const auto& branch = C.branch_xs();
    const int n = static_cast<int>(branch.size()); // 2*genus + 1
    if (n > 21) throw std::invalid_argument("two-torsion enumeration supports genus <= 10");
    std::vector<TwoTorsionClass> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > C.genus()) continue;
        std::vector<std::uint64_t> xs;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) xs.push_back(branch[i]);
        out.push_back(TwoTorsionClass{std::move(xs)});
    }
    std::sort(out.begin(), out.end(), [](const TwoTorsionClass& x, const TwoTorsionClass& y) {
        return x.finite_part < y.finite_part;
    });
    return out;
}

} // namespace prymlab
