#include "prymlab/poly.hpp"

#include <stdexcept>

namespace prymlab {
namespace poly {

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly constant(const PrimeField& F, std::uint64_t c) {
    c %= F.modulus();
    if (c == 0) return {};
    return {c};
}

Poly from_roots(const PrimeField& F, const std::vector<std::uint64_t>& roots) {
    Poly p{1};
    for (std::uint64_t r : roots) {
        // multiply by (x - r)
        Poly next(p.size() + 1, 0);
        const std::uint64_t nr = F.neg(r % F.modulus());
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 1] = F.add(next[i + 1], p[i]);
            next[i] = F.add(next[i], F.mul(p[i], nr));
        }
        p = std::move(next);
    }
    return p;
}

Poly add(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t v = 0;
        if (i < a.size()) v = a[i];
        if (i < b.size()) v = F.add(v, b[i]);
        r[i] = v;
    }
    return trim(std::move(r));
}

Poly sub(const PrimeField& F, const Poly& a, const Poly& b) { return add(F, a, neg(F, b)); }

Poly mul(const PrimeField& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return trim(std::move(r));
}

Poly scale(const PrimeField& F, const Poly& a, std::uint64_t c) {
    c %= F.modulus();
    if (c == 0) return {};
    Poly r = a;
    for (auto& v : r) v = F.mul(v, c);
    return r;
}

Poly neg(const PrimeField& F, const Poly& a) {
    Poly r = a;
    for (auto& v : r) v = F.neg(v);
    return r;
}

Poly monic(const PrimeField& F, const Poly& a) {
    if (a.empty()) throw std::domain_error("monic of zero polynomial");
    return scale(F, a, F.inv(a.back()));
}

DivModResult divmod(const PrimeField& F, const Poly& a, const Poly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    Poly rem = a;
    Poly quot(a.size() - b.size() + 1, 0);
    const std::uint64_t lead_inv = F.inv(b.back());
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        const std::uint64_t c = F.mul(rem[shift + b.size() - 1], lead_inv);
        if (c == 0) continue;
        quot[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            rem[shift + j] = F.sub(rem[shift + j], F.mul(c, b[j]));
    }
    return {trim(std::move(quot)), trim(std::move(rem))};
}

Poly mod(const PrimeField& F, const Poly& a, const Poly& b) { return divmod(F, a, b).rem; }

bool divides(const PrimeField& F, const Poly& a, const Poly& b) {
    if (a.empty()) return b.empty();
    return mod(F, b, a).empty();
}

Poly gcd(const PrimeField& F, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return monic(F, a);
}

XgcdResult xgcd(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly r0 = trim(a), r1 = trim(b);
    Poly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        DivModResult qr = divmod(F, r0, r1);
        Poly r2 = qr.rem;
        Poly s2 = sub(F, s0, mul(F, qr.quot, s1));
        Poly t2 = sub(F, t0, mul(F, qr.quot, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {r0, {}, {}};
    const std::uint64_t c = F.inv(r0.back());
    return {scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)};
}

std::uint64_t eval(const PrimeField& F, const Poly& a, std::uint64_t x) {
    std::uint64_t r = 0;
    x %= F.modulus();
    for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
    return r;
}

} // namespace poly
} // namespace prymlab
