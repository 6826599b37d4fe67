#pragma once

#include "prymlab/fp.hpp"

#include <cstdint>
#include <vector>

namespace prymlab {

// Dense polynomial over a prime field, coeffs[i] = coefficient of x^i, always
// normalized: no trailing zeros, so the zero polynomial is the empty vector.
using Poly = std::vector<std::uint64_t>;

namespace poly {

inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }
inline bool is_zero(const Poly& a) { return a.empty(); }

Poly trim(Poly a);
Poly constant(const PrimeField& F, std::uint64_t c);
Poly from_roots(const PrimeField& F, const std::vector<std::uint64_t>& roots); // monic
Poly add(const PrimeField& F, const Poly& a, const Poly& b);
Poly sub(const PrimeField& F, const Poly& a, const Poly& b);
Poly mul(const PrimeField& F, const Poly& a, const Poly& b);
Poly scale(const PrimeField& F, const Poly& a, std::uint64_t c);
Poly neg(const PrimeField& F, const Poly& a);
Poly monic(const PrimeField& F, const Poly& a); // a != 0

// Euclidean division by a nonzero divisor: a = q*b + r with deg r < deg b.
struct DivModResult {
    Poly quot;
    Poly rem;
};
DivModResult divmod(const PrimeField& F, const Poly& a, const Poly& b);
Poly mod(const PrimeField& F, const Poly& a, const Poly& b);
bool divides(const PrimeField& F, const Poly& a, const Poly& b); // a | b

// Monic gcd, and the extended version d = s*a + t*b with d monic (d = 0 iff both zero).
Poly gcd(const PrimeField& F, Poly a, Poly b);
struct XgcdResult {
    Poly d;
    Poly s;
    Poly t;
};
XgcdResult xgcd(const PrimeField& F, const Poly& a, const Poly& b);

std::uint64_t eval(const PrimeField& F, const Poly& a, std::uint64_t x);

} // namespace poly
} // namespace prymlab
