#include "prymlab/fp.hpp"

#include <stdexcept>

namespace prymlab {

namespace {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || p >= (1ULL << 31) || !is_prime_u64(p))
        throw std::invalid_argument("field modulus must be an odd prime below 2^31");
}

std::uint64_t PrimeField::reduce_signed(std::int64_t v) const {
    const std::int64_t m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = a + b;
    if (r >= p_) r -= p_;
    return r;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }

std::uint64_t PrimeField::neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const { return pow_mod(a, e, p_); }

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("division by zero in prime field");
    return pow_mod(a, p_ - 2, p_);
}

int PrimeField::legendre(std::uint64_t a) const {
    a %= p_;
    if (a == 0) return 0;
    return pow_mod(a, (p_ - 1) / 2, p_) == 1 ? 1 : -1;
}

std::optional<std::uint64_t> PrimeField::sqrt(std::uint64_t a) const {
    a %= p_;
    if (a == 0) return 0;
    if (legendre(a) != 1) return std::nullopt;

    std::uint64_t r;
    if (p_ % 4 == 3) {
        r = pow_mod(a, (p_ + 1) / 4, p_);
    } else {
        // Tonelli-Shanks: write p - 1 = q * 2^s with q odd.
        std::uint64_t q = p_ - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        std::uint64_t z = 2;
        while (legendre(z) != -1) ++z;
        std::uint64_t m = s;
        std::uint64_t c = pow_mod(z, q, p_);
        std::uint64_t t = pow_mod(a, q, p_);
        r = pow_mod(a, (q + 1) / 2, p_);
        while (t != 1) {
            std::uint64_t i = 0;
            std::uint64_t t2 = t;
            while (t2 != 1) {
                t2 = t2 * t2 % p_;
                ++i;
                if (i == m) throw std::logic_error("Tonelli-Shanks order overflow");
            }
            std::uint64_t b = c;
            for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b % p_;
            m = i;
            c = b * b % p_;
            t = t * c % p_;
            r = r * b % p_;
        }
    }
    return std::min(r, p_ - r);
}

} // namespace prymlab
