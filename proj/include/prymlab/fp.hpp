#pragma once

#include <cstdint>
#include <optional>

namespace prymlab {

// Deterministic Miller-Rabin for n < 2^31 (the witness set is valid far beyond).
bool is_prime_u64(std::uint64_t n);

// Arithmetic mod an odd prime p with 3 <= p < 2^31; elements are canonical residues in
// [0, p). Products of residues fit in uint64_t, so no widening tricks are needed.
class PrimeField {
  public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    std::uint64_t reduce_signed(std::int64_t v) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const; // a != 0

    // Legendre symbol: 1 for nonzero squares, -1 for non-squares, 0 for 0.
    int legendre(std::uint64_t a) const;

    // Tonelli-Shanks; returns the canonical root min(r, p - r), or nullopt for
    // non-squares. sqrt(0) = 0.
    std::optional<std::uint64_t> sqrt(std::uint64_t a) const;

  private:
    std::uint64_t p_;
};

} // namespace prymlab
