#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prymlab {

// Half-integer theta characteristic of genus g, stored doubled: bit i of top is the
// i-th entry of 2*lambda' and bit i of bottom the i-th entry of 2*lambda'', both in F_2.
// Addition is coordinatewise XOR; these are the 2-torsion points of a g-dimensional
// principally polarized abelian variety written in a symplectic basis, with
// (1/2)a_i <-> (top 0, bottom e_i) and (1/2)b_i <-> (top e_i, bottom 0).
struct Characteristic2 {
    int g = 0;
    std::uint32_t top = 0;
    std::uint32_t bottom = 0;

    Characteristic2() = default;
    Characteristic2(int genus, std::uint32_t top_bits, std::uint32_t bottom_bits);

    static Characteristic2 zero(int genus) { return Characteristic2(genus, 0, 0); }

    int top_bit(int i) const;
    int bottom_bit(int i) const;
    bool is_zero() const { return top == 0 && bottom == 0; }

    Characteristic2 operator+(const Characteristic2& rhs) const;

    bool operator==(const Characteristic2& rhs) const = default;
    // Lexicographic on the top vector, then the bottom vector, entry 0 most significant.
    bool operator<(const Characteristic2& rhs) const;

    // "g:top/bottom" with entry 0 written first, e.g. "2:10/01".
    std::string to_string() const;
    static Characteristic2 parse(const std::string& text);
};

// Weyl pairing e_2(a,b) = a'.b'' + b'.a'' in F_2 (doubled coordinates). Symplectic,
// nondegenerate; the commutator pairing of the theta group.
int weyl_pairing(const Characteristic2& a, const Characteristic2& b);

// Standard quadratic form q(c) = (2c').(2c'') mod 2; its Arf invariant is 0, so it has
// 2^(g-1) * (2^g + 1) zeros among the 4^g characteristics.
int q_std(const Characteristic2& c);

// q(c) = q_std(c + shift) + constant. Every even or odd theta characteristic form on the
// 2-torsion arises this way; translating a symmetric theta divisor translates the shift.
struct QuadraticFormF2 {
    int g = 0;
    Characteristic2 shift;
    int constant = 0;

    QuadraticFormF2() = default;
    explicit QuadraticFormF2(const Characteristic2& shift_char, int constant_term = 0);

    static QuadraticFormF2 standard(int genus) {
        return QuadraticFormF2(Characteristic2::zero(genus), 0);
    }
};

int form_eval(const QuadraticFormF2& q, const Characteristic2& c);

// Form of the divisor translated by a: q'(c) = q(c + a) + q(a). The result is always
// normalized, q'(0) = 0; concretely (shift, constant) -> (shift + a, q_std(shift + a)).
// On normalized forms (constant = q_std(shift)) translation by a is an involution.
QuadraticFormF2 form_translate(const QuadraticFormF2& q, const Characteristic2& a);

// All 4^g characteristics in lexicographic order (top vector major, entry 0 most
// significant). Practical bound g <= 10.
std::vector<Characteristic2> enumerate_torsion(int g);

} // namespace prymlab
