#include "prymlab/char2.hpp"

#include <bit>
#include <stdexcept>

namespace prymlab {

namespace {

constexpr int kMaxGenus = 16;        // mask width limit of the representation
constexpr int kEnumerateMaxGenus = 10; // 4^10 = 2^20 enumeration is still instant

void check_genus(int g) {
    if (g < 1 || g > kMaxGenus)
        throw std::invalid_argument("characteristic genus must be in [1, 16]");
}

int parity(std::uint32_t bits) { return std::popcount(bits) & 1; }

// Lexicographic comparison of F_2^g vectors stored as masks (bit i = entry i):
// the first differing entry decides, entry 0 first.
bool lex_less(std::uint32_t a, std::uint32_t b) {
    std::uint32_t d = a ^ b;
    if (d == 0) return false;
    return (a >> std::countr_zero(d) & 1u) == 0;
}

// Rank r (entry 0 = most significant bit) to mask (bit i = entry i), so that
// increasing rank is lexicographic order on vectors.
std::uint32_t mask_from_rank(std::uint32_t r, int g) {
    std::uint32_t mask = 0;
    for (int i = 0; i < g; ++i)
        if (r >> (g - 1 - i) & 1u) mask |= 1u << i;
    return mask;
}

} // namespace

Characteristic2::Characteristic2(int genus, std::uint32_t top_bits, std::uint32_t bottom_bits)
    : g(genus), top(top_bits), bottom(bottom_bits) {
    check_genus(genus);
    const std::uint32_t allowed = (1u << genus) - 1u;
    if ((top_bits & ~allowed) || (bottom_bits & ~allowed))
        throw std::invalid_argument("characteristic bits exceed genus width");
}

int Characteristic2::top_bit(int i) const {
    if (i < 0 || i >= g) throw std::invalid_argument("characteristic index out of range");
    return top >> i & 1;
}

int Characteristic2::bottom_bit(int i) const {
    if (i < 0 || i >= g) throw std::invalid_argument("characteristic index out of range");
    return bottom >> i & 1;
}

Characteristic2 Characteristic2::operator+(const Characteristic2& rhs) const {
    if (g != rhs.g) throw std::invalid_argument("characteristic genus mismatch");
    return Characteristic2(g, top ^ rhs.top, bottom ^ rhs.bottom);
}

bool Characteristic2::operator<(const Characteristic2& rhs) const {
    if (g != rhs.g) throw std::invalid_argument("characteristic genus mismatch");
    if (top != rhs.top) return lex_less(top, rhs.top);
    return lex_less(bottom, rhs.bottom);
}

std::string Characteristic2::to_string() const {
    std::string s = std::to_string(g);
    s += ':';
    for (int i = 0; i < g; ++i) s += char('0' + (top >> i & 1));
    s += '/';
    for (int i = 0; i < g; ++i) s += char('0' + (bottom >> i & 1));
    return s;
}

Characteristic2 Characteristic2::parse(const std::string& text) {
    const auto colon = text.find(':');
    const auto slash = text.find('/');
    if (colon == std::string::npos || slash == std::string::npos || slash < colon)
        throw std::invalid_argument("characteristic format is g:top/bottom");
    int g = 0;
    try {
        std::size_t used = 0;
        g = std::stoi(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("characteristic genus is not a number");
    }
    check_genus(g);
    const std::string top_s = text.substr(colon + 1, slash - colon - 1);
    const std::string bot_s = text.substr(slash + 1);
    if (static_cast<int>(top_s.size()) != g || static_cast<int>(bot_s.size()) != g)
        throw std::invalid_argument("characteristic bit strings must have length g");
    std::uint32_t top = 0, bottom = 0;
    for (int i = 0; i < g; ++i) {
        if (top_s[i] != '0' && top_s[i] != '1') throw std::invalid_argument("characteristic bits must be 0/1");
        if (bot_s[i] != '0' && bot_s[i] != '1') throw std::invalid_argument("characteristic bits must be 0/1");
        if (top_s[i] == '1') top |= 1u << i;
        if (bot_s[i] == '1') bottom |= 1u << i;
    }
    return Characteristic2(g, top, bottom);
}

int weyl_pairing(const Characteristic2& a, const Characteristic2& b) {
    if (a.g != b.g) throw std::invalid_argument("characteristic genus mismatch");
    return parity(a.top & b.bottom) ^ parity(b.top & a.bottom);
}

int q_std(const Characteristic2& c) { return parity(c.top & c.bottom); }

QuadraticFormF2::QuadraticFormF2(const Characteristic2& shift_char, int constant_term)
    : g(shift_char.g), shift(shift_char), constant(constant_term) {
    if (constant_term != 0 && constant_term != 1)
        throw std::invalid_argument("form constant must be 0 or 1");
}

int form_eval(const QuadraticFormF2& q, const Characteristic2& c) {
    if (q.g != c.g) throw std::invalid_argument("characteristic genus mismatch");
    return q_std(c + q.shift) ^ q.constant;
}

QuadraticFormF2 form_translate(const QuadraticFormF2& q, const Characteristic2& a) {
    if (q.g != a.g) throw std::invalid_argument("characteristic genus mismatch");
    const Characteristic2 shifted = q.shift + a;
    // q'(c) = q(c+a) + q(a) = q_std(c + shift + a) + q_std(shift + a); the old constant
    // cancels, so the result does not depend on it.
    return QuadraticFormF2(shifted, q_std(shifted));
}

std::vector<Characteristic2> enumerate_torsion(int g) {
    check_genus(g);
    if (g > kEnumerateMaxGenus)
        throw std::invalid_argument("enumerate_torsion supports g <= 10");
    const std::uint32_t n = 1u << g;
    std::vector<Characteristic2> out;
    out.reserve(static_cast<std::size_t>(n) * n);
    for (std::uint32_t rt = 0; rt < n; ++rt)
        for (std::uint32_t rb = 0; rb < n; ++rb)
            out.emplace_back(g, mask_from_rank(rt, g), mask_from_rank(rb, g));
    return out;
}

} // namespace prymlab
