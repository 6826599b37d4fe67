#include "prymlab/covering.hpp"

#include <algorithm>
#include <stdexcept>

namespace prymlab {

namespace {

constexpr int kClassifyMaxGenus = 4; // keeps genus_tilde enumeration at 4^7

// Duplicate a (g-1)-bit tail t into coordinates 1..g-1 and g..2g-2 of a width-(2g-1) mask.
std::uint32_t duplicate_tail(std::uint32_t t, int g) {
    return (t << 1) | (t << g);
}

std::uint32_t tail_low(std::uint32_t m, int g) { return (m >> 1) & ((1u << (g - 1)) - 1u); }
std::uint32_t tail_high(std::uint32_t m, int g) { return (m >> g) & ((1u << (g - 1)) - 1u); }

std::vector<Characteristic2> sorted_unique(std::vector<Characteristic2> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

CoverContext::CoverContext(int g) : g_(g) {
    if (g < 2) throw std::invalid_argument("cover context requires g >= 2");
    if (g > 5) throw std::invalid_argument("cover context supports g <= 5");

    std::vector<Characteristic2> pullback_image;
    for (const auto& c : enumerate_torsion(g_)) pullback_image.push_back(pullback_char(*this, c));
    pullback_image = sorted_unique(pullback_image);

    const Characteristic2 lambda1(genus_tilde(), 0, 1);
    b2_ = pullback_image;
    for (const auto& c : pullback_image) b2_.push_back(lambda1 + c);
    b2_ = sorted_unique(b2_);

    for (const auto& c : enumerate_torsion(g_ - 1)) p2_.push_back(prym_embed_char(*this, c));
    p2_ = sorted_unique(p2_);
}

bool CoverContext::in_B2(const Characteristic2& c) const {
    return std::binary_search(b2_.begin(), b2_.end(), c);
}

bool CoverContext::in_P2(const Characteristic2& c) const {
    return std::binary_search(p2_.begin(), p2_.end(), c);
}

Characteristic2 CoverContext::eta() const { return Characteristic2(g_, 0, 1); }

QuadraticFormF2 CoverContext::q0() const {
    return QuadraticFormF2(Characteristic2(genus_tilde(), 0, 1), 0);
}

Characteristic2 pullback_char(const CoverContext& ctx, const Characteristic2& c) {
    const int g = ctx.genus();
    if (c.g != g) throw std::invalid_argument("pullback_char expects a genus-g characteristic");
    const std::uint32_t top = (c.top & 1u) | duplicate_tail(tail_low(c.top, g), g);
    // The distinguished bottom coordinate doubles to an integer, so it vanishes mod 2.
    const std::uint32_t bottom = duplicate_tail(tail_low(c.bottom, g), g);
    return Characteristic2(ctx.genus_tilde(), top, bottom);
}

Characteristic2 norm_char(const CoverContext& ctx, const Characteristic2& c) {
    const int g = ctx.genus();
    if (c.g != ctx.genus_tilde())
        throw std::invalid_argument("norm_char expects a genus-(2g-1) characteristic");
    const std::uint32_t top = (tail_low(c.top, g) ^ tail_high(c.top, g)) << 1;
    const std::uint32_t bottom = (c.bottom & 1u) | ((tail_low(c.bottom, g) ^ tail_high(c.bottom, g)) << 1);
    return Characteristic2(g, top, bottom);
}

Characteristic2 prym_embed_char(const CoverContext& ctx, const Characteristic2& c) {
    const int g = ctx.genus();
    if (c.g != g - 1) throw std::invalid_argument("prym_embed_char expects a genus-(g-1) characteristic");
    return Characteristic2(ctx.genus_tilde(), duplicate_tail(c.top, g), duplicate_tail(c.bottom, g));
}

DistinguishedPoints distinguished_points(const CoverContext& ctx) {
    const int gt = ctx.genus_tilde();
    return DistinguishedPoints{
        Characteristic2(gt, 1, 0),
        Characteristic2(gt, 0, 1),
        Characteristic2(gt, 1, 1),
    };
}

VanishingOrbits classify_vanishing_orbits(const CoverContext& ctx) {
    if (ctx.genus() > kClassifyMaxGenus)
        throw std::invalid_argument("classify_vanishing_orbits supports g <= 4");
    const auto pts = distinguished_points(ctx);
    const QuadraticFormF2 q = ctx.q0();
    VanishingOrbits orbits;
    for (const auto& c : ctx.B2()) {
        if (form_eval(q, c) != 0) continue;
        if (ctx.in_P2(c)) orbits.orbit0.push_back(c);
        else if (ctx.in_P2(pts.lambda1 + c)) orbits.orbit1.push_back(c);
        else if (ctx.in_P2(pts.lambda2 + c)) orbits.orbit2.push_back(c);
        else throw std::logic_error("vanishing characteristic outside the three cosets");
    }
    return orbits;
}

KernelNormRecord kernel_norm_structure(const CoverContext& ctx) {
    if (ctx.genus() > kClassifyMaxGenus)
        throw std::invalid_argument("kernel_norm_structure supports g <= 4");
    const auto pts = distinguished_points(ctx);
    KernelNormRecord rec;
    for (const auto& c : ctx.B2())
        if (norm_char(ctx, c).is_zero()) rec.kernel_in_B2.push_back(c);

    std::vector<Characteristic2> expected = ctx.P2();
    for (const auto& c : ctx.P2()) expected.push_back(pts.mu + c);
    expected = sorted_unique(expected);

    rec.p2_size = ctx.P2().size();
    rec.mu_coset_size = expected.size() - rec.p2_size;
    rec.matches_p2_union_mu_p2 = (rec.kernel_in_B2 == expected);
    return rec;
}

} // namespace prymlab
