#pragma once

#include "prymlab/char2.hpp"

#include <vector>

namespace prymlab {

// 2-torsion bookkeeping for a connected unramified double cover of a genus-g curve,
// determined by the nonzero class eta = (top 0, bottom e_0). The covering curve has
// genus 2g-1; its characteristics use coordinate 0 as the distinguished one, with
// coordinates 1..g-1 and g..2g-2 the two interchangeable copies.
//
// B is the image of the whole Jacobian under pullback; B2 below is the 2-torsion of
// that subvariety, which is strictly larger than the pullback of the 2-torsion: it is
// pullback(J_2) together with lambda1 + pullback(J_2) (the pullback of the quarter
// points doubling to eta), i.e. all characteristics of shape (a0,A,A; b0,B,B).
// P2 is the 2-torsion of the Prym subvariety, embedded as (0,A,A; 0,B,B).
class CoverContext {
  public:
    explicit CoverContext(int g); // g >= 2

    int genus() const { return g_; }
    int genus_tilde() const { return 2 * g_ - 1; }

    const std::vector<Characteristic2>& B2() const { return b2_; } // sorted, size 4^g
    const std::vector<Characteristic2>& P2() const { return p2_; } // sorted, size 4^(g-1)
    bool in_B2(const Characteristic2& c) const;
    bool in_P2(const Characteristic2& c) const;

    // The class defining the cover, genus g: (top 0, bottom e_0).
    Characteristic2 eta() const;

    // Quadratic form of the distinguished symmetric divisor upstairs, genus 2g-1:
    // shift (top 0, bottom e_0), constant 0.
    QuadraticFormF2 q0() const;

  private:
    int g_;
    std::vector<Characteristic2> b2_;
    std::vector<Characteristic2> p2_;
};

// Induced maps on doubled characteristics. Shapes (top; bottom), tails written as the
// two copies: pullback (a0,A; b0,B) -> (a0,A,A; 0,B,B); norm (a0,A,A'; b0,B,B') ->
// (0,A+A'; b0,B+B'); prym embedding (A; B) -> (0,A,A; 0,B,B).
Characteristic2 pullback_char(const CoverContext& ctx, const Characteristic2& c);  // genus g -> 2g-1
Characteristic2 norm_char(const CoverContext& ctx, const Characteristic2& c);      // genus 2g-1 -> g
Characteristic2 prym_embed_char(const CoverContext& ctx, const Characteristic2& c); // genus g-1 -> 2g-1

// mu = (top e_0, bottom 0), lambda1 = (top 0, bottom e_0), lambda2 = mu + lambda1,
// all of genus 2g-1. mu lies in pullback(J_2) and norms to zero; the lambda_i lie in
// B2 outside pullback(J_2) and norm to eta.
struct DistinguishedPoints {
    Characteristic2 mu;
    Characteristic2 lambda1;
    Characteristic2 lambda2;
};
DistinguishedPoints distinguished_points(const CoverContext& ctx);

// Zeros of q0 on B2 split into three disjoint P2-cosets of size 4^(g-1):
// orbit0 = P2 itself, orbit1 = lambda1 + P2, orbit2 = lambda2 + P2. Requires g <= 4.
struct VanishingOrbits {
    std::vector<Characteristic2> orbit0;
    std::vector<Characteristic2> orbit1;
    std::vector<Characteristic2> orbit2;
};
VanishingOrbits classify_vanishing_orbits(const CoverContext& ctx);

// {c in B2 : norm_char(c) = 0}, which must equal P2 union (mu + P2). Requires g <= 4.
struct KernelNormRecord {
    std::vector<Characteristic2> kernel_in_B2; // sorted
    std::size_t p2_size = 0;
    std::size_t mu_coset_size = 0;
    bool matches_p2_union_mu_p2 = false;
};
KernelNormRecord kernel_norm_structure(const CoverContext& ctx);

} // namespace prymlab
