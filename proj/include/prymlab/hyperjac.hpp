#pragma once

#include "prymlab/fp.hpp"
#include "prymlab/poly.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace prymlab {

// Thrown when an even branch set admits no odd-model normalization over F_p (every
// candidate pivot leaves a non-square cofactor); callers are expected to resample.
struct NormalizationError : std::domain_error {
    using std::domain_error::domain_error;
};

// Point of the odd model y^2 = f(x); the single point at infinity is a Weierstrass point.
struct CurvePoint {
    bool at_infinity = false;
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    static CurvePoint infinity() { return CurvePoint{true, 0, 0}; }
    static CurvePoint affine(std::uint64_t x, std::uint64_t y) { return CurvePoint{false, x, y}; }
    bool operator==(const CurvePoint&) const = default;
};

// Recorded coordinate change x -> 1/(x - pivot) turning an even branch set into an odd
// one by sending the pivot branch point to infinity. Values are optionals with nullopt
// standing for the point at infinity of P^1.
struct MoebiusChange {
    bool applied = false;
    std::uint64_t pivot = 0;

    std::optional<std::uint64_t> to_model(const PrimeField& F, std::optional<std::uint64_t> original) const;
    std::optional<std::uint64_t> to_original(const PrimeField& F, std::optional<std::uint64_t> model) const;
};

// y^2 = f(x) with f monic, squarefree, odd degree 2*genus + 1, genus >= 1. Construction
// takes the branch x-coordinates over F_p; an even set is first normalized by the
// Moebius change above. When the pivot is b*, the substitution gives
// w^2 = K * G(t) with K = prod_{b != b*} (b* - b), and the monic model y^2 = G(t) is
// F_p-isomorphic to the curve only when K is a square; the constructor therefore scans
// the sorted branch list and pivots at the first point whose cofactor K is a square,
// throwing NormalizationError when none works.
class HyperellipticCurve {
  public:
    HyperellipticCurve(std::uint64_t p, std::vector<std::uint64_t> branch_xs);

    const PrimeField& field() const { return F_; }
    int genus() const { return genus_; }
    const Poly& f() const { return f_; }

    // Finite branch x-coordinates of the odd model, sorted; infinity is implicit.
    const std::vector<std::uint64_t>& branch_xs() const { return branch_; }
    // The input branch set (sorted); equals branch_xs() when no change was applied.
    const std::vector<std::uint64_t>& original_branch_xs() const { return original_branch_; }
    const MoebiusChange& coordinate_change() const { return change_; }

    bool on_curve(const CurvePoint& pt) const;

  private:
    PrimeField F_;
    int genus_;
    Poly f_;
    std::vector<std::uint64_t> branch_;
    std::vector<std::uint64_t> original_branch_;
    MoebiusChange change_;
};

// Mumford representation (u, v): u monic, deg v < deg u, u | v^2 - f, deg u <= genus
// once reduced. The identity is u = 1, v = 0.
struct MumfordDivisor {
    Poly u{1};
    Poly v{};

    static MumfordDivisor identity() { return MumfordDivisor{}; }
    bool is_identity() const { return u.size() == 1 && u[0] == 1 && v.empty(); }
    bool operator==(const MumfordDivisor&) const = default;
};

bool is_reduced(const HyperellipticCurve& C, const MumfordDivisor& D);

// Full Cantor composition (two extended gcd steps, covering doubling and common roots)
// followed by reduction.
MumfordDivisor cantor_add(const HyperellipticCurve& C, const MumfordDivisor& a, const MumfordDivisor& b);
MumfordDivisor cantor_neg(const HyperellipticCurve& C, const MumfordDivisor& a);

// Class of P - infinity; the identity for the point at infinity.
MumfordDivisor divisor_of_point(const HyperellipticCurve& C, const CurvePoint& pt);

// Degree <= 1 classes are exactly the Abel image of the curve.
bool is_on_abel_image(const HyperellipticCurve& C, const MumfordDivisor& D);
// The point with that class: infinity for the identity, else (x0, v(x0)). nullopt when
// deg u > 1 or the candidate fails the curve equation.
std::optional<CurvePoint> lift_from_abel_image(const HyperellipticCurve& C, const MumfordDivisor& D);

// The 2*genus + 1 finite Weierstrass points plus infinity.
std::vector<CurvePoint> weierstrass_points(const HyperellipticCurve& C);

// 2-torsion class as an even-size subset of the branch points modulo complement. The
// canonical representative is the finite part of size <= genus: sizes of a subset and
// its complement sum to 2*genus + 2, and dropping/keeping the implicit infinity toggles
// parity, so exactly one representative has finite part of size <= genus.
struct TwoTorsionClass {
    std::vector<std::uint64_t> finite_part; // sorted model x-coordinates, size <= genus
    bool operator==(const TwoTorsionClass&) const = default;
};

// Canonicalize a subset given by finite branch x-coordinates plus an optional infinity
// marker. The subset must consist of branch points and have even total size.
TwoTorsionClass two_torsion_class(const HyperellipticCurve& C, std::vector<std::uint64_t> finite_xs,
                                  bool include_infinity);

// Group law in the subset model: symmetric difference, re-canonicalized.
TwoTorsionClass two_torsion_sum(const HyperellipticCurve& C, const TwoTorsionClass& a,
                                const TwoTorsionClass& b);

// Mumford divisor of the class: u = prod_{b in finite part} (x - b), v = 0.
MumfordDivisor two_torsion_from_subset(const HyperellipticCurve& C, const TwoTorsionClass& cls);

// All 2^(2*genus) classes, enumerated deterministically (bitmask order over the sorted
// finite branch points, complement-canonicalized, then sorted and deduplicated).
std::vector<TwoTorsionClass> enumerate_two_torsion(const HyperellipticCurve& C);

} // namespace prymlab
