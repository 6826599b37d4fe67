#pragma once

#include "prymlab/hyperjac.hpp"
#include "prymlab/rng.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace prymlab {

// Scenario preconditions that fail for an unlucky sample (fibre points not rational);
// the sampler resamples on these.
struct SquarenessError : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised when published quadruple data violates the reconstruction dichotomy (not
// exactly one all-on-image quadruple, inconsistent pair coordinates, failed lifts).
struct ReconstructionError : std::runtime_error {
    std::size_t all_on_image_count;
    ReconstructionError(const std::string& msg, std::size_t count)
        : std::runtime_error(msg), all_on_image_count(count) {}
};

// A prime p, two marked branch points B1 and the remaining 2g of the genus-g curve
// y^2 = prod over B1 union B2 of (x - b).
struct BranchData {
    std::uint64_t p = 0;
    std::array<std::uint64_t, 2> B1{};
    std::vector<std::uint64_t> B2;

    int genus() const { return static_cast<int>(B2.size()) / 2; }
};

// Forward data of the double-cover construction: the genus-g curve C with branch set
// B1 union B2, the quotient-side curve C2 with branch set B2 (genus g-1), and the two
// rational fibres of the x-line over B1, written on the odd model of C2. The Abel base
// point is the infinite Weierstrass point of that model; conjugate fibre points then
// have exactly opposite classes.
struct PrymScenario {
    BranchData branch;
    HyperellipticCurve C;
    HyperellipticCurve C2;
    CurvePoint q1p, q1pp; // fibre over B1[0], model coordinates
    CurvePoint q2p, q2pp; // fibre over B1[1]
};

// Validates the branch data, builds both curves, checks the fibre squareness
// preconditions prod_{b in B2} (B1[k] - b) = square (throws SquarenessError), and picks
// the marked points with the canonical square root.
PrymScenario forward_build(const BranchData& data);

// One member of the published orbit: both fibre pairs translated by a 2-torsion class.
struct Quadruple {
    TwoTorsionClass rho;
    std::array<MumfordDivisor, 2> pair1; // {cl(q1') + rho, cl(q1'') + rho}
    std::array<MumfordDivisor, 2> pair2; // {cl(q2') + rho, cl(q2'') + rho}
};

struct QuadrupleOrbit {
    std::vector<Quadruple> quadruples; // one per 2-torsion class, 2^(2*(g-1)) total
};

QuadrupleOrbit quadruple_orbit(const PrymScenario& scenario);

// Inverse step for g >= 3: exactly one quadruple lies entirely on the Abel image (the
// untranslated one), every other quadruple avoids the image completely; lifting the
// winner and pushing the two x-values back through the coordinate change recovers B1,
// and B2 is the branch set of C2 in original coordinates.
struct RecoveredPartition {
    std::vector<std::uint64_t> B1; // 2 values, sorted, original coordinates
    std::vector<std::uint64_t> B2; // 2g values, sorted
    std::size_t winning_index = 0;
    std::vector<int> on_image_counts; // per quadruple, members on the Abel image (0..4)
};
RecoveredPartition reconstruct(const HyperellipticCurve& C2, const QuadrupleOrbit& orbit);

// Point of P^1(F_p).
struct ProjPoint {
    bool inf = false;
    std::uint64_t x = 0;

    static ProjPoint infinity() { return ProjPoint{true, 0}; }
    static ProjPoint finite(std::uint64_t v) { return ProjPoint{false, v}; }
    bool operator==(const ProjPoint&) const = default;
    bool operator<(const ProjPoint& o) const { // finite first, infinity last
        if (inf != o.inf) return !inf;
        return x < o.x;
    }
};

// z -> (a*z + b)/(c*z + d) on P^1(F_p), det = ad - bc != 0.
struct MoebiusMap {
    std::uint64_t a = 1, b = 0, c = 0, d = 1;
};
ProjPoint moebius_apply(const PrimeField& F, const MoebiusMap& m, const ProjPoint& z);
MoebiusMap moebius_inverse(const PrimeField& F, const MoebiusMap& m);
// (m after n)(z) = m(n(z)); matrix product.
MoebiusMap moebius_compose(const PrimeField& F, const MoebiusMap& m, const MoebiusMap& n);
// Scale so the first nonzero of (a, b, c, d) is 1; canonical projective representative.
MoebiusMap moebius_normalized(const PrimeField& F, const MoebiusMap& m);

// Inverse step for g = 2 (C2 elliptic): every class is on the Abel image, so the
// dichotomy degenerates. Instead: all pairs of all four quadruples are negation-stable;
// the untranslated quadruple gives B1 exactly; and every other quadruple's candidate
// pair is certified equivalent by an explicit Moebius map fixing B2 setwise and carrying
// B1 to the alternative pair of x-values.
struct G2Alternative {
    TwoTorsionClass rho;
    std::array<ProjPoint, 2> B1_image; // original coordinates; may contain infinity
    MoebiusMap certificate;
};

struct G2Reconstruction {
    std::vector<std::uint64_t> B1; // from the untranslated quadruple, original coordinates
    std::vector<std::uint64_t> B2;
    bool pairs_negation_stable = false;
    std::vector<G2Alternative> alternatives; // the three translated quadruples
};
G2Reconstruction reconstruct_g2(const HyperellipticCurve& C2, const QuadrupleOrbit& orbit);

// Seeded end-to-end drill: sample a valid scenario, publish the orbit, reconstruct,
// compare. genus >= 3 uses reconstruct, genus = 2 uses reconstruct_g2.
struct RoundTripConfig {
    int genus = 3;
    std::uint64_t prime_bound = 10000;
    std::uint64_t seed = 0;
    int runs = 1;
};

struct RoundTripRun {
    std::uint64_t run_seed = 0;
    BranchData branch;
    std::size_t all_on_image_count = 0; // quadruples fully on the Abel image
    std::vector<std::uint64_t> recovered_B1;
    std::vector<std::uint64_t> recovered_B2;
    std::size_t certificate_count = 0; // g = 2 only
    bool match = false;
    double elapsed_ms = 0; // reconstruction step only
    std::string error;     // nonempty when the run failed
};

struct ReconstructionReport {
    RoundTripConfig config;
    std::vector<RoundTripRun> runs;
    int matches = 0;
};

ReconstructionReport round_trip(const RoundTripConfig& config);

// Random valid scenario: prime below the bound, distinct branch values, squareness
// preconditions satisfied. At most 1000 attempts, then std::runtime_error.
BranchData sample_branch_data(int genus, std::uint64_t prime_bound, SplitMix64& rng);

} // namespace prymlab
