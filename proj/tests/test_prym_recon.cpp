#include "prymlab/prym_recon.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace prymlab;

namespace {

PrymScenario seeded_scenario(int genus, std::uint64_t seed, std::uint64_t bound = 500) {
    SplitMix64 rng(seed);
    return forward_build(sample_branch_data(genus, bound, rng));
}

std::vector<std::uint64_t> sorted_b1(const BranchData& data) {
    std::vector<std::uint64_t> b1(data.B1.begin(), data.B1.end());
    std::sort(b1.begin(), b1.end());
    return b1;
}

} // namespace

TEST_SUITE("prym_recon") {

    TEST_CASE("forward build produces conjugate rational fibres") {
        const PrymScenario sc = seeded_scenario(3, 1001);
        CHECK(sc.C.genus() == 3);
        CHECK(sc.C2.genus() == 2);
        CHECK(sc.branch.genus() == 3);

        const PrimeField& F = sc.C2.field();
        for (const auto& [qp, qpp, b1] :
             {std::tuple{sc.q1p, sc.q1pp, sc.branch.B1[0]}, std::tuple{sc.q2p, sc.q2pp, sc.branch.B1[1]}}) {
            CHECK(sc.C2.on_curve(qp));
            CHECK(sc.C2.on_curve(qpp));
            CHECK(qp.x == qpp.x);
            CHECK(qpp.y == F.neg(qp.y));
            CHECK(qp.y <= F.modulus() - qp.y); // canonical root first
            // the shared x is the marked point pushed through the coordinate change
            const auto t = sc.C2.coordinate_change().to_model(F, b1);
            REQUIRE(t.has_value());
            CHECK(qp.x == *t);
        }
    }

    TEST_CASE("forward build validates its inputs") {
        CHECK_THROWS_AS(forward_build(BranchData{101, {6, 10}, {0, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(forward_build(BranchData{101, {6, 10}, {0, 1, 2}}), std::invalid_argument);
        CHECK_THROWS_AS(forward_build(BranchData{101, {0, 10}, {0, 1, 2, 3}}), std::invalid_argument);
        CHECK_THROWS_AS(forward_build(BranchData{101, {6, 6}, {0, 1, 2, 3}}), std::invalid_argument);
        CHECK_THROWS_AS(forward_build(BranchData{91, {6, 10}, {0, 1, 2, 3}}), std::invalid_argument);

        // frozen fixture: both products prod_{b in B2}(B1[k] - b) are non-squares mod 101,
        // while both curves themselves normalize fine
        CHECK_THROWS_AS(forward_build(BranchData{101, {6, 10}, {0, 1, 2, 3}}), SquarenessError);
    }

    TEST_CASE("the published orbit translates the fibre classes by all of the two-torsion") {
        const PrymScenario sc = seeded_scenario(3, 1002);
        const QuadrupleOrbit orbit = quadruple_orbit(sc);
        REQUIRE(orbit.quadruples.size() == 16); // 2^(2*(g-1)) at g = 3

        const auto classes = enumerate_two_torsion(sc.C2);
        REQUIRE(classes.size() == 16);
        const Quadruple& canonical = orbit.quadruples.front();
        CHECK(canonical.rho.finite_part.empty());

        for (std::size_t i = 0; i < orbit.quadruples.size(); ++i) {
            const Quadruple& q = orbit.quadruples[i];
            CHECK(q.rho == classes[i]);
            // both members of a pair sum to 2*rho = 0
            CHECK(cantor_add(sc.C2, q.pair1[0], q.pair1[1]).is_identity());
            CHECK(cantor_add(sc.C2, q.pair2[0], q.pair2[1]).is_identity());
            // each quadruple is the canonical one translated by rho
            const MumfordDivisor R = two_torsion_from_subset(sc.C2, q.rho);
            CHECK(q.pair1[0] == cantor_add(sc.C2, canonical.pair1[0], R));
            CHECK(q.pair2[1] == cantor_add(sc.C2, canonical.pair2[1], R));
        }
    }

    TEST_CASE("reconstruction finds the unique all-on-image quadruple") {
        for (const std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
            const PrymScenario sc = seeded_scenario(3, seed);
            const QuadrupleOrbit orbit = quadruple_orbit(sc);
            const RecoveredPartition rec = reconstruct(sc.C2, orbit);

            CHECK(rec.B1 == sorted_b1(sc.branch));
            CHECK(rec.B2 == sc.branch.B2);
            CHECK(orbit.quadruples[rec.winning_index].rho.finite_part.empty());
            REQUIRE(rec.on_image_counts.size() == 16);
            for (std::size_t i = 0; i < rec.on_image_counts.size(); ++i)
                CHECK(rec.on_image_counts[i] == (i == rec.winning_index ? 4 : 0));
        }

        // one higher-genus instance
        const PrymScenario sc4 = seeded_scenario(4, 21);
        const QuadrupleOrbit orbit4 = quadruple_orbit(sc4);
        const RecoveredPartition rec4 = reconstruct(sc4.C2, orbit4);
        CHECK(orbit4.quadruples.size() == 64);
        CHECK(rec4.B1 == sorted_b1(sc4.branch));
        CHECK(rec4.B2 == sc4.branch.B2);
    }

    TEST_CASE("reconstruction rejects corrupted orbits") {
        const PrymScenario sc = seeded_scenario(3, 31);
        const QuadrupleOrbit orbit = quadruple_orbit(sc);

        // removing the untranslated quadruple leaves nothing on the image
        QuadrupleOrbit missing = orbit;
        missing.quadruples.erase(missing.quadruples.begin());
        try {
            reconstruct(sc.C2, missing);
            FAIL("expected ReconstructionError");
        } catch (const ReconstructionError& e) {
            CHECK(e.all_on_image_count == 0);
        }

        // duplicating it makes the winner ambiguous
        QuadrupleOrbit doubled = orbit;
        doubled.quadruples.push_back(orbit.quadruples.front());
        try {
            reconstruct(sc.C2, doubled);
            FAIL("expected ReconstructionError");
        } catch (const ReconstructionError& e) {
            CHECK(e.all_on_image_count == 2);
        }

        // splicing an on-image class into a translated quadruple breaks the dichotomy
        QuadrupleOrbit spliced = orbit;
        spliced.quadruples[3].pair1[0] = MumfordDivisor::identity();
        CHECK_THROWS_AS(reconstruct(sc.C2, spliced), ReconstructionError);

        // an elliptic quotient curve is out of scope for the generic step
        const PrymScenario sc2 = seeded_scenario(2, 41);
        CHECK_THROWS_AS(reconstruct(sc2.C2, quadruple_orbit(sc2)), std::invalid_argument);
    }

    TEST_CASE("genus-2 reconstruction certifies every alternative pair") {
        const PrymScenario sc = seeded_scenario(2, 51);
        const QuadrupleOrbit orbit = quadruple_orbit(sc);
        REQUIRE(orbit.quadruples.size() == 4);
        const G2Reconstruction rec = reconstruct_g2(sc.C2, orbit);
        const PrimeField& F = sc.C2.field();

        CHECK(rec.pairs_negation_stable);
        CHECK(rec.B1 == sorted_b1(sc.branch));
        CHECK(rec.B2 == sc.branch.B2);
        REQUIRE(rec.alternatives.size() == 3);

        for (const G2Alternative& alt : rec.alternatives) {
            CHECK_FALSE(alt.rho.finite_part.empty());

            // certificate fixes B2 setwise
            std::set<std::uint64_t> image;
            for (const std::uint64_t b : rec.B2) {
                const ProjPoint y = moebius_apply(F, alt.certificate, ProjPoint::finite(b));
                REQUIRE_FALSE(y.inf);
                image.insert(y.x);
            }
            CHECK(image == std::set<std::uint64_t>(rec.B2.begin(), rec.B2.end()));

            // certificate carries the recovered B1 to the alternative image pair
            std::array<ProjPoint, 2> mapped{
                moebius_apply(F, alt.certificate, ProjPoint::finite(rec.B1[0])),
                moebius_apply(F, alt.certificate, ProjPoint::finite(rec.B1[1]))};
            if (!(mapped[0] < mapped[1])) std::swap(mapped[0], mapped[1]);
            CHECK(mapped == alt.B1_image);

            // canonical representative: leading nonzero entry is 1
            const MoebiusMap& m = alt.certificate;
            const std::uint64_t lead = m.a != 0 ? m.a : (m.b != 0 ? m.b : (m.c != 0 ? m.c : m.d));
            CHECK(lead == 1);
        }
    }

    TEST_CASE("genus-2 reconstruction rejects malformed input") {
        const PrymScenario sc = seeded_scenario(2, 52);
        const QuadrupleOrbit orbit = quadruple_orbit(sc);

        QuadrupleOrbit short_orbit = orbit;
        short_orbit.quadruples.pop_back();
        CHECK_THROWS_AS(reconstruct_g2(sc.C2, short_orbit), std::invalid_argument);

        // breaking a pair's negation symmetry is detected
        QuadrupleOrbit tampered = orbit;
        tampered.quadruples[1].pair1[1] = tampered.quadruples[2].pair1[0];
        CHECK_THROWS_AS(reconstruct_g2(sc.C2, tampered), ReconstructionError);

        const PrymScenario sc3 = seeded_scenario(3, 53);
        CHECK_THROWS_AS(reconstruct_g2(sc3.C2, quadruple_orbit(sc3)), std::invalid_argument);
    }

    TEST_CASE("moebius maps act projectively with exact inverses") {
        const PrimeField F(7);
        const MoebiusMap m{2, 3, 1, 4}; // det = 8 - 3 = 5 != 0

        std::vector<ProjPoint> line{ProjPoint::infinity()};
        for (std::uint64_t x = 0; x < 7; ++x) line.push_back(ProjPoint::finite(x));

        // infinity -> a/c, pole -> infinity
        CHECK(moebius_apply(F, m, ProjPoint::infinity()) == ProjPoint::finite(2));
        CHECK(moebius_apply(F, m, ProjPoint::finite(3)) == ProjPoint::infinity()); // 3 + 4 = 0

        const MoebiusMap mi = moebius_inverse(F, m);
        std::set<ProjPoint> image;
        for (const ProjPoint& z : line) {
            const ProjPoint w = moebius_apply(F, m, z);
            CHECK(moebius_apply(F, mi, w) == z);
            image.insert(w);
        }
        CHECK(image.size() == 8); // bijection of P^1(F_7)

        const MoebiusMap n{1, 2, 3, 4}; // det = 4 - 6 = -2 != 0
        const MoebiusMap mn = moebius_compose(F, m, n);
        for (const ProjPoint& z : line)
            CHECK(moebius_apply(F, mn, z) == moebius_apply(F, m, moebius_apply(F, n, z)));

        const MoebiusMap k{0, 3, 5, 1};
        CHECK(moebius_normalized(F, k).b == 1); // first nonzero entry rescaled
        CHECK(moebius_normalized(F, MoebiusMap{3, 1, 2, 5}).a == 1);
        CHECK_THROWS_AS(moebius_normalized(F, MoebiusMap{0, 0, 0, 0}), std::invalid_argument);
    }

    TEST_CASE("branch sampling is deterministic and honours its bounds") {
        SplitMix64 a(2024), b(2024);
        const BranchData da = sample_branch_data(3, 800, a);
        const BranchData db = sample_branch_data(3, 800, b);
        CHECK(da.p == db.p);
        CHECK(da.B1 == db.B1);
        CHECK(da.B2 == db.B2);

        CHECK(is_prime_u64(da.p));
        CHECK(da.p <= 800);
        CHECK(da.B2.size() == 6);
        CHECK(std::is_sorted(da.B2.begin(), da.B2.end()));
        CHECK(da.B1[0] < da.B1[1]);
        CHECK_NOTHROW(forward_build(da)); // sampled data satisfies all preconditions

        SplitMix64 c(1);
        CHECK_THROWS_AS(sample_branch_data(1, 800, c), std::invalid_argument);
        CHECK_THROWS_AS(sample_branch_data(3, 20, c), std::invalid_argument);
    }

    TEST_CASE("seeded round trips recover the partition exactly") {
        RoundTripConfig cfg;
        cfg.genus = 3;
        cfg.prime_bound = 1000;
        cfg.seed = 7;
        cfg.runs = 3;
        const ReconstructionReport rep = round_trip(cfg);
        CHECK(rep.matches == 3);
        REQUIRE(rep.runs.size() == 3);
        for (const RoundTripRun& run : rep.runs) {
            CHECK(run.error.empty());
            CHECK(run.match);
            CHECK(run.all_on_image_count == 1);
            CHECK(run.recovered_B1 == sorted_b1(run.branch));
            CHECK(run.recovered_B2 == run.branch.B2);
            CHECK(run.elapsed_ms >= 0);
        }

        // byte-for-byte determinism of the sampled data
        const ReconstructionReport again = round_trip(cfg);
        for (std::size_t i = 0; i < rep.runs.size(); ++i) {
            CHECK(again.runs[i].run_seed == rep.runs[i].run_seed);
            CHECK(again.runs[i].branch.p == rep.runs[i].branch.p);
            CHECK(again.runs[i].recovered_B1 == rep.runs[i].recovered_B1);
            CHECK(again.runs[i].recovered_B2 == rep.runs[i].recovered_B2);
        }
    }

    TEST_CASE("genus-2 round trips count their certificates") {
        RoundTripConfig cfg;
        cfg.genus = 2;
        cfg.prime_bound = 1000;
        cfg.seed = 9;
        cfg.runs = 2;
        const ReconstructionReport rep = round_trip(cfg);
        CHECK(rep.matches == 2);
        for (const RoundTripRun& run : rep.runs) {
            CHECK(run.match);
            CHECK(run.certificate_count == 3);
            CHECK(run.error.empty());
        }

        CHECK_THROWS_AS(round_trip(RoundTripConfig{1, 1000, 0, 1}), std::invalid_argument);
        CHECK_THROWS_AS(round_trip(RoundTripConfig{3, 1000, 0, 0}), std::invalid_argument);
    }
}
