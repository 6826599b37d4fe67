#include "prymlab/prym_recon.hpp"

#include <algorithm>
#include <chrono>

namespace prymlab {

namespace {

constexpr int kSampleAttemptCap = 1000;

void validate_branch_data(const BranchData& data) {
    if (data.B2.size() < 4 || data.B2.size() % 2 != 0)
        throw std::invalid_argument("B2 must have even size 2g with g >= 2");
    // Joint distinctness (and primality of p) is re-checked by the curve constructors;
    // check here too so errors surface before any curve work.
    PrimeField F(data.p);
    std::vector<std::uint64_t> all(data.B1.begin(), data.B1.end());
    all.insert(all.end(), data.B2.begin(), data.B2.end());
    for (auto& x : all) x %= F.modulus();
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("branch values must be distinct mod p");
}

// x-coordinate of a lifted Abel-image class in model coordinates; nullopt = model infinity.
std::optional<std::uint64_t> model_x_of(const HyperellipticCurve& C2, const MumfordDivisor& D) {
    const auto pt = lift_from_abel_image(C2, D);
    if (!pt.has_value())
        throw ReconstructionError("on-image class failed to lift to a curve point", 0);
    if (pt->at_infinity) return std::nullopt;
    return pt->x;
}

ProjPoint to_proj(std::optional<std::uint64_t> v) {
    return v.has_value() ? ProjPoint::finite(*v) : ProjPoint::infinity();
}

// Moebius map sending the distinct finite points z1, z2, z3 to 0, 1, infinity.
MoebiusMap triple_to_standard(const PrimeField& F, std::uint64_t z1, std::uint64_t z2, std::uint64_t z3) {
    const std::uint64_t k = F.sub(z2, z3); // z2 - z3
    const std::uint64_t l = F.sub(z2, z1); // z2 - z1
    return MoebiusMap{k, F.neg(F.mul(z1, k)), l, F.neg(F.mul(z3, l))};
}

} // namespace

ProjPoint moebius_apply(const PrimeField& F, const MoebiusMap& m, const ProjPoint& z) {
    if (z.inf) {
        if (m.c == 0) return ProjPoint::infinity();
        return ProjPoint::finite(F.mul(m.a, F.inv(m.c)));
    }
    const std::uint64_t num = F.add(F.mul(m.a, z.x), m.b);
    const std::uint64_t den = F.add(F.mul(m.c, z.x), m.d);
    if (den == 0) return ProjPoint::infinity();
    return ProjPoint::finite(F.mul(num, F.inv(den)));
}

MoebiusMap moebius_inverse(const PrimeField& F, const MoebiusMap& m) {
    return MoebiusMap{m.d, F.neg(m.b), F.neg(m.c), m.a};
}

MoebiusMap moebius_compose(const PrimeField& F, const MoebiusMap& m, const MoebiusMap& n) {
    return MoebiusMap{
        F.add(F.mul(m.a, n.a), F.mul(m.b, n.c)),
        F.add(F.mul(m.a, n.b), F.mul(m.b, n.d)),
        F.add(F.mul(m.c, n.a), F.mul(m.d, n.c)),
        F.add(F.mul(m.c, n.b), F.mul(m.d, n.d)),
    };
}

MoebiusMap moebius_normalized(const PrimeField& F, const MoebiusMap& m) {
    std::uint64_t lead = m.a;
    if (lead == 0) lead = m.b;
    if (lead == 0) lead = m.c;
    if (lead == 0) lead = m.d;
    if (lead == 0) throw std::invalid_argument("zero Moebius matrix");
    const std::uint64_t s = F.inv(lead);
    return MoebiusMap{F.mul(m.a, s), F.mul(m.b, s), F.mul(m.c, s), F.mul(m.d, s)};
}

PrymScenario forward_build(const BranchData& data) {
    validate_branch_data(data);
    if (data.genus() < 2) throw std::invalid_argument("forward_build requires g >= 2");

    std::vector<std::uint64_t> all(data.B1.begin(), data.B1.end());
    all.insert(all.end(), data.B2.begin(), data.B2.end());
    HyperellipticCurve C(data.p, all);
    HyperellipticCurve C2(data.p, data.B2);
    const PrimeField& F = C2.field();

    // Rationality of the fibres over the marked points, stated on the input data.
    for (const std::uint64_t b1 : data.B1) {
        std::uint64_t prod = 1;
        for (const std::uint64_t b : data.B2) prod = F.mul(prod, F.sub(b1 % F.modulus(), b % F.modulus()));
        if (F.legendre(prod) != 1)
            throw SquarenessError("fibre over a marked point is not rational (non-square product)");
    }

    auto fibre = [&](std::uint64_t b1) -> std::pair<CurvePoint, CurvePoint> {
        const auto t = C2.coordinate_change().to_model(F, b1 % F.modulus());
        if (!t.has_value()) throw std::logic_error("marked point collided with the pivot");
        const std::uint64_t val = poly::eval(F, C2.f(), *t);
        const auto w = F.sqrt(val);
        // Equivalent to the product condition because the odd model is chosen untwisted.
        if (!w.has_value()) throw std::logic_error("fibre squareness lost by the coordinate change");
        return {CurvePoint::affine(*t, *w), CurvePoint::affine(*t, F.neg(*w))};
    };
    const auto [q1p, q1pp] = fibre(data.B1[0]);
    const auto [q2p, q2pp] = fibre(data.B1[1]);
    return PrymScenario{data, std::move(C), std::move(C2), q1p, q1pp, q2p, q2pp};
}

QuadrupleOrbit quadruple_orbit(const PrymScenario& scenario) {
    const HyperellipticCurve& C2 = scenario.C2;
    const MumfordDivisor A = divisor_of_point(C2, scenario.q1p);
    const MumfordDivisor Ac = divisor_of_point(C2, scenario.q1pp);
    const MumfordDivisor B = divisor_of_point(C2, scenario.q2p);
    const MumfordDivisor Bc = divisor_of_point(C2, scenario.q2pp);

    QuadrupleOrbit orbit;
    for (const TwoTorsionClass& cls : enumerate_two_torsion(C2)) {
        const MumfordDivisor R = two_torsion_from_subset(C2, cls);
        orbit.quadruples.push_back(Quadruple{
            cls,
            {cantor_add(C2, A, R), cantor_add(C2, Ac, R)},
            {cantor_add(C2, B, R), cantor_add(C2, Bc, R)},
        });
    }
    return orbit;
}

RecoveredPartition reconstruct(const HyperellipticCurve& C2, const QuadrupleOrbit& orbit) {
    if (C2.genus() < 2)
        throw std::invalid_argument("reconstruct requires g >= 3 (use reconstruct_g2 for g = 2)");

    RecoveredPartition out;
    std::size_t winners = 0;
    for (std::size_t i = 0; i < orbit.quadruples.size(); ++i) {
        const Quadruple& q = orbit.quadruples[i];
        int n = 0;
        for (const auto* pair : {&q.pair1, &q.pair2})
            for (const MumfordDivisor& D : *pair)
                if (is_on_abel_image(C2, D)) ++n;
        out.on_image_counts.push_back(n);
        if (n == 4) {
            ++winners;
            out.winning_index = i;
        } else if (n != 0) {
            throw ReconstructionError("quadruple lies partially on the Abel image", winners);
        }
    }
    if (winners != 1)
        throw ReconstructionError(winners == 0 ? "no quadruple lies on the Abel image"
                                                : "multiple quadruples lie on the Abel image",
                                  winners);

    const Quadruple& w = orbit.quadruples[out.winning_index];
    std::vector<std::uint64_t> xs;
    for (const auto* pair : {&w.pair1, &w.pair2})
        for (const MumfordDivisor& D : *pair) {
            const auto orig = C2.coordinate_change().to_original(C2.field(), model_x_of(C2, D));
            if (!orig.has_value())
                throw ReconstructionError("recovered point maps to infinity in original coordinates", 1);
            xs.push_back(*orig);
        }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.size() != 2)
        throw ReconstructionError("winning quadruple does not project to exactly two x-values", 1);

    out.B1 = std::move(xs);
    out.B2 = C2.original_branch_xs();
    return out;
}

G2Reconstruction reconstruct_g2(const HyperellipticCurve& C2, const QuadrupleOrbit& orbit) {
    if (C2.genus() != 1) throw std::invalid_argument("reconstruct_g2 requires an elliptic C2");
    if (orbit.quadruples.size() != 4)
        throw std::invalid_argument("g = 2 orbit must have exactly 4 quadruples");
    const PrimeField& F = C2.field();

    G2Reconstruction out;
    out.pairs_negation_stable = true;
    for (const Quadruple& q : orbit.quadruples)
        for (const auto* pair : {&q.pair1, &q.pair2})
            if (!((*pair)[1] == cantor_neg(C2, (*pair)[0]))) out.pairs_negation_stable = false;
    if (!out.pairs_negation_stable)
        throw ReconstructionError("a published pair is not stable under negation", 0);

    // x-image of a pair (both members share it), in original coordinates.
    auto pair_image = [&](const std::array<MumfordDivisor, 2>& pair) -> ProjPoint {
        const auto x0 = model_x_of(C2, pair[0]);
        const auto x1 = model_x_of(C2, pair[1]);
        if (x0 != x1)
            throw ReconstructionError("pair members disagree on the quotient coordinate", 0);
        return to_proj(C2.coordinate_change().to_original(F, x0));
    };

    const Quadruple* canonical = nullptr;
    for (const Quadruple& q : orbit.quadruples)
        if (q.rho.finite_part.empty()) canonical = &q;
    if (canonical == nullptr)
        throw ReconstructionError("orbit is missing the untranslated quadruple", 0);

    const ProjPoint i1 = pair_image(canonical->pair1);
    const ProjPoint i2 = pair_image(canonical->pair2);
    if (i1.inf || i2.inf)
        throw ReconstructionError("marked points land on infinity in original coordinates", 0);
    out.B1 = {i1.x, i2.x};
    std::sort(out.B1.begin(), out.B1.end());
    out.B2 = C2.original_branch_xs();

    const std::array<ProjPoint, 2> primary{ProjPoint::finite(out.B1[0]), ProjPoint::finite(out.B1[1])};
    const MoebiusMap source = triple_to_standard(F, out.B2[0], out.B2[1], out.B2[2]);

    auto as_sorted = [](std::array<ProjPoint, 2> v) {
        if (!(v[0] < v[1])) std::swap(v[0], v[1]);
        return v;
    };

    for (const Quadruple& q : orbit.quadruples) {
        if (q.rho.finite_part.empty()) continue;
        G2Alternative alt;
        alt.rho = q.rho;
        alt.B1_image = as_sorted({pair_image(q.pair1), pair_image(q.pair2)});

        bool found = false;
        for (std::size_t t1 = 0; t1 < 4 && !found; ++t1)
            for (std::size_t t2 = 0; t2 < 4 && !found; ++t2)
                for (std::size_t t3 = 0; t3 < 4 && !found; ++t3) {
                    if (t1 == t2 || t1 == t3 || t2 == t3) continue;
                    const MoebiusMap target = triple_to_standard(F, out.B2[t1], out.B2[t2], out.B2[t3]);
                    const MoebiusMap psi = moebius_compose(F, moebius_inverse(F, target), source);
                    // psi already carries B2[0..2] into B2; the 4th point decides.
                    const ProjPoint last = moebius_apply(F, psi, ProjPoint::finite(out.B2[3]));
                    if (last.inf || !std::binary_search(out.B2.begin(), out.B2.end(), last.x)) continue;
                    const auto mapped = as_sorted({moebius_apply(F, psi, primary[0]),
                                                   moebius_apply(F, psi, primary[1])});
                    if (!(mapped == alt.B1_image)) continue;
                    alt.certificate = moebius_normalized(F, psi);
                    found = true;
                }
        if (!found)
            throw ReconstructionError("no Moebius certificate relates the alternative pair", 0);
        out.alternatives.push_back(std::move(alt));
    }
    return out;
}

BranchData sample_branch_data(int genus, std::uint64_t prime_bound, SplitMix64& rng) {
    if (genus < 2) throw std::invalid_argument("sampling requires genus >= 2");
    const std::uint64_t points = 2ULL * genus + 2;
    const std::uint64_t p_min = 2 * points + 1;
    if (prime_bound < p_min + 10)
        throw std::invalid_argument("prime bound too small for the requested genus");

    for (int attempt = 0; attempt < kSampleAttemptCap; ++attempt) {
        std::uint64_t p = 0;
        do {
            p = p_min + rng.below(prime_bound - p_min + 1);
        } while (!is_prime_u64(p));

        std::vector<std::uint64_t> vals;
        while (vals.size() < points) {
            const std::uint64_t v = rng.below(p);
            if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
        }
        BranchData data;
        data.p = p;
        data.B1 = {vals[0], vals[1]};
        if (data.B1[0] > data.B1[1]) std::swap(data.B1[0], data.B1[1]);
        data.B2.assign(vals.begin() + 2, vals.end());
        std::sort(data.B2.begin(), data.B2.end());
        try {
            forward_build(data);
            return data;
        } catch (const SquarenessError&) {
        } catch (const NormalizationError&) {
        }
    }
    throw std::runtime_error("no valid scenario found within the sampling cap");
}

ReconstructionReport round_trip(const RoundTripConfig& config) {
    if (config.genus < 2) throw std::invalid_argument("round trip requires genus >= 2");
    if (config.runs < 1) throw std::invalid_argument("round trip needs at least one run");

    ReconstructionReport report;
    report.config = config;
    SplitMix64 master(config.seed);

    for (int i = 0; i < config.runs; ++i) {
        RoundTripRun run;
        run.run_seed = master.next();
        SplitMix64 rng(run.run_seed);
        try {
            run.branch = sample_branch_data(config.genus, config.prime_bound, rng);
            const PrymScenario sc = forward_build(run.branch);
            const QuadrupleOrbit orbit = quadruple_orbit(sc);

            for (const Quadruple& q : orbit.quadruples) {
                int n = 0;
                for (const auto* pair : {&q.pair1, &q.pair2})
                    for (const MumfordDivisor& D : *pair)
                        if (is_on_abel_image(sc.C2, D)) ++n;
                if (n == 4) ++run.all_on_image_count;
            }

            const auto t0 = std::chrono::steady_clock::now();
            if (config.genus == 2) {
                const G2Reconstruction rec = reconstruct_g2(sc.C2, orbit);
                run.recovered_B1 = rec.B1;
                run.recovered_B2 = rec.B2;
                run.certificate_count = rec.alternatives.size();
            } else {
                const RecoveredPartition rec = reconstruct(sc.C2, orbit);
                run.recovered_B1 = rec.B1;
                run.recovered_B2 = rec.B2;
            }
            const auto t1 = std::chrono::steady_clock::now();
            run.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

            std::vector<std::uint64_t> b1(run.branch.B1.begin(), run.branch.B1.end());
            std::sort(b1.begin(), b1.end());
            run.match = (run.recovered_B1 == b1) && (run.recovered_B2 == run.branch.B2);
            if (config.genus == 2 && run.certificate_count != 3) run.match = false;
        } catch (const std::exception& e) {
            run.error = e.what();
            run.match = false;
        }
        if (run.match) ++report.matches;
        report.runs.push_back(std::move(run));
    }
    return report;
}

} // namespace prymlab
