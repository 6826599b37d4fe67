#include "prymlab/char2.hpp"
#include "prymlab/covering.hpp"
#include "prymlab/genus1.hpp"
#include "prymlab/hyperjac.hpp"
#include "prymlab/prym_recon.hpp"
#include "prymlab/rng.hpp"
#include "prymlab/theta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using prymlab::cplx;

json complex_json(const cplx& v) { return json::array({v.real(), v.imag()}); }

std::vector<double> parse_doubles(const std::string& text, char sep) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        std::size_t used = 0;
        out.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument("malformed number: " + item);
    }
    if (out.empty()) throw std::invalid_argument("empty numeric list");
    return out;
}

cplx parse_complex(const std::string& text) {
    const auto vals = parse_doubles(text, ',');
    if (vals.size() == 1) return cplx(vals[0], 0);
    if (vals.size() == 2) return cplx(vals[0], vals[1]);
    throw std::invalid_argument("expected re or re,im");
}

std::vector<cplx> parse_complex_list(const std::string& text) {
    const auto vals = parse_doubles(text, ',');
    if (vals.size() % 2 != 0) throw std::invalid_argument("expected pairs re,im,re,im,...");
    std::vector<cplx> out;
    for (std::size_t i = 0; i < vals.size(); i += 2) out.emplace_back(vals[i], vals[i + 1]);
    return out;
}

// "re,im" (diagonal tau * I) or g semicolon-separated rows of g pairs each.
prymlab::PeriodMatrix parse_tau(const std::string& text, int g) {
    std::vector<std::string> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(row);
    if (rows.size() == 1) {
        const auto entries = parse_complex_list(rows[0]);
        if (entries.size() == 1) return prymlab::PeriodMatrix::diagonal(g, entries[0]);
        if (entries.size() == static_cast<std::size_t>(g) * g)
            return prymlab::PeriodMatrix(g, entries);
        throw std::invalid_argument("tau needs one pair or g*g pairs");
    }
    if (rows.size() != static_cast<std::size_t>(g))
        throw std::invalid_argument("tau needs g rows");
    std::vector<cplx> entries;
    for (const auto& r : rows) {
        const auto er = parse_complex_list(r);
        if (er.size() != static_cast<std::size_t>(g)) throw std::invalid_argument("tau rows need g pairs");
        entries.insert(entries.end(), er.begin(), er.end());
    }
    return prymlab::PeriodMatrix(g, entries);
}

prymlab::Characteristic2 parse_char(const std::string& text) {
    if (text.find(':') != std::string::npos) return prymlab::Characteristic2::parse(text);
    const auto slash = text.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("characteristic format is top/bottom");
    const int g = static_cast<int>(slash);
    return prymlab::Characteristic2::parse(std::to_string(g) + ":" + text);
}

double default_eps() {
    const char* env = std::getenv("PRYM_LAB_EPS");
    if (env == nullptr || *env == '\0') return 1e-12;
    std::size_t used = 0;
    const std::string text(env);
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("PRYM_LAB_EPS is not a number");
    }
    if (used != text.size() || !(v > 0) || !(v < 1))
        throw std::invalid_argument("PRYM_LAB_EPS must be a number in (0, 1)");
    return v;
}

json field_strings(const std::vector<std::uint64_t>& xs) {
    json arr = json::array();
    for (auto x : xs) arr.push_back(std::to_string(x));
    return arr;
}

json char_strings(const std::vector<prymlab::Characteristic2>& cs) {
    json arr = json::array();
    for (const auto& c : cs) arr.push_back(c.to_string());
    return arr;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_classify(int genus) {
    const prymlab::CoverContext ctx(genus);
    const auto orbits = prymlab::classify_vanishing_orbits(ctx);
    const auto pts = prymlab::distinguished_points(ctx);
    json j;
    j["genus"] = genus;
    j["genus_tilde"] = ctx.genus_tilde();
    j["eta"] = ctx.eta().to_string();
    j["mu"] = pts.mu.to_string();
    j["lambda1"] = pts.lambda1.to_string();
    j["lambda2"] = pts.lambda2.to_string();
    j["orbit0"] = char_strings(orbits.orbit0);
    j["orbit1"] = char_strings(orbits.orbit1);
    j["orbit2"] = char_strings(orbits.orbit2);
    j["sizes"] = json::array({orbits.orbit0.size(), orbits.orbit1.size(), orbits.orbit2.size()});
    emit(j);
    return 0;
}

int run_theta_eval(const std::string& char_text, const std::string& tau_text,
                   const std::string& z_text, double eps) {
    const prymlab::Characteristic2 c = parse_char(char_text);
    const prymlab::PeriodMatrix tau = parse_tau(tau_text, c.g);
    std::vector<cplx> z(c.g, cplx(0, 0));
    if (!z_text.empty()) {
        z = parse_complex_list(z_text);
        if (z.size() != static_cast<std::size_t>(c.g))
            throw std::invalid_argument("z needs g pairs");
    }
    const int radius = prymlab::truncation_radius(tau, z, std::max(eps, 1e-13));
    const cplx value = prymlab::theta_eval(prymlab::RationalCharacteristic(c), z, tau, eps);
    json j;
    j["char"] = c.to_string();
    j["eps"] = eps;
    j["radius"] = radius;
    j["value"] = complex_json(value);
    emit(j);
    return 0;
}

int run_k_of_tau(const std::string& tau_text, double eps) {
    const cplx tau = parse_complex(tau_text);
    const cplx k = prymlab::k_of_tau(tau, eps);
    json j;
    j["tau"] = complex_json(tau);
    j["eps"] = eps;
    j["k"] = complex_json(k);
    emit(j);
    return 0;
}

int run_curve_from_k(const std::string& k_text) {
    const cplx k = parse_complex(k_text);
    const auto curve = prymlab::curve_from_k(k);
    json j;
    j["k"] = complex_json(k);
    j["lambda"] = complex_json(curve.lambda);
    j["curve"] = "y^2 = x(x-1)(x-lambda)";
    j["p1"] = json::array({curve.p1.first, curve.p1.second});
    j["p2"] = json::array({curve.p2.first, curve.p2.second});
    j["mu"] = std::string(curve.mu_class);
    emit(j);
    return 0;
}

int run_roundtrip(int genus, std::uint64_t prime_bound, std::uint64_t seed, int runs, bool timings) {
    prymlab::RoundTripConfig cfg;
    cfg.genus = genus;
    cfg.prime_bound = prime_bound;
    cfg.seed = seed;
    cfg.runs = runs;
    const prymlab::ReconstructionReport report = prymlab::round_trip(cfg);

    json j;
    j["genus"] = genus;
    j["prime_bound"] = prime_bound;
    j["seed"] = std::to_string(seed);
    j["runs"] = json::array();
    for (const auto& run : report.runs) {
        json r;
        r["run_seed"] = std::to_string(run.run_seed);
        r["p"] = std::to_string(run.branch.p);
        r["B1"] = field_strings({run.branch.B1[0], run.branch.B1[1]});
        r["B2"] = field_strings(run.branch.B2);
        r["all_on_image_count"] = run.all_on_image_count;
        r["recovered_B1"] = field_strings(run.recovered_B1);
        r["recovered_B2"] = field_strings(run.recovered_B2);
        if (genus == 2) r["certificate_count"] = run.certificate_count;
        r["match"] = run.match;
        if (!run.error.empty()) r["error"] = run.error;
        if (timings) r["elapsed_ms"] = run.elapsed_ms;
        j["runs"].push_back(std::move(r));
    }
    j["matches"] = report.matches;
    j["total"] = report.runs.size();
    emit(j);
    return report.matches == static_cast<int>(report.runs.size()) ? 0 : 1;
}

bool selftest_check(json& checks, const std::string& name, bool ok) {
    checks.push_back(json{{"name", name}, {"passed", ok}});
    return ok;
}

int run_selftest() {
    using namespace prymlab;
    json checks = json::array();
    int failed = 0;
    auto record = [&](const std::string& name, bool ok) {
        if (!selftest_check(checks, name, ok)) ++failed;
    };

    {
        bool ok = true;
        const int expected[] = {0, 3, 10, 36};
        for (int g = 1; g <= 3; ++g) {
            int zeros = 0;
            for (const auto& c : enumerate_torsion(g))
                if (q_std(c) == 0) ++zeros;
            ok = ok && zeros == expected[g];
        }
        record("char2 even form zero counts", ok);
    }
    {
        bool ok = true;
        const QuadraticFormF2 forms[] = {QuadraticFormF2::standard(2),
                                         QuadraticFormF2(Characteristic2(2, 1, 2), 1)};
        const auto all = enumerate_torsion(2);
        for (const auto& q : forms)
            for (const auto& c : all)
                for (const auto& a : all) {
                    const int lhs = form_eval(q, c + a) ^ form_eval(q, c) ^ form_eval(q, a) ^
                                    form_eval(q, Characteristic2::zero(2));
                    ok = ok && lhs == weyl_pairing(c, a);
                }
        record("char2 polar identity", ok);
    }
    {
        bool ok = true;
        for (int g = 2; g <= 4; ++g) {
            const CoverContext ctx(g);
            for (const auto& c : enumerate_torsion(g))
                ok = ok && norm_char(ctx, pullback_char(ctx, c)).is_zero();
        }
        record("covering norm after pullback vanishes", ok);
    }
    {
        bool ok = true;
        for (int g = 2; g <= 3; ++g) {
            const CoverContext ctx(g);
            const auto orbits = classify_vanishing_orbits(ctx);
            const std::size_t want = 1u << (2 * (g - 1));
            ok = ok && orbits.orbit0.size() == want && orbits.orbit1.size() == want &&
                 orbits.orbit2.size() == want;
        }
        record("covering vanishing orbit sizes", ok);
    }
    {
        bool ok = true;
        for (int g = 2; g <= 4; ++g) {
            const auto rec = kernel_norm_structure(CoverContext(g));
            ok = ok && rec.matches_p2_union_mu_p2 &&
                 rec.kernel_in_B2.size() == 2u * (1u << (2 * (g - 1)));
        }
        record("covering norm kernel structure", ok);
    }
    {
        const auto t = theta_constants_g1(cplx(0, 1), 1e-13);
        record("theta frozen constant at tau = i",
               std::abs(t.t00 - cplx(1.0864348112133080, 0)) < 1e-12);
        bool jac = true;
        for (const cplx tau : {cplx(0, 1), cplx(0.3, 1.7)}) {
            const auto c = theta_constants_g1(tau, 1e-13);
            auto p4 = [](cplx v) { return v * v * v * v; };
            jac = jac && std::abs(p4(c.t00) - p4(c.t01) - p4(c.t10)) < 1e-10;
        }
        record("theta Jacobi identity", jac);
    }
    {
        bool ok = true;
        const PeriodMatrix tau(1, {cplx(0.4, 1.1)});
        const std::vector<cplx> z{cplx(0.3, 0.2)};
        std::vector<cplx> mz{-z[0]};
        for (const auto& c : enumerate_torsion(1)) {
            const RationalCharacteristic rc(c);
            const cplx lhs = theta_eval(rc, mz, tau, 1e-12);
            const double sign = (c.top & c.bottom & 1u) ? -1.0 : 1.0;
            ok = ok && std::abs(lhs - sign * theta_eval(rc, z, tau, 1e-12)) < 1e-10;
        }
        record("theta parity law", ok);
    }
    record("genus1 k(i) = -2", std::abs(k_of_tau(cplx(0, 1)) - cplx(-2, 0)) < 1e-9);
    {
        bool ok = true;
        for (const double l : {-1.0, -2.5, -0.3}) {
            const cplx tau = tau_from_lambda(cplx(l, 0));
            ok = ok && tau.imag() > 0 && std::abs(lambda_of_tau(tau) - cplx(l, 0)) < 1e-9;
        }
        record("genus1 lambda round trip", ok);
    }
    {
        const HyperellipticCurve C(499, {1, 5, 17, 101, 222});
        SplitMix64 rng(7);
        auto random_point = [&]() {
            while (true) {
                const std::uint64_t x = rng.below(499);
                const auto y = C.field().sqrt(poly::eval(C.field(), C.f(), x));
                if (y.has_value()) return CurvePoint::affine(x, *y);
            }
        };
        auto random_divisor = [&]() {
            MumfordDivisor D = MumfordDivisor::identity();
            for (int i = 0; i < C.genus(); ++i) D = cantor_add(C, D, divisor_of_point(C, random_point()));
            return D;
        };
        bool ok = true;
        for (int trial = 0; trial < 10; ++trial) {
            const auto D1 = random_divisor(), D2 = random_divisor(), D3 = random_divisor();
            ok = ok && cantor_add(C, D1, MumfordDivisor::identity()) == D1;
            ok = ok && cantor_add(C, D1, cantor_neg(C, D1)).is_identity();
            ok = ok && cantor_add(C, cantor_add(C, D1, D2), D3) == cantor_add(C, D1, cantor_add(C, D2, D3));
        }
        record("hyperjac Cantor group axioms", ok);
    }
    {
        const HyperellipticCurve C(83, {0, 1, 2, 3, 4});
        const auto classes = enumerate_two_torsion(C);
        bool ok = classes.size() == 16;
        for (const auto& a : classes) {
            const auto Da = two_torsion_from_subset(C, a);
            ok = ok && cantor_add(C, Da, Da).is_identity();
            for (const auto& b : classes) {
                const auto sum = two_torsion_from_subset(C, two_torsion_sum(C, a, b));
                ok = ok && cantor_add(C, Da, two_torsion_from_subset(C, b)) == sum;
            }
        }
        record("hyperjac two-torsion subset model", ok);
    }
    {
        RoundTripConfig cfg;
        cfg.genus = 3;
        cfg.prime_bound = 2000;
        cfg.seed = 42;
        cfg.runs = 2;
        const auto rep = round_trip(cfg);
        record("roundtrip genus 3", rep.matches == 2);
        cfg.genus = 2;
        cfg.seed = 43;
        const auto rep2 = round_trip(cfg);
        record("roundtrip genus 2", rep2.matches == 2);
    }

    json j;
    j["checks"] = checks;
    j["passed"] = checks.size() - failed;
    j["failed"] = failed;
    emit(j);
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numerical tools for theta characteristics, double covers and "
                 "hyperelliptic Prym reconstruction"};
    app.require_subcommand(1);

    int rc = 0;

    auto* classify = app.add_subcommand("classify-orbits", "Vanishing orbits of the cover form on B2");
    int genus = 2;
    classify->add_option("--genus", genus, "Base curve genus (2..4)")->required();
    classify->callback([&] { rc = run_classify(genus); });

    auto* theta = app.add_subcommand("theta-eval", "Evaluate theta with characteristics");
    std::string char_text, tau_text, z_text;
    double eps = -1;
    theta->add_option("--char", char_text, "Characteristic top/bottom, e.g. 01/10 or 2:01/10")->required();
    theta->add_option("--tau", tau_text, "Period matrix: re,im or g rows re,im;re,im;...")->required();
    theta->add_option("--z", z_text, "Argument: g pairs re,im,... (default 0)");
    theta->add_option("--eps", eps, "Target tail bound (default 1e-12 or PRYM_LAB_EPS)");
    theta->callback([&] { rc = run_theta_eval(char_text, tau_text, z_text, eps > 0 ? eps : default_eps()); });

    auto* kof = app.add_subcommand("k-of-tau", "Moduli coordinate k of a genus-1 period");
    std::string ktau_text;
    double keps = -1;
    kof->add_option("--tau", ktau_text, "Period re,im")->required();
    kof->add_option("--eps", keps, "Theta tail bound (default 1e-12 or PRYM_LAB_EPS)");
    kof->callback([&] { rc = run_k_of_tau(ktau_text, keps > 0 ? keps : default_eps()); });

    auto* cfk = app.add_subcommand("curve-from-k", "Legendre curve with marking for a k value");
    std::string k_text;
    cfk->add_option("--k", k_text, "k value: re or re,im")->required();
    cfk->callback([&] { rc = run_curve_from_k(k_text); });

    auto* rt = app.add_subcommand("roundtrip-hyperelliptic", "Seeded forward-and-back reconstruction drill");
    int rt_genus = 3, rt_runs = 1;
    std::uint64_t rt_bound = 10000, rt_seed = 0;
    bool rt_timings = false;
    rt->add_option("--genus", rt_genus, "Scenario genus (>= 2)")->required();
    rt->add_option("--prime-bound", rt_bound, "Upper bound for the sampled prime")->required();
    rt->add_option("--seed", rt_seed, "Master seed")->required();
    rt->add_option("--runs", rt_runs, "Number of runs")->required();
    rt->add_flag("--timings", rt_timings, "Include elapsed_ms per run (non-deterministic output)");
    rt->callback([&] { rc = run_roundtrip(rt_genus, rt_bound, rt_seed, rt_runs, rt_timings); });

    auto* st = app.add_subcommand("selftest", "Run the embedded invariant checks");
    st->callback([&] { rc = run_selftest(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    } catch (const std::invalid_argument& e) {
        nlohmann::ordered_json err{{"error", {{"type", "invalid_argument"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        nlohmann::ordered_json err{{"error", {{"type", "domain_error"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        nlohmann::ordered_json err{{"error", {{"type", "runtime_error"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return rc;
}
