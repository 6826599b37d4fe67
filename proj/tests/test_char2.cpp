#include "prymlab/char2.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace prymlab;

TEST_SUITE("char2") {

    TEST_CASE("construction validates genus and bit width") {
        CHECK_THROWS_AS(Characteristic2(0, 0, 0), std::invalid_argument);
        CHECK_THROWS_AS(Characteristic2(17, 0, 0), std::invalid_argument);
        CHECK_THROWS_AS(Characteristic2(2, 0b100, 0), std::invalid_argument);
        CHECK_THROWS_AS(Characteristic2(2, 0, 0b100), std::invalid_argument);
        CHECK(Characteristic2::zero(3).is_zero());
        CHECK(Characteristic2(16, 0xFFFF, 0xFFFF).g == 16);
    }

    TEST_CASE("addition is coordinatewise XOR") {
        const Characteristic2 a(2, 0b01, 0b10);
        const Characteristic2 b(2, 0b11, 0b10);
        const Characteristic2 c = a + b;
        CHECK(c.top == 0b10);
        CHECK(c.bottom == 0b00);
        CHECK((a + a).is_zero());
        CHECK_THROWS_AS(a + Characteristic2::zero(3), std::invalid_argument);
    }

    TEST_CASE("weyl pairing on the symplectic basis") {
        // dual basis vectors pair to 1, everything else in the basis pairs to 0
        const Characteristic2 half_b1(1, 1, 0);
        const Characteristic2 half_a1(1, 0, 1);
        CHECK(weyl_pairing(half_b1, half_a1) == 1);
        CHECK(weyl_pairing(half_a1, half_b1) == 1);
        CHECK(weyl_pairing(half_a1, half_a1) == 0);
        CHECK(weyl_pairing(half_b1, half_b1) == 0);

        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const Characteristic2 ai(2, 0, 1u << i);
                const Characteristic2 bj(2, 1u << j, 0);
                CHECK(weyl_pairing(ai, bj) == (i == j ? 1 : 0));
                CHECK(weyl_pairing(ai, Characteristic2(2, 0, 1u << j)) == 0);
                CHECK(weyl_pairing(bj, Characteristic2(2, 1u << i, 0)) == 0);
            }
    }

    TEST_CASE("weyl pairing is symplectic, bilinear and nondegenerate") {
        for (int g = 1; g <= 3; ++g) {
            const auto all = enumerate_torsion(g);
            for (const auto& a : all) {
                CHECK(weyl_pairing(a, a) == 0);
                if (!a.is_zero()) {
                    bool hit = false;
                    for (const auto& b : all)
                        if (weyl_pairing(a, b) == 1) hit = true;
                    CHECK(hit);
                }
            }
        }
        const auto all = enumerate_torsion(2);
        for (const auto& a : all)
            for (const auto& b : all)
                for (const auto& c : all) {
                    CHECK(weyl_pairing(a + b, c) == (weyl_pairing(a, c) ^ weyl_pairing(b, c)));
                    CHECK(weyl_pairing(a, b) == weyl_pairing(b, a));
                }
    }

    TEST_CASE("standard form zero counts follow 2^(g-1)(2^g+1)") {
        const int expected[] = {0, 3, 10, 36, 136};
        for (int g = 1; g <= 4; ++g) {
            int zeros = 0;
            for (const auto& c : enumerate_torsion(g))
                if (q_std(c) == 0) ++zeros;
            CHECK(zeros == expected[g]);
        }
    }

    TEST_CASE("polar identity links forms to the pairing") {
        const auto all = enumerate_torsion(2);
        const QuadraticFormF2 forms[] = {
            QuadraticFormF2::standard(2),
            QuadraticFormF2(Characteristic2(2, 0b01, 0b10), 0),
            QuadraticFormF2(Characteristic2(2, 0b11, 0b01), 1),
        };
        const Characteristic2 zero = Characteristic2::zero(2);
        for (const auto& q : forms)
            for (const auto& c : all)
                for (const auto& a : all) {
                    const int lhs = form_eval(q, c + a) ^ form_eval(q, c) ^ form_eval(q, a) ^ form_eval(q, zero);
                    CHECK(lhs == weyl_pairing(c, a));
                }
    }

    TEST_CASE("form evaluation with a shift") {
        // Shift (top 0, bottom e_0) at genus 3: the value at (top e_0, bottom 0) is 1,
        // at (top 0, bottom e_0) is 0.
        const QuadraticFormF2 q0(Characteristic2(3, 0, 1), 0);
        CHECK(form_eval(q0, Characteristic2(3, 1, 0)) == 1);
        CHECK(form_eval(q0, Characteristic2(3, 0, 1)) == 0);
        CHECK(form_eval(q0, Characteristic2(3, 1, 1)) == 0);
        CHECK(form_eval(q0, Characteristic2::zero(3)) == 0);

        const QuadraticFormF2 flipped(Characteristic2(3, 0, 1), 1);
        CHECK(form_eval(flipped, Characteristic2(3, 1, 0)) == 0);
        CHECK_THROWS_AS(form_eval(q0, Characteristic2::zero(2)), std::invalid_argument);
    }

    TEST_CASE("form translation satisfies its defining identity") {
        const auto all = enumerate_torsion(3);
        const QuadraticFormF2 q(Characteristic2(3, 0b101, 0b010), 1);
        int checked = 0;
        for (std::size_t ai = 0; ai < all.size(); ai += 7) {
            const auto& a = all[ai];
            const QuadraticFormF2 qa = form_translate(q, a);
            for (const auto& c : all) {
                CHECK(form_eval(qa, c) == (form_eval(q, c + a) ^ form_eval(q, a)));
                ++checked;
            }
        }
        CHECK(checked > 0);
    }

    TEST_CASE("translation is an involution on normalized forms") {
        const auto all = enumerate_torsion(2);
        for (const auto& s : all) {
            const QuadraticFormF2 q(s, q_std(s)); // q(0) = 0
            for (const auto& a : all) {
                const QuadraticFormF2 back = form_translate(form_translate(q, a), a);
                CHECK(back.shift == q.shift);
                CHECK(back.constant == q.constant);
            }
        }
        // translated forms are always normalized
        const QuadraticFormF2 odd(Characteristic2(2, 0b11, 0b11), 1);
        for (const auto& a : all) {
            const QuadraticFormF2 t = form_translate(odd, a);
            CHECK(form_eval(t, Characteristic2::zero(2)) == 0);
        }
    }

    TEST_CASE("enumeration is complete, duplicate-free and lexicographic") {
        for (int g = 1; g <= 4; ++g) {
            const auto all = enumerate_torsion(g);
            CHECK(all.size() == (1u << (2 * g)));
            CHECK(all.front().is_zero());
            CHECK(std::is_sorted(all.begin(), all.end()));
            const std::set<std::string> names = [&] {
                std::set<std::string> s;
                for (const auto& c : all) s.insert(c.to_string());
                return s;
            }();
            CHECK(names.size() == all.size());
        }
        CHECK_THROWS_AS(enumerate_torsion(11), std::invalid_argument);
    }

    TEST_CASE("lexicographic order reads entry 0 first") {
        // (0,1) < (1,0) as vectors, so top mask 0b10 (entry 1 set) precedes 0b01.
        const Characteristic2 entry1(2, 0b10, 0);
        const Characteristic2 entry0(2, 0b01, 0);
        CHECK(entry1 < entry0);
        const auto all = enumerate_torsion(1);
        CHECK(all[0].to_string() == "1:0/0");
        CHECK(all[1].to_string() == "1:0/1");
        CHECK(all[2].to_string() == "1:1/0");
        CHECK(all[3].to_string() == "1:1/1");
    }

    TEST_CASE("serialization round trips and rejects malformed text") {
        for (const auto& c : enumerate_torsion(2)) {
            const Characteristic2 back = Characteristic2::parse(c.to_string());
            CHECK(back == c);
        }
        CHECK(Characteristic2(3, 0b001, 0b110).to_string() == "3:100/011");
        CHECK(Characteristic2::parse("3:100/011") == Characteristic2(3, 0b001, 0b110));
        CHECK_THROWS_AS(Characteristic2::parse("abc"), std::invalid_argument);
        CHECK_THROWS_AS(Characteristic2::parse("2:01"), std::invalid_argument);
        CHECK_THROWS_AS(Characteristic2::parse("2:011/01"), std::invalid_argument);
        CHECK_THROWS_AS(Characteristic2::parse("2:0a/01"), std::invalid_argument);
        CHECK_THROWS_AS(Characteristic2::parse("0:/"), std::invalid_argument);
    }
}
