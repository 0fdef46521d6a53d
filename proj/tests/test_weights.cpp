#include <catch2/catch_amalgamated.hpp>

#include <ringcode/ringcode.hpp>

#include "oracles.hpp"

using namespace ringcode;

namespace {

std::vector<Rat> rats(std::initializer_list<int> xs) {
    std::vector<Rat> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

const std::vector<std::string>& test_specs() {
    static const std::vector<std::string> specs = {"Z2",    "Z4",    "Z6",    "Z8",   "Z9",
                                                   "GF(4)", "GF(8)", "GF(9)", "Z2xZ2", "Z2xZ4",
                                                   "Z4[x]/(x^2-2)", "Z2[x]/(x^2)"};
    return specs;
}

/// Direct ideal-average verification of a homogeneous table.
void check_ideal_averages(const FiniteRing& ring, const WeightFunction& w, const Rat& gamma) {
    for (const auto& ideal : ring.left_ideals()) {
        if (ideal.size() == 1) continue;
        Rat sum = 0;
        for (std::uint16_t x : ideal) sum += w.weight(x);
        REQUIRE(sum == gamma * Rat(ideal.size()));
    }
}

}  // namespace

TEST_CASE("hamming weight") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    WeightFunction h = WeightFunction::hamming(z4);
    REQUIRE(h.table() == rats({0, 1, 1, 1}));
    Word w = {0, 2, 3};
    REQUIRE(h.word_weight(w) == 2);
    FiniteRing z6 = FiniteRing::from_spec("Z6");
    REQUIRE(WeightFunction::hamming(z6).gamma() == Rat(5, 6));
}

TEST_CASE("lee weight") {
    REQUIRE(WeightFunction::lee(FiniteRing::from_spec("Z4")).table() == rats({0, 1, 2, 1}));
    REQUIRE(WeightFunction::lee(FiniteRing::from_spec("Z6")).table() ==
            rats({0, 1, 2, 3, 2, 1}));
    REQUIRE(WeightFunction::lee(FiniteRing::from_spec("Z5")).table() == rats({0, 1, 2, 2, 1}));
    REQUIRE_THROWS_AS(WeightFunction::lee(FiniteRing::from_spec("GF(4)")), std::domain_error);
    REQUIRE_THROWS_AS(WeightFunction::lee(FiniteRing::from_spec("Z2xZ3")), std::domain_error);
}

TEST_CASE("overweight") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    REQUIRE(WeightFunction::overweight(z4).table() == rats({0, 1, 2, 1}));
    REQUIRE(WeightFunction::overweight(z4).max_element_weight() == 2);

    FiniteRing gf4 = FiniteRing::from_spec("GF(4)");
    REQUIRE(WeightFunction::overweight(gf4).table() == WeightFunction::hamming(gf4).table());

    FiniteRing z6 = FiniteRing::from_spec("Z6");
    REQUIRE(WeightFunction::overweight(z6).table() == rats({0, 1, 2, 2, 2, 1}));
}

TEST_CASE("homogeneous solver on Z4, Z6, Z8") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    auto s4 = solve_homogeneous(z4, Rat(1));
    REQUIRE(s4.status == HomStatus::Unique);
    REQUIRE(s4.weight->table() == rats({0, 1, 2, 1}));
    REQUIRE(s4.weight->unique_homogeneous());
    check_ideal_averages(z4, *s4.weight, Rat(1));

    FiniteRing z6 = FiniteRing::from_spec("Z6");
    auto s6 = solve_homogeneous(z6, Rat(1));
    REQUIRE(s6.status == HomStatus::Unique);
    REQUIRE(s6.weight->table() ==
            std::vector<Rat>{Rat(0), Rat(1, 2), Rat(3, 2), Rat(2), Rat(3, 2), Rat(1, 2)});
    check_ideal_averages(z6, *s6.weight, Rat(1));

    FiniteRing z8 = FiniteRing::from_spec("Z8");
    auto s8 = solve_homogeneous(z8, Rat(1));
    REQUIRE(s8.status == HomStatus::Unique);
    REQUIRE(s8.weight->table() == rats({0, 1, 1, 1, 2, 1, 1, 1}));
    check_ideal_averages(z8, *s8.weight, Rat(1));

    // the average value scales the table linearly
    auto s8b = solve_homogeneous(z8, Rat(3, 2));
    REQUIRE(s8b.status == HomStatus::Unique);
    for (std::uint16_t x = 0; x < 8; ++x)
        REQUIRE(s8b.weight->weight(x) == s8.weight->weight(x) * Rat(3, 2));

    REQUIRE_THROWS_AS(solve_homogeneous(z8, Rat(0)), std::invalid_argument);
    REQUIRE_THROWS_AS(solve_homogeneous(z8, Rat(-1)), std::invalid_argument);
}

TEST_CASE("homogeneous solver exists uniquely on every built-in ring") {
    for (const auto& spec : test_specs()) {
        CAPTURE(spec);
        FiniteRing r = FiniteRing::from_spec(spec);
        auto s = solve_homogeneous(r, Rat(1));
        REQUIRE(s.status == HomStatus::Unique);
        REQUIRE(s.nonnegative);
        check_ideal_averages(r, *s.weight, Rat(1));
        // homogeneous weights are constant on associate classes
        for (const auto& cls : r.associate_classes())
            for (std::uint16_t x : cls)
                REQUIRE(s.weight->weight(x) == s.weight->weight(cls.front()));
    }
}

TEST_CASE("homogeneous solver reports no solution on a non-Frobenius ring") {
    FiniteRing nf = oracles::non_frobenius_ring();
    REQUIRE(nf.locality().is_local);
    REQUIRE(nf.locality().maximal_ideal.size() == 4);

    auto all = solve_homogeneous(nf, Rat(1));
    REQUIRE(all.status == HomStatus::NoSolution);
    REQUIRE_FALSE(all.weight.has_value());

    // with principal-ideal constraints only (the generalized definition)
    // the same ring does carry a unique solution
    auto principal = solve_homogeneous(nf, Rat(1), true);
    REQUIRE(principal.status == HomStatus::Unique);
    REQUIRE(principal.principal_only);
    std::vector<Rat> expected = {Rat(0), Rat(1, 2), Rat(2), Rat(1, 2),
                                 Rat(2), Rat(1, 2), Rat(2), Rat(1, 2)};
    REQUIRE(principal.weight->table() == expected);
}

TEST_CASE("average weight") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    WeightFunction ow4 = WeightFunction::overweight(z4);
    std::vector<std::uint16_t> all4 = {0, 1, 2, 3};
    REQUIRE(average_weight(ow4, all4) == 1);
    std::vector<std::uint16_t> ideal = {0, 2};
    REQUIRE(average_weight(ow4, ideal) == 1);

    FiniteRing z8 = FiniteRing::from_spec("Z8");
    WeightFunction ow8 = WeightFunction::overweight(z8);
    std::vector<std::uint16_t> all8 = {0, 1, 2, 3, 4, 5, 6, 7};
    REQUIRE(average_weight(ow8, all8) == Rat(5, 4));

    REQUIRE_THROWS_AS(average_weight(ow4, std::vector<std::uint16_t>{}), std::invalid_argument);
}

TEST_CASE("ideal average formula equals direct averages on local rings") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    std::vector<std::uint16_t> r4 = {0, 1, 2, 3};
    REQUIRE(ideal_average_formula(z4, r4) == 1);

    FiniteRing z8 = FiniteRing::from_spec("Z8");
    REQUIRE(ideal_average_formula(z8, z8.locality().maximal_ideal) == Rat(3, 2));
    std::vector<std::uint16_t> zero = {0};
    REQUIRE(ideal_average_formula(z8, zero) == 0);

    for (const auto& spec : test_specs()) {
        CAPTURE(spec);
        FiniteRing r = FiniteRing::from_spec(spec);
        if (!r.locality().is_local) continue;
        WeightFunction ow = WeightFunction::overweight(r);
        for (const auto& ideal : r.left_ideals())
            REQUIRE(ideal_average_formula(r, ideal) == average_weight(ow, ideal));
    }

    REQUIRE_THROWS_AS(
        ideal_average_formula(FiniteRing::from_spec("Z6"), std::vector<std::uint16_t>{0}),
        std::domain_error);
}

TEST_CASE("eta") {
    REQUIRE(eta(FiniteRing::from_spec("Z4")) == 1);
    REQUIRE(eta(FiniteRing::from_spec("Z8")) == Rat(3, 2));
    REQUIRE(eta(FiniteRing::from_spec("Z9")) == Rat(4, 3));
    REQUIRE_THROWS_AS(eta(FiniteRing::from_spec("Z6")), std::domain_error);    // not local
    REQUIRE_THROWS_AS(eta(FiniteRing::from_spec("GF(4)")), std::domain_error); // field

    // eta dominates every ideal average (the extremal ideal average)
    for (const auto& spec : test_specs()) {
        CAPTURE(spec);
        FiniteRing r = FiniteRing::from_spec(spec);
        if (!r.locality().is_local || r.locality().maximal_ideal.size() < 2) continue;
        WeightFunction ow = WeightFunction::overweight(r);
        for (const auto& ideal : r.left_ideals())
            REQUIRE(eta(r) >= average_weight(ow, ideal));
    }
}

TEST_CASE("triangle inequality checks") {
    for (const auto& spec : test_specs()) {
        CAPTURE(spec);
        FiniteRing r = FiniteRing::from_spec(spec);
        REQUIRE_FALSE(triangle_violation(WeightFunction::overweight(r)).has_value());
    }

    FiniteRing z6 = FiniteRing::from_spec("Z6");
    auto hom6 = solve_homogeneous(z6, Rat(1));
    auto bad = triangle_violation(*hom6.weight);
    REQUIRE(bad.has_value());
    REQUIRE(*bad == std::make_pair(std::uint16_t{1}, std::uint16_t{1}));
    REQUIRE(hom6.weight->weight(2) == Rat(3, 2));  // w(1+1) > w(1)+w(1) = 1

    for (std::size_t m : {4, 5, 8}) {
        FiniteRing zm = FiniteRing::from_spec("Z" + std::to_string(m));
        REQUIRE_FALSE(triangle_violation(*solve_homogeneous(zm, Rat(1)).weight).has_value());
    }
    FiniteRing z12 = FiniteRing::from_spec("Z12");
    REQUIRE(triangle_violation(*solve_homogeneous(z12, Rat(1)).weight).has_value());
}

TEST_CASE("weight tables are nonnegative, vanish at 0, and are even") {
    for (const auto& spec : test_specs()) {
        CAPTURE(spec);
        FiniteRing r = FiniteRing::from_spec(spec);
        std::vector<WeightFunction> ws;
        ws.push_back(WeightFunction::hamming(r));
        ws.push_back(WeightFunction::overweight(r));
        auto hom = solve_homogeneous(r, Rat(1));
        if (hom.status == HomStatus::Unique) ws.push_back(*hom.weight);
        for (const auto& w : ws) {
            REQUIRE(w.weight(r.zero()) == 0);
            for (std::uint16_t x = 0; x < r.order(); ++x) REQUIRE(w.weight(x) >= 0);
        }
        // w(x) = w(-x) for overweight and homogeneous
        for (std::uint16_t x = 0; x < r.order(); ++x) {
            REQUIRE(ws[1].weight(x) == ws[1].weight(r.neg(x)));
            if (ws.size() == 3) REQUIRE(ws[2].weight(x) == ws[2].weight(r.neg(x)));
        }
    }
}

TEST_CASE("overweight, Lee and homogeneous(1) coincide on Z4") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    WeightFunction lee = WeightFunction::lee(z4);
    WeightFunction ow = WeightFunction::overweight(z4);
    auto hom = solve_homogeneous(z4, Rat(1));
    REQUIRE(lee.table() == ow.table());
    REQUIRE(hom.weight->table() == ow.table());
}

TEST_CASE("distance oracle identities on words of length <= 2") {
    for (const auto& spec : {"Z4", "Z6", "GF(4)"}) {
        CAPTURE(spec);
        FiniteRing r = FiniteRing::from_spec(spec);
        WeightFunction ow = WeightFunction::overweight(r);
        DistanceOracle d{&ow};
        for (std::size_t n = 1; n <= 2; ++n) {
            std::vector<Word> words;
            Word w(n, 0);
            do {
                words.push_back(w);
            } while (next_word(w, r.order()));
            std::size_t bad = 0;
            const Word zero(n, r.zero());
            for (const Word& a : words)
                for (const Word& b : words) {
                    Word diff(n);
                    for (std::size_t i = 0; i < n; ++i) diff[i] = r.sub(a[i], b[i]);
                    if (d(a, b) != d(b, a)) ++bad;
                    if (d(a, b) != d(diff, zero)) ++bad;
                    if (a == b && d(a, b) != 0) ++bad;
                    if (a != b && d(a, b) <= 0) ++bad;
                }
            REQUIRE(bad == 0);
        }
    }
}

TEST_CASE("overweight distance satisfies the triangle inequality on short words") {
    for (const auto& spec : {"Z4", "Z6", "Z8", "GF(4)", "Z2xZ4"}) {
        CAPTURE(spec);
        FiniteRing r = FiniteRing::from_spec(spec);
        WeightFunction ow = WeightFunction::overweight(r);
        for (std::size_t n = 1; n <= 2; ++n) {
            if (int_pow(BigInt(r.order()), 3 * n) > 1000000) continue;
            std::vector<Word> words;
            Word w(n, 0);
            do {
                words.push_back(w);
            } while (next_word(w, r.order()));
            std::size_t bad = 0;
            for (const Word& a : words)
                for (const Word& b : words)
                    for (const Word& c : words)
                        if (ow.word_distance(a, c) >
                            ow.word_distance(a, b) + ow.word_distance(b, c))
                            ++bad;
            REQUIRE(bad == 0);
        }
    }
}

TEST_CASE("custom weights validate their invariants") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    REQUIRE_THROWS_AS(WeightFunction::custom(z4, "w", {Rat(1), Rat(1), Rat(1), Rat(1)}),
                      std::invalid_argument);  // w(0) != 0
    REQUIRE_THROWS_AS(WeightFunction::custom(z4, "w", {Rat(0), Rat(-1), Rat(1), Rat(1)}),
                      std::invalid_argument);  // negative
    REQUIRE_THROWS_AS(WeightFunction::custom(z4, "w", {Rat(0), Rat(1)}),
                      std::invalid_argument);  // wrong size
    WeightFunction ok = WeightFunction::custom(z4, "w", {Rat(0), Rat(1, 3), Rat(2), Rat(1, 3)});
    REQUIRE(ok.gamma() == Rat(2, 3));  // (1/3 + 2 + 1/3) / 4
    REQUIRE(ok.max_element_weight() == 2);
}
