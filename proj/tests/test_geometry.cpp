#include <catch2/catch_amalgamated.hpp>

#include <ringcode/ringcode.hpp>

#include "oracles.hpp"

using namespace ringcode;

namespace {

const std::vector<std::string>& ball_rings() {
    static const std::vector<std::string> specs = {"Z2", "Z3",    "Z4",    "Z6",   "Z8",
                                                   "Z9", "GF(4)", "Z2xZ2", "Z2xZ4"};
    return specs;
}

Code make_code(const FiniteRing& ring, std::size_t n, std::vector<Word> words) {
    return Code::make(ring, n, std::move(words));
}

}  // namespace

TEST_CASE("sphere sizes from the generating function") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    REQUIRE(sphere_size_overweight(z4, 2, 0) == 1);
    REQUIRE(sphere_size_overweight(z4, 2, 1) == 4);
    REQUIRE(sphere_size_overweight(z4, 2, 2) == 6);
    REQUIRE_THROWS_AS(sphere_size_overweight(z4, 2, -1), std::domain_error);
    REQUIRE_THROWS_AS(sphere_size_overweight(z4, 2, 5), std::domain_error);
}

TEST_CASE("sphere sizes sum to |R|^n") {
    for (const auto& spec : ball_rings()) {
        CAPTURE(spec);
        FiniteRing r = FiniteRing::from_spec(spec);
        for (std::size_t n = 1; n <= 3; ++n) {
            BigInt total = 0;
            for (long long t = 0; t <= 2 * static_cast<long long>(n); ++t)
                total += sphere_size_overweight(r, n, t);
            REQUIRE(total == space_size(r, n));
        }
    }
}

TEST_CASE("ball volume formula matches the worked Z4 values") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    REQUIRE(ball_volume_overweight(z4, 2, 1) == 5);
    REQUIRE(ball_volume_overweight(z4, 2, 2) == 11);
    REQUIRE(ball_volume_overweight(z4, 2, 4) == 16);
    REQUIRE(ball_volume_overweight(z4, 2, 100) == 16);  // beyond 2n: whole space
    REQUIRE(ball_volume_overweight(z4, 2, 0) == 1);
}

TEST_CASE("ball volume formula equals brute-force enumeration") {
    for (const auto& spec : ball_rings()) {
        CAPTURE(spec);
        FiniteRing r = FiniteRing::from_spec(spec);
        WeightFunction ow = WeightFunction::overweight(r);
        for (std::size_t n = 1; n <= 2; ++n) {
            for (long long e = 0; e <= 2 * static_cast<long long>(n); ++e) {
                const std::size_t brute = oracles::ball_count(r, ow, Word(n, r.zero()), Rat(e));
                REQUIRE(ball_volume_overweight(r, n, e) == brute);
                // and the coefficient formula per shell
                const std::size_t shell = oracles::sphere_count(r, ow, n, Rat(e));
                REQUIRE(sphere_size_overweight(r, n, e) == shell);
            }
        }
    }
    // one deeper spot check
    FiniteRing z9 = FiniteRing::from_spec("Z9");
    WeightFunction ow9 = WeightFunction::overweight(z9);
    REQUIRE(ball_volume_overweight(z9, 3, 4) ==
            oracles::ball_count(z9, ow9, Word(3, 0), Rat(4)));
}

TEST_CASE("ball_enumerate agrees with the closed form and shifts with the center") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    WeightFunction ow = WeightFunction::overweight(z4);

    auto b0 = ball_enumerate({Word{0}, Rat(1), &ow});
    REQUIRE(b0 == std::vector<Word>{{0}, {1}, {3}});
    auto b1 = ball_enumerate({Word{1}, Rat(1), &ow});
    REQUIRE(b1 == std::vector<Word>{{0}, {1}, {2}});

    FiniteRing z6 = FiniteRing::from_spec("Z6");
    auto hom = solve_homogeneous(z6, Rat(1));
    auto b6 = ball_enumerate({Word{0}, Rat(1, 2), &*hom.weight});
    REQUIRE(b6 == std::vector<Word>{{0}, {1}, {5}});

    REQUIRE_THROWS_AS(ball_enumerate({Word{0, 0}, Rat(1), &ow}, 10), CapExceeded);
    REQUIRE_THROWS_AS(ball_enumerate({Word{0}, Rat(-1), &ow}), std::invalid_argument);
}

TEST_CASE("ball volume is translation invariant and monotone") {
    FiniteRing z8 = FiniteRing::from_spec("Z8");
    WeightFunction ow = WeightFunction::overweight(z8);
    const std::size_t base = ball_enumerate({Word{0, 0}, Rat(2), &ow}).size();
    for (Word center : {Word{1, 2}, Word{7, 7}, Word{4, 0}, Word{3, 5}})
        REQUIRE(ball_enumerate({center, Rat(2), &ow}).size() == base);

    BigInt prev = 0;
    for (long long e = 0; e <= 4; ++e) {
        BigInt cur = ball_volume_overweight(z8, 2, e);
        REQUIRE(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("minimum distance") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    WeightFunction ow = WeightFunction::overweight(z4);

    REQUIRE(*min_distance(make_code(z4, 2, {{0, 0}, {2, 2}}), ow) == 4);
    REQUIRE(*min_distance(make_code(z4, 2, {{0, 0}, {2, 1}}), ow) == 3);
    REQUIRE(*min_distance(make_code(z4, 1, {{0}, {1}, {2}, {3}}), ow) == 1);
    REQUIRE_FALSE(min_distance(make_code(z4, 1, {{2}}), ow).has_value());
}

TEST_CASE("pairwise distance sums") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    WeightFunction ow = WeightFunction::overweight(z4);

    REQUIRE(pairwise_distance_sum(make_code(z4, 1, {{0}, {1}, {2}, {3}}), ow) == 16);
    REQUIRE(pairwise_distance_sum(make_code(z4, 1, {{0}}), ow) == 0);
    REQUIRE(pairwise_distance_sum(make_code(z4, 2, {{0, 0}, {2, 2}}), ow) == 8);
}

TEST_CASE("pairwise sum dominates M(M-1) * min distance on random codes") {
    std::mt19937_64 rng(7);
    for (const auto& spec : {"Z4", "Z6", "Z9"}) {
        FiniteRing r = FiniteRing::from_spec(spec);
        WeightFunction ow = WeightFunction::overweight(r);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 1 + rng_below(rng, 3);
            std::vector<Word> words;
            const std::size_t m = 2 + rng_below(rng, 6);
            for (std::size_t i = 0; i < m; ++i) {
                Word w(n);
                for (auto& x : w) x = static_cast<std::uint16_t>(rng_below(rng, r.order()));
                words.push_back(std::move(w));
            }
            Code code = Code::make(r, n, std::move(words));
            if (code.size() < 2) continue;
            const Rat m2(code.size());
            REQUIRE(pairwise_distance_sum(code, ow) >= m2 * (m2 - 1) * *min_distance(code, ow));
        }
    }
}

TEST_CASE("code construction validates and deduplicates") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    bool dup = false;
    Code c = Code::make(z4, 2, {{1, 1}, {0, 0}, {1, 1}}, &dup);
    REQUIRE(dup);
    REQUIRE(c.size() == 2);
    REQUIRE(c.words == std::vector<Word>{{0, 0}, {1, 1}});  // sorted

    REQUIRE_THROWS_AS(Code::make(z4, 2, {{0}}), std::invalid_argument);       // wrong length
    REQUIRE_THROWS_AS(Code::make(z4, 1, {{9}}), std::invalid_argument);       // bad index
    REQUIRE_THROWS_AS(Code::make(z4, 1, {}), std::invalid_argument);          // empty
}
