#include <catch2/catch_amalgamated.hpp>

#include <ringcode/ringcode.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

using namespace ringcode;

TEST_CASE("classical Plotkin bound over fields") {
    auto r = plotkin_field(2, 4, 3);
    REQUIRE(r.applicable);
    REQUIRE(*r.value == 3);  // 3 / (3 - 2)
    REQUIRE(*r.integer_bound == 3);

    auto r2 = plotkin_field(4, 3, 3);
    REQUIRE(r2.applicable);
    REQUIRE(*r2.value == 4);  // 3 / (3 - 9/4)

    auto r3 = plotkin_field(2, 4, 2);
    REQUIRE_FALSE(r3.applicable);
    REQUIRE_FALSE(r3.value.has_value());
    REQUIRE(r3.reason == "d <= (q-1)n/q");

    REQUIRE_THROWS_AS(plotkin_field(6, 4, 3), std::invalid_argument);
}

TEST_CASE("Plotkin bound for homogeneous weights") {
    auto r = plotkin_homogeneous(Rat(1), 2, Rat(3));
    REQUIRE(r.applicable);
    REQUIRE(*r.value == 3);

    auto r2 = plotkin_homogeneous(Rat(1), 2, Rat(4));
    REQUIRE(*r2.value == 2);

    auto r3 = plotkin_homogeneous(Rat(1), 3, Rat(3));
    REQUIRE_FALSE(r3.applicable);

    REQUIRE_THROWS_AS(plotkin_homogeneous(Rat(0), 2, Rat(3)), std::invalid_argument);
}

TEST_CASE("Plotkin bound for the overweight") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    auto r = plotkin_overweight(z4, 2, 3);
    REQUIRE(r.applicable);
    REQUIRE(*r.value == 3);
    REQUIRE(*r.integer_bound == 3);

    FiniteRing z8 = FiniteRing::from_spec("Z8");
    auto r2 = plotkin_overweight(z8, 2, 4);  // eta = 3/2, 4/(4-3)
    REQUIRE(r2.applicable);
    REQUIRE(*r2.value == 4);

    auto r3 = plotkin_overweight(FiniteRing::from_spec("Z6"), 2, 3);
    REQUIRE_FALSE(r3.applicable);
    REQUIRE(r3.reason == "ring is not local");

    auto r4 = plotkin_overweight(FiniteRing::from_spec("GF(4)"), 2, 3);
    REQUIRE_FALSE(r4.applicable);
    REQUIRE(r4.reason.find("plotkin_field") != std::string::npos);

    auto r5 = plotkin_overweight(z4, 2, 2);  // d = n*eta
    REQUIRE_FALSE(r5.applicable);
}

TEST_CASE("Plotkin distance corollary") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    REQUIRE(*plotkin_distance_corollary(z4, 2, 2).value == 4);
    REQUIRE(*plotkin_distance_corollary(z4, 2, 16).value == Rat(32, 15));
    REQUIRE(*plotkin_distance_corollary(z4, 2, 16).integer_bound == 2);

    FiniteRing z8 = FiniteRing::from_spec("Z8");
    REQUIRE(*plotkin_distance_corollary(z8, 1, 3).value == Rat(9, 4));

    REQUIRE_FALSE(plotkin_distance_corollary(z4, 2, 1).applicable);
    REQUIRE_FALSE(plotkin_distance_corollary(FiniteRing::from_spec("Z6"), 2, 2).applicable);
}

TEST_CASE("sphere-packing bound") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    auto r = sphere_packing_overweight(z4, 2, 3);
    REQUIRE(r.applicable);
    REQUIRE(*r.value == Rat(16, 5));
    REQUIRE(*r.integer_bound == 3);

    auto r2 = sphere_packing_overweight(z4, 2, 5);
    REQUIRE(*r2.value == Rat(16, 11));
    REQUIRE(*r2.integer_bound == 1);

    auto r3 = sphere_packing_overweight(z4, 2, 1);  // e = 0
    REQUIRE(*r3.value == 16);

    auto r4 = sphere_packing_overweight(z4, 2, 4);  // even d keeps e = 1
    REQUIRE(*r4.value == Rat(16, 5));
    REQUIRE_FALSE(r4.note.empty());

    REQUIRE_THROWS_AS(sphere_packing_overweight(z4, 2, 0), std::invalid_argument);
}

TEST_CASE("Gilbert-Varshamov bound") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    auto r = gilbert_varshamov_overweight(z4, 2, 2);
    REQUIRE(*r.value == Rat(16, 5));
    REQUIRE(*r.integer_bound == 4);  // lower bound: ceiling

    REQUIRE(*gilbert_varshamov_overweight(z4, 2, 1).value == 16);
    REQUIRE(*gilbert_varshamov_overweight(z4, 2, 3).value == Rat(16, 11));
    REQUIRE(*gilbert_varshamov_overweight(z4, 2, 3).integer_bound == 2);
    REQUIRE(*gilbert_varshamov_overweight(z4, 2, 0).value == 16);  // degenerate d = 0

    REQUIRE_THROWS_AS(gilbert_varshamov_overweight(z4, 2, 5), std::domain_error);
}

TEST_CASE("Johnson bound, exact boundary cases") {
    // threshold hit exactly: A = 1/16, gamma - sqrt(A) = 3/4 = rho
    auto r = johnson_homogeneous(4, Rat(4), Rat(1), Rat(3, 4));
    REQUIRE(r.applicable);
    REQUIRE(r.note == "condition (ii) holds");
    REQUIRE(*r.value == 16);
    REQUIRE(*r.integer_bound == 16);

    // A = 1, threshold 0, rho = 0
    auto r2 = johnson_homogeneous(1, Rat(1), Rat(1), Rat(0));
    REQUIRE(r2.applicable);
    REQUIRE(r2.note == "condition (ii) holds");
    REQUIRE(*r2.value == 1);

    // condition (i): gamma*n*(d - gamma*n) = 4 >= 1
    auto r3 = johnson_homogeneous(2, Rat(4), Rat(1), Rat(1));
    REQUIRE(r3.applicable);
    REQUIRE(r3.note == "condition (i) holds");
    REQUIRE(*r3.value == 8);

    // neither condition: n=2, d=1, gamma=1, rho=1 has A = 3/4 > (gamma-rho)^2 = 0
    auto r4 = johnson_homogeneous(2, Rat(1), Rat(1), Rat(1));
    REQUIRE_FALSE(r4.applicable);

    // both conditions at the seam A = 0: d/n = gamma + 1/(gamma n^2)
    auto r5 = johnson_homogeneous(2, Rat(5, 2), Rat(1), Rat(1));
    REQUIRE(r5.applicable);
    REQUIRE(r5.note == "conditions (i) and (ii) both hold");

    REQUIRE_THROWS_AS(johnson_homogeneous(2, Rat(1), Rat(1), Rat(2)), std::domain_error);
    REQUIRE_THROWS_AS(johnson_homogeneous(2, Rat(1), Rat(1), Rat(-1)), std::invalid_argument);
}

TEST_CASE("non-integral Johnson list bound carries its floor") {
    auto r = johnson_homogeneous(3, Rat(7, 2), Rat(1), Rat(0));
    REQUIRE(r.applicable);
    REQUIRE(*r.value == Rat(21, 2));
    REQUIRE(*r.integer_bound == 10);
}

TEST_CASE("overweight Plotkin on Z4 equals homogeneous Plotkin with gamma 1") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t d = 1; d <= 2 * n; ++d) {
            auto a = plotkin_overweight(z4, n, d);
            auto b = plotkin_homogeneous(Rat(1), n, Rat(d));
            REQUIRE(a.applicable == b.applicable);
            if (a.applicable) REQUIRE(*a.value == *b.value);
        }
    }
}

TEST_CASE("exact Johnson condition (ii) agrees with 113-bit floating evaluation") {
    using Quad = boost::multiprecision::cpp_bin_float_quad;
    std::mt19937_64 rng(20240901);
    std::size_t evaluated = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng_below(rng, 8);
        const Rat gamma(1 + rng_below(rng, 24), 1 + rng_below(rng, 12));
        const Rat d(rng_below(rng, 48), 1 + rng_below(rng, 12));
        const Rat rho = gamma * Rat(rng_below(rng, 9), 8);  // rho in [0, gamma]

        const Rat a = (gamma - d / Rat(n)) * gamma + Rat(BigInt(1), BigInt(n) * BigInt(n));
        const bool exact = a >= 0 && (gamma - rho) * (gamma - rho) >= a;

        const Quad af = Quad(numerator(a).str()) / Quad(denominator(a).str());
        bool floating;
        if (af < 0) {
            floating = false;  // sqrt undefined
        } else {
            const Quad gf = Quad(numerator(gamma).str()) / Quad(denominator(gamma).str());
            const Quad rf = Quad(numerator(rho).str()) / Quad(denominator(rho).str());
            floating = rf <= gf - sqrt(af);
        }
        // exact boundary points may round either way in floating point
        const bool boundary = a >= 0 && (gamma - rho) * (gamma - rho) == a;
        if (!boundary) {
            REQUIRE(exact == floating);
            ++evaluated;
        }
    }
    REQUIRE(evaluated >= 900);
}

TEST_CASE("bound reports carry values exactly when applicable") {
    FiniteRing z4 = FiniteRing::from_spec("Z4");
    std::vector<BoundReport> reports = {
        plotkin_field(2, 4, 3),       plotkin_field(2, 4, 2),
        plotkin_overweight(z4, 2, 3), plotkin_overweight(z4, 2, 1),
        sphere_packing_overweight(z4, 2, 3), gilbert_varshamov_overweight(z4, 2, 2),
        johnson_homogeneous(2, Rat(4), Rat(1), Rat(1)),
        johnson_homogeneous(2, Rat(1), Rat(1), Rat(1)),
    };
    for (const auto& r : reports) {
        CAPTURE(r.name, r.reason);
        REQUIRE(r.value.has_value() == r.applicable);
        REQUIRE(r.integer_bound.has_value() == r.applicable);
        if (!r.applicable) REQUIRE_FALSE(r.reason.empty());
    }
}
