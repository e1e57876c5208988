#include <doctest.h>

#include "samplers.hpp"

#include <hurwitz/hurwitz.hpp>

#include <cmath>

using namespace hurwitz;

namespace {

Polynomial exact_poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial::exact(std::move(c));
}

} // namespace

TEST_CASE("split_even_odd matches the closed forms") {
    // z^4 + 198 z^2 + 10201: p1 vanishes identically
    auto parts = split_even_odd(exact_poly({1, 0, 198, 0, 10201}));
    CHECK(parts.parity == Parity::Even);
    CHECK(parts.l == 2);
    CHECK(parts.p0.same_values(exact_poly({1, 198, 10201})));
    CHECK(parts.p1.is_zero());

    // z + 1
    parts = split_even_odd(exact_poly({1, 1}));
    CHECK(parts.parity == Parity::Odd);
    CHECK(parts.p0.same_values(exact_poly({1})));
    CHECK(parts.p1.same_values(exact_poly({1})));

    // (z+1)(z^4+1) = z^5 + z^4 + z + 1
    parts = split_even_odd(exact_poly({1, 1, 0, 0, 1, 1}));
    CHECK(parts.p0.same_values(exact_poly({1, 0, 1})));
    CHECK(parts.p1.same_values(exact_poly({1, 0, 1})));
}

TEST_CASE("split_even_odd rejects constants") {
    CHECK_THROWS_AS(split_even_odd(exact_poly({5})), Error);
}

TEST_CASE("even/odd identities p0(z^2) = (p(z)+p(-z))/2 at sample points") {
    sampling::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int deg = sampling::rnd_int(rng, 1, 10);
        const Polynomial p = sampling::random_monic_nonzero_const(rng, deg);
        const EvenOddParts parts = split_even_odd(p);
        for (int s = 1; s <= 16; ++s) {
            const double z = -2.0 + 0.25 * s;
            const double even_part = 0.5 * (p.eval_double(z) + p.eval_double(-z));
            const double odd_part = 0.5 * (p.eval_double(z) - p.eval_double(-z));
            CHECK(parts.p0.eval_double(z * z) == doctest::Approx(even_part).epsilon(1e-12));
            CHECK(z * parts.p1.eval_double(z * z) == doctest::Approx(odd_part).epsilon(1e-12));
        }
    }
}

TEST_CASE("recombination reproduces the input exactly") {
    sampling::Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const int deg = sampling::rnd_int(rng, 1, 10);
        const Polynomial p = sampling::random_monic_nonzero_const(rng, deg);
        CHECK(recombine(split_even_odd(p)).same_values(p));
    }
    // Float backend: relative 1e-10
    for (int trial = 0; trial < 10; ++trial) {
        const int deg = sampling::rnd_int(rng, 1, 10);
        const Polynomial p =
            sampling::random_monic_nonzero_const(rng, deg).to_float_backend();
        const Polynomial back = recombine(split_even_odd(p));
        for (int k = 0; k <= deg; ++k)
            CHECK(back.coeff_double(k) ==
                  doctest::Approx(p.coeff_double(k)).epsilon(1e-10));
    }
}

TEST_CASE("gcd_even_odd on the worked examples") {
    // gcd(x, 0) = monic x
    EvenOddParts parts;
    parts.p0 = exact_poly({1, 198, 10201});
    parts.p1 = Polynomial::exact({});
    parts.parity = Parity::Even;
    parts.l = 2;
    CHECK(gcd_even_odd(parts).g.same_values(exact_poly({1, 198, 10201})));

    parts.p0 = exact_poly({1, 0, 1});
    parts.p1 = exact_poly({1, 0, 1});
    CHECK(gcd_even_odd(parts).g.same_values(exact_poly({1, 0, 1})));

    // gcd((u+1)(u+2), (u+1)(u+3)) = u+1
    parts.p0 = exact_poly({1, 3, 2});
    parts.p1 = exact_poly({1, 4, 3});
    CHECK(gcd_even_odd(parts).g.same_values(exact_poly({1, 1})));
}

TEST_CASE("gcd_even_odd requires a nonzero part") {
    EvenOddParts parts;
    parts.p0 = Polynomial::exact({});
    parts.p1 = Polynomial::exact({});
    CHECK_THROWS_AS(gcd_even_odd(parts), Error);
}

TEST_CASE("gcd of g*h0, g*h1 has the zeros of g for random coprime h0, h1") {
    sampling::Rng rng(13);
    int done = 0;
    while (done < 25) {
        const Polynomial g = sampling::random_negative_zero_g(rng, sampling::rnd_int(rng, 1, 3));
        const Polynomial h0 = sampling::random_monic_nonzero_const(rng, sampling::rnd_int(rng, 1, 3));
        const Polynomial h1 = sampling::random_monic_nonzero_const(rng, sampling::rnd_int(rng, 1, 3));
        if (ExactPoly::gcd(h0.exact_poly(), h1.exact_poly()).degree() != 0) continue;
        EvenOddParts parts;
        parts.p0 = Polynomial::from_poly(g.exact_poly() * h0.exact_poly());
        parts.p1 = Polynomial::from_poly(g.exact_poly() * h1.exact_poly());
        parts.parity = Parity::Even;
        parts.l = std::max(parts.p0.degree(), parts.p1.degree());
        const GcdResult got = gcd_even_odd(parts);
        CHECK(got.g.same_values(g));  // sampler output is already monic
        ++done;
    }
}

TEST_CASE("float-backend gcd pins the degree from the minor pattern") {
    // p = (z+1)(z^2+1): g = u+1 recovered in floating point
    const Polynomial p = Polynomial::approx({1.0, 1.0, 1.0, 1.0});
    const GcdResult got = gcd_even_odd(split_even_odd(p));
    REQUIRE(got.g.degree() == 1);
    CHECK(got.g.coeff_double(0) == doctest::Approx(1.0));
    CHECK(got.g.coeff_double(1) == doctest::Approx(1.0));
    CHECK(got.residual < 1e-10);
}

TEST_CASE("kleptsyn_sufficient worked sums") {
    CHECK(kleptsyn_sufficient(exact_poly({1, 10, 10, 1})));        // sum 0.01
    CHECK_FALSE(kleptsyn_sufficient(exact_poly({1, 1, 1, 1})));    // sum exactly 1
    CHECK(kleptsyn_sufficient(exact_poly({1, 3, 3, 1})));          // sum 1/9
    CHECK_THROWS_AS(kleptsyn_sufficient(exact_poly({1, -1, 1, 1})), Error);
    CHECK_THROWS_AS(kleptsyn_sufficient(exact_poly({1, 1})), Error);
}

TEST_CASE("kleptsyn-certified polynomials pass the Hurwitz criterion") {
    sampling::Rng rng(14);
    int certified = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int deg = sampling::rnd_int(rng, 3, 8);
        const Polynomial p = sampling::random_positive_coeff(rng, deg);
        if (!kleptsyn_sufficient(p)) continue;
        ++certified;
        const auto m = stability_index_from_minors(hurwitz_minors(p));
        REQUIRE(m.has_value());
        CHECK(*m == deg);  // all Hurwitz determinants positive = stable
    }
    CHECK(certified > 0);
}

TEST_CASE("associated function poles on the worked examples") {
    // z^2 + 3z + 2: pole -2, positive residue
    auto poles = associated_function_poles(split_even_odd(exact_poly({1, 3, 2})));
    REQUIRE(poles.poles.size() == 1);
    CHECK(poles.poles[0].location.real() == doctest::Approx(-2.0));
    CHECK(poles.poles[0].residue_sign == 1);
    CHECK(poles.r_function_with_negative_poles(1));

    // z^2 - 1: numerator vanishes, no poles
    poles = associated_function_poles(split_even_odd(exact_poly({1, 0, -1})));
    CHECK(poles.poles.empty());
    CHECK(poles.pole_count == 0);

    // z^3 + 2z^2 + 2z + 1: single pole -1/2, positive residue
    poles = associated_function_poles(split_even_odd(exact_poly({1, 2, 2, 1})));
    REQUIRE(poles.poles.size() == 1);
    CHECK(poles.poles[0].location.real() == doctest::Approx(-0.5));
    CHECK(poles.poles[0].residue_sign == 1);
    CHECK(poles.limit_sign == 1);  // odd degree: a_0/a_1 > 0
}

TEST_CASE("stable polynomials give l simple negative poles with positive residues") {
    sampling::Rng rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        const int deg = sampling::rnd_int(rng, 2, 8);
        const Polynomial p = sampling::random_stable(rng, deg);
        // verified stable through the Hurwitz-determinant route
        const auto m = stability_index_from_minors(hurwitz_minors(p));
        REQUIRE(m == deg);
        const auto poles = associated_function_poles(split_even_odd(p));
        CHECK(poles.r_function_with_negative_poles(deg / 2));
        if (deg % 2 == 1) CHECK(poles.limit_sign == 1);
    }
}

TEST_CASE("multiple pole is flagged as not simple") {
    // p0 = (u+1)^2, p1 = 1: double pole at -1
    EvenOddParts parts;
    parts.p0 = exact_poly({1, 2, 1});
    parts.p1 = exact_poly({1});
    parts.parity = Parity::Even;
    parts.l = 2;
    const auto poles = associated_function_poles(parts);
    CHECK(poles.has_multiple_pole);
    CHECK_FALSE(poles.r_function_with_negative_poles(2));
}

TEST_CASE("float gcd raises GcdUnreliable on inconsistent inputs") {
    // The minor pattern of the recombined polynomial pins deg g = 2, but the
    // parts share no roots consistent with it.
    EvenOddParts parts;
    parts.p0 = Polynomial::approx({1.0, 198.0, 10201.0});
    parts.p1 = Polynomial::approx({1e-3, 1e-3});
    parts.parity = Parity::Even;
    parts.l = 2;
    try {
        gcd_even_odd(parts);
        FAIL("expected GcdUnreliable");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GcdUnreliable);
    }
}
