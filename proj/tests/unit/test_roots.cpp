#include <doctest.h>

#include "samplers.hpp"

#include <hurwitz/hurwitz.hpp>

#include <cmath>
#include <complex>

using namespace hurwitz;

namespace {

bool has_root_near(const RootSet& roots, std::complex<double> target, int mult, double tol) {
    for (const auto& r : roots.roots)
        if (std::abs(r.value - target) <= tol && r.multiplicity == mult) return true;
    return false;
}

} // namespace

TEST_CASE("known root sets") {
    const RootSet quad = find_roots(Polynomial::exact({Rational(1), Rational(0), Rational(1)}));
    CHECK(has_root_near(quad, {0.0, 1.0}, 1, 1e-12));
    CHECK(has_root_near(quad, {0.0, -1.0}, 1, 1e-12));

    const RootSet asner = find_roots(
        Polynomial::exact({Rational(1), Rational(0), Rational(198), Rational(0), Rational(10201)}));
    CHECK(asner.residual_bound < 1e-12);
    for (double sr : {-1.0, 1.0})
        for (double si : {-10.0, 10.0}) CHECK(has_root_near(asner, {sr, si}, 1, 1e-9));
}

TEST_CASE("repeated roots cluster with the right multiplicity") {
    const RootSet cube =
        find_roots(Polynomial::exact({Rational(1), Rational(3), Rational(3), Rational(1)}));
    REQUIRE(cube.roots.size() == 1);
    CHECK(cube.roots[0].multiplicity == 3);
    CHECK(std::abs(cube.roots[0].value - std::complex<double>(-1.0, 0.0)) < 1e-9);

    // (z^2+1)^2: double conjugate pair
    const RootSet pair = find_roots(
        Polynomial::exact({Rational(1), Rational(0), Rational(2), Rational(0), Rational(1)}));
    CHECK(has_root_near(pair, {0.0, 1.0}, 2, 1e-7));
    CHECK(has_root_near(pair, {0.0, -1.0}, 2, 1e-7));
}

TEST_CASE("zero roots are split off exactly") {
    // z^3 + z^2 = z^2 (z + 1)
    const RootSet r = find_roots(Polynomial::exact({Rational(1), Rational(1), Rational(0), Rational(0)}));
    CHECK(has_root_near(r, {0.0, 0.0}, 2, 0.0));
    CHECK(has_root_near(r, {-1.0, 0.0}, 1, 1e-12));
}

TEST_CASE("degree below one is rejected") {
    CHECK_THROWS_AS(find_roots(Polynomial::exact({Rational(7)})), Error);
}

TEST_CASE("reconstruction and conjugate symmetry on random polynomials") {
    sampling::Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const int deg = sampling::rnd_int(rng, 1, 9);
        const Polynomial p = sampling::random_monic_nonzero_const(rng, deg);
        const RootSet roots = find_roots(p);
        CHECK(roots.total_multiplicity() == deg);
        CHECK(roots.residual_bound < 1e-9);

        // product of (z - root) reconstructs the monic coefficients
        FloatPoly prod = FloatPoly::one();
        for (const auto& r : roots.roots) {
            for (int k = 0; k < r.multiplicity; ++k) {
                if (r.value.imag() == 0.0) {
                    prod = prod * FloatPoly({1.0, -r.value.real()});
                } else if (r.value.imag() > 0.0) {
                    prod = prod * FloatPoly({1.0, -2.0 * r.value.real(), std::norm(r.value)});
                }
            }
        }
        double scale = 0.0;
        for (int k = 0; k <= deg; ++k) scale = std::max(scale, std::abs(p.coeff_double(k)));
        for (int k = 0; k <= deg; ++k)
            CHECK(std::abs(prod.coeff(k) - p.coeff_double(k)) <= 1e-7 * scale);

        // conjugate pairing is exact after symmetrization
        for (const auto& r : roots.roots) {
            if (r.value.imag() <= 0.0) continue;
            bool paired = false;
            for (const auto& s : roots.roots)
                if (s.value == std::conj(r.value) && s.multiplicity == r.multiplicity) paired = true;
            CHECK(paired);
        }
    }
}
