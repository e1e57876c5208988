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

TEST_CASE("worked classifications") {
    // finite Hurwitz matrix TN yet zeros in the right half-plane
    const ClassificationReport asner = classify(exact_poly({1, 0, 198, 0, 10201}));
    CHECK(asner.stability_class == StabilityClass::NotQuasiStable);
    CHECK(asner.finite_tnn);
    CHECK(asner.stability_index == 0);
    CHECK(asner.hurwitz_rank == 2);
    CHECK(asner.criteria_agreement.at("finite_tnn") == "FiniteTnnOnly(m=0)");
    CHECK(asner.routes_agree());

    const ClassificationReport stable = classify(exact_poly({1, 2, 1}));
    CHECK(stable.stability_class == StabilityClass::Stable);
    CHECK(stable.stability_index == 2);
    CHECK(stable.routes_agree());

    const ClassificationReport quasi = classify(exact_poly({1, 1, 1, 1}));
    CHECK(quasi.stability_class == StabilityClass::QuasiStable);
    CHECK(quasi.stability_index == 1);
    CHECK(quasi.degeneracy_index == 2);
    CHECK(quasi.routes_agree());
}

TEST_CASE("classification preconditions") {
    CHECK_THROWS_AS(classify(exact_poly({-1, 1, 1})), Error);
    CHECK_THROWS_AS(classify(exact_poly({3})), Error);
}

TEST_CASE("zero constant term is factored out with a warning") {
    // z (z+1)^2: quasi-stable with one origin zero
    const ClassificationReport r = classify(exact_poly({1, 2, 1, 0}));
    CHECK(r.stability_class == StabilityClass::QuasiStable);
    CHECK(r.stability_index == 2);
    CHECK(r.degeneracy_index == 1);  // odd: the evenness remark needs p(0) != 0
    REQUIRE(!r.warnings.empty());
    CHECK(r.warnings.front().find("z^1") != std::string::npos);
    bool has_origin = false;
    for (const auto& root : r.roots.roots)
        if (root.value == std::complex<double>(0.0, 0.0)) has_origin = true;
    CHECK(has_origin);
}

TEST_CASE("factor_quasistable worked examples") {
    Factorization f = factor_quasistable(exact_poly({1, 0, 198, 0, 10201}));
    CHECK(f.g.same_values(exact_poly({1, 198, 10201})));
    CHECK(f.q.degree() == 0);

    f = factor_quasistable(exact_poly({1, 1, 1, 1}));
    CHECK(f.q.same_values(exact_poly({1, 1})));
    CHECK(f.g.same_values(exact_poly({1, 1})));

    sampling::Rng rng(51);
    const Polynomial stable = sampling::random_stable(rng, 4);
    f = factor_quasistable(stable);
    CHECK(f.g.degree() == 0);
    CHECK(f.q.same_values(stable));
}

TEST_CASE("reflection property") {
    CHECK(check_reflection_property(exact_poly({1, 0, 198, 0, 10201})));
    CHECK_FALSE(check_reflection_property(exact_poly({1, 4, 1, -6})));  // (z-1)(z+2)(z+3)
    sampling::Rng rng(52);
    CHECK(check_reflection_property(sampling::random_stable(rng, 5)));  // vacuous
}

TEST_CASE("equivalence of the four routes on random stable and unstable inputs") {
    sampling::Rng rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const int deg = sampling::rnd_int(rng, 1, 8);
        const ClassificationReport s = classify(sampling::random_stable(rng, deg));
        CHECK(s.stability_class == StabilityClass::Stable);
        CHECK(s.routes_agree());
        CHECK(s.criteria_agreement.at("delta_pattern") == to_string(StabilityClass::Stable, deg));

        const ClassificationReport u = classify(sampling::random_unstable(rng, deg));
        CHECK(u.stability_class == StabilityClass::NotQuasiStable);
        CHECK(u.routes_agree());
    }
}

TEST_CASE("quasi-stable constructions carry the predicted patterns") {
    sampling::Rng rng(54);
    for (int trial = 0; trial < 25; ++trial) {
        const int m = sampling::rnd_int(rng, 0, 4);
        const int pairs = sampling::rnd_int(rng, 1, 2);
        const Polynomial p = sampling::random_quasi_stable(rng, m, pairs);
        const int n = p.degree();
        const ClassificationReport r = classify(p);
        CHECK(r.stability_class == StabilityClass::QuasiStable);
        CHECK(r.stability_index == m);
        CHECK(r.degeneracy_index == n - m);
        CHECK((n - m) % 2 == 0);
        CHECK(r.routes_agree());

        // quasi-stability biconditional at the order-(n-2) threshold
        const bool tn = r.finite_tnn;
        const bool delta_nm2_nonzero =
            n - 2 <= 0 || r.delta.signs[static_cast<std::size_t>(n - 3)] != 0;
        CHECK((m >= n - 2) == (tn && delta_nm2_nonzero));
    }
}

TEST_CASE("classification is invariant under positive scaling") {
    sampling::Rng rng(55);
    for (int trial = 0; trial < 15; ++trial) {
        const int deg = sampling::rnd_int(rng, 1, 7);
        const Polynomial p = trial % 2 == 0 ? sampling::random_stable(rng, deg)
                                            : sampling::random_quasi_stable(rng, deg / 2, 1);
        const Rational c(sampling::rnd_int(rng, 1, 9), 3);
        const Polynomial scaled = Polynomial::from_poly(p.exact_poly().scaled(c));
        const ClassificationReport a = classify(p);
        const ClassificationReport b = classify(scaled);
        CHECK(a.stability_class == b.stability_class);
        CHECK(a.stability_index == b.stability_index);
    }
}

TEST_CASE("float backend classification of a boundary example") {
    // degree 6 boundary polynomial: irrational cosines force the float path
    const Polynomial p = sharp_necessary_example(6, 0);
    REQUIRE(p.backend() == Backend::Float);
    const ClassificationReport r = classify(p);
    CHECK(r.stability_class == StabilityClass::NotQuasiStable);
    CHECK(r.finite_tnn);
    CHECK(r.routes_agree());
    CHECK(r.criteria_agreement.at("finite_tnn") == "FiniteTnnOnly(m=0)");
}

TEST_CASE("the reported factorization reproduces the polynomial") {
    sampling::Rng rng(56);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = sampling::rnd_int(rng, 0, 3);
        const Polynomial p = sampling::random_quasi_stable(rng, m, sampling::rnd_int(rng, 1, 2));
        const Factorization f = factor_quasistable(p);
        const Polynomial back = f.q * f.g.compose_z_squared();
        // g is monic, so the product restores p exactly under the exact backend
        CHECK(back.same_values(p));
    }
    // float backend: to tolerance
    const Polynomial pf = Polynomial::approx({1.0, 1.0, 1.0, 1.0});
    const Factorization f = factor_quasistable(pf);
    const Polynomial back = f.q * f.g.compose_z_squared();
    for (int k = 0; k <= 3; ++k)
        CHECK(back.coeff_double(k) == doctest::Approx(pf.coeff_double(k)).epsilon(1e-9));
}

TEST_CASE("float backend quasi-stable classification with irrational data") {
    // (z+1)(z^2 + pi): one real stable zero, one axis pair
    const double c = 3.14159265358979323846;
    const Polynomial p = Polynomial::approx({1.0, 1.0, c, c});
    const ClassificationReport r = classify(p);
    CHECK(r.stability_class == StabilityClass::QuasiStable);
    CHECK(r.stability_index == 1);
    CHECK(r.degeneracy_index == 2);
    CHECK(r.routes_agree());
    CHECK(r.factor_g.degree() == 1);
    CHECK(r.factor_g.coeff_double(1) == doctest::Approx(c).epsilon(1e-9));
}
