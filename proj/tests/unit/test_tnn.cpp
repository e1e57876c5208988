#include <doctest.h>

#include "samplers.hpp"

#include <hurwitz/hurwitz.hpp>

#include <optional>

using namespace hurwitz;

namespace {

Polynomial exact_poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial::exact(std::move(c));
}

// Independent oracle: determinants by cofactor expansion, minors checked in
// the same (order, row set, column set) order as the engine contract.
Rational cofactor_det(const ExactMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    Rational acc = 0;
    const std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t t = 0; t < cols.size(); ++t) {
        std::vector<int> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != t) sub_cols.push_back(cols[j]);
        const Rational term = m.at(rows[0], cols[t]) * cofactor_det(m, sub_rows, sub_cols);
        if (t % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

struct BruteResult {
    bool tn = true;
    std::vector<int> rows, cols;  // 1-based witness
    Rational value;
};

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

BruteResult brute_force_tnn(const ExactMatrix& m) {
    BruteResult result;
    for (int k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        std::vector<std::vector<int>> row_sets, col_sets;
        combinations(m.rows(), k, row_sets);
        combinations(m.cols(), k, col_sets);
        for (const auto& r : row_sets)
            for (const auto& c : col_sets) {
                const Rational v = cofactor_det(m, r, c);
                if (v < 0) {
                    result.tn = false;
                    for (int x : r) result.rows.push_back(x + 1);
                    for (int x : c) result.cols.push_back(x + 1);
                    result.value = v;
                    return result;
                }
            }
    }
    return result;
}

} // namespace

TEST_CASE("worked TN verdicts") {
    CHECK(is_totally_nonnegative(finite_hurwitz(exact_poly({1, 0, 198, 0, 10201}))).verdict ==
          TnnVerdict::TotallyNonnegative);

    const TnnReport h5 = is_totally_nonnegative(finite_hurwitz(exact_poly({1, 1, 0, 0, 1, 1})));
    CHECK(h5.verdict == TnnVerdict::NotTN);
    REQUIRE(h5.witness.has_value());
    CHECK(h5.witness->rows == std::vector<int>{1, 3});
    CHECK(h5.witness->cols == std::vector<int>{2, 3});
    CHECK(h5.witness->exact_value == Rational(-1));

    ExactMatrix identity(4, 4);
    for (int i = 0; i < 4; ++i) identity.at(i, i) = 1;
    CHECK(tnn_check(identity).verdict == TnnVerdict::TotallyNonnegative);
}

TEST_CASE("cap is enforced and can be raised") {
    ExactMatrix big(15, 15);
    try {
        tnn_check(big);
        FAIL("expected CapExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
    }
    // the cap is a knob, not a hard limit
    sampling::Rng rng(40);
    const ExactMatrix m = sampling::random_tn_matrix(rng, 5);
    TnnOptions lowered;
    lowered.cap = 4;
    CHECK_THROWS_AS(tnn_check(m, lowered), Error);
    TnnOptions raised;
    raised.cap = 5;
    CHECK(tnn_check(m, raised).verdict == TnnVerdict::TotallyNonnegative);
}

TEST_CASE("TN-by-construction matrices pass") {
    sampling::Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int order = sampling::rnd_int(rng, 2, 7);
        const ExactMatrix m = sampling::random_tn_matrix(rng, order);
        CHECK(tnn_check(m).verdict == TnnVerdict::TotallyNonnegative);
    }
}

TEST_CASE("engine agrees with the cofactor-expansion oracle on 5x5 matrices") {
    sampling::Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        // mix sign-indefinite and TN-leaning samples
        const ExactMatrix m = trial % 3 == 0 ? sampling::random_tn_matrix(rng, 5)
                                             : sampling::random_matrix(rng, 5, 5, 4);
        const BruteResult expected = brute_force_tnn(m);
        const TnnReport got = tnn_check(m);
        CHECK((got.verdict == TnnVerdict::TotallyNonnegative) == expected.tn);
        if (!expected.tn) {
            REQUIRE(got.witness.has_value());
            CHECK(got.witness->rows == expected.rows);
            CHECK(got.witness->cols == expected.cols);
            CHECK(got.witness->exact_value == expected.value);
        }
    }
}

TEST_CASE("per-minor fallback path matches the memoized path") {
    sampling::Rng rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const ExactMatrix m = sampling::random_matrix(rng, 6, 6, 4);
        TnnOptions tight;
        tight.memo_budget = 4;  // forces direct elimination on most layers
        const TnnReport a = tnn_check(m);
        const TnnReport b = tnn_check(m, tight);
        CHECK(a.verdict == b.verdict);
        CHECK(a.minors_checked == b.minors_checked);
        if (a.witness) {
            REQUIRE(b.witness.has_value());
            CHECK(a.witness->rows == b.witness->rows);
            CHECK(a.witness->cols == b.witness->cols);
            CHECK(a.witness->exact_value == b.witness->exact_value);
        }
    }
}

TEST_CASE("a negative leading principal minor yields a witness of small order") {
    sampling::Rng rng(44);
    for (int trial = 0; trial < 50; ++trial) {
        const ExactMatrix m = sampling::random_matrix(rng, 5, 5, 6);
        const auto leading = leading_principal_minors(m, 5);
        std::optional<int> first_negative;
        for (int k = 0; k < 5; ++k)
            if (leading[static_cast<std::size_t>(k)] < 0) {
                first_negative = k + 1;
                break;
            }
        if (!first_negative) continue;
        const TnnReport got = tnn_check(m);
        REQUIRE(got.verdict == TnnVerdict::NotTN);
        REQUIRE(got.witness.has_value());
        CHECK(static_cast<int>(got.witness->rows.size()) <= *first_negative);
    }
}

TEST_CASE("Hurwitz determinant sequences") {
    const MinorSequence d1 = hurwitz_minors(exact_poly({1, 2, 1}));
    CHECK(d1.exact == std::vector<Rational>{Rational(2), Rational(2)});
    CHECK(stability_index_from_minors(d1) == 2);

    const MinorSequence d2 = hurwitz_minors(exact_poly({1, 0, 198, 0, 10201}));
    CHECK(d2.exact == std::vector<Rational>(4, Rational(0)));
    CHECK(stability_index_from_minors(d2) == 0);

    const MinorSequence d3 = hurwitz_minors(exact_poly({1, 1, 0, 0, 1, 1}));
    CHECK(d3.exact[0] == 1);
    CHECK(d3.exact[1] == 0);
    CHECK(stability_index_from_minors(d3) == 1);
}

TEST_CASE("eta sequences") {
    const MinorSequence e1 = eta_minors(exact_poly({1, 2, 1}), 3);
    CHECK(e1.exact == std::vector<Rational>{Rational(1), Rational(2), Rational(2)});
    // stable p: eta positive through n+1
    CHECK(eta_positive_prefix(eta_minors(exact_poly({1, 2, 1}), 4)) == 3);

    const MinorSequence e2 = eta_minors(exact_poly({1, 0, 198, 0, 10201}), 6);
    CHECK(e2.exact[0] == 1);
    for (int j = 1; j < 6; ++j) CHECK(e2.exact[static_cast<std::size_t>(j)] == 0);
}

TEST_CASE("stability index pattern edge cases") {
    MinorSequence s;
    s.backend = Backend::ExactRational;
    const auto with_signs = [&](std::vector<int> signs) {
        s.signs = std::move(signs);
        return stability_index_from_minors(s);
    };
    CHECK(with_signs({1, 1}) == 2);
    CHECK(with_signs({0, 0, 0, 0}) == 0);
    CHECK_FALSE(with_signs({1, 0, -1}).has_value());
    CHECK_FALSE(with_signs({1, 0, 1}).has_value());
    CHECK_FALSE(with_signs({-1, 0, 0}).has_value());
}

TEST_CASE("Delta signs are invariant under positive scaling") {
    sampling::Rng rng(45);
    for (int trial = 0; trial < 30; ++trial) {
        const int deg = sampling::rnd_int(rng, 1, 8);
        const Polynomial p = sampling::random_monic_nonzero_const(rng, deg);
        const Rational c(sampling::rnd_int(rng, 1, 9), 2);
        const Polynomial scaled =
            Polynomial::from_poly(p.exact_poly().scaled(c));
        const MinorSequence a = hurwitz_minors(p);
        const MinorSequence b = hurwitz_minors(scaled);
        CHECK(a.signs == b.signs);
        // every entry of the matrix picks up c, so the order-j minor picks up c^j
        for (int j = 1; j <= deg; ++j) {
            Rational factor = 1;
            for (int t = 0; t < j; ++t) factor *= c;
            CHECK(b.exact[static_cast<std::size_t>(j - 1)] ==
                  a.exact[static_cast<std::size_t>(j - 1)] * factor);
        }
    }
}

TEST_CASE("TN with pattern m factors into stable q times PF g") {
    sampling::Rng rng(46);
    int exercised = 0;
    while (exercised < 20) {
        const int m = sampling::rnd_int(rng, 1, 3);
        const int dg = sampling::rnd_int(rng, 1, 2);
        const Polynomial q = sampling::random_stable(rng, m);
        const Polynomial g = sampling::random_negative_zero_g(rng, dg);
        const Polynomial p = q * g.compose_z_squared();
        if (p.degree() > 8) continue;
        const TnnReport tn = is_totally_nonnegative(finite_hurwitz(p));
        REQUIRE(tn.verdict == TnnVerdict::TotallyNonnegative);
        const auto pattern = stability_index_from_minors(hurwitz_minors(p));
        REQUIRE(pattern == m);
        // forward direction: factor and verify both components
        const Factorization f = factor_quasistable(p);
        CHECK(f.q.degree() == m);
        CHECK(stability_index_from_minors(hurwitz_minors(f.q)) == m);
        CHECK(is_pf_r(f.g, (p.degree() + m) / 2).verdict);
        ++exercised;
    }
}

TEST_CASE("float zero band absorbs rounding-level negatives") {
    FloatMatrix m(2, 2);
    m.at(0, 0) = 1.0;
    m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0;
    m.at(1, 1) = 1.0 - 1e-13;  // order-2 minor is -1e-13, inside the band
    CHECK(tnn_check(m).verdict == TnnVerdict::TotallyNonnegative);
    m.at(1, 1) = 1.0 - 1e-3;  // clearly negative minor
    const TnnReport bad = tnn_check(m);
    REQUIRE(bad.verdict == TnnVerdict::NotTN);
    CHECK(bad.witness->rows == std::vector<int>{1, 2});
}

TEST_CASE("minor sequences of a Hurwitz-type pair") {
    sampling::Rng rng(47);
    // H(p0, p1) is the infinite Hurwitz matrix of the recombined polynomial
    for (int trial = 0; trial < 20; ++trial) {
        const int deg = sampling::rnd_int(rng, 2, 8);
        const Polynomial p = sampling::random_stable(rng, deg);
        const EvenOddParts parts = split_even_odd(p);
        if (parts.p0.degree() < parts.p1.degree()) continue;
        const MinorSequence via_pair = eta_minors_pq(parts.p0, parts.p1, deg + 2);
        const MinorSequence direct = eta_minors(p, deg + 2);
        CHECK(via_pair.exact == direct.exact);

        const MinorSequence delta_pair = delta_minors_pq(parts.p0, parts.p1);
        const MinorSequence delta_direct = hurwitz_minors(p);
        REQUIRE(delta_pair.size() == deg);
        for (int j = 0; j < deg; ++j)
            CHECK(delta_pair.exact[static_cast<std::size_t>(j)] ==
                  delta_direct.exact[static_cast<std::size_t>(j)]);
    }
}

TEST_CASE("infinite-window total nonnegativity tracks quasi-stability") {
    sampling::Rng rng(48);
    for (int trial = 0; trial < 10; ++trial) {
        const int m = sampling::rnd_int(rng, 0, 3);
        const Polynomial p = sampling::random_quasi_stable(rng, m, sampling::rnd_int(rng, 1, 2));
        const int depth = std::min(p.degree() + 2, 10);
        CHECK(tnn_check(infinite_hurwitz_truncation(p, depth).exact()).verdict ==
              TnnVerdict::TotallyNonnegative);
    }
    // the finite matrix embeds in the window shifted by one row/column, so
    // its negative minor shows up there as well
    const Polynomial bad = exact_poly({1, 1, 0, 0, 1, 1});
    CHECK(tnn_check(infinite_hurwitz_truncation(bad, 7).exact()).verdict == TnnVerdict::NotTN);
}

TEST_CASE("enumeration rejects matrices beyond the combinatorial table") {
    ExactMatrix giant(29, 29);
    TnnOptions huge;
    huge.cap = 64;
    try {
        tnn_check(giant, huge);
        FAIL("expected CapExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
    }
}
