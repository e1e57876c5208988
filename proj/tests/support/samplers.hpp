#pragma once

// Deterministic random generators shared by the unit and acceptance suites.
// Everything is seeded explicitly; runs are reproducible byte for byte.

#include <hurwitz/hurwitz.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace sampling {

using hurwitz::ExactMatrix;
using hurwitz::ExactPoly;
using hurwitz::Polynomial;
using hurwitz::Rational;

using Rng = std::mt19937_64;

inline int rnd_int(Rng& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
}

/// Quarter-integer in [lo/4, hi/4]; keeps every coefficient a small rational.
inline Rational quarter(Rng& rng, int lo, int hi) {
    return Rational(rnd_int(rng, lo, hi), 4);
}

struct RootPlan {
    Polynomial poly;
    int left = 0;    // open left half-plane, counting multiplicity
    int axis = 0;    // imaginary axis
    int right = 0;   // open right half-plane
};

/// Product of linear/quadratic factors with all roots at Re <= -1/4.
inline Polynomial random_stable(Rng& rng, int degree) {
    ExactPoly p = ExactPoly::one();
    int remaining = degree;
    while (remaining > 0) {
        if (remaining >= 2 && rnd_int(rng, 0, 1) == 1) {
            const Rational re = -quarter(rng, 1, 10);
            const Rational im = quarter(rng, 1, 10);
            p = p * ExactPoly(std::vector<Rational>{Rational(1), -2 * re, re * re + im * im});
            remaining -= 2;
        } else {
            p = p * ExactPoly(std::vector<Rational>{Rational(1), quarter(rng, 1, 10)});
            remaining -= 1;
        }
    }
    return Polynomial::from_poly(std::move(p));
}

/// Stable factors times at least one factor with zeros at Re >= 1/4.
inline Polynomial random_unstable(Rng& rng, int degree) {
    ExactPoly p = ExactPoly::one();
    int remaining = degree;
    bool placed_right = false;
    while (remaining > 0) {
        const bool must_place = !placed_right && remaining <= 2;
        const bool place_right = must_place || rnd_int(rng, 0, 2) == 0;
        if (place_right) {
            if (remaining >= 2 && rnd_int(rng, 0, 1) == 0) {
                const Rational re = quarter(rng, 1, 8);
                const Rational im = quarter(rng, 1, 8);
                p = p * ExactPoly(std::vector<Rational>{Rational(1), -2 * re, re * re + im * im});
                remaining -= 2;
            } else {
                p = p * ExactPoly(std::vector<Rational>{Rational(1), -quarter(rng, 1, 8)});
                remaining -= 1;
            }
            placed_right = true;
        } else if (remaining >= 2 && rnd_int(rng, 0, 1) == 0) {
            const Rational re = -quarter(rng, 1, 8);
            const Rational im = quarter(rng, 1, 8);
            p = p * ExactPoly(std::vector<Rational>{Rational(1), -2 * re, re * re + im * im});
            remaining -= 2;
        } else {
            p = p * ExactPoly(std::vector<Rational>{Rational(1), quarter(rng, 1, 8)});
            remaining -= 1;
        }
    }
    return Polynomial::from_poly(std::move(p));
}

/// Quasi-stable product q(z) * prod_j (z^2 + c_j) with q stable of degree m
/// and distinct c_j > 0; the axis zeros are +-i sqrt(c_j).
inline Polynomial random_quasi_stable(Rng& rng, int m, int axis_pairs) {
    ExactPoly p = random_stable(rng, m).exact_poly();
    std::vector<int> used;
    for (int j = 0; j < axis_pairs; ++j) {
        int c;
        do {
            c = rnd_int(rng, 1, 24);
        } while (std::find(used.begin(), used.end(), c) != used.end());
        used.push_back(c);
        p = p * ExactPoly(std::vector<Rational>{Rational(1), Rational(0), Rational(c, 4)});
    }
    return Polynomial::from_poly(std::move(p));
}

/// Monic g with only negative real zeros (a PF sequence of every order).
inline Polynomial random_negative_zero_g(Rng& rng, int degree) {
    ExactPoly g = ExactPoly::one();
    for (int i = 0; i < degree; ++i)
        g = g * ExactPoly(std::vector<Rational>{Rational(1), quarter(rng, 1, 12)});
    return Polynomial::from_poly(std::move(g));
}

/// Monic g of even degree whose zero pairs sit inside the closed u-plane
/// sector |pi - arg u| <= halfwidth (radians, < pi/2). Rational points are
/// chosen strictly inside with 10% margin.
inline Polynomial random_sector_g(Rng& rng, int pairs, double halfwidth) {
    ExactPoly g = ExactPoly::one();
    const double t = std::tan(0.9 * halfwidth);
    for (int i = 0; i < pairs; ++i) {
        const int xq = rnd_int(rng, 2, 12);  // x = xq/4 in [1/2, 3]
        const Rational x(xq, 4);
        const int ymax = static_cast<int>(std::floor(t * xq * 16.0));
        const int yq = ymax > 0 ? rnd_int(rng, 0, ymax) : 0;
        const Rational y(yq, 64);
        // zeros at -x +- iy
        g = g * ExactPoly(std::vector<Rational>{Rational(1), 2 * x, x * x + y * y});
    }
    return Polynomial::from_poly(std::move(g));
}

/// Monic polynomial with small integer coefficients and nonzero constant
/// term; zeros land anywhere.
inline Polynomial random_monic_nonzero_const(Rng& rng, int degree) {
    if (degree <= 0) {
        int v = 0;
        while (v == 0) v = rnd_int(rng, -4, 4);
        return Polynomial::exact({Rational(v)});
    }
    std::vector<Rational> c;
    c.push_back(Rational(1));
    for (int i = 1; i < degree; ++i) c.push_back(Rational(rnd_int(rng, -4, 4)));
    int tail = 0;
    while (tail == 0) tail = rnd_int(rng, -4, 4);
    c.push_back(Rational(tail));
    return Polynomial::exact(std::move(c));
}

/// Positive-coefficient polynomial (Stodola shape, not necessarily stable).
inline Polynomial random_positive_coeff(Rng& rng, int degree) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(Rational(rnd_int(rng, 1, 20), 2));
    return Polynomial::exact(std::move(c));
}

/// Totally nonnegative by construction: a nonnegative diagonal times a
/// product of elementary nonnegative bidiagonal factors (each factor is TN,
/// so the product is TN by Cauchy-Binet).
inline ExactMatrix random_tn_matrix(Rng& rng, int order) {
    ExactMatrix m(order, order);
    for (int i = 0; i < order; ++i) m.at(i, i) = Rational(rnd_int(rng, 0, 6), 2);
    const int factors = rnd_int(rng, 2, 3 * order);
    for (int f = 0; f < factors; ++f) {
        const int i = rnd_int(rng, 0, order - 2);
        const Rational c(rnd_int(rng, 0, 8), 4);
        ExactMatrix b(order, order);
        for (int d = 0; d < order; ++d) b.at(d, d) = 1;
        if (rnd_int(rng, 0, 1) == 0)
            b.at(i, i + 1) = c;
        else
            b.at(i + 1, i) = c;
        m = m * b;
    }
    return m;
}

/// Generic dense rational matrix with entries in [-hi, hi]/2.
inline ExactMatrix random_matrix(Rng& rng, int rows, int cols, int hi = 8) {
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Rational(rnd_int(rng, -hi, hi), 2);
    return m;
}

} // namespace sampling
