#pragma once

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

enum class SectorRule { NecessaryTn, UniversalQuarterPi, SufficientTn, Custom };

const char* to_string(SectorRule r) noexcept;

/// Root classification against the sector |arg z| < half_angle. Roots within
/// the angular tolerance of the border are listed separately and never count
/// as violations.
struct SectorVerdict {
    double half_angle = 0.0;
    SectorRule rule = SectorRule::Custom;
    std::vector<RootSet::Root> roots_inside;
    std::vector<RootSet::Root> roots_on_boundary;
    std::vector<RootSet::Root> roots_outside;

    bool zero_free() const { return roots_inside.empty(); }
};

/// (pi/4) (n+m)/(n-1): no zeros of a polynomial with totally nonnegative
/// finite Hurwitz matrix and minor pattern index m lie strictly inside this
/// sector. m = 0 (n even) / m = 1 (n odd) gives the degree-only bound.
double necessary_sector_halfangle(int n, int m);

/// (pi/2) (n+m)/(n+m+2): zero-free sector that, together with the reflection
/// property, forces total nonnegativity. Defined for n >= 4; degrees 1..3
/// are governed by the quasi-stability rule instead (UseQuasiStabilityRule).
double sufficient_sector_halfangle(int n, int m);

SectorVerdict check_zero_free_sector(const Polynomial& p, double half_angle,
                                     SectorRule rule = SectorRule::Custom,
                                     const Tolerances& tol = default_tolerances());

/// (z+1)^m prod_j (z^2 + e^{i phi_j}) with phi_j = (pi/2)(n-m-4j+2)/(n-1):
/// totally nonnegative finite Hurwitz matrix, zeros on the border of the
/// necessary sector. Conjugate factors are paired, so coefficients are real;
/// they are rationalized when every cosine involved is rational.
Polynomial sharp_necessary_example(int n, int m);

/// (z+1)^m (z^2+1)^{r1} (z^4 + 2 z^2 cos(theta) + 1)^{r2} with theta just
/// past the Polya-frequency threshold 2*pi/(n+m+2): zeros barely inside the
/// forbidden sector and a finite Hurwitz matrix that tests NotTN. epsilon = 0
/// produces the boundary polynomial, which is still totally nonnegative.
Polynomial sharp_sufficient_counterexample(int n, int m, double epsilon);

} // namespace hurwitz
