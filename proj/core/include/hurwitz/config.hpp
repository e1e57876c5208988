#pragma once

namespace hurwitz {

/// Numeric tolerances used by the Float backend. Exact-rational code paths
/// ignore all of them. Every value can be overridden per call.
struct Tolerances {
    /// Generic relative tolerance for float comparisons (coefficient zero
    /// tests, division residuals).
    double rel = 1e-9;

    /// Base factor of the minor zero band: a float minor of order k counts
    /// as zero when |value| <= minor_band * norm^k (norm = matrix 1-norm).
    double minor_band = 1e-9;

    /// Absolute zero band for Polya-frequency minor tests.
    double pf_band = 1e-10;

    /// Root clustering radius (absolute, scaled by max(1,|root|)).
    double cluster = 1e-6;

    /// Band for "on the imaginary axis" / "on the sector boundary" tests:
    /// |Re z| <= boundary * (1 + |z|), angular tolerance in radians.
    double boundary = 1e-8;

    /// Relative singular-value threshold for float matrix rank.
    double rank_sv = 1e-10;
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t{};
    return t;
}

} // namespace hurwitz
