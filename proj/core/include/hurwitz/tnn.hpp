#pragma once

#include "hurwitz/builders.hpp"
#include "hurwitz/config.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace hurwitz {

enum class TnnVerdict { TotallyNonnegative, NotTN };

/// A concrete negative minor: 1-based row/column index lists and the value.
struct MinorWitness {
    std::vector<int> rows;
    std::vector<int> cols;
    bool exact = true;
    Rational exact_value;
    double value = 0.0;

    std::string value_string() const;
};

struct TnnReport {
    TnnVerdict verdict = TnnVerdict::TotallyNonnegative;
    std::optional<MinorWitness> witness;
    std::uint64_t minors_checked = 0;
    int max_order_checked = 0;
};

struct TnnOptions {
    /// Exhaustive enumeration refuses matrices with more rows or columns.
    int cap = 14;
    /// Memoized-Laplace layers larger than this fall back to per-minor
    /// elimination (keeps memory bounded near the cap).
    std::uint64_t memo_budget = 1u << 22;
    /// Float zero band: |minor| <= band_base * band_norm^order counts as 0.
    /// band_norm <= 0 selects the matrix 1-norm.
    double band_base = 1e-9;
    double band_norm = -1.0;
};

/// Exhaustive minor enumeration over all orders, in lexicographic
/// (order, row set, column set) order; the first negative minor becomes the
/// witness. Exact under the rational backend; float minors count as zero
/// inside the tolerance band.
TnnReport is_totally_nonnegative(const StructuredMatrix& m, const TnnOptions& options = {});

TnnReport tnn_check(const ExactMatrix& m, const TnnOptions& options = {});
TnnReport tnn_check(const FloatMatrix& m, const TnnOptions& options = {});

enum class MinorKind { DeltaOfP, EtaOfP, DeltaOfPQ, EtaOfPQ };

/// Leading-principal-minor sequence with tolerance-resolved signs. The signs
/// vector is the canonical input for pattern detection: exact signs under the
/// rational backend, banded signs under float.
struct MinorSequence {
    MinorKind kind = MinorKind::DeltaOfP;
    Backend backend = Backend::ExactRational;
    std::vector<Rational> exact;
    std::vector<double> approx;
    std::vector<int> signs;

    int size() const { return static_cast<int>(signs.size()); }
};

/// Hurwitz determinants Delta_1..Delta_n of the finite Hurwitz matrix
/// (Delta_0 = 1 by convention and is not stored).
MinorSequence hurwitz_minors(const Polynomial& p,
                             const Tolerances& tol = default_tolerances());

/// eta_1..eta_depth: leading principal minors of the truncated infinite
/// Hurwitz matrix.
MinorSequence eta_minors(const Polynomial& p, int depth,
                         const Tolerances& tol = default_tolerances());

/// Leading principal minors of a matrix of Hurwitz type H(p,q).
MinorSequence eta_minors_pq(const Polynomial& p, const Polynomial& q, int depth,
                            const Tolerances& tol = default_tolerances());

/// Leading principal minors of the finite matrix of Hurwitz type.
MinorSequence delta_minors_pq(const Polynomial& p, const Polynomial& q,
                              const Tolerances& tol = default_tolerances());

/// Largest m with Delta_1..Delta_m > 0 and Delta_{m+1}..Delta_n = 0.
/// nullopt when the sequence has a negative entry or a zero followed by a
/// nonzero (no pattern).
std::optional<int> stability_index_from_minors(const MinorSequence& delta);

/// Pattern of eta minors: largest k with eta_1..eta_{k} > 0 and zeros after;
/// for quasi-stable polynomials k = m + 1. nullopt when no such pattern.
std::optional<int> eta_positive_prefix(const MinorSequence& eta);

} // namespace hurwitz
