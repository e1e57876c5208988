#pragma once

#include "hurwitz/tnn.hpp"

#include <complex>
#include <optional>

namespace hurwitz {

/// Eigenstructure of the finite Hurwitz matrix at desk scale: eigenvalues
/// through the characteristic polynomial (exact algebraic multiplicities
/// under the rational backend), rank and geometric multiplicities through
/// the shared rank routine.
struct SpectralReport {
    struct Eigenvalue {
        std::complex<double> value;
        int algebraic = 1;
    };

    std::vector<Eigenvalue> eigenvalues;  // sorted by (Re, Im) descending
    int rank = 0;
    int zero_algebraic = 0;
    int zero_geometric = 0;
    int positive_count = 0;

    struct ConstantTermEigen {
        double value = 0.0;  // a_n = p(0)
        int algebraic = 0;
        int geometric = 0;
    };
    /// Present when p(0) occurs among the eigenvalues.
    std::optional<ConstantTermEigen> p0_eigen;

    /// Positive eigenvalues all simple except possibly p(0) with algebraic
    /// multiplicity 2 and geometric multiplicity 1; zero eigenvalue diagonal.
    bool jordan_consistent = false;

    /// The matrix was checked TN; when false the counting statements are not
    /// guaranteed and the report is only descriptive.
    bool tn_verified = false;
    bool out_of_theorem_scope = false;

    /// Simplicity of positive eigenvalues relies on an irreducible leading
    /// block; that argument needs all coefficients positive. When some a_i
    /// vanish this flag marks the simplicity statement as unasserted.
    bool simplicity_flagged = false;

    double trace_residual = 0.0;
};

SpectralReport spectral_analysis(const Polynomial& p,
                                 const Tolerances& tol = default_tolerances());

/// Exact rank under the rational backend, singular-value rank under float.
int rank_of(const StructuredMatrix& m, const Tolerances& tol = default_tolerances());

/// Characteristic polynomial (monic, descending) by Faddeev-LeVerrier.
std::vector<Rational> characteristic_polynomial(const ExactMatrix& m);
std::vector<double> characteristic_polynomial(const FloatMatrix& m);

/// The distinguished positive monomial in the Laplace expansion of the
/// shifted-matrix minor that pins rank(H_n(p) - p(0) I) = n-1: a_4 a_0 for
/// n = 4, a_5 a_1^2 for n = 5, ..., extended by the recursion
/// d_{2l-1} = a_{2l-1}^{l-2} a_1 d_l, d_{2l} = a_{2l}^{l-1} a_0 d_l.
/// Defined for 4 <= deg p <= 12; positive whenever all coefficients are.
Rational rank_witness_term(const Polynomial& p);

} // namespace hurwitz
