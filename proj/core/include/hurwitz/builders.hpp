#pragma once

#include "hurwitz/matrix.hpp"

#include <optional>

namespace hurwitz {

/// n x n finite Hurwitz matrix of a degree-n polynomial: entry (i,j) = a_{2j-i}
/// (1-based indices, a_k = 0 outside 0..n).
StructuredMatrix finite_hurwitz(const Polynomial& p);

/// Leading rows x rows window of the infinite Hurwitz matrix:
/// entry (i,j) = a_{2j-i-1}.
StructuredMatrix infinite_hurwitz_truncation(const Polynomial& p, int rows);

/// Truncated infinite matrix of Hurwitz type H(p,q) for deg q <= deg p.
/// The q coefficients are aligned to deg p (b_0 = 0 when deg q < deg p), and
/// the row interleaving switches with b_0 as in the two displayed layouts.
StructuredMatrix hurwitz_type(const Polynomial& p, const Polynomial& q, int rows);

/// Finite matrix of Hurwitz type: 2n x 2n when deg q < deg p = n, and
/// (2n+1) x (2n+1) when deg q = deg p = n. Equals the principal submatrix of
/// H(p,q) indexed by rows and columns 2 through size+1.
StructuredMatrix finite_hurwitz_type(const Polynomial& p, const Polynomial& q);

/// size x size window of the upper triangular Toeplitz matrix T(g):
/// entry (i,j) = g_{j-i}.
StructuredMatrix toeplitz_of(const Polynomial& g, int size);

/// Schoenberg's r x (r+l) band matrix T_r: row i carries g_0..g_l starting
/// at column i.
StructuredMatrix schoenberg_tr(const Polynomial& g, int r);

struct FactorizationCheck {
    int window = 0;
    bool infinite_identity = false;
    std::optional<bool> finite_identity;   // present when deg p - deg q is 0 or 1
    std::optional<bool> rank_claim;        // present when det/ p(0) hypotheses hold
    std::optional<int> expected_rank;
    std::optional<int> observed_rank;

    bool holds() const {
        if (!infinite_identity) return false;
        if (finite_identity && !*finite_identity) return false;
        if (rank_claim && !*rank_claim) return false;
        return true;
    }
};

/// Checks H(p*g, q*g) = H(p,q) T(g) entrywise on a window large enough to
/// force all remaining leading minors to zero, plus the finite-window version
/// with its rank statement when deg p - deg q is 0 or 1.
bool verify_factorization(const Polynomial& p, const Polynomial& q, const Polynomial& g,
                          FactorizationCheck* details = nullptr);

/// Specialization for p(z) = q(z) g(z^2): checks that the finite Hurwitz
/// matrix of the product equals the shifted window of the infinite Hurwitz
/// matrix of q times the leading Toeplitz window of g.
bool verify_hn_factorization(const Polynomial& q, const Polynomial& g,
                             FactorizationCheck* details = nullptr);

/// Recomputes one entry straight from the recipe's defining formula
/// (spot check that stored entries match the construction). Returns nullopt
/// for recipes without a generating formula (Custom).
std::optional<std::string> regenerate_entry(const StructuredMatrix& m, int row_1based,
                                            int col_1based);

} // namespace hurwitz
