#include "hurwitz/builders.hpp"

#include "hurwitz/determinant.hpp"

#include <cmath>
#include <sstream>

namespace hurwitz {

namespace {

// Entry formulas, 1-based (i, j). Coefficients of q are aligned to deg p:
// b_k is the coefficient of z^{deg p - k} in q, zero when out of range.

template <typename T>
T finite_hurwitz_entry(const Poly<T>& p, int i, int j) {
    return p.coeff(2 * j - i);
}

template <typename T>
T infinite_hurwitz_entry(const Poly<T>& p, int i, int j) {
    return p.coeff(2 * j - i - 1);
}

template <typename T>
T aligned_coeff(const Poly<T>& q, int offset, int k) {
    return q.coeff(k - offset);
}

// H(p,q) truncation. With b_0 = 0 the a-rows lead; with b_0 != 0 the b-rows
// lead and the a-rows shift one column right.
template <typename T>
T hurwitz_type_entry(const Poly<T>& p, const Poly<T>& q, int offset, int i, int j) {
    const bool b0_zero = offset > 0 || q.is_zero();
    if (b0_zero) {
        if (i % 2 == 1) return p.coeff(j - (i + 1) / 2);
        return aligned_coeff(q, offset, j - i / 2);
    }
    if (i % 2 == 1) return aligned_coeff(q, offset, j - (i + 1) / 2);
    return p.coeff(j - i / 2 - 1);
}

// Finite matrices of Hurwitz type; the same interleaving shifted to start
// with the second row of the infinite layout.
template <typename T>
T finite_hurwitz_type_entry(const Poly<T>& p, const Poly<T>& q, int offset, int i, int j) {
    if (offset > 0 || q.is_zero()) {
        if (i % 2 == 1) return aligned_coeff(q, offset, j - (i - 1) / 2);
        return p.coeff(j - i / 2);
    }
    if (i % 2 == 1) return p.coeff(j - (i + 1) / 2);
    return aligned_coeff(q, offset, j - i / 2);
}

template <typename T>
T toeplitz_entry(const Poly<T>& g, int i, int j) {
    return g.coeff(j - i);
}

template <typename T>
DenseMatrix<T> build(int rows, int cols, auto&& entry) {
    DenseMatrix<T> m(rows, cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) m.at(i - 1, j - 1) = entry(i, j);
    return m;
}

} // namespace

StructuredMatrix finite_hurwitz(const Polynomial& p) {
    const int n = p.degree();
    require(n >= 1, ErrorCode::DegreeTooSmall, "finite Hurwitz matrix needs degree >= 1");
    Recipe r;
    r.kind = Recipe::Kind::FiniteHurwitz;
    r.sources = {p};
    r.size_param = n;
    if (p.is_exact()) {
        const auto& poly = p.exact_poly();
        return StructuredMatrix(
            build<Rational>(n, n, [&](int i, int j) { return finite_hurwitz_entry(poly, i, j); }),
            std::move(r));
    }
    const auto& poly = p.float_poly();
    return StructuredMatrix(
        build<double>(n, n, [&](int i, int j) { return finite_hurwitz_entry(poly, i, j); }),
        std::move(r));
}

StructuredMatrix infinite_hurwitz_truncation(const Polynomial& p, int rows) {
    require(rows >= 1, ErrorCode::PreconditionFailed, "window needs at least one row");
    Recipe r;
    r.kind = Recipe::Kind::InfiniteHurwitzTruncation;
    r.sources = {p};
    r.size_param = rows;
    if (p.is_exact()) {
        const auto& poly = p.exact_poly();
        return StructuredMatrix(
            build<Rational>(rows, rows, [&](int i, int j) { return infinite_hurwitz_entry(poly, i, j); }),
            std::move(r));
    }
    const auto& poly = p.float_poly();
    return StructuredMatrix(
        build<double>(rows, rows, [&](int i, int j) { return infinite_hurwitz_entry(poly, i, j); }),
        std::move(r));
}

StructuredMatrix hurwitz_type(const Polynomial& p, const Polynomial& q, int rows) {
    require(rows >= 1, ErrorCode::PreconditionFailed, "window needs at least one row");
    require(!p.is_zero(), ErrorCode::PreconditionFailed, "denominator polynomial is zero");
    require(q.is_zero() || q.degree() <= p.degree(), ErrorCode::PreconditionFailed,
            "deg q must not exceed deg p");
    const int offset = q.is_zero() ? p.degree() + 1 : p.degree() - q.degree();
    Recipe r;
    r.kind = Recipe::Kind::HurwitzType;
    r.sources = {p, q};
    r.size_param = rows;
    if (p.is_exact() && q.is_exact()) {
        const auto& pp = p.exact_poly();
        const auto& qq = q.exact_poly();
        return StructuredMatrix(
            build<Rational>(rows, rows,
                            [&](int i, int j) { return hurwitz_type_entry(pp, qq, offset, i, j); }),
            std::move(r));
    }
    const auto pp = p.to_float_poly();
    const auto qq = q.to_float_poly();
    return StructuredMatrix(
        build<double>(rows, rows,
                      [&](int i, int j) { return hurwitz_type_entry(pp, qq, offset, i, j); }),
        std::move(r));
}

StructuredMatrix finite_hurwitz_type(const Polynomial& p, const Polynomial& q) {
    require(!p.is_zero(), ErrorCode::PreconditionFailed, "denominator polynomial is zero");
    require(q.is_zero() || q.degree() <= p.degree(), ErrorCode::PreconditionFailed,
            "deg q must not exceed deg p");
    const int n = p.degree();
    const bool equal_degree = !q.is_zero() && q.degree() == n;
    const int size = equal_degree ? 2 * n + 1 : 2 * n;
    require(size >= 1, ErrorCode::DegreeTooSmall, "matrix would be empty");
    const int offset = q.is_zero() ? n + 1 : n - q.degree();
    Recipe r;
    r.kind = Recipe::Kind::FiniteHurwitzType;
    r.sources = {p, q};
    r.size_param = size;
    if (p.is_exact() && q.is_exact()) {
        const auto& pp = p.exact_poly();
        const auto& qq = q.exact_poly();
        return StructuredMatrix(
            build<Rational>(size, size,
                            [&](int i, int j) { return finite_hurwitz_type_entry(pp, qq, offset, i, j); }),
            std::move(r));
    }
    const auto pp = p.to_float_poly();
    const auto qq = q.to_float_poly();
    return StructuredMatrix(
        build<double>(size, size,
                      [&](int i, int j) { return finite_hurwitz_type_entry(pp, qq, offset, i, j); }),
        std::move(r));
}

StructuredMatrix toeplitz_of(const Polynomial& g, int size) {
    require(size >= 1, ErrorCode::PreconditionFailed, "window needs at least one row");
    Recipe r;
    r.kind = Recipe::Kind::ToeplitzOfPoly;
    r.sources = {g};
    r.size_param = size;
    if (g.is_exact()) {
        const auto& gg = g.exact_poly();
        return StructuredMatrix(
            build<Rational>(size, size, [&](int i, int j) { return toeplitz_entry(gg, i, j); }),
            std::move(r));
    }
    const auto& gg = g.float_poly();
    return StructuredMatrix(
        build<double>(size, size, [&](int i, int j) { return toeplitz_entry(gg, i, j); }),
        std::move(r));
}

StructuredMatrix schoenberg_tr(const Polynomial& g, int r) {
    require(r >= 1, ErrorCode::PreconditionFailed, "band matrix needs r >= 1");
    require(!g.is_zero(), ErrorCode::PreconditionFailed, "zero polynomial has no band matrix");
    const int l = g.degree();
    Recipe rec;
    rec.kind = Recipe::Kind::SchoenbergBand;
    rec.sources = {g};
    rec.size_param = r;
    if (g.is_exact()) {
        const auto& gg = g.exact_poly();
        return StructuredMatrix(
            build<Rational>(r, r + l, [&](int i, int j) { return toeplitz_entry(gg, i, j); }),
            std::move(rec));
    }
    const auto& gg = g.float_poly();
    return StructuredMatrix(
        build<double>(r, r + l, [&](int i, int j) { return toeplitz_entry(gg, i, j); }),
        std::move(rec));
}

namespace {

bool matrices_match(const StructuredMatrix& a, const StructuredMatrix& b, double rel_tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
    const FloatMatrix fa = a.to_float_matrix();
    const FloatMatrix fb = b.to_float_matrix();
    double scale = 1.0;
    for (int i = 0; i < fa.rows(); ++i)
        for (int j = 0; j < fa.cols(); ++j) scale = std::max(scale, std::abs(fa.at(i, j)));
    for (int i = 0; i < fa.rows(); ++i)
        for (int j = 0; j < fa.cols(); ++j)
            if (std::abs(fa.at(i, j) - fb.at(i, j)) > rel_tol * scale) return false;
    return true;
}

StructuredMatrix product(const StructuredMatrix& a, const StructuredMatrix& b) {
    Recipe r;
    r.kind = Recipe::Kind::Custom;
    if (a.is_exact() && b.is_exact()) return StructuredMatrix(a.exact() * b.exact(), std::move(r));
    return StructuredMatrix(a.to_float_matrix() * b.to_float_matrix(), std::move(r));
}

std::vector<int> range_1based(int from, int to) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(to - from + 1));
    for (int i = from; i <= to; ++i) v.push_back(i);
    return v;
}

int rank_of_matrix(const StructuredMatrix& m, double sv_tol) {
    return m.is_exact() ? rank_exact(m.exact()) : rank_float(m.to_float_matrix(), sv_tol);
}

bool nonzero_value(const Polynomial& p, double at, double rel_tol) {
    if (p.is_exact()) return p.exact_poly()(Rational(static_cast<int>(at))) != 0;
    return std::abs(p.float_poly()(at)) > rel_tol;
}

} // namespace

bool verify_factorization(const Polynomial& p, const Polynomial& q, const Polynomial& g,
                          FactorizationCheck* details) {
    require(!p.is_zero() && !g.is_zero(), ErrorCode::PreconditionFailed,
            "factorization needs nonzero p and g");
    require(q.is_zero() || q.degree() <= p.degree(), ErrorCode::PreconditionFailed,
            "deg q must not exceed deg p");
    const double rel = default_tolerances().rel;
    const int n = p.degree();
    const int m = g.degree();

    FactorizationCheck check;
    check.window = 2 * (n + m) + 3;

    const Polynomial pg = p * g;
    const Polynomial qg = q * g;

    // Truncations commute with the product because T(g) is upper triangular.
    const StructuredMatrix lhs = hurwitz_type(pg, qg, check.window);
    const StructuredMatrix rhs =
        product(hurwitz_type(p, q, check.window), toeplitz_of(g, check.window));
    check.infinite_identity = matrices_match(lhs, rhs, rel);

    const int gap = q.is_zero() ? n + 1 : n - q.degree();
    if (gap == 0 || gap == 1) {
        const int size = gap == 1 ? 2 * (n + m) : 2 * (n + m) + 1;
        const StructuredMatrix finite_lhs = finite_hurwitz_type(pg, qg);
        const StructuredMatrix window = hurwitz_type(p, q, size + 1);
        const StructuredMatrix shifted =
            window.submatrix(range_1based(2, size + 1), range_1based(2, size + 1));
        const StructuredMatrix finite_rhs = product(shifted, toeplitz_of(g, size));
        check.finite_identity = matrices_match(finite_lhs, finite_rhs, rel);

        bool det_nonzero = false;
        const StructuredMatrix base = finite_hurwitz_type(p, q);
        if (base.is_exact()) {
            det_nonzero = det_exact(base.exact()) != 0;
        } else {
            const FloatMatrix fm = base.to_float_matrix();
            det_nonzero = std::abs(det_float(fm)) > rel * std::pow(std::max(1.0, norm1(fm)), fm.rows());
        }
        if (det_nonzero && nonzero_value(p, 0.0, rel)) {
            const int expected = gap == 1 ? 2 * n + m : 2 * n + m + 1;
            const int observed = rank_of_matrix(finite_lhs, default_tolerances().rank_sv);
            check.expected_rank = expected;
            check.observed_rank = observed;
            check.rank_claim = expected == observed;
        }
    }

    if (details) *details = check;
    return check.holds();
}

bool verify_hn_factorization(const Polynomial& q, const Polynomial& g,
                             FactorizationCheck* details) {
    require(!q.is_zero() && !g.is_zero(), ErrorCode::PreconditionFailed,
            "factorization needs nonzero q and g");
    const Polynomial p = q * g.compose_z_squared();
    const int n = p.degree();
    require(n >= 1, ErrorCode::DegreeTooSmall, "product has degree < 1");

    const StructuredMatrix lhs = finite_hurwitz(p);
    const StructuredMatrix window = infinite_hurwitz_truncation(q, n + 1);
    const StructuredMatrix shifted =
        window.submatrix(range_1based(2, n + 1), range_1based(2, n + 1));
    const StructuredMatrix rhs = product(shifted, toeplitz_of(g, n));

    FactorizationCheck check;
    check.window = n;
    check.infinite_identity = matrices_match(lhs, rhs, default_tolerances().rel);
    if (details) *details = check;
    return check.infinite_identity;
}

namespace {

template <typename T>
T recipe_entry_dispatch(const Recipe& recipe, const std::vector<Poly<T>>& sources, int i, int j) {
    switch (recipe.kind) {
        case Recipe::Kind::FiniteHurwitz:
            return finite_hurwitz_entry(sources[0], i, j);
        case Recipe::Kind::InfiniteHurwitzTruncation:
            return infinite_hurwitz_entry(sources[0], i, j);
        case Recipe::Kind::HurwitzType: {
            const int offset =
                sources[1].is_zero() ? sources[0].degree() + 1 : sources[0].degree() - sources[1].degree();
            return hurwitz_type_entry(sources[0], sources[1], offset, i, j);
        }
        case Recipe::Kind::FiniteHurwitzType: {
            const int offset =
                sources[1].is_zero() ? sources[0].degree() + 1 : sources[0].degree() - sources[1].degree();
            return finite_hurwitz_type_entry(sources[0], sources[1], offset, i, j);
        }
        case Recipe::Kind::ToeplitzOfPoly:
        case Recipe::Kind::SchoenbergBand:
            return toeplitz_entry(sources[0], i, j);
        case Recipe::Kind::Submatrix:
        case Recipe::Kind::Custom:
            break;
    }
    fail(ErrorCode::PreconditionFailed, "recipe has no generating formula");
}

} // namespace

std::optional<std::string> regenerate_entry(const StructuredMatrix& m, int row_1based,
                                            int col_1based) {
    const Recipe* recipe = &m.recipe();
    int i = row_1based, j = col_1based;
    while (recipe->kind == Recipe::Kind::Submatrix) {
        if (!recipe->parent) return std::nullopt;
        i = recipe->row_index[static_cast<std::size_t>(i - 1)];
        j = recipe->col_index[static_cast<std::size_t>(j - 1)];
        recipe = recipe->parent.get();
    }
    if (recipe->kind == Recipe::Kind::Custom || recipe->sources.empty()) return std::nullopt;

    bool all_exact = true;
    for (const Polynomial& s : recipe->sources) all_exact = all_exact && s.is_exact();
    if (all_exact) {
        std::vector<ExactPoly> sources;
        for (const Polynomial& s : recipe->sources) sources.push_back(s.exact_poly());
        return to_string(recipe_entry_dispatch<Rational>(*recipe, sources, i, j));
    }
    std::vector<FloatPoly> sources;
    for (const Polynomial& s : recipe->sources) sources.push_back(s.to_float_poly());
    std::ostringstream os;
    os.precision(17);
    os << recipe_entry_dispatch<double>(*recipe, sources, i, j);
    return os.str();
}

} // namespace hurwitz
