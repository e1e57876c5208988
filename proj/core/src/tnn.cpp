#include "hurwitz/tnn.hpp"

#include "hurwitz/determinant.hpp"

#include <cmath>
#include <sstream>

namespace hurwitz {

std::string MinorWitness::value_string() const {
    if (exact) return to_string(exact_value);
    std::ostringstream os;
    os.precision(17);
    os << value;
    return os.str();
}

namespace {

constexpr int kMaxCap = 28;

struct Binom {
    std::uint64_t c[kMaxCap + 1][kMaxCap + 1] = {};
    Binom() {
        for (int n = 0; n <= kMaxCap; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

std::uint64_t binom(int n, int k) {
    static const Binom table;
    if (k < 0 || k > n) return 0;
    return table.c[n][k];
}

// Lexicographic rank of a k-combination of {0..n-1}.
std::uint64_t combo_rank(const std::vector<int>& combo, int n) {
    std::uint64_t rank = 0;
    int prev = -1;
    const int k = static_cast<int>(combo.size());
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < combo[static_cast<std::size_t>(i)]; ++v)
            rank += binom(n - 1 - v, k - 1 - i);
        prev = combo[static_cast<std::size_t>(i)];
    }
    return rank;
}

bool next_combo(std::vector<int>& combo, int n) {
    const int k = static_cast<int>(combo.size());
    int i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
        combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

template <typename V>
struct EnumResult {
    bool negative_found = false;
    std::vector<int> witness_rows;  // 0-based
    std::vector<int> witness_cols;
    V witness_value{};
    std::uint64_t checked = 0;
    int max_order = 0;
};

/// All square minors in lexicographic (order, row set, column set) order.
/// Minors of order k are expanded along their first row from the memoized
/// order-(k-1) layer; layers past the memory budget fall back to per-minor
/// elimination.
template <typename V, typename NegFn, typename DetFn>
EnumResult<V> enumerate_minors(const DenseMatrix<V>& a, NegFn is_negative, DetFn direct_det,
                               std::uint64_t memo_budget) {
    EnumResult<V> result;
    const int rows = a.rows(), cols = a.cols();
    // the combination rank tables top out here, whatever the caller's cap
    require(rows <= kMaxCap && cols <= kMaxCap, ErrorCode::CapExceeded,
            "exhaustive enumeration supports at most 28 rows/columns");
    const int max_order = std::min(rows, cols);

    std::vector<V> prev_layer;
    bool prev_available = false;

    for (int k = 1; k <= max_order; ++k) {
        result.max_order = k;
        const std::uint64_t row_count = binom(rows, k);
        const std::uint64_t col_count = binom(cols, k);
        const bool memoize = row_count * col_count <= memo_budget;

        std::vector<V> layer;
        if (memoize) layer.assign(row_count * col_count, V(0));

        const std::uint64_t prev_cols = binom(cols, k - 1);

        std::vector<int> rowset(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) rowset[static_cast<std::size_t>(i)] = i;
        std::uint64_t row_rank = 0;
        do {
            std::uint64_t sub_row_rank = 0;
            if (k > 1 && prev_available) {
                const std::vector<int> sub_rows(rowset.begin() + 1, rowset.end());
                sub_row_rank = combo_rank(sub_rows, rows);
            }

            std::vector<int> colset(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j) colset[static_cast<std::size_t>(j)] = j;
            std::uint64_t col_rank = 0;
            do {
                V value(0);
                if (k == 1) {
                    value = a.at(rowset[0], colset[0]);
                } else if (prev_available) {
                    std::vector<int> sub_cols(colset.begin() + 1, colset.end());
                    int sign = 1;
                    for (int t = 0; t < k; ++t) {
                        if (t > 0) sub_cols[static_cast<std::size_t>(t - 1)] = colset[static_cast<std::size_t>(t - 1)];
                        const V& pivot = a.at(rowset[0], colset[static_cast<std::size_t>(t)]);
                        if (!(pivot == V(0))) {
                            const std::uint64_t idx =
                                sub_row_rank * prev_cols + combo_rank(sub_cols, cols);
                            const V term = pivot * prev_layer[idx];
                            if (sign > 0)
                                value += term;
                            else
                                value -= term;
                        }
                        sign = -sign;
                    }
                } else {
                    value = direct_det(a, rowset, colset);
                }

                ++result.checked;
                if (is_negative(value, k)) {
                    result.negative_found = true;
                    result.witness_rows = rowset;
                    result.witness_cols = colset;
                    result.witness_value = value;
                    return result;
                }
                if (memoize) layer[row_rank * col_count + col_rank] = value;
                ++col_rank;
            } while (next_combo(colset, cols));
            ++row_rank;
        } while (next_combo(rowset, rows));

        prev_available = memoize;
        prev_layer = std::move(layer);
    }
    return result;
}

double zero_band(double base, double norm, int order) {
    if (norm <= 0.0) return 0.0;
    const double log_band = std::log(base) + order * std::log(norm);
    if (log_band > 600.0) return std::exp(600.0);
    return std::exp(log_band);
}

TnnReport finish_report(const EnumResult<Integer>& raw, const std::vector<Integer>& row_scale) {
    TnnReport report;
    report.minors_checked = raw.checked;
    report.max_order_checked = raw.max_order;
    if (!raw.negative_found) return report;
    report.verdict = TnnVerdict::NotTN;
    MinorWitness w;
    Integer den = 1;
    for (int r : raw.witness_rows) {
        w.rows.push_back(r + 1);
        den *= row_scale[static_cast<std::size_t>(r)];
    }
    for (int c : raw.witness_cols) w.cols.push_back(c + 1);
    w.exact = true;
    w.exact_value = Rational(raw.witness_value, den);
    w.value = to_double(w.exact_value);
    report.witness = std::move(w);
    return report;
}

} // namespace

TnnReport tnn_check(const ExactMatrix& m, const TnnOptions& options) {
    require(m.rows() <= options.cap && m.cols() <= options.cap, ErrorCode::CapExceeded,
            "matrix exceeds the exhaustive enumeration cap");
    RowCleared cleared = clear_row_denominators(m);
    const auto raw = enumerate_minors<Integer>(
        cleared.ints, [](const Integer& v, int) { return v < 0; },
        [](const DenseMatrix<Integer>& a, const std::vector<int>& r, const std::vector<int>& c) {
            return det_bareiss(a.select(r, c));
        },
        options.memo_budget);
    return finish_report(raw, cleared.row_scale);
}

TnnReport tnn_check(const FloatMatrix& m, const TnnOptions& options) {
    require(m.rows() <= options.cap && m.cols() <= options.cap, ErrorCode::CapExceeded,
            "matrix exceeds the exhaustive enumeration cap");
    const double norm = options.band_norm > 0.0 ? options.band_norm : norm1(m);
    const auto raw = enumerate_minors<double>(
        m,
        [&](double v, int order) { return v < -zero_band(options.band_base, norm, order); },
        [](const FloatMatrix& a, const std::vector<int>& r, const std::vector<int>& c) {
            return det_float(a.select(r, c));
        },
        options.memo_budget);
    TnnReport report;
    report.minors_checked = raw.checked;
    report.max_order_checked = raw.max_order;
    if (raw.negative_found) {
        report.verdict = TnnVerdict::NotTN;
        MinorWitness w;
        for (int r : raw.witness_rows) w.rows.push_back(r + 1);
        for (int c : raw.witness_cols) w.cols.push_back(c + 1);
        w.exact = false;
        w.value = raw.witness_value;
        report.witness = std::move(w);
    }
    return report;
}

TnnReport is_totally_nonnegative(const StructuredMatrix& m, const TnnOptions& options) {
    return m.is_exact() ? tnn_check(m.exact(), options) : tnn_check(m.approx(), options);
}

namespace {

MinorSequence make_sequence(MinorKind kind, const StructuredMatrix& m, int up_to,
                            const Tolerances& tol) {
    MinorSequence s;
    s.kind = kind;
    s.backend = m.backend();
    if (m.is_exact()) {
        s.exact = leading_principal_minors(m.exact(), up_to);
        for (const Rational& v : s.exact) {
            s.approx.push_back(to_double(v));
            s.signs.push_back(sign_of(v));
        }
        return s;
    }
    const FloatMatrix fm = m.approx();
    s.approx = leading_principal_minors(fm, up_to);
    const double norm = norm1(fm);
    for (int j = 1; j <= up_to; ++j) {
        const double v = s.approx[static_cast<std::size_t>(j - 1)];
        const double band = zero_band(tol.minor_band, norm, j);
        s.signs.push_back(v > band ? 1 : (v < -band ? -1 : 0));
    }
    return s;
}

} // namespace

MinorSequence hurwitz_minors(const Polynomial& p, const Tolerances& tol) {
    require(p.degree() >= 1, ErrorCode::DegreeTooSmall, "Hurwitz minors need degree >= 1");
    return make_sequence(MinorKind::DeltaOfP, finite_hurwitz(p), p.degree(), tol);
}

MinorSequence eta_minors(const Polynomial& p, int depth, const Tolerances& tol) {
    require(depth >= 1, ErrorCode::PreconditionFailed, "depth must be >= 1");
    return make_sequence(MinorKind::EtaOfP, infinite_hurwitz_truncation(p, depth), depth, tol);
}

MinorSequence eta_minors_pq(const Polynomial& p, const Polynomial& q, int depth,
                            const Tolerances& tol) {
    require(depth >= 1, ErrorCode::PreconditionFailed, "depth must be >= 1");
    return make_sequence(MinorKind::EtaOfPQ, hurwitz_type(p, q, depth), depth, tol);
}

MinorSequence delta_minors_pq(const Polynomial& p, const Polynomial& q, const Tolerances& tol) {
    const StructuredMatrix m = finite_hurwitz_type(p, q);
    return make_sequence(MinorKind::DeltaOfPQ, m, m.rows(), tol);
}

std::optional<int> stability_index_from_minors(const MinorSequence& delta) {
    int m = 0;
    const int n = delta.size();
    while (m < n && delta.signs[static_cast<std::size_t>(m)] > 0) ++m;
    for (int j = m; j < n; ++j)
        if (delta.signs[static_cast<std::size_t>(j)] != 0) return std::nullopt;
    return m;
}

std::optional<int> eta_positive_prefix(const MinorSequence& eta) {
    return stability_index_from_minors(eta);
}

} // namespace hurwitz
