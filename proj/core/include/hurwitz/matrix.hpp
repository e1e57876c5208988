#pragma once

#include "hurwitz/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hurwitz {

/// Row-major dense matrix. Indices are 0-based here; every user-facing
/// report converts to the 1-based row/column convention.
template <typename T>
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    DenseMatrix select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
        DenseMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                out.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
        return out;
    }

    DenseMatrix leading(int order) const {
        std::vector<int> idx;
        idx.reserve(static_cast<std::size_t>(order));
        for (int i = 0; i < order; ++i) idx.push_back(i);
        return select(idx, idx);
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        require(a.cols() == b.rows(), ErrorCode::PreconditionFailed, "matrix product shape mismatch");
        DenseMatrix out(a.rows(), b.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int k = 0; k < a.cols(); ++k) {
                const T& aik = a.at(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
            }
        return out;
    }

    T trace() const {
        T s(0);
        const int n = std::min(rows_, cols_);
        for (int i = 0; i < n; ++i) s += at(i, i);
        return s;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

using ExactMatrix = DenseMatrix<Rational>;
using FloatMatrix = DenseMatrix<double>;

inline FloatMatrix to_float(const ExactMatrix& m) {
    FloatMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = to_double(m.at(i, j));
    return out;
}

/// Largest column sum of absolute values (the 1-norm); used to scale float
/// zero bands.
double norm1(const FloatMatrix& m);

/// Construction recipe kept alongside the entries so any entry can be
/// regenerated from the source polynomial(s) and witnesses stay auditable.
struct Recipe {
    enum class Kind {
        FiniteHurwitz,
        InfiniteHurwitzTruncation,
        HurwitzType,
        FiniteHurwitzType,
        ToeplitzOfPoly,
        SchoenbergBand,
        Submatrix,
        Custom,
    };

    Kind kind = Kind::Custom;
    std::vector<Polynomial> sources;
    int size_param = 0;

    // Submatrix provenance (1-based indices into the parent).
    std::shared_ptr<const Recipe> parent;
    std::vector<int> row_index;
    std::vector<int> col_index;

    std::string describe() const;
};

/// Dense real matrix tagged with the recipe that produced it.
class StructuredMatrix {
public:
    StructuredMatrix(ExactMatrix m, Recipe r)
        : backend_(Backend::ExactRational), exact_(std::move(m)), recipe_(std::move(r)) {}
    StructuredMatrix(FloatMatrix m, Recipe r)
        : backend_(Backend::Float), float_(std::move(m)), recipe_(std::move(r)) {}

    Backend backend() const { return backend_; }
    bool is_exact() const { return backend_ == Backend::ExactRational; }

    int rows() const { return is_exact() ? exact_.rows() : float_.rows(); }
    int cols() const { return is_exact() ? exact_.cols() : float_.cols(); }

    const ExactMatrix& exact() const {
        require(is_exact(), ErrorCode::BackendMismatch, "matrix is not exact-rational");
        return exact_;
    }

    const FloatMatrix& approx() const {
        require(!is_exact(), ErrorCode::BackendMismatch, "matrix is not float-backed");
        return float_;
    }

    FloatMatrix to_float_matrix() const { return is_exact() ? to_float(exact_) : float_; }

    double entry_double(int i, int j) const {
        return is_exact() ? to_double(exact_.at(i, j)) : float_.at(i, j);
    }

    std::string entry_string(int i, int j) const;

    const Recipe& recipe() const { return recipe_; }

    /// Provenance-preserving extraction; indices are 1-based as in reports.
    StructuredMatrix submatrix(const std::vector<int>& rows_1based,
                               const std::vector<int>& cols_1based) const;

    template <typename F>
    auto visit(F&& f) const {
        return is_exact() ? f(exact_) : f(float_);
    }

private:
    Backend backend_;
    ExactMatrix exact_;
    FloatMatrix float_;
    Recipe recipe_;
};

} // namespace hurwitz
