#include "hurwitz/determinant.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>

namespace hurwitz {

Integer det_bareiss(DenseMatrix<Integer> m) {
    const int n = m.rows();
    require(n == m.cols(), ErrorCode::PreconditionFailed, "determinant of non-square matrix");
    if (n == 0) return 1;

    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Integer(-m.at(n - 1, n - 1));
}

RowCleared clear_row_denominators(const ExactMatrix& m) {
    RowCleared out;
    out.ints = DenseMatrix<Integer>(m.rows(), m.cols());
    out.row_scale.resize(static_cast<std::size_t>(m.rows()), Integer(1));
    for (int i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (int j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m.at(i, j)));
        out.row_scale[static_cast<std::size_t>(i)] = l;
        for (int j = 0; j < m.cols(); ++j) {
            const Rational scaled = m.at(i, j) * l;
            out.ints.at(i, j) = numerator(scaled);
        }
    }
    return out;
}

Rational det_exact(const ExactMatrix& m) {
    RowCleared cleared = clear_row_denominators(m);
    Integer den = 1;
    for (const Integer& s : cleared.row_scale) den *= s;
    return Rational(det_bareiss(std::move(cleared.ints)), den);
}

double det_float(FloatMatrix m) {
    const int n = m.rows();
    require(n == m.cols(), ErrorCode::PreconditionFailed, "determinant of non-square matrix");
    if (n == 0) return 1.0;
    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(m.at(i, k)) > std::abs(m.at(pivot, k))) pivot = i;
        if (m.at(pivot, k) == 0.0) return 0.0;
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            det = -det;
        }
        det *= m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double f = m.at(i, k) / m.at(k, k);
            if (f == 0.0) continue;
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return det;
}

std::vector<Rational> leading_principal_minors(const ExactMatrix& m, int up_to) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(up_to));
    for (int k = 1; k <= up_to; ++k) out.push_back(det_exact(m.leading(k)));
    return out;
}

std::vector<double> leading_principal_minors(const FloatMatrix& m, int up_to) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(up_to));
    for (int k = 1; k <= up_to; ++k) out.push_back(det_float(m.leading(k)));
    return out;
}

int rank_exact(const ExactMatrix& m) {
    RowCleared cleared = clear_row_denominators(m);
    DenseMatrix<Integer> a = std::move(cleared.ints);
    const int rows = a.rows(), cols = a.cols();
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i) {
            if (a.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = col; j < cols; ++j) std::swap(a.at(row, j), a.at(pivot, j));
        for (int i = row + 1; i < rows; ++i) {
            if (a.at(i, col) == 0) continue;
            const Integer f_num = a.at(i, col);
            const Integer f_den = a.at(row, col);
            for (int j = col; j < cols; ++j)
                a.at(i, j) = a.at(i, j) * f_den - a.at(row, j) * f_num;
        }
        ++row;
        ++rank;
    }
    return rank;
}

int rank_float(const FloatMatrix& m, double rel_tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::MatrixXd a(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a(i, j) = m.at(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = rel_tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff && sv(i) > 0.0) ++rank;
    return rank;
}

} // namespace hurwitz
