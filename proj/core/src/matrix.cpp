#include "hurwitz/matrix.hpp"

#include <cmath>
#include <sstream>

namespace hurwitz {

double norm1(const FloatMatrix& m) {
    double best = 0.0;
    for (int j = 0; j < m.cols(); ++j) {
        double col = 0.0;
        for (int i = 0; i < m.rows(); ++i) col += std::abs(m.at(i, j));
        best = std::max(best, col);
    }
    return best;
}

std::string Recipe::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::FiniteHurwitz: os << "finite_hurwitz(n=" << size_param << ")"; break;
        case Kind::InfiniteHurwitzTruncation: os << "infinite_hurwitz(rows=" << size_param << ")"; break;
        case Kind::HurwitzType: os << "hurwitz_type(rows=" << size_param << ")"; break;
        case Kind::FiniteHurwitzType: os << "finite_hurwitz_type(size=" << size_param << ")"; break;
        case Kind::ToeplitzOfPoly: os << "toeplitz(size=" << size_param << ")"; break;
        case Kind::SchoenbergBand: os << "schoenberg_band(r=" << size_param << ")"; break;
        case Kind::Submatrix: {
            os << "submatrix(";
            if (parent) os << parent->describe();
            os << "; rows=[";
            for (std::size_t i = 0; i < row_index.size(); ++i) os << (i ? "," : "") << row_index[i];
            os << "], cols=[";
            for (std::size_t i = 0; i < col_index.size(); ++i) os << (i ? "," : "") << col_index[i];
            os << "])";
            break;
        }
        case Kind::Custom: os << "custom"; break;
    }
    return os.str();
}

std::string StructuredMatrix::entry_string(int i, int j) const {
    if (is_exact()) return to_string(exact_.at(i, j));
    std::ostringstream os;
    os.precision(17);
    os << float_.at(i, j);
    return os.str();
}

StructuredMatrix StructuredMatrix::submatrix(const std::vector<int>& rows_1based,
                                             const std::vector<int>& cols_1based) const {
    std::vector<int> r0, c0;
    r0.reserve(rows_1based.size());
    c0.reserve(cols_1based.size());
    for (int r : rows_1based) {
        require(r >= 1 && r <= rows(), ErrorCode::PreconditionFailed, "row index out of range");
        r0.push_back(r - 1);
    }
    for (int c : cols_1based) {
        require(c >= 1 && c <= cols(), ErrorCode::PreconditionFailed, "column index out of range");
        c0.push_back(c - 1);
    }

    Recipe sub;
    sub.kind = Recipe::Kind::Submatrix;
    sub.parent = std::make_shared<Recipe>(recipe_);
    sub.row_index = rows_1based;
    sub.col_index = cols_1based;

    if (is_exact()) return StructuredMatrix(exact_.select(r0, c0), std::move(sub));
    return StructuredMatrix(float_.select(r0, c0), std::move(sub));
}

} // namespace hurwitz
