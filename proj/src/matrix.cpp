#include "hadlab/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "hadlab/errors.hpp"

namespace hadlab {

namespace {

void check_shape(int rows, int cols) {
    const bool shape_ok =
        cols == 6 && (rows == 2 || rows == 3 || rows == 4 || rows == 6);
    if (!shape_ok)
        throw std::invalid_argument("unsupported matrix shape " + std::to_string(rows) +
                                    "x" + std::to_string(cols));
}

void check_index(const CHMatrix& m, int i, int j) {
    if (i < 0 || i >= m.rows() || j < 0 || j >= m.cols())
        throw std::out_of_range("matrix index (" + std::to_string(i) + "," +
                                std::to_string(j) + ") out of range");
}

} // namespace

CHMatrix::CHMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check_shape(rows, cols);
    entries_.resize(static_cast<std::size_t>(rows) * cols);
}

CHMatrix CHMatrix::from_rows(const std::vector<std::vector<UnimodEntry>>& rows) {
    if (rows.empty())
        throw std::invalid_argument("empty matrix");
    CHMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols())
            throw std::invalid_argument("ragged rows");
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

UnimodEntry& CHMatrix::at(int i, int j) {
    check_index(*this, i, j);
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

const UnimodEntry& CHMatrix::at(int i, int j) const {
    check_index(*this, i, j);
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

CHMatrix CHMatrix::transposed() const {
    if (rows_ != cols_)
        throw std::invalid_argument("transpose requires a square matrix");
    CHMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

bool CHMatrix::entrywise_close(const CHMatrix& other, double eps) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (std::abs(value(i, j) - other.value(i, j)) > eps)
                return false;
    return true;
}

std::complex<double> inner_product_rows(const CHMatrix& m, int i, int j) {
    check_index(m, i, 0);
    check_index(m, j, 0);
    std::complex<double> s = 0.0;
    for (int k = 0; k < m.cols(); ++k)
        s += (m.at(i, k) / m.at(j, k)).value();
    return s;
}

double max_offdiag_row_residual(const CHMatrix& m) {
    double worst = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j)
            if (i != j)
                worst = std::max(worst, std::abs(inner_product_rows(m, i, j)));
    return worst;
}

HadamardCheck is_hadamard(const CHMatrix& m, const Tolerances& tol) {
    tol.validate();
    if (m.rows() != m.cols())
        throw std::invalid_argument("is_hadamard requires a square matrix");
    const double worst = max_offdiag_row_residual(m);
    return {worst <= tol.eps_orth, worst};
}

CHMatrix dephase(const CHMatrix& m, int pivot_row, int pivot_col) {
    check_index(m, pivot_row, pivot_col);
    CHMatrix t = m;
    if (pivot_row != 0)
        for (int j = 0; j < t.cols(); ++j)
            std::swap(t.at(0, j), t.at(pivot_row, j));
    if (pivot_col != 0)
        for (int i = 0; i < t.rows(); ++i)
            std::swap(t.at(i, 0), t.at(i, pivot_col));
    CHMatrix out(t.rows(), t.cols());
    const UnimodEntry corner = t.at(0, 0);
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j)
            out.at(i, j) = t.at(i, j) * corner / (t.at(i, 0) * t.at(0, j));
    return out;
}

bool is_normalized(const CHMatrix& m, double eps) {
    for (int j = 0; j < m.cols(); ++j)
        if (!m.at(0, j).close_to(1.0, eps))
            return false;
    for (int i = 0; i < m.rows(); ++i)
        if (!m.at(i, 0).close_to(1.0, eps))
            return false;
    return true;
}

} // namespace hadlab
