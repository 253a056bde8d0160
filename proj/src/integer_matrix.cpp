#include "simphom/integer_matrix.hpp"

#include <algorithm>

#include "simphom/errors.hpp"

namespace simphom {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw invalid_input("matrix product shape mismatch: " + std::to_string(cols_) +
                            " vs " + std::to_string(rhs.rows_));
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Integer& b = rhs(k, j);
                if (b != 0) out(i, j) += a * b;
            }
        }
    return out;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntegerMatrix::add_row_multiple(std::size_t i, std::size_t j, const Integer& factor) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += factor * (*this)(j, c);
}

void IntegerMatrix::add_col_multiple(std::size_t i, std::size_t j, const Integer& factor) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += factor * (*this)(r, j);
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

std::string IntegerMatrix::to_text() const {
    if (rows_ == 0 || cols_ == 0) return "";
    std::vector<std::size_t> width(cols_, 1);
    std::vector<std::string> cell(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            cell[r * cols_ + c] = (*this)(r, c).str();
            width[c] = std::max(width[c], cell[r * cols_ + c].size());
        }
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        out += "|";
        for (std::size_t c = 0; c < cols_; ++c) {
            const std::string& s = cell[r * cols_ + c];
            out += ' ';
            out += s;
            out.append(width[c] - s.size(), ' ');
        }
        out += " |\n";
    }
    return out;
}

} // namespace simphom
