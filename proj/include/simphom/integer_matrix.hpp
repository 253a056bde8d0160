#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace simphom {

/// Exact integer scalar used throughout.  Arbitrary precision: entry growth
/// during elimination is unbounded in machine words.
using Integer = boost::multiprecision::cpp_int;

/// Dense matrix of exact integers, row-major.  A 0 x k or k x 0 matrix is
/// legal and represents a map to or from the zero module.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;

    /// Matrix product; shape mismatch throws invalid_input.
    IntegerMatrix operator*(const IntegerMatrix& rhs) const;

    bool operator==(const IntegerMatrix&) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row i += factor * row j
    void add_row_multiple(std::size_t i, std::size_t j, const Integer& factor);
    /// col i += factor * col j
    void add_col_multiple(std::size_t i, std::size_t j, const Integer& factor);
    void negate_row(std::size_t i);

    /// Text grid with per-column widths, one "| ... |" line per row.
    /// Entries are left-justified and separated by single spaces.  Returns
    /// the empty string when either dimension is zero.
    std::string to_text() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

} // namespace simphom
