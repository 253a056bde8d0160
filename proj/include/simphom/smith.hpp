#pragma once

#include <cstddef>
#include <vector>

#include "simphom/integer_matrix.hpp"

namespace simphom {

/// Smith normal form of an integer matrix A: unimodular U (rows x rows) and
/// V (cols x cols) with U·A·V = D, D diagonal with positive entries
/// d_1 | d_2 | ... | d_r followed by zeros.
struct SmithDecomposition {
    IntegerMatrix d;
    IntegerMatrix u;
    IntegerMatrix v;
    std::size_t rank = 0;

    /// The nonzero diagonal entries d_1, ..., d_r.
    std::vector<Integer> invariant_factors() const;
};

/// Computes the Smith normal form.  Any shape is accepted, including empty.
/// Pivot selection is the smallest nonzero absolute value in the remaining
/// submatrix (first such entry in row-major order), which keeps intermediate
/// entries small and makes the result deterministic.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Invariant factors only, skipping the U/V bookkeeping.  Same elimination,
/// same result as smith_normal_form(a).invariant_factors().
std::vector<Integer> invariant_factors(IntegerMatrix a);

} // namespace simphom
