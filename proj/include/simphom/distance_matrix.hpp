#pragma once

#include <cstddef>
#include <vector>

#include "simphom/random_complex.hpp"

namespace simphom {

/// Symmetric pairwise distances between n points labelled 1..n, stored as
/// the strict upper triangle.  Entries are nonnegative; the diagonal is
/// implicitly zero.  No triangle inequality is required.
class DistanceMatrix {
public:
    /// n points, all pair distances zero.  Requires n >= 1.
    explicit DistanceMatrix(int n);

    int size() const { return n_; }
    std::size_t pair_count() const { return entries_.size(); }

    /// Distance between points i and j (1-based, i != j).
    double operator()(int i, int j) const;

    /// Sets d(i, j) = d(j, i) = value; value must be >= 0 and finite.
    void set(int i, int j, double value);

    double max_entry() const;

private:
    std::size_t index(int i, int j) const;

    int n_ = 1;
    std::vector<double> entries_;
};

/// Distance matrix with each pair distance independent uniform in [0, 1),
/// filled in lexicographic pair order for reproducible seeding.
DistanceMatrix random_distance_matrix(int n, Rng& rng);

/// The Vietoris-Rips complex of D at threshold epsilon: faces are exactly
/// the subsets of [n] whose members are pairwise within epsilon (inclusive).
/// This is the clique complex of the epsilon-neighborhood graph; the empty
/// face and all n singletons are always present.  Negative epsilon raises
/// invalid_input.
SimplicialComplex vietoris_rips(const DistanceMatrix& d, double epsilon);

} // namespace simphom
