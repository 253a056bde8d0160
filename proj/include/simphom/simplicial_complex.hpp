#pragma once

#include <cstddef>
#include <vector>

#include "simphom/face.hpp"

namespace simphom {

/// An abstract simplicial complex on vertex set [n], stored as graded face
/// lists: for each dimension d >= -1 a lexicographically sorted,
/// duplicate-free list of faces, closed under taking subsets.
///
/// Two degenerate values are distinguished: the void complex (no faces at
/// all) and the irrelevant complex {∅} (a single face at dimension -1).
class SimplicialComplex {
public:
    /// The void complex.
    SimplicialComplex() = default;

    /// The smallest downward-closed complex containing all generators.
    /// Raw faces may be unsorted; they are sorted first, and duplicate
    /// generators are merged.  Non-positive labels or a duplicate vertex
    /// inside a single face raise invalid_input.  An empty generator list
    /// yields the void complex.
    static SimplicialComplex from_faces(const std::vector<std::vector<int>>& generators);
    static SimplicialComplex from_faces(const std::vector<Face>& generators);

    /// The full simplex on [n]: every subset of {1,...,n} is a face.
    /// Geometric dimension n-1, 2^n faces including the empty one.
    /// Requires n >= 1.
    static SimplicialComplex simplex(int n);

    /// Adopts already-graded face lists.  grades[k] holds the faces of
    /// dimension k-1.  Sortedness, duplicate-freeness and downward closure
    /// are verified; violations raise invalid_input.
    static SimplicialComplex from_graded(std::vector<std::vector<Face>> grades);

    bool is_void() const { return grades_.empty(); }

    /// True for the complex {∅}.
    bool is_irrelevant() const { return grades_.size() == 1; }

    /// Max face dimension; -1 for {∅}.  Throws invalid_input on the void
    /// complex, whose dimension is undefined.
    int dimension() const;

    /// Smallest n with all vertices in [n]; 0 for the void complex.
    int vertex_bound() const { return vertex_bound_; }

    /// Faces of dimension d in lexicographic order; empty for dimensions
    /// not present.
    const std::vector<Face>& faces(int d) const;

    /// All faces maximal under inclusion, ordered by dimension ascending
    /// then lexicographically.
    std::vector<Face> facets() const;

    /// The full simplex on [vertex_bound()].  Throws on the void complex.
    SimplicialComplex ambient() const;

    bool has_face(const Face& f) const;

    /// Total number of faces, the empty face included.
    std::size_t face_count() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    // grades_[k] = faces of dimension k-1; empty vector for the void complex.
    std::vector<std::vector<Face>> grades_;
    int vertex_bound_ = 0;
};

/// True iff every face of `sub` is a face of `super`.  Vacuously true for
/// the void complex.
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& super);

} // namespace simphom
