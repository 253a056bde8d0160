#pragma once

#include <cstddef>
#include <vector>

#include "simphom/face.hpp"
#include "simphom/integer_matrix.hpp"
#include "simphom/simplicial_complex.hpp"

namespace simphom {

/// A chain complex of free Z-modules with face bases: for each degree i in
/// [min_degree, max_degree] an ordered basis of faces, and for each i in
/// (min_degree, max_degree] the differential d_i : C_i -> C_{i-1} as an
/// integer matrix in those bases.  d_{i-1} ∘ d_i = 0 throughout.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(int min_degree, std::vector<std::vector<Face>> bases,
                 std::vector<IntegerMatrix> differentials);

    int min_degree() const { return min_degree_; }
    int max_degree() const { return min_degree_ + static_cast<int>(bases_.size()) - 1; }

    /// Basis of C_i, lexicographic; empty outside [min_degree, max_degree].
    const std::vector<Face>& basis(int degree) const;

    std::size_t rank(int degree) const { return basis(degree).size(); }

    bool has_differential(int degree) const {
        return degree > min_degree() && degree <= max_degree();
    }

    /// d_degree; throws invalid_input when the degree carries none.
    const IntegerMatrix& differential(int degree) const;

    /// Shapes consistent and d∘d = 0.
    bool is_valid() const;

    bool operator==(const ChainComplex&) const = default;

private:
    int min_degree_ = 0;
    std::vector<std::vector<Face>> bases_;      // bases_[k] = basis of degree min_degree_+k
    std::vector<IntegerMatrix> diffs_;          // diffs_[k] = d_{min_degree_+1+k}
};

/// Matrix of the boundary operator d_i of K in lexicographic bases: the
/// column of sigma = {l_0 < ... < l_i} has entry (-1)^j in the row of sigma
/// with l_j removed.  i = 0 gives the augmentation row (each vertex maps to
/// the empty-face generator); i = -1 and degrees with no faces give
/// empty-shaped matrices.  Throws invalid_input on the void complex.
IntegerMatrix boundary_matrix(const SimplicialComplex& k, int i);

/// Non-reduced chain complex of K: degrees 0..dim K.  Requires at least one
/// vertex; the void and irrelevant complexes are rejected.
ChainComplex simplicial_chain_complex(const SimplicialComplex& k);

/// Reduced chain complex of K: degrees -1..dim K with the empty face as the
/// degree -1 basis and the augmentation as d_0.  Requires a non-void K.
ChainComplex reduced_simplicial_chain_complex(const SimplicialComplex& k);

} // namespace simphom
