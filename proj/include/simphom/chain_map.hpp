#pragma once

#include <map>

#include "simphom/chain_complex.hpp"
#include "simphom/simplicial_complex.hpp"

namespace simphom {

/// A degree-wise linear map between chain complexes.  components[i] maps
/// source degree i to target degree i (target basis rows, source basis
/// columns).  Well-definedness (commuting squares) is a separate check so
/// that deliberately broken maps can be represented in tests.
struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    std::map<int, IntegerMatrix> components;

    /// components[degree], or a zero matrix of the right shape when absent.
    IntegerMatrix component_or_zero(int degree) const;
};

/// The chain map induced by the inclusion sub ⊆ big on the (reduced or
/// non-reduced) chain complexes: each component is the 0/1 matrix sending a
/// basis face of sub to the same face in big's basis.  Throws invalid_input
/// when sub is not a subcomplex of big.
ChainMap induced_chain_map(const SimplicialComplex& big, const SimplicialComplex& sub,
                           bool reduced);

/// True iff every component has the shape demanded by the source and target
/// bases and every square d_i^target ∘ f_i = f_{i-1} ∘ d_i^source commutes.
bool is_well_defined(const ChainMap& f);

} // namespace simphom
