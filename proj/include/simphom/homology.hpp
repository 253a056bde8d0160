#pragma once

#include <map>
#include <string>
#include <vector>

#include "simphom/chain_complex.hpp"
#include "simphom/integer_matrix.hpp"
#include "simphom/simplicial_complex.hpp"

namespace simphom {

/// A finitely generated abelian group in canonical form: free rank (Betti
/// number) plus torsion invariant factors t_1 | t_2 | ..., each >= 2.
struct HomologyGroup {
    long long betti = 0;
    std::vector<Integer> torsion;

    bool is_zero() const { return betti == 0 && torsion.empty(); }

    /// "Z^b + Z/t1 + Z/t2"; "0" for the zero group.
    std::string to_string() const;

    bool operator==(const HomologyGroup&) const = default;
};

/// H_degree(C) = ker d_degree / im d_{degree+1}, computed from Smith normal
/// forms of the two adjacent differentials.  Degrees outside the complex
/// give the zero group; missing differentials act as zero maps.
HomologyGroup homology(const ChainComplex& c, int degree);

/// Homology at every degree of C, with zero groups omitted.  Each
/// differential is reduced once.
std::map<int, HomologyGroup> all_homology(const ChainComplex& c);

/// dim over Z/m of H_degree(C ⊗ Z/m) for prime m, by rank-nullity over the
/// field Z/m.  m < 2 raises invalid_input; composite m raises unsupported.
long long homology_mod(const ChainComplex& c, int degree, long long m);

/// Alternating sum of face counts over dimensions >= 0.  Throws on the void
/// complex.
long long euler_characteristic(const SimplicialComplex& k);

} // namespace simphom
