#include "simphom/chain_map.hpp"

#include <algorithm>

#include "simphom/errors.hpp"

namespace simphom {

IntegerMatrix ChainMap::component_or_zero(int degree) const {
    auto it = components.find(degree);
    if (it != components.end()) return it->second;
    return IntegerMatrix(target.rank(degree), source.rank(degree));
}

ChainMap induced_chain_map(const SimplicialComplex& big, const SimplicialComplex& sub,
                           bool reduced) {
    if (!is_subcomplex(sub, big))
        throw invalid_input("induced chain map requires a subcomplex");

    ChainMap f;
    f.source = reduced ? reduced_simplicial_chain_complex(sub) : simplicial_chain_complex(sub);
    f.target = reduced ? reduced_simplicial_chain_complex(big) : simplicial_chain_complex(big);

    for (int i = f.source.min_degree(); i <= f.source.max_degree(); ++i) {
        const auto& rows = f.target.basis(i);
        const auto& cols = f.source.basis(i);
        IntegerMatrix m(rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            auto it = std::lower_bound(rows.begin(), rows.end(), cols[c]);
            m(static_cast<std::size_t>(it - rows.begin()), c) = 1;
        }
        f.components.emplace(i, std::move(m));
    }
    return f;
}

bool is_well_defined(const ChainMap& f) {
    // Every source degree needs a component of the right shape, and any
    // stray component must still be shape-consistent.
    for (int i = f.source.min_degree(); i <= f.source.max_degree(); ++i)
        if (!f.components.count(i)) return false;
    for (const auto& [degree, m] : f.components)
        if (m.rows() != f.target.rank(degree) || m.cols() != f.source.rank(degree)) return false;

    for (int i = f.source.min_degree() + 1; i <= f.source.max_degree(); ++i) {
        const IntegerMatrix& d_src = f.source.differential(i);
        IntegerMatrix d_tgt = f.target.has_differential(i)
                                  ? f.target.differential(i)
                                  : IntegerMatrix(f.target.rank(i - 1), f.target.rank(i));
        if (d_tgt * f.component_or_zero(i) != f.component_or_zero(i - 1) * d_src) return false;
    }
    return true;
}

} // namespace simphom
