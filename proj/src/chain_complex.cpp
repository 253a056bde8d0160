#include "simphom/chain_complex.hpp"

#include <algorithm>

#include "simphom/errors.hpp"

namespace simphom {

namespace {
const std::vector<Face> k_no_basis;
}

ChainComplex::ChainComplex(int min_degree, std::vector<std::vector<Face>> bases,
                           std::vector<IntegerMatrix> differentials)
    : min_degree_(min_degree), bases_(std::move(bases)), diffs_(std::move(differentials)) {
    if (bases_.empty()) throw invalid_input("a chain complex needs at least one degree");
    if (diffs_.size() + 1 != bases_.size())
        throw invalid_input("differential count must be one less than the degree count");
    for (std::size_t k = 0; k < diffs_.size(); ++k)
        if (diffs_[k].rows() != bases_[k].size() || diffs_[k].cols() != bases_[k + 1].size())
            throw invalid_input("differential at degree " +
                                std::to_string(min_degree_ + 1 + static_cast<int>(k)) +
                                " does not match the bases");
}

const std::vector<Face>& ChainComplex::basis(int degree) const {
    const int k = degree - min_degree_;
    if (k < 0 || k >= static_cast<int>(bases_.size())) return k_no_basis;
    return bases_[k];
}

const IntegerMatrix& ChainComplex::differential(int degree) const {
    if (!has_differential(degree))
        throw invalid_input("no differential at degree " + std::to_string(degree));
    return diffs_[degree - min_degree_ - 1];
}

bool ChainComplex::is_valid() const {
    for (int i = min_degree_ + 1; i <= max_degree(); ++i) {
        const IntegerMatrix& d = differential(i);
        if (d.rows() != rank(i - 1) || d.cols() != rank(i)) return false;
        if (has_differential(i - 1) && !(differential(i - 1) * d).is_zero()) return false;
    }
    return true;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& k, int i) {
    if (k.is_void()) throw invalid_input("the void complex has no boundary matrices");

    const auto& below = k.faces(i - 1);
    const auto& level = k.faces(i);
    IntegerMatrix m(below.size(), level.size());
    for (std::size_t c = 0; c < level.size(); ++c) {
        const Face& sigma = level[c];
        for (int j = 0; j <= sigma.dimension(); ++j) {
            Face tau = sigma.without(j);
            auto it = std::lower_bound(below.begin(), below.end(), tau);
            m(static_cast<std::size_t>(it - below.begin()), c) = (j % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

ChainComplex simplicial_chain_complex(const SimplicialComplex& k) {
    if (k.is_void() || k.is_irrelevant())
        throw invalid_input("the non-reduced chain complex needs at least one vertex");

    const int dim = k.dimension();
    std::vector<std::vector<Face>> bases;
    std::vector<IntegerMatrix> diffs;
    for (int i = 0; i <= dim; ++i) {
        bases.push_back(k.faces(i));
        if (i > 0) diffs.push_back(boundary_matrix(k, i));
    }
    return ChainComplex(0, std::move(bases), std::move(diffs));
}

ChainComplex reduced_simplicial_chain_complex(const SimplicialComplex& k) {
    if (k.is_void()) throw invalid_input("the void complex has no reduced chain complex");

    const int dim = k.dimension();
    std::vector<std::vector<Face>> bases;
    std::vector<IntegerMatrix> diffs;
    for (int i = -1; i <= dim; ++i) {
        bases.push_back(k.faces(i));
        if (i > -1) diffs.push_back(boundary_matrix(k, i));
    }
    return ChainComplex(-1, std::move(bases), std::move(diffs));
}

} // namespace simphom
