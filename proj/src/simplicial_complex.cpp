#include "simphom/simplicial_complex.hpp"

#include <algorithm>

#include "simphom/errors.hpp"

namespace simphom {

namespace {

const std::vector<Face> k_no_faces;

// All subsets of the (sorted) vertex list of f, as faces.
void push_subsets(const Face& f, std::vector<Face>& out) {
    const auto& v = f.vertices();
    const std::size_t k = v.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::uint64_t{1} << i)) sub.push_back(v[i]);
        out.push_back(Face::from_sorted(std::move(sub)));
    }
}

} // namespace

SimplicialComplex SimplicialComplex::from_faces(const std::vector<std::vector<int>>& generators) {
    std::vector<Face> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(Face::from_vertices(g));
    return from_faces(gens);
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<Face>& generators) {
    SimplicialComplex k;
    if (generators.empty()) return k;

    std::vector<Face> all;
    int dim = -1;
    for (const auto& g : generators) {
        if (g.cardinality() > 62)
            throw invalid_input("generator face too large to close over subsets");
        push_subsets(g, all);
        dim = std::max(dim, g.dimension());
        k.vertex_bound_ = std::max(k.vertex_bound_, g.max_vertex());
    }
    std::sort(all.begin(), all.end(), dim_lex_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());

    k.grades_.resize(dim + 2);
    for (auto& f : all) k.grades_[f.dimension() + 1].push_back(std::move(f));
    return k;
}

SimplicialComplex SimplicialComplex::simplex(int n) {
    if (n < 1) throw invalid_input("simplex requires n >= 1, got " + std::to_string(n));
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    return from_faces(std::vector<Face>{Face::from_sorted(std::move(all))});
}

SimplicialComplex SimplicialComplex::from_graded(std::vector<std::vector<Face>> grades) {
    while (!grades.empty() && grades.back().empty()) grades.pop_back();

    SimplicialComplex k;
    if (grades.empty()) return k;

    if (grades[0] != std::vector<Face>{Face()})
        throw invalid_input("graded lists must start with the empty face at dimension -1");

    for (std::size_t g = 0; g < grades.size(); ++g) {
        const int d = static_cast<int>(g) - 1;
        const auto& level = grades[g];
        if (g > 0 && level.empty())
            throw invalid_input("graded lists may not skip a dimension");
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (level[i].dimension() != d)
                throw invalid_input("face " + level[i].to_string() + " misfiled at dimension " +
                                    std::to_string(d));
            if (i > 0 && !(level[i - 1] < level[i]))
                throw invalid_input("faces at dimension " + std::to_string(d) +
                                    " not strictly lexicographically sorted");
        }
    }

    k.grades_ = std::move(grades);
    for (const auto& level : k.grades_)
        for (const auto& f : level) k.vertex_bound_ = std::max(k.vertex_bound_, f.max_vertex());

    // Downward closure: every facet of every face must be present.
    for (const auto& level : k.grades_)
        for (const auto& f : level)
            for (int j = 0; j < f.cardinality(); ++j)
                if (!k.has_face(f.without(j)))
                    throw invalid_input("not downward closed: " + f.without(j).to_string() +
                                        " missing below " + f.to_string());
    return k;
}

int SimplicialComplex::dimension() const {
    if (is_void()) throw invalid_input("the void complex has no dimension");
    return static_cast<int>(grades_.size()) - 2;
}

const std::vector<Face>& SimplicialComplex::faces(int d) const {
    const int idx = d + 1;
    if (idx < 0 || idx >= static_cast<int>(grades_.size())) return k_no_faces;
    return grades_[idx];
}

std::vector<Face> SimplicialComplex::facets() const {
    std::vector<Face> out;
    for (std::size_t g = 0; g < grades_.size(); ++g) {
        const auto& level = grades_[g];
        if (g + 1 == grades_.size()) {
            out.insert(out.end(), level.begin(), level.end());
            continue;
        }
        const auto& above = grades_[g + 1];
        for (const auto& f : level) {
            bool maximal = true;
            for (const auto& sup : above) {
                if (sup.contains(f)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) out.push_back(f);
        }
    }
    return out; // grade-by-grade emission is already dimension-then-lex order
}

SimplicialComplex SimplicialComplex::ambient() const {
    if (is_void()) throw invalid_input("the void complex has no ambient simplex");
    return simplex(vertex_bound_);
}

bool SimplicialComplex::has_face(const Face& f) const {
    const auto& level = faces(f.dimension());
    return std::binary_search(level.begin(), level.end(), f);
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t n = 0;
    for (const auto& level : grades_) n += level.size();
    return n;
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& super) {
    if (sub.is_void()) return true;
    for (int d = -1; d <= sub.dimension(); ++d)
        for (const auto& f : sub.faces(d))
            if (!super.has_face(f)) return false;
    return true;
}

} // namespace simphom
