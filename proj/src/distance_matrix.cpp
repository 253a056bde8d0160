#include "simphom/distance_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simphom/errors.hpp"

namespace simphom {

DistanceMatrix::DistanceMatrix(int n) : n_(n) {
    if (n < 1) throw invalid_input("point count must be positive, got " + std::to_string(n));
    entries_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0);
}

std::size_t DistanceMatrix::index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_ || i == j)
        throw invalid_input("pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range for " + std::to_string(n_) + " points");
    // Row i of the strict upper triangle starts after (i-1) rows of
    // lengths n-1, n-2, ..., n-i+1.
    const std::size_t row_start =
        static_cast<std::size_t>(i - 1) * (2 * n_ - i) / 2;
    return row_start + static_cast<std::size_t>(j - i - 1);
}

double DistanceMatrix::operator()(int i, int j) const {
    return entries_[index(i, j)];
}

void DistanceMatrix::set(int i, int j, double value) {
    if (!(value >= 0.0) || !std::isfinite(value))
        throw invalid_input("distance must be finite and nonnegative");
    entries_[index(i, j)] = value;
}

double DistanceMatrix::max_entry() const {
    double m = 0.0;
    for (double e : entries_) m = std::max(m, e);
    return m;
}

DistanceMatrix random_distance_matrix(int n, Rng& rng) {
    DistanceMatrix d(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) d.set(i, j, rng.uniform_unit());
    return d;
}

SimplicialComplex vietoris_rips(const DistanceMatrix& d, double epsilon) {
    if (!(epsilon >= 0.0))
        throw invalid_input("threshold must be nonnegative");

    const int n = d.size();
    std::vector<std::vector<bool>> close(n + 1, std::vector<bool>(n + 1, false));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            close[i][j] = close[j][i] = d(i, j) <= epsilon;

    // Expand cliques one dimension at a time.  Appending only vertices above
    // the current maximum keeps every grade in lexicographic order.
    std::vector<std::vector<Face>> grades;
    grades.push_back({Face()});
    std::vector<Face> level;
    for (int v = 1; v <= n; ++v) level.push_back(Face::from_sorted({v}));
    while (!level.empty()) {
        grades.push_back(level);
        std::vector<Face> next;
        for (const Face& f : level) {
            const std::vector<int>& verts = f.vertices();
            for (int v = f.max_vertex() + 1; v <= n; ++v) {
                bool ok = true;
                for (int u : verts)
                    if (!close[u][v]) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                std::vector<int> extended = verts;
                extended.push_back(v);
                next.push_back(Face::from_sorted(std::move(extended)));
            }
        }
        level = std::move(next);
    }
    return SimplicialComplex::from_graded(std::move(grades));
}

} // namespace simphom
