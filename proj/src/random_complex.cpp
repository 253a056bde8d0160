#include "simphom/random_complex.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <vector>

#include "simphom/errors.hpp"
#include "simphom/integer_matrix.hpp"

namespace simphom {

namespace {

// Explicit face lists cap out long before this; the bound keeps every count
// in this module inside uint64 arithmetic.
constexpr int k_max_vertices = 62;

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer b = 1;
    for (int i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

void check_vertex_count(int n) {
    if (n < 1) throw invalid_input("vertex count must be positive, got " + std::to_string(n));
    if (n > k_max_vertices)
        throw unsupported("n = " + std::to_string(n) + " exceeds the explicit-enumeration bound");
}

// Uniform m-subset of {0, ..., total-1} (Floyd's sampling).
std::set<std::uint64_t> sample_indices(std::uint64_t total, std::uint64_t m, Rng& rng) {
    std::set<std::uint64_t> chosen;
    for (std::uint64_t j = total - m; j < total; ++j) {
        std::uint64_t t = rng.below(j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return chosen;
}

// Lex-rank unranking of the k-combinations of [n].
std::vector<int> unrank_combination(int n, int k, std::uint64_t rank,
                                    const std::vector<std::vector<std::uint64_t>>& choose) {
    std::vector<int> comb;
    comb.reserve(k);
    int c = 1;
    for (int pos = 0; pos < k; ++pos) {
        while (true) {
            std::uint64_t with_c = choose[n - c][k - pos - 1];
            if (rank < with_c) break;
            rank -= with_c;
            ++c;
        }
        comb.push_back(c);
        ++c;
    }
    return comb;
}

// All k-combinations of [n] in lexicographic order, as faces.
std::vector<Face> all_combinations(int n, int k) {
    std::vector<Face> out;
    if (k == 0) {
        out.push_back(Face());
        return out;
    }
    if (k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    while (true) {
        out.push_back(Face::from_sorted(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

} // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = gen_();
    } while (r >= limit);
    return r % bound;
}

int Rng::uniform_int(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::uniform_unit() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

SimplicialComplex random_complex(int n, Rng& rng) {
    check_vertex_count(n);

    const int generators = rng.uniform_int(1, n);
    std::vector<Face> faces;
    faces.reserve(generators);
    for (int g = 0; g < generators; ++g) {
        std::vector<int> verts;
        do {
            verts.clear();
            for (int v = 1; v <= n; ++v)
                if (rng.below(2) == 1) verts.push_back(v);
        } while (verts.empty());
        faces.push_back(Face::from_sorted(std::move(verts)));
    }
    return SimplicialComplex::from_faces(faces);
}

SimplicialComplex random_complex_bounded(int n, int r, Rng& rng) {
    check_vertex_count(n);
    if (r < 0) throw invalid_input("skeleton bound must be nonnegative, got " + std::to_string(r));
    if (r == 0) return SimplicialComplex(); // no nonempty generator fits

    // Generator cardinality k is drawn with weight binomial(n, k) so the
    // generator itself is uniform over nonempty subsets of cardinality <= r.
    const int rmax = std::min(r, n);
    std::vector<std::uint64_t> cumulative(rmax);
    Integer total = 0;
    for (int k = 1; k <= rmax; ++k) {
        total += binomial(n, k);
        cumulative[k - 1] = static_cast<std::uint64_t>(total);
    }

    const int generators = rng.uniform_int(1, n);
    std::vector<Face> faces;
    faces.reserve(generators);
    for (int g = 0; g < generators; ++g) {
        const std::uint64_t t = rng.below(cumulative.back());
        int k = 1;
        while (t >= cumulative[k - 1]) ++k;
        std::vector<int> verts;
        for (std::uint64_t idx : sample_indices(static_cast<std::uint64_t>(n), k, rng))
            verts.push_back(static_cast<int>(idx) + 1);
        faces.push_back(Face::from_sorted(std::move(verts)));
    }
    return SimplicialComplex::from_faces(faces);
}

SimplicialComplex linial_meshulam(int n, long long m, int d, Rng& rng) {
    check_vertex_count(n);
    if (d < 1 || d > n - 1)
        throw invalid_input("skeleton dimension must satisfy 1 <= d <= n-1, got d = " +
                            std::to_string(d));
    const Integer candidates = binomial(n, d + 1);
    if (m < 0 || candidates < m)
        throw invalid_input("face count m must lie in [0, binomial(n, d+1)], got " +
                            std::to_string(m));

    // Pascal table for unranking; every entry is bounded by binomial(n, d+1).
    std::vector<std::vector<std::uint64_t>> choose(n + 1, std::vector<std::uint64_t>(d + 2, 0));
    for (int i = 0; i <= n; ++i) {
        choose[i][0] = 1;
        for (int j = 1; j <= std::min(i, d + 1); ++j)
            choose[i][j] = choose[i - 1][j] + choose[i - 1][j - 1];
    }

    std::vector<Face> top;
    top.reserve(m);
    for (std::uint64_t idx : sample_indices(static_cast<std::uint64_t>(candidates),
                                            static_cast<std::uint64_t>(m), rng))
        top.push_back(Face::from_sorted(unrank_combination(n, d + 1, idx, choose)));
    std::sort(top.begin(), top.end());

    std::vector<std::vector<Face>> grades;
    for (int k = 0; k <= d; ++k) grades.push_back(all_combinations(n, k));
    grades.push_back(std::move(top));
    return SimplicialComplex::from_graded(std::move(grades));
}

} // namespace simphom
