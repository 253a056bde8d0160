// Acceptance gate: checks the contract criteria end to end and prints one
// PASS/FAIL line per criterion.  Exits nonzero if anything fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "simphom/chain_complex.hpp"
#include "simphom/chain_map.hpp"
#include "simphom/distance_matrix.hpp"
#include "simphom/homology.hpp"
#include "simphom/random_complex.hpp"
#include "simphom/simplicial_complex.hpp"
#include "simphom/smith.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace simphom;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, const std::string& name, bool ok, double secs = -1.0) {
    if (!ok) ++failures;
    if (secs >= 0.0)
        std::printf("%s %2d  %s  (%.2f s)\n", ok ? "PASS" : "FAIL", index, name.c_str(), secs);
    else
        std::printf("%s %2d  %s\n", ok ? "PASS" : "FAIL", index, name.c_str());
    std::fflush(stdout);
}

IntegerMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    return m;
}

HomologyGroup group(long long betti, std::vector<int> torsion) {
    HomologyGroup h;
    h.betti = betti;
    for (int t : torsion) h.torsion.emplace_back(t);
    return h;
}

std::uint64_t binomial_u64(int n, int k) {
    Integer b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return static_cast<std::uint64_t>(b);
}

// A complex from one of the three samplers, never void.
SimplicialComplex sample_any(Rng& rng, int max_n, int which) {
    if (which == 0) {
        return random_complex(rng.uniform_int(1, max_n), rng);
    }
    if (which == 1) {
        const int n = rng.uniform_int(1, max_n);
        return random_complex_bounded(n, rng.uniform_int(1, n), rng);
    }
    const int n = rng.uniform_int(2, max_n);
    const int d = rng.uniform_int(1, std::min(3, n - 1));
    const std::uint64_t all = binomial_u64(n, d + 1);
    return linial_meshulam(n, static_cast<long long>(rng.below(all + 1)), d, rng);
}

void criterion_1_rp2() {
    const auto start = Clock::now();
    const SimplicialComplex k = SimplicialComplex::from_faces(testsupport::rp2_triangles);
    const ChainComplex c = simplicial_chain_complex(k);
    const std::map<int, HomologyGroup> h = all_homology(c);
    const double secs = seconds_since(start);
    const bool ok = h.size() == 2 && h.count(0) && h.count(1) && h.at(0) == group(1, {}) &&
                    h.at(1) == group(0, {2}) && homology(c, 2).is_zero() && secs < 1.0;
    report(1, "projective plane: H_0 = Z, H_1 = Z/2, rest zero", ok, secs);
}

void criterion_2_klein() {
    const auto start = Clock::now();
    const SimplicialComplex k = SimplicialComplex::from_faces(testsupport::klein_triangles);
    const std::map<int, HomologyGroup> h = all_homology(simplicial_chain_complex(k));
    const double secs = seconds_since(start);
    const bool ok = h.size() == 2 && h.count(0) && h.count(1) && h.at(0) == group(1, {}) &&
                    h.at(1) == group(1, {2}) && secs < 1.0;
    report(2, "Klein bottle: H_0 = Z, H_1 = Z + Z/2, H_2 = 0", ok, secs);
}

void criterion_3_boundary_fixture() {
    const SimplicialComplex k = SimplicialComplex::from_faces(testsupport::mixed_gens);
    const bool ok =
        boundary_matrix(k, 1) == from_rows({{-1, -1, -1, -1, 0, 0, 0, 0, 0},
                                            {1, 0, 0, 0, -1, -1, -1, 0, 0},
                                            {0, 1, 0, 0, 1, 0, 0, -1, -1},
                                            {0, 0, 1, 0, 0, 1, 0, 1, 0},
                                            {0, 0, 0, 1, 0, 0, 1, 0, 1}}) &&
        boundary_matrix(k, 2) == from_rows({{1, 1, 0, 0, 0},
                                            {-1, 0, 1, 0, 0},
                                            {0, -1, -1, 0, 0},
                                            {0, 0, 0, 0, 0},
                                            {1, 0, 0, 1, 1},
                                            {0, 1, 0, -1, 0},
                                            {0, 0, 0, 0, -1},
                                            {0, 0, 1, 1, 0},
                                            {0, 0, 0, 0, 1}}) &&
        boundary_matrix(k, 3) == from_rows({{-1}, {1}, {-1}, {1}, {0}}) &&
        boundary_matrix(k, 0) == from_rows({{1, 1, 1, 1, 1}});
    report(3, "boundary matrices match the fixture entry-for-entry", ok);
}

void criterion_4_induced_map() {
    const SimplicialComplex big = SimplicialComplex::simplex(3);
    const SimplicialComplex small = SimplicialComplex::from_faces({{1, 2}, {3}});
    const ChainMap f = induced_chain_map(big, small, false);
    const bool ok = f.components.size() == 2 &&
                    f.components.at(0) == IntegerMatrix::identity(3) &&
                    f.components.at(1) == from_rows({{1}, {0}, {0}}) && is_well_defined(f);
    report(4, "induced inclusion map: identity and unit column, well-defined", ok);
}

void criterion_5_simplex_homology() {
    bool all_zero = true;
    double secs8 = 0.0, secs10 = 0.0, total = 0.0;
    for (int n = 1; n <= 10; ++n) {
        const auto start = Clock::now();
        const ChainComplex c = reduced_simplicial_chain_complex(SimplicialComplex::simplex(n));
        all_zero = all_zero && all_homology(c).empty();
        const double secs = seconds_since(start);
        total += secs;
        if (n == 8) secs8 = secs;
        if (n == 10) secs10 = secs;
    }
    const bool ok = all_zero && secs8 < 5.0 && secs10 < 60.0;
    report(5, "simplex(1..10): reduced homology vanishes within budget", ok, total);
}

void criterion_6_boundary_squares_to_zero() {
    const auto start = Clock::now();
    Rng rng(606);
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const SimplicialComplex k = sample_any(rng, 8, trial % 3);
        for (const bool reduced : {false, true}) {
            const ChainComplex c =
                reduced ? reduced_simplicial_chain_complex(k) : simplicial_chain_complex(k);
            ok = ok && c.is_valid();
            for (int i = c.min_degree() + 2; i <= c.max_degree(); ++i)
                ok = ok && (c.differential(i - 1) * c.differential(i)).is_zero();
        }
    }
    report(6, "1000 sampled complexes: d∘d = 0, reduced and not", ok, seconds_since(start));
}

void criterion_7_smith_properties() {
    const auto start = Clock::now();
    Rng rng(707);
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const IntegerMatrix a = testsupport::random_matrix(rng, 8, -5, 5);
        const SmithDecomposition s = smith_normal_form(a);
        ok = ok && s.u * a * s.v == s.d;
        ok = ok && abs(testsupport::bareiss_det(s.u)) == 1;
        ok = ok && abs(testsupport::bareiss_det(s.v)) == 1;
        for (std::size_t r = 0; ok && r < s.d.rows(); ++r)
            for (std::size_t c = 0; c < s.d.cols(); ++c)
                if (r != c && s.d(r, c) != 0) ok = false;
        const std::vector<Integer> f = s.invariant_factors();
        for (std::size_t i = 0; ok && i < f.size(); ++i) {
            ok = f[i] > 0;
            if (i > 0) ok = ok && f[i] % f[i - 1] == 0;
        }
    }
    report(7, "1000 random matrices: U·A·V = D, unimodular U,V, divisibility", ok,
           seconds_since(start));
}

void criterion_8_rank_oracle() {
    const auto start = Clock::now();
    Rng rng(808);
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        const SimplicialComplex k = random_complex(7, rng);
        for (const bool reduced : {false, true}) {
            const ChainComplex c =
                reduced ? reduced_simplicial_chain_complex(k) : simplicial_chain_complex(k);
            for (int i = c.min_degree(); i <= c.max_degree(); ++i)
                ok = ok && homology(c, i).betti == testsupport::betti_oracle(c, i);
        }
    }
    report(8, "200 random complexes: betti agrees with the elimination oracle", ok,
           seconds_since(start));
}

void criterion_9_euler() {
    const auto start = Clock::now();
    bool ok = euler_characteristic(SimplicialComplex::from_faces(testsupport::rp2_triangles)) ==
                  1 &&
              euler_characteristic(SimplicialComplex::from_faces(testsupport::klein_triangles)) ==
                  0;
    Rng rng(909);
    for (int trial = 0; trial < 200 && ok; ++trial) {
        const SimplicialComplex k = sample_any(rng, 7, trial % 3);
        const ChainComplex c = simplicial_chain_complex(k);
        long long chi = 0;
        int sign = 1;
        for (int i = 0; i <= c.max_degree(); ++i, sign = -sign)
            chi += sign * homology(c, i).betti;
        ok = euler_characteristic(k) == chi;
    }
    report(9, "Euler characteristic: fixtures and alternating betti sums", ok,
           seconds_since(start));
}

void criterion_10_linial_meshulam() {
    const auto start = Clock::now();
    bool ok = true;

    Rng rng(1010);
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        const SimplicialComplex y = linial_meshulam(5, 3, 2, rng);
        ok = y.dimension() == 2 && y.faces(0).size() == 5 && y.faces(1).size() == 10 &&
             y.faces(2).size() == 3 && y.faces(3).empty();
    }

    std::map<std::vector<int>, int> tally;
    for (int seed = 1; seed <= 10000 && ok; ++seed) {
        Rng r(seed);
        const SimplicialComplex y = linial_meshulam(4, 1, 1, r);
        ok = y.faces(1).size() == 1;
        if (ok) ++tally[y.faces(1)[0].vertices()];
    }
    if (ok) {
        ok = tally.size() == 6;
        for (const auto& [edge, count] : tally) {
            const double freq = count / 10000.0;
            ok = ok && freq > 1.0 / 6 - 0.02 && freq < 1.0 / 6 + 0.02;
        }
    }
    report(10, "Y_2(5,3) structure x10000; Y_1(4,1) edge frequencies within 1/6±0.02", ok,
           seconds_since(start));
}

void criterion_11_vr_properties() {
    const auto start = Clock::now();
    bool ok = true;

    Rng rng(1111);
    for (int n = 2; n <= 6 && ok; ++n) {
        for (int trial = 0; trial < 5 && ok; ++trial) {
            const DistanceMatrix d = random_distance_matrix(n, rng);
            std::vector<double> grid = {0.0, d.max_entry() + 1.0};
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) grid.push_back(d(i, j));
            std::sort(grid.begin(), grid.end());

            SimplicialComplex prev;
            bool first = true;
            for (const double eps : grid) {
                const SimplicialComplex k = vietoris_rips(d, eps);
                // oracle equality
                ok = ok && k == testsupport::naive_vr(d, eps);
                // monotone in eps
                if (!first) ok = ok && is_subcomplex(prev, k);
                prev = k;
                first = false;
                // flag property over every subset of [n]
                for (std::uint64_t mask = 1; ok && mask < (std::uint64_t{1} << n); ++mask) {
                    std::vector<int> verts;
                    for (int b = 0; b < n; ++b)
                        if (mask >> b & 1) verts.push_back(b + 1);
                    bool pairs = true;
                    for (std::size_t i = 0; i < verts.size() && pairs; ++i)
                        for (std::size_t j = i + 1; j < verts.size() && pairs; ++j)
                            pairs = k.has_face(Face::from_sorted({verts[i], verts[j]}));
                    ok = k.has_face(Face::from_sorted(verts)) == pairs;
                }
            }
        }
    }

    // power-set equivalence at n = 10
    const DistanceMatrix d10 = random_distance_matrix(10, rng);
    for (const double eps : {0.2, 0.4, 0.6, 0.9})
        ok = ok && vietoris_rips(d10, eps) == testsupport::naive_vr(d10, eps);

    report(11, "VR: monotone in eps, flag property, equals power-set filter (n<=10)", ok,
           seconds_since(start));
}

void criterion_12_vr_fixture() {
    const SimplicialComplex k = SimplicialComplex::from_faces(testsupport::vr_sample_facets);
    const std::map<int, HomologyGroup> h = all_homology(reduced_simplicial_chain_complex(k));
    const bool ok = h.size() == 1 && h.count(1) && h.at(1) == group(1, {});
    report(12, "VR sample complex: reduced homology Z concentrated in degree 1", ok);
}

} // namespace

int main() {
    criterion_1_rp2();
    criterion_2_klein();
    criterion_3_boundary_fixture();
    criterion_4_induced_map();
    criterion_5_simplex_homology();
    criterion_6_boundary_squares_to_zero();
    criterion_7_smith_properties();
    criterion_8_rank_oracle();
    criterion_9_euler();
    criterion_10_linial_meshulam();
    criterion_11_vr_properties();
    criterion_12_vr_fixture();

    if (failures == 0)
        std::printf("all 12 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
