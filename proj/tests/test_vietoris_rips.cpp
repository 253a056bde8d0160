#include <doctest.h>

#include <algorithm>
#include <limits>
#include <vector>

#include "simphom/distance_matrix.hpp"
#include "simphom/errors.hpp"
#include "simphom/homology.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace simphom;

TEST_CASE("DistanceMatrix stores a symmetric strict upper triangle") {
    DistanceMatrix d(4);
    CHECK(d.size() == 4);
    CHECK(d.pair_count() == 6);
    CHECK(d(1, 4) == 0.0);
    d.set(2, 4, 1.5);
    CHECK(d(2, 4) == 1.5);
    CHECK(d(4, 2) == 1.5);
    d.set(4, 1, 0.25);
    CHECK(d(1, 4) == 0.25);
    CHECK(d.max_entry() == 1.5);

    CHECK_THROWS_AS(d(2, 2), invalid_input);
    CHECK_THROWS_AS(d(0, 1), invalid_input);
    CHECK_THROWS_AS(d(1, 5), invalid_input);
    CHECK_THROWS_AS(d.set(1, 2, -0.5), invalid_input);
    CHECK_THROWS_AS(d.set(1, 2, std::numeric_limits<double>::infinity()), invalid_input);
    CHECK_THROWS_AS(DistanceMatrix(0), invalid_input);

    const DistanceMatrix single(1);
    CHECK(single.pair_count() == 0);
    CHECK(single.max_entry() == 0.0);
}

TEST_CASE("random_distance_matrix is deterministic per seed") {
    Rng a(77), b(77);
    const DistanceMatrix d1 = random_distance_matrix(5, a);
    const DistanceMatrix d2 = random_distance_matrix(5, b);
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            CHECK(d1(i, j) == d2(i, j));
            CHECK(d1(i, j) >= 0.0);
            CHECK(d1(i, j) < 1.0);
        }
}

TEST_CASE("Vietoris-Rips on a fixed metric") {
    // three points in a line: d(1,2) = d(2,3) = 1, d(1,3) = 3
    DistanceMatrix d(3);
    d.set(1, 2, 1.0);
    d.set(2, 3, 1.0);
    d.set(1, 3, 3.0);

    const SimplicialComplex path = vietoris_rips(d, 1.0); // threshold is inclusive
    CHECK(path.faces(1).size() == 2);
    CHECK(path.faces(2).empty());
    CHECK_FALSE(path.has_face(Face::from_vertices({1, 3})));

    const SimplicialComplex sparse = vietoris_rips(d, 0.5);
    CHECK(sparse.dimension() == 0);
    CHECK(sparse.faces(0).size() == 3);

    const SimplicialComplex full = vietoris_rips(d, 3.0);
    CHECK(full == SimplicialComplex::simplex(3));

    CHECK_THROWS_AS(vietoris_rips(d, -0.1), invalid_input);
}

TEST_CASE("epsilon extremes give the 0-skeleton and the full simplex") {
    Rng rng(31);
    for (int n = 1; n <= 6; ++n) {
        const DistanceMatrix d = random_distance_matrix(n, rng);
        CHECK(vietoris_rips(d, d.max_entry()) == SimplicialComplex::simplex(n));
        const SimplicialComplex zero = vietoris_rips(d, 0.0);
        CHECK(zero.faces(0).size() == static_cast<std::size_t>(n));
        if (n > 1) CHECK(zero.dimension() == 0); // distances are a.s. positive
    }
}

TEST_CASE("Vietoris-Rips equals the power-set filter") {
    Rng rng(37);
    for (int n = 1; n <= 7; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            const DistanceMatrix d = random_distance_matrix(n, rng);
            for (const double eps : {0.1, 0.3, 0.5, 0.8}) {
                CHECK(vietoris_rips(d, eps) == testsupport::naive_vr(d, eps));
            }
        }
    }
}

TEST_CASE("monotonicity in the threshold") {
    Rng rng(39);
    for (int trial = 0; trial < 10; ++trial) {
        const DistanceMatrix d = random_distance_matrix(6, rng);
        std::vector<double> grid;
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) grid.push_back(d(i, j));
        std::sort(grid.begin(), grid.end());
        SimplicialComplex prev = vietoris_rips(d, 0.0);
        for (const double eps : grid) {
            const SimplicialComplex next = vietoris_rips(d, eps);
            CHECK(is_subcomplex(prev, next));
            prev = next;
        }
    }
}

TEST_CASE("Vietoris-Rips complexes are flag complexes") {
    Rng rng(51);
    for (int trial = 0; trial < 10; ++trial) {
        const DistanceMatrix d = random_distance_matrix(8, rng);
        const SimplicialComplex k = vietoris_rips(d, 0.5);
        // a subset is a face iff all its pairs are faces
        for (std::uint64_t mask = 1; mask < (1u << 8); ++mask) {
            std::vector<int> verts;
            for (int b = 0; b < 8; ++b)
                if (mask >> b & 1) verts.push_back(b + 1);
            bool all_pairs = true;
            for (std::size_t i = 0; i < verts.size() && all_pairs; ++i)
                for (std::size_t j = i + 1; j < verts.size() && all_pairs; ++j)
                    if (!k.has_face(Face::from_sorted({verts[i], verts[j]}))) all_pairs = false;
            CHECK(k.has_face(Face::from_sorted(std::move(verts))) == all_pairs);
        }
    }
}

TEST_CASE("the sample facet list has circle homology") {
    const SimplicialComplex k = SimplicialComplex::from_faces(testsupport::vr_sample_facets);
    const std::map<int, HomologyGroup> h = all_homology(reduced_simplicial_chain_complex(k));
    REQUIRE(h.size() == 1);
    CHECK(h.at(1) == HomologyGroup{1, {}});
}
