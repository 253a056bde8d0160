#pragma once

// Shared fixture complexes.  Homology and matrix expectations for these are
// frozen in the tests that use them.

#include <vector>

namespace testsupport {

// Minimal 6-vertex triangulation of the real projective plane.
inline const std::vector<std::vector<int>> rp2_triangles = {
    {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 5, 4}, {5, 2, 1},
    {5, 6, 2}, {4, 6, 2}, {1, 6, 4}, {3, 6, 5}, {1, 6, 3}};

// 9-vertex triangulation of the Klein bottle.
inline const std::vector<std::vector<int>> klein_triangles = {
    {1, 2, 7}, {7, 8, 2}, {4, 7, 8}, {4, 8, 5}, {1, 4, 5}, {1, 5, 2},
    {2, 8, 3}, {8, 3, 9}, {5, 8, 9}, {5, 9, 6}, {2, 5, 6}, {2, 6, 3},
    {3, 9, 1}, {9, 1, 4}, {6, 9, 4}, {6, 7, 4}, {3, 6, 7}, {3, 7, 1}};

// Mixed-dimension complex generated by a tetrahedron, a triangle and an
// edge; its boundary matrices are frozen entry-for-entry in test_chain.
inline const std::vector<std::vector<int>> mixed_gens = {{1, 2, 3, 4}, {2, 3, 5}, {1, 5}};

// Facet list of a Vietoris-Rips complex on 10 points whose reduced homology
// is Z concentrated in degree 1.
inline const std::vector<std::vector<int>> vr_sample_facets = {
    {5, 8},       {2, 4, 9},    {3, 4, 6},    {4, 6, 9},    {4, 7, 10},
    {6, 8, 9},    {7, 8, 9},    {1, 4, 7, 9}, {2, 3, 4, 10}, {3, 4, 5, 10}};

} // namespace testsupport
