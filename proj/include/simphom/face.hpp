#pragma once

#include <compare>
#include <string>
#include <vector>

namespace simphom {

/// A face of an abstract simplicial complex: a strictly increasing sequence
/// of positive integer vertex labels.  The empty sequence is the empty face,
/// which has dimension -1.
class Face {
public:
    /// The empty face.
    Face() = default;

    /// Builds a face from raw input: labels are sorted, non-positive labels
    /// and duplicates are rejected with invalid_input.
    static Face from_vertices(std::vector<int> raw);

    /// Builds a face from labels already known to be strictly increasing
    /// and positive.  No validation beyond a debug assert.
    static Face from_sorted(std::vector<int> sorted);

    int cardinality() const { return static_cast<int>(verts_.size()); }
    int dimension() const { return static_cast<int>(verts_.size()) - 1; }
    bool is_empty() const { return verts_.empty(); }

    const std::vector<int>& vertices() const { return verts_; }

    /// Largest vertex label, 0 for the empty face.
    int max_vertex() const { return verts_.empty() ? 0 : verts_.back(); }

    /// True iff every vertex of `other` is a vertex of this face.
    bool contains(const Face& other) const;

    /// The face with the j-th smallest vertex removed (0-based).
    Face without(int j) const;

    /// Display form: "{1,2,3}", "{}" for the empty face.
    std::string to_string() const;

    /// Lexicographic comparison on the vertex sequences.
    auto operator<=>(const Face&) const = default;

private:
    std::vector<int> verts_;
};

/// Orders faces by dimension ascending, then lexicographically.  This is the
/// display order for facet lists.
bool dim_lex_less(const Face& a, const Face& b);

} // namespace simphom
