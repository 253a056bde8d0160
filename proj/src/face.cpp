#include "simphom/face.hpp"

#include <algorithm>
#include <cassert>

#include "simphom/errors.hpp"

namespace simphom {

Face Face::from_vertices(std::vector<int> raw) {
    std::sort(raw.begin(), raw.end());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 1)
            throw invalid_input("vertex labels must be positive, got " + std::to_string(raw[i]));
        if (i > 0 && raw[i] == raw[i - 1])
            throw invalid_input("duplicate vertex " + std::to_string(raw[i]) + " in face");
    }
    Face f;
    f.verts_ = std::move(raw);
    return f;
}

Face Face::from_sorted(std::vector<int> sorted) {
    assert(std::is_sorted(sorted.begin(), sorted.end()) &&
           std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    assert(sorted.empty() || sorted.front() >= 1);
    Face f;
    f.verts_ = std::move(sorted);
    return f;
}

bool Face::contains(const Face& other) const {
    return std::includes(verts_.begin(), verts_.end(),
                         other.verts_.begin(), other.verts_.end());
}

Face Face::without(int j) const {
    assert(j >= 0 && j < cardinality());
    std::vector<int> v;
    v.reserve(verts_.size() - 1);
    for (int i = 0; i < cardinality(); ++i)
        if (i != j) v.push_back(verts_[i]);
    return from_sorted(std::move(v));
}

std::string Face::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(verts_[i]);
    }
    s += '}';
    return s;
}

bool dim_lex_less(const Face& a, const Face& b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
    return a < b;
}

} // namespace simphom
