#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "simphom/chain_complex.hpp"
#include "simphom/distance_matrix.hpp"
#include "simphom/homology.hpp"
#include "simphom/simplicial_complex.hpp"

#include <json.hpp>

namespace simphom {

// Face-list text format: one face per line, vertex labels separated by
// whitespace.  Braces and commas are accepted as separators too, so the
// CLI's "{2,4,5}" facet lines read back.  Blank lines and lines starting
// with '#' are ignored; an empty file is the void complex.

SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);

/// One facet per line in "{2,4,5}" form; nothing for the void complex.
void write_facets(std::ostream& out, const SimplicialComplex& k);

// Distance-matrix CSV.  full: n lines of n comma-separated reals, zero
// diagonal, symmetric.  upper: n-1 lines of decreasing length, line i
// holding d(i, i+1), ..., d(i, n); an empty file is a single point.

DistanceMatrix read_distances(std::istream& in, bool upper);
DistanceMatrix read_distance_file(const std::string& path, bool upper);

/// {"degree": {"rows": r, "cols": c, "entries": [...row-major...]}} over all
/// differentials of the complex.
nlohmann::json differentials_json(const ChainComplex& c);

/// {"reduced": bool, "groups": {"degree": {"betti": b, "torsion": [...]}}}.
nlohmann::json homology_json(const std::map<int, HomologyGroup>& groups, bool reduced);

} // namespace simphom
