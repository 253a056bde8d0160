#include "simphom/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "simphom/errors.hpp"

namespace simphom {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

long long parse_integer(const std::string& token, int line_no) {
    long long value = 0;
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw parse_error("line " + std::to_string(line_no) + ": expected an integer, got '" +
                          token + "'");
    return value;
}

double parse_real(const std::string& token, int line_no) {
    const std::string t = trim(token);
    double value = 0.0;
    const char* first = t.data();
    const char* last = first + t.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || t.empty())
        throw parse_error("line " + std::to_string(line_no) + ": expected a real number, got '" +
                          t + "'");
    return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) cells.push_back(cell);
    return cells;
}

} // namespace

SimplicialComplex read_complex(std::istream& in) {
    std::vector<Face> faces;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (char& c : line)
            if (c == '{' || c == '}' || c == ',') c = ' ';
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;

        std::vector<int> verts;
        std::istringstream tokens(body);
        std::string token;
        while (tokens >> token) {
            const long long v = parse_integer(token, line_no);
            if (v < 1 || v > std::numeric_limits<int>::max())
                throw invalid_input("line " + std::to_string(line_no) + ": vertex label " +
                                    token + " out of range");
            verts.push_back(static_cast<int>(v));
        }
        if (!verts.empty()) faces.push_back(Face::from_vertices(std::move(verts)));
    }
    return SimplicialComplex::from_faces(faces);
}

SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw file_error("cannot open '" + path + "'");
    return read_complex(in);
}

void write_facets(std::ostream& out, const SimplicialComplex& k) {
    for (const Face& f : k.facets()) out << f.to_string() << '\n';
}

DistanceMatrix read_distances(std::istream& in, bool upper) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<double> row;
        for (const std::string& cell : split(line, ','))
            row.push_back(parse_real(cell, line_no));
        rows.push_back(std::move(row));
    }

    if (upper) {
        const int n = static_cast<int>(rows.size()) + 1;
        DistanceMatrix d(n);
        for (int i = 1; i < n; ++i) {
            const auto& row = rows[i - 1];
            if (static_cast<int>(row.size()) != n - i)
                throw parse_error("row " + std::to_string(i) + ": expected " +
                                  std::to_string(n - i) + " entries, got " +
                                  std::to_string(row.size()));
            for (int j = i + 1; j <= n; ++j) d.set(i, j, row[j - i - 1]);
        }
        return d;
    }

    const int n = static_cast<int>(rows.size());
    if (n == 0) throw parse_error("empty distance matrix");
    DistanceMatrix d(n);
    for (int i = 1; i <= n; ++i) {
        const auto& row = rows[i - 1];
        if (static_cast<int>(row.size()) != n)
            throw parse_error("row " + std::to_string(i) + ": expected " + std::to_string(n) +
                              " entries, got " + std::to_string(row.size()));
        if (row[i - 1] != 0.0)
            throw invalid_input("row " + std::to_string(i) + ": diagonal entry must be 0");
        for (int j = i + 1; j <= n; ++j) {
            if (row[j - 1] != rows[j - 1][i - 1])
                throw invalid_input("entries (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") and (" + std::to_string(j) + "," + std::to_string(i) +
                                    ") differ");
            d.set(i, j, row[j - 1]);
        }
    }
    return d;
}

DistanceMatrix read_distance_file(const std::string& path, bool upper) {
    std::ifstream in(path);
    if (!in) throw file_error("cannot open '" + path + "'");
    return read_distances(in, upper);
}

namespace {

nlohmann::json integer_json(const Integer& v) {
    static const Integer lo = std::numeric_limits<std::int64_t>::min();
    static const Integer hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi) return v.str();
    return static_cast<std::int64_t>(v);
}

} // namespace

nlohmann::json differentials_json(const ChainComplex& c) {
    nlohmann::json out = nlohmann::json::object();
    for (int i = c.min_degree(); i <= c.max_degree(); ++i) {
        if (!c.has_differential(i)) continue;
        const IntegerMatrix& m = c.differential(i);
        nlohmann::json entries = nlohmann::json::array();
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t s = 0; s < m.cols(); ++s) entries.push_back(integer_json(m(r, s)));
        out[std::to_string(i)] = {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
    }
    return out;
}

nlohmann::json homology_json(const std::map<int, HomologyGroup>& groups, bool reduced) {
    nlohmann::json gs = nlohmann::json::object();
    for (const auto& [degree, h] : groups) {
        nlohmann::json torsion = nlohmann::json::array();
        for (const Integer& t : h.torsion) torsion.push_back(integer_json(t));
        gs[std::to_string(degree)] = {{"betti", h.betti}, {"torsion", torsion}};
    }
    return {{"reduced", reduced}, {"groups", gs}};
}

} // namespace simphom
