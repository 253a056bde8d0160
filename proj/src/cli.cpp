#include "simphom/cli.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simphom/chain_complex.hpp"
#include "simphom/chain_map.hpp"
#include "simphom/distance_matrix.hpp"
#include "simphom/errors.hpp"
#include "simphom/homology.hpp"
#include "simphom/io.hpp"
#include "simphom/random_complex.hpp"
#include "simphom/simplicial_complex.hpp"

namespace simphom::cli {

namespace {

ChainComplex chain_of(const SimplicialComplex& k, bool reduced) {
    return reduced ? reduced_simplicial_chain_complex(k) : simplicial_chain_complex(k);
}

void print_matrix(std::ostream& out, const std::string& label, const IntegerMatrix& m) {
    out << label << ": " << m.rows() << " x " << m.cols() << '\n' << m.to_text();
}

nlohmann::json matrix_json(const IntegerMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Integer& e = m(r, c);
            entries.push_back(static_cast<std::int64_t>(e));
        }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

void print_homology(std::ostream& out, const std::map<int, HomologyGroup>& groups) {
    if (groups.empty()) {
        out << "trivial\n";
        return;
    }
    for (const auto& [degree, h] : groups)
        out << "H_" << degree << " = " << h.to_string() << '\n';
}

std::uint64_t resolve_seed(const std::uint64_t* given) {
    if (given) return *given;
    return static_cast<std::uint64_t>(
        std::chrono::system_clock::now().time_since_epoch().count());
}

void print_sampled(std::ostream& out, std::uint64_t seed, const SimplicialComplex& k) {
    out << "# seed " << seed << '\n';
    write_facets(out, k);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simplicial complexes, integral chain complexes and homology."};
    app.name("simphom");
    app.require_subcommand(1);
    app.footer("Exit codes:\n"
               "  0  success\n"
               "  1  internal error\n"
               "  2  usage error\n"
               "  3  file not found\n"
               "  4  parse error\n"
               "  5  invalid input\n"
               "  6  unsupported operation");

    std::string file, small_file, format = "full";
    int dim = 0, degree = 0, n = 0, d = 0, r = 0;
    long long m_faces = 0, mod = 0;
    std::uint64_t seed = 0;
    double eps = 0.0;
    bool reduced = false, json = false;

    CLI::App* c_facets = app.add_subcommand("facets", "Print the maximal faces of a complex");
    c_facets->add_option("file", file, "face-list file")->required();

    CLI::App* c_faces = app.add_subcommand("faces", "Print all faces of one dimension");
    c_faces->add_option("file", file, "face-list file")->required();
    c_faces->add_option("--dim", dim, "face dimension (>= -1)")->required();

    CLI::App* c_chain = app.add_subcommand("chain", "Print the boundary matrices of a complex");
    c_chain->add_option("file", file, "face-list file")->required();
    c_chain->add_flag("--reduced", reduced, "use the reduced chain complex");
    c_chain->add_flag("--json", json, "emit JSON instead of text grids");

    CLI::App* c_hom = app.add_subcommand("homology", "Compute homology groups");
    c_hom->add_option("file", file, "face-list file")->required();
    c_hom->add_flag("--reduced", reduced, "reduced homology");
    CLI::Option* o_mod = c_hom->add_option("--mod", mod, "dimensions over Z/m (prime m)");
    CLI::Option* o_degree = c_hom->add_option("--degree", degree, "restrict to one degree");
    c_hom->add_flag("--json", json, "emit JSON");

    CLI::App* c_ind = app.add_subcommand("induced-map", "Chain map induced by an inclusion");
    c_ind->add_option("bigfile", file, "face-list file of the ambient complex")->required();
    c_ind->add_option("smallfile", small_file, "face-list file of the subcomplex")->required();
    c_ind->add_flag("--reduced", reduced, "use reduced chain complexes");
    c_ind->add_flag("--json", json, "emit JSON");

    CLI::App* c_rand = app.add_subcommand("random", "Sample a random complex on [n]");
    c_rand->add_option("--n", n, "vertex bound")->required();
    CLI::Option* o_r = c_rand->add_option("--r", r, "generator cardinality bound");
    CLI::Option* o_seed1 = c_rand->add_option("--seed", seed, "RNG seed");

    CLI::App* c_lm = app.add_subcommand("lm", "Sample a Linial-Meshulam complex Y_d(n, m)");
    c_lm->add_option("--n", n, "vertex count")->required();
    c_lm->add_option("--m", m_faces, "number of d-faces")->required();
    c_lm->add_option("--d", d, "top dimension")->required();
    CLI::Option* o_seed2 = c_lm->add_option("--seed", seed, "RNG seed");

    CLI::App* c_vr = app.add_subcommand("vr", "Vietoris-Rips complex of a distance matrix");
    c_vr->add_option("distfile", file, "distance CSV")->required();
    c_vr->add_option("--eps", eps, "distance threshold")->required();
    c_vr->add_option("--format", format, "CSV layout")
        ->required()
        ->check(CLI::IsMember({"full", "upper"}));

    CLI::App* c_euler = app.add_subcommand("euler", "Euler characteristic of a complex");
    c_euler->add_option("file", file, "face-list file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (c_facets->parsed()) {
            write_facets(out, read_complex_file(file));
        } else if (c_faces->parsed()) {
            const SimplicialComplex k = read_complex_file(file);
            for (const Face& f : k.faces(dim)) out << f.to_string() << '\n';
        } else if (c_chain->parsed()) {
            const ChainComplex c = chain_of(read_complex_file(file), reduced);
            if (json) {
                out << differentials_json(c).dump(2) << '\n';
            } else {
                for (int i = c.min_degree(); i <= c.max_degree(); ++i)
                    if (c.has_differential(i))
                        print_matrix(out, "d_" + std::to_string(i), c.differential(i));
            }
        } else if (c_hom->parsed()) {
            const ChainComplex c = chain_of(read_complex_file(file), reduced);
            if (*o_mod) {
                std::map<int, long long> dims;
                for (int i = c.min_degree(); i <= c.max_degree(); ++i) {
                    if (*o_degree && i != degree) continue;
                    const long long k = homology_mod(c, i, mod);
                    if (k > 0) dims[i] = k;
                }
                if (json) {
                    nlohmann::json groups = nlohmann::json::object();
                    for (const auto& [i, k] : dims) groups[std::to_string(i)] = {{"dim", k}};
                    out << nlohmann::json{{"reduced", reduced}, {"mod", mod}, {"groups", groups}}
                               .dump(2)
                        << '\n';
                } else if (dims.empty()) {
                    out << "trivial\n";
                } else {
                    for (const auto& [i, k] : dims)
                        out << "H_" << i << " = (Z/" << mod << ")^" << k << '\n';
                }
            } else {
                std::map<int, HomologyGroup> groups = all_homology(c);
                if (*o_degree) std::erase_if(groups, [&](const auto& g) { return g.first != degree; });
                if (json)
                    out << homology_json(groups, reduced).dump(2) << '\n';
                else
                    print_homology(out, groups);
            }
        } else if (c_ind->parsed()) {
            const SimplicialComplex big = read_complex_file(file);
            const SimplicialComplex small = read_complex_file(small_file);
            const ChainMap f = induced_chain_map(big, small, reduced);
            const bool good = is_well_defined(f);
            if (json) {
                nlohmann::json comps = nlohmann::json::object();
                for (const auto& [i, m] : f.components) comps[std::to_string(i)] = matrix_json(m);
                out << nlohmann::json{{"well_defined", good}, {"components", comps}}.dump(2)
                    << '\n';
            } else {
                for (const auto& [i, m] : f.components)
                    print_matrix(out, "f_" + std::to_string(i), m);
                out << "well-defined: " << (good ? "true" : "false") << '\n';
            }
        } else if (c_rand->parsed()) {
            const std::uint64_t s = resolve_seed(*o_seed1 ? &seed : nullptr);
            Rng rng(s);
            print_sampled(out, s,
                          *o_r ? random_complex_bounded(n, r, rng) : random_complex(n, rng));
        } else if (c_lm->parsed()) {
            const std::uint64_t s = resolve_seed(*o_seed2 ? &seed : nullptr);
            Rng rng(s);
            print_sampled(out, s, linial_meshulam(n, m_faces, d, rng));
        } else if (c_vr->parsed()) {
            const DistanceMatrix dm = read_distance_file(file, format == "upper");
            write_facets(out, vietoris_rips(dm, eps));
        } else if (c_euler->parsed()) {
            out << euler_characteristic(read_complex_file(file)) << '\n';
        }
        return ok;
    } catch (const file_error& e) {
        err << "error: " << e.what() << '\n';
        return file_not_found;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return bad_parse;
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const unsupported& e) {
        err << "error: " << e.what() << '\n';
        return not_supported;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return internal_error;
    }
}

} // namespace simphom::cli
