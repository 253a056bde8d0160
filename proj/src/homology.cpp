#include "simphom/homology.hpp"

#include "simphom/errors.hpp"
#include "simphom/smith.hpp"

namespace simphom {

namespace {

std::vector<Integer> factors_of(const ChainComplex& c, int degree) {
    if (!c.has_differential(degree)) return {};
    return invariant_factors(c.differential(degree));
}

HomologyGroup group_from(std::size_t rank_i, const std::vector<Integer>& f_in,
                         const std::vector<Integer>& f_out) {
    // rank_i = rank of C_i, f_in = factors of d_i, f_out = factors of d_{i+1}.
    HomologyGroup h;
    h.betti = static_cast<long long>(rank_i) - static_cast<long long>(f_in.size()) -
              static_cast<long long>(f_out.size());
    for (const Integer& t : f_out)
        if (t > 1) h.torsion.push_back(t);
    return h;
}

bool is_prime(long long m) {
    if (m < 2) return false;
    for (long long p = 2; p * p <= m; ++p)
        if (m % p == 0) return false;
    return true;
}

} // namespace

std::string HomologyGroup::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    if (betti > 0) s = "Z^" + std::to_string(betti);
    for (const Integer& t : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + t.str();
    }
    return s;
}

HomologyGroup homology(const ChainComplex& c, int degree) {
    if (degree < c.min_degree() || degree > c.max_degree()) return {};
    return group_from(c.rank(degree), factors_of(c, degree), factors_of(c, degree + 1));
}

std::map<int, HomologyGroup> all_homology(const ChainComplex& c) {
    std::map<int, HomologyGroup> out;
    std::vector<Integer> f_in; // factors of d_i, reused as factors_of(i+1) shifts down
    for (int i = c.min_degree(); i <= c.max_degree(); ++i) {
        std::vector<Integer> f_out = factors_of(c, i + 1);
        HomologyGroup h = group_from(c.rank(i), f_in, f_out);
        if (!h.is_zero()) out.emplace(i, std::move(h));
        f_in = std::move(f_out);
    }
    return out;
}

long long homology_mod(const ChainComplex& c, int degree, long long m) {
    if (m < 2) throw invalid_input("modulus must be >= 2");
    if (!is_prime(m)) throw unsupported("composite modulus " + std::to_string(m) +
                                        " is not supported; use a prime");
    if (degree < c.min_degree() || degree > c.max_degree()) return 0;

    // rank over Z/m = number of invariant factors not divisible by m.
    auto rank_mod = [&](int i) {
        long long r = 0;
        for (const Integer& t : factors_of(c, i))
            if (t % m != 0) ++r;
        return r;
    };
    return static_cast<long long>(c.rank(degree)) - rank_mod(degree) - rank_mod(degree + 1);
}

long long euler_characteristic(const SimplicialComplex& k) {
    if (k.is_void()) throw invalid_input("the void complex has no Euler characteristic");
    long long chi = 0;
    for (int d = 0; d <= k.dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(k.faces(d).size());
    return chi;
}

} // namespace simphom
