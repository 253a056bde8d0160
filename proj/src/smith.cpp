#include "simphom/smith.hpp"

#include <utility>

namespace simphom {

namespace {

// Smallest nonzero |entry| in d[s.., s..], first hit in row-major order.
// Returns false when the submatrix is zero.  Short-circuits on 1, which no
// other nonzero value can beat.
bool find_pivot(const IntegerMatrix& d, std::size_t s, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best;
    for (std::size_t r = s; r < d.rows(); ++r) {
        for (std::size_t c = s; c < d.cols(); ++c) {
            const Integer& x = d(r, c);
            if (x == 0) continue;
            Integer a = abs(x);
            if (a == 1) {
                pr = r;
                pc = c;
                return true;
            }
            if (!found || a < best) {
                best = std::move(a);
                pr = r;
                pc = c;
                found = true;
            }
        }
    }
    return found;
}

// Diagonalizes d in place by unimodular row and column operations, mirroring
// them into u and v when given.  On return d is in Smith form.
void reduce(IntegerMatrix& d, IntegerMatrix* u, IntegerMatrix* v) {
    const std::size_t m = d.rows(), n = d.cols();
    const std::size_t steps = std::min(m, n);

    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t pr, pc;
        if (!find_pivot(d, s, pr, pc)) break; // remaining submatrix is zero

        while (true) {
            d.swap_rows(s, pr);
            if (u) u->swap_rows(s, pr);
            d.swap_cols(s, pc);
            if (v) v->swap_cols(s, pc);

            // Clear column s below the pivot, then row s right of it, with
            // truncated quotients.  Nonzero remainders become new, strictly
            // smaller pivot candidates.
            bool clean = true;
            for (std::size_t r = s + 1; r < m; ++r) {
                if (d(r, s) == 0) continue;
                Integer q = d(r, s) / d(s, s);
                if (q != 0) {
                    d.add_row_multiple(r, s, -q);
                    if (u) u->add_row_multiple(r, s, -q);
                }
                if (d(r, s) != 0) clean = false;
            }
            for (std::size_t c = s + 1; c < n; ++c) {
                if (d(s, c) == 0) continue;
                Integer q = d(s, c) / d(s, s);
                if (q != 0) {
                    d.add_col_multiple(c, s, -q);
                    if (v) v->add_col_multiple(c, s, -q);
                }
                if (d(s, c) != 0) clean = false;
            }
            if (!clean) {
                find_pivot(d, s, pr, pc);
                continue;
            }

            // Divisibility: the pivot must divide everything that follows.
            // Folding an offending row into row s re-opens the reduction
            // with a strictly smaller eventual pivot.
            if (d(s, s) != 1) {
                bool fixed = true;
                for (std::size_t r = s + 1; r < m && fixed; ++r)
                    for (std::size_t c = s + 1; c < n; ++c)
                        if (d(r, c) % d(s, s) != 0) {
                            d.add_row_multiple(s, r, 1);
                            if (u) u->add_row_multiple(s, r, 1);
                            fixed = false;
                            break;
                        }
                if (!fixed) {
                    find_pivot(d, s, pr, pc);
                    continue;
                }
            }
            break;
        }

        if (d(s, s) < 0) {
            d.negate_row(s);
            if (u) u->negate_row(s);
        }
    }
}

} // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const {
    std::vector<Integer> out;
    out.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
    SmithDecomposition s;
    s.d = a;
    s.u = IntegerMatrix::identity(a.rows());
    s.v = IntegerMatrix::identity(a.cols());
    reduce(s.d, &s.u, &s.v);
    const std::size_t nmin = std::min(a.rows(), a.cols());
    while (s.rank < nmin && s.d(s.rank, s.rank) != 0) ++s.rank;
    return s;
}

std::vector<Integer> invariant_factors(IntegerMatrix a) {
    reduce(a, nullptr, nullptr);
    std::vector<Integer> out;
    const std::size_t nmin = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < nmin && a(i, i) != 0; ++i) out.push_back(a(i, i));
    return out;
}

} // namespace simphom
