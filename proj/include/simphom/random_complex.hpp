#pragma once

#include <cstdint>
#include <random>

#include "simphom/simplicial_complex.hpp"

namespace simphom {

/// Seedable deterministic random source.  The generator is mt19937_64, whose
/// output sequence is fixed by the C++ standard; the derived draws below
/// avoid std::uniform_*_distribution so that equal seeds replay identically
/// across implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Unbiased uniform draw from [0, bound); bound > 0.  Rejection method.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_unit();

private:
    std::mt19937_64 gen_;
};

/// Random complex with vertices contained in [n]: the number of generators g
/// is uniform in [1, n], and each generator is a uniformly random nonempty
/// subset of [n].  The support may be a proper subset of [n].
SimplicialComplex random_complex(int n, Rng& rng);

/// Same sampling with generators conditioned on cardinality <= r, so every
/// face of the result has cardinality <= r (dimension <= r-1).  r = 0 leaves
/// nothing to draw and yields the void complex.
SimplicialComplex random_complex_bounded(int n, int r, Rng& rng);

/// The Linial-Meshulam complex Y_d(n, m): vertex set [n], complete (d-1)-
/// skeleton, and exactly m dimension-d faces drawn uniformly without
/// replacement from all binomial(n, d+1) candidates.  Requires
/// 1 <= d <= n-1 and 0 <= m <= binomial(n, d+1).
SimplicialComplex linial_meshulam(int n, long long m, int d, Rng& rng);

} // namespace simphom
