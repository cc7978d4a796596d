#ifndef SCROLLSMITH_TESTS_TEST_UTIL_HPP
#define SCROLLSMITH_TESTS_TEST_UTIL_HPP

#include <vector>

#include "scrollsmith/matrix.hpp"
#include "scrollsmith/multipoly.hpp"
#include "scrollsmith/rng.hpp"

namespace scrollsmith::testutil {

inline Scalar random_scalar(SplitMix64& rng, uint64_t mod) {
    if (mod) return Scalar::of_int(static_cast<int64_t>(rng.below(mod)), mod);
    int64_t num = rng.range(-50, 50);
    int64_t den = rng.range(1, 12);
    return Scalar::of_rat(BigRat(num, den));
}

inline ExactMatrix random_matrix(SplitMix64& rng, size_t rows, size_t cols, uint64_t mod) {
    ExactMatrix m(rows, cols, mod);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng, mod);
    return m;
}

inline ExactMatrix random_full_rank(SplitMix64& rng, size_t rows, size_t cols, uint64_t mod) {
    while (true) {
        ExactMatrix m = random_matrix(rng, rows, cols, mod);
        if (m.rank() == std::min(rows, cols)) return m;
    }
}

inline MultiPoly random_poly(SplitMix64& rng, size_t nvars, int max_deg, int nterms,
                             uint64_t mod) {
    MultiPoly f(nvars, mod);
    for (int t = 0; t < nterms; ++t) {
        Exp e(nvars, 0);
        int deg = static_cast<int>(rng.below(max_deg + 1));
        for (int d = 0; d < deg; ++d) e[rng.below(nvars)] += 1;
        f.add_term(e, random_scalar(rng, mod));
    }
    return f;
}

inline MultiPoly random_homogeneous(SplitMix64& rng, size_t nvars, int deg, int nterms,
                                    uint64_t mod) {
    MultiPoly f(nvars, mod);
    for (int t = 0; t < nterms; ++t) {
        Exp e(nvars, 0);
        for (int d = 0; d < deg; ++d) e[rng.below(nvars)] += 1;
        f.add_term(e, random_scalar(rng, mod));
    }
    return f;
}

}  // namespace scrollsmith::testutil

#endif
