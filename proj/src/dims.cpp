#include "scrollsmith/dims.hpp"

#include "scrollsmith/errors.hpp"

namespace scrollsmith {
namespace dims {

int64_t binomial2(int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

int64_t h0_hirzebruch(int64_t m, int64_t a, int64_t b) {
    if (m < 0) throw Error("h0_hirzebruch: m must be nonnegative");
    if (a <= 0 || b <= 0) throw Error("h0_hirzebruch: divisor not ample (needs a>0, b>0)");
    // (a+1)(am/2 + b + 1); a*m*(a+1) is always even
    int64_t twice = (a + 1) * (a * m + 2 * (b + 1));
    if (twice % 2 != 0) throw Error("h0_hirzebruch: non-integral value");
    return twice / 2;
}

int64_t h0_normal_bundle_general(int64_t N, int64_t m, int64_t a, int64_t b) {
    return (N + 1) * h0_hirzebruch(m, a, b) - 7;
}

int64_t h0_normal_bundle(int64_t N, int64_t D) {
    if (N < 3 || D + 1 < N) throw Error("h0_normal_bundle: requires D+1 >= N >= 3");
    return (N + 1) * (D + 2) - 7;
}

int64_t h1_tangent(int64_t m) {
    if (m < 0) throw Error("h1_tangent: m must be nonnegative");
    return m >= 2 ? m - 1 : 0;
}

int64_t dim_hilbert(int64_t D, int64_t N) {
    if (!(D + 1 >= N && N >= 3)) throw Error("dim_hilbert: requires D+1 >= N >= 3");
    return (N + 1) * (D + 2) - 7;
}

int64_t dim_stratum(int64_t D, int64_t N, int64_t u) {
    if (!(D + 1 >= N && N >= 3)) throw Error("dim_stratum: requires D+1 >= N >= 3");
    if (!(1 <= u && 2 * u <= D)) throw Error("dim_stratum: requires 1 <= u <= D/2");
    int64_t delta = (u == D - u) ? 1 : 0;
    return (D + 2) * N + 2 * u - 4 - delta;
}

CodimReport codim_formulas(int64_t N, int64_t D, int64_t j, int64_t r) {
    if (!(D >= N && N >= 5)) throw Error("codim_formulas: requires D >= N >= 5");
    if (j < 0 || r < 0) throw Error("codim_formulas: j, r must be nonnegative");
    CodimReport rep;
    rep.sigma_j = j * (N - 3 + j);
    rep.sigma_1 = N - 2;
    rep.bound_r = r * (N - 4);
    rep.bound_valid = r * N <= (D + 2) * (D + 2) - 1;
    rep.guaranteed_r = D - N + 1;
    rep.secant_degree = binomial2(D - 2);
    return rep;
}

std::array<BigRat, 3> hilbert_polynomial(int64_t D) {
    if (D < 1) throw Error("hilbert_polynomial: requires D >= 1");
    return {BigRat(D, 2), BigRat(D + 2, 2), BigRat(1)};
}

BigRat eval_hilbert_polynomial(int64_t D, int64_t x) {
    auto c = hilbert_polynomial(D);
    return c[0] * x * x + c[1] * x + c[2];
}

FeasibilityReport higher_disc_feasibility(int64_t n) {
    if (n < 2) throw Error("higher_disc_feasibility: requires n >= 2");
    FeasibilityReport rep;
    rep.n = n;
    rep.dim_lower_bound = -n * n + 14 * n + 11;
    rep.at_least_55 = rep.dim_lower_bound >= 55;
    if (n >= 9)
        rep.status = Feasibility::Unknown;
    else
        rep.status = rep.at_least_55 ? Feasibility::Obstructed : Feasibility::Unobstructed;
    return rep;
}

std::string feasibility_name(Feasibility s) {
    switch (s) {
        case Feasibility::Unobstructed: return "unobstructed";
        case Feasibility::Obstructed: return "obstructed";
        case Feasibility::Unknown: return "unknown";
    }
    return "?";
}

}  // namespace dims
}  // namespace scrollsmith
