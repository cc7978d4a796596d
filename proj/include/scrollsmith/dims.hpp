#ifndef SCROLLSMITH_DIMS_HPP
#define SCROLLSMITH_DIMS_HPP

#include <array>
#include <cstdint>
#include <string>

#include "scrollsmith/scalar.hpp"

namespace scrollsmith {
namespace dims {

/// Divisor class a*g + b*f on the Hirzebruch surface with invariant m.
struct DivisorClass {
    int64_t m = 0;
    int64_t a = 0;
    int64_t b = 0;
    bool ample() const { return a > 0 && b > 0; }
};

/// h^0 of an ample divisor ag + bf: (a+1)(am/2 + b + 1); the higher
/// cohomology vanishes. Throws on non-ample input.
int64_t h0_hirzebruch(int64_t m, int64_t a, int64_t b);

/// h^0 of the normal bundle for the embedding with hyperplane class
/// ag + bf: (N+1)(a+1)(am/2 + b + 1) - 7.
int64_t h0_normal_bundle_general(int64_t N, int64_t m, int64_t a, int64_t b);

/// Smooth degree-D scroll case: (N+1)(D+2) - 7.
int64_t h0_normal_bundle(int64_t N, int64_t D);

/// Euler characteristic of the tangent sheaf of any Hirzebruch surface.
constexpr int64_t chi_tangent() { return 6; }

/// h^1 of the tangent sheaf of the Hirzebruch surface with invariant m.
int64_t h1_tangent(int64_t m);

/// Dimension of the component of degree-D surfaces: (N+1)(D+2) - 7.
/// Requires D+1 >= N >= 3.
int64_t dim_hilbert(int64_t D, int64_t N);

/// Dimension of the type-(u, D-u) stratum: (D+2)N + 2u - 4 - [u == D-u].
/// Requires 1 <= u <= D/2 and D+1 >= N >= 3.
int64_t dim_stratum(int64_t D, int64_t N, int64_t u);

struct CodimReport {
    int64_t sigma_j = 0;        // j(N-3+j)
    int64_t sigma_1 = 0;        // N-2
    int64_t bound_r = 0;        // r(N-4)
    bool bound_valid = false;   // rN <= (D+2)^2 - 1
    int64_t guaranteed_r = 0;   // D-N+1
    int64_t secant_degree = 0;  // C(D-2, 2)
};

/// Codimension bookkeeping for the singular strata. Requires D >= N >= 5,
/// j >= 0, r >= 0.
CodimReport codim_formulas(int64_t N, int64_t D, int64_t j, int64_t r);

/// Coefficients (c2, c1, c0) of the Hilbert polynomial
/// (D/2) x^2 + (D/2 + 1) x + 1 of a degree-D rational surface section.
std::array<BigRat, 3> hilbert_polynomial(int64_t D);

BigRat eval_hilbert_polynomial(int64_t D, int64_t x);

enum class Feasibility { Unobstructed, Obstructed, Unknown };

struct FeasibilityReport {
    int64_t n = 0;
    int64_t dim_lower_bound = 0;  // -n^2 + 14n + 11
    bool at_least_55 = false;
    Feasibility status = Feasibility::Unknown;
};

/// Lower bound -n^2 + 14n + 11 on the dimension of the stratum of
/// degree-(2n+1) scrolls with n(n-2) singular points, and whether the
/// bound obstructs containment in a cubic fourfold (obstructed for
/// 5 <= n <= 8; unknown for n >= 9). Requires n >= 2.
FeasibilityReport higher_disc_feasibility(int64_t n);

std::string feasibility_name(Feasibility s);

int64_t binomial2(int64_t n);  // C(n, 2), 0 for n < 2

}  // namespace dims
}  // namespace scrollsmith

#endif
