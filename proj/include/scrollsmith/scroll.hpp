#ifndef SCROLLSMITH_SCROLL_HPP
#define SCROLLSMITH_SCROLL_HPP

#include <optional>
#include <string>
#include <vector>

#include "scrollsmith/matrix.hpp"
#include "scrollsmith/multipoly.hpp"

namespace scrollsmith {

/// Discrete type data (u, v, N) of a scroll of degree D = u+v living in
/// projective N-space as the projection of the normal scroll in P^{D+1}.
struct ScrollSpec {
    int u = 1;
    int v = 1;
    int N = 3;

    int D() const { return u + v; }
    int m() const { return v - u; }

    /// Checks u >= 1, v >= u, 3 <= N <= D+1.
    void validate() const;
    /// Additionally D >= N >= 5, required by the singular-scroll pipelines.
    void validate_singular_range() const;
};

/// A point of P^1: a field element or the point at infinity.
struct P1Param {
    bool inf = false;
    Scalar value;  // meaningful when !inf

    static P1Param infinity(uint64_t modulus) { return {true, Scalar::zero(modulus)}; }
    static P1Param finite(Scalar v) { return {false, std::move(v)}; }
    static P1Param of_int(int64_t v, uint64_t modulus) { return finite(Scalar::of_int(v, modulus)); }

    bool operator==(const P1Param& o) const { return inf == o.inf && (inf || value == o.value); }
    bool operator!=(const P1Param& o) const { return !(*this == o); }
    std::string str() const { return inf ? "inf" : value.str(); }
};

/// The standard parametrization point (1, s, ..., s^u, t, st, ..., s^v t)
/// in P^{D+1}; for s = infinity the limiting ruling point, top-degree
/// coefficients in each block.
std::vector<Scalar> scroll_param(const ScrollSpec& spec, const P1Param& s, const Scalar& t);

/// Homogeneous basis of the ruling over s: the directrix-block point a(s)
/// and the big-block curve point theta(s). Every point of the ruling is
/// alpha a(s) + beta theta(s).
struct RulingBasis {
    std::vector<Scalar> a;       // (1, s, ..., s^u, 0...)
    std::vector<Scalar> theta;   // (0..., 1, s, ..., s^v)
    std::vector<Scalar> da;      // d/ds of a (chart-correct at infinity)
    std::vector<Scalar> dtheta;  // d/ds of theta
};
RulingBasis ruling_basis(const ScrollSpec& spec, const P1Param& s, uint64_t modulus);

/// All 2x2 minors of the two-row catalecticant matrix whose columns are
/// (x_i, x_{i+1}) for the directrix block and (x_{u+1+j}, x_{u+2+j}) for
/// the curve block: C(D,2) quadrics in D+2 variables cutting out the
/// rational normal scroll.
std::vector<MultiPoly> minor_ideal(const ScrollSpec& spec, uint64_t modulus);

/// The (k+2) x (D+2) matrix whose rows span the linear span of the k
/// rulings at the given distinct parameters (u = 1 only). For k = 1 the
/// rows span the plane of the ruling and the directrix.
ExactMatrix ruling_matrix(const ScrollSpec& spec, const std::vector<P1Param>& svals,
                          uint64_t modulus);

/// A projection P^{D+1} -> P^N given by a (D+2) x (N+1) matrix of full
/// column rank acting on row vectors, z = x Lambda.
struct ProjectionMatrix {
    ScrollSpec spec;
    ExactMatrix lambda;

    ProjectionMatrix(ScrollSpec s, ExactMatrix l);
};

struct TangentClearance {
    bool ok = true;
    std::string witness;  // failing parameter(s) when !ok
};

/// Rational-witness scan that the projection center misses the tangent
/// variety of S_{1,v}: (a) for every s in P^1(F_p) the 2 x (N+1) matrix
/// with rows theta(s) Lambda and theta'(s) Lambda has rank 2, and (b) no
/// tangent plane at any (s, t) in P^1 x P^1 over F_p meets the center:
/// rank of {a(s), theta(s), a'(s) + t theta'(s)} Lambda stays 3.
TangentClearance tangent_clearance_scan(const ScrollSpec& spec, const ExactMatrix& lambda_p,
                                        uint64_t p);
bool tangent_clearance(const ScrollSpec& spec, const ExactMatrix& lambda_p, uint64_t p);

struct SingularPair {
    P1Param s1, s2;
    std::vector<Scalar> image_point;  // normalized representative
};

/// Scan result over one prime. Every reported pair satisfies
/// rank(P(s1,s2) Lambda) = 3; pairs of rank < 3 are listed as
/// degeneracies, not singular pairs.
struct SingularScrollReport {
    ScrollSpec spec;
    uint64_t prime = 0;
    std::vector<SingularPair> pairs;
    std::vector<std::pair<P1Param, P1Param>> degenerate_pairs;
    std::vector<std::vector<Scalar>> distinct_points;
    bool clearance = false;

    size_t pair_count() const { return pairs.size(); }
    size_t distinct_point_count() const { return distinct_points.size(); }
};

/// Exhaustive scan of all unordered ruling pairs over P^1(F_p) (including
/// infinity; C(p+1, 2) pairs). Requires u = 1 and a full-rank Lambda
/// reduced mod p.
SingularScrollReport singular_pairs(const ScrollSpec& spec, const ExactMatrix& lambda_p,
                                    uint64_t p);

/// Basis of the degree-d forms in N+1 variables vanishing on the projected
/// scroll, by interpolation: substitute z = param(s,t) Lambda into a
/// generic degree-d form and solve for the kernel of the coefficient
/// matrix. Works over any scalar context of Lambda.
std::vector<MultiPoly> image_forms(const ScrollSpec& spec, const ExactMatrix& lambda, int d);

/// The degree-d monomial basis used by image_forms, in the matching order.
std::vector<Exp> image_forms_monomials(int nz, int d);

}  // namespace scrollsmith

#endif
