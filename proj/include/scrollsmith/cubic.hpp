#ifndef SCROLLSMITH_CUBIC_HPP
#define SCROLLSMITH_CUBIC_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "scrollsmith/groebner.hpp"
#include "scrollsmith/jet.hpp"
#include "scrollsmith/scroll.hpp"

namespace scrollsmith {

/// Validates a nonzero homogeneous cubic; returns its variable count.
size_t check_cubic(const MultiPoly& f);

namespace detail {

/// Symmetric trilinear polarization evaluated on ring elements: for each
/// cubic monomial of f with index multiset (i, j, k), sum
/// x_a y_b z_c over all six position assignments and divide by 6.
/// T(w, w, w) = f(w); requires characteristic not 2 or 3.
template <typename R>
R polarize_core(const MultiPoly& f, const std::vector<R>& x, const std::vector<R>& y,
                const std::vector<R>& z, R acc) {
    if (check_cubic(f) != x.size() || y.size() != x.size() || z.size() != x.size())
        throw Error("polarize: vector arity mismatch");
    const uint64_t mod = f.modulus();
    if (mod == 2 || mod == 3)
        throw UnsupportedError("polarize: characteristic 2 and 3 unsupported");
    const Scalar inv6 = Scalar::of_int(6, mod).inverse();
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& [e, c] : f.terms()) {
        std::array<size_t, 3> idx{};
        size_t pos = 0;
        for (size_t i = 0; i < e.size(); ++i)
            for (int rep = 0; rep < e[i]; ++rep) idx[pos++] = i;
        for (const auto& perm : perms) {
            R term = x[idx[perm[0]]] * y[idx[perm[1]]] * z[idx[perm[2]]];
            acc += term * (c * inv6);
        }
    }
    return acc;
}

}  // namespace detail

/// Polarization at exact points.
Scalar polarize(const MultiPoly& f, const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                const std::vector<Scalar>& z);

/// The four equations cutting the locus of lines inside {f = 0} out of the
/// Grassmannian: T(b1,b1,b1), T(b1,b1,b2), T(b1,b2,b2), T(b2,b2,b2) for the
/// two spanning rows of b.
std::array<Scalar, 4> fano_equations(const MultiPoly& f, const ExactMatrix& b);
std::array<MultiPoly, 4> fano_equations_sym(const MultiPoly& f,
                                            const std::array<std::vector<MultiPoly>, 2>& b);
std::array<JetPoly, 4> fano_equations_jet(const MultiPoly& f,
                                          const std::array<std::vector<JetPoly>, 2>& b);

/// Basis of the cubics through the projected scroll (degree-3 interpolation).
std::vector<MultiPoly> find_containing_cubics(const ScrollSpec& spec, const ExactMatrix& lambda_p);

enum class CubicVerdict { Smooth, Singular };

struct CubicClassification {
    CubicVerdict verdict = CubicVerdict::Smooth;
    /// rational singular point when one was found by scanning
    std::optional<std::vector<Scalar>> singular_point;
    /// smooth: variables whose pure powers appear in the leading-term
    /// ideal; singular without a point: the uncovered variables
    std::string certificate;
};

/// Jacobian-criterion classification: a budgeted point scan for a rational
/// singular witness, then the projective-emptiness certificate of the
/// ideal of partials. Requires characteristic != 3 and a nonzero form.
CubicClassification classify_cubic(const MultiPoly& f, bool full_witness_scan = true);

/// Exhaustive search for a rational common zero of the partials in
/// P^{n-1}(F_p); `budget` limits the number of points (0 = no limit).
std::optional<std::vector<Scalar>> scan_singular_point(const MultiPoly& f, uint64_t budget);

struct CubicSearchResult {
    std::vector<MultiPoly> basis;
    std::optional<size_t> smooth_index;
    std::optional<MultiPoly> smooth;
    std::optional<size_t> singular_index;
    std::optional<MultiPoly> singular;
    std::optional<CubicClassification> smooth_cert;
    std::optional<CubicClassification> singular_cert;
    size_t candidates_tried = 0;
};

/// Classifies the basis cubics first, then up to 200 seeded random
/// combinations; records the first smooth and first singular member
/// (lowest candidate index wins).
CubicSearchResult search_containing_cubics(const ScrollSpec& spec, const ExactMatrix& lambda_p,
                                           uint64_t seed);

struct FanoDeformationReport {
    size_t coefficient_count = 0;  // 6(v+3); 66 for the degree-9 pipeline
    size_t equation_count = 0;     // 6v+10 = 4 + (v+3) + (2v+2) + (3v+1)
    size_t rank = 0;
    int sym_gl2 = 4;       // GL(2) action on the spanning rows
    int sym_aut_p1 = 3;    // automorphisms of the parameter line
    int sym_rescale = 4;   // rescaling the four equations
    int64_t dimension = 0;  // coefficient_count - rank - 11
};

/// First-order deformation of the line family of the projected scroll
/// inside the line family of {f = 0}: perturb the 2 x 6 parametrizing
/// matrix by arbitrary linear and degree-v forms, push through the four
/// polarized equations, and take the rank of the linear system in the
/// perturbation coefficients. f must contain the scroll.
FanoDeformationReport fano_deformation_dim(const ScrollSpec& spec, const ExactMatrix& lambda_p,
                                           const MultiPoly& f);

/// Self-intersection of a degree-D scroll with r double points inside a
/// cubic fourfold: 2r + 3D - 2 (double point formula, scroll Chern
/// numbers c1^2 = 8, c2 = 4, restricted ambient classes 6D and 3(D+2)).
int64_t selfint_from_double_points(int64_t D, int64_t r_dp);

/// Discriminant of the pair (h^2, S): 3 <S,S> - D^2.
int64_t discriminant(int64_t D, int64_t selfint);

struct UnirationalDegree {
    BigRat value;
    bool positive = false;
};

/// rho = D(D-2)/2 + (2 - 2 g_H) - <S,S>/2, exact.
UnirationalDegree unirational_degree(int64_t D, int64_t g_H, int64_t selfint);

struct DiscriminantRecord {
    int64_t n = 0;
    int64_t degree = 0;           // 2n+1
    int64_t selfint = 0;          // 2n^2+2n+1
    int64_t expected_sings = 0;   // n(n-2)
    int64_t disc = 0;             // 3 selfint - degree^2 == 2(n^2+n+1)
    int64_t section_genus = 0;    // 0
    BigRat rho;
    bool rho_odd = false;
    bool four_divides_disc = false;
};

/// Row n >= 2 of the discriminant family table; both discriminant
/// identities are recomputed and compared.
DiscriminantRecord discriminant_table(int64_t n);

}  // namespace scrollsmith

#endif
