#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "scrollsmith/dims.hpp"
#include "scrollsmith/groebner.hpp"
#include "scrollsmith/reference_lambda.hpp"
#include "scrollsmith/rng.hpp"
#include "scrollsmith/scroll.hpp"
#include "test_util.hpp"

using namespace scrollsmith;
using testutil::random_full_rank;
using testutil::random_scalar;

namespace {

// coordinate change induced by the parameter substitution s -> (as+b)/(cs+d):
// block diagonal, acting by degree-1 binomials on the directrix block and
// degree-v binomials on the curve block
ExactMatrix moebius_matrix(const ScrollSpec& spec, uint64_t p, int64_t a, int64_t b, int64_t c,
                           int64_t d) {
    const int D = spec.D();
    ExactMatrix m(D + 2, D + 2, p);
    auto sa = Scalar::of_int(a, p), sb = Scalar::of_int(b, p), sc = Scalar::of_int(c, p),
         sd = Scalar::of_int(d, p);
    MultiPoly lin1 = MultiPoly::constant(1, sd) + MultiPoly::variable(1, 0, p) * sc;
    MultiPoly lin2 = MultiPoly::constant(1, sb) + MultiPoly::variable(1, 0, p) * sa;
    for (int j = 0; j <= 1; ++j) {
        MultiPoly prod = lin1.pow(1 - j) * lin2.pow(j);
        for (const auto& [e, coef] : prod.terms()) m.at(e[0], j) = coef;
    }
    for (int j = 0; j <= spec.v; ++j) {
        MultiPoly prod = lin1.pow(spec.v - j) * lin2.pow(j);
        for (const auto& [e, coef] : prod.terms()) m.at(2 + e[0], 2 + j) = coef;
    }
    return m;
}

P1Param moebius_apply(const P1Param& s, uint64_t p, int64_t a, int64_t b, int64_t c, int64_t d) {
    auto sa = Scalar::of_int(a, p), sb = Scalar::of_int(b, p), sc = Scalar::of_int(c, p),
         sd = Scalar::of_int(d, p);
    if (s.inf) {
        if (sc.is_zero()) return P1Param::infinity(p);
        return P1Param::finite(sa / sc);
    }
    Scalar den = sc * s.value + sd;
    if (den.is_zero()) return P1Param::infinity(p);
    return P1Param::finite((sa * s.value + sb) / den);
}

// determinantal oracle for one pair: rank 3 iff all 4x4 minors vanish and
// some 3x3 minor survives
bool pair_is_singular_minor_oracle(const ExactMatrix& m4x6) {
    REQUIRE(m4x6.rows() == 4);
    const size_t nc = m4x6.cols();
    for (size_t c1 = 0; c1 < nc; ++c1)
        for (size_t c2 = c1 + 1; c2 < nc; ++c2)
            for (size_t c3 = c2 + 1; c3 < nc; ++c3)
                for (size_t c4 = c3 + 1; c4 < nc; ++c4) {
                    ExactMatrix sub(4, 4, m4x6.modulus());
                    size_t cols[4] = {c1, c2, c3, c4};
                    for (int i = 0; i < 4; ++i)
                        for (int j = 0; j < 4; ++j) sub.at(i, j) = m4x6.at(i, cols[j]);
                    if (sub.rank() == 4) return false;
                }
    return m4x6.rank() == 3;
}

}  // namespace

TEST_CASE("scroll parametrization") {
    ScrollSpec spec{1, 8, 5};
    auto p0 = scroll_param(spec, P1Param::of_int(0, 31), Scalar::zero(31));
    CHECK(p0[0].is_one());
    for (size_t i = 1; i < p0.size(); ++i) CHECK(p0[i].is_zero());

    auto p1 = scroll_param(spec, P1Param::of_int(0, 31), Scalar::one(31));
    CHECK(p1[0].is_one());
    CHECK(p1[2].is_one());
    for (size_t i : {1ul, 3ul, 4ul, 5ul, 6ul, 7ul, 8ul, 9ul, 10ul}) CHECK(p1[i].is_zero());

    // minors vanish on 20 random parameter points
    auto minors = minor_ideal(spec, 31);
    CHECK(minors.size() == 36);
    SplitMix64 rng(60);
    for (int trial = 0; trial < 20; ++trial) {
        P1Param s = (trial % 7 == 6) ? P1Param::infinity(31)
                                     : P1Param::of_int(static_cast<int64_t>(rng.below(31)), 31);
        auto pt = scroll_param(spec, s, random_scalar(rng, 31));
        for (const auto& m : minors) CHECK(m.eval(pt).is_zero());
    }

    // (1,2): three quadrics cutting the cubic scroll, vanishing on it
    ScrollSpec small{1, 2, 4};
    auto small_minors = minor_ideal(small, 0);
    CHECK(small_minors.size() == 3);
    for (int trial = 0; trial < 10; ++trial) {
        auto pt = scroll_param(small, P1Param::of_int(trial - 5, 0), Scalar::of_int(trial + 2, 0));
        for (const auto& m : small_minors) CHECK(m.eval(pt).is_zero());
    }
}

TEST_CASE("ruling matrix shapes and ranks") {
    ScrollSpec spec{1, 8, 5};
    auto m2 = ruling_matrix(spec, {P1Param::of_int(0, 0), P1Param::of_int(1, 0)}, 0);
    CHECK(m2.rows() == 4);
    CHECK(m2.cols() == 11);
    CHECK(m2.rank() == 4);  // distinct rulings are skew upstairs

    auto m1 = ruling_matrix(spec, {P1Param::of_int(3, 0)}, 0);
    CHECK(m1.rows() == 3);
    CHECK(m1.rank() == 3);

    // k rulings for k <= v stay independent, including the infinite ruling
    std::vector<P1Param> sv;
    for (int i = 0; i < 5; ++i) sv.push_back(P1Param::of_int(i, 0));
    sv.push_back(P1Param::infinity(0));
    CHECK(ruling_matrix(spec, sv, 0).rank() == 8);

    CHECK_THROWS_AS(ruling_matrix(spec, {P1Param::of_int(1, 0), P1Param::of_int(1, 0)}, 0), Error);
}

TEST_CASE("reference projection: eight pairs, eight points, clearance") {
    ProjectionMatrix ref = reference_projection();
    ExactMatrix lp = ref.lambda.reduced_mod(31);
    auto rep = singular_pairs(ref.spec, lp, 31);
    CHECK(rep.pair_count() == 8);
    CHECK(rep.distinct_point_count() == 8);
    CHECK(rep.degenerate_pairs.empty());
    CHECK(rep.clearance);
}

TEST_CASE("pair scan matches the determinantal minor oracle") {
    SplitMix64 rng(61);
    ScrollSpec spec{1, 8, 5};
    for (uint64_t p : {7ull, 11ull, 13ull, 31ull}) {
        for (int trial = 0; trial < (p == 31 ? 1 : 3); ++trial) {
            ExactMatrix lam = random_full_rank(rng, 11, 6, p);
            auto rep = singular_pairs(spec, lam, p);
            std::set<std::pair<std::string, std::string>> reported;
            for (const auto& pr : rep.pairs) reported.insert({pr.s1.str(), pr.s2.str()});
            size_t oracle_count = 0;
            std::vector<P1Param> pts;
            for (uint64_t s = 0; s < p; ++s) pts.push_back(P1Param::of_int(s, p));
            pts.push_back(P1Param::infinity(p));
            for (size_t i = 0; i < pts.size(); ++i)
                for (size_t j = i + 1; j < pts.size(); ++j) {
                    auto ri = ruling_basis(spec, pts[i], p);
                    auto rj = ruling_basis(spec, pts[j], p);
                    ExactMatrix m(4, 6, p);
                    m.set_row(0, vec_mat(ri.a, lam));
                    m.set_row(1, vec_mat(rj.a, lam));
                    m.set_row(2, vec_mat(ri.theta, lam));
                    m.set_row(3, vec_mat(rj.theta, lam));
                    bool oracle = pair_is_singular_minor_oracle(m);
                    bool scanned = reported.count({pts[i].str(), pts[j].str()}) > 0;
                    CHECK(oracle == scanned);
                    if (oracle) ++oracle_count;
                }
            CHECK(oracle_count == rep.pair_count());
        }
    }
}

TEST_CASE("a coordinate projection that embeds the quintic scroll has no pairs") {
    // (1,4) in P^6 -> P^5 dropping the coordinate x3 = s t; the center is
    // off the secant variety, so no two rulings meet downstairs
    ScrollSpec spec{1, 4, 5};
    ExactMatrix lam(7, 6, 31);
    size_t keep[6] = {0, 1, 2, 4, 5, 6};
    for (size_t j = 0; j < 6; ++j) lam.at(keep[j], j) = Scalar::one(31);
    auto rep = singular_pairs(spec, lam, 31);
    CHECK(rep.pair_count() == 0);
    CHECK(rep.degenerate_pairs.empty());
}

TEST_CASE("a center meeting one ruling is reported as degenerate, not as a pair") {
    // columns orthogonal to one point of the ruling s = 2: that ruling's
    // image collapses to a point, so pairs through it are not line crossings
    ScrollSpec spec{1, 8, 5};
    const uint64_t p = 31;
    auto rb = ruling_basis(spec, P1Param::of_int(2, p), p);
    std::vector<Scalar> w(11, Scalar::zero(p));
    for (size_t i = 0; i < 11; ++i) w[i] = rb.a[i] + Scalar::of_int(7, p) * rb.theta[i];
    ExactMatrix wrow(1, 11, p);
    wrow.set_row(0, w);
    auto ker = wrow.kernel_basis();
    REQUIRE(ker.size() == 10);
    ExactMatrix lam(11, 6, p);
    for (size_t j = 0; j < 6; ++j)
        for (size_t i = 0; i < 11; ++i) lam.at(i, j) = ker[j][i];
    REQUIRE(lam.rank() == 6);
    // the collapsed ruling really maps to a point
    CHECK(span_rank({vec_mat(rb.a, lam), vec_mat(rb.theta, lam)}, p) == 1);
    auto rep = singular_pairs(spec, lam, p);
    for (const auto& pr : rep.pairs) {
        CHECK(pr.s1 != P1Param::of_int(2, p));
        CHECK(pr.s2 != P1Param::of_int(2, p));
        CHECK(!pr.image_point.empty());
    }
    bool saw_degenerate = false;
    for (const auto& [a, b] : rep.degenerate_pairs)
        saw_degenerate |= (a == P1Param::of_int(2, p) || b == P1Param::of_int(2, p));
    CHECK(saw_degenerate);
}

TEST_CASE("pair count invariances") {
    ProjectionMatrix ref = reference_projection();
    ScrollSpec spec = ref.spec;
    const uint64_t p = 31;
    ExactMatrix lp = ref.lambda.reduced_mod(p);
    auto base = singular_pairs(spec, lp, p);
    SplitMix64 rng(62);

    // right multiplication by an invertible 6x6 matrix (ambient change)
    ExactMatrix g = random_full_rank(rng, 6, 6, p);
    auto moved = singular_pairs(spec, lp * g, p);
    CHECK(moved.pair_count() == base.pair_count());
    CHECK(moved.distinct_point_count() == base.distinct_point_count());

    // simultaneous reparametrization of the rulings: pairs map along
    int64_t a = 2, b = 5, c = 1, d = 9;  // ad - bc = 13, invertible mod 31
    ExactMatrix mob = moebius_matrix(spec, p, a, b, c, d);
    CHECK(mob.rank() == 11);
    auto relabeled = singular_pairs(spec, mob * lp, p);
    CHECK(relabeled.pair_count() == base.pair_count());
    std::set<std::pair<std::string, std::string>> expect;
    for (const auto& pr : base.pairs) {
        // param(s') . M ~ param(s) requires the inverse substitution
        P1Param t1 = moebius_apply(pr.s1, p, d, -b, -c, a);
        P1Param t2 = moebius_apply(pr.s2, p, d, -b, -c, a);
        std::string u = t1.str(), w = t2.str();
        if (u > w) std::swap(u, w);
        expect.insert({u, w});
    }
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& pr : relabeled.pairs) {
        std::string u = pr.s1.str(), w = pr.s2.str();
        if (u > w) std::swap(u, w);
        got.insert({u, w});
    }
    CHECK(expect == got);
}

TEST_CASE("image lines of a singular pair genuinely meet") {
    ProjectionMatrix ref = reference_projection();
    const uint64_t p = 31;
    ExactMatrix lp = ref.lambda.reduced_mod(p);
    auto rep = singular_pairs(ref.spec, lp, p);
    for (const auto& pr : rep.pairs) {
        REQUIRE(!pr.image_point.empty());
        // two sample points per ruling plus the common point span a plane
        auto r1 = ruling_basis(ref.spec, pr.s1, p);
        auto r2 = ruling_basis(ref.spec, pr.s2, p);
        std::vector<std::vector<Scalar>> pts;
        pts.push_back(vec_mat(r1.a, lp));
        pts.push_back(vec_mat(r1.theta, lp));
        pts.push_back(vec_mat(r2.a, lp));
        pts.push_back(vec_mat(r2.theta, lp));
        CHECK(span_rank(pts, p) == 3);
        // the reported point lies on both image lines
        for (int side = 0; side < 2; ++side) {
            std::vector<std::vector<Scalar>> line = {pts[2 * side], pts[2 * side + 1],
                                                     pr.image_point};
            CHECK(span_rank(line, p) == 2);
        }
    }
}

TEST_CASE("tangent clearance") {
    ProjectionMatrix ref = reference_projection();
    const uint64_t p = 31;
    CHECK(tangent_clearance(ref.spec, ref.lambda.reduced_mod(p), p));

    // a center through a tangent-plane point is rejected
    ScrollSpec spec{1, 8, 5};
    auto rb = ruling_basis(spec, P1Param::of_int(2, p), p);
    Scalar t = Scalar::of_int(5, p);
    std::vector<Scalar> w(11, Scalar::zero(p));
    for (size_t i = 0; i < 11; ++i) w[i] = rb.a[i] + t * rb.theta[i] + rb.da[i] + t * rb.dtheta[i];
    ExactMatrix wrow(1, 11, p);
    wrow.set_row(0, w);
    auto kernel = wrow.kernel_basis();
    REQUIRE(kernel.size() == 10);
    ExactMatrix lam(11, 6, p);
    for (size_t j = 0; j < 6; ++j)
        for (size_t i = 0; i < 11; ++i) lam.at(i, j) = kernel[j][i];
    REQUIRE(lam.rank() == 6);
    auto res = tangent_clearance_scan(spec, lam, p);
    CHECK(!res.ok);
    CHECK(!res.witness.empty());

    // no projection at all: trivially clear
    ScrollSpec full{1, 4, 6};
    CHECK(tangent_clearance(full, ExactMatrix::identity(7, p), p));

    CHECK_THROWS_AS(tangent_clearance(ScrollSpec{2, 7, 5}, ref.lambda.reduced_mod(p), p),
                    UnsupportedError);
}

TEST_CASE("interpolated forms through the projected scroll") {
    ProjectionMatrix ref = reference_projection();
    ExactMatrix lp = ref.lambda.reduced_mod(31);
    auto cubics = image_forms(ref.spec, lp, 3);
    CHECK(cubics.size() == 6);
    CHECK(image_forms(ref.spec, lp, 1).empty());

    // bookkeeping: 56 - 6 = 50 = 58 - 8 sections downstairs
    int64_t h0_upstairs = dims::h0_hirzebruch(7, 3, 3);
    CHECK(h0_upstairs == 58);
    CHECK(56 - static_cast<int64_t>(cubics.size()) == h0_upstairs - 8);

    // each interpolated cubic vanishes on 50 random points of the scroll
    SplitMix64 rng(63);
    for (int trial = 0; trial < 50; ++trial) {
        P1Param s = (trial % 9 == 8) ? P1Param::infinity(31)
                                     : P1Param::of_int(static_cast<int64_t>(rng.below(31)), 31);
        auto up = scroll_param(ref.spec, s, random_scalar(rng, 31));
        auto z = vec_mat(up, lp);
        for (const auto& f : cubics) CHECK(f.eval(z).is_zero());
    }

    // generic projections: the interpolated slice is its own oracle (the
    // kernel of the substitution matrix), and it agrees with the slice of
    // the eliminated graph ideal; every returned form vanishes on the image
    SplitMix64 rng2(64);
    ScrollSpec big{1, 8, 5};
    for (int trial = 0; trial < 2; ++trial) {
        ExactMatrix lam = random_full_rank(rng2, 11, 6, 31);
        auto forms = image_forms(big, lam, 3);
        for (const auto& f : forms) {
            for (int probe = 0; probe < 20; ++probe) {
                P1Param s = (probe % 9 == 8)
                                ? P1Param::infinity(31)
                                : P1Param::of_int(static_cast<int64_t>(rng2.below(31)), 31);
                auto z = vec_mat(scroll_param(big, s, random_scalar(rng2, 31)), lam);
                CHECK(f.eval(z).is_zero());
            }
        }
        if (trial == 0) {
            // independent route: eliminate the graph ideal of the projection
            std::vector<MultiPoly> gens;
            for (const auto& m : minor_ideal(big, 31)) {
                MultiPoly g(17, 31);
                for (const auto& [e, c] : m.terms()) {
                    Exp e2(17, 0);
                    for (int i = 0; i < 11; ++i) e2[i] = e[i];
                    g.add_term(e2, c);
                }
                gens.push_back(std::move(g));
            }
            for (size_t j = 0; j < 6; ++j) {
                MultiPoly g(17, 31);
                Exp ez(17, 0);
                ez[11 + j] = 1;
                g.add_term(ez, Scalar::one(31));
                for (size_t i = 0; i < 11; ++i) {
                    Exp ex(17, 0);
                    ex[i] = 1;
                    g.add_term(ex, -lam.at(i, j));
                }
                gens.push_back(std::move(g));
            }
            IdealBasis graph;
            graph.gens = std::move(gens);
            graph.order = MonomialOrder::block_elimination(11);
            IdealBasis elim = eliminate(graph, 11);
            CHECK(graded_piece_dim(elim, 3) == forms.size());
        }
    }
}

TEST_CASE("weak monotonicity of the interpolated ideal slices") {
    ProjectionMatrix ref = reference_projection();
    ExactMatrix lp = ref.lambda.reduced_mod(31);
    auto d3 = image_forms(ref.spec, lp, 3);
    auto d4 = image_forms(ref.spec, lp, 4);
    // degree-1 multiples of the cubic slice inject into the quartic slice
    std::vector<std::vector<Scalar>> rows;
    auto mons4 = image_forms_monomials(6, 4);
    std::map<Exp, size_t> index;
    for (size_t i = 0; i < mons4.size(); ++i) index[mons4[i]] = i;
    for (const auto& f : d3)
        for (size_t v = 0; v < 6; ++v) {
            MultiPoly zf = f * MultiPoly::variable(6, v, 31);
            std::vector<Scalar> row(mons4.size(), Scalar::zero(31));
            for (const auto& [e, c] : zf.terms()) row[index.at(e)] = c;
            rows.push_back(std::move(row));
        }
    CHECK(d4.size() >= span_rank(rows, 31));
}

TEST_CASE("parametrization and minors for a type (2,3) scroll") {
    ScrollSpec spec{2, 3, 6};
    auto minors = minor_ideal(spec, 31);
    CHECK(minors.size() == 10);  // 2x5 shape
    SplitMix64 rng(65);
    for (int trial = 0; trial < 15; ++trial) {
        P1Param s = (trial % 5 == 4) ? P1Param::infinity(31)
                                     : P1Param::of_int((int64_t)rng.below(31), 31);
        auto pt = scroll_param(spec, s, testutil::random_scalar(rng, 31));
        for (const auto& m : minors) CHECK(m.eval(pt).is_zero());
    }
}
