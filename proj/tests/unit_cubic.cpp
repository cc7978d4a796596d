#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scrollsmith/cubic.hpp"
#include "scrollsmith/reference_lambda.hpp"
#include "scrollsmith/rng.hpp"
#include "test_util.hpp"

using namespace scrollsmith;
using testutil::random_full_rank;
using testutil::random_scalar;

namespace {

std::vector<Scalar> random_point(SplitMix64& rng, size_t n, uint64_t p) {
    std::vector<Scalar> v;
    for (size_t i = 0; i < n; ++i) v.push_back(Scalar::of_int((int64_t)rng.below(p), p));
    return v;
}

MultiPoly fermat_cubic(uint64_t p) {
    MultiPoly f(6, p);
    for (size_t i = 0; i < 6; ++i) {
        Exp e(6, 0);
        e[i] = 3;
        f.add_term(e, Scalar::one(p));
    }
    return f;
}

struct ReferenceSetup {
    ProjectionMatrix ref = reference_projection();
    ExactMatrix lp = ref.lambda.reduced_mod(31);
    CubicSearchResult search = search_containing_cubics(ref.spec, lp, 0);
};

const ReferenceSetup& reference_setup() {
    static ReferenceSetup s;
    return s;
}

}  // namespace

TEST_CASE("polarization: monomial case, diagonal identity, symmetry") {
    const uint64_t p = 31;
    SplitMix64 rng(70);

    // f = z0^3: T(x,y,z) = x0 y0 z0
    MultiPoly f(6, p);
    Exp e(6, 0);
    e[0] = 3;
    f.add_term(e, Scalar::one(p));
    for (int trial = 0; trial < 5; ++trial) {
        auto x = random_point(rng, 6, p), y = random_point(rng, 6, p), z = random_point(rng, 6, p);
        CHECK(polarize(f, x, y, z) == x[0] * y[0] * z[0]);
    }

    MultiPoly g = testutil::random_homogeneous(rng, 6, 3, 12, p);
    if (g.is_zero()) g = fermat_cubic(p);
    for (int trial = 0; trial < 20; ++trial) {
        auto w = random_point(rng, 6, p);
        CHECK(polarize(g, w, w, w) == g.eval(w));
    }
    for (int trial = 0; trial < 10; ++trial) {
        auto x = random_point(rng, 6, p), y = random_point(rng, 6, p), z = random_point(rng, 6, p);
        Scalar t = polarize(g, x, y, z);
        CHECK(t == polarize(g, y, x, z));
        CHECK(t == polarize(g, z, y, x));
        CHECK(t == polarize(g, y, z, x));
    }

    // multilinearity in the first slot
    for (int trial = 0; trial < 5; ++trial) {
        auto x1 = random_point(rng, 6, p), x2 = random_point(rng, 6, p);
        auto y = random_point(rng, 6, p), z = random_point(rng, 6, p);
        Scalar a = random_scalar(rng, p), b = random_scalar(rng, p);
        std::vector<Scalar> combo(6, Scalar::zero(p));
        for (size_t i = 0; i < 6; ++i) combo[i] = a * x1[i] + b * x2[i];
        CHECK(polarize(g, combo, y, z) ==
              a * polarize(g, x1, y, z) + b * polarize(g, x2, y, z));
    }

    CHECK_THROWS_AS(polarize(fermat_cubic(2), random_point(rng, 6, 2), random_point(rng, 6, 2),
                             random_point(rng, 6, 2)),
                    UnsupportedError);
}

TEST_CASE("line-on-cubic equations: numeric") {
    const auto& setup = reference_setup();
    const uint64_t p = 31;
    REQUIRE(!setup.search.basis.empty());
    const MultiPoly& f = setup.search.basis[0];

    // a ruling of the scroll lies on every containing cubic
    auto rb = ruling_basis(setup.ref.spec, P1Param::of_int(4, p), p);
    ExactMatrix b(2, 6, p);
    b.set_row(0, vec_mat(rb.a, setup.lp));
    b.set_row(1, vec_mat(rb.theta, setup.lp));
    for (const Scalar& q : fano_equations(f, b)) CHECK(q.is_zero());

    // a line through a point off the cubic violates the first equation
    SplitMix64 rng(71);
    ExactMatrix off(2, 6, p);
    do {
        off = random_full_rank(rng, 2, 6, p);
    } while (f.eval(off.row(0)).is_zero());
    CHECK(!fano_equations(f, off)[0].is_zero());

    // dependent rows are rejected
    ExactMatrix dep(2, 6, p);
    for (size_t j = 0; j < 6; ++j) {
        dep.at(0, j) = Scalar::of_int((int64_t)j + 1, p);
        dep.at(1, j) = Scalar::of_int(2 * ((int64_t)j + 1), p);
    }
    CHECK_THROWS_AS(fano_equations(f, dep), Error);
}

TEST_CASE("line-on-cubic equations vanish exactly on contained lines") {
    const auto& setup = reference_setup();
    const uint64_t p = 31;
    const MultiPoly& f = setup.search.basis[0];
    SplitMix64 rng(75);
    for (int trial = 0; trial < 15; ++trial) {
        ExactMatrix b = random_full_rank(rng, 2, 6, p);
        auto eqs = fano_equations(f, b);
        bool all_zero = true;
        for (const auto& q : eqs) all_zero = all_zero && q.is_zero();
        // oracle: evaluate f on p+1 points of the spanned line
        bool contained = true;
        for (uint64_t t = 0; t <= p && contained; ++t) {
            std::vector<Scalar> pt(6, Scalar::zero(p));
            for (size_t i = 0; i < 6; ++i)
                pt[i] = (t == p) ? b.at(1, i) : b.at(0, i) + Scalar::of_int((int64_t)t, p) * b.at(1, i);
            contained = f.eval(pt).is_zero();
        }
        CHECK(all_zero == contained);
    }
}

TEST_CASE("line-on-cubic equations: the whole ruling family, symbolically") {
    const auto& setup = reference_setup();
    const uint64_t p = 31;
    const MultiPoly& f = setup.search.basis[0];
    const ScrollSpec spec = setup.ref.spec;

    // rows of the projected ruling curve: linear and degree-v forms in (r,s)
    std::array<std::vector<MultiPoly>, 2> rows;
    auto rr = [&](int a, int b) {
        Exp e(2, 0);
        e[0] = (uint16_t)a;
        e[1] = (uint16_t)b;
        return MultiPoly::term(2, e, Scalar::one(p));
    };
    for (int j = 0; j < 6; ++j) {
        rows[0].push_back(rr(1, 0) * setup.lp.at(0, j) + rr(0, 1) * setup.lp.at(1, j));
        MultiPoly big(2, p);
        for (int i = 0; i <= spec.v; ++i) big += rr(spec.v - i, i) * setup.lp.at(2 + i, j);
        rows[1].push_back(big);
    }
    for (const MultiPoly& q : fano_equations_sym(f, rows)) CHECK(q.is_zero());
}

TEST_CASE("containing cubics vanish on the scroll") {
    const auto& setup = reference_setup();
    CHECK(setup.search.basis.size() == 6);
    SplitMix64 rng(72);
    for (int trial = 0; trial < 50; ++trial) {
        P1Param s = (trial % 10 == 9) ? P1Param::infinity(31)
                                      : P1Param::of_int((int64_t)rng.below(31), 31);
        auto z = vec_mat(scroll_param(setup.ref.spec, s, random_scalar(rng, 31)), setup.lp);
        for (const auto& f : setup.search.basis) CHECK(f.eval(z).is_zero());
    }
}

TEST_CASE("cubic classification") {
    CHECK(classify_cubic(fermat_cubic(31)).verdict == CubicVerdict::Smooth);
    CHECK(classify_cubic(fermat_cubic(101)).verdict == CubicVerdict::Smooth);

    MultiPoly triple(6, 31);
    Exp e(6, 0);
    e[0] = 3;
    triple.add_term(e, Scalar::one(31));
    auto cls = classify_cubic(triple);
    CHECK(cls.verdict == CubicVerdict::Singular);
    REQUIRE(cls.singular_point.has_value());
    // the witness annihilates all partials
    for (size_t i = 0; i < 6; ++i)
        CHECK(triple.partial(i).eval(*cls.singular_point).is_zero());

    MultiPoly zero(6, 31);
    CHECK_THROWS_AS(classify_cubic(zero), Error);
    CHECK_THROWS_AS(classify_cubic(fermat_cubic(3)), UnsupportedError);
}

TEST_CASE("scan witnesses imply the emptiness certificate fails") {
    SplitMix64 rng(73);
    const uint64_t p = 7;
    for (int trial = 0; trial < 12; ++trial) {
        MultiPoly f = testutil::random_homogeneous(rng, 4, 3, 6, p);
        if (f.is_zero() || f.degree() != 3 || !f.is_homogeneous()) continue;
        auto pt = scan_singular_point(f, 0);
        auto cls = classify_cubic(f);
        if (pt) CHECK(cls.verdict == CubicVerdict::Singular);
        if (cls.verdict == CubicVerdict::Smooth) CHECK(!pt);
    }
}

TEST_CASE("smoothness certificate cross-checked by the exhaustive point scan") {
    // the verified smooth member: the emptiness certificate must agree with
    // a full scan of the 29.6M points of P^5(F_31) finding no singular point
    const auto& setup = reference_setup();
    REQUIRE(setup.search.smooth.has_value());
    CHECK(!scan_singular_point(*setup.search.smooth, 0).has_value());
    IdealBasis jac;
    for (size_t i = 0; i < 6; ++i) {
        MultiPoly d = setup.search.smooth->partial(i);
        if (!d.is_zero()) jac.gens.push_back(std::move(d));
    }
    CHECK(is_projectively_empty(jac));
}

TEST_CASE("classification agrees across primes on an integer cubic") {
    // reduce one cubic with integer coefficients modulo two primes
    MultiPoly fq(6, 0);
    for (size_t i = 0; i < 6; ++i) {
        Exp e(6, 0);
        e[i] = 3;
        fq.add_term(e, Scalar::one(0));
    }
    Exp mix(6, 0);
    mix[0] = mix[1] = mix[2] = 1;
    fq.add_term(mix, Scalar::of_int(5, 0));
    auto c31 = classify_cubic(fq.reduced_mod(31));
    auto c101 = classify_cubic(fq.reduced_mod(101));
    CHECK(c31.verdict == c101.verdict);
}

TEST_CASE("search finds one smooth and one singular containing cubic") {
    const auto& setup = reference_setup();
    REQUIRE(setup.search.smooth.has_value());
    REQUIRE(setup.search.singular.has_value());
    CHECK(classify_cubic(*setup.search.smooth).verdict == CubicVerdict::Smooth);
    auto singular_cls = classify_cubic(*setup.search.singular);
    CHECK(singular_cls.verdict == CubicVerdict::Singular);
    // lowest-index-wins determinism
    auto again = search_containing_cubics(setup.ref.spec, setup.lp, 0);
    CHECK(again.smooth_index == setup.search.smooth_index);
    CHECK(again.singular_index == setup.search.singular_index);
}

TEST_CASE("first-order deformation of the ruling family: reference numbers") {
    const auto& setup = reference_setup();
    REQUIRE(setup.search.smooth.has_value());
    auto rep = fano_deformation_dim(setup.ref.spec, setup.lp, *setup.search.smooth);
    CHECK(rep.coefficient_count == 66);
    CHECK(rep.equation_count == 58);
    CHECK(rep.equation_count == 4u + 11u + 18u + 25u);
    CHECK(rep.rank == 53);
    CHECK(rep.sym_gl2 + rep.sym_aut_p1 + rep.sym_rescale == 11);
    CHECK(rep.dimension == 2);
}

TEST_CASE("deformation rank invariances") {
    const auto& setup = reference_setup();
    REQUIRE(setup.search.smooth.has_value());
    const MultiPoly& f = *setup.search.smooth;
    const uint64_t p = 31;
    auto base = fano_deformation_dim(setup.ref.spec, setup.lp, f);
    SplitMix64 rng(74);

    // rescaling the cubic
    auto scaled = fano_deformation_dim(setup.ref.spec, setup.lp, f * Scalar::of_int(17, p));
    CHECK(scaled.rank == base.rank);

    // right GL(6) action on the projection
    ExactMatrix g = random_full_rank(rng, 6, 6, p);
    // the transformed scroll is cut by the pulled-back cubic f(z g^{-1});
    // push the cubic through the inverse substitution
    ExactMatrix ginv(6, 6, p);
    {
        // invert by solving g x = e_j columnwise via kernel of [g | -e_j]
        ExactMatrix aug(6, 12, p);
        for (size_t i = 0; i < 6; ++i)
            for (size_t j = 0; j < 6; ++j) aug.at(i, j) = g.at(i, j);
        for (size_t i = 0; i < 6; ++i) aug.at(i, 6 + i) = Scalar::one(p);
        auto rref = aug.rref(nullptr);
        for (size_t i = 0; i < 6; ++i)
            for (size_t j = 0; j < 6; ++j) ginv.at(i, j) = rref.at(i, 6 + j);
    }
    std::vector<MultiPoly> subst;
    for (size_t i = 0; i < 6; ++i) {
        MultiPoly li(6, p);
        for (size_t j = 0; j < 6; ++j) {
            Exp e(6, 0);
            e[j] = 1;
            li.add_term(e, ginv.at(j, i));
        }
        subst.push_back(li);
    }
    MultiPoly f_moved = f.subst(subst);
    auto moved = fano_deformation_dim(setup.ref.spec, setup.lp * g, f_moved);
    CHECK(moved.rank == base.rank);

    // reparametrizing the ruling line (simultaneous coordinate change)
    // realized upstairs: Lambda -> M Lambda with the block binomial action
    ExactMatrix mob(11, 11, p);
    {
        auto sa = Scalar::of_int(3, p), sb = Scalar::of_int(1, p), sc = Scalar::of_int(2, p),
             sd = Scalar::of_int(5, p);
        MultiPoly lin1 = MultiPoly::constant(1, sd) + MultiPoly::variable(1, 0, p) * sc;
        MultiPoly lin2 = MultiPoly::constant(1, sb) + MultiPoly::variable(1, 0, p) * sa;
        for (int j = 0; j <= 1; ++j) {
            MultiPoly prod = lin1.pow(1 - j) * lin2.pow(j);
            for (const auto& [e, coef] : prod.terms()) mob.at(e[0], j) = coef;
        }
        for (int j = 0; j <= 8; ++j) {
            MultiPoly prod = lin1.pow(8 - j) * lin2.pow(j);
            for (const auto& [e, coef] : prod.terms()) mob.at(2 + e[0], 2 + j) = coef;
        }
    }
    REQUIRE(mob.rank() == 11);
    auto relabeled = fano_deformation_dim(setup.ref.spec, mob * setup.lp, f);
    CHECK(relabeled.rank == base.rank);
}

TEST_CASE("known trivial deformations solve the linear system exactly") {
    // row rescalings and infinitesimal reparametrizations of the line move
    // the parametrized family inside itself, so their coefficient vectors
    // must be annihilated by every equation of the assembled system
    const auto& setup = reference_setup();
    REQUIRE(setup.search.smooth.has_value());
    const MultiPoly& f = *setup.search.smooth;
    const uint64_t p = 31;
    const int v = 8;
    const size_t ncoeff = 66;
    const ExactMatrix& lp = setup.lp;

    auto rr = [&](int a, int b) {
        Exp e(2, 0);
        e[0] = (uint16_t)a;
        e[1] = (uint16_t)b;
        return MultiPoly::term(2, e, Scalar::one(p));
    };
    std::array<std::vector<JetPoly>, 2> b;
    for (int j = 0; j < 6; ++j) {
        JetPoly j0(rr(1, 0) * lp.at(0, j) + rr(0, 1) * lp.at(1, j), ncoeff);
        j0.set_grad(2 * j, rr(1, 0));
        j0.set_grad(2 * j + 1, rr(0, 1));
        b[0].push_back(std::move(j0));
        MultiPoly base1(2, p);
        for (int i = 0; i <= v; ++i) base1 += rr(v - i, i) * lp.at(2 + i, j);
        JetPoly j1(base1, ncoeff);
        for (int i = 0; i <= v; ++i) j1.set_grad(12 + (v + 1) * j + i, rr(v - i, i));
        b[1].push_back(std::move(j1));
    }
    auto eqs = fano_equations_jet(f, b);

    // coefficient vectors of the trivial directions
    auto lam = [&](int i, int j) { return lp.at(i, j); };
    std::vector<std::vector<Scalar>> dirs;
    auto fresh = [&] { return std::vector<Scalar>(ncoeff, Scalar::zero(p)); };
    {  // scale the linear row: dR = (R_0 ; 0)
        auto c = fresh();
        for (int j = 0; j < 6; ++j) {
            c[2 * j] = lam(0, j);
            c[2 * j + 1] = lam(1, j);
        }
        dirs.push_back(c);
    }
    {  // scale the octic row: dR = (0 ; R_1)
        auto c = fresh();
        for (int j = 0; j < 6; ++j)
            for (int i = 0; i <= v; ++i) c[12 + 9 * j + i] = lam(2 + i, j);
        dirs.push_back(c);
    }
    {  // dR = r d/dr R
        auto c = fresh();
        for (int j = 0; j < 6; ++j) {
            c[2 * j] = lam(0, j);
            for (int i = 0; i <= v; ++i)
                c[12 + 9 * j + i] = lam(2 + i, j) * Scalar::of_int(v - i, p);
        }
        dirs.push_back(c);
    }
    {  // dR = s d/dr R
        auto c = fresh();
        for (int j = 0; j < 6; ++j) {
            c[2 * j + 1] = lam(0, j);
            for (int k = 1; k <= v; ++k)
                c[12 + 9 * j + k] = lam(1 + k, j) * Scalar::of_int(v + 1 - k, p);
        }
        dirs.push_back(c);
    }
    {  // dR = r d/ds R
        auto c = fresh();
        for (int j = 0; j < 6; ++j) {
            c[2 * j] = lam(1, j);
            for (int k = 0; k < v; ++k)
                c[12 + 9 * j + k] = lam(3 + k, j) * Scalar::of_int(k + 1, p);
        }
        dirs.push_back(c);
    }
    {  // dR = s d/ds R
        auto c = fresh();
        for (int j = 0; j < 6; ++j) {
            c[2 * j + 1] = lam(1, j);
            for (int i = 0; i <= v; ++i)
                c[12 + 9 * j + i] = lam(2 + i, j) * Scalar::of_int(i, p);
        }
        dirs.push_back(c);
    }

    for (const auto& c : dirs) {
        for (const auto& eq : eqs) {
            MultiPoly pairing(2, p);
            for (size_t k = 0; k < ncoeff; ++k)
                if (!eq.grad(k).is_zero() && !c[k].is_zero()) pairing += eq.grad(k) * c[k];
            CHECK(pairing.is_zero());
        }
    }

    // the six directions span a 5-dim slice of the 13-dim solution space:
    // the Euler identity r d/dr + s d/ds = degree ties them by one relation
    ExactMatrix span(dirs.size(), ncoeff, p);
    for (size_t i = 0; i < dirs.size(); ++i) span.set_row(i, dirs[i]);
    CHECK(span.rank() == 5);
    std::vector<Scalar> euler(ncoeff, Scalar::zero(p));
    for (size_t k = 0; k < ncoeff; ++k)
        euler[k] = dirs[2][k] + dirs[5][k] - dirs[0][k] - Scalar::of_int(v, p) * dirs[1][k];
    for (const auto& x : euler) CHECK(x.is_zero());
}

TEST_CASE("deformation rejects a cubic missing the scroll") {
    const auto& setup = reference_setup();
    CHECK_THROWS_WITH_AS(fano_deformation_dim(setup.ref.spec, setup.lp, fermat_cubic(31)),
                         doctest::Contains("does not contain"), Error);
}

TEST_CASE("double point bookkeeping") {
    CHECK(selfint_from_double_points(9, 8) == 41);
    for (int64_t n = 2; n <= 6; ++n)
        CHECK(selfint_from_double_points(2 * n + 1, n * (n - 2)) == 2 * n * n + 2 * n + 1);
    CHECK(selfint_from_double_points(3, 0) == 7);
    // inverse identity: (selfint - 6D + 3(D+2) - 8 + 4) / 2 = r
    for (int64_t D = 3; D <= 12; ++D)
        for (int64_t r = 0; r <= 10; ++r) {
            int64_t si = selfint_from_double_points(D, r);
            CHECK((si - 6 * D + 3 * (D + 2) - 8 + 4) / 2 == r);
        }

    CHECK(discriminant(9, 41) == 42);
    CHECK_THROWS_AS(selfint_from_double_points(2, 0), Error);
}

TEST_CASE("discriminant family table") {
    auto r2 = discriminant_table(2);
    CHECK(r2.disc == 14);
    auto r4 = discriminant_table(4);
    CHECK(r4.disc == 42);
    CHECK(r4.rho == BigRat(13));
    for (int64_t n = 2; n <= 10; ++n) {
        auto rec = discriminant_table(n);
        CHECK(rec.disc == 2 * (n * n + n + 1));
        CHECK(rec.selfint == 2 * n * n + 2 * n + 1);
        CHECK(rec.expected_sings == n * (n - 2));
        CHECK(!rec.four_divides_disc);
        CHECK(rec.rho_odd);
    }
}

TEST_CASE("unirational degree values") {
    auto a = unirational_degree(9, 0, 41);
    CHECK(a.value == BigRat(13));
    CHECK(a.positive);
    auto b = unirational_degree(2, 0, 0);
    CHECK(b.value == BigRat(2));
    for (int64_t n = 2; n <= 8; ++n) {
        auto rec = discriminant_table(n);
        auto u = unirational_degree(rec.degree, 0, rec.selfint);
        BigInt num = boost::multiprecision::numerator(u.value);
        BigInt den = boost::multiprecision::denominator(u.value);
        CHECK(den == 1);
        CHECK(num % 2 != 0);
    }
}
