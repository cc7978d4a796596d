#include "scrollsmith/scroll.hpp"

#include <algorithm>

#include "scrollsmith/errors.hpp"

namespace scrollsmith {

void ScrollSpec::validate() const {
    if (u < 1) throw Error("scroll spec: u must be >= 1");
    if (v < u) throw Error("scroll spec: v must be >= u");
    if (N < 3 || N > D() + 1) throw Error("scroll spec: requires 3 <= N <= D+1");
}

void ScrollSpec::validate_singular_range() const {
    validate();
    if (!(D() >= N && N >= 5))
        throw Error("scroll spec: singular pipelines require D >= N >= 5");
}

std::vector<Scalar> scroll_param(const ScrollSpec& spec, const P1Param& s, const Scalar& t) {
    spec.validate();
    const uint64_t mod = t.modulus();
    const size_t dim = spec.D() + 2;
    std::vector<Scalar> x(dim, Scalar::zero(mod));
    if (s.inf) {
        // top-degree coefficients of both blocks
        x[spec.u] = Scalar::one(mod);
        x[dim - 1] = t;
        return x;
    }
    if (s.value.modulus() != mod) throw ContextMismatchError("scroll_param context mismatch");
    Scalar pw = Scalar::one(mod);
    for (int i = 0; i <= spec.u; ++i) {
        x[i] = pw;
        pw = pw * s.value;
    }
    pw = t;
    for (int j = 0; j <= spec.v; ++j) {
        x[spec.u + 1 + j] = pw;
        pw = pw * s.value;
    }
    return x;
}

RulingBasis ruling_basis(const ScrollSpec& spec, const P1Param& s, uint64_t modulus) {
    spec.validate();
    const size_t dim = spec.D() + 2;
    RulingBasis rb;
    rb.a.assign(dim, Scalar::zero(modulus));
    rb.theta.assign(dim, Scalar::zero(modulus));
    rb.da.assign(dim, Scalar::zero(modulus));
    rb.dtheta.assign(dim, Scalar::zero(modulus));
    if (s.inf) {
        // chart at infinity: a(w) = (w^u, ..., 1), theta(w) = (w^v, ..., 1)
        rb.a[spec.u] = Scalar::one(modulus);
        rb.theta[dim - 1] = Scalar::one(modulus);
        if (spec.u >= 1) rb.da[spec.u - 1] = Scalar::one(modulus);
        if (spec.v >= 1) rb.dtheta[dim - 2] = Scalar::one(modulus);
        return rb;
    }
    Scalar sv = s.value;
    if (sv.modulus() != modulus) throw ContextMismatchError("ruling_basis context mismatch");
    Scalar pw = Scalar::one(modulus);
    for (int i = 0; i <= spec.u; ++i) {
        rb.a[i] = pw;
        if (i + 1 <= spec.u) rb.da[i + 1] = pw * Scalar::of_int(i + 1, modulus);
        pw = pw * sv;
    }
    pw = Scalar::one(modulus);
    for (int j = 0; j <= spec.v; ++j) {
        rb.theta[spec.u + 1 + j] = pw;
        if (j + 1 <= spec.v) rb.dtheta[spec.u + 2 + j] = pw * Scalar::of_int(j + 1, modulus);
        pw = pw * sv;
    }
    return rb;
}

std::vector<MultiPoly> minor_ideal(const ScrollSpec& spec, uint64_t modulus) {
    spec.validate();
    const int D = spec.D();
    const size_t nvars = D + 2;
    // 2 x D matrix of variables: columns (x_i, x_{i+1}) for i < u, then
    // (x_{u+1+j}, x_{u+2+j}) for j < v
    std::vector<std::pair<size_t, size_t>> cols;
    for (int i = 0; i < spec.u; ++i) cols.emplace_back(i, i + 1);
    for (int j = 0; j < spec.v; ++j) cols.emplace_back(spec.u + 1 + j, spec.u + 2 + j);
    std::vector<MultiPoly> minors;
    for (size_t c1 = 0; c1 < cols.size(); ++c1)
        for (size_t c2 = c1 + 1; c2 < cols.size(); ++c2) {
            auto x = [&](size_t i) { return MultiPoly::variable(nvars, i, modulus); };
            minors.push_back(x(cols[c1].first) * x(cols[c2].second) -
                             x(cols[c1].second) * x(cols[c2].first));
        }
    return minors;
}

ExactMatrix ruling_matrix(const ScrollSpec& spec, const std::vector<P1Param>& svals,
                          uint64_t modulus) {
    spec.validate();
    if (spec.u != 1) throw UnsupportedError("ruling_matrix: only u = 1 is supported");
    if (svals.empty()) throw Error("ruling_matrix: no parameters");
    for (size_t i = 0; i < svals.size(); ++i)
        for (size_t j = i + 1; j < svals.size(); ++j)
            if (svals[i] == svals[j]) throw Error("ruling_matrix: duplicate parameters");

    const size_t k = svals.size();
    const size_t dim = spec.D() + 2;
    ExactMatrix m(k + 2, dim, modulus);
    if (k == 1) {
        RulingBasis rb = ruling_basis(spec, svals[0], modulus);
        m.set_row(0, rb.a);
        m.set_row(1, rb.da);  // directrix direction
        m.set_row(2, rb.theta);
    } else {
        m.set_row(0, ruling_basis(spec, svals[0], modulus).a);
        m.set_row(1, ruling_basis(spec, svals[1], modulus).a);
        for (size_t i = 0; i < k; ++i)
            m.set_row(2 + i, ruling_basis(spec, svals[i], modulus).theta);
    }
    return m;
}

ProjectionMatrix::ProjectionMatrix(ScrollSpec s, ExactMatrix l) : spec(s), lambda(std::move(l)) {
    spec.validate();
    if (lambda.rows() != static_cast<size_t>(spec.D() + 2) ||
        lambda.cols() != static_cast<size_t>(spec.N + 1))
        throw Error("projection matrix must be (D+2) x (N+1)");
    if (lambda.rank() != static_cast<size_t>(spec.N + 1))
        throw Error("projection matrix must have full column rank");
}

namespace {

std::vector<P1Param> p1_points(uint64_t p) {
    std::vector<P1Param> pts;
    pts.reserve(p + 1);
    for (uint64_t s = 0; s < p; ++s) pts.push_back(P1Param::of_int(static_cast<int64_t>(s), p));
    pts.push_back(P1Param::infinity(p));
    return pts;
}

std::vector<uint64_t> raw(const std::vector<Scalar>& v) {
    std::vector<uint64_t> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].fp_value();
    return out;
}

}  // namespace

TangentClearance tangent_clearance_scan(const ScrollSpec& spec, const ExactMatrix& lambda_p,
                                        uint64_t p) {
    spec.validate();
    if (spec.u != 1) throw UnsupportedError("tangent_clearance: only u = 1 is supported");
    if (lambda_p.modulus() != p) throw ContextMismatchError("tangent_clearance: Lambda not mod p");
    if (lambda_p.rank() != static_cast<size_t>(spec.N + 1))
        throw Error("tangent_clearance: projection matrix rank deficient");

    TangentClearance res;
    const auto pts = p1_points(p);
    std::vector<std::vector<uint64_t>> imA, imT, imdA, imdT;
    for (const auto& s : pts) {
        RulingBasis rb = ruling_basis(spec, s, p);
        imA.push_back(raw(vec_mat(rb.a, lambda_p)));
        imT.push_back(raw(vec_mat(rb.theta, lambda_p)));
        imdA.push_back(raw(vec_mat(rb.da, lambda_p)));
        imdT.push_back(raw(vec_mat(rb.dtheta, lambda_p)));
    }

    // (a) the tangent developable of the big-block curve misses the center
    for (size_t i = 0; i < pts.size(); ++i) {
        if (fp_rank_raw({imT[i], imdT[i]}, p) != 2) {
            res.ok = false;
            res.witness = "curve tangent at s=" + pts[i].str();
            return res;
        }
    }

    // (b) no tangent plane of the scroll at rational (s, t) meets the center
    const size_t nc = lambda_p.cols();
    for (size_t i = 0; i < pts.size(); ++i) {
        std::vector<uint64_t> dir(nc);
        for (size_t ti = 0; ti <= p; ++ti) {  // t in F_p plus infinity
            if (ti == p) {
                dir = imdT[i];
            } else {
                for (size_t j = 0; j < nc; ++j)
                    dir[j] = (imdA[i][j] + static_cast<unsigned __int128>(ti) * imdT[i][j]) % p;
            }
            if (fp_rank_raw({imA[i], imT[i], dir}, p) != 3) {
                res.ok = false;
                res.witness =
                    "tangent plane at s=" + pts[i].str() + ", t=" + (ti == p ? "inf" : std::to_string(ti));
                return res;
            }
        }
    }
    return res;
}

bool tangent_clearance(const ScrollSpec& spec, const ExactMatrix& lambda_p, uint64_t p) {
    return tangent_clearance_scan(spec, lambda_p, p).ok;
}

SingularScrollReport singular_pairs(const ScrollSpec& spec, const ExactMatrix& lambda_p,
                                    uint64_t p) {
    spec.validate();
    if (spec.u != 1)
        throw UnsupportedError("singular_pairs: only u = 1 is supported (the pair/point "
                               "correspondence is unspecified for u >= 2)");
    if (lambda_p.modulus() != p) throw ContextMismatchError("singular_pairs: Lambda not mod p");
    if (lambda_p.rows() != static_cast<size_t>(spec.D() + 2) ||
        lambda_p.cols() != static_cast<size_t>(spec.N + 1))
        throw Error("singular_pairs: Lambda must be (D+2) x (N+1)");
    if (lambda_p.rank() != static_cast<size_t>(spec.N + 1))
        throw Error("singular_pairs: invalid projection (rank < N+1)");

    SingularScrollReport rep;
    rep.spec = spec;
    rep.prime = p;

    const auto pts = p1_points(p);
    std::vector<std::vector<Scalar>> imA, imT;
    std::vector<std::vector<uint64_t>> rawA, rawT;
    for (const auto& s : pts) {
        RulingBasis rb = ruling_basis(spec, s, p);
        imA.push_back(vec_mat(rb.a, lambda_p));
        imT.push_back(vec_mat(rb.theta, lambda_p));
        rawA.push_back(raw(imA.back()));
        rawT.push_back(raw(imT.back()));
    }

    const size_t nc = lambda_p.cols();
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            size_t rk = fp_rank_raw({rawA[i], rawA[j], rawT[i], rawT[j]}, p);
            if (rk >= 4) continue;
            if (rk < 3) {
                rep.degenerate_pairs.emplace_back(pts[i], pts[j]);
                continue;
            }
            // the two image lines meet; the left kernel of the pair block
            // gives alpha1 A_i + alpha2 A_j + alpha3 T_i + alpha4 T_j = 0
            ExactMatrix m(4, nc, p);
            m.set_row(0, imA[i]);
            m.set_row(1, imA[j]);
            m.set_row(2, imT[i]);
            m.set_row(3, imT[j]);
            auto lk = m.transpose().kernel_basis();
            SingularPair pair{pts[i], pts[j], {}};
            if (!lk.empty()) {
                const auto& al = lk[0];
                std::vector<Scalar> pt(nc, Scalar::zero(p));
                for (size_t c = 0; c < nc; ++c) pt[c] = al[0] * imA[i][c] + al[2] * imT[i][c];
                bool zero = std::all_of(pt.begin(), pt.end(), [](const Scalar& s) { return s.is_zero(); });
                if (zero)
                    for (size_t c = 0; c < nc; ++c) pt[c] = al[1] * imA[j][c] + al[3] * imT[j][c];
                zero = std::all_of(pt.begin(), pt.end(), [](const Scalar& s) { return s.is_zero(); });
                if (zero) {
                    // a ruling collapsed (the center meets it): rank 3 but no
                    // honest crossing of two image lines
                    rep.degenerate_pairs.emplace_back(pts[i], pts[j]);
                    continue;
                }
                pair.image_point = projective_normalize(pt);
            }
            rep.pairs.push_back(std::move(pair));
        }
    }

    // distinct image points, sorted for determinism
    std::vector<std::vector<Scalar>> points;
    for (const auto& pr : rep.pairs)
        if (!pr.image_point.empty()) points.push_back(pr.image_point);
    auto cmp = [](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].fp_value() != b[i].fp_value()) return a[i].fp_value() < b[i].fp_value();
        }
        return false;
    };
    std::sort(points.begin(), points.end(), cmp);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    rep.distinct_points = std::move(points);

    rep.clearance = tangent_clearance(spec, lambda_p, p);
    return rep;
}

std::vector<Exp> image_forms_monomials(int nz, int d) { return monomials_of_degree(nz, d); }

std::vector<MultiPoly> image_forms(const ScrollSpec& spec, const ExactMatrix& lambda, int d) {
    spec.validate();
    if (d < 0) throw Error("image_forms: negative degree");
    const uint64_t mod = lambda.modulus();
    const size_t nz = lambda.cols();
    if (lambda.rows() != static_cast<size_t>(spec.D() + 2))
        throw Error("image_forms: Lambda row count mismatch");

    // substituted coordinates phi_j(s,t) = sum_i param_i(s,t) Lambda[i][j]
    std::vector<MultiPoly> phi;
    phi.reserve(nz);
    for (size_t j = 0; j < nz; ++j) {
        MultiPoly f(2, mod);
        for (int i = 0; i < spec.D() + 2; ++i) {
            const Scalar& c = lambda.at(i, j);
            if (c.is_zero()) continue;
            Exp e(2, 0);
            if (i <= spec.u) {
                e[0] = static_cast<uint16_t>(i);
            } else {
                e[0] = static_cast<uint16_t>(i - spec.u - 1);
                e[1] = 1;
            }
            f.add_term(e, c);
        }
        phi.push_back(std::move(f));
    }

    const std::vector<Exp> mons = image_forms_monomials(static_cast<int>(nz), d);
    std::map<Exp, size_t> row_of;
    std::vector<std::map<size_t, Scalar>> cols(mons.size());
    for (size_t c = 0; c < mons.size(); ++c) {
        MultiPoly prod = MultiPoly::constant(2, Scalar::one(mod));
        for (size_t j = 0; j < nz; ++j)
            if (mons[c][j]) prod = prod * phi[j].pow(mons[c][j]);
        for (const auto& [e, coef] : prod.terms()) {
            auto [it, fresh] = row_of.emplace(e, row_of.size());
            cols[c].emplace(it->second, coef);
        }
    }

    ExactMatrix m(row_of.size(), mons.size(), mod);
    for (size_t c = 0; c < mons.size(); ++c)
        for (const auto& [r, coef] : cols[c]) m.at(r, c) = coef;

    std::vector<MultiPoly> forms;
    for (const auto& w : m.kernel_basis()) {
        MultiPoly f(nz, mod);
        for (size_t c = 0; c < mons.size(); ++c)
            if (!w[c].is_zero()) f.add_term(mons[c], w[c]);
        forms.push_back(std::move(f));
    }
    return forms;
}

}  // namespace scrollsmith
