#include "scrollsmith/cubic.hpp"

#include <algorithm>
#include <thread>

#include "scrollsmith/parallel.hpp"
#include "scrollsmith/rng.hpp"

namespace scrollsmith {

size_t check_cubic(const MultiPoly& f) {
    if (f.is_zero()) throw Error("cubic form must be nonzero");
    if (!f.is_homogeneous() || f.degree() != 3)
        throw Error("cubic form must be homogeneous of degree 3");
    return f.nvars();
}

Scalar polarize(const MultiPoly& f, const std::vector<Scalar>& x, const std::vector<Scalar>& y,
                const std::vector<Scalar>& z) {
    return detail::polarize_core(f, x, y, z, Scalar::zero(f.modulus()));
}

std::array<Scalar, 4> fano_equations(const MultiPoly& f, const ExactMatrix& b) {
    if (b.rows() != 2 || b.cols() != check_cubic(f)) throw Error("fano_equations: b must be 2 x nvars");
    if (b.rank() != 2) throw Error("fano_equations: spanning rows are dependent");
    std::vector<Scalar> b1 = b.row(0), b2 = b.row(1);
    return {polarize(f, b1, b1, b1), polarize(f, b1, b1, b2), polarize(f, b1, b2, b2),
            polarize(f, b2, b2, b2)};
}

std::array<MultiPoly, 4> fano_equations_sym(const MultiPoly& f,
                                            const std::array<std::vector<MultiPoly>, 2>& b) {
    const size_t nv = b[0].empty() ? 0 : b[0][0].nvars();
    MultiPoly zero(nv, f.modulus());
    auto run = [&](const std::vector<MultiPoly>& x, const std::vector<MultiPoly>& y,
                   const std::vector<MultiPoly>& z) {
        return detail::polarize_core(f, x, y, z, zero);
    };
    return {run(b[0], b[0], b[0]), run(b[0], b[0], b[1]), run(b[0], b[1], b[1]),
            run(b[1], b[1], b[1])};
}

std::array<JetPoly, 4> fano_equations_jet(const MultiPoly& f,
                                          const std::array<std::vector<JetPoly>, 2>& b) {
    JetPoly zero(MultiPoly(b[0][0].nvars(), f.modulus()), b[0][0].ncoeffs());
    auto run = [&](const std::vector<JetPoly>& x, const std::vector<JetPoly>& y,
                   const std::vector<JetPoly>& z) {
        return detail::polarize_core(f, x, y, z, zero);
    };
    return {run(b[0], b[0], b[0]), run(b[0], b[0], b[1]), run(b[0], b[1], b[1]),
            run(b[1], b[1], b[1])};
}

std::vector<MultiPoly> find_containing_cubics(const ScrollSpec& spec,
                                              const ExactMatrix& lambda_p) {
    return image_forms(spec, lambda_p, 3);
}

namespace {

// dense coefficient tables of the quadric partials over the pair monomials
struct PartialTables {
    size_t n = 0;
    uint64_t p = 0;
    std::vector<std::pair<size_t, size_t>> pairs;
    std::vector<std::vector<uint64_t>> table;  // one row per partial

    explicit PartialTables(const MultiPoly& f) : n(f.nvars()), p(f.modulus()) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
        table.assign(n, std::vector<uint64_t>(pairs.size(), 0));
        for (size_t v = 0; v < n; ++v) {
            MultiPoly d = f.partial(v);
            for (const auto& [e, c] : d.terms()) {
                size_t a = n, b = n;
                for (size_t i = 0; i < n; ++i) {
                    if (e[i] == 2) {
                        a = b = i;
                        break;
                    }
                    if (e[i] == 1) {
                        if (a == n)
                            a = i;
                        else
                            b = i;
                    }
                }
                size_t col = 0;
                while (pairs[col] != std::make_pair(a, b)) ++col;
                table[v][col] = c.fp_value();
            }
        }
    }

    bool all_partials_vanish(const std::vector<uint64_t>& coord,
                             std::vector<uint64_t>& mono) const {
        for (size_t c = 0; c < pairs.size(); ++c)
            mono[c] = (coord[pairs[c].first] * coord[pairs[c].second]) % p;
        for (size_t v = 0; v < n; ++v) {
            unsigned __int128 acc = 0;
            const auto& row = table[v];
            for (size_t c = 0; c < pairs.size(); ++c)
                acc += static_cast<unsigned __int128>(row[c]) * mono[c];
            if (acc % p != 0) return false;
        }
        return true;
    }

    // scans the slice with the given lead (coordinate normalized to 1) and,
    // for lead < n-1, a fixed value of the next coordinate; returns the
    // first zero in enumeration order
    std::optional<std::vector<uint64_t>> scan_slice(size_t lead, uint64_t next_value,
                                                    uint64_t budget, uint64_t* seen) const {
        std::vector<uint64_t> coord(n, 0), mono(pairs.size());
        coord[lead] = 1;
        size_t free_from = lead + 1;
        if (lead + 1 < n) {
            coord[lead + 1] = next_value;
            free_from = lead + 2;
        }
        uint64_t local = 0;
        while (true) {
            if (budget && *seen + local >= budget) {
                *seen += local;
                return std::nullopt;
            }
            ++local;
            if (all_partials_vanish(coord, mono)) {
                *seen += local;
                return coord;
            }
            size_t i = n;
            bool exhausted = true;
            while (i > free_from) {
                --i;
                if (++coord[i] < p) {
                    exhausted = false;
                    break;
                }
                coord[i] = 0;
            }
            if (exhausted) break;
        }
        *seen += local;
        return std::nullopt;
    }
};

std::vector<Scalar> to_point(const std::vector<uint64_t>& coord, uint64_t p) {
    std::vector<Scalar> pt;
    pt.reserve(coord.size());
    for (uint64_t c : coord) pt.push_back(Scalar::of_int(static_cast<int64_t>(c), p));
    return pt;
}

}  // namespace

std::optional<std::vector<Scalar>> scan_singular_point(const MultiPoly& f, uint64_t budget) {
    const size_t n = check_cubic(f);
    const uint64_t p = f.modulus();
    if (p == 0) throw UnsupportedError("scan_singular_point: needs a prime field");
    if (p == 3) throw UnsupportedError("scan_singular_point: characteristic 3 unsupported");

    PartialTables tables(f);

    // slice list in enumeration order: (lead, value of the next coordinate)
    std::vector<std::pair<size_t, uint64_t>> slices;
    for (size_t lead = 0; lead < n; ++lead) {
        if (lead + 1 < n)
            for (uint64_t c = 0; c < p; ++c) slices.emplace_back(lead, c);
        else
            slices.emplace_back(lead, 0);
    }

    const unsigned threads = thread_budget();
    if (budget || threads <= 1 || slices.size() < 4) {
        uint64_t seen = 0;
        for (const auto& [lead, c] : slices) {
            auto hit = tables.scan_slice(lead, c, budget, &seen);
            if (hit) return to_point(*hit, p);
            if (budget && seen >= budget) return std::nullopt;
        }
        return std::nullopt;
    }

    // full scan in deterministic waves: the first wave containing a hit
    // yields the globally first hit in enumeration order
    for (size_t wave = 0; wave < slices.size(); wave += threads) {
        size_t count = std::min<size_t>(threads, slices.size() - wave);
        std::vector<std::optional<std::vector<uint64_t>>> hits(count);
        std::vector<std::thread> pool;
        for (size_t t = 0; t < count; ++t)
            pool.emplace_back([&, t] {
                uint64_t seen = 0;
                hits[t] = tables.scan_slice(slices[wave + t].first, slices[wave + t].second, 0,
                                            &seen);
            });
        for (auto& th : pool) th.join();
        for (size_t t = 0; t < count; ++t)
            if (hits[t]) return to_point(*hits[t], p);
    }
    return std::nullopt;
}

namespace {

constexpr uint64_t kPreScanBudget = 4096;
// unbounded witness scans only below this many projective points
constexpr uint64_t kFullScanLimit = 64ull << 20;
// otherwise the witness search stays budgeted
constexpr uint64_t kCappedScanBudget = 1ull << 21;

uint64_t projective_point_count(uint64_t p, size_t nvars) {
    unsigned __int128 total = 0, pw = 1;
    for (size_t k = 0; k < nvars; ++k) {
        total += pw;
        if (total > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
        pw *= p;
    }
    return (uint64_t)total;
}

std::vector<MultiPoly> jacobian_ideal(const MultiPoly& f) {
    std::vector<MultiPoly> gens;
    for (size_t i = 0; i < f.nvars(); ++i) {
        MultiPoly d = f.partial(i);
        if (!d.is_zero()) gens.push_back(std::move(d));
    }
    return gens;
}

}  // namespace

CubicClassification classify_cubic(const MultiPoly& f, bool full_witness_scan) {
    const size_t n = check_cubic(f);
    if (f.modulus() == 3) throw UnsupportedError("classify_cubic: characteristic 3 unsupported");

    CubicClassification out;
    if (f.modulus() != 0) {
        if (auto pt = scan_singular_point(f, kPreScanBudget)) {
            out.verdict = CubicVerdict::Singular;
            out.singular_point = std::move(*pt);
            out.certificate = "rational singular point found by scan";
            return out;
        }
    }

    IdealBasis gb = buchberger(jacobian_ideal(f), MonomialOrder::grevlex());
    std::vector<bool> covered(n, false);
    for (const auto& g : gb.gens) {
        Exp l = leading_exp(g, gb.order);
        int support = -1;
        bool pure = true;
        for (size_t i = 0; i < n; ++i) {
            if (!l[i]) continue;
            if (support != -1) {
                pure = false;
                break;
            }
            support = static_cast<int>(i);
        }
        if (pure && support >= 0) covered[support] = true;
    }
    bool empty = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    if (empty) {
        out.verdict = CubicVerdict::Smooth;
        out.certificate = "leading-term ideal of the partials contains a pure power of every variable";
        return out;
    }
    out.verdict = CubicVerdict::Singular;
    std::string missing;
    for (size_t i = 0; i < n; ++i)
        if (!covered[i]) missing += (missing.empty() ? "" : ",") + ("x" + std::to_string(i));
    out.certificate = "no pure power of " + missing + " in the leading-term ideal";
    if (f.modulus() != 0 && full_witness_scan) {
        bool exhaustive = projective_point_count(f.modulus(), n) <= kFullScanLimit;
        if (auto pt = scan_singular_point(f, exhaustive ? 0 : kCappedScanBudget)) {
            out.singular_point = std::move(*pt);
            out.certificate += "; rational singular point found by scan";
        } else if (exhaustive) {
            out.certificate += "; no rational singular point over F_" + std::to_string(f.modulus());
        } else {
            out.certificate += "; witness scan capped (field too large to exhaust)";
        }
    }
    return out;
}

CubicSearchResult search_containing_cubics(const ScrollSpec& spec, const ExactMatrix& lambda_p,
                                           uint64_t seed) {
    const uint64_t p = lambda_p.modulus();
    if (p == 0) throw UnsupportedError("search_containing_cubics: needs a prime field");
    CubicSearchResult res;
    res.basis = find_containing_cubics(spec, lambda_p);
    if (res.basis.empty()) return res;

    SplitMix64 rng(seed);
    const size_t random_budget = 200;
    for (size_t idx = 0; idx < res.basis.size() + random_budget; ++idx) {
        if (res.smooth && res.singular) break;
        MultiPoly candidate(res.basis[0].nvars(), p);
        if (idx < res.basis.size()) {
            candidate = res.basis[idx];
        } else {
            for (const auto& b : res.basis) {
                Scalar c = Scalar::of_int(static_cast<int64_t>(rng.below(p)), p);
                candidate += b * c;
            }
            if (candidate.is_zero()) continue;
        }
        ++res.candidates_tried;
        CubicClassification cls = classify_cubic(candidate, /*full_witness_scan=*/false);
        if (cls.verdict == CubicVerdict::Smooth && !res.smooth) {
            res.smooth_index = idx;
            res.smooth = candidate;
            res.smooth_cert = std::move(cls);
        } else if (cls.verdict == CubicVerdict::Singular && !res.singular) {
            res.singular_index = idx;
            res.singular = candidate;
            res.singular_cert = std::move(cls);
        }
    }
    // enrich the recorded singular member with a rational witness once
    if (res.singular && res.singular_cert && !res.singular_cert->singular_point)
        res.singular_cert = classify_cubic(*res.singular, /*full_witness_scan=*/true);
    return res;
}

FanoDeformationReport fano_deformation_dim(const ScrollSpec& spec, const ExactMatrix& lambda_p,
                                           const MultiPoly& f) {
    spec.validate();
    if (spec.u != 1 || spec.N != 5)
        throw UnsupportedError("fano_deformation_dim: needs a type (1,v) scroll in P^5");
    if (spec.v != 8)
        throw UnsupportedError(
            "fano_deformation_dim: the symmetry deduction is calibrated for type (1,8)");
    const uint64_t p = f.modulus();
    if (p == 0) throw UnsupportedError("fano_deformation_dim: needs a prime field");
    if (p == 2 || p == 3) throw UnsupportedError("fano_deformation_dim: characteristic divides 6");
    if (lambda_p.modulus() != p) throw ContextMismatchError("fano_deformation_dim: field mismatch");
    check_cubic(f);
    const int v = spec.v;
    const size_t ncoeff = 6 * (v + 3);

    // ruling curve rows: (r, s, 0...) and (0, 0, r^v, ..., s^v); jets carry
    // one perturbation coefficient per form coefficient
    auto rr = [&](int a, int b) {  // r^a s^b
        Exp e(2, 0);
        e[0] = static_cast<uint16_t>(a);
        e[1] = static_cast<uint16_t>(b);
        return MultiPoly::term(2, e, Scalar::one(p));
    };

    std::array<std::vector<JetPoly>, 2> b;
    for (int j = 0; j < 6; ++j) {
        MultiPoly base0 = rr(1, 0) * lambda_p.at(0, j) + rr(0, 1) * lambda_p.at(1, j);
        JetPoly j0(base0, ncoeff);
        j0.set_grad(2 * j, rr(1, 0));
        j0.set_grad(2 * j + 1, rr(0, 1));
        b[0].push_back(std::move(j0));

        MultiPoly base1(2, p);
        for (int i = 0; i <= v; ++i) base1 += rr(v - i, i) * lambda_p.at(2 + i, j);
        JetPoly j1(base1, ncoeff);
        for (int i = 0; i <= v; ++i) j1.set_grad(12 + (v + 1) * j + i, rr(v - i, i));
        b[1].push_back(std::move(j1));
    }

    std::array<JetPoly, 4> eqs = fano_equations_jet(f, b);
    for (int e = 0; e < 4; ++e) {
        if (!eqs[e].base().is_zero()) {
            const auto& t = *eqs[e].base().terms().begin();
            throw Error("fano_deformation_dim: cubic does not contain the scroll; equation " +
                        std::to_string(e + 1) + " has nonvanishing monomial r^" +
                        std::to_string(t.first[0]) + " s^" + std::to_string(t.first[1]));
        }
    }

    const std::array<int, 4> degs = {3, v + 2, 2 * v + 1, 3 * v};
    size_t eq_count = 0;
    for (int d : degs) eq_count += d + 1;

    ExactMatrix sys(eq_count, ncoeff, p);
    size_t row = 0;
    for (int e = 0; e < 4; ++e) {
        for (int i = 0; i <= degs[e]; ++i, ++row) {
            Exp mono(2, 0);
            mono[0] = static_cast<uint16_t>(degs[e] - i);
            mono[1] = static_cast<uint16_t>(i);
            for (size_t k = 0; k < ncoeff; ++k) sys.at(row, k) = eqs[e].grad(k).coeff(mono);
        }
    }

    FanoDeformationReport rep;
    rep.coefficient_count = ncoeff;
    rep.equation_count = eq_count;
    rep.rank = sys.rank();
    rep.dimension = static_cast<int64_t>(ncoeff) - static_cast<int64_t>(rep.rank) -
                    (rep.sym_gl2 + rep.sym_aut_p1 + rep.sym_rescale);
    return rep;
}

int64_t selfint_from_double_points(int64_t D, int64_t r_dp) {
    if (D < 3) throw Error("selfint_from_double_points: requires D >= 3");
    if (r_dp < 0) throw Error("selfint_from_double_points: requires r >= 0");
    return 2 * r_dp + 3 * D - 2;
}

int64_t discriminant(int64_t D, int64_t selfint) { return 3 * selfint - D * D; }

UnirationalDegree unirational_degree(int64_t D, int64_t g_H, int64_t selfint) {
    UnirationalDegree out;
    out.value = BigRat(D * (D - 2), 2) + (2 - 2 * g_H) - BigRat(selfint, 2);
    out.positive = out.value > 0;
    return out;
}

DiscriminantRecord discriminant_table(int64_t n) {
    if (n < 2) throw Error("discriminant_table: requires n >= 2");
    DiscriminantRecord rec;
    rec.n = n;
    rec.degree = 2 * n + 1;
    rec.expected_sings = n * (n - 2);
    rec.selfint = selfint_from_double_points(rec.degree, rec.expected_sings);
    rec.disc = discriminant(rec.degree, rec.selfint);
    int64_t alt = 2 * (n * n + n + 1);
    if (rec.disc != alt)
        throw Error("discriminant_table: the two discriminant identities disagree");
    if (rec.selfint != 2 * n * n + 2 * n + 1)
        throw Error("discriminant_table: self-intersection identity failed");
    rec.section_genus = 0;
    auto rho = unirational_degree(rec.degree, rec.section_genus, rec.selfint);
    rec.rho = rho.value;
    rec.four_divides_disc = rec.disc % 4 == 0;
    BigInt num = boost::multiprecision::numerator(rec.rho);
    BigInt den = boost::multiprecision::denominator(rec.rho);
    rec.rho_odd = (den == 1) && (num % 2 != 0);
    return rec;
}

}  // namespace scrollsmith
