#include "scrollsmith/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace scrollsmith {

bool MonomialOrder::less(const Exp& a, const Exp& b) const {
    if (a.size() != b.size()) throw Error("order: arity mismatch");
    switch (kind_) {
        case Kind::Lex: {
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        }
        case Kind::Grevlex: {
            int da = exp_degree(a), db = exp_degree(b);
            if (da != db) return da < db;
            for (size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i]) return a[i] > b[i];
            return false;
        }
        case Kind::Block: {
            int da = 0, db = 0;
            for (size_t i = 0; i < block_; ++i) {
                da += a[i];
                db += b[i];
            }
            if (da != db) return da < db;
            for (size_t i = block_; i-- > 0;)
                if (a[i] != b[i]) return a[i] > b[i];
            int ta = 0, tb = 0;
            for (size_t i = block_; i < a.size(); ++i) {
                ta += a[i];
                tb += b[i];
            }
            if (ta != tb) return ta < tb;
            for (size_t i = a.size(); i-- > block_;)
                if (a[i] != b[i]) return a[i] > b[i];
            return false;
        }
    }
    return false;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::Grevlex: return "grevlex";
        case Kind::Lex: return "lex";
        case Kind::Block: return "block(" + std::to_string(block_) + ")";
    }
    return "?";
}

Exp leading_exp(const MultiPoly& f, const MonomialOrder& order) {
    if (f.is_zero()) throw Error("leading_exp of zero");
    const Exp* best = nullptr;
    for (const auto& [e, c] : f.terms())
        if (!best || order.less(*best, e)) best = &e;
    return *best;
}

namespace {

struct DescCmp {
    const MonomialOrder* ord;
    bool operator()(const Exp& a, const Exp& b) const { return ord->less(b, a); }
};

using OrdMap = std::map<Exp, Scalar, DescCmp>;

struct GbPoly {
    std::vector<std::pair<Exp, Scalar>> terms;  // descending, monic lead
    const Exp& lead() const { return terms.front().first; }
};

OrdMap to_ordmap(const MultiPoly& f, const MonomialOrder& ord) {
    OrdMap m{DescCmp{&ord}};
    for (const auto& [e, c] : f.terms()) m.emplace(e, c);
    return m;
}

MultiPoly from_ordmap(const OrdMap& m, size_t nvars, uint64_t mod) {
    MultiPoly f(nvars, mod);
    for (const auto& [e, c] : m) f.add_term(e, c);
    return f;
}

GbPoly make_gb_poly(const MultiPoly& f, const MonomialOrder& ord) {
    OrdMap m = to_ordmap(f, ord);
    GbPoly g;
    g.terms.assign(m.begin(), m.end());
    Scalar lc_inv = g.terms.front().second.inverse();
    for (auto& [e, c] : g.terms) c = c * lc_inv;
    return g;
}

bool divides(const Exp& a, const Exp& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

void ordmap_axpy(OrdMap& acc, const Scalar& factor, const Exp& shift, const GbPoly& g) {
    // acc -= factor * x^shift * g
    for (const auto& [e, c] : g.terms) {
        Exp key = exp_add(e, shift);
        Scalar delta = factor * c;
        auto it = acc.find(key);
        if (it == acc.end()) {
            acc.emplace(std::move(key), -delta);
        } else {
            it->second -= delta;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

// Full normal form: reduces every term. Reducer choice: lowest index.
void reduce_full(OrdMap& work, OrdMap& out, const std::vector<GbPoly>& basis) {
    while (!work.empty()) {
        const Exp e = work.begin()->first;
        const Scalar c = work.begin()->second;
        const GbPoly* red = nullptr;
        for (const auto& g : basis)
            if (divides(g.lead(), e)) {
                red = &g;
                break;
            }
        if (!red) {
            out.emplace(e, c);
            work.erase(work.begin());
            continue;
        }
        ordmap_axpy(work, c, exp_sub(e, red->lead()), *red);  // kills the lead
    }
}

MultiPoly nf_against(const MultiPoly& f, const std::vector<GbPoly>& basis, const MonomialOrder& ord) {
    OrdMap work = to_ordmap(f, ord);
    OrdMap out{DescCmp{&ord}};
    reduce_full(work, out, basis);
    return from_ordmap(out, f.nvars(), f.modulus());
}

}  // namespace

IdealBasis buchberger(std::vector<MultiPoly> gens, const MonomialOrder& order) {
    IdealBasis out;
    out.order = order;
    out.reduced = true;

    size_t nvars = 0;
    uint64_t mod = 0;
    std::vector<MultiPoly> nonzero;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (nonzero.empty()) {
            nvars = g.nvars();
            mod = g.modulus();
        } else if (g.nvars() != nvars) {
            throw Error("buchberger: generators in different rings");
        } else if (g.modulus() != mod) {
            throw ContextMismatchError("buchberger: generator context mismatch");
        }
        nonzero.push_back(std::move(g));
    }
    if (nonzero.empty()) return out;  // the zero ideal

    std::vector<GbPoly> G;
    for (auto& g : nonzero) G.push_back(make_gb_poly(g.primitive_part(), order));

    // pair queue: (lcm degree, i, j) ascending; treated pairs recorded for
    // the chain criterion
    std::set<std::tuple<int, size_t, size_t>> queue;
    std::set<std::pair<size_t, size_t>> pending;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Exp l = exp_lcm(G[i].lead(), G[j].lead());
            queue.emplace(exp_degree(l), i, j);
            pending.emplace(i, j);
        }
    };
    for (size_t j = 1; j < G.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({i, j});

        const Exp& li = G[i].lead();
        const Exp& lj = G[j].lead();
        Exp l = exp_lcm(li, lj);

        // product criterion: coprime leads
        if (l == exp_add(li, lj)) continue;
        // chain criterion
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!divides(G[k].lead(), l)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip) continue;

        OrdMap s{DescCmp{&order}};
        ordmap_axpy(s, -Scalar::one(mod), exp_sub(l, li), G[i]);
        ordmap_axpy(s, Scalar::one(mod), exp_sub(l, lj), G[j]);
        OrdMap red{DescCmp{&order}};
        reduce_full(s, red, G);
        if (red.empty()) continue;
        MultiPoly rem = from_ordmap(red, nvars, mod).primitive_part();
        G.push_back(make_gb_poly(rem, order));
        push_pairs(G.size() - 1);
    }

    // minimalize: drop any generator whose lead is divisible by another's
    std::vector<GbPoly> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t k = 0; k < G.size() && !redundant; ++k) {
            if (k == i) continue;
            if (divides(G[k].lead(), G[i].lead())) {
                // on equal leads keep the earlier one
                if (G[k].lead() == G[i].lead())
                    redundant = k < i;
                else
                    redundant = true;
            }
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // tail-reduce each against the rest
    std::vector<MultiPoly> final_polys;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<GbPoly> others;
        for (size_t k = 0; k < minimal.size(); ++k)
            if (k != i) others.push_back(minimal[k]);
        MultiPoly f(nvars, mod);
        for (const auto& [e, c] : minimal[i].terms) f.add_term(e, c);
        MultiPoly r = others.empty() ? f : nf_against(f, others, order);
        // monic normalization
        Scalar lc = r.coeff(leading_exp(r, order));
        final_polys.push_back(r * lc.inverse());
    }
    std::sort(final_polys.begin(), final_polys.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return order.less(leading_exp(b, order), leading_exp(a, order));
    });
    out.gens = std::move(final_polys);
    return out;
}

MultiPoly normal_form(const MultiPoly& f, const IdealBasis& basis) {
    if (basis.gens.empty() || f.is_zero()) return f;
    std::vector<GbPoly> G;
    for (const auto& g : basis.gens)
        if (!g.is_zero()) G.push_back(make_gb_poly(g, basis.order));
    return nf_against(f, G, basis.order);
}

bool ideal_member(const MultiPoly& f, const IdealBasis& gb) {
    return normal_form(f, gb).is_zero();
}

namespace {

IdealBasis ensure_groebner(const IdealBasis& I) {
    if (I.reduced) return I;
    return buchberger(I.gens, I.order);
}

}  // namespace

size_t graded_piece_dim(const IdealBasis& I, int d) {
    for (const auto& g : I.gens)
        if (!g.is_homogeneous())
            throw Error("graded_piece_dim: non-homogeneous generator");
    if (d < 0) throw Error("graded_piece_dim: negative degree");
    IdealBasis gb = ensure_groebner(I);
    if (gb.gens.empty()) return 0;
    const size_t nvars = gb.nvars();
    std::vector<Exp> leads;
    for (const auto& g : gb.gens) leads.push_back(leading_exp(g, gb.order));
    size_t standard = 0, total = 0;
    for (const Exp& m : monomials_of_degree(nvars, d)) {
        ++total;
        bool in_lt = false;
        for (const Exp& l : leads)
            if (divides(l, m)) {
                in_lt = true;
                break;
            }
        if (!in_lt) ++standard;
    }
    return total - standard;
}

bool is_projectively_empty(const IdealBasis& I) {
    for (const auto& g : I.gens)
        if (!g.is_homogeneous())
            throw Error("is_projectively_empty: non-homogeneous generator");
    IdealBasis gb = ensure_groebner(I);
    if (gb.gens.empty()) return false;
    const size_t nvars = gb.nvars();
    std::vector<bool> covered(nvars, false);
    for (const auto& g : gb.gens) {
        Exp l = leading_exp(g, gb.order);
        int support = -1;
        bool pure = true;
        for (size_t i = 0; i < nvars; ++i) {
            if (!l[i]) continue;
            if (support != -1) {
                pure = false;
                break;
            }
            support = static_cast<int>(i);
        }
        if (pure && support >= 0) covered[support] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

IdealBasis eliminate(const IdealBasis& I, size_t drop) {
    const size_t nvars = I.nvars();
    if (!I.gens.empty() && drop >= nvars) throw Error("eliminate: empty keep set");
    MonomialOrder block = MonomialOrder::block_elimination(drop);
    IdealBasis gb = (I.reduced && I.order.equal_kind(block)) ? I : buchberger(I.gens, block);

    IdealBasis out;
    out.order = MonomialOrder::grevlex();
    out.reduced = true;
    for (const auto& g : gb.gens) {
        bool kept_only = true;
        for (const auto& [e, c] : g.terms())
            for (size_t i = 0; i < drop && kept_only; ++i)
                if (e[i]) kept_only = false;
        if (!kept_only) continue;
        MultiPoly h(nvars - drop, g.modulus());
        for (const auto& [e, c] : g.terms())
            h.add_term(Exp(e.begin() + drop, e.end()), c);
        out.gens.push_back(std::move(h));
    }
    return out;
}

}  // namespace scrollsmith
