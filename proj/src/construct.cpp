#include "scrollsmith/construct.hpp"

#include <algorithm>
#include <set>

#include "scrollsmith/dims.hpp"
#include "scrollsmith/errors.hpp"
#include "scrollsmith/rng.hpp"

namespace scrollsmith {

namespace {

uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
    SplitMix64 g(seed);
    uint64_t x = g.next();
    x = SplitMix64(x ^ (a + 1)).next();
    x = SplitMix64(x ^ (b + 1)).next();
    x = SplitMix64(x ^ (c + 1)).next();
    return x;
}

}  // namespace

void ChainPlan::validate(int v) const {
    if (!(k[0] >= k[1] && k[1] >= k[2] && k[2] >= k[3] && k[3] >= 1))
        throw Error("chain plan: sizes must satisfy k1 >= k2 >= k3 >= k4 >= 1");
    int sum = 0;
    for (int ki : k) sum += static_cast<int>(dims::binomial2(ki));
    if (sum != r) throw Error("chain plan: sum C(k_i,2) != r");
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                if (a == b || b == c || a == c) continue;
                if (k[a] + k[b] + k[c] > v)
                    throw PlanInfeasibleError("chain plan: a triple of chain sizes exceeds v");
            }
    std::set<int64_t> seen;
    for (int i = 0; i < 4; ++i) {
        if (params[i].size() != static_cast<size_t>(k[i]))
            throw Error("chain plan: parameter list length != k_i");
        for (int64_t s : params[i])
            if (!seen.insert(s).second) throw Error("chain plan: ruling parameters collide");
    }
}

std::vector<std::array<int, 4>> four_square_plans(int r, int v) {
    if (r < 0) throw Error("four_square_plans: r must be nonnegative");
    if (v < 4) throw Error("four_square_plans: v must be >= 4");
    int kmax = 1;
    while (dims::binomial2(kmax + 1) <= r) ++kmax;
    kmax = std::min<int64_t>(kmax, v - 2);  // k2, k3 >= 1 force k1 <= v-2
    if (r == 0) kmax = 1;

    std::vector<std::array<int, 4>> plans;
    for (int k1 = kmax; k1 >= 1; --k1)
        for (int k2 = k1; k2 >= 1; --k2)
            for (int k3 = k2; k3 >= 1; --k3) {
                if (k1 + k2 + k3 > v) continue;
                int partial = static_cast<int>(dims::binomial2(k1) + dims::binomial2(k2) +
                                               dims::binomial2(k3));
                if (partial > r) continue;
                for (int k4 = k3; k4 >= 1; --k4) {
                    if (partial + dims::binomial2(k4) == r) plans.push_back({k1, k2, k3, k4});
                }
            }
    return plans;
}

ChainPlan make_default_plan(int r, int v, const std::array<int, 4>& k, int64_t shift) {
    ChainPlan plan;
    plan.r = r;
    plan.k = k;
    int64_t next = shift;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < k[i]; ++j) plan.params[i].push_back(next++);
    plan.validate(v);
    return plan;
}

ExactMatrix vandermonde_block(const std::vector<int64_t>& params, int v) {
    ExactMatrix m(params.size(), v + 1, 0);
    for (size_t i = 0; i < params.size(); ++i) {
        Scalar s = Scalar::of_int(params[i], 0);
        Scalar pw = Scalar::one(0);
        for (int j = 0; j <= v; ++j) {
            m.at(i, j) = pw;
            pw = pw * s;
        }
    }
    return m;
}

std::array<std::vector<std::vector<Scalar>>, 4> vandermonde_kernels(const ScrollSpec& spec,
                                                                    const ChainPlan& plan) {
    if (spec.u != 1) throw UnsupportedError("vandermonde_kernels: construction needs u = 1");
    plan.validate(spec.v);
    std::array<std::vector<std::vector<Scalar>>, 4> out;
    for (int i = 0; i < 4; ++i)
        out[i] = vandermonde_block(plan.params[i], spec.v).kernel_basis();
    return out;
}

namespace {

// curve-block tangent rank test of the four chosen vectors over one prime:
// for every s in P^1(F_p) the 2x4 matrix (theta(s).v_i ; theta'(s).v_i)
// must keep rank 2, so the four orthogonal hyperplanes meet the tangent
// developable of the curve block only where allowed.
bool frame_tangent_test(const std::array<std::vector<Scalar>, 4>& b_vectors, int v, uint64_t p) {
    std::array<std::vector<Scalar>, 4> red;
    for (int i = 0; i < 4; ++i) {
        red[i].reserve(b_vectors[i].size());
        for (const Scalar& x : b_vectors[i]) red[i].push_back(x.reduced_mod(p));
    }
    auto theta_rows = [&](const P1Param& s) {
        std::vector<Scalar> th(v + 1, Scalar::zero(p)), dth(v + 1, Scalar::zero(p));
        if (s.inf) {
            th[v] = Scalar::one(p);
            if (v >= 1) dth[v - 1] = Scalar::one(p);
        } else {
            Scalar pw = Scalar::one(p);
            for (int j = 0; j <= v; ++j) {
                th[j] = pw;
                if (j + 1 <= v) dth[j + 1] = pw * Scalar::of_int(j + 1, p);
                pw = pw * s.value;
            }
        }
        return std::make_pair(th, dth);
    };
    auto dot = [](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
        Scalar acc = Scalar::zero(a[0].modulus());
        for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
        return acc;
    };
    for (uint64_t si = 0; si <= p; ++si) {
        P1Param s = (si == p) ? P1Param::infinity(p) : P1Param::of_int(static_cast<int64_t>(si), p);
        auto [th, dth] = theta_rows(s);
        ExactMatrix m(2, 4, p);
        for (int i = 0; i < 4; ++i) {
            m.at(0, i) = dot(th, red[i]);
            m.at(1, i) = dot(dth, red[i]);
        }
        if (m.rank() != 2) return false;
    }
    return true;
}

std::vector<Scalar> embed_b_vector(const std::vector<Scalar>& b, int D) {
    std::vector<Scalar> full(D + 2, Scalar::zero(0));
    for (size_t i = 0; i < b.size(); ++i) full[2 + i] = b[i];
    return full;
}

}  // namespace

FrameChoice pick_frame(const ScrollSpec& spec, const ChainPlan& plan, uint64_t seed,
                       const std::vector<uint64_t>& primes) {
    spec.validate_singular_range();
    if (spec.u != 1) throw UnsupportedError("pick_frame: construction needs u = 1");
    plan.validate(spec.v);

    // intersection kernels: K_i = ker of the three other blocks stacked
    std::array<std::vector<std::vector<Scalar>>, 4> inter;
    std::array<ExactMatrix, 4> blocks = {
        vandermonde_block(plan.params[0], spec.v), vandermonde_block(plan.params[1], spec.v),
        vandermonde_block(plan.params[2], spec.v), vandermonde_block(plan.params[3], spec.v)};
    for (int i = 0; i < 4; ++i) {
        ExactMatrix stacked(0, spec.v + 1, 0);
        bool first = true;
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            stacked = first ? blocks[j] : stacked.vstack(blocks[j]);
            first = false;
        }
        inter[i] = stacked.kernel_basis();
        if (inter[i].empty())
            throw PlanInfeasibleError("pick_frame: kernel intersection " + std::to_string(i) +
                                      " is empty (triple bound violated)");
    }

    SplitMix64 rng(derive_seed(seed, 1, 0, 0));
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        FrameChoice frame;
        frame.plan = plan;
        frame.seed = seed;
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            // random small-integer combination of the intersection kernel
            std::vector<Scalar> v(spec.v + 1, Scalar::zero(0));
            bool nonzero = false;
            for (const auto& basis_vec : inter[i]) {
                int64_t c = rng.range(-4, 4);
                if (c == 0) continue;
                nonzero = true;
                Scalar cs = Scalar::of_int(c, 0);
                for (size_t t = 0; t < v.size(); ++t) v[t] += cs * basis_vec[t];
            }
            if (!nonzero) {
                ok = false;
                break;
            }
            // must not lie in its own block's kernel
            auto prod = mat_vec(blocks[i], v);
            bool in_own = std::all_of(prod.begin(), prod.end(),
                                      [](const Scalar& s) { return s.is_zero(); });
            if (in_own) {
                ok = false;
                break;
            }
            frame.b_vectors[i] = primitive_integer_vector(v);
        }
        if (!ok) continue;

        // the four embedded vectors must be independent
        std::vector<std::vector<Scalar>> rows;
        for (int i = 0; i < 4; ++i) rows.push_back(frame.b_vectors[i]);
        if (span_rank(rows, 0) != 4) continue;

        bool clear = true;
        for (uint64_t p : primes)
            if (!frame_tangent_test(frame.b_vectors, spec.v, p)) {
                clear = false;
                break;
            }
        if (clear) return frame;
    }
    throw SearchFailedError("pick_frame",
                            "pick_frame: no frame passed the tangent tests within " +
                                std::to_string(kRetryBudget) + " retries");
}

ProjectionMatrix complete_projection(const ScrollSpec& spec, const FrameChoice& frame,
                                     uint64_t seed, const std::vector<uint64_t>& primes) {
    spec.validate_singular_range();
    if (spec.N != 5) throw UnsupportedError("complete_projection: target must be P^5");
    const int D = spec.D();
    SplitMix64 rng(derive_seed(seed, 2, 0, 0));

    // ruling matrices of the planned chains, over the rationals
    std::array<ExactMatrix, 4> chains = {ExactMatrix(0, 0, 0), ExactMatrix(0, 0, 0),
                                         ExactMatrix(0, 0, 0), ExactMatrix(0, 0, 0)};
    for (int i = 0; i < 4; ++i) {
        std::vector<P1Param> sv;
        for (int64_t s : frame.plan.params[i]) sv.push_back(P1Param::of_int(s, 0));
        chains[i] = ruling_matrix(spec, sv, 0);
    }

    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        ExactMatrix lambda(D + 2, 6, 0);
        for (int i = 0; i < 4; ++i) {
            auto col = embed_b_vector(frame.b_vectors[i], D);
            for (int rrow = 0; rrow < D + 2; ++rrow) lambda.at(rrow, i) = col[rrow];
        }
        for (int j = 4; j < 6; ++j) {
            std::vector<Scalar> col(D + 2, Scalar::zero(0));
            for (int rrow = 0; rrow < D + 2; ++rrow)
                col[rrow] = Scalar::of_int(rng.range(-9, 9), 0);
            col = primitive_integer_vector(col);
            for (int rrow = 0; rrow < D + 2; ++rrow) lambda.at(rrow, j) = col[rrow];
        }

        if (lambda.rank() != 6) continue;

        // each planned chain block must map to a plane: only the i-th and the
        // two completion columns of chains[i] * Lambda are nonzero, so rank <= 3
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
            if ((chains[i] * lambda).rank() != 3) ok = false;
        if (!ok) continue;

        for (uint64_t p : primes) {
            ExactMatrix lp = lambda.reduced_mod(p);
            if (lp.rank() != 6 || !tangent_clearance(spec, lp, p)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        return ProjectionMatrix(spec, lambda);
    }
    throw SearchFailedError("complete_projection",
                            "complete_projection: no completion passed rank and clearance "
                            "checks within " +
                                std::to_string(kRetryBudget) + " retries");
}

ConstructResult construct_scroll(int r, int v, uint64_t seed,
                                 const std::vector<uint64_t>& primes) {
    if (primes.empty()) throw Error("construct_scroll: need at least one verification prime");
    ScrollSpec spec{1, v, 5};
    spec.validate_singular_range();

    auto quads = four_square_plans(r, v);
    if (quads.empty())
        throw PlanInfeasibleError("construct_scroll: no chain quadruple realizes r=" +
                                  std::to_string(r) + " within v=" + std::to_string(v));

    std::string last_failure = "no attempt made";
    for (size_t qi = 0; qi < quads.size(); ++qi) {
        for (int64_t shift = 0; shift < 3; ++shift) {
            ChainPlan plan;
            try {
                plan = make_default_plan(r, v, quads[qi], shift * (v + 1));
            } catch (const Error&) {
                continue;
            }
            // reject primes colliding with the parameter set
            for (uint64_t p : primes) {
                std::set<uint64_t> residues;
                for (const auto& list : plan.params)
                    for (int64_t s : list)
                        if (!residues.insert(((s % static_cast<int64_t>(p)) + p) % p).second)
                            throw BadReductionError(
                                "construct_scroll: prime " + std::to_string(p) +
                                " collapses two planned ruling parameters");
            }
            try {
                uint64_t stage_seed = derive_seed(seed, 3, qi, static_cast<uint64_t>(shift));
                FrameChoice frame = pick_frame(spec, plan, stage_seed, primes);
                ProjectionMatrix lambda = complete_projection(spec, frame, stage_seed, primes);

                ConstructResult res{spec, plan, lambda, {}, seed};
                bool good = true;
                for (uint64_t p : primes) {
                    auto rep = singular_pairs(spec, lambda.lambda.reduced_mod(p), p);
                    if (rep.pair_count() < static_cast<size_t>(r) || !rep.clearance) {
                        good = false;
                        last_failure = "scan at p=" + std::to_string(p) + " found " +
                                       std::to_string(rep.pair_count()) + " pairs (need " +
                                       std::to_string(r) + ")";
                        break;
                    }
                    res.reports.push_back(std::move(rep));
                }
                if (good) return res;
            } catch (const SearchFailedError& e) {
                last_failure = e.what();
            }
        }
    }
    throw SearchFailedError("construct_scroll",
                            "construct_scroll: all plans exhausted; last failure: " + last_failure);
}

}  // namespace scrollsmith
