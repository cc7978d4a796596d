#ifndef SCROLLSMITH_CONSTRUCT_HPP
#define SCROLLSMITH_CONSTRUCT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "scrollsmith/scroll.hpp"

namespace scrollsmith {

/// Singularity budget: four chain sizes k1 >= k2 >= k3 >= k4 >= 1 with
/// sum C(k_i, 2) = r, every triple summing to at most v, and pairwise
/// distinct ruling parameters across the four lists.
struct ChainPlan {
    int r = 0;
    std::array<int, 4> k{1, 1, 1, 1};
    std::array<std::vector<int64_t>, 4> params;

    void validate(int v) const;
};

/// All quadruples k1 >= k2 >= k3 >= k4 >= 1 with sum C(k_i,2) = r and
/// k1 + k2 + k3 <= v, lexicographically descending. Empty iff infeasible.
std::vector<std::array<int, 4>> four_square_plans(int r, int v);

/// Default ruling parameters: the smallest distinct nonnegative integers,
/// consecutive runs per chain, optionally shifted.
ChainPlan make_default_plan(int r, int v, const std::array<int, 4>& k, int64_t shift = 0);

/// The k_i x (v+1) Vandermonde row block on one parameter list (rationals).
ExactMatrix vandermonde_block(const std::vector<int64_t>& params, int v);

/// Kernel bases of the four Vandermonde blocks; basis i has v+1-k_i vectors.
std::array<std::vector<std::vector<Scalar>>, 4> vandermonde_kernels(const ScrollSpec& spec,
                                                                    const ChainPlan& plan);

/// Step-1/2 output: four vectors in the curve block, v_i drawn from the
/// intersection of the other three kernels but outside its own, passing the
/// curve-tangent rank test over every scan prime.
struct FrameChoice {
    ChainPlan plan;
    std::array<std::vector<Scalar>, 4> b_vectors;  // length v+1, rational
    uint64_t seed = 0;
};

FrameChoice pick_frame(const ScrollSpec& spec, const ChainPlan& plan, uint64_t seed,
                       const std::vector<uint64_t>& primes);

/// Completes the frame with two random full-length columns, accepted only
/// when Lambda has rank 6, every planned chain block drops to rank 3, and
/// the tangent-clearance scan passes for every prime.
ProjectionMatrix complete_projection(const ScrollSpec& spec, const FrameChoice& frame,
                                     uint64_t seed, const std::vector<uint64_t>& primes);

struct ConstructResult {
    ScrollSpec spec;
    ChainPlan plan;
    ProjectionMatrix lambda;                   // primitive integer columns over Q
    std::vector<SingularScrollReport> reports; // one per verification prime
    uint64_t seed = 0;
};

/// End-to-end pipeline: plan, frame, completion, then a pair scan per
/// verification prime. Every returned report has pair count >= r and
/// tangent clearance true. Throws PlanInfeasibleError when no quadruple
/// fits, SearchFailedError when the retry budgets run out.
ConstructResult construct_scroll(int r, int v, uint64_t seed, const std::vector<uint64_t>& primes);

/// Per-stage retry budget of the randomized searches.
constexpr int kRetryBudget = 100;

}  // namespace scrollsmith

#endif
