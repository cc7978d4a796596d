#ifndef SCROLLSMITH_GROEBNER_HPP
#define SCROLLSMITH_GROEBNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "scrollsmith/multipoly.hpp"

namespace scrollsmith {

/// Total multiplicative monomial order with 1 minimal.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    /// Eliminates the first `first_block` variables: grevlex on that block,
    /// ties broken by grevlex on the rest.
    static MonomialOrder block_elimination(size_t first_block) {
        return MonomialOrder(Kind::Block, first_block);
    }

    Kind kind() const { return kind_; }
    size_t block() const { return block_; }

    /// strict a < b
    bool less(const Exp& a, const Exp& b) const;
    bool equal_kind(const MonomialOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }
    std::string name() const;

private:
    MonomialOrder(Kind k, size_t b) : kind_(k), block_(b) {}
    Kind kind_;
    size_t block_;
};

/// Generator set with the order it was computed under. `reduced` marks the
/// unique reduced Groebner basis: monic leads, no lead divides any monomial
/// of another generator.
struct IdealBasis {
    std::vector<MultiPoly> gens;
    MonomialOrder order = MonomialOrder::grevlex();
    bool reduced = false;

    size_t nvars() const { return gens.empty() ? 0 : gens[0].nvars(); }
    uint64_t modulus() const { return gens.empty() ? 0 : gens[0].modulus(); }
};

/// Buchberger's algorithm: normal selection strategy, both classical
/// pair-skipping criteria, full interreduction at the end. The empty
/// generator list is the zero ideal, not an error.
IdealBasis buchberger(std::vector<MultiPoly> gens, const MonomialOrder& order);

/// Normal form of f against a (not necessarily reduced) basis: every term
/// is reduced until no leading monomial of the basis divides it.
MultiPoly normal_form(const MultiPoly& f, const IdealBasis& basis);

bool ideal_member(const MultiPoly& f, const IdealBasis& groebner_basis);

/// Vector-space dimension of the degree-d slice of a homogeneous ideal:
/// (# degree-d monomials) - (# standard monomials of degree d).
/// Computes a Groebner basis internally when `I` is not reduced.
size_t graded_piece_dim(const IdealBasis& I, int d);

/// True iff the projective zero locus over the algebraic closure is empty:
/// every variable has some pure power in the leading-term ideal.
bool is_projectively_empty(const IdealBasis& I);

/// Eliminate the first `drop` variables. Requires (or recomputes under) the
/// matching block order; returns a basis in the ring of the kept variables.
IdealBasis eliminate(const IdealBasis& I, size_t drop);

/// Leading exponent of a nonzero polynomial under an order.
Exp leading_exp(const MultiPoly& f, const MonomialOrder& order);

}  // namespace scrollsmith

#endif
