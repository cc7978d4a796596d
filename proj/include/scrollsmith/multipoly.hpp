#ifndef SCROLLSMITH_MULTIPOLY_HPP
#define SCROLLSMITH_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scrollsmith/scalar.hpp"

namespace scrollsmith {

/// Dense exponent vector, one slot per variable. Variable counts stay
/// small (<= 17) in every pipeline, so dense storage wins.
using Exp = std::vector<uint16_t>;

inline int exp_degree(const Exp& e) {
    int d = 0;
    for (uint16_t x : e) d += x;
    return d;
}

/// Multivariate polynomial with exact coefficients over a fixed scalar
/// context. Zero coefficients are never stored. Terms are keyed by
/// exponent vector in a std::map, so iteration order is deterministic
/// and independent of any monomial order.
class MultiPoly {
public:
    MultiPoly(size_t nvars, uint64_t modulus) : nvars_(nvars), mod_(modulus) {}

    static MultiPoly constant(size_t nvars, const Scalar& c);
    static MultiPoly variable(size_t nvars, size_t i, uint64_t modulus);
    /// c * x^e
    static MultiPoly term(size_t nvars, const Exp& e, const Scalar& c);

    size_t nvars() const { return nvars_; }
    uint64_t modulus() const { return mod_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exp, Scalar>& terms() const { return terms_; }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    void add_term(const Exp& e, const Scalar& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const Scalar& c) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o) { return *this += -o; }
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(unsigned e) const;

    Scalar coeff(const Exp& e) const;

    /// Partial derivative with respect to variable i.
    MultiPoly partial(size_t i) const;

    Scalar eval(const std::vector<Scalar>& point) const;

    /// Substitute a polynomial for every variable (classical composition).
    MultiPoly subst(const std::vector<MultiPoly>& args) const;

    /// Reduce rational coefficients modulo p.
    MultiPoly reduced_mod(uint64_t p) const;

    /// Scale so the content is 1 (rationals: primitive integer
    /// coefficients with positive leading-by-map-order sign).
    MultiPoly primitive_part() const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    void check_arity(const Exp& e) const;

    size_t nvars_;
    uint64_t mod_;
    std::map<Exp, Scalar> terms_;
};

/// All exponent vectors of total degree d in nvars variables, in
/// deterministic (map-key ascending) order.
std::vector<Exp> monomials_of_degree(size_t nvars, int d);

}  // namespace scrollsmith

#endif
