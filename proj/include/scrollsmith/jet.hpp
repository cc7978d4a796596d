#ifndef SCROLLSMITH_JET_HPP
#define SCROLLSMITH_JET_HPP

#include <vector>

#include "scrollsmith/multipoly.hpp"

namespace scrollsmith {

/// First-order jet: a base polynomial plus one gradient polynomial per
/// deformation coefficient. Products truncate at first order,
/// (a + eps x)(b + eps y) -> ab + eps (a y + b x), so the gradient of any
/// expression is its directional derivative in the coefficients.
class JetPoly {
public:
    JetPoly(MultiPoly base, size_t ncoeffs)
        : base_(std::move(base)), grad_(ncoeffs, MultiPoly(base_.nvars(), base_.modulus())) {}

    static JetPoly constant(size_t nvars, const Scalar& c, size_t ncoeffs) {
        return JetPoly(MultiPoly::constant(nvars, c), ncoeffs);
    }

    size_t ncoeffs() const { return grad_.size(); }
    size_t nvars() const { return base_.nvars(); }
    uint64_t modulus() const { return base_.modulus(); }

    const MultiPoly& base() const { return base_; }
    const MultiPoly& grad(size_t k) const { return grad_.at(k); }
    void set_grad(size_t k, MultiPoly g);

    JetPoly operator+(const JetPoly& o) const;
    JetPoly operator-(const JetPoly& o) const;
    JetPoly operator*(const JetPoly& o) const;
    JetPoly operator*(const Scalar& c) const;
    JetPoly& operator+=(const JetPoly& o) { return *this = *this + o; }

    JetPoly pow(unsigned e) const;

private:
    void require_compatible(const JetPoly& o) const;

    MultiPoly base_;
    std::vector<MultiPoly> grad_;
};

/// First-order-correct substitution of jets into a polynomial: the base is
/// f at the base points and the gradient is the directional derivative.
JetPoly jet_eval(const MultiPoly& f, const std::vector<JetPoly>& args);

}  // namespace scrollsmith

#endif
