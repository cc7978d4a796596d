#include "scrollsmith/jet.hpp"

namespace scrollsmith {

void JetPoly::set_grad(size_t k, MultiPoly g) {
    if (g.nvars() != base_.nvars() || g.modulus() != base_.modulus())
        throw Error("jet gradient ring mismatch");
    grad_.at(k) = std::move(g);
}

void JetPoly::require_compatible(const JetPoly& o) const {
    if (grad_.size() != o.grad_.size()) throw Error("jet coefficient count mismatch");
    if (base_.nvars() != o.base_.nvars() || base_.modulus() != o.base_.modulus())
        throw ContextMismatchError("jet ring mismatch");
}

JetPoly JetPoly::operator+(const JetPoly& o) const {
    require_compatible(o);
    JetPoly r(base_ + o.base_, grad_.size());
    for (size_t k = 0; k < grad_.size(); ++k) {
        if (grad_[k].is_zero() && o.grad_[k].is_zero()) continue;
        r.grad_[k] = grad_[k] + o.grad_[k];
    }
    return r;
}

JetPoly JetPoly::operator-(const JetPoly& o) const {
    require_compatible(o);
    JetPoly r(base_ - o.base_, grad_.size());
    for (size_t k = 0; k < grad_.size(); ++k) {
        if (grad_[k].is_zero() && o.grad_[k].is_zero()) continue;
        r.grad_[k] = grad_[k] - o.grad_[k];
    }
    return r;
}

JetPoly JetPoly::operator*(const JetPoly& o) const {
    require_compatible(o);
    JetPoly r(base_ * o.base_, grad_.size());
    for (size_t k = 0; k < grad_.size(); ++k) {
        const bool a = !grad_[k].is_zero(), b = !o.grad_[k].is_zero();
        if (!a && !b) continue;
        MultiPoly g(base_.nvars(), base_.modulus());
        if (a) g += o.base_ * grad_[k];
        if (b) g += base_ * o.grad_[k];
        r.grad_[k] = std::move(g);
    }
    return r;
}

JetPoly JetPoly::operator*(const Scalar& c) const {
    JetPoly r(base_ * c, grad_.size());
    for (size_t k = 0; k < grad_.size(); ++k)
        if (!grad_[k].is_zero()) r.grad_[k] = grad_[k] * c;
    return r;
}

JetPoly JetPoly::pow(unsigned e) const {
    JetPoly acc = JetPoly::constant(base_.nvars(), Scalar::one(base_.modulus()), grad_.size());
    JetPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

JetPoly jet_eval(const MultiPoly& f, const std::vector<JetPoly>& args) {
    if (args.size() != f.nvars()) throw Error("jet_eval arity mismatch");
    if (args.empty()) throw Error("jet_eval with no arguments");
    const size_t nv = args[0].nvars();
    const size_t nc = args[0].ncoeffs();
    JetPoly acc(MultiPoly(nv, f.modulus()), nc);
    for (const auto& [e, c] : f.terms()) {
        JetPoly t = JetPoly::constant(nv, c, nc);
        for (size_t i = 0; i < f.nvars(); ++i)
            if (e[i]) t = t * args[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

}  // namespace scrollsmith
