#include "scrollsmith/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace scrollsmith {

MultiPoly MultiPoly::constant(size_t nvars, const Scalar& c) {
    MultiPoly p(nvars, c.modulus());
    if (!c.is_zero()) p.terms_.emplace(Exp(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(size_t nvars, size_t i, uint64_t modulus) {
    if (i >= nvars) throw Error("variable index out of range");
    MultiPoly p(nvars, modulus);
    Exp e(nvars, 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), Scalar::one(modulus));
    return p;
}

MultiPoly MultiPoly::term(size_t nvars, const Exp& e, const Scalar& c) {
    MultiPoly p(nvars, c.modulus());
    p.add_term(e, c);
    return p;
}

void MultiPoly::check_arity(const Exp& e) const {
    if (e.size() != nvars_) throw Error("exponent arity mismatch");
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, exp_degree(e));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int de = exp_degree(e);
        if (d == -1)
            d = de;
        else if (d != de)
            return false;
    }
    return true;
}

void MultiPoly::add_term(const Exp& e, const Scalar& c) {
    check_arity(e);
    if (c.modulus() != mod_) throw ContextMismatchError("polynomial coefficient context mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
    if (mod_ != o.mod_) throw ContextMismatchError("polynomial context mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_, mod_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
    if (c.modulus() != mod_) throw ContextMismatchError("polynomial scalar context mismatch");
    MultiPoly r(nvars_, mod_);
    if (c.is_zero()) return r;
    for (const auto& [e, coef] : terms_) {
        Scalar v = coef * c;
        if (!v.is_zero()) r.terms_.emplace(e, v);
    }
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw Error("polynomial arity mismatch");
    if (mod_ != o.mod_) throw ContextMismatchError("polynomial context mismatch");
    MultiPoly r(nvars_, mod_);
    Exp e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && mod_ == o.mod_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = constant(nvars_, Scalar::one(mod_));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Scalar MultiPoly::coeff(const Exp& e) const {
    check_arity(e);
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(mod_) : it->second;
}

MultiPoly MultiPoly::partial(size_t i) const {
    if (i >= nvars_) throw Error("partial: variable index out of range");
    MultiPoly r(nvars_, mod_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exp d = e;
        d[i] -= 1;
        r.add_term(d, c * Scalar::of_int(e[i], mod_));
    }
    return r;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_) throw Error("eval arity mismatch");
    Scalar acc = Scalar::zero(mod_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (size_t i = 0; i < nvars_; ++i)
            if (e[i]) t = t * point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::subst(const std::vector<MultiPoly>& args) const {
    if (args.size() != nvars_) throw Error("subst arity mismatch");
    if (args.empty()) throw Error("subst with no arguments");
    size_t out_nvars = args[0].nvars();
    MultiPoly acc(out_nvars, mod_);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(out_nvars, c);
        for (size_t i = 0; i < nvars_; ++i)
            if (e[i]) t = t * args[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::reduced_mod(uint64_t p) const {
    MultiPoly r(nvars_, p);
    for (const auto& [e, c] : terms_) r.add_term(e, c.reduced_mod(p));
    return r;
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    if (mod_ != 0) {
        // monic over a prime field
        return *this * terms_.begin()->second.inverse();
    }
    BigInt l(1);
    for (const auto& [e, c] : terms_)
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c.rat_value()));
    BigInt g(0);
    for (const auto& [e, c] : terms_)
        g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(c.rat_value() * BigRat(l)));
    if (g == 0) g = 1;
    if (terms_.begin()->second.rat_value() < 0) g = -g;
    return *this * Scalar::of_rat(BigRat(l) / BigRat(g));
}

std::string MultiPoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c.str();
        for (size_t i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            out << "*";
            if (i < var_names.size())
                out << var_names[i];
            else
                out << "x" << i;
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

std::vector<Exp> monomials_of_degree(size_t nvars, int d) {
    std::vector<Exp> out;
    if (nvars == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Exp work(nvars, 0);
    auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
        if (idx == nvars - 1) {
            work[idx] = static_cast<uint16_t>(remaining);
            out.push_back(work);
            work[idx] = 0;
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            work[idx] = static_cast<uint16_t>(v);
            self(self, idx + 1, remaining - v);
        }
        work[idx] = 0;
    };
    rec(rec, 0, d);
    return out;
}

}  // namespace scrollsmith
