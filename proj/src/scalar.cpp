#include "scrollsmith/scalar.hpp"

namespace scrollsmith {

namespace {

uint64_t reduce_int(int64_t v, uint64_t p) {
    int64_t r = v % static_cast<int64_t>(p);
    if (r < 0) r += static_cast<int64_t>(p);
    return static_cast<uint64_t>(r);
}

uint64_t reduce_big(const BigInt& v, uint64_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<uint64_t>(r);
}

}  // namespace

uint64_t mod_inverse(uint64_t a, uint64_t p) {
    // extended Euclid on (a, p)
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(a % p);
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw Error("mod_inverse: " + std::to_string(a) + " not invertible mod " + std::to_string(p));
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

Scalar Scalar::of_int(int64_t v, uint64_t modulus) {
    Scalar s(modulus);
    if (modulus)
        s.fp_ = reduce_int(v, modulus);
    else
        s.rat_ = v;
    return s;
}

Scalar Scalar::of_rat(BigRat v) {
    Scalar s(static_cast<uint64_t>(0));
    s.rat_ = std::move(v);
    return s;
}

Scalar Scalar::of_big(const BigInt& v, uint64_t modulus) {
    Scalar s(modulus);
    if (modulus)
        s.fp_ = reduce_big(v, modulus);
    else
        s.rat_ = v;
    return s;
}

Scalar Scalar::parse(const std::string& text, uint64_t modulus) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        BigInt n(text);
        return of_big(n, modulus);
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw Error("scalar parse: zero denominator in '" + text + "'");
    if (modulus == 0) return of_rat(BigRat(num) / BigRat(den));
    Scalar n = of_big(num, modulus);
    Scalar d = of_big(den, modulus);
    return n / d;
}

bool Scalar::is_zero() const { return mod_ ? fp_ == 0 : rat_ == 0; }

bool Scalar::is_one() const { return mod_ ? fp_ == 1 : rat_ == 1; }

uint64_t Scalar::fp_value() const {
    if (!mod_) throw Error("fp_value on a rational scalar");
    return fp_;
}

const BigRat& Scalar::rat_value() const {
    if (mod_) throw Error("rat_value on a prime-field scalar");
    return rat_;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(o);
    Scalar r(mod_);
    if (mod_)
        r.fp_ = (fp_ + o.fp_) % mod_;
    else
        r.rat_ = rat_ + o.rat_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same(o);
    Scalar r(mod_);
    if (mod_)
        r.fp_ = (fp_ + mod_ - o.fp_) % mod_;
    else
        r.rat_ = rat_ - o.rat_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(o);
    Scalar r(mod_);
    if (mod_)
        r.fp_ = (static_cast<unsigned __int128>(fp_) * o.fp_) % mod_;
    else
        r.rat_ = rat_ * o.rat_;
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r(mod_);
    if (mod_)
        r.fp_ = fp_ ? mod_ - fp_ : 0;
    else
        r.rat_ = -rat_;
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    require_same(o);
    return mod_ ? fp_ == o.fp_ : rat_ == o.rat_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("scalar inverse of zero");
    Scalar r(mod_);
    if (mod_)
        r.fp_ = mod_inverse(fp_, mod_);
    else
        r.rat_ = 1 / rat_;
    return r;
}

Scalar Scalar::pow(uint64_t e) const {
    Scalar base = *this;
    Scalar acc = Scalar::one(mod_);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Scalar Scalar::reduced_mod(uint64_t p) const {
    if (mod_) {
        if (mod_ != p) throw ContextMismatchError("reduced_mod: value already in F_" + std::to_string(mod_));
        return *this;
    }
    BigInt num = boost::multiprecision::numerator(rat_);
    BigInt den = boost::multiprecision::denominator(rat_);
    if (den % p == 0)
        throw BadReductionError("prime " + std::to_string(p) + " divides a denominator");
    uint64_t n = reduce_big(num, p);
    uint64_t d = reduce_big(den, p);
    Scalar r(p);
    r.fp_ = (static_cast<unsigned __int128>(n) * mod_inverse(d, p)) % p;
    return r;
}

std::string Scalar::str() const {
    if (mod_) return std::to_string(fp_);
    BigInt num = boost::multiprecision::numerator(rat_);
    BigInt den = boost::multiprecision::denominator(rat_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace scrollsmith
