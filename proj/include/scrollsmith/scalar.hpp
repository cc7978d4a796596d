#ifndef SCROLLSMITH_SCALAR_HPP
#define SCROLLSMITH_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "scrollsmith/errors.hpp"

namespace scrollsmith {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// An exact field element. The context is either a prime modulus p
/// (values canonically reduced to [0, p)) or the rational field
/// (modulus 0, values kept in lowest terms with positive denominator
/// by cpp_rational). Mixing contexts in an operation throws
/// ContextMismatchError.
class Scalar {
public:
    Scalar() : mod_(0) {}  // rational zero

    static Scalar zero(uint64_t modulus) { return Scalar(modulus); }
    static Scalar one(uint64_t modulus) { return of_int(1, modulus); }
    static Scalar of_int(int64_t v, uint64_t modulus);
    static Scalar of_rat(BigRat v);
    static Scalar of_big(const BigInt& v, uint64_t modulus);

    /// Parse a decimal string, "a/b" for rationals; negatives allowed.
    /// In a prime-field context "a/b" means a * b^-1 mod p.
    static Scalar parse(const std::string& text, uint64_t modulus);

    uint64_t modulus() const { return mod_; }
    bool is_rational_ctx() const { return mod_ == 0; }

    bool is_zero() const;
    bool is_one() const;

    /// Prime-field representative in [0, p); context must be a prime field.
    uint64_t fp_value() const;
    const BigRat& rat_value() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    Scalar pow(uint64_t e) const;

    /// Reduce a rational value modulo p. Throws BadReductionError when p
    /// divides the denominator. Prime-field values must already match p.
    Scalar reduced_mod(uint64_t p) const;

    std::string str() const;

private:
    explicit Scalar(uint64_t modulus) : mod_(modulus), fp_(0) {}

    void require_same(const Scalar& o) const {
        if (mod_ != o.mod_)
            throw ContextMismatchError("scalar context mismatch: mod " + std::to_string(mod_) +
                                       " vs mod " + std::to_string(o.mod_));
    }

    uint64_t mod_ = 0;  // 0 = rational field
    uint64_t fp_ = 0;   // reduced representative when mod_ != 0
    BigRat rat_;        // value when mod_ == 0
};

/// Modular inverse of a mod p (p prime, a not divisible by p).
uint64_t mod_inverse(uint64_t a, uint64_t p);

}  // namespace scrollsmith

#endif
