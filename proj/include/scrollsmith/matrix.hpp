#ifndef SCROLLSMITH_MATRIX_HPP
#define SCROLLSMITH_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "scrollsmith/scalar.hpp"

namespace scrollsmith {

/// Dense exact matrix. All entries share one scalar context (a prime
/// modulus or the rationals), fixed at construction.
class ExactMatrix {
public:
    ExactMatrix(size_t rows, size_t cols, uint64_t modulus);

    static ExactMatrix identity(size_t n, uint64_t modulus);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint64_t modulus() const { return mod_; }

    Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    /// Entry assignment with context enforcement.
    void set(size_t i, size_t j, const Scalar& v);

    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix transpose() const;
    bool operator==(const ExactMatrix& o) const;

    std::vector<Scalar> row(size_t i) const;
    void set_row(size_t i, const std::vector<Scalar>& r);

    ExactMatrix vstack(const ExactMatrix& below) const;

    /// Exact rank. Fraction-free (Bareiss) elimination over the rationals,
    /// plain Gaussian elimination over a prime field. Deterministic.
    size_t rank() const;

    /// Canonical basis of the right kernel {w : M w = 0}, from the reduced
    /// row echelon form: one vector per free column, unit at that column.
    std::vector<std::vector<Scalar>> kernel_basis() const;

    /// Reduced row echelon form; returns the pivot columns.
    ExactMatrix rref(std::vector<size_t>* pivot_cols = nullptr) const;

    /// Reduce a rational matrix modulo p (throws BadReductionError when p
    /// divides a denominator).
    ExactMatrix reduced_mod(uint64_t p) const;

private:
    size_t rows_, cols_;
    uint64_t mod_;
    std::vector<Scalar> e_;
};

/// Matrix-vector product M w.
std::vector<Scalar> mat_vec(const ExactMatrix& m, const std::vector<Scalar>& w);

/// Row-vector-matrix product x M.
std::vector<Scalar> vec_mat(const std::vector<Scalar>& x, const ExactMatrix& m);

/// Rank of the span of a list of equal-length vectors.
size_t span_rank(const std::vector<std::vector<Scalar>>& vecs, uint64_t modulus);

/// Prime-field rank on raw reduced representatives (hot scan loops).
size_t fp_rank_raw(std::vector<std::vector<uint64_t>> rows, uint64_t p);

/// Scale a rational vector to primitive integer entries (clear
/// denominators, divide by content, first nonzero entry positive).
std::vector<Scalar> primitive_integer_vector(const std::vector<Scalar>& v);

/// Normalize a nonzero vector projectively: divide by the first nonzero
/// coordinate. Used to deduplicate points of projective space.
std::vector<Scalar> projective_normalize(const std::vector<Scalar>& v);

}  // namespace scrollsmith

#endif
