#include "scrollsmith/matrix.hpp"

#include <algorithm>

namespace scrollsmith {

ExactMatrix::ExactMatrix(size_t rows, size_t cols, uint64_t modulus)
    : rows_(rows), cols_(cols), mod_(modulus), e_(rows * cols, Scalar::zero(modulus)) {}

ExactMatrix ExactMatrix::identity(size_t n, uint64_t modulus) {
    ExactMatrix m(n, n, modulus);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(modulus);
    return m;
}

void ExactMatrix::set(size_t i, size_t j, const Scalar& v) {
    if (v.modulus() != mod_)
        throw ContextMismatchError("matrix entry context mismatch");
    at(i, j) = v;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (mod_ != rhs.mod_) throw ContextMismatchError("matrix product context mismatch");
    if (cols_ != rhs.rows_) throw Error("matrix product shape mismatch");
    ExactMatrix out(rows_, rhs.cols_, mod_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols_, rows_, mod_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || mod_ != o.mod_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

std::vector<Scalar> ExactMatrix::row(size_t i) const {
    return std::vector<Scalar>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

void ExactMatrix::set_row(size_t i, const std::vector<Scalar>& r) {
    if (r.size() != cols_) throw Error("set_row length mismatch");
    for (size_t j = 0; j < cols_; ++j) set(i, j, r[j]);
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& below) const {
    if (cols_ != below.cols_ || mod_ != below.mod_) throw Error("vstack mismatch");
    ExactMatrix out(rows_ + below.rows_, cols_, mod_);
    out.e_ = e_;
    out.e_.insert(out.e_.end(), below.e_.begin(), below.e_.end());
    return out;
}

namespace {

// Bareiss fraction-free elimination on an integer matrix; returns rank.
size_t bareiss_rank(std::vector<std::vector<BigInt>> m) {
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    BigInt prev(1);
    size_t rank = 0;
    size_t col = 0;
    while (rank < rows && col < cols) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) {
            ++col;
            continue;
        }
        std::swap(m[piv], m[rank]);
        const BigInt& p = m[rank][col];
        for (size_t i = rank + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j)
                m[i][j] = (p * m[i][j] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = p;
        ++rank;
        ++col;
    }
    return rank;
}

size_t fp_rank(std::vector<std::vector<uint64_t>> m, uint64_t p) {
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    size_t rank = 0, col = 0;
    while (rank < rows && col < cols) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) {
            ++col;
            continue;
        }
        std::swap(m[piv], m[rank]);
        uint64_t inv = mod_inverse(m[rank][col], p);
        for (size_t j = col; j < cols; ++j)
            m[rank][j] = (static_cast<unsigned __int128>(m[rank][j]) * inv) % p;
        for (size_t i = rank + 1; i < rows; ++i) {
            uint64_t f = m[i][col];
            if (!f) continue;
            for (size_t j = col; j < cols; ++j) {
                uint64_t sub = (static_cast<unsigned __int128>(f) * m[rank][j]) % p;
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        ++rank;
        ++col;
    }
    return rank;
}

}  // namespace

size_t ExactMatrix::rank() const {
    if (mod_ == 0) {
        // clear denominators row by row, then Bareiss over the integers
        std::vector<std::vector<BigInt>> m(rows_, std::vector<BigInt>(cols_));
        for (size_t i = 0; i < rows_; ++i) {
            BigInt l(1);
            for (size_t j = 0; j < cols_; ++j)
                l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(at(i, j).rat_value()));
            for (size_t j = 0; j < cols_; ++j) {
                BigRat scaled = at(i, j).rat_value() * BigRat(l);
                m[i][j] = boost::multiprecision::numerator(scaled);
            }
        }
        return bareiss_rank(std::move(m));
    }
    std::vector<std::vector<uint64_t>> m(rows_, std::vector<uint64_t>(cols_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m[i][j] = at(i, j).fp_value();
    return fp_rank(std::move(m), mod_);
}

ExactMatrix ExactMatrix::rref(std::vector<size_t>* pivot_cols) const {
    ExactMatrix m = *this;
    if (pivot_cols) pivot_cols->clear();
    size_t r = 0;
    for (size_t col = 0; col < cols_ && r < rows_; ++col) {
        size_t piv = r;
        while (piv < rows_ && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows_) continue;
        for (size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Scalar inv = m.at(r, col).inverse();
        for (size_t j = col; j < cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            Scalar f = m.at(i, col);
            if (f.is_zero()) continue;
            for (size_t j = col; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++r;
    }
    return m;
}

std::vector<std::vector<Scalar>> ExactMatrix::kernel_basis() const {
    std::vector<size_t> pivots;
    ExactMatrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> w(cols_, Scalar::zero(mod_));
        w[free_col] = Scalar::one(mod_);
        for (size_t k = 0; k < pivots.size(); ++k)
            w[pivots[k]] = -r.at(k, free_col);
        basis.push_back(std::move(w));
    }
    return basis;
}

ExactMatrix ExactMatrix::reduced_mod(uint64_t p) const {
    ExactMatrix out(rows_, cols_, p);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).reduced_mod(p);
    return out;
}

std::vector<Scalar> mat_vec(const ExactMatrix& m, const std::vector<Scalar>& w) {
    if (w.size() != m.cols()) throw Error("mat_vec shape mismatch");
    std::vector<Scalar> out(m.rows(), Scalar::zero(m.modulus()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * w[j];
    return out;
}

std::vector<Scalar> vec_mat(const std::vector<Scalar>& x, const ExactMatrix& m) {
    if (x.size() != m.rows()) throw Error("vec_mat shape mismatch");
    std::vector<Scalar> out(m.cols(), Scalar::zero(m.modulus()));
    for (size_t i = 0; i < m.rows(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m.at(i, j);
    }
    return out;
}

size_t fp_rank_raw(std::vector<std::vector<uint64_t>> rows, uint64_t p) {
    return fp_rank(std::move(rows), p);
}

size_t span_rank(const std::vector<std::vector<Scalar>>& vecs, uint64_t modulus) {
    if (vecs.empty()) return 0;
    ExactMatrix m(vecs.size(), vecs[0].size(), modulus);
    for (size_t i = 0; i < vecs.size(); ++i) m.set_row(i, vecs[i]);
    return m.rank();
}

std::vector<Scalar> primitive_integer_vector(const std::vector<Scalar>& v) {
    BigInt l(1);
    for (const Scalar& s : v) {
        if (s.modulus() != 0) throw Error("primitive_integer_vector needs rationals");
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(s.rat_value()));
    }
    BigInt g(0);
    std::vector<BigInt> ints(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        ints[i] = boost::multiprecision::numerator(v[i].rat_value() * BigRat(l));
        g = boost::multiprecision::gcd(g, ints[i]);
    }
    if (g == 0) g = 1;
    int sign = 0;
    for (const BigInt& x : ints)
        if (x != 0) {
            sign = x > 0 ? 1 : -1;
            break;
        }
    if (sign < 0) g = -g;
    std::vector<Scalar> out;
    out.reserve(v.size());
    for (const BigInt& x : ints) out.push_back(Scalar::of_rat(BigRat(x / g)));
    return out;
}

std::vector<Scalar> projective_normalize(const std::vector<Scalar>& v) {
    for (const Scalar& s : v) {
        if (!s.is_zero()) {
            Scalar inv = s.inverse();
            std::vector<Scalar> out;
            out.reserve(v.size());
            for (const Scalar& x : v) out.push_back(x * inv);
            return out;
        }
    }
    throw Error("projective_normalize: zero vector");
}

}  // namespace scrollsmith
