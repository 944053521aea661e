#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "k3cone/errors.hpp"

namespace k3cone {

// All arithmetic in the library is exact. Integers and rationals are
// GMP values; mpq_class keeps fractions reduced with positive denominator,
// which is exactly the RatScalar canonical form.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense row-major matrix over T (T = Int or Rat).
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw DimensionError("matrix data does not match rows*cols");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Build from nested initializer-style rows.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Matrix(0, 0);
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw DimensionError("ragged matrix rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
        std::vector<T> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;

IntMat to_int(const RatMat& m); // throws DomainError on non-integral entries
RatMat to_rat(const IntMat& m);

// -- vectors ------------------------------------------------------------

Int dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Int& c, const IntVec& v);
bool is_zero(const IntVec& v);

/// Divide by the gcd of the entries, keeping direction. Zero vectors are
/// returned unchanged.
IntVec primitive(const IntVec& v);

/// Clear denominators and reduce; keeps direction.
IntVec primitive(const RatVec& v);

/// Lexicographic order on integer vectors.
bool lex_less(const IntVec& a, const IntVec& b);

std::string to_string(const IntVec& v);
std::string to_string(const IntMat& m);
std::string to_string(const Rat& q);
std::string to_string(const RatMat& m);

// -- elimination --------------------------------------------------------

/// Exact rank over Q.
std::size_t rank(const IntMat& m);
std::size_t rank_of_rows(const std::vector<IntVec>& rows, std::size_t cols);

Int det(const IntMat& m);
Rat det(const RatMat& m);

/// Gauss-Jordan inverse; throws SingularError (square shape is checked
/// first and reported as DimensionError).
RatMat inverse(const RatMat& m);
RatMat inverse(const IntMat& m);

/// Inverse of a matrix with determinant +-1; stays integral.
IntMat unimodular_inverse(const IntMat& m);

/// Solve A x = b column-wise for a matrix right-hand side.
RatMat solve(const RatMat& a, const RatMat& b);

/// Reduced row echelon form over Q; returns the nonzero rows scaled to
/// primitive integer vectors with positive leading entry. Canonical for
/// the row space.
std::vector<IntVec> rref_basis(const std::vector<IntVec>& rows, std::size_t cols);

// -- Smith normal form ----------------------------------------------------

/// left * A * right = diag(diag), with |det left| = |det right| = 1 and
/// d_i >= 0, d_i | d_{i+1}. diag has min(rows, cols) entries and is the
/// unique such chain.
struct SmithForm {
    IntVec diag;
    IntMat left;
    IntMat right;
};

SmithForm snf(const IntMat& a);

/// Coefficients of the monic characteristic polynomial, highest degree
/// first: t^n + c[1] t^(n-1) + ... + c[n].
IntVec char_poly(const IntMat& m);

} // namespace k3cone
