#ifndef RATIOSPACE_EXACTLIN_HPP
#define RATIOSPACE_EXACTLIN_HPP

/**
 * Exact integer and rational linear algebra: dense matrices over GMP
 * integers/rationals, row reduction, Smith normal form, and the H-description
 * of rational polyhedral cones with apex at the origin.
 *
 * Nothing in here rounds. All operations are pure.
 */

#include <cstddef>
#include <string>
#include <vector>
#include <boost/multiprecision/gmp.hpp>
#include "ratiospace/error.hpp"

namespace ratiospace {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

template <typename T>
class Matrix
{
    public:
        Matrix() = default;
        Matrix(std::size_t rows, std::size_t cols)
            : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

        static Matrix identity(std::size_t n)
        {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                m(i, i) = 1;
            return m;
        }

        /** Matrix whose rows are the given vectors (all of equal length `cols`). */
        static Matrix from_rows(const std::vector<std::vector<T> >& rows, std::size_t cols)
        {
            Matrix m(rows.size(), cols);
            for (std::size_t i = 0; i < rows.size(); ++i)
            {
                if (rows[i].size() != cols)
                    throw Error(ErrorCode::DimensionMismatch, "row length differs from column count");
                for (std::size_t j = 0; j < cols; ++j)
                    m(i, j) = rows[i][j];
            }
            return m;
        }

        std::size_t rows() const noexcept { return rows_; }
        std::size_t cols() const noexcept { return cols_; }

        T&       operator()(std::size_t i, std::size_t j)       { return data_[i * cols_ + j]; }
        const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

        std::vector<T> row(std::size_t i) const
        {
            return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
        }

        std::vector<T> col(std::size_t j) const
        {
            std::vector<T> c(rows_);
            for (std::size_t i = 0; i < rows_; ++i)
                c[i] = (*this)(i, j);
            return c;
        }

        Matrix transpose() const
        {
            Matrix t(cols_, rows_);
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < cols_; ++j)
                    t(j, i) = (*this)(i, j);
            return t;
        }

        Matrix operator*(const Matrix& other) const
        {
            if (cols_ != other.rows_)
                throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
            Matrix p(rows_, other.cols_);
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t k = 0; k < cols_; ++k)
                {
                    const T& a = (*this)(i, k);
                    if (a == 0)
                        continue;
                    for (std::size_t j = 0; j < other.cols_; ++j)
                        p(i, j) += a * other(k, j);
                }
            return p;
        }

        std::vector<T> operator*(const std::vector<T>& x) const
        {
            if (x.size() != cols_)
                throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
            std::vector<T> y(rows_, T(0));
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < cols_; ++j)
                    y[i] += (*this)(i, j) * x[j];
            return y;
        }

        bool operator==(const Matrix& other) const = default;

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatVector to_rational(const IntVector& v);
RatMatrix to_rational(const IntMatrix& m);

Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const RatVector& a, const IntVector& b);

/** Integer vector obtained by clearing denominators and dividing by the gcd. Sign preserved. */
IntVector primitive(const RatVector& v);
bool is_zero(const RatVector& v);
bool is_zero(const IntVector& v);

/**
 * A linear functional on Q^d. Additive maps S -> R>=0 are represented this
 * way; evaluation on lattice vectors is exact.
 */
struct RationalFunctional
{
    RatVector coeffs;

    RationalFunctional() = default;
    explicit RationalFunctional(RatVector c) : coeffs(std::move(c)) {}
    explicit RationalFunctional(const IntVector& c) : coeffs(to_rational(c)) {}

    std::size_t dimension() const noexcept { return coeffs.size(); }

    Rational operator()(const IntVector& x) const;
    Rational operator()(const RatVector& x) const;

    RationalFunctional operator+(const RationalFunctional& other) const;
    RationalFunctional operator*(const Rational& scale) const;

    bool operator==(const RationalFunctional& other) const = default;
};

/** Reduced row echelon form; returns the pivot columns. */
std::vector<std::size_t> row_reduce(RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const std::vector<IntVector>& vectors, std::size_t d);

/** Basis of {x : m x = 0}. */
std::vector<RatVector> nullspace(const RatMatrix& m);

/** Indices of a maximal linearly independent subfamily, chosen greedily in order. */
std::vector<std::size_t> independent_subset(const std::vector<IntVector>& vectors, std::size_t d);

/**
 * Orthogonal projector onto span(vectors) in Q^d. Restricting a functional to
 * the span and representing it inside the span is multiplication by this
 * (symmetric) matrix.
 */
RatMatrix span_projector(const std::vector<IntVector>& vectors, std::size_t d);

/** Result of a Smith decomposition: U * M * V = D. */
struct SmithDecomposition
{
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/** Nonzero diagonal entries of the Smith form, in divisibility order. */
std::vector<Integer> invariant_factors(const IntMatrix& m);

Integer determinant(const IntMatrix& m);

/**
 * H-description of cone(generators): x is in the cone iff every facet is >= 0
 * at x and every equation vanishes at x. Facet normals lie in the span of the
 * generators, are primitive integer vectors, and are sorted lexicographically.
 * Equations are a basis of the orthogonal complement of the span (empty for
 * full-dimensional cones).
 */
struct ConeHRep
{
    std::vector<RationalFunctional> facets;
    std::vector<RationalFunctional> equations;
    std::size_t dim = 0;
};

ConeHRep cone_hrep(const std::vector<IntVector>& generators, std::size_t d);

/**
 * Facet normals of a salient cone, i.e. the extreme rays of its dual cone.
 * Throws NotSalient if the cone contains a line.
 */
std::vector<RationalFunctional> dual_cone(const std::vector<IntVector>& generators, std::size_t d);

bool cone_contains(const std::vector<RationalFunctional>& facets, const RatVector& x);
bool cone_contains(const std::vector<RationalFunctional>& facets, const IntVector& x);
bool cone_contains(const ConeHRep& cone, const RatVector& x);

std::string to_string(const Rational& q);
std::string to_string(const RatVector& v);
std::string to_string(const IntVector& v);

}   // namespace ratiospace

#endif
