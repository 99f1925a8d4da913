#include "ratiospace/exactlin.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ratiospace {

std::string_view error_code_name(ErrorCode code)
{
    switch (code)
    {
        case ErrorCode::NotSalient:           return "NotSalient";
        case ErrorCode::ZeroGenerator:        return "ZeroGenerator";
        case ErrorCode::NotFullRank:          return "NotFullRank";
        case ErrorCode::DimensionMismatch:    return "DimensionMismatch";
        case ErrorCode::ZeroFace:             return "ZeroFace";
        case ErrorCode::NotAFace:             return "NotAFace";
        case ErrorCode::TrivialMonoid:        return "TrivialMonoid";
        case ErrorCode::NotInteriorHom:       return "NotInteriorHom";
        case ErrorCode::NotInChart:           return "NotInChart";
        case ErrorCode::SectionMismatch:      return "SectionMismatch";
        case ErrorCode::InvalidPoint:         return "InvalidPoint";
        case ErrorCode::EmptyStratum:         return "EmptyStratum";
        case ErrorCode::NotInMonoid:          return "NotInMonoid";
        case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
        case ErrorCode::RayOutsideCone:       return "RayOutsideCone";
        case ErrorCode::InvalidFan:           return "InvalidFan";
        case ErrorCode::InvalidInput:         return "InvalidInput";
    }
    return "Unknown";
}

RatVector to_rational(const IntVector& v)
{
    return RatVector(v.begin(), v.end());
}

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

Rational dot(const RatVector& a, const RatVector& b)
{
    if (a.size() != b.size())
        throw Error(ErrorCode::DimensionMismatch, "dot product of vectors of different length");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational dot(const RatVector& a, const IntVector& b)
{
    if (a.size() != b.size())
        throw Error(ErrorCode::DimensionMismatch, "dot product of vectors of different length");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

IntVector primitive(const RatVector& v)
{
    Integer den = 1;
    for (const auto& q : v)
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(q));
    IntVector out(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        out[i] = boost::multiprecision::numerator(v[i]) * (den / boost::multiprecision::denominator(v[i]));
        g = boost::multiprecision::gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& x : out)
            x /= g;
    return out;
}

bool is_zero(const RatVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

bool is_zero(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& q) { return q == 0; });
}

Rational RationalFunctional::operator()(const IntVector& x) const
{
    return dot(coeffs, x);
}

Rational RationalFunctional::operator()(const RatVector& x) const
{
    return dot(coeffs, x);
}

RationalFunctional RationalFunctional::operator+(const RationalFunctional& other) const
{
    if (coeffs.size() != other.coeffs.size())
        throw Error(ErrorCode::DimensionMismatch, "sum of functionals of different dimension");
    RatVector c(coeffs);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += other.coeffs[i];
    return RationalFunctional(std::move(c));
}

RationalFunctional RationalFunctional::operator*(const Rational& scale) const
{
    RatVector c(coeffs);
    for (auto& x : c)
        x *= scale;
    return RationalFunctional(std::move(c));
}

std::vector<std::size_t> row_reduce(RatMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c)
    {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i)
        {
            if (i == r || m(i, c) == 0)
                continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const RatMatrix& m)
{
    RatMatrix copy(m);
    return row_reduce(copy).size();
}

std::size_t rank(const std::vector<IntVector>& vectors, std::size_t d)
{
    if (vectors.empty())
        return 0;
    return rank(to_rational(IntMatrix::from_rows(vectors, d)));
}

std::vector<RatVector> nullspace(const RatMatrix& m)
{
    RatMatrix r(m);
    const auto pivots = row_reduce(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free)
    {
        if (is_pivot[free])
            continue;
        RatVector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::size_t> independent_subset(const std::vector<IntVector>& vectors, std::size_t d)
{
    std::vector<std::size_t> chosen;
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < vectors.size(); ++i)
    {
        rows.push_back(vectors[i]);
        if (rank(rows, d) == rows.size())
            chosen.push_back(i);
        else
            rows.pop_back();
    }
    return chosen;
}

namespace {

RatMatrix inverse(const RatMatrix& m)
{
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw Error(ErrorCode::InvalidInput, "singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

}   // anonymous namespace

RatMatrix span_projector(const std::vector<IntVector>& vectors, std::size_t d)
{
    const auto basis_idx = independent_subset(vectors, d);
    const std::size_t r = basis_idx.size();
    if (r == 0)
        return RatMatrix(d, d);
    if (r == d)
        return RatMatrix::identity(d);

    RatMatrix B(d, r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < d; ++i)
            B(i, k) = Rational(vectors[basis_idx[k]][i]);
    const RatMatrix Bt = B.transpose();
    return B * inverse(Bt * B) * Bt;
}

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = to_rational(m);
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c)
    {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c)
        {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i)
        {
            if (a(i, c) == 0)
                continue;
            const Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    return boost::multiprecision::numerator(det);
}

namespace {

/** Advance `idx` to the next k-combination of {0..n-1}; false when exhausted. */
bool next_combination(std::vector<std::size_t>& idx, std::size_t n)
{
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0; )
    {
        if (idx[i] < n - k + i)
        {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}   // anonymous namespace

ConeHRep cone_hrep(const std::vector<IntVector>& generators, std::size_t d)
{
    for (const auto& g : generators)
        if (g.size() != d)
            throw Error(ErrorCode::DimensionMismatch, "generator has wrong dimension");

    std::vector<IntVector> gens;
    for (const auto& g : generators)
        if (!is_zero(g))
            gens.push_back(g);

    ConeHRep out;
    out.dim = rank(gens, d);

    // Orthogonal complement of the span.
    std::vector<IntVector> equations;
    if (gens.empty())
    {
        for (std::size_t i = 0; i < d; ++i)
        {
            IntVector e(d, Integer(0));
            e[i] = 1;
            equations.push_back(e);
        }
    }
    else
    {
        for (const auto& v : nullspace(to_rational(IntMatrix::from_rows(gens, d))))
            equations.push_back(primitive(v));
    }
    for (const auto& e : equations)
        out.equations.emplace_back(e);

    if (out.dim == 0)
        return out;

    // Every facet is spanned by dim-1 independent generators; its normal is
    // the unique direction inside the span orthogonal to them.
    std::set<IntVector> found;
    const std::size_t k = out.dim - 1;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    do
    {
        std::vector<IntVector> rows;
        for (auto i : idx)
            rows.push_back(gens[i]);
        if (rank(rows, d) != k)
            continue;
        for (const auto& e : equations)
            rows.push_back(e);
        const auto ns = nullspace(to_rational(IntMatrix::from_rows(rows, d)));
        if (ns.size() != 1)
            continue;
        IntVector normal = primitive(ns.front());

        bool pos = false, neg = false;
        for (const auto& g : gens)
        {
            Integer v = 0;
            for (std::size_t j = 0; j < d; ++j)
                v += normal[j] * g[j];
            pos = pos || v > 0;
            neg = neg || v < 0;
        }
        if (pos && neg)
            continue;
        if (neg)
            for (auto& x : normal)
                x = -x;
        found.insert(normal);
    }
    while (next_combination(idx, gens.size()));

    for (const auto& n : found)
        out.facets.emplace_back(n);
    return out;
}

std::vector<RationalFunctional> dual_cone(const std::vector<IntVector>& generators, std::size_t d)
{
    ConeHRep hrep = cone_hrep(generators, d);
    std::vector<IntVector> normals;
    for (const auto& f : hrep.facets)
        normals.push_back(primitive(f.coeffs));
    if (rank(normals, d) != hrep.dim)
        throw Error(ErrorCode::NotSalient, "cone contains a line");
    return hrep.facets;
}

bool cone_contains(const std::vector<RationalFunctional>& facets, const RatVector& x)
{
    for (const auto& f : facets)
    {
        if (f.dimension() != x.size())
            throw Error(ErrorCode::DimensionMismatch, "point and facet dimensions differ");
        if (f(x) < 0)
            return false;
    }
    return true;
}

bool cone_contains(const std::vector<RationalFunctional>& facets, const IntVector& x)
{
    return cone_contains(facets, to_rational(x));
}

bool cone_contains(const ConeHRep& cone, const RatVector& x)
{
    for (const auto& e : cone.equations)
    {
        if (e.dimension() != x.size())
            throw Error(ErrorCode::DimensionMismatch, "point and equation dimensions differ");
        if (e(x) != 0)
            return false;
    }
    return cone_contains(cone.facets, x);
}

std::string to_string(const Rational& q)
{
    if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string to_string(const RatVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

std::string to_string(const IntVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].str();
    return s + ")";
}

}   // namespace ratiospace
