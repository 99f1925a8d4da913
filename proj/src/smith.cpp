#include <algorithm>
#include <utility>
#include "ratiospace/exactlin.hpp"

namespace ratiospace {

namespace {

using boost::multiprecision::abs;

/**
 * Diagonalize `D` in place by unimodular row and column operations. When
 * `U` / `V` are non-null the same row / column operations are applied to them,
 * so that U * M * V = D holds throughout.
 */
void diagonalize(IntMatrix& D, IntMatrix* U, IntMatrix* V)
{
    const std::size_t m = D.rows();
    const std::size_t n = D.cols();

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(D(a, j), D(b, j));
        if (U) for (std::size_t j = 0; j < m; ++j) std::swap((*U)(a, j), (*U)(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(D(i, a), D(i, b));
        if (V) for (std::size_t i = 0; i < n; ++i) std::swap((*V)(i, a), (*V)(i, b));
    };
    // row_dst += q * row_src
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < n; ++j) D(dst, j) += q * D(src, j);
        if (U) for (std::size_t j = 0; j < m; ++j) (*U)(dst, j) += q * (*U)(src, j);
    };
    // col_dst += q * col_src
    auto add_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < m; ++i) D(i, dst) += q * D(i, src);
        if (V) for (std::size_t i = 0; i < n; ++i) (*V)(i, dst) += q * (*V)(i, src);
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t)
    {
        while (true)
        {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0 && (pi == m || abs(D(i, j)) < abs(D(pi, pj))))
                    {
                        pi = i;
                        pj = j;
                    }
            if (pi == m)
                return;
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i)
            {
                if (D(i, t) == 0) continue;
                add_row(i, t, -(D(i, t) / D(t, t)));
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j)
            {
                if (D(t, j) == 0) continue;
                add_col(j, t, -(D(t, j) / D(t, t)));
                if (D(t, j) != 0) clean = false;
            }
            if (!clean)
                continue;

            // Enforce d_t | every remaining entry.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0)
                    {
                        add_row(t, i, Integer(1));
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (D(t, t) < 0)
        {
            for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
            if (U) for (std::size_t j = 0; j < m; ++j) (*U)(t, j) = -(*U)(t, j);
        }
    }
}

}   // anonymous namespace

SmithDecomposition smith_normal_form(const IntMatrix& m)
{
    SmithDecomposition out{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    diagonalize(out.D, &out.U, &out.V);
    return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& m)
{
    IntMatrix D(m);
    diagonalize(D, nullptr, nullptr);
    std::vector<Integer> out;
    for (std::size_t t = 0; t < std::min(D.rows(), D.cols()); ++t)
        if (D(t, t) != 0)
            out.push_back(D(t, t));
    return out;
}

}   // namespace ratiospace
