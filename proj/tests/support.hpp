#ifndef RATIOSPACE_TESTS_SUPPORT_HPP
#define RATIOSPACE_TESTS_SUPPORT_HPP

// Test-side recomputations from the defining formulas. They take library
// objects as input (sections, chart points) but evaluate everything on
// generators directly rather than through the library's representations.

#include <functional>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "ratiospace/ratio.hpp"

namespace support {

using namespace ratiospace;

inline Rational eval(const RationalFunctional& f, const IntVector& x)
{
    Rational s = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
        s += f.coeffs[j] * Rational(x[j]);
    return s;
}

/** Element of H with positive rational weights on all facet normals. */
inline PositiveHom random_hom(const SharpFsMonoid& S, std::mt19937_64& rng)
{
    RatVector h(S.dim(), 0);
    for (const auto& f : S.facets())
    {
        const Rational w(1 + static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 3));
        for (std::size_t j = 0; j < h.size(); ++j)
            h[j] += w * f.coeffs[j];
    }
    return PositiveHom::make(S, RationalFunctional(h));
}

/** Image of x under one section step at scaling constant c. */
inline RatVector step_image(const SectionStep& s, const IntVector& x, const Integer& c)
{
    Rational lx = 0, lw = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
    {
        lx += Rational(s.l[j] * x[j]);
        lw += Rational(s.l[j] * s.complement[j]);
    }
    RatVector y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        y[j] = Rational(x[j]) - lx / lw * Rational(s.complement[j]) + Rational(c) * lx * Rational(s.anchor[j]);
    return y;
}

/** Every generator of G lands in cone(G') under the step at c, by Carathéodory. */
inline bool step_ok(const SharpFsMonoid& S, const SectionStep& s, const Integer& c)
{
    const auto target = S.face_generators(S.faces()[s.smaller]);
    for (const auto& g : S.face_generators(S.faces()[s.larger]))
        if (!oracle::in_cone(target, step_image(s, g, c)))
            return false;
    return true;
}

using Values = std::vector<std::vector<Rational> >;

/** N_i(g) for the generators g of each S^(i). */
inline Values values(const SharpFsMonoid& S, const RatioChartPoint& p)
{
    Values out;
    for (std::size_t i = 0; i < p.maps.size(); ++i)
    {
        std::vector<Rational> level;
        for (const auto& g : S.face_generators(S.faces()[p.chain.faces[i]]))
            level.push_back(eval(p.maps[i], g));
        out.push_back(level);
    }
    return out;
}

/** π(h) on generators: h(g) / h(a_i) on each S^(i), for h > 0 on S \ {0}. */
inline Values pi_values(const SharpFsMonoid& S, const FaceChain& chain, const AnchorSet& anchors,
                        const std::function<Rational(const IntVector&)>& h)
{
    Values out;
    for (std::size_t i = 0; i < chain.length(); ++i)
    {
        std::vector<Rational> level;
        const Rational ha = h(anchors[i]);
        for (const auto& g : S.face_generators(S.faces()[chain.faces[i]]))
            level.push_back(h(g) / ha);
        out.push_back(level);
    }
    return out;
}

/** f(N, t) = π(t^n L + (1 - t) Σ t^i N_i ∘ p_i) on generators, for t ∈ (0, 1]. */
inline Values homotopy_values(const SharpFsMonoid& S, const RatioChartPoint& p, const PositiveHom& L,
                              const Rational& t, const std::vector<FaceSection>& sections)
{
    const std::size_t n = p.chain.length();
    auto H = [&](const IntVector& x) {
        Rational tn = 1, ti = 1, sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            tn *= t;
        for (std::size_t i = 0; i < n; ++i)
        {
            const RatVector px = sections[i].apply(x);
            Rational v = 0;
            for (std::size_t j = 0; j < px.size(); ++j)
                v += p.maps[i].coeffs[j] * px[j];
            sum += ti * v;
            ti *= t;
        }
        return tn * eval(L.functional(), x) + (1 - t) * sum;
    };
    return pi_values(S, p.chain, p.anchors, H);
}

/** max |a - b| over all entries; the chart metric evaluated on generators. */
inline Rational distance(const Values& a, const Values& b)
{
    Rational best = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            best = std::max(best, Rational(abs(a[i][j] - b[i][j])));
    return best;
}

}   // namespace support

#endif
