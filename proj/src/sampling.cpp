#include <algorithm>
#include <random>
#include "ratiospace/ratio.hpp"

namespace ratiospace {

namespace {

constexpr std::size_t kAttemptsPerPoint = 64;

/** Random positive rational with numerator in [1, 9] and denominator in [1, 4]. */
Rational random_weight(std::mt19937_64& rng)
{
    const unsigned num = 1 + static_cast<unsigned>(rng() % 9);
    const unsigned den = 1 + static_cast<unsigned>(rng() % 4);
    return Rational(num, den);
}

/**
 * Functional on T_m with kernel exactly T_{m+1}: a positive combination of
 * the facets of S vanishing on T_{m+1} but not on T_m.
 */
RationalFunctional block_functional(const SharpFsMonoid& S, const Face& upper, const Face& lower,
                                    std::mt19937_64& rng)
{
    RationalFunctional nu(RatVector(S.dim(), Rational(0)));
    for (auto f : lower.zero_facets)
    {
        if (std::binary_search(upper.zero_facets.begin(), upper.zero_facets.end(), f))
            continue;
        nu = nu + S.facets()[f] * (1 + random_weight(rng));
    }
    return restrict_to_face(S, upper.index, nu);
}

}   // anonymous namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key)
{
    // SplitMix64 finalizer over the combined state.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (key + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<RatioChartPoint> sample_chart_points(const SharpFsMonoid& S, const FaceChain& chain,
                                                 const FaceChain& stratum, std::size_t count,
                                                 std::uint64_t seed)
{
    validate_chain(S, chain);
    validate_chain(S, stratum);
    if (!in_chart(RatioPoint{stratum.faces, {}}, chain))
        throw Error(ErrorCode::InvalidInput, "stratum is not a sub-chain of the chart");

    const AnchorSet anchors = default_anchors(S, chain);
    std::mt19937_64 rng(derive_seed(seed, 0));
    std::vector<RatioChartPoint> out;
    const std::size_t budget = kAttemptsPerPoint * (count + 1);
    for (std::size_t attempt = 0; attempt < budget && out.size() < count; ++attempt)
    {
        RatioChartPoint p;
        if (stratum.length() == 1)
        {
            // Interior points: π of a random element of H.
            const RationalFunctional h = block_functional(S, S.top(), S.bottom(), rng);
            p = pi_map(S, chain, anchors, PositiveHom::make(S, h));
        }
        else
        {
            RatioPoint q{stratum.faces, {}};
            for (std::size_t m = 0; m < stratum.length(); ++m)
            {
                const Face& upper = S.faces()[stratum.faces[m]];
                const Face& lower = S.faces()[stratum.faces[m + 1]];
                const RationalFunctional nu = block_functional(S, upper, lower, rng);
                q.maps.push_back(nu * (1 / nu(inner_point(upper))));
            }
            p = chart_coords(S, q, chain, anchors);
        }
        if (!validate_chart_point(S, p).valid())
            continue;
        if (std::find(out.begin(), out.end(), p) != out.end())
            continue;
        out.push_back(std::move(p));
    }
    if (out.empty() && count > 0)
        throw Error(ErrorCode::EmptyStratum, "no valid point found in the stratum");
    return out;
}

}   // namespace ratiospace
