#ifndef RATIOSPACE_RATIO_HPP
#define RATIOSPACE_RATIO_HPP

/**
 * The space of ratios R(S) of a sharp fs monoid, described through its
 * charts R(S)(Φ), one per chain of faces Φ = {S = S^(0) ⊋ ... ⊋ S^(n) = {0}}.
 *
 * A chart point is a tuple (N_0, ..., N_{n-1}) of nonnegative functionals,
 * N_i living on span(S^(i)), subject to:
 *   (i)   N_i(a_i) = 1 for chosen anchors a_i ∈ S^(i) \ S^(i+1),
 *   (ii)  the kernel face of N_i is S^(j) for some j > i,
 *   (iii) N_i restricted to S^(j) equals N_i(a_j) N_j for i < j < n.
 *
 * Globally a point is stored in canonical form: the chain of kernel faces
 * together with maps normalized at inner points. Charts are glued through
 * that form.
 *
 * Functionals on a face are always represented by their coefficient vector
 * inside span(face), which makes equality a plain coefficient comparison.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>
#include "ratiospace/monoid.hpp"
#include "ratiospace/retraction.hpp"

namespace ratiospace {

/** Strictly decreasing chain of faces, stored as face indices, from S to {0}. */
struct FaceChain
{
    std::vector<std::size_t> faces;

    std::size_t length() const noexcept { return faces.empty() ? 0 : faces.size() - 1; }
    bool contains(std::size_t face) const;
    bool operator==(const FaceChain&) const = default;
    auto operator<=>(const FaceChain&) const = default;
};

using AnchorSet = std::vector<IntVector>;

struct RatioChartPoint
{
    FaceChain chain;
    AnchorSet anchors;
    std::vector<RationalFunctional> maps;

    bool operator==(const RatioChartPoint&) const = default;
};

struct RatioPoint
{
    std::vector<std::size_t> kernel_chain;      ///< T_0 = S ⊋ ... ⊋ T_M = {0}
    std::vector<RationalFunctional> maps;       ///< ν_m, normalized at inner_point(T_m)

    bool operator==(const RatioPoint&) const = default;
};

/** An element of H: a functional strictly positive on every nonzero element of S. */
class PositiveHom
{
    public:
        /** Throws NotInteriorHom unless h > 0 on every generator. */
        static PositiveHom make(const SharpFsMonoid& S, RationalFunctional h);

        const RationalFunctional& functional() const noexcept { return h_; }

    private:
        explicit PositiveHom(RationalFunctional h) : h_(std::move(h)) {}
        RationalFunctional h_;
};

/** Sum of the facet normals of S, a canonical element of H. */
PositiveHom canonical_positive_hom(const SharpFsMonoid& S);

/** Throws InvalidInput unless Φ is a strictly decreasing chain from S to {0}. */
void validate_chain(const SharpFsMonoid& S, const FaceChain& chain);

std::vector<FaceChain> enumerate_chains(const SharpFsMonoid& S, bool maximal_only);

/** Φ_1 ∩ Φ_2 as sets of faces; again a chain from S to {0}. */
FaceChain chain_intersection(const FaceChain& a, const FaceChain& b);

/** Sub-chains of Φ containing S and {0}: the possible kernel chains in the chart. */
std::vector<FaceChain> strata(const FaceChain& chain);

AnchorSet default_anchors(const SharpFsMonoid& S, const FaceChain& chain);

/** Coefficient vector of h restricted to span(face). */
RationalFunctional restrict_to_face(const SharpFsMonoid& S, std::size_t face, const RationalFunctional& h);

/**
 * Face of `face` on which the functional vanishes, provided the functional is
 * nonnegative there; nullopt otherwise.
 */
std::optional<std::size_t> kernel_face(const SharpFsMonoid& S, std::size_t face, const RationalFunctional& h);

enum class ChartCondition { Shape, Anchor, Span, Nonnegativity, Normalization, Kernel, Compatibility };

struct ChartViolation
{
    ChartCondition condition;
    std::size_t i = 0;
    std::size_t j = 0;
    std::string detail;
};

struct ChartValidation
{
    std::vector<ChartViolation> violations;
    bool valid() const noexcept { return violations.empty(); }
    bool violates(ChartCondition c) const;
};

ChartValidation validate_chart_point(const SharpFsMonoid& S, const RatioChartPoint& p);

RatioChartPoint pi_map(const SharpFsMonoid& S, const FaceChain& chain, const AnchorSet& anchors,
                       const PositiveHom& h);

RatioPoint canonicalize(const SharpFsMonoid& S, const RatioChartPoint& p);

bool in_chart(const RatioPoint& q, const FaceChain& chain);

/** Throws NotInChart when the kernel chain of q is not contained in Φ. */
RatioChartPoint chart_coords(const SharpFsMonoid& S, const RatioPoint& q, const FaceChain& chain,
                             const AnchorSet& anchors);

/** The sections p_i = face_section(S, S^(i)), 0 <= i < n. */
std::vector<FaceSection> chain_sections(const SharpFsMonoid& S, const FaceChain& chain);

/** θ_t(N) = Σ t^i N_i ∘ p_i as a functional on S. */
RationalFunctional theta(const SharpFsMonoid& S, const RatioChartPoint& p, const Rational& t,
                         const std::vector<FaceSection>& sections);

/**
 * f(N, t) = π(t^n L + (1-t) θ_t(N)) for t ∈ (0, 1], and f(N, 0) = N.
 */
RatioChartPoint homotopy(const SharpFsMonoid& S, const RatioChartPoint& p, const PositiveHom& L,
                         const Rational& t, const std::vector<FaceSection>& sections);

/** max_i max_{g ∈ gens S^(i)} |N_i(g) - N'_i(g)|. Both points must share a chain. */
Rational chart_distance(const SharpFsMonoid& S, const RatioChartPoint& a, const RatioChartPoint& b);

struct DistanceSample
{
    unsigned k = 0;
    Rational t;
    Rational distance;
};

/**
 * At level i and parameter t: b(t) = (1-t) Σ_{k<=i} t^{k-i} M_k(a_i) and the
 * check that π(...)_i equals (M_i + E/b) / (1 + E(a_i)/b) exactly.
 */
struct LevelCheck
{
    std::size_t level = 0;
    unsigned k = 0;
    Rational t;
    Rational b;
    bool bound_holds = false;           ///< b(t) >= 1 - t
    bool decomposition_holds = false;   ///< closed form agrees with the homotopy
};

struct ConvergenceReport
{
    std::vector<DistanceSample> distances;  ///< k = 1..k_max, t = 2^{-k}
    std::vector<LevelCheck> levels;
    /** Smallest k0 such that d_k is nonincreasing for k >= k0. */
    unsigned monotone_from = 1;

    bool bounds_hold() const;
    bool decomposition_holds() const;
    /** d_{k_max} < d_1 / ratio, nonincreasing from `monotone_k`, all level checks pass. */
    bool converges(const Rational& ratio = 100, unsigned monotone_k = 4) const;
    /**
     * Tail evidence of convergence at a linear rate: stationary at 0, or d_k
     * nonincreasing for k >= monotone_k with d_{k_max} <= d_{k_max - 4} / 8,
     * and all level checks pass.
     */
    bool settles(unsigned monotone_k) const;
};

ConvergenceReport convergence_report(const SharpFsMonoid& S, const RatioChartPoint& p, const PositiveHom& L,
                                     unsigned k_max, const std::vector<FaceSection>& sections);

/** Deterministic seed derivation; independent streams for distinct keys. */
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key);

/**
 * Up to `count` distinct valid chart points of Φ whose kernel chain is
 * `stratum` (fewer only when the stratum has fewer points, e.g. R(N)).
 * Throws EmptyStratum if no attempt within the budget validates.
 */
std::vector<RatioChartPoint> sample_chart_points(const SharpFsMonoid& S, const FaceChain& chain,
                                                 const FaceChain& stratum, std::size_t count,
                                                 std::uint64_t seed);

std::string to_string(ChartCondition c);

}   // namespace ratiospace

#endif
