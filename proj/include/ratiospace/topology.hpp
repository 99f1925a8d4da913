#ifndef RATIOSPACE_TOPOLOGY_HPP
#define RATIOSPACE_TOPOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>
#include "ratiospace/exactlin.hpp"
#include "ratiospace/ratio.hpp"

namespace ratiospace {

/**
 * Abstract simplicial complex, stored by its maximal simplices. Every subset
 * of a facet is a simplex; k-simplices are enumerated on demand.
 */
class SimplicialComplex
{
    public:
        using Simplex = std::vector<std::size_t>;

        SimplicialComplex() = default;
        SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> facets);

        static SimplicialComplex full_simplex(std::vector<std::string> labels);
        static SimplicialComplex point();
        /** Path v0 - v1 - ... - v_edges. */
        static SimplicialComplex path(std::size_t edges);

        std::size_t vertex_count() const noexcept { return labels_.size(); }
        const std::vector<std::string>& labels() const noexcept { return labels_; }
        const std::vector<Simplex>& facets() const noexcept { return facets_; }

        /** -1 for the empty complex. */
        int dimension() const;
        bool contains(const Simplex& s) const;
        bool is_full_simplex() const;

        /** Sorted list of k-simplices (k+1 vertices). */
        std::vector<Simplex> simplices(std::size_t k) const;
        std::size_t count(std::size_t k) const;

        /** Vertex contained in every facet, if any (then the complex is a cone). */
        std::optional<std::size_t> cone_apex() const;

        std::string to_dot(const std::string& name = "complex") const;

    private:
        std::vector<std::string> labels_;
        std::vector<Simplex> facets_;
};

/** Integer homology in degrees 0..max_degree. Betti numbers are unreduced. */
struct HomologyReport
{
    std::size_t max_degree = 0;
    std::vector<std::size_t> betti;
    std::vector<std::vector<Integer> > torsion;     ///< invariant factors > 1 per degree

    std::size_t reduced_betti(std::size_t k) const;
    /** b_0 = 1, b_k = 0 for 0 < k <= max_degree, no torsion. */
    bool acyclic() const;
};

/** Integer boundary matrix ∂_k : C_k -> C_{k-1}, rows indexed by (k-1)-simplices. */
IntMatrix boundary_matrix(const SimplicialComplex& K, std::size_t k);

struct BoundaryInvariants
{
    std::size_t rank = 0;
    std::vector<Integer> nonunit_factors;
};

/**
 * Rank and non-unit invariant factors of ∂_k, computed by sparse unimodular
 * elimination with a dense Smith normal form fallback.
 */
BoundaryInvariants boundary_invariants(const SimplicialComplex& K, std::size_t k);

HomologyReport homology(const SimplicialComplex& K, std::size_t max_degree);

/** Witness that the charts of `vertices` share the point `witness`. */
struct NerveWitness
{
    std::vector<std::size_t> vertices;
    FaceChain intersection;
    RatioPoint witness;
    bool validated = false;
};

struct NerveOptions
{
    /** Every vertex subset gets its own witness when the nerve has at most this many vertices. */
    std::size_t exhaustive_limit = 10;
    std::uint64_t seed = 0;
};

struct RatioNerve
{
    std::vector<FaceChain> vertex_chains;   ///< maximal chains, one per vertex
    SimplicialComplex complex;
    std::vector<NerveWitness> witnesses;
    bool exhaustive = false;

    bool all_witnessed() const;
};

/**
 * Nerve of the cover of R(S) by the charts of maximal chains. A vertex set
 * spans a simplex only if a point in the chart of the intersection chain is
 * constructed and checked in every member chart.
 */
RatioNerve nerve_of_ratio_cover(const SharpFsMonoid& S, const NerveOptions& options = {});

struct CertificateOptions
{
    std::size_t samples = 3;        ///< points per stratum of every chart
    unsigned k_max = 12;
    /**
     * Convergence evidence requires d_k nonincreasing for k >= monotone_by.
     * A path may pass through its start point before settling, so small k
     * are not required to be monotone.
     */
    unsigned monotone_by = 8;
    std::uint64_t seed = 0;
    std::size_t exhaustive_nerve_limit = 10;
    /** Cap on the number of simplices used for the nerve's homology. */
    std::size_t homology_simplex_budget = 100000;
};

struct PointEvidence
{
    RatioChartPoint point;
    bool start_matches = false;     ///< f(N, 0) = N
    bool end_matches = false;       ///< f(N, 1) = π(L)
    Rational first_distance;        ///< d_1
    Rational last_distance;         ///< d_{k_max}
    unsigned monotone_from = 0;
    bool bounds_hold = false;
    bool decomposition_holds = false;
    bool converges = false;

    bool pass() const { return start_matches && end_matches && converges; }
};

struct StratumEvidence
{
    FaceChain stratum;
    std::vector<PointEvidence> points;
    bool pass() const;
};

struct ChartEvidence
{
    FaceChain chain;
    std::vector<StratumEvidence> strata;
    bool pass() const;
};

struct ContractibilityCertificate
{
    CertificateOptions options;
    RationalFunctional L;
    std::vector<ChartEvidence> charts;
    RatioNerve nerve;
    bool nerve_full_simplex = false;
    HomologyReport nerve_homology;
    std::optional<std::size_t> cone_apex;

    bool charts_pass() const;
    bool homology_trivial() const;
    bool pass() const;
};

ContractibilityCertificate contractibility_certificate(const SharpFsMonoid& S, const CertificateOptions& options = {});

/** Largest degree D such that all simplices of dimension <= D+1 fit the budget. */
std::size_t homology_degree_within_budget(const SimplicialComplex& K, std::size_t budget);

}   // namespace ratiospace

#endif
