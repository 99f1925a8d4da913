#include <algorithm>
#include "ratiospace/topology.hpp"

namespace ratiospace {

namespace {

std::string chain_label(const SharpFsMonoid& S, const FaceChain& chain)
{
    std::string s;
    for (auto f : chain.faces)
        s += (s.empty() ? "" : ">") + face_label(S.faces()[f]);
    return s;
}

/**
 * A point whose kernel chain is exactly `inter`, checked to lie in the chart
 * of every chain in `members`.
 */
NerveWitness build_witness(const SharpFsMonoid& S, const std::vector<FaceChain>& chains,
                           const std::vector<std::size_t>& members, std::uint64_t seed)
{
    NerveWitness w;
    w.vertices = members;
    w.intersection = chains[members.front()];
    for (auto v : members)
        w.intersection = chain_intersection(w.intersection, chains[v]);

    const auto samples = sample_chart_points(S, w.intersection, w.intersection, 1, seed);
    w.witness = canonicalize(S, samples.front());

    bool ok = w.witness.kernel_chain == w.intersection.faces && in_chart(w.witness, w.intersection);
    for (auto v : members)
    {
        if (!ok)
            break;
        if (!in_chart(w.witness, chains[v]))
        {
            ok = false;
            break;
        }
        const auto coords = chart_coords(S, w.witness, chains[v], default_anchors(S, chains[v]));
        ok = validate_chart_point(S, coords).valid() && canonicalize(S, coords) == w.witness;
    }
    w.validated = ok;
    return w;
}

}   // anonymous namespace

bool RatioNerve::all_witnessed() const
{
    return !witnesses.empty() && std::all_of(witnesses.begin(), witnesses.end(),
                                             [](const NerveWitness& w) { return w.validated; });
}

RatioNerve nerve_of_ratio_cover(const SharpFsMonoid& S, const NerveOptions& options)
{
    RatioNerve nerve;
    nerve.vertex_chains = enumerate_chains(S, true);
    const std::size_t V = nerve.vertex_chains.size();
    std::vector<std::string> labels;
    for (const auto& c : nerve.vertex_chains)
        labels.push_back(chain_label(S, c));

    std::vector<std::vector<std::size_t> > subsets;
    nerve.exhaustive = V <= options.exhaustive_limit;
    if (nerve.exhaustive)
    {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << V); ++mask)
        {
            std::vector<std::size_t> s;
            for (std::size_t v = 0; v < V; ++v)
                if (mask & (std::uint64_t{1} << v))
                    s.push_back(v);
            subsets.push_back(std::move(s));
        }
    }
    else
    {
        // The full vertex set, plus every vertex and edge on its own.
        std::vector<std::size_t> all(V);
        for (std::size_t v = 0; v < V; ++v)
            all[v] = v;
        subsets.push_back(all);
        for (std::size_t v = 0; v < V; ++v)
            subsets.push_back({v});
        for (std::size_t a = 0; a < V; ++a)
            for (std::size_t b = a + 1; b < V; ++b)
                subsets.push_back({a, b});
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });

    std::vector<SimplicialComplex::Simplex> simplices;
    for (std::size_t i = 0; i < subsets.size(); ++i)
    {
        nerve.witnesses.push_back(build_witness(S, nerve.vertex_chains, subsets[i], derive_seed(options.seed, i)));
        if (nerve.witnesses.back().validated)
            simplices.push_back(subsets[i]);
    }
    nerve.complex = SimplicialComplex(std::move(labels), std::move(simplices));
    return nerve;
}

bool StratumEvidence::pass() const
{
    return !points.empty() && std::all_of(points.begin(), points.end(), [](const PointEvidence& p) { return p.pass(); });
}

bool ChartEvidence::pass() const
{
    return !strata.empty() && std::all_of(strata.begin(), strata.end(), [](const StratumEvidence& s) { return s.pass(); });
}

bool ContractibilityCertificate::charts_pass() const
{
    return !charts.empty() && std::all_of(charts.begin(), charts.end(), [](const ChartEvidence& c) { return c.pass(); });
}

bool ContractibilityCertificate::homology_trivial() const
{
    return nerve_homology.acyclic();
}

bool ContractibilityCertificate::pass() const
{
    return charts_pass() && nerve_full_simplex && nerve.all_witnessed() && homology_trivial() && cone_apex.has_value();
}

ContractibilityCertificate contractibility_certificate(const SharpFsMonoid& S, const CertificateOptions& options)
{
    ContractibilityCertificate cert;
    cert.options = options;
    const PositiveHom L = canonical_positive_hom(S);
    cert.L = L.functional();

    const auto chains = enumerate_chains(S, false);
    for (std::size_t c = 0; c < chains.size(); ++c)
    {
        ChartEvidence chart{chains[c], {}};
        const auto sections = chain_sections(S, chains[c]);
        const RatioChartPoint target = pi_map(S, chains[c], default_anchors(S, chains[c]), L);
        const auto all_strata = strata(chains[c]);
        for (std::size_t s = 0; s < all_strata.size(); ++s)
        {
            StratumEvidence stratum{all_strata[s], {}};
            const std::uint64_t seed = derive_seed(derive_seed(options.seed, c), s);
            for (auto& p : sample_chart_points(S, chains[c], all_strata[s], options.samples, seed))
            {
                PointEvidence ev;
                ev.start_matches = homotopy(S, p, L, Rational(0), sections) == p;
                ev.end_matches = homotopy(S, p, L, Rational(1), sections) == target;
                const auto report = convergence_report(S, p, L, options.k_max, sections);
                if (!report.distances.empty())
                {
                    ev.first_distance = report.distances.front().distance;
                    ev.last_distance = report.distances.back().distance;
                }
                ev.monotone_from = report.monotone_from;
                ev.bounds_hold = report.bounds_hold();
                ev.decomposition_holds = report.decomposition_holds();
                ev.converges = report.settles(options.monotone_by);
                ev.point = std::move(p);
                stratum.points.push_back(std::move(ev));
            }
            chart.strata.push_back(std::move(stratum));
        }
        cert.charts.push_back(std::move(chart));
    }

    cert.nerve = nerve_of_ratio_cover(S, {options.exhaustive_nerve_limit, options.seed});
    cert.nerve_full_simplex = cert.nerve.complex.is_full_simplex();
    cert.cone_apex = cert.nerve.complex.cone_apex();
    const std::size_t degree = homology_degree_within_budget(cert.nerve.complex, options.homology_simplex_budget);
    cert.nerve_homology = homology(cert.nerve.complex, degree);
    return cert;
}

}   // namespace ratiospace
