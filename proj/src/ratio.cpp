#include "ratiospace/ratio.hpp"

#include <algorithm>

namespace ratiospace {

namespace {

using boost::multiprecision::abs;

Rational power(const Rational& t, std::size_t e)
{
    Rational r = 1;
    for (std::size_t i = 0; i < e; ++i)
        r *= t;
    return r;
}

/** Transpose-apply: coefficients of N ∘ P where P acts on column vectors. */
RationalFunctional compose(const RationalFunctional& N, const RatMatrix& P)
{
    return RationalFunctional(P.transpose() * N.coeffs);
}

const Face& face_at(const SharpFsMonoid& S, std::size_t idx)
{
    return S.faces().at(idx);
}

}   // anonymous namespace

bool FaceChain::contains(std::size_t face) const
{
    return std::find(faces.begin(), faces.end(), face) != faces.end();
}

PositiveHom PositiveHom::make(const SharpFsMonoid& S, RationalFunctional h)
{
    if (h.dimension() != S.dim())
        throw Error(ErrorCode::DimensionMismatch, "functional is not of the monoid's dimension");
    for (const auto& g : S.generators())
        if (h(g) <= 0)
            throw Error(ErrorCode::NotInteriorHom,
                        "functional " + to_string(h.coeffs) + " is not positive on generator " + to_string(g));
    return PositiveHom(std::move(h));
}

PositiveHom canonical_positive_hom(const SharpFsMonoid& S)
{
    RationalFunctional h(RatVector(S.dim(), Rational(0)));
    for (const auto& f : S.facets())
        h = h + f;
    return PositiveHom::make(S, h);
}

void validate_chain(const SharpFsMonoid& S, const FaceChain& chain)
{
    if (chain.faces.size() < 2)
        throw Error(ErrorCode::InvalidInput, "a chain needs at least the faces S and {0}");
    if (chain.faces.front() != S.top().index || chain.faces.back() != S.bottom().index)
        throw Error(ErrorCode::InvalidInput, "a chain must start at S and end at {0}");
    for (std::size_t i = 0; i + 1 < chain.faces.size(); ++i)
    {
        const Face& a = face_at(S, chain.faces[i]);
        const Face& b = face_at(S, chain.faces[i + 1]);
        if (a.index == b.index || !S.is_subface(b, a))
            throw Error(ErrorCode::InvalidInput, "chain is not strictly decreasing at position " + std::to_string(i));
    }
}

std::vector<FaceChain> enumerate_chains(const SharpFsMonoid& S, bool maximal_only)
{
    if (S.is_trivial())
        throw Error(ErrorCode::TrivialMonoid, "the trivial monoid has no chains");

    std::vector<FaceChain> out;
    FaceChain current{{S.top().index}};
    auto extend = [&](auto&& self) -> void {
        const Face& last = face_at(S, current.faces.back());
        if (last.is_zero())
        {
            out.push_back(current);
            return;
        }
        for (const auto& next : S.faces())
        {
            if (next.index == last.index || !S.is_subface(next, last))
                continue;
            if (maximal_only && next.dim + 1 != last.dim)
                continue;
            current.faces.push_back(next.index);
            self(self);
            current.faces.pop_back();
        }
    };
    extend(extend);
    return out;
}

FaceChain chain_intersection(const FaceChain& a, const FaceChain& b)
{
    FaceChain out;
    for (auto f : a.faces)
        if (b.contains(f))
            out.faces.push_back(f);
    return out;
}

std::vector<FaceChain> strata(const FaceChain& chain)
{
    std::vector<FaceChain> out;
    const std::size_t inner = chain.faces.size() >= 2 ? chain.faces.size() - 2 : 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner); ++mask)
    {
        FaceChain s{{chain.faces.front()}};
        for (std::size_t i = 0; i < inner; ++i)
            if (mask & (std::uint64_t{1} << i))
                s.faces.push_back(chain.faces[i + 1]);
        s.faces.push_back(chain.faces.back());
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const FaceChain& x, const FaceChain& y) {
        if (x.faces.size() != y.faces.size())
            return x.faces.size() < y.faces.size();
        return x.faces < y.faces;
    });
    return out;
}

AnchorSet default_anchors(const SharpFsMonoid& S, const FaceChain& chain)
{
    validate_chain(S, chain);
    AnchorSet anchors;
    for (std::size_t i = 0; i < chain.length(); ++i)
        anchors.push_back(inner_point(face_at(S, chain.faces[i])));
    return anchors;
}

RationalFunctional restrict_to_face(const SharpFsMonoid& S, std::size_t face, const RationalFunctional& h)
{
    if (h.dimension() != S.dim())
        throw Error(ErrorCode::DimensionMismatch, "functional is not of the monoid's dimension");
    return RationalFunctional(face_at(S, face).projector * h.coeffs);
}

std::optional<std::size_t> kernel_face(const SharpFsMonoid& S, std::size_t face, const RationalFunctional& h)
{
    std::vector<std::size_t> support;
    for (auto g : face_at(S, face).support)
    {
        const Rational v = h(S.generators()[g]);
        if (v < 0)
            return std::nullopt;
        if (v == 0)
            support.push_back(g);
    }
    return S.find_face(support);
}

bool ChartValidation::violates(ChartCondition c) const
{
    return std::any_of(violations.begin(), violations.end(),
                       [c](const ChartViolation& v) { return v.condition == c; });
}

ChartValidation validate_chart_point(const SharpFsMonoid& S, const RatioChartPoint& p)
{
    ChartValidation out;
    auto fail = [&](ChartCondition c, std::size_t i, std::size_t j, std::string detail) {
        out.violations.push_back({c, i, j, std::move(detail)});
    };

    try
    {
        validate_chain(S, p.chain);
    }
    catch (const Error& e)
    {
        fail(ChartCondition::Shape, 0, 0, e.what());
        return out;
    }
    const std::size_t n = p.chain.length();
    if (p.anchors.size() != n || p.maps.size() != n)
    {
        fail(ChartCondition::Shape, 0, 0, "expected " + std::to_string(n) + " anchors and maps");
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (p.anchors[i].size() != S.dim() || p.maps[i].dimension() != S.dim())
        {
            fail(ChartCondition::Shape, i, 0, "anchor or map has wrong dimension");
            return out;
        }

    for (std::size_t i = 0; i < n; ++i)
    {
        const Face& Fi = face_at(S, p.chain.faces[i]);
        const Face& Fnext = face_at(S, p.chain.faces[i + 1]);
        if (!S.face_contains(Fi, p.anchors[i]) || S.face_contains(Fnext, p.anchors[i]))
            fail(ChartCondition::Anchor, i, 0, "anchor " + to_string(p.anchors[i]) + " not in S^(i) \\ S^(i+1)");
    }
    if (!out.valid())
        return out;

    for (std::size_t i = 0; i < n; ++i)
    {
        const std::size_t fi = p.chain.faces[i];
        const RationalFunctional& N = p.maps[i];
        if (restrict_to_face(S, fi, N) != N)
            fail(ChartCondition::Span, i, 0, "map is not represented inside span(S^(i))");

        if (N(p.anchors[i]) != 1)
            fail(ChartCondition::Normalization, i, 0, "N_i(a_i) = " + to_string(N(p.anchors[i])));

        const auto ker = kernel_face(S, fi, N);
        if (!ker)
        {
            fail(ChartCondition::Nonnegativity, i, 0, "map is negative on a generator of S^(i)");
            continue;
        }
        bool found = false;
        for (std::size_t j = i + 1; j <= n; ++j)
            found = found || p.chain.faces[j] == *ker;
        if (!found)
            fail(ChartCondition::Kernel, i, 0, "kernel face " + face_label(face_at(S, *ker)) + " is not S^(j), j > i");
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
        {
            const Rational scale = p.maps[i](p.anchors[j]);
            for (auto g : face_at(S, p.chain.faces[j]).support)
            {
                const IntVector& x = S.generators()[g];
                if (p.maps[i](x) != scale * p.maps[j](x))
                {
                    fail(ChartCondition::Compatibility, i, j, "N_i|S^(j) != N_i(a_j) N_j at generator " + to_string(x));
                    break;
                }
            }
        }
    return out;
}

RatioChartPoint pi_map(const SharpFsMonoid& S, const FaceChain& chain, const AnchorSet& anchors,
                       const PositiveHom& h)
{
    validate_chain(S, chain);
    if (anchors.size() != chain.length())
        throw Error(ErrorCode::InvalidInput, "expected one anchor per non-terminal face of the chain");
    RatioChartPoint p{chain, anchors, {}};
    for (std::size_t i = 0; i < chain.length(); ++i)
    {
        const Rational ha = h.functional()(anchors[i]);
        if (ha <= 0)
            throw Error(ErrorCode::InvalidInput, "anchor " + to_string(anchors[i]) + " is zero");
        p.maps.push_back(restrict_to_face(S, chain.faces[i], h.functional() * (1 / ha)));
    }
    return p;
}

RatioPoint canonicalize(const SharpFsMonoid& S, const RatioChartPoint& p)
{
    const auto validation = validate_chart_point(S, p);
    if (!validation.valid())
        throw Error(ErrorCode::InvalidPoint, "cannot canonicalize an invalid chart point: "
                                             + validation.violations.front().detail);
    const std::size_t n = p.chain.length();
    RatioPoint q;
    std::size_t k = 0;
    while (k < n)
    {
        const std::size_t face = p.chain.faces[k];
        q.kernel_chain.push_back(face);
        const RationalFunctional& N = p.maps[k];
        q.maps.push_back(N * (1 / N(inner_point(face_at(S, face)))));
        const std::size_t ker = *kernel_face(S, face, N);
        std::size_t j = k + 1;
        while (p.chain.faces[j] != ker)
            ++j;
        k = j;
    }
    q.kernel_chain.push_back(p.chain.faces[n]);
    return q;
}

bool in_chart(const RatioPoint& q, const FaceChain& chain)
{
    return std::all_of(q.kernel_chain.begin(), q.kernel_chain.end(),
                       [&](std::size_t f) { return chain.contains(f); });
}

RatioChartPoint chart_coords(const SharpFsMonoid& S, const RatioPoint& q, const FaceChain& chain,
                             const AnchorSet& anchors)
{
    validate_chain(S, chain);
    if (!in_chart(q, chain))
        throw Error(ErrorCode::NotInChart, "kernel chain of the point is not contained in the chart");
    if (anchors.size() != chain.length())
        throw Error(ErrorCode::InvalidInput, "expected one anchor per non-terminal face of the chain");

    RatioChartPoint p{chain, anchors, {}};
    std::size_t m = 0;
    for (std::size_t i = 0; i < chain.length(); ++i)
    {
        // Block m: T_m ⊇ S^(i) ⊋ T_{m+1}.
        if (chain.faces[i] == q.kernel_chain[m + 1])
            ++m;
        const RationalFunctional& nu = q.maps[m];
        const Rational scale = nu(anchors[i]);
        if (scale <= 0)
            throw Error(ErrorCode::InvalidInput, "anchor " + to_string(anchors[i]) + " lies in the kernel");
        p.maps.push_back(restrict_to_face(S, chain.faces[i], nu * (1 / scale)));
    }
    return p;
}

std::vector<FaceSection> chain_sections(const SharpFsMonoid& S, const FaceChain& chain)
{
    validate_chain(S, chain);
    std::vector<FaceSection> out;
    for (std::size_t i = 0; i < chain.length(); ++i)
        out.push_back(face_section(S, face_at(S, chain.faces[i])));
    return out;
}

RationalFunctional theta(const SharpFsMonoid& S, const RatioChartPoint& p, const Rational& t,
                         const std::vector<FaceSection>& sections)
{
    const std::size_t n = p.chain.length();
    if (t <= 0)
        throw Error(ErrorCode::InvalidInput, "theta requires t > 0");
    if (sections.size() != n)
        throw Error(ErrorCode::SectionMismatch, "expected one section per chart level");
    for (std::size_t i = 0; i < n; ++i)
        if (sections[i].target != p.chain.faces[i] || sections[i].matrix.rows() != S.dim())
            throw Error(ErrorCode::SectionMismatch, "section " + std::to_string(i) + " does not target S^(i)");

    RationalFunctional sum(RatVector(S.dim(), Rational(0)));
    Rational ti = 1;
    for (std::size_t i = 0; i < n; ++i)
    {
        sum = sum + compose(p.maps[i], sections[i].matrix) * ti;
        ti *= t;
    }
    return sum;
}

RatioChartPoint homotopy(const SharpFsMonoid& S, const RatioChartPoint& p, const PositiveHom& L,
                         const Rational& t, const std::vector<FaceSection>& sections)
{
    if (t < 0 || t > 1)
        throw Error(ErrorCode::InvalidInput, "homotopy parameter must lie in [0, 1]");
    const auto validation = validate_chart_point(S, p);
    if (!validation.valid())
        throw Error(ErrorCode::InvalidPoint, "homotopy of an invalid chart point: " + validation.violations.front().detail);
    if (t == 0)
        return p;
    const std::size_t n = p.chain.length();
    const RationalFunctional h = L.functional() * power(t, n) + theta(S, p, t, sections) * (1 - t);
    return pi_map(S, p.chain, p.anchors, PositiveHom::make(S, h));
}

Rational chart_distance(const SharpFsMonoid& S, const RatioChartPoint& a, const RatioChartPoint& b)
{
    if (a.chain != b.chain || a.maps.size() != b.maps.size())
        throw Error(ErrorCode::InvalidInput, "distance between points of different charts");
    Rational best = 0;
    for (std::size_t i = 0; i < a.maps.size(); ++i)
        for (auto g : face_at(S, a.chain.faces[i]).support)
        {
            const IntVector& x = S.generators()[g];
            best = std::max(best, Rational(abs(a.maps[i](x) - b.maps[i](x))));
        }
    return best;
}

bool ConvergenceReport::bounds_hold() const
{
    return std::all_of(levels.begin(), levels.end(), [](const LevelCheck& c) { return c.bound_holds; });
}

bool ConvergenceReport::decomposition_holds() const
{
    return std::all_of(levels.begin(), levels.end(), [](const LevelCheck& c) { return c.decomposition_holds; });
}

bool ConvergenceReport::converges(const Rational& ratio, unsigned monotone_k) const
{
    if (distances.empty() || !bounds_hold() || !decomposition_holds())
        return false;
    const bool stationary = std::all_of(distances.begin(), distances.end(),
                                        [](const DistanceSample& s) { return s.distance == 0; });
    if (stationary)
        return true;
    return distances.back().distance * ratio < distances.front().distance && monotone_from <= monotone_k;
}

bool ConvergenceReport::settles(unsigned monotone_k) const
{
    if (distances.size() < 5 || !bounds_hold() || !decomposition_holds())
        return false;
    const bool stationary = std::all_of(distances.begin(), distances.end(),
                                        [](const DistanceSample& s) { return s.distance == 0; });
    if (stationary)
        return true;
    const Rational& last = distances.back().distance;
    const Rational& earlier = distances[distances.size() - 5].distance;
    return monotone_from <= monotone_k && last * 8 <= earlier && earlier > 0;
}

ConvergenceReport convergence_report(const SharpFsMonoid& S, const RatioChartPoint& p, const PositiveHom& L,
                                     unsigned k_max, const std::vector<FaceSection>& sections)
{
    const std::size_t n = p.chain.length();
    ConvergenceReport report;
    Rational t = 1;
    for (unsigned k = 1; k <= k_max; ++k)
    {
        t /= 2;
        const RatioChartPoint f = homotopy(S, p, L, t, sections);
        report.distances.push_back({k, t, chart_distance(S, f, p)});

        for (std::size_t i = 0; i < n; ++i)
        {
            const std::size_t fi = p.chain.faces[i];
            const IntVector& ai = p.anchors[i];

            LevelCheck check{i, k, t, 0, false, false};
            Rational sum = 0;
            for (std::size_t kk = 0; kk <= i; ++kk)
                sum += p.maps[kk](ai) / power(t, i - kk);
            check.b = (1 - t) * sum;
            check.bound_holds = check.b >= 1 - t;

            // E(t) = (t^{n-i} L + (1-t) Σ_{k>i} t^{k-i} M_k ∘ p_k) restricted to S^(i).
            RationalFunctional E = L.functional() * power(t, n - i);
            for (std::size_t kk = i + 1; kk < n; ++kk)
                E = E + compose(p.maps[kk], sections[kk].matrix) * ((1 - t) * power(t, kk - i));
            E = restrict_to_face(S, fi, E);
            const Rational denom = 1 + E(ai) / check.b;
            const RationalFunctional closed = (p.maps[i] + E * (1 / check.b)) * (1 / denom);
            check.decomposition_holds = closed == f.maps[i];
            report.levels.push_back(std::move(check));
        }
    }

    report.monotone_from = k_max == 0 ? 1 : k_max;
    for (unsigned k = k_max; k-- > 1; )
    {
        if (report.distances[k].distance > report.distances[k - 1].distance)
            break;
        report.monotone_from = k;
    }
    return report;
}

std::string to_string(ChartCondition c)
{
    switch (c)
    {
        case ChartCondition::Shape:         return "Shape";
        case ChartCondition::Anchor:        return "Anchor";
        case ChartCondition::Span:          return "Span";
        case ChartCondition::Nonnegativity: return "Nonnegativity";
        case ChartCondition::Normalization: return "Normalization";
        case ChartCondition::Kernel:        return "Kernel";
        case ChartCondition::Compatibility: return "Compatibility";
    }
    return "Unknown";
}

}   // namespace ratiospace
