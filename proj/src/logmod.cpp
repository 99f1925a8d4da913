#include "ratiospace/logmod.hpp"

#include <algorithm>
#include <set>

namespace ratiospace {

namespace {

Integer ray_value(const IntVector& r, const IntVector& x)
{
    Integer s = 0;
    for (std::size_t j = 0; j < r.size(); ++j)
        s += r[j] * x[j];
    return s;
}

int sign(const Integer& x)
{
    return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

Integer cross(const IntVector& a, const IntVector& b)
{
    return a[0] * b[1] - a[1] * b[0];
}

/** Two rays of C(S) span a 2-face iff their common zero set in S has rank d - 2. */
bool adjacent(const SharpFsMonoid& S, const IntVector& a, const IntVector& b)
{
    std::vector<IntVector> common;
    for (const auto& g : S.generators())
        if (ray_value(a, g) == 0 && ray_value(b, g) == 0)
            common.push_back(g);
    return rank(common, S.dim()) + 2 == S.dim();
}

BlowupFiber make_fiber(SimplicialComplex complex, FiberKind kind)
{
    BlowupFiber fiber;
    fiber.kind = kind;
    fiber.homology = homology(complex, 1);
    fiber.complex = std::move(complex);
    return fiber;
}

void require_low_dimension(const SharpFsMonoid& S)
{
    if (S.dim() > 2)
        throw Error(ErrorCode::DimensionUnsupported, "general log modifications are supported for dim S <= 2");
}

}   // anonymous namespace

Integer LogPoint::structure_value(const IntVector& x) const
{
    if (!monoid.contains(x))
        throw Error(ErrorCode::NotInMonoid, to_string(x) + " is not in S");
    return is_zero(x) ? 1 : 0;
}

std::vector<IntVector> dual_cone_rays(const SharpFsMonoid& S)
{
    std::vector<IntVector> rays;
    for (const auto& f : S.facets())
        rays.push_back(primitive(f.coeffs));
    return rays;
}

PairBlowup blowup_pair(const SharpFsMonoid& S, const IntVector& f, const IntVector& g)
{
    if (f.size() != S.dim() || g.size() != S.dim())
        throw Error(ErrorCode::DimensionMismatch, "blowup elements must have the monoid's dimension");
    if (!S.contains(f))
        throw Error(ErrorCode::NotInMonoid, to_string(f) + " is not in S");
    if (!S.contains(g))
        throw Error(ErrorCode::NotInMonoid, to_string(g) + " is not in S");

    IntVector f_minus_g(S.dim()), u(S.dim());
    for (std::size_t j = 0; j < S.dim(); ++j)
    {
        f_minus_g[j] = f[j] - g[j];
        u[j] = g[j] - f[j];
    }

    PairBlowup out;
    out.divisible = S.contains(f_minus_g) || S.contains(u);

    const auto extreme = dual_cone_rays(S);
    bool pos = false, neg = false;
    for (const auto& r : extreme)
    {
        pos = pos || ray_value(r, u) > 0;
        neg = neg || ray_value(r, u) < 0;
    }

    std::set<IntVector> ray_set(extreme.begin(), extreme.end());
    std::vector<std::set<IntVector> > pieces;
    if (!(pos && neg))
    {
        // One side of N(f) = N(g) is a proper face of C(S): the fan is C(S) itself.
        pieces.emplace_back(extreme.begin(), extreme.end());
    }
    else
    {
        std::set<IntVector> upper, lower;   // N(f) <= N(g), N(f) >= N(g)
        for (const auto& r : extreme)
        {
            if (ray_value(r, u) >= 0) upper.insert(r);
            if (ray_value(r, u) <= 0) lower.insert(r);
        }
        for (const auto& a : extreme)
            for (const auto& b : extreme)
            {
                const Integer va = ray_value(a, u), vb = ray_value(b, u);
                if (va <= 0 || vb >= 0 || !adjacent(S, a, b))
                    continue;
                RatVector cut(S.dim());
                for (std::size_t j = 0; j < S.dim(); ++j)
                    cut[j] = Rational(va * b[j] - vb * a[j]);
                const IntVector ray = primitive(cut);
                upper.insert(ray);
                lower.insert(ray);
                ray_set.insert(ray);
            }
        pieces.push_back(std::move(upper));
        pieces.push_back(std::move(lower));
    }

    out.fan.rays.assign(ray_set.begin(), ray_set.end());
    for (const auto& piece : pieces)
    {
        std::vector<std::size_t> cone;
        for (const auto& r : piece)
            cone.push_back(static_cast<std::size_t>(
                std::lower_bound(out.fan.rays.begin(), out.fan.rays.end(), r) - out.fan.rays.begin()));
        out.fan.cones.push_back(std::move(cone));
    }

    if (out.divisible)
        out.fiber = make_fiber(SimplicialComplex::point(), FiberKind::Point);
    else
        out.fiber = make_fiber(SimplicialComplex({"0", "inf"}, {{0, 1}}), FiberKind::Interval);
    return out;
}

DualConeFan subdivide_dual_cone(const SharpFsMonoid& S, const std::vector<RatVector>& rays)
{
    require_low_dimension(S);
    const auto extreme = dual_cone_rays(S);
    DualConeFan fan;

    std::vector<IntVector> inner;
    for (const auto& r : rays)
    {
        if (r.size() != S.dim())
            throw Error(ErrorCode::DimensionMismatch, "ray has wrong dimension");
        const IntVector p = primitive(r);
        if (S.dim() < 2 || is_zero(p))
            throw Error(ErrorCode::RayOutsideCone, "ray " + to_string(r) + " is not strictly inside C(S)");
        const int o = sign(cross(extreme[0], extreme[1]));
        if (sign(cross(extreme[0], p)) != o || sign(cross(p, extreme[1])) != o)
            throw Error(ErrorCode::RayOutsideCone, "ray " + to_string(r) + " is not strictly inside C(S)");
        for (const auto& q : inner)
            if (cross(p, q) == 0)
                throw Error(ErrorCode::InvalidInput, "rays " + to_string(p) + " and " + to_string(q) + " are proportional");
        inner.push_back(p);
    }

    if (S.dim() < 2)
    {
        fan.rays = extreme;
        std::vector<std::size_t> all;
        for (std::size_t i = 0; i < fan.rays.size(); ++i)
            all.push_back(i);
        fan.cones.push_back(std::move(all));
        return fan;
    }

    const int o = sign(cross(extreme[0], extreme[1]));
    std::sort(inner.begin(), inner.end(), [o](const IntVector& a, const IntVector& b) {
        return sign(cross(a, b)) == o;
    });
    fan.rays.push_back(extreme[0]);
    fan.rays.insert(fan.rays.end(), inner.begin(), inner.end());
    fan.rays.push_back(extreme[1]);
    for (std::size_t i = 0; i + 1 < fan.rays.size(); ++i)
        fan.cones.push_back({i, i + 1});
    return fan;
}

std::vector<IntVector> interior_rays(const SharpFsMonoid& S, const DualConeFan& fan)
{
    const auto extreme = dual_cone_rays(S);
    std::vector<IntVector> out;
    for (const auto& r : fan.rays)
    {
        const IntVector p = primitive(to_rational(r));
        if (std::find(extreme.begin(), extreme.end(), p) == extreme.end())
            out.push_back(p);
    }
    return out;
}

BlowupFiber fiber_complex(const SharpFsMonoid& S, const DualConeFan& fan)
{
    require_low_dimension(S);
    std::vector<IntVector> rays;
    for (const auto& r : fan.rays)
    {
        if (r.size() != S.dim())
            throw Error(ErrorCode::DimensionMismatch, "fan ray has wrong dimension");
        const IntVector p = primitive(to_rational(r));
        if (is_zero(p))
            throw Error(ErrorCode::InvalidFan, "zero ray in fan");
        for (const auto& g : S.generators())
            if (ray_value(p, g) < 0)
                throw Error(ErrorCode::InvalidFan, "ray " + to_string(p) + " is outside C(S)");
        rays.push_back(p);
    }
    for (const auto& cone : fan.cones)
        for (auto i : cone)
            if (i >= rays.size())
                throw Error(ErrorCode::InvalidFan, "cone refers to an unknown ray");

    if (S.dim() < 2)
    {
        if (fan.cones.size() != 1 || fan.cones.front().size() != rays.size())
            throw Error(ErrorCode::InvalidFan, "the dual cone of a monoid of dimension <= 1 admits no proper subdivision");
        return make_fiber(SimplicialComplex::point(), FiberKind::Point);
    }

    // Angular order starting at the first extreme ray; the fan must consist of
    // exactly the consecutive pairs, beginning and ending at the extreme rays.
    const auto extreme = dual_cone_rays(S);
    const int o = sign(cross(extreme[0], extreme[1]));
    std::vector<std::size_t> order(rays.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (cross(extreme[0], rays[a]) == 0) return cross(extreme[0], rays[b]) != 0;
        if (cross(extreme[0], rays[b]) == 0) return false;
        return sign(cross(rays[a], rays[b])) == o;
    });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (cross(rays[order[i]], rays[order[i + 1]]) == 0)
            throw Error(ErrorCode::InvalidFan, "fan contains proportional rays");
    if (order.size() < 2 || rays[order.front()] != extreme[0] || rays[order.back()] != extreme[1])
        throw Error(ErrorCode::InvalidFan, "fan does not cover C(S)");

    std::set<std::pair<std::size_t, std::size_t> > expected, actual;
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        expected.emplace(std::min(order[i], order[i + 1]), std::max(order[i], order[i + 1]));
    for (const auto& cone : fan.cones)
    {
        if (cone.size() != 2)
            throw Error(ErrorCode::InvalidFan, "maximal cones of a 2-dimensional fan have two rays");
        actual.emplace(std::min(cone[0], cone[1]), std::max(cone[0], cone[1]));
    }
    if (actual != expected || actual.size() != fan.cones.size())
        throw Error(ErrorCode::InvalidFan, "cones are not the consecutive sectors of C(S)");

    const std::size_t r = rays.size() - 2;
    const FiberKind kind = r == 0 ? FiberKind::Point : (r == 1 ? FiberKind::Interval : FiberKind::Complex);
    return make_fiber(r == 0 ? SimplicialComplex::point() : SimplicialComplex::path(r), kind);
}

std::string to_string(FiberKind kind)
{
    switch (kind)
    {
        case FiberKind::Point:    return "Point";
        case FiberKind::Interval: return "Interval";
        case FiberKind::Complex:  return "Complex";
    }
    return "Unknown";
}

}   // namespace ratiospace
