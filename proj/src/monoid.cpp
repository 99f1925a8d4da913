#include "ratiospace/monoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ratiospace {

SharpFsMonoid::SharpFsMonoid(std::size_t d, std::vector<IntVector> generators)
    : d_(d), generators_(std::move(generators))
{
    for (const auto& g : generators_)
    {
        if (g.size() != d_)
            throw Error(ErrorCode::DimensionMismatch,
                        "generator " + to_string(g) + " is not of dimension " + std::to_string(d_));
        if (is_zero(g))
            throw Error(ErrorCode::ZeroGenerator, "generators must be nonzero");
    }
    if (!generators_.empty())
    {
        if (rank(generators_, d_) != d_)
            throw Error(ErrorCode::NotFullRank, "generators do not span the ambient lattice rationally");
        facets_ = dual_cone(generators_, d_);
    }
    build_faces();
}

void SharpFsMonoid::build_faces()
{
    const std::size_t m = generators_.size();

    std::vector<std::vector<std::size_t> > facet_support(facets_.size());
    for (std::size_t f = 0; f < facets_.size(); ++f)
        for (std::size_t g = 0; g < m; ++g)
            if (facets_[f](generators_[g]) == 0)
                facet_support[f].push_back(g);

    // Faces are the intersections of facet subsets; close {S} under
    // intersection with facets.
    std::vector<std::size_t> all(m);
    for (std::size_t g = 0; g < m; ++g)
        all[g] = g;
    std::set<std::vector<std::size_t> > seen{all};
    std::vector<std::vector<std::size_t> > queue{all};
    for (std::size_t q = 0; q < queue.size(); ++q)
    {
        for (const auto& fs : facet_support)
        {
            std::vector<std::size_t> meet;
            std::set_intersection(queue[q].begin(), queue[q].end(), fs.begin(), fs.end(),
                                  std::back_inserter(meet));
            if (seen.insert(meet).second)
                queue.push_back(meet);
        }
    }

    for (const auto& support : seen)
    {
        Face face;
        face.support = support;
        std::vector<IntVector> gens;
        for (auto g : support)
            gens.push_back(generators_[g]);
        face.dim = rank(gens, d_);
        face.supporting = IntVector(d_, Integer(0));
        for (std::size_t f = 0; f < facets_.size(); ++f)
        {
            if (!std::includes(facet_support[f].begin(), facet_support[f].end(),
                               support.begin(), support.end()))
                continue;
            face.zero_facets.push_back(f);
            const IntVector normal = primitive(facets_[f].coeffs);
            for (std::size_t j = 0; j < d_; ++j)
                face.supporting[j] += normal[j];
        }
        if (!support.empty())
        {
            IntVector a(d_, Integer(0));
            for (const auto& g : gens)
                for (std::size_t j = 0; j < d_; ++j)
                    a[j] += g[j];
            face.inner = a;
        }
        face.projector = span_projector(gens, d_);
        faces_.push_back(std::move(face));
    }

    std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim)
            return a.dim > b.dim;
        return a.support < b.support;
    });
    for (std::size_t i = 0; i < faces_.size(); ++i)
        faces_[i].index = i;
}

std::optional<std::size_t> SharpFsMonoid::find_face(const std::vector<std::size_t>& support) const
{
    std::vector<std::size_t> sorted(support);
    std::sort(sorted.begin(), sorted.end());
    for (const auto& f : faces_)
        if (f.support == sorted)
            return f.index;
    return std::nullopt;
}

const Face& SharpFsMonoid::face_by_support(const std::vector<std::size_t>& support) const
{
    auto idx = find_face(support);
    if (!idx)
    {
        std::string s;
        for (auto g : support)
            s += (s.empty() ? "" : ",") + std::to_string(g);
        throw Error(ErrorCode::NotAFace, "generator support {" + s + "} is not a face");
    }
    return faces_[*idx];
}

bool SharpFsMonoid::contains(const IntVector& x) const
{
    return contains(to_rational(x));
}

bool SharpFsMonoid::contains(const RatVector& x) const
{
    if (x.size() != d_)
        throw Error(ErrorCode::DimensionMismatch, "point is not of the monoid's dimension");
    if (is_trivial())
        return is_zero(x);
    return cone_contains(facets_, x);
}

bool SharpFsMonoid::face_contains(const Face& face, const IntVector& x) const
{
    return face_contains(face, to_rational(x));
}

bool SharpFsMonoid::face_contains(const Face& face, const RatVector& x) const
{
    if (!contains(x))
        return false;
    return dot(x, face.supporting) == 0;
}

bool SharpFsMonoid::is_subface(const Face& g, const Face& f) const
{
    return std::includes(f.support.begin(), f.support.end(), g.support.begin(), g.support.end());
}

std::vector<IntVector> SharpFsMonoid::face_generators(const Face& face) const
{
    std::vector<IntVector> out;
    for (auto g : face.support)
        out.push_back(generators_[g]);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t> > SharpFsMonoid::hasse_diagram() const
{
    // The face lattice is graded by dimension.
    std::vector<std::pair<std::size_t, std::size_t> > edges;
    for (const auto& upper : faces_)
        for (const auto& lower : faces_)
            if (lower.dim + 1 == upper.dim && is_subface(lower, upper))
                edges.emplace_back(upper.index, lower.index);
    return edges;
}

SharpFsMonoid make_monoid(std::size_t d, std::vector<IntVector> generators)
{
    return SharpFsMonoid(d, std::move(generators));
}

IntVector inner_point(const Face& face)
{
    if (!face.inner)
        throw Error(ErrorCode::ZeroFace, "the face {0} has no inner point");
    return *face.inner;
}

std::string face_label(const Face& face)
{
    std::string s = "{";
    for (std::size_t i = 0; i < face.support.size(); ++i)
        s += (i ? "," : "") + std::to_string(face.support[i]);
    return s + "}";
}

std::string face_lattice_dot(const SharpFsMonoid& S)
{
    std::ostringstream out;
    out << "digraph face_lattice {\n";
    for (const auto& f : S.faces())
        out << "  f" << f.index << " [label=\"" << face_label(f) << "\"];\n";
    for (const auto& [upper, lower] : S.hasse_diagram())
        out << "  f" << upper << " -> f" << lower << ";\n";
    out << "}\n";
    return out.str();
}

}   // namespace ratiospace
