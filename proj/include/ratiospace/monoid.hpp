#ifndef RATIOSPACE_MONOID_HPP
#define RATIOSPACE_MONOID_HPP

#include <optional>
#include <string>
#include <vector>
#include "ratiospace/exactlin.hpp"

namespace ratiospace {

/**
 * A face of a sharp fs monoid. Faces are identified by their generator
 * support: the indices of the monoid generators lying on the face.
 */
struct Face
{
    std::size_t index = 0;                  ///< position in SharpFsMonoid::faces()
    std::vector<std::size_t> support;       ///< generator indices on the face, sorted
    std::vector<std::size_t> zero_facets;   ///< every facet of S vanishing on the face, sorted
    std::size_t dim = 0;
    IntVector supporting;                   ///< sum of the zero-facet normals; F = S ∩ {supporting = 0}
    std::optional<IntVector> inner;         ///< sum of supported generators (absent for {0})
    RatMatrix projector;                    ///< orthogonal projector onto span(F)

    bool is_zero() const noexcept { return support.empty(); }
};

/**
 * Saturated monoid S = cone(generators) ∩ Z^d with salient cone of full rank.
 * The trivial monoid {0} is the one with no generators.
 *
 * Faces are computed eagerly at construction and ordered by decreasing
 * dimension, then lexicographically by support; faces().front() is S and
 * faces().back() is {0}.
 */
class SharpFsMonoid
{
    public:
        SharpFsMonoid(std::size_t d, std::vector<IntVector> generators);

        std::size_t dim() const noexcept { return d_; }
        const std::vector<IntVector>& generators() const noexcept { return generators_; }
        const std::vector<RationalFunctional>& facets() const noexcept { return facets_; }
        const std::vector<Face>& faces() const noexcept { return faces_; }
        bool is_trivial() const noexcept { return generators_.empty(); }

        const Face& top() const { return faces_.front(); }
        const Face& bottom() const { return faces_.back(); }

        /** Face with the given support; throws NotAFace. */
        const Face& face_by_support(const std::vector<std::size_t>& support) const;
        std::optional<std::size_t> find_face(const std::vector<std::size_t>& support) const;

        /** x ∈ S. */
        bool contains(const IntVector& x) const;
        /** x ∈ cone(S)_Q. */
        bool contains(const RatVector& x) const;
        /** x ∈ F, for x in the ambient lattice. */
        bool face_contains(const Face& face, const IntVector& x) const;
        /** x ∈ cone(F)_Q. */
        bool face_contains(const Face& face, const RatVector& x) const;

        /** G ⊆ F as faces (support inclusion). */
        bool is_subface(const Face& g, const Face& f) const;

        std::vector<IntVector> face_generators(const Face& face) const;

        /** Covering pairs (upper, lower) of the face lattice, by face index. */
        std::vector<std::pair<std::size_t, std::size_t> > hasse_diagram() const;

    private:
        std::size_t d_;
        std::vector<IntVector> generators_;
        std::vector<RationalFunctional> facets_;
        std::vector<Face> faces_;

        void build_faces();
};

SharpFsMonoid make_monoid(std::size_t d, std::vector<IntVector> generators);

/** Inner point of a nonzero face: the sum of its generators. Throws ZeroFace. */
IntVector inner_point(const Face& face);

std::string face_label(const Face& face);

/** DOT rendering of the face lattice with nodes labeled by generator support. */
std::string face_lattice_dot(const SharpFsMonoid& S);

}   // namespace ratiospace

#endif
