#ifndef RATIOSPACE_LOGMOD_HPP
#define RATIOSPACE_LOGMOD_HPP

#include <vector>
#include "ratiospace/monoid.hpp"
#include "ratiospace/topology.hpp"

namespace ratiospace {

/** Point with log structure S -> R>=0 sending every nonzero element to 0. */
struct LogPoint
{
    SharpFsMonoid monoid;

    /** Value of the structure map (multiplicative notation): 1 at the unit, 0 elsewhere. */
    Integer structure_value(const IntVector& x) const;
};

/**
 * Subdivision of the dual cone C(S) = Hom(S, R>=0). Rays are primitive
 * integer functionals; each cone lists indices into `rays`.
 */
struct DualConeFan
{
    std::vector<IntVector> rays;
    std::vector<std::vector<std::size_t> > cones;
};

enum class FiberKind { Point, Interval, Complex };

struct BlowupFiber
{
    FiberKind kind = FiberKind::Point;
    SimplicialComplex complex;
    HomologyReport homology;
};

struct PairBlowup
{
    DualConeFan fan;
    BlowupFiber fiber;
    bool divisible = false;     ///< f - g ∈ S or g - f ∈ S
};

/** Extreme rays of C(S): the facet normals of S. */
std::vector<IntVector> dual_cone_rays(const SharpFsMonoid& S);

/**
 * Log blowup of the log point by (f, g): C(S) cut by N(f) = N(g). The fiber
 * over the point is a point when one of f/g, g/f lies in S and the interval
 * [0, ∞] (a closed 1-simplex) otherwise. Throws NotInMonoid.
 */
PairBlowup blowup_pair(const SharpFsMonoid& S, const IntVector& f, const IntVector& g);

/** Fan of C(S) cut along the given interior rays, for dim S <= 2. */
DualConeFan subdivide_dual_cone(const SharpFsMonoid& S, const std::vector<RatVector>& rays);

/** Rays of the fan that are not extreme rays of C(S). */
std::vector<IntVector> interior_rays(const SharpFsMonoid& S, const DualConeFan& fan);

/**
 * Fiber over the closed log point for dim S <= 2: a path with one segment
 * per interior ray. Throws InvalidFan if the cones do not subdivide C(S).
 */
BlowupFiber fiber_complex(const SharpFsMonoid& S, const DualConeFan& fan);

std::string to_string(FiberKind kind);

}   // namespace ratiospace

#endif
