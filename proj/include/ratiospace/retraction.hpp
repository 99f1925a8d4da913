#ifndef RATIOSPACE_RETRACTION_HPP
#define RATIOSPACE_RETRACTION_HPP

#include <optional>
#include <string>
#include <vector>
#include "ratiospace/monoid.hpp"

namespace ratiospace {

/**
 * One codimension-1 step G -> G' of a face section. On span(G) the step map is
 *
 *     x  |->  x - (l(x) / l(w)) w + c l(x) a
 *
 * where l is a facet functional of S vanishing on G' but not on G, w spans
 * the complement of span(G') in span(G), a is the inner point of G' (zero
 * when G' = {0}) and c is the least nonnegative integer sending every
 * generator of G into cone(G')_Q.
 */
struct SectionStep
{
    std::size_t larger = 0;     ///< face index of G
    std::size_t smaller = 0;    ///< face index of G'
    IntVector l;
    IntVector complement;       ///< w
    IntVector anchor;           ///< a
    Integer c = 0;
    RatMatrix matrix;           ///< d x d matrix of the step map
};

/**
 * Linear map p: S^gp ⊗ Q -> span(F) restricting to the identity on F and
 * sending S into cone(F)_Q, stored as a d x d rational matrix acting on
 * column vectors.
 */
struct FaceSection
{
    std::size_t target = 0;                 ///< face index of F
    RatMatrix matrix;
    std::vector<Integer> scaling_constants; ///< c per step, in chain order
    std::vector<SectionStep> steps;

    RatVector apply(const IntVector& x) const;
    RatVector apply(const RatVector& x) const;
};

struct SectionOptions
{
    /**
     * Per-step complement vectors overriding the default splitting (the
     * generator of the larger face with the largest l-value). Each must have
     * l(w) != 0.
     */
    std::optional<std::vector<IntVector> > complements;
};

/** Faces S = F_0 ⊋ F_1 ⊋ ... ⊋ F_k = F, each of codimension 1 in the previous one. */
std::vector<std::size_t> section_chain(const SharpFsMonoid& S, const Face& F);

FaceSection face_section(const SharpFsMonoid& S, const Face& F, const SectionOptions& options = {});

/**
 * True when x |-> x - (l(x)/l(w)) w + c l(x) a sends every generator of G into
 * cone(G')_Q.
 */
bool step_admissible(const SharpFsMonoid& S, const SectionStep& step, const Integer& c);

struct SectionViolation
{
    enum class Kind { NotIdentityOnFace, OutsideFaceCone };
    Kind kind;
    std::size_t generator;
    RatVector image;
};

struct SectionReport
{
    bool pass = true;
    std::vector<SectionViolation> violations;
};

SectionReport verify_section(const SharpFsMonoid& S, const FaceSection& section);

std::string to_string(SectionViolation::Kind kind);

}   // namespace ratiospace

#endif
