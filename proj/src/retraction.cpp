#include "ratiospace/retraction.hpp"

#include <algorithm>

namespace ratiospace {

namespace {

Integer ceil_rational(const Rational& q)
{
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    Integer quot = num / den;           // truncates toward zero
    if (quot * den != num && num > 0)
        ++quot;
    return quot;
}

Rational eval(const IntVector& l, const IntVector& x)
{
    Integer s = 0;
    for (std::size_t j = 0; j < l.size(); ++j)
        s += l[j] * x[j];
    return Rational(s);
}

const Face& checked_face(const SharpFsMonoid& S, const Face& F)
{
    if (F.index >= S.faces().size() || S.faces()[F.index].support != F.support)
        throw Error(ErrorCode::NotAFace, "face " + face_label(F) + " does not belong to this monoid");
    return S.faces()[F.index];
}

/** Image of x under the step map with scaling constant c. */
RatVector step_image(const SectionStep& step, const IntVector& x, const Integer& c)
{
    const Rational lx = eval(step.l, x);
    const Rational lw = eval(step.l, step.complement);
    RatVector y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        y[j] = Rational(x[j]) - lx / lw * Rational(step.complement[j]) + Rational(c) * lx * Rational(step.anchor[j]);
    return y;
}

}   // anonymous namespace

RatVector FaceSection::apply(const IntVector& x) const
{
    return matrix * to_rational(x);
}

RatVector FaceSection::apply(const RatVector& x) const
{
    return matrix * x;
}

std::vector<std::size_t> section_chain(const SharpFsMonoid& S, const Face& F)
{
    const Face& target = checked_face(S, F);
    std::vector<std::size_t> chain{S.top().index};
    while (chain.back() != target.index)
    {
        const Face& current = S.faces()[chain.back()];
        // Faces are sorted by (dim desc, support lex): the first hit is the
        // lexicographically smallest candidate.
        std::optional<std::size_t> next;
        for (const auto& G : S.faces())
            if (G.dim + 1 == current.dim && S.is_subface(target, G) && S.is_subface(G, current))
            {
                next = G.index;
                break;
            }
        if (!next)
            throw Error(ErrorCode::NotAFace, "no codimension-1 face between " + face_label(current)
                                             + " and " + face_label(target));
        chain.push_back(*next);
    }
    return chain;
}

bool step_admissible(const SharpFsMonoid& S, const SectionStep& step, const Integer& c)
{
    const Face& G  = S.faces()[step.larger];
    const Face& Gs = S.faces()[step.smaller];
    for (auto g : G.support)
        if (!S.face_contains(Gs, step_image(step, S.generators()[g], c)))
            return false;
    return true;
}

FaceSection face_section(const SharpFsMonoid& S, const Face& F, const SectionOptions& options)
{
    const Face& target = checked_face(S, F);
    const std::size_t d = S.dim();
    const auto chain = section_chain(S, target);
    const std::size_t nsteps = chain.size() - 1;
    if (options.complements && options.complements->size() != nsteps)
        throw Error(ErrorCode::InvalidInput, "expected one complement vector per section step");

    FaceSection section;
    section.target = target.index;
    section.matrix = RatMatrix::identity(d);

    for (std::size_t s = 0; s < nsteps; ++s)
    {
        const Face& G  = S.faces()[chain[s]];
        const Face& Gs = S.faces()[chain[s + 1]];

        SectionStep step;
        step.larger = G.index;
        step.smaller = Gs.index;

        for (auto f : Gs.zero_facets)
            if (!std::binary_search(G.zero_facets.begin(), G.zero_facets.end(), f))
            {
                step.l = primitive(S.facets()[f].coeffs);
                break;
            }

        if (options.complements)
        {
            step.complement = (*options.complements)[s];
            if (step.complement.size() != d)
                throw Error(ErrorCode::DimensionMismatch, "complement vector has wrong dimension");
            if (eval(step.l, step.complement) == 0)
                throw Error(ErrorCode::InvalidInput, "complement vector lies in the kernel of l");
            if (G.projector * to_rational(step.complement) != to_rational(step.complement))
                throw Error(ErrorCode::InvalidInput, "complement vector is not in the span of the larger face");
        }
        else
        {
            Rational best = -1;
            for (auto g : G.support)
            {
                const Rational v = eval(step.l, S.generators()[g]);
                if (v > best)
                {
                    best = v;
                    step.complement = S.generators()[g];
                }
            }
        }
        step.anchor = Gs.inner ? *Gs.inner : IntVector(d, Integer(0));

        // Least c: every facet mu of S with mu(a) > 0 needs
        // mu(y) + c l(x) mu(a) >= 0 for y = x - l(x)/l(w) w.
        Integer c = 0;
        const Rational lw = eval(step.l, step.complement);
        for (auto g : G.support)
        {
            const IntVector& x = S.generators()[g];
            const Rational lx = eval(step.l, x);
            if (lx == 0)
                continue;
            RatVector y(d);
            for (std::size_t j = 0; j < d; ++j)
                y[j] = Rational(x[j]) - lx / lw * Rational(step.complement[j]);
            for (const auto& mu : S.facets())
            {
                const Rational mu_a = mu(step.anchor);
                if (mu_a <= 0)
                    continue;
                const Rational bound = -mu(y) / (lx * mu_a);
                if (bound > 0)
                    c = std::max(c, ceil_rational(bound));
            }
        }
        if (!step_admissible(S, step, c))
            throw Error(ErrorCode::InvalidInput, "chosen splitting admits no scaling constant");
        step.c = c;

        RatMatrix Q = RatMatrix::identity(d);
        for (std::size_t i = 0; i < d; ++i)
        {
            const Rational coef = Rational(c) * Rational(step.anchor[i]) - Rational(step.complement[i]) / lw;
            for (std::size_t j = 0; j < d; ++j)
                Q(i, j) += coef * Rational(step.l[j]);
        }
        step.matrix = Q;
        section.matrix = Q * section.matrix;
        section.scaling_constants.push_back(c);
        section.steps.push_back(std::move(step));
    }
    return section;
}

SectionReport verify_section(const SharpFsMonoid& S, const FaceSection& section)
{
    SectionReport report;
    if (section.target >= S.faces().size() || section.matrix.rows() != S.dim()
        || section.matrix.cols() != S.dim())
        throw Error(ErrorCode::SectionMismatch, "section does not belong to this monoid");
    const Face& F = S.faces()[section.target];

    for (auto g : F.support)
    {
        const RatVector image = section.apply(S.generators()[g]);
        if (image != to_rational(S.generators()[g]))
            report.violations.push_back({SectionViolation::Kind::NotIdentityOnFace, g, image});
    }
    for (std::size_t g = 0; g < S.generators().size(); ++g)
    {
        const RatVector image = section.apply(S.generators()[g]);
        if (!S.face_contains(F, image))
            report.violations.push_back({SectionViolation::Kind::OutsideFaceCone, g, image});
    }
    report.pass = report.violations.empty();
    return report;
}

std::string to_string(SectionViolation::Kind kind)
{
    switch (kind)
    {
        case SectionViolation::Kind::NotIdentityOnFace: return "NotIdentityOnFace";
        case SectionViolation::Kind::OutsideFaceCone:   return "OutsideFaceCone";
    }
    return "Unknown";
}

}   // namespace ratiospace
