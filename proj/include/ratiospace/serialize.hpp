#ifndef RATIOSPACE_SERIALIZE_HPP
#define RATIOSPACE_SERIALIZE_HPP

/**
 * JSON forms of the library types. Rationals are written as
 * {"num": "<decimal>", "den": "<decimal>"}; integer vectors as arrays of
 * integers (decimal strings when they do not fit in 64 bits). Faces and
 * chains are written by generator support.
 *
 * Readers accept rationals as integers, "p/q" strings, or num/den objects.
 */

#include <json.hpp>
#include "ratiospace/logmod.hpp"
#include "ratiospace/ratio.hpp"
#include "ratiospace/retraction.hpp"
#include "ratiospace/topology.hpp"

namespace ratiospace {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "ratiospace/v1";

Json to_json(const Integer& x);
Json to_json(const Rational& q);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
Json to_json(const RationalFunctional& f);
Json to_json(const RatMatrix& m);

Integer   integer_from_json(const Json& j);
Rational  rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);

Json to_json(const SharpFsMonoid& S);
SharpFsMonoid monoid_from_json(const Json& j);

Json to_json(const SharpFsMonoid& S, const Face& F);
Json faces_to_json(const SharpFsMonoid& S);
const Face& face_from_json(const SharpFsMonoid& S, const Json& support);

Json to_json(const SharpFsMonoid& S, const FaceChain& chain);
FaceChain chain_from_json(const SharpFsMonoid& S, const Json& j);

Json to_json(const SharpFsMonoid& S, const RatioChartPoint& p);
RatioChartPoint chart_point_from_json(const SharpFsMonoid& S, const Json& j);
Json to_json(const SharpFsMonoid& S, const RatioPoint& q);
Json to_json(const ChartValidation& v);

Json to_json(const SharpFsMonoid& S, const FaceSection& section);
Json to_json(const SectionReport& report);

Json to_json(const ConvergenceReport& report);

Json to_json(const SimplicialComplex& K);
Json to_json(const HomologyReport& h);
Json to_json(const SharpFsMonoid& S, const RatioNerve& nerve);
Json to_json(const SharpFsMonoid& S, const ContractibilityCertificate& cert);

Json to_json(const DualConeFan& fan);
DualConeFan fan_from_json(const Json& j);
Json to_json(const BlowupFiber& fiber);

}   // namespace ratiospace

#endif
