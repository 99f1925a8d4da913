#include "ratiospace/serialize.hpp"

#include <limits>

namespace ratiospace {

namespace {

Error bad_input(const std::string& what)
{
    return Error(ErrorCode::InvalidInput, what);
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw bad_input(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Json support_json(const Face& F)
{
    return Json(F.support);
}

}   // anonymous namespace

Json to_json(const Integer& x)
{
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return Json(x.convert_to<long long>());
    return Json(x.str());
}

Json to_json(const Rational& q)
{
    return Json{{"num", boost::multiprecision::numerator(q).str()},
                {"den", boost::multiprecision::denominator(q).str()}};
}

Json to_json(const IntVector& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

Json to_json(const RatVector& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

Json to_json(const RationalFunctional& f)
{
    return to_json(f.coeffs);
}

Json to_json(const RatMatrix& m)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(to_json(m.row(i)));
    return out;
}

Integer integer_from_json(const Json& j)
{
    try
    {
        if (j.is_number_integer())
            return Integer(j.get<long long>());
        if (j.is_string())
            return Integer(j.get<std::string>());
    }
    catch (const std::runtime_error&)
    {
    }
    throw bad_input("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j)
{
    try
    {
        if (j.is_number_integer())
            return Rational(j.get<long long>());
        if (j.is_string())
            return Rational(j.get<std::string>());
        if (j.is_object())
        {
            const Integer num = integer_from_json(field(j, "num"));
            const Integer den = integer_from_json(field(j, "den"));
            if (den == 0)
                throw bad_input("zero denominator");
            return Rational(num, den);
        }
    }
    catch (const Error&)
    {
        throw;
    }
    catch (const std::runtime_error&)
    {
    }
    throw bad_input("expected a rational, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j)
{
    if (!j.is_array())
        throw bad_input("expected an integer array, got " + j.dump());
    IntVector v;
    for (const auto& x : j)
        v.push_back(integer_from_json(x));
    return v;
}

RatVector rat_vector_from_json(const Json& j)
{
    if (!j.is_array())
        throw bad_input("expected a rational array, got " + j.dump());
    RatVector v;
    for (const auto& x : j)
        v.push_back(rational_from_json(x));
    return v;
}

Json to_json(const SharpFsMonoid& S)
{
    Json gens = Json::array();
    for (const auto& g : S.generators())
        gens.push_back(to_json(g));
    Json facets = Json::array();
    for (const auto& f : S.facets())
        facets.push_back(to_json(primitive(f.coeffs)));
    return Json{{"dim", S.dim()}, {"generators", gens}, {"facets", facets}};
}

SharpFsMonoid monoid_from_json(const Json& j)
{
    const Json& dim = field(j, "dim");
    if (!dim.is_number_unsigned())
        throw bad_input("\"dim\" must be a nonnegative integer");
    const Json& gens = field(j, "generators");
    if (!gens.is_array())
        throw bad_input("\"generators\" must be an array");
    std::vector<IntVector> generators;
    for (const auto& g : gens)
        generators.push_back(int_vector_from_json(g));
    return make_monoid(dim.get<std::size_t>(), std::move(generators));
}

Json to_json(const SharpFsMonoid& S, const Face& F)
{
    Json out{{"index", F.index}, {"support", support_json(F)}, {"dim", F.dim},
             {"zero_facets", F.zero_facets}, {"supporting", to_json(F.supporting)}};
    out["inner_point"] = F.inner ? to_json(*F.inner) : Json(nullptr);
    (void)S;
    return out;
}

Json faces_to_json(const SharpFsMonoid& S)
{
    Json faces = Json::array();
    for (const auto& F : S.faces())
        faces.push_back(to_json(S, F));
    Json hasse = Json::array();
    for (const auto& [upper, lower] : S.hasse_diagram())
        hasse.push_back(Json::array({upper, lower}));
    return Json{{"count", S.faces().size()}, {"faces", faces}, {"hasse", hasse}};
}

const Face& face_from_json(const SharpFsMonoid& S, const Json& support)
{
    if (!support.is_array())
        throw bad_input("a face is given by its generator support (array of indices)");
    std::vector<std::size_t> idx;
    for (const auto& x : support)
    {
        if (!x.is_number_unsigned())
            throw bad_input("generator index must be a nonnegative integer");
        idx.push_back(x.get<std::size_t>());
    }
    return S.face_by_support(idx);
}

Json to_json(const SharpFsMonoid& S, const FaceChain& chain)
{
    Json out = Json::array();
    for (auto f : chain.faces)
        out.push_back(support_json(S.faces()[f]));
    return out;
}

FaceChain chain_from_json(const SharpFsMonoid& S, const Json& j)
{
    if (!j.is_array())
        throw bad_input("a chain is an array of face supports");
    FaceChain chain;
    for (const auto& f : j)
        chain.faces.push_back(face_from_json(S, f).index);
    validate_chain(S, chain);
    return chain;
}

Json to_json(const SharpFsMonoid& S, const RatioChartPoint& p)
{
    Json anchors = Json::array();
    for (const auto& a : p.anchors)
        anchors.push_back(to_json(a));
    Json maps = Json::array();
    for (const auto& m : p.maps)
        maps.push_back(to_json(m));
    return Json{{"chain", to_json(S, p.chain)}, {"anchors", anchors}, {"maps", maps}};
}

RatioChartPoint chart_point_from_json(const SharpFsMonoid& S, const Json& j)
{
    RatioChartPoint p;
    p.chain = chain_from_json(S, field(j, "chain"));
    if (j.contains("anchors"))
    {
        if (!j.at("anchors").is_array())
            throw bad_input("\"anchors\" must be an array");
        for (const auto& a : j.at("anchors"))
            p.anchors.push_back(int_vector_from_json(a));
    }
    else
        p.anchors = default_anchors(S, p.chain);
    const Json& maps = field(j, "maps");
    if (!maps.is_array())
        throw bad_input("\"maps\" must be an array");
    for (const auto& m : maps)
        p.maps.emplace_back(rat_vector_from_json(m));
    return p;
}

Json to_json(const SharpFsMonoid& S, const RatioPoint& q)
{
    Json chain = Json::array();
    for (auto f : q.kernel_chain)
        chain.push_back(support_json(S.faces()[f]));
    Json maps = Json::array();
    for (const auto& m : q.maps)
        maps.push_back(to_json(m));
    return Json{{"kernel_chain", chain}, {"maps", maps}};
}

Json to_json(const ChartValidation& v)
{
    Json violations = Json::array();
    for (const auto& x : v.violations)
        violations.push_back(Json{{"condition", to_string(x.condition)}, {"i", x.i}, {"j", x.j}, {"detail", x.detail}});
    return Json{{"valid", v.valid()}, {"violations", violations}};
}

Json to_json(const SharpFsMonoid& S, const FaceSection& section)
{
    Json steps = Json::array();
    for (const auto& s : section.steps)
        steps.push_back(Json{{"larger", support_json(S.faces()[s.larger])},
                             {"smaller", support_json(S.faces()[s.smaller])},
                             {"l", to_json(s.l)},
                             {"complement", to_json(s.complement)},
                             {"anchor", to_json(s.anchor)},
                             {"c", to_json(s.c)}});
    Json cs = Json::array();
    for (const auto& c : section.scaling_constants)
        cs.push_back(to_json(c));
    return Json{{"target", support_json(S.faces()[section.target])},
                {"matrix", to_json(section.matrix)},
                {"scaling_constants", cs},
                {"steps", steps}};
}

Json to_json(const SectionReport& report)
{
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back(Json{{"kind", to_string(v.kind)}, {"generator", v.generator}, {"image", to_json(v.image)}});
    return Json{{"pass", report.pass}, {"violations", violations}};
}

Json to_json(const ConvergenceReport& report)
{
    Json distances = Json::array();
    for (const auto& d : report.distances)
        distances.push_back(Json{{"k", d.k}, {"t", to_json(d.t)}, {"distance", to_json(d.distance)}});
    Json levels = Json::array();
    for (const auto& c : report.levels)
        levels.push_back(Json{{"level", c.level}, {"k", c.k}, {"b", to_json(c.b)},
                              {"bound_holds", c.bound_holds}, {"decomposition_holds", c.decomposition_holds}});
    return Json{{"distances", distances}, {"levels", levels}, {"monotone_from", report.monotone_from},
                {"bounds_hold", report.bounds_hold()}, {"decomposition_holds", report.decomposition_holds()},
                {"converges", report.converges()}, {"settles", report.settles(CertificateOptions{}.monotone_by)}};
}

Json to_json(const SimplicialComplex& K)
{
    return Json{{"vertices", K.labels()}, {"facets", K.facets()}, {"dimension", K.dimension()}};
}

Json to_json(const HomologyReport& h)
{
    Json torsion = Json::array();
    for (const auto& t : h.torsion)
    {
        Json tk = Json::array();
        for (const auto& x : t)
            tk.push_back(to_json(x));
        torsion.push_back(tk);
    }
    return Json{{"max_degree", h.max_degree}, {"betti", h.betti}, {"torsion", torsion}, {"acyclic", h.acyclic()}};
}

Json to_json(const SharpFsMonoid& S, const RatioNerve& nerve)
{
    Json vertices = Json::array();
    for (const auto& c : nerve.vertex_chains)
        vertices.push_back(to_json(S, c));
    Json witnesses = Json::array();
    for (const auto& w : nerve.witnesses)
        witnesses.push_back(Json{{"vertices", w.vertices},
                                 {"intersection", to_json(S, w.intersection)},
                                 {"witness", to_json(S, w.witness)},
                                 {"validated", w.validated}});
    return Json{{"vertex_chains", vertices}, {"complex", to_json(nerve.complex)},
                {"full_simplex", nerve.complex.is_full_simplex()}, {"exhaustive", nerve.exhaustive},
                {"witnesses", witnesses}, {"all_witnessed", nerve.all_witnessed()}};
}

Json to_json(const SharpFsMonoid& S, const ContractibilityCertificate& cert)
{
    Json charts = Json::array();
    for (const auto& chart : cert.charts)
    {
        Json strata = Json::array();
        for (const auto& st : chart.strata)
        {
            Json points = Json::array();
            for (const auto& p : st.points)
                points.push_back(Json{{"point", to_json(S, p.point)},
                                      {"start_matches", p.start_matches},
                                      {"end_matches", p.end_matches},
                                      {"first_distance", to_json(p.first_distance)},
                                      {"last_distance", to_json(p.last_distance)},
                                      {"monotone_from", p.monotone_from},
                                      {"bounds_hold", p.bounds_hold},
                                      {"decomposition_holds", p.decomposition_holds},
                                      {"converges", p.converges},
                                      {"pass", p.pass()}});
            strata.push_back(Json{{"stratum", to_json(S, st.stratum)}, {"points", points}, {"pass", st.pass()}});
        }
        charts.push_back(Json{{"chain", to_json(S, chart.chain)}, {"strata", strata}, {"pass", chart.pass()}});
    }
    const auto& o = cert.options;
    return Json{{"verdict", cert.pass() ? "PASS" : "FAIL"},
                {"options", Json{{"samples", o.samples}, {"k_max", o.k_max}, {"monotone_by", o.monotone_by}, {"seed", o.seed},
                                 {"exhaustive_nerve_limit", o.exhaustive_nerve_limit},
                                 {"homology_simplex_budget", o.homology_simplex_budget}}},
                {"L", to_json(cert.L)},
                {"charts", charts},
                {"charts_pass", cert.charts_pass()},
                {"nerve", to_json(S, cert.nerve)},
                {"nerve_full_simplex", cert.nerve_full_simplex},
                {"nerve_homology", to_json(cert.nerve_homology)},
                {"cone_apex", cert.cone_apex ? Json(*cert.cone_apex) : Json(nullptr)}};
}

Json to_json(const DualConeFan& fan)
{
    Json rays = Json::array();
    for (const auto& r : fan.rays)
        rays.push_back(to_json(r));
    return Json{{"rays", rays}, {"cones", fan.cones}};
}

DualConeFan fan_from_json(const Json& j)
{
    DualConeFan fan;
    const Json& rays = field(j, "rays");
    const Json& cones = field(j, "cones");
    if (!rays.is_array() || !cones.is_array())
        throw bad_input("fan needs \"rays\" and \"cones\" arrays");
    for (const auto& r : rays)
        fan.rays.push_back(int_vector_from_json(r));
    for (const auto& c : cones)
    {
        if (!c.is_array())
            throw bad_input("a cone is an array of ray indices");
        std::vector<std::size_t> cone;
        for (const auto& i : c)
        {
            if (!i.is_number_unsigned())
                throw bad_input("ray index must be a nonnegative integer");
            cone.push_back(i.get<std::size_t>());
        }
        fan.cones.push_back(std::move(cone));
    }
    return fan;
}

Json to_json(const BlowupFiber& fiber)
{
    return Json{{"kind", to_string(fiber.kind)}, {"complex", to_json(fiber.complex)},
                {"homology", to_json(fiber.homology)}};
}

}   // namespace ratiospace
