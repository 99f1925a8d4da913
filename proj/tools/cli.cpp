#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "ratiospace/serialize.hpp"

namespace ratiospace::cli {

namespace {

struct Settings
{
    std::string input;
    std::string output;
    std::string dot;
    std::uint64_t seed = 0;
    unsigned max_k = 12;
    std::size_t samples = 3;
};

struct Outcome
{
    Json report;
    bool pass = true;
    std::string dot;
};

Error input_error(const std::string& what)
{
    return Error(ErrorCode::InvalidInput, what);
}

Json load_input(const std::string& input)
{
    if (input.empty())
        throw input_error("--input is required");
    const auto first = input.find_first_not_of(" \t\r\n");
    std::string text;
    if (first != std::string::npos && (input[first] == '{' || input[first] == '['))
        text = input;
    else
    {
        std::ifstream in(input);
        if (!in)
            throw input_error("cannot read input file " + input);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try
    {
        return Json::parse(text);
    }
    catch (const Json::exception& e)
    {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

SharpFsMonoid read_monoid(const Json& in)
{
    if (!in.is_object())
        throw input_error("input must be a JSON object");
    return monoid_from_json(in.contains("monoid") ? in.at("monoid") : in);
}

const Json& require(const Json& in, const char* key)
{
    if (!in.contains(key))
        throw input_error(std::string("missing field \"") + key + "\"");
    return in.at(key);
}

PositiveHom read_hom(const SharpFsMonoid& S, const Json& in, const char* key)
{
    if (!in.contains(key))
        return canonical_positive_hom(S);
    return PositiveHom::make(S, RationalFunctional{rat_vector_from_json(in.at(key))});
}

AnchorSet read_anchors(const SharpFsMonoid& S, const Json& in, const FaceChain& chain)
{
    if (!in.contains("anchors"))
        return default_anchors(S, chain);
    AnchorSet anchors;
    for (const auto& a : in.at("anchors"))
        anchors.push_back(int_vector_from_json(a));
    return anchors;
}

Json rays_json(const std::vector<IntVector>& rays)
{
    Json out = Json::array();
    for (const auto& r : rays)
        out.push_back(to_json(r));
    return out;
}

Json chains_json(const SharpFsMonoid& S, const std::vector<FaceChain>& chains)
{
    Json out = Json::array();
    for (const auto& c : chains)
        out.push_back(to_json(S, c));
    return out;
}

Outcome do_faces(const Json& in, const Settings&)
{
    const SharpFsMonoid S = read_monoid(in);
    Outcome o;
    o.report = Json{{"monoid", to_json(S)}, {"lattice", faces_to_json(S)}};
    o.dot = face_lattice_dot(S);
    return o;
}

Outcome do_chains(const Json& in, const Settings&)
{
    const SharpFsMonoid S = read_monoid(in);
    const bool maximal = in.value("maximal", false);
    const auto chains = enumerate_chains(S, maximal);
    Outcome o;
    o.report = Json{{"monoid", to_json(S)}, {"maximal_only", maximal},
                    {"count", chains.size()}, {"chains", chains_json(S, chains)}};
    return o;
}

Outcome do_section(const Json& in, const Settings&)
{
    const SharpFsMonoid S = read_monoid(in);
    const Face& F = face_from_json(S, require(in, "face"));
    SectionOptions options;
    if (in.contains("complements"))
    {
        std::vector<IntVector> w;
        for (const auto& x : in.at("complements"))
            w.push_back(int_vector_from_json(x));
        options.complements = std::move(w);
    }
    const FaceSection section = face_section(S, F, options);
    const SectionReport verification = verify_section(S, section);

    bool minimal = true;
    for (const auto& step : section.steps)
        if (step.c >= 1 && step_admissible(S, step, step.c - 1))
            minimal = false;

    Outcome o;
    o.pass = verification.pass && minimal;
    o.report = Json{{"monoid", to_json(S)}, {"section", to_json(S, section)},
                    {"verification", to_json(verification)}, {"minimal", minimal}};
    return o;
}

Outcome do_ratio_validate(const Json& in, const Settings&)
{
    const SharpFsMonoid S = read_monoid(in);
    const RatioChartPoint p = chart_point_from_json(S, require(in, "point"));
    const ChartValidation v = validate_chart_point(S, p);
    Outcome o;
    o.pass = v.valid();
    o.report = Json{{"monoid", to_json(S)}, {"validation", to_json(v)}};
    if (v.valid())
        o.report["canonical"] = to_json(S, canonicalize(S, p));
    return o;
}

Outcome do_pi(const Json& in, const Settings&)
{
    const SharpFsMonoid S = read_monoid(in);
    const FaceChain chain = chain_from_json(S, require(in, "chain"));
    const AnchorSet anchors = read_anchors(S, in, chain);
    const PositiveHom h = read_hom(S, in, "functional");
    const RatioChartPoint p = pi_map(S, chain, anchors, h);

    // N -> N_0 followed by pi_map must return p.
    const PositiveHom n0 = PositiveHom::make(S, p.maps.front());
    const bool roundtrip = pi_map(S, chain, anchors, n0) == p;

    Outcome o;
    o.pass = roundtrip;
    o.report = Json{{"monoid", to_json(S)}, {"functional", to_json(h.functional())},
                    {"point", to_json(S, p)}, {"canonical", to_json(S, canonicalize(S, p))},
                    {"roundtrip", roundtrip}};
    return o;
}

Json homotopy_evidence(const SharpFsMonoid& S, const RatioChartPoint& p, const PositiveHom& L,
                       const std::vector<FaceSection>& sections, unsigned max_k, bool& pass)
{
    const RatioChartPoint target = pi_map(S, p.chain, p.anchors, L);
    const bool start = homotopy(S, p, L, Rational(0), sections) == p;
    const bool end = homotopy(S, p, L, Rational(1), sections) == target;
    const ConvergenceReport report = convergence_report(S, p, L, max_k, sections);
    const bool ok = start && end && report.settles(CertificateOptions{}.monotone_by);
    pass = pass && ok;
    return Json{{"point", to_json(S, p)}, {"start_matches", start}, {"end_matches", end},
                {"convergence", to_json(report)}, {"pass", ok}};
}

Outcome do_homotopy_verify(const Json& in, const Settings& s)
{
    const SharpFsMonoid S = read_monoid(in);
    const PositiveHom L = read_hom(S, in, "L");
    Outcome o;
    Json points = Json::array();

    if (in.contains("point"))
    {
        const RatioChartPoint p = chart_point_from_json(S, in.at("point"));
        const ChartValidation v = validate_chart_point(S, p);
        if (!v.valid())
            throw Error(ErrorCode::InvalidPoint, "point violates the chart conditions");
        points.push_back(homotopy_evidence(S, p, L, chain_sections(S, p.chain), s.max_k, o.pass));
    }
    else
    {
        std::vector<FaceChain> chains;
        if (in.contains("chain"))
            chains.push_back(chain_from_json(S, in.at("chain")));
        else
            chains = enumerate_chains(S, false);
        for (std::size_t c = 0; c < chains.size(); ++c)
        {
            const auto sections = chain_sections(S, chains[c]);
            const auto all_strata = strata(chains[c]);
            for (std::size_t k = 0; k < all_strata.size(); ++k)
            {
                const std::uint64_t seed = derive_seed(derive_seed(s.seed, c), k);
                for (const auto& p : sample_chart_points(S, chains[c], all_strata[k], s.samples, seed))
                    points.push_back(homotopy_evidence(S, p, L, sections, s.max_k, o.pass));
            }
        }
    }
    o.report = Json{{"monoid", to_json(S)}, {"L", to_json(L.functional())}, {"max_k", s.max_k},
                    {"points", points}, {"verdict", o.pass ? "PASS" : "FAIL"}};
    return o;
}

Outcome do_certificate(const Json& in, const Settings& s)
{
    const SharpFsMonoid S = read_monoid(in);
    CertificateOptions options;
    options.samples = s.samples;
    options.k_max = s.max_k;
    options.seed = s.seed;
    const ContractibilityCertificate cert = contractibility_certificate(S, options);
    Outcome o;
    o.pass = cert.pass();
    o.report = Json{{"monoid", to_json(S)}, {"certificate", to_json(S, cert)}, {"verdict", o.pass ? "PASS" : "FAIL"}};
    o.dot = cert.nerve.complex.to_dot("nerve");
    return o;
}

Outcome do_blowup(const Json& in, const Settings&)
{
    const SharpFsMonoid S = read_monoid(in);
    const IntVector f = int_vector_from_json(require(in, "f"));
    const IntVector g = int_vector_from_json(require(in, "g"));
    const PairBlowup b = blowup_pair(S, f, g);
    Outcome o;
    o.report = Json{{"monoid", to_json(S)}, {"f", to_json(f)}, {"g", to_json(g)},
                    {"divisible", b.divisible}, {"kind", to_string(b.fiber.kind)},
                    {"fan", to_json(b.fan)}, {"fiber", to_json(b.fiber)}};
    o.dot = b.fiber.complex.to_dot("fiber");
    return o;
}

Outcome do_fiber(const Json& in, const Settings&)
{
    const SharpFsMonoid S = read_monoid(in);
    DualConeFan fan;
    if (in.contains("fan"))
        fan = fan_from_json(in.at("fan"));
    else
    {
        std::vector<RatVector> rays;
        for (const auto& r : require(in, "rays"))
            rays.push_back(rat_vector_from_json(r));
        fan = subdivide_dual_cone(S, rays);
    }
    const BlowupFiber fiber = fiber_complex(S, fan);
    Outcome o;
    o.pass = fiber.homology.acyclic();
    o.report = Json{{"monoid", to_json(S)}, {"fan", to_json(fan)}, {"interior_rays", rays_json(interior_rays(S, fan))},
                    {"kind", to_string(fiber.kind)}, {"fiber", to_json(fiber)}};
    o.dot = fiber.complex.to_dot("fiber");
    return o;
}

Outcome do_nerve(const Json& in, const Settings& s)
{
    const SharpFsMonoid S = read_monoid(in);
    NerveOptions options;
    options.seed = s.seed;
    const RatioNerve nerve = nerve_of_ratio_cover(S, options);
    Outcome o;
    o.pass = nerve.all_witnessed() && nerve.complex.is_full_simplex();
    o.report = Json{{"monoid", to_json(S)}, {"nerve", to_json(S, nerve)}};
    o.dot = nerve.complex.to_dot("nerve");
    return o;
}

void emit(const std::string& path, const std::string& text, std::ostream& fallback)
{
    if (path.empty() || path == "-")
    {
        fallback << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw input_error("cannot write " + path);
    f << text;
}

std::string error_report(std::string_view code, const std::string& message)
{
    const Json j{{"schema", kSchema}, {"error", Json{{"code", code}, {"message", message}}}};
    return j.dump(2) + "\n";
}

}   // anonymous namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    using Verb = std::function<Outcome(const Json&, const Settings&)>;
    const std::vector<std::pair<std::string, Verb> > verbs = {
        {"faces", do_faces},
        {"chains", do_chains},
        {"section", do_section},
        {"ratio-validate", do_ratio_validate},
        {"pi", do_pi},
        {"homotopy-verify", do_homotopy_verify},
        {"certificate", do_certificate},
        {"blowup", do_blowup},
        {"fiber", do_fiber},
        {"nerve", do_nerve},
    };

    Settings s;
    CLI::App app{"Exact computations on spaces of ratios of sharp fs monoids"};
    app.name("ratiospace");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--input,-i", s.input, "Input JSON file, or inline JSON");
    app.add_option("--output,-o", s.output, "Report path (default: stdout)");
    app.add_option("--seed", s.seed, "Seed for all sampling");
    app.add_option("--max-k", s.max_k, "Convergence depth: t = 2^-k for k = 1..max-k")->check(CLI::Range(1u, 64u));
    app.add_option("--samples", s.samples, "Sampled points per stratum")->check(CLI::Range(std::size_t{1}, std::size_t{10000}));
    app.add_option("--dot", s.dot, "Also write a DOT rendering to this path");
    for (const auto& [name, fn] : verbs)
        app.add_subcommand(name, "");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return Success;
    }
    catch (const CLI::ParseError& e)
    {
        err << e.what() << "\n";
        out << error_report("InvalidArguments", e.what());
        return InputError;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    const Verb* fn = nullptr;
    for (const auto& [name, f] : verbs)
        if (name == verb)
            fn = &f;

    try
    {
        Outcome o = (*fn)(load_input(s.input), s);
        Json report{{"schema", kSchema}, {"verb", verb}, {"seed", s.seed}};
        report.update(o.report);
        if (!report.contains("verdict"))
            report["verdict"] = o.pass ? "PASS" : "FAIL";
        emit(s.output, report.dump(2) + "\n", out);
        if (!s.dot.empty())
            emit(s.dot, o.dot, out);
        return o.pass ? Success : Failure;
    }
    catch (const Error& e)
    {
        err << error_code_name(e.code()) << ": " << e.what() << "\n";
        const std::string text = error_report(error_code_name(e.code()), e.what());
        try
        {
            emit(s.output, text, out);
        }
        catch (const Error&)
        {
            out << text;
        }
        return InputError;
    }
    catch (const Json::exception& e)
    {
        err << "InvalidInput: " << e.what() << "\n";
        out << error_report("InvalidInput", e.what());
        return InputError;
    }
}

}   // namespace ratiospace::cli
