// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                     run every criterion
//   acceptance --only AC7          run one criterion
//   acceptance --regenerate-golden rewrite the CLI golden files, then run
//
// Exit status is 0 iff every selected criterion passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "support.hpp"
#include "ratiospace/logmod.hpp"
#include "ratiospace/retraction.hpp"
#include "ratiospace/topology.hpp"

using namespace ratiospace;

namespace {

struct Outcome
{
    bool pass = true;
    std::string detail;
};

/** Records the first few failures; pass turns false on the first one. */
struct Tally
{
    bool pass = true;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> first;

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (ok)
            return;
        pass = false;
        ++failures;
        if (first.size() < 3)
            first.push_back(what);
    }

    std::string summary() const
    {
        std::string s = std::to_string(checks) + " checks, " + std::to_string(failures) + " failed";
        for (const auto& f : first)
            s += "; " + f;
        return s;
    }
};

std::string label(const SharpFsMonoid& S, const FaceChain& c)
{
    std::string s;
    for (auto f : c.faces)
        s += (s.empty() ? "" : ">") + face_label(S.faces()[f]);
    return s;
}

// AC1: face lattice equals the brute-force face-property oracle.
Outcome ac1()
{
    Tally t;
    const auto monoids = corpus::small();
    std::size_t non_simplicial = 0;
    for (const auto& e : monoids)
    {
        const SharpFsMonoid S = e.monoid();
        if (S.facets().size() > e.dim || e.generators.size() > e.dim)
            ++non_simplicial;
        std::set<std::vector<std::size_t> > got;
        for (const auto& F : S.faces())
        {
            got.insert(F.support);
            t.expect(F.dim == oracle::rank(S.face_generators(F)), e.name + ": face dimension");
        }
        t.expect(got.size() == S.faces().size(), e.name + ": duplicate faces");
        t.expect(got == oracle::face_supports(e.generators), e.name + ": faces differ from oracle");
    }
    for (std::size_t d = 1; d <= 5; ++d)
        t.expect(corpus::free_monoid(d).monoid().faces().size() == (std::size_t{1} << d),
                 "|faces(N^" + std::to_string(d) + ")| != 2^d");
    t.expect(monoids.size() >= 10 && non_simplicial >= 2, "corpus too small");
    return {t.pass, std::to_string(monoids.size()) + " monoids (" + std::to_string(non_simplicial)
                        + " non-simplicial), N^1..N^5; " + t.summary()};
}

// AC2: every face section verifies and its scaling constants are minimal.
Outcome ac2()
{
    Tally t;
    std::size_t pairs = 0, positive_c = 0;
    for (const auto& e : corpus::small())
    {
        const SharpFsMonoid S = e.monoid();
        for (const auto& F : S.faces())
        {
            ++pairs;
            const std::string where = e.name + " " + face_label(F);
            const FaceSection p = face_section(S, F);
            t.expect(verify_section(S, p).pass, where + ": verify_section");
            const auto face_gens = S.face_generators(F);
            for (const auto& g : face_gens)
                t.expect(p.apply(g) == to_rational(g), where + ": not identity on F");
            for (const auto& g : S.generators())
                t.expect(oracle::in_cone(face_gens, p.apply(g)), where + ": image outside cone(F)");
            for (const auto& step : p.steps)
            {
                t.expect(support::step_ok(S, step, step.c), where + ": step fails at c");
                if (step.c >= 1)
                {
                    ++positive_c;
                    t.expect(!step_admissible(S, step, step.c - 1), where + ": c - 1 admissible");
                    t.expect(!support::step_ok(S, step, step.c - 1), where + ": c - 1 admissible (oracle)");
                }
            }
        }
    }
    // Explicit splitting of cone{(1,0),(-1,1)} onto the ray of (1,0): c = 1.
    const SharpFsMonoid S = make_monoid(2, {corpus::v({1, 0}), corpus::v({-1, 1})});
    SectionOptions o;
    o.complements = std::vector<IntVector>{corpus::v({0, 1})};
    const FaceSection p = face_section(S, S.face_by_support({0}), o);
    t.expect(p.scaling_constants == std::vector<Integer>{1}, "explicit splitting: c != 1");
    t.expect(p.matrix == RatMatrix::from_rows({{1, 1}, {0, 0}}, 2), "explicit splitting: wrong map");
    t.expect(!step_admissible(S, p.steps.front(), 0), "explicit splitting: c = 0 admissible");
    return {t.pass, std::to_string(pairs) + " (S, F) pairs, " + std::to_string(positive_c)
                        + " steps with c >= 1; " + t.summary()};
}

// AC3: N -> N_0 inverts pi_map on >= 100 functionals per chain.
Outcome ac3()
{
    Tally t;
    std::size_t chains = 0, functionals = 0;
    for (const auto& e : corpus::small())
    {
        const SharpFsMonoid S = e.monoid();
        const auto all = enumerate_chains(S, false);
        for (std::size_t c = 0; c < all.size(); ++c)
        {
            ++chains;
            const auto& chain = all[c];
            const AnchorSet anchors = default_anchors(S, chain);
            std::mt19937_64 rng(derive_seed(3, c));
            for (int k = 0; k < 100; ++k, ++functionals)
            {
                const PositiveHom raw = support::random_hom(S, rng);
                const PositiveHom h = PositiveHom::make(S, raw.functional() * (1 / support::eval(raw.functional(), anchors[0])));
                const RatioChartPoint p = pi_map(S, chain, anchors, h);
                const std::string where = e.name + " " + label(S, chain);
                t.expect(support::eval(h.functional(), anchors[0]) == 1, where + ": h(a_0) != 1");
                t.expect(support::values(S, p) == support::pi_values(S, chain, anchors, [&](const IntVector& x) {
                             return support::eval(h.functional(), x);
                         }), where + ": pi_map values");
                t.expect(p.maps.front() == h.functional(), where + ": N_0 != h");
                t.expect(pi_map(S, chain, anchors, PositiveHom::make(S, p.maps.front())) == p, where + ": roundtrip");
            }
        }
    }
    return {t.pass, std::to_string(chains) + " chains x 100 functionals = " + std::to_string(functionals) + "; " + t.summary()};
}

/** Sampled points for every stratum of every chain, with their chain index. */
struct Sampled
{
    std::size_t chain;
    RatioChartPoint point;
};

std::vector<Sampled> sample_all(const SharpFsMonoid& S, const std::vector<FaceChain>& chains, std::size_t per_stratum,
                                std::uint64_t seed)
{
    std::vector<Sampled> out;
    for (std::size_t c = 0; c < chains.size(); ++c)
    {
        const auto st = strata(chains[c]);
        for (std::size_t k = 0; k < st.size(); ++k)
            for (auto& p : sample_chart_points(S, chains[c], st[k], per_stratum, derive_seed(derive_seed(seed, c), k)))
                out.push_back({c, std::move(p)});
    }
    return out;
}

// AC4: exact endpoints of the homotopy.
Outcome ac4()
{
    Tally t;
    std::size_t points = 0;
    for (const auto& e : corpus::small())
    {
        const SharpFsMonoid S = e.monoid();
        const PositiveHom L = canonical_positive_hom(S);
        const auto chains = enumerate_chains(S, false);
        std::vector<std::vector<FaceSection> > sections;
        for (const auto& c : chains)
            sections.push_back(chain_sections(S, c));
        for (const auto& [c, p] : sample_all(S, chains, 3, 4))
        {
            ++points;
            const std::string where = e.name + " " + label(S, chains[c]);
            const RatioChartPoint target = pi_map(S, chains[c], p.anchors, L);
            t.expect(homotopy(S, p, L, Rational(0), sections[c]) == p, where + ": f(N,0) != N");
            const RatioChartPoint f1 = homotopy(S, p, L, Rational(1), sections[c]);
            t.expect(f1 == target, where + ": f(N,1) != pi(L)");
            t.expect(support::values(S, f1) == support::pi_values(S, chains[c], p.anchors, [&](const IntVector& x) {
                         return support::eval(L.functional(), x);
                     }), where + ": f(N,1) values");
        }
    }
    return {t.pass, std::to_string(points) + " sampled points over all strata of all chains; " + t.summary()};
}

// AC5: d_12 < d_1 / 100, d_k nonincreasing for k >= 4, b(t) >= 1 - t.
Outcome ac5()
{
    Tally t;
    std::size_t points = 0, stationary = 0, ratio_fail = 0, monotone_fail = 0, crossings = 0;
    for (const auto& e : corpus::small())
    {
        const SharpFsMonoid S = e.monoid();
        const PositiveHom L = canonical_positive_hom(S);
        const auto chains = enumerate_chains(S, false);
        std::vector<std::vector<FaceSection> > sections;
        for (const auto& c : chains)
            sections.push_back(chain_sections(S, c));
        for (const auto& [c, p] : sample_all(S, chains, 3, 5))
        {
            ++points;
            const std::string where = e.name + " " + label(S, chains[c]);
            const auto report = convergence_report(S, p, L, 12, sections[c]);
            const auto base = support::values(S, p);

            std::vector<Rational> d;
            for (const auto& s : report.distances)
            {
                d.push_back(support::distance(support::homotopy_values(S, p, L, s.t, sections[c]), base));
                t.expect(d.back() == s.distance, where + ": distance disagrees with recomputation");
            }
            for (const auto& lv : report.levels)
            {
                t.expect(lv.b >= 1 - lv.t, where + ": b(t) < 1 - t");
                t.expect(lv.decomposition_holds, where + ": closed form");
            }
            t.expect(d.size() == 12, where + ": expected k = 1..12");
            if (d.size() != 12)
                continue;

            if (std::all_of(d.begin(), d.end(), [](const Rational& x) { return x == 0; }))
            {
                ++stationary;    // R(S)(Φ) is a single point here
                continue;
            }
            const bool ratio_ok = d[11] * 100 < d[0];
            bool monotone_ok = true;
            for (std::size_t k = 4; k < 12; ++k)    // d_k >= d_{k+1} for k >= 4 (index k-1)
                monotone_ok = monotone_ok && d[k - 1] >= d[k];
            if (!ratio_ok)
                ++ratio_fail;
            if (!monotone_ok)
            {
                ++monotone_fail;
                // Does the path pass through p between t = 2^-1 and 2^-12? Detect via a sign
                // change of some coordinate deviation.
                std::vector<support::Values> path;
                for (const auto& s : report.distances)
                    path.push_back(support::homotopy_values(S, p, L, s.t, sections[c]));
                auto crossed = [&] {
                    for (std::size_t i = 0; i < base.size(); ++i)
                        for (std::size_t j = 0; j < base[i].size(); ++j)
                        {
                            int prev = 0;
                            for (const auto& v : path)
                            {
                                const Rational dev = v[i][j] - base[i][j];
                                const int sg = dev > 0 ? 1 : (dev < 0 ? -1 : 0);
                                if (sg != 0 && prev != 0 && sg != prev)
                                    return true;
                                if (sg != 0)
                                    prev = sg;
                            }
                        }
                    return false;
                };
                if (crossed())
                    ++crossings;
            }
            t.expect(ratio_ok, where + ": d_12 >= d_1/100");
            t.expect(monotone_ok, where + ": d_k increases for some k >= 4");
        }
    }
    return {t.pass, std::to_string(points) + " points (" + std::to_string(stationary) + " stationary); ratio failures "
                        + std::to_string(ratio_fail) + ", monotonicity failures " + std::to_string(monotone_fail) + " ("
                        + std::to_string(crossings) + " where the path passes through p); " + t.summary()};
}

// AC6: chart gluing law and exact coordinate roundtrips on >= 500 points per monoid.
Outcome ac6()
{
    Tally t;
    std::size_t min_points = std::numeric_limits<std::size_t>::max();
    for (const auto& e : corpus::small())
    {
        const SharpFsMonoid S = e.monoid();
        const auto chains = enumerate_chains(S, false);
        std::size_t total_strata = 0;
        for (const auto& c : chains)
            total_strata += strata(c).size();
        const std::size_t per = (500 + total_strata - 1) / total_strata;

        std::size_t attempts = per;
        std::vector<Sampled> pts;
        // Small strata (e.g. single points) yield fewer samples; ask for more until 500 are drawn.
        for (;;)
        {
            pts = sample_all(S, chains, attempts, 6);
            if (pts.size() >= 500 || attempts > 4000)
                break;
            attempts *= 2;
        }
        if (e.name != "N1")
            min_points = std::min(min_points, pts.size());
        t.expect(pts.size() >= 500 || e.name == "N1", e.name + ": fewer than 500 points");

        for (const auto& [c, p] : pts)
        {
            const std::string where = e.name + " " + label(S, chains[c]);
            const RatioPoint q = canonicalize(S, p);
            t.expect(chart_coords(S, q, chains[c], p.anchors) == p, where + ": chart_coords(canonicalize(p)) != p");
            std::vector<bool> member(chains.size());
            for (std::size_t k = 0; k < chains.size(); ++k)
            {
                member[k] = in_chart(q, chains[k]);
                const bool by_definition = std::all_of(q.kernel_chain.begin(), q.kernel_chain.end(),
                                                       [&](std::size_t f) { return chains[k].contains(f); });
                t.expect(member[k] == by_definition, where + ": in_chart disagrees with kernel-chain inclusion");
                if (member[k])
                {
                    const RatioChartPoint r = chart_coords(S, q, chains[k], default_anchors(S, chains[k]));
                    t.expect(validate_chart_point(S, r).valid(), where + ": coordinates invalid");
                    t.expect(canonicalize(S, r) == q, where + ": canonicalize(chart_coords(q)) != q");
                }
            }
            for (std::size_t a = 0; a < chains.size(); ++a)
                for (std::size_t b = a; b < chains.size(); ++b)
                {
                    const bool both = member[a] && member[b];
                    t.expect(both == in_chart(q, chain_intersection(chains[a], chains[b])), where + ": intersection law");
                }
        }
    }
    return {t.pass, "at least " + std::to_string(min_points) + " points per monoid (N^1 has a one-point space); " + t.summary()};
}

// AC7: contractibility certificates, N^4 within 120 s.
Outcome ac7()
{
    Tally t;
    std::string detail;
    const std::vector<corpus::Entry> monoids{corpus::free_monoid(2), corpus::free_monoid(3), corpus::free_monoid(4),
                                             corpus::small()[3], corpus::small()[4]};
    for (const auto& e : monoids)
    {
        const auto start = std::chrono::steady_clock::now();
        const auto cert = contractibility_certificate(e.monoid());
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        t.expect(cert.pass(), e.name + ": certificate FAIL");
        t.expect(cert.charts_pass(), e.name + ": chart evidence");
        t.expect(cert.nerve_full_simplex && cert.nerve.all_witnessed(), e.name + ": nerve");
        t.expect(cert.nerve_homology.acyclic(), e.name + ": nerve homology");
        if (e.name == "N4")
            t.expect(secs < 120, "N4 exceeded 120 s");
        std::ostringstream s;
        s.precision(2);
        s << std::fixed << e.name << " " << (cert.pass() ? "PASS" : "FAIL") << " " << secs << "s";
        detail += (detail.empty() ? "" : ", ") + s.str();
    }
    return {t.pass, detail + "; " + t.summary()};
}

// AC8: blowup dichotomy on the N^2 grid, acyclic fibers over subdivisions.
Outcome ac8()
{
    Tally t;
    const SharpFsMonoid N2 = corpus::free_monoid(2).monoid();
    const auto gens = corpus::free_monoid(2).generators;
    std::size_t pairs = 0, points = 0;
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long c = 0; c <= 3; ++c)
                for (long d = 0; d <= 3; ++d)
                {
                    ++pairs;
                    const IntVector f = corpus::v({a, b}), g = corpus::v({c, d});
                    const bool divisible = oracle::in_cone(gens, corpus::v({a - c, b - d}))
                                           || oracle::in_cone(gens, corpus::v({c - a, d - b}));
                    const PairBlowup bl = blowup_pair(N2, f, g);
                    const std::string where = "f=" + to_string(f) + " g=" + to_string(g);
                    t.expect(bl.fiber.kind == (divisible ? FiberKind::Point : FiberKind::Interval), where + ": kind");
                    t.expect(bl.fiber.homology.acyclic(), where + ": fiber not acyclic");
                    if (divisible)
                        ++points;
                }

    std::size_t fans = 0;
    std::mt19937_64 rng(8);
    for (const auto& e : corpus::small())
    {
        if (e.dim != 2)
            continue;
        const SharpFsMonoid S = e.monoid();
        const auto ext = dual_cone_rays(S);
        for (std::size_t r = 0; r <= 5; ++r)
            for (int trial = 0; trial < 20; ++trial)
            {
                std::vector<RatVector> rays;
                std::set<Rational> used;
                while (rays.size() < r)
                {
                    const Rational s(1 + static_cast<long>(rng() % 30), 1 + static_cast<long>(rng() % 30));
                    if (!used.insert(s).second)
                        continue;
                    rays.push_back({Rational(ext[0][0]) + s * Rational(ext[1][0]), Rational(ext[0][1]) + s * Rational(ext[1][1])});
                }
                const BlowupFiber fib = fiber_complex(S, subdivide_dual_cone(S, rays));
                ++fans;
                const std::string where = e.name + " with " + std::to_string(r) + " rays";
                t.expect(fib.homology.betti == std::vector<std::size_t>{1, 0}, where + ": betti");
                t.expect(fib.homology.torsion[0].empty() && fib.homology.torsion[1].empty(), where + ": torsion");
                t.expect(oracle::betti(fib.complex.facets(), 1) == std::vector<std::size_t>{1, 0}, where + ": oracle betti");
            }
    }
    return {t.pass, std::to_string(pairs) + " grid pairs (" + std::to_string(points) + " Point, "
                        + std::to_string(pairs - points) + " Interval), " + std::to_string(fans) + " fans; " + t.summary()};
}

// AC9: homology against dense brute force.
Outcome ac9()
{
    Tally t;
    auto names = [](std::size_t n) {
        std::vector<std::string> v;
        for (std::size_t i = 0; i < n; ++i)
            v.push_back(std::to_string(i));
        return v;
    };
    auto check = [&](const SimplicialComplex& K, const std::string& what) {
        const std::size_t top = static_cast<std::size_t>(std::max(K.dimension(), 0));
        const HomologyReport h = homology(K, top);
        t.expect(h.betti == oracle::betti(K.facets(), top), what + ": rational betti");
        for (long long p : {2LL, 3LL})
        {
            const auto mod = oracle::betti(K.facets(), top, p);
            for (std::size_t k = 0; k <= top; ++k)
            {
                auto tors = [&](std::size_t deg) {
                    return static_cast<std::size_t>(std::count_if(h.torsion[deg].begin(), h.torsion[deg].end(),
                                                                  [p](const Integer& f) { return f % p == 0; }));
                };
                t.expect(mod[k] == h.betti[k] + tors(k) + (k ? tors(k - 1) : 0), what + ": F_p betti");
            }
        }
    };

    t.expect(homology(SimplicialComplex::point(), 3).acyclic(), "point");
    const SimplicialComplex circle(names(4), {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    t.expect(homology(circle, 1).betti == std::vector<std::size_t>{1, 1}, "circle");
    t.expect(homology(SimplicialComplex::full_simplex(names(5)), 4).acyclic(), "full simplex");
    const SimplicialComplex rp2(names(6), {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                           {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
    t.expect(homology(rp2, 2).torsion[1] == std::vector<Integer>{2}, "RP^2 torsion");
    check(circle, "circle");
    check(rp2, "RP^2");

    std::mt19937_64 rng(9);
    std::size_t complexes = 0;
    while (complexes < 500)
    {
        const std::size_t V = 2 + rng() % 6;
        std::vector<SimplicialComplex::Simplex> facets;
        for (std::size_t i = 0, nf = 1 + rng() % 6; i < nf; ++i)
        {
            SimplicialComplex::Simplex s;
            for (std::size_t v = 0; v < V; ++v)
                if (rng() % 2)
                    s.push_back(v);
            if (s.empty())
                s.push_back(rng() % V);
            facets.push_back(s);
        }
        const SimplicialComplex K(names(V), facets);
        std::size_t size = 0;
        for (int k = 0; k <= K.dimension(); ++k)
            size += K.count(static_cast<std::size_t>(k));
        if (size > 50)
            continue;
        check(K, "random complex #" + std::to_string(complexes));
        ++complexes;
    }
    return {t.pass, "point, circle, full simplex, RP^2 and " + std::to_string(complexes) + " random complexes <= 50 simplices; "
                        + t.summary()};
}

struct CliCase
{
    std::string name;
    std::string args;
    int exit_code;
};

std::vector<CliCase> cli_cases()
{
    std::ifstream in(CLI_CASES_FILE);
    std::vector<CliCase> out;
    std::string line;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t");
        const auto b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line))
    {
        if (line.empty() || line.front() == '#')
            continue;
        const auto p1 = line.find('|'), p2 = line.rfind('|');
        out.push_back({trim(line.substr(0, p1)), trim(line.substr(p1 + 1, p2 - p1 - 1)), std::stoi(trim(line.substr(p2 + 1)))});
    }
    return out;
}

std::pair<int, std::string> run_cli(const std::string& args)
{
    const std::string cmd = std::string("cd '") + CLI_DATA_DIR + "' && '" + CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string golden_path(const CliCase& c)
{
    return std::string(CLI_GOLDEN_DIR) + "/" + c.name + ".out";
}

void regenerate_golden()
{
    for (const auto& c : cli_cases())
    {
        const auto [code, out] = run_cli(c.args);
        std::ofstream(golden_path(c), std::ios::binary) << out;
        std::cout << "wrote " << golden_path(c) << " (exit " << code << ")\n";
    }
}

// AC10: golden-file byte equality and exit codes at seed 0.
Outcome ac10()
{
    Tally t;
    std::map<int, std::size_t> by_code;
    const auto cases = cli_cases();
    for (const auto& c : cases)
    {
        const auto [code, out] = run_cli(c.args);
        const auto [code2, out2] = run_cli(c.args);
        std::ifstream in(golden_path(c), std::ios::binary);
        std::ostringstream golden;
        golden << in.rdbuf();
        t.expect(static_cast<bool>(in), c.name + ": golden file missing");
        t.expect(code == c.exit_code, c.name + ": exit " + std::to_string(code) + ", expected " + std::to_string(c.exit_code));
        t.expect(out == golden.str(), c.name + ": output differs from golden");
        t.expect(code == code2 && out == out2, c.name + ": nondeterministic");
        ++by_code[c.exit_code];
    }
    std::string codes;
    for (const auto& [k, n] : by_code)
        codes += (codes.empty() ? "" : ", ") + std::to_string(n) + " x exit " + std::to_string(k);
    return {t.pass && !cases.empty(), std::to_string(cases.size()) + " commands (" + codes + "); " + t.summary()};
}

}   // namespace

int main(int argc, char** argv)
{
    std::string only;
    for (int i = 1; i < argc; ++i)
    {
        const std::string a = argv[i];
        if (a == "--only" && i + 1 < argc)
            only = argv[++i];
        else if (a == "--regenerate-golden")
            regenerate_golden();
        else
        {
            std::cerr << "usage: acceptance [--only ACn] [--regenerate-golden]\n";
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::pair<std::string, Outcome (*)()> > > criteria{
        {"AC1", {"face lattice equals the face-property oracle", ac1}},
        {"AC2", {"face sections verify with minimal c", ac2}},
        {"AC3", {"N -> N_0 inverts pi_map", ac3}},
        {"AC4", {"homotopy endpoints f(N,0) = N, f(N,1) = pi(L)", ac4}},
        {"AC5", {"homotopy convergence d_12 < d_1/100, monotone for k >= 4, b(t) >= 1-t", ac5}},
        {"AC6", {"chart gluing and coordinate roundtrips", ac6}},
        {"AC7", {"contractibility certificates", ac7}},
        {"AC8", {"blowup dichotomy and acyclic fibers", ac8}},
        {"AC9", {"homology against brute force", ac9}},
        {"AC10", {"CLI golden files and exit codes", ac10}},
    };

    bool all = true, ran = false;
    for (const auto& [id, entry] : criteria)
    {
        if (!only.empty() && only != id)
            continue;
        ran = true;
        Outcome o;
        try
        {
            o = entry.second();
        }
        catch (const std::exception& e)
        {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << id << " " << entry.first << " -- " << o.detail << std::endl;
    }
    if (!ran)
    {
        std::cerr << "unknown criterion " << only << "\n";
        return 2;
    }
    return all ? 0 : 1;
}
