#include "srcy/suite.hpp"

#include "srcy/cohomology.hpp"
#include "srcy/deformation.hpp"
#include "srcy/pfaffian.hpp"
#include "srcy/singularity.hpp"
#include "srcy/sr_ideal.hpp"
#include "srcy/symmetry.hpp"
#include "srcy/toric.hpp"
#include "srcy/torus.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>

namespace srcy {

namespace {

struct Tri {
    std::string name, file;
    long long t1, degree, aut;
    std::optional<long long> orbits;
};

const std::vector<Tri>& triangulations()
{
    static const std::vector<Tri> t{
        {"delta4", "triangulations/boundary_delta4.txt", 105, 5, 120, 5},
        {"p1", "triangulations/p1.txt", 92, 11, 8, std::nullopt},
        {"p2", "triangulations/p2.txt", 79, 12, 8, 22},
        {"p3", "triangulations/p3.txt", 79, 12, 48, 10},
        {"p4", "triangulations/p4.txt", 67, 13, 8, 20},
        {"p5", "triangulations/p5.txt", 56, 14, 14, 5},
    };
    return t;
}

std::string str(long long v) { return std::to_string(v); }
std::string str(const Integer& v) { return to_string(v); }
std::string yes(bool b) { return b ? "true" : "false"; }

template <class T>
std::string list(const std::vector<T>& v, const char* open = "{", const char* close = "}")
{
    std::ostringstream os;
    os << open;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << close;
    return os.str();
}

std::string sorted_multiset(std::vector<std::size_t> v)
{
    std::sort(v.begin(), v.end());
    return list(v);
}

std::vector<Polynomial> in_ring(const std::vector<Polynomial>& ps, const std::vector<std::string>& vars)
{
    std::vector<Polynomial> out;
    for (const auto& p : ps) out.push_back(p.over(vars));
    return out;
}

// generators of `a` found in `b` up to sign, as "k/n"
std::string matched_up_to_sign(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b)
{
    std::size_t hit = 0;
    for (const auto& g : a)
        if (std::any_of(b.begin(), b.end(), [&](const Polynomial& p) { return p == g || p == -g; })) ++hit;
    return std::to_string(hit) + "/" + std::to_string(a.size());
}

std::string words(const std::vector<std::string>& v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + v[k];
    return s;
}

std::string rays_string(const std::vector<IntVector>& rays)
{
    std::string s;
    for (const auto& v : rays) s += vector_string(v);
    return s;
}

class Runner {
public:
    Runner(std::string root, const SuiteOptions& opt) : root_(std::move(root)), opt_(opt) {}

    std::string path(const std::string& rel) const { return root_ + "/" + rel; }

    void group(const std::string& name, const std::vector<std::string>& files, const std::function<void()>& body)
    {
        if (res.aborted) return;
        if (!opt_.only.empty() && !opt_.only.count(name)) return;
        bool missing = false;
        for (const auto& f : files)
            if (!std::filesystem::exists(path(f))) {
                res.fixture_errors.push_back("missing fixture " + f + " (group " + name + ")");
                missing = true;
            }
        if (missing) {
            if (!opt_.allow_partial) res.aborted = true;
            return;
        }
        try {
            body();
        } catch (const std::exception& e) {
            res.report.fail(name + ".error", name, "completes", e.what(), list(files, "", ""));
        }
    }

    SuiteResult res;

private:
    std::string root_;
    SuiteOptions opt_;
};

void group_t1(Runner& R)
{
    for (const auto& t : triangulations()) {
        auto K = load_triangulation_file(R.path(t.file));
        R.res.report.compare("t1." + t.name, "t1", str(t.t1), str(static_cast<long long>(t1_degree_zero_basis(K).size())), t.file);
    }
}

void group_links(Runner& R)
{
    for (const auto& t : triangulations()) {
        auto K = load_triangulation_file(R.path(t.file));
        auto cc = t1_link_table_crosscheck(K);
        R.res.report.compare("links." + t.name, "links", "0 mismatches",
                             str(static_cast<long long>(cc.mismatches.size())) + " mismatches", t.file,
                             "admissible b per link against the tabulated link contributions, " +
                                 str(static_cast<long long>(cc.rows.size())) + " faces");
    }
}

void group_degree(Runner& R)
{
    for (const auto& t : triangulations()) {
        auto K = load_triangulation_file(R.path(t.file));
        long long d = degree(K);
        R.res.report.compare("degree." + t.name, "degree", str(t.degree), str(d), t.file);
        R.res.report.compare("hilbert_at_one." + t.name, "degree", str(t.degree),
                             str(evaluate_at_one(hilbert_numerator(K))), t.file);
    }
}

void group_sr(Runner& R)
{
    auto gens = [&](const std::string& file) {
        auto K = load_triangulation_file(R.path(file));
        std::vector<std::string> out;
        for (Face f : minimal_nonfaces(K).generators) {
            std::string m;
            for (int v : face_vertices(f)) m += vertex_variable(v);
            out.push_back(m);
        }
        std::sort(out.begin(), out.end());
        return list(out);
    };
    R.res.report.compare("sr.p1", "sr", "{x1x2x3x5,x1x2x3x6,x4x6,x4x7,x5x7}", gens("triangulations/p1.txt"),
                         "triangulations/p1.txt");
    R.res.report.compare("sr.p3", "sr", "{x1x2x3,x4x5,x6x7}", gens("triangulations/p3.txt"), "triangulations/p3.txt");
}

void group_aut(Runner& R)
{
    for (const auto& t : triangulations()) {
        auto K = load_triangulation_file(R.path(t.file));
        auto& rec = R.res.report.compare("aut." + t.name, "aut", str(t.aut), str(static_cast<long long>(automorphism_group(K).order())), t.file);
        if (t.name == "p1")
            rec.note = "expected value has no source; exhaustive search over all 5040 permutations gives the computed order";
    }
}

void group_orbits(Runner& R)
{
    for (const auto& t : triangulations()) {
        auto K = load_triangulation_file(R.path(t.file));
        auto G = automorphism_group(K);
        auto O = orbits_on_t1(G, t1_degree_zero_basis(K));
        std::size_t total = 0;
        for (auto s : O.sizes()) total += s;
        if (t.orbits)
            R.res.report.compare("orbits.count." + t.name, "orbits", str(*t.orbits), str(static_cast<long long>(O.blocks.size())), t.file);
        if (t.name == "delta4")
            R.res.report.compare("orbits.sizes.delta4", "orbits", "{5,20,20,30,30}", sorted_multiset(O.sizes()), t.file);
        if (t.name == "p5")
            R.res.report.compare("orbits.sizes.p5", "orbits", "{7,7,14,14,14}", sorted_multiset(O.sizes()), t.file);
        if (t.name == "p4")
            R.res.report.compare("orbits.total.p4", "orbits", "67", str(static_cast<long long>(total)), t.file);
    }
}

void group_pfaffian(Runner& R)
{
    std::mt19937 rng(20240613);
    std::uniform_int_distribution<int> entry(-5, 5);
    int good = 0, total = 0;
    for (std::size_t d : {2, 4, 6, 8})
        for (int k = 0; k < 30; ++k) {
            std::vector<std::string> none;
            SkewPolyMatrix M(none, d);
            IntMatrix A(d, IntVector(d, 0));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i + 1; j < d; ++j) {
                    int v = entry(rng);
                    M.set(i, j, Polynomial::constant(none, v));
                    A[i][j] = v;
                    A[j][i] = -v;
                }
            Rational pf = pfaffian(M).constant_term();
            ++total;
            if (pf * pf == Rational(determinant(A))) ++good;
        }
    R.res.report.compare("pfaffian.square_equals_det", "pfaffian", str(static_cast<long long>(total)) + "/" + str(static_cast<long long>(total)),
                         str(static_cast<long long>(good)) + "/" + str(static_cast<long long>(total)), "random, seed 20240613",
                         "Bareiss determinant, sizes 2,4,6,8");

    auto M = load_matrix_file(R.path("matrices/roedland.mat"));
    auto p = principal_pfaffians(M);
    auto q = in_ring(load_vector_file(R.path("generators/roedland.vec")), M.vars());
    R.res.report.compare("pfaffian.roedland", "pfaffian", "equal", equal_up_to_sign(p, q) == 1 ? "equal" : equal_up_to_sign(p, q) == -1 ? "equal up to sign -1" : "different",
                         "matrices/roedland.mat, generators/roedland.vec");
    auto Mb = load_matrix_file(R.path("matrices/boehm.mat"));
    auto pb = principal_pfaffians(Mb);
    auto qb = in_ring(load_vector_file(R.path("generators/boehm.vec")), Mb.vars());
    int sb = equal_up_to_sign(pb, qb);
    R.res.report.compare("pfaffian.boehm", "pfaffian", "equal up to global sign", sb != 0 ? "equal up to global sign" : "different",
                         "matrices/boehm.mat, generators/boehm.vec", "sign " + std::to_string(sb));
}

void group_syzygy(Runner& R)
{
    for (int i = 1; i <= 5; ++i) {
        std::string b = "matrices/p" + std::to_string(i);
        auto M0 = load_matrix_file(R.path(b + "_base.mat"));
        auto f0 = load_vector_file(R.path(b + "_base.vec"));
        bool zero = true;
        for (const auto& r : matrix_times(M0, in_ring(f0, M0.vars()))) zero = zero && r.is_zero();
        R.res.report.compare("syzygy.base.p" + std::to_string(i), "syzygy", "M f = 0", zero ? "M f = 0" : "M f != 0", b + "_base.mat");

        auto M1 = load_matrix_file(R.path(b + "_first_order.mat"));
        std::vector<Polynomial> f1;
        std::string src = b + "_first_order.mat";
        if (std::filesystem::exists(R.path(b + "_first_order.vec"))) {
            f1 = in_ring(load_vector_file(R.path(b + "_first_order.vec")), M1.vars());
            src += ", " + b + "_first_order.vec";
        } else {
            f1 = principal_pfaffians(M1, 2);
        }
        R.res.report.compare("syzygy.first_order.p" + std::to_string(i), "syzygy", "M1 f1 = 0 mod t^2",
                             verify_first_order(M1, f1) ? "M1 f1 = 0 mod t^2" : "nonzero", src);
    }
}

void group_family(Runner& R)
{
    for (int i = 1; i <= 5; ++i) {
        std::string b = "matrices/p" + std::to_string(i);
        std::string tri = "triangulations/p" + std::to_string(i) + ".txt";
        auto K = load_triangulation_file(R.path(tri));
        auto M1 = load_matrix_file(R.path(b + "_first_order.mat"));
        std::vector<Polynomial> f1 = std::filesystem::exists(R.path(b + "_first_order.vec"))
                                         ? in_ring(load_vector_file(R.path(b + "_first_order.vec")), M1.vars())
                                         : principal_pfaffians(M1, 2);
        auto ts = tangent_span(K, f1, parameter_mask(M1.vars()));
        std::string expected = "within T1, rank " + str(static_cast<long long>(ts.t1_dimension));
        std::string computed = std::string(ts.family_within_t1 ? "within T1" : "outside T1") + ", rank " +
                               str(static_cast<long long>(ts.family_dimension));
        auto& rec = R.res.report.compare("family.tangent.p" + std::to_string(i), "family", expected, computed,
                                         b + "_first_order.mat",
                                         str(static_cast<long long>(ts.parameters.size())) + " parameter names");
        if (i == 1) rec.note += "; printed entry (2,3) uses t6 for both x3*x4^2 and x4^2*x5, one T1 direction is missing";
        if (i == 3) rec.note += "; printed family uses t45 twice and never t47";
    }
}

void group_symmetry(Runner& R)
{
    struct Case {
        std::string name, tri, gens;
        std::vector<std::pair<std::vector<int>, std::vector<int>>> elements;
        std::string note;
    };
    std::vector<Case> cases{
        {"roedland", "triangulations/p5.txt", "generators/roedland.vec", {{{1, 3}, {4, 7}}},
         "printed generator -x2x4x7 lacks the first-order term s*x1*x2*x3 of the orbit"},
        {"boehm", "triangulations/p4.txt", "generators/boehm.vec", {{{5}, {3, 4, 6}}, {{6}, {5, 7}}, {{1, 2}, {3, 4, 7}}}, ""},
    };
    for (const auto& c : cases) {
        auto K = load_triangulation_file(R.path(c.tri));
        auto B = t1_degree_zero_basis(K);
        auto O = orbits_on_t1(automorphism_group(K), B);
        std::map<std::size_t, std::string> assign;
        for (const auto& [a, b] : c.elements) {
            bool found = false;
            for (std::size_t i = 0; i < B.size(); ++i)
                if (B[i].a == make_face(a) && B[i].b == make_face(b)) {
                    assign[O.block_of(i)] = "s";
                    found = true;
                }
            if (!found) throw std::runtime_error("no T1 element with a=" + list(a) + " b=" + list(b));
        }
        auto fam = invariant_specialize(first_order_family(K), O, assign);
        auto mask = parameter_mask(fam.vars);
        std::vector<Polynomial> printed;
        for (const auto& p : load_vector_file(R.path(c.gens))) printed.push_back(p.over(fam.vars).truncate(mask, 2));
        std::string n = std::to_string(fam.generators.size());
        auto& rec = R.res.report.compare("symmetry.specialize." + c.name, "symmetry", n + "/" + n,
                                         matched_up_to_sign(fam.generators, printed), c.tri + ", " + c.gens,
                                         "orbit-invariant one-parameter family vs printed generators mod s^2");
        if (!c.note.empty() && rec.status == Status::Fail) rec.note += "; " + c.note;
    }
}

void group_torus(Runner& R)
{
    auto quintic = load_vector_file(R.path("generators/quintic.vec"));
    auto Hq = diagonal_stabilizer(quintic);
    R.res.report.compare("torus.quintic.order", "torus", "125", Hq.finite ? str(Hq.order()) : "infinite", "generators/quintic.vec");

    auto rod = load_vector_file(R.path("generators/roedland.vec"));
    auto Hr = diagonal_stabilizer(rod);
    R.res.report.compare("torus.roedland.group", "torus", "Z/7", Hr.finite ? "Z/" + list(Hr.invariant_factors, "", "") : "infinite", "generators/roedland.vec");
    std::vector<Integer> wr{0, 1, 2, 3, 4, 5, 6};
    R.res.report.compare("torus.roedland.character", "torus", "true", yes(verify_character(rod, wr, 7)), "generators/roedland.vec",
                         "weights (0,1,2,3,4,5,6) mod 7");

    auto boe = load_vector_file(R.path("generators/boehm.vec"));
    auto Hb = diagonal_stabilizer(boe);
    R.res.report.compare("torus.boehm.group", "torus", "Z/13", Hb.finite ? "Z/" + list(Hb.invariant_factors, "", "") : "infinite", "generators/boehm.vec");
    std::vector<Integer> wb{3, 3, 11, 11, 1, 7, 0};
    R.res.report.compare("torus.boehm.character", "torus", "true", yes(verify_character(boe, wb, 13)), "generators/boehm.vec",
                         "weights (3,3,11,11,1,7,0) mod 13");
}

void group_singularity(Runner& R)
{
    auto gens = load_vector_file(R.path("generators/boehm.vec"));
    auto vars = gens.front().vars();
    struct Pt {
        std::vector<int> coords;
        std::string chart;
        bool singular;
    };
    std::vector<Pt> pts{{{1, 0, 0, 0, 0, 0, 0}, "x1", true},  {{0, 1, 0, 0, 0, 0, 0}, "x2", true},
                        {{0, 0, 1, 0, 0, 0, 0}, "x3", true},  {{0, 0, 0, 1, 0, 0, 0}, "x4", true},
                        {{1, -1, 0, 0, 0, 0, 0}, "x1", false}, {{0, 0, 1, -1, 0, 0, 0}, "x3", false}};
    for (const auto& p : pts) {
        std::map<std::string, Rational> at;
        for (int i = 0; i < 7; ++i) at["x" + std::to_string(i + 1)] = p.coords[static_cast<std::size_t>(i)];
        at["s"] = Rational(1, 2);
        auto J = evaluate_jacobian(gens, p.chart, at);
        bool on = std::all_of(J.values.begin(), J.values.end(), [](const Rational& q) { return q == 0; });
        std::string expected = p.singular ? "on X_s, rank < 3" : "on X_s, rank 3";
        std::string computed = std::string(on ? "on X_s" : "off X_s") + ", " +
                               (J.rank < 3 ? "rank < 3" : "rank " + std::to_string(J.rank));
        std::vector<int> c = p.coords;
        R.res.report.compare("singularity.boehm." + list(c, "(", ")"), "singularity", expected, computed,
                             "generators/boehm.vec", "s = 1/2");
    }
}

void group_toric(Runner& R)
{
    auto& rep = R.res.report;
    const std::string fanf = "toric/boehm_fan.txt", fpf = "toric/boehm_fpoly.txt", compf = "toric/boehm_components.txt";
    auto fan = load_fan_file(R.path(fanf));
    auto fp = load_fpoly_file(R.path(fpf));

    auto sub = verify_smooth_subdivision(fan);
    rep.compare("toric.fan.size", "toric", "18 rays, 53 cones",
                str(static_cast<long long>(sub.ray_count)) + " rays, " + str(static_cast<long long>(sub.cone_count)) + " cones", fanf);
    rep.compare("toric.fan.smooth_subdivision", "toric", "true", yes(sub.ok), fanf,
                sub.failures.empty() ? "unimodular, proper intersections, ridges paired" : sub.failures.front());

    std::vector<std::size_t> interior;
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        if (std::find(fan.sigma.begin(), fan.sigma.end(), i) == fan.sigma.end()) interior.push_back(i);
    auto crep = crepancy_check(fan, fp.f, fp.one);
    std::vector<std::string> failing, meet_fail, not_meeting;
    for (auto i : interior) {
        bool meets = divisor_meets_strict_transform(fan, i, fp.invariant);
        if (!meets) not_meeting.push_back(vector_string(fan.rays[i]));
        if (!crep[i].holds) {
            failing.push_back(vector_string(fan.rays[i]));
            if (meets) meet_fail.push_back(vector_string(fan.rays[i]));
        }
    }
    rep.compare("toric.crepancy.interior_rays", "toric", "14/14",
                str(static_cast<long long>(interior.size() - failing.size())) + "/" + str(static_cast<long long>(interior.size())), fanf + ", " + fpf,
                failing.empty() ? "" : "fails on " + list(failing, "", "") + "; these rays do not meet the strict transform");
    rep.compare("toric.crepancy.meeting_rays", "toric", "10/10",
                str(static_cast<long long>(interior.size() - not_meeting.size() - meet_fail.size())) + "/" +
                    str(static_cast<long long>(interior.size() - not_meeting.size())),
                fanf + ", " + fpf);
    rep.compare("toric.meets.count", "toric", "10", str(static_cast<long long>(interior.size() - not_meeting.size())), fanf + ", " + fpf);
    std::sort(not_meeting.begin(), not_meeting.end());
    rep.compare("toric.meets.excluded", "toric", "(11,-4,-2,-4) (3,0,0,-1) (5,-1,0,-2) (8,-3,-1,-3)", words(not_meeting),
                fanf + ", " + fpf);

    auto vars = chart_variables(4);
    struct ChartCase {
        int cone;
        std::string expected;
        std::string note;
    };
    std::vector<ChartCase> charts{{1, "y4*y1^2 + 1 + y4^4*y3^3*y2^5 + y4^2*y3*y2", ""},
                                  {29, "y1^2*y4 + 1 + y2*y3^2 + y3", "printed chart polynomial; exponent computation gives y2^2*y3"},
                                  {48, "y2*y3^2 + 1 + y1 + y4^2*y2^2*y1^3", ""}};
    for (const auto& c : charts) {
        Polynomial got = strict_transform(fan, static_cast<std::size_t>(c.cone - 1), fp.invariant);
        Polynomial want = parse_polynomial(c.expected, vars);
        auto& rec = rep.compare("toric.chart.tau" + std::to_string(c.cone), "toric", want.to_string(), got.to_string(), fanf + ", " + fpf);
        if (rec.status == Status::Fail && !c.note.empty()) rec.note = c.note;
    }

    auto comps = load_components_file(R.path(compf));
    auto comp = [&](const std::string& label) -> const ComponentRecord& {
        for (const auto& c : comps)
            if (c.label == label) return c;
        throw std::runtime_error("component " + label + " missing");
    };
    // computed from scratch
    for (const std::string label : {"E1", "E2", "E3", "E4"}) {
        const auto& c = comp(label);
        auto m = method1_component(fan, fan.ray_index(c.ray), fp.invariant, c.chart);
        auto st = classify_toric_surface(m.fan);
        rep.compare("toric.method1." + label, "toric", std::to_string(c.chi) + " " + c.type,
                    str(static_cast<long long>(m.fan.rays.size())) + " " + (st.presentations.count(c.type) ? c.type : st.tag), compf,
                    "chart tau" + std::to_string(m.chart + 1) + ", restriction " + m.restriction.to_string() + ", rays " +
                        rays_string(m.fan.rays));
    }
    for (const std::string label : {"E10", "E11"}) {
        const auto& c = comp(label);
        auto pr = orbit_closure_component(fan, fan.ray_index(c.ray), fan.ray_index(c.partner), c.chart);
        auto f2 = make_fan2d(pr.rays);
        auto st = classify_toric_surface(f2);
        std::string tag = st.presentations.count(c.type) ? c.type : st.tag;
        rep.compare("toric.method3." + label, "toric", std::to_string(c.chi) + " " + c.type,
                    str(static_cast<long long>(f2.rays.size())) + " " + tag, compf,
                    "presentations " + list(std::vector<std::string>(st.presentations.begin(), st.presentations.end())));
    }
    // ingested, with the checks available
    {
        for (const std::string label : {"E5", "E6"}) {
            const auto& c = comp(label);
            auto m = method1_component(fan, fan.ray_index(c.ray), fp.invariant, c.chart);
            auto st = classify_toric_surface(m.fan);
            rep.ingest("toric.component." + label, "toric", std::to_string(c.chi) + " " + c.type, compf,
                       "one of two conjugate factors of " + m.restriction.to_string() + "; torus fan of the chart has " +
                           str(static_cast<long long>(m.fan.rays.size())) + " rays, presentations " +
                           list(std::vector<std::string>(st.presentations.begin(), st.presentations.end())));
            rep.compare("toric.crosscheck." + label, "toric", std::to_string(c.chi) + " rays, " + c.type + " presentable",
                        str(static_cast<long long>(m.fan.rays.size())) + " rays, " + c.type + (st.presentations.count(c.type) ? " presentable" : " not presentable"),
                        compf);
        }
        struct Bundle {
            std::string label;
            std::size_t base_rays;
            std::string base_type;
        };
        for (const auto& b : std::vector<Bundle>{{"E7", 5, "Bl1F2"}, {"E8", 6, "Bl2F2"}}) {
            const auto& c = comp(b.label);
            rep.ingest("toric.component." + b.label, "toric", std::to_string(c.chi) + " " + c.type, compf,
                       "P1-bundle over the base below, degenerate fibres not classified");
            auto pb = pbundle_structure(fan, fan.ray_index(c.ray), fp.invariant, c.chart);
            if (!pb) {
                rep.compare("toric.pbundle." + b.label, "toric", std::to_string(b.base_rays) + " rays " + b.base_type, "no bundle structure", compf);
                continue;
            }
            auto st = classify_toric_surface(pb->base);
            rep.compare("toric.pbundle." + b.label, "toric", std::to_string(b.base_rays) + " rays " + b.base_type,
                        str(static_cast<long long>(pb->base.rays.size())) + " rays " + (st.presentations.count(b.base_type) ? b.base_type : st.tag),
                        compf, "fibre direction " + vector_string(pb->fiber));
        }
        const auto& e9 = comp("E9");
        rep.ingest("toric.component.E9", "toric", std::to_string(e9.chi) + " " + e9.type, compf);
        const auto& e12 = comp("E12");
        rep.ingest("toric.component.E12", "toric", std::to_string(e12.chi) + " " + e12.type, compf, "scroll analysis not automated");
        auto star = star_fan(fan, fan.ray_index(e12.ray), e12.chart);
        auto poly = polytope_normal_fan({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 0, 4}, {0, 1, 2}});
        std::vector<IntVector> sr = star.rays;
        std::sort(sr.begin(), sr.end());
        rep.compare("toric.method4.E12.normal_fan", "toric", "equal", poly.normals == sr ? "equal" : "different", compf,
                    "Star rays " + std::to_string(sr.size()) + ", cones " + std::to_string(star.cone_count));
        rep.compare("toric.method4.E12.lattice_points", "toric", "10", str(static_cast<long long>(poly.lattice_points)), compf);
    }

    auto ic = intersection_complex(fan, comps, fp.invariant);
    auto fv = f_vector(ic.complex);
    rep.compare("toric.intersection.counts", "toric", "12 vertices, 25 edges, 14 triangles",
                str(fv.counts.size() > 1 ? fv.counts[1] : 0) + " vertices, " + str(static_cast<long long>(ic.edges.size())) + " edges, " +
                    str(static_cast<long long>(ic.triangles.size())) + " triangles",
                fanf + ", " + compf);
    std::vector<std::string> facets;
    for (const auto& t : ic.triangles) facets.push_back(list(t));
    rep.compare("toric.intersection.facets", "toric",
                "{1,2,7} {2,7,8} {3,8,11} {4,10,11} {4,10,12} {5,7,9} {5,7,10} {5,10,12} {6,7,9} {6,7,10} {6,10,12} {7,8,9} {7,8,10} {8,10,11}",
                words(facets),
                fanf + ", " + compf);
    long long sum = 0;
    for (const auto& c : comps) sum += c.chi;
    rep.compare("toric.euler.sum_components", "toric", "61", str(sum), compf, "ingested chi for E5-E9, E12");
    rep.compare("toric.euler.exceptional", "toric", "25", str(euler_exceptional(comps, ic)), fanf + ", " + compf);
}

void group_cohom(Runner& R)
{
    auto& rep = R.res.report;
    std::vector<std::string> h;
    for (long long d : {-7, -8, -9, -10}) h.push_back(to_string(h_twist(6, d, 6)));
    rep.compare("cohom.bott.h6", "cohom", "{1,7,28,84}", list(h), "Bott formula");
    const std::string file = "cohomology/ci_223.txt";
    auto data = load_complexes_file(R.path(file));
    auto res = hodge_pipeline_ci(data);
    auto get = [&](const std::string& s, int p) {
        auto v = res.solution.get(s, p);
        return v ? to_string(*v) : std::string("undetermined");
    };
    rep.compare("cohom.resolution.structure_degree", "cohom", "<= 3", res.structure_degree <= 3 ? "<= 3" : std::to_string(res.structure_degree), file);
    rep.compare("cohom.resolution.square_degree", "cohom", "<= 3", res.square_degree <= 3 ? "<= 3" : std::to_string(res.square_degree), file,
                "O/J^2 must have a Hilbert polynomial of degree at most dim X");
    rep.compare("cohom.h3_OX(-1)", "cohom", "7", get("O_X(-1)", 3), file);
    rep.compare("cohom.h3_Omega|X", "cohom", "48", get("Omega|X", 3), file);
    rep.compare("cohom.h4_J2", "cohom", "122", get("J^2", 4), file);
    rep.compare("cohom.h3_conormal", "cohom", "121", get("N*", 3), file);
    rep.compare("cohom.hodge.p2", "cohom", "(1,73)", "(" + get("Omega_X", 1) + "," + get("Omega_X", 2) + ")", file,
                list(res.axioms, "axioms: ", ""));
    rep.compare("cohom.hodge.p3", "cohom", "(1,73)", "(" + get("Omega_X", 1) + "," + get("Omega_X", 2) + ")", file,
                "same twist data reused for the (2,2,3) complete intersection; assumption");
    rep.ingest("cohom.hodge.p4", "cohom", "(1,61)", "recorded constant", "not derived");
    rep.ingest("cohom.hodge.p5", "cohom", "(1,50)", "recorded constant", "not derived");
}

void group_milnor(Runner& R)
{
    auto& rep = R.res.report;
    RatVector w{Rational(2, 5), Rational(1, 3), Rational(1, 5), Rational(1, 2)};
    rep.compare("milnor.q12", "milnor", "12", to_string(milnor_quasihomogeneous(w)), "weights (2/5,1/3,1/5,1/2)");
    std::vector<std::string> vars{"z", "x", "y", "w"};
    auto f = parse_polynomial("w^2 + x^3 + y^5 + y*z^2", vars);
    rep.compare("milnor.quasihomogeneous", "milnor", "true", yes(check_quasihomogeneous(f, w)), "w^2 + x^3 + y^5 + y*z^2");
    (void)R;
}

void group_mirror(Runner& R)
{
    auto& rep = R.res.report;
    // derived inputs
    auto fan = load_fan_file(R.path("toric/boehm_fan.txt"));
    auto fp = load_fpoly_file(R.path("toric/boehm_fpoly.txt"));
    auto comps = load_components_file(R.path("toric/boehm_components.txt"));
    long long chiE = euler_exceptional(comps, intersection_complex(fan, comps, fp.invariant));
    auto H = diagonal_stabilizer(load_vector_file(R.path("generators/boehm.vec")));
    long long order = static_cast<long long>(H.order());
    long long milnor = static_cast<long long>(milnor_quasihomogeneous({Rational(2, 5), Rational(1, 3), Rational(1, 5), Rational(1, 2)}));
    // abelian group: conjugacy classes = elements
    long long mckay = order;
    rep.compare("mirror.mckay", "mirror", "13", str(mckay), "generators/boehm.vec", "conjugacy classes of the abelian group H");
    // recorded geometric counts
    const long long chi_smooth = -120, n_sing = 4, n_fixed = 6, n_E = 4, n_mckay = 2;
    rep.ingest("mirror.inputs", "mirror", "chi_smooth -120, 4 singular points, 6 fixed points, 2 smooth fixed points", "recorded constants");
    MirrorEulerInput in{chi_smooth, n_sing, milnor, order, n_fixed, chiE, n_E, mckay, n_mckay};
    rep.compare("mirror.open_part", "mirror", "-6", str(open_part_euler(in)), "recorded constants, derived chi(E), |H|, Milnor number");
    rep.compare("mirror.euler", "mirror", "120", str(mirror_euler(in)), "recorded constants, derived chi(E), |H|, Milnor number");
}

} // namespace

int SuiteResult::exit_code() const
{
    if (aborted || (!fixture_errors.empty() && report.checks.empty())) return 2;
    return report.any_fail() ? 1 : 0;
}

const std::vector<std::string>& suite_groups()
{
    static const std::vector<std::string> g{"t1",       "links",    "degree", "sr",       "aut",         "orbits",
                                            "pfaffian", "syzygy",   "family", "symmetry", "torus",       "singularity",
                                            "toric",    "cohom",    "milnor", "mirror"};
    return g;
}

const std::vector<std::string>& documented_failures()
{
    static const std::vector<std::string> ids{
        "aut.p1", "family.tangent.p1", "family.tangent.p3", "symmetry.specialize.roedland",
        "toric.crepancy.interior_rays", "toric.chart.tau29"};
    return ids;
}

SuiteResult run_all(const std::string& fixtures, const SuiteOptions& options)
{
    for (const auto& g : options.only)
        if (std::find(suite_groups().begin(), suite_groups().end(), g) == suite_groups().end())
            throw std::invalid_argument("unknown group " + g);
    Runner R(fixtures, options);
    std::vector<std::string> tris;
    for (const auto& t : triangulations()) tris.push_back(t.file);
    std::vector<std::string> mats;
    for (int i = 1; i <= 5; ++i) {
        mats.push_back("matrices/p" + std::to_string(i) + "_base.mat");
        mats.push_back("matrices/p" + std::to_string(i) + "_base.vec");
        mats.push_back("matrices/p" + std::to_string(i) + "_first_order.mat");
    }
    std::vector<std::string> toric{"toric/boehm_fan.txt", "toric/boehm_fpoly.txt", "toric/boehm_components.txt"};

    R.group("t1", tris, [&] { group_t1(R); });
    R.group("links", tris, [&] { group_links(R); });
    R.group("degree", tris, [&] { group_degree(R); });
    R.group("sr", {"triangulations/p1.txt", "triangulations/p3.txt"}, [&] { group_sr(R); });
    R.group("aut", tris, [&] { group_aut(R); });
    R.group("orbits", tris, [&] { group_orbits(R); });
    R.group("pfaffian", {"matrices/roedland.mat", "matrices/boehm.mat", "generators/roedland.vec", "generators/boehm.vec"},
            [&] { group_pfaffian(R); });
    R.group("syzygy", mats, [&] { group_syzygy(R); });
    std::vector<std::string> fam = mats;
    fam.insert(fam.end(), tris.begin() + 1, tris.end());
    R.group("family", fam, [&] { group_family(R); });
    R.group("symmetry", {"triangulations/p4.txt", "triangulations/p5.txt", "generators/roedland.vec", "generators/boehm.vec"},
            [&] { group_symmetry(R); });
    R.group("torus", {"generators/quintic.vec", "generators/roedland.vec", "generators/boehm.vec"}, [&] { group_torus(R); });
    R.group("singularity", {"generators/boehm.vec"}, [&] { group_singularity(R); });
    R.group("toric", toric, [&] { group_toric(R); });
    R.group("cohom", {"cohomology/ci_223.txt"}, [&] { group_cohom(R); });
    R.group("milnor", {}, [&] { group_milnor(R); });
    auto mirror_files = toric;
    mirror_files.push_back("generators/boehm.vec");
    R.group("mirror", mirror_files, [&] { group_mirror(R); });
    return R.res;
}

} // namespace srcy
