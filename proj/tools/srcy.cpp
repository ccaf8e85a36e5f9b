#include "srcy/cohomology.hpp"
#include "srcy/deformation.hpp"
#include "srcy/pfaffian.hpp"
#include "srcy/singularity.hpp"
#include "srcy/sr_ideal.hpp"
#include "srcy/suite.hpp"
#include "srcy/symmetry.hpp"
#include "srcy/toric.hpp"
#include "srcy/torus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#ifndef SRCY_DEFAULT_FIXTURES
#define SRCY_DEFAULT_FIXTURES "data"
#endif

using namespace srcy;
using json = nlohmann::ordered_json;

namespace {

std::string fixtures_dir()
{
    if (const char* env = std::getenv("SRCY_FIXTURES"); env && *env) return env;
    return SRCY_DEFAULT_FIXTURES;
}

// plain path first, then relative to the fixture directory
std::string resolve(const std::string& p)
{
    if (std::filesystem::exists(p)) return p;
    std::string q = fixtures_dir() + "/" + p;
    if (std::filesystem::exists(q)) return q;
    throw std::runtime_error("no such file: " + p);
}

std::vector<int> labels(Face f) { return face_vertices(f); }

json t1_json(const SimplicialComplex& K)
{
    auto basis = t1_degree_zero_basis(K);
    json j;
    j["dimension"] = basis.size();
    j["basis"] = json::array();
    for (const auto& e : basis) j["basis"].push_back({{"a", labels(e.a)}, {"a_vector", e.a_vector}, {"b", labels(e.b)}});
    return j;
}

json group_json(const PermutationGroup& G)
{
    json j;
    j["order"] = G.order();
    j["labels"] = G.labels;
    j["generators"] = json::array();
    for (const auto& g : G.generators) j["generators"].push_back(g.images);
    return j;
}

json polys_json(const std::vector<Polynomial>& ps)
{
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"srcy: Stanley-Reisner Calabi-Yau verification toolkit"};
    app.require_subcommand(1);

    std::string file, file2, file3;
    int truncate = 0;

    auto* t1 = app.add_subcommand("t1", "degree-zero T^1 basis of a triangulated 3-sphere");
    t1->add_option("triangulation", file)->required();
    t1->callback([&] { print(t1_json(load_triangulation_file(resolve(file)))); });

    auto* aut = app.add_subcommand("aut", "automorphism group of a simplicial complex");
    aut->add_option("triangulation", file)->required();
    aut->callback([&] { print(group_json(automorphism_group(load_triangulation_file(resolve(file))))); });

    auto* orb = app.add_subcommand("orbits", "orbits of the automorphism group on T^1");
    orb->add_option("triangulation", file)->required();
    orb->callback([&] {
        auto K = load_triangulation_file(resolve(file));
        auto O = orbits_on_t1(automorphism_group(K), t1_degree_zero_basis(K));
        json j;
        j["count"] = O.blocks.size();
        j["sizes"] = O.sizes();
        j["blocks"] = O.blocks;
        print(j);
    });

    auto* sr = app.add_subcommand("sr", "Stanley-Reisner ideal, degree and Hilbert numerator");
    sr->add_option("triangulation", file)->required();
    sr->callback([&] {
        auto K = load_triangulation_file(resolve(file));
        json j;
        j["generators"] = json::array();
        for (Face f : minimal_nonfaces(K).generators) j["generators"].push_back(labels(f));
        j["degree"] = degree(K);
        json h = json::array();
        for (const auto& c : hilbert_numerator(K)) h.push_back(to_string(c));
        j["hilbert_numerator"] = h;
        print(j);
    });

    auto* pf = app.add_subcommand("pfaffian", "principal Pfaffians of a skew matrix file");
    pf->add_option("matrix", file)->required();
    pf->add_option("--truncate", truncate, "drop parameter degree >= k");
    pf->callback([&] { print({{"pfaffians", polys_json(principal_pfaffians(load_matrix_file(resolve(file)), truncate))}}); });

    auto* vf = app.add_subcommand("verify-family", "check M1 f1 = 0 modulo t^2");
    vf->add_option("matrix", file)->required();
    vf->add_option("vector", file2, "perturbed generators; default: principal Pfaffians mod t^2");
    vf->callback([&] {
        auto M = load_matrix_file(resolve(file));
        std::vector<Polynomial> f;
        if (file2.empty()) f = principal_pfaffians(M, 2);
        else
            for (const auto& p : load_vector_file(resolve(file2))) f.push_back(p.over(M.vars()));
        bool ok = verify_first_order(M, f);
        print({{"first_order_syzygy", ok}});
        if (!ok) throw CLI::RuntimeError(1);
    });

    auto* tg = app.add_subcommand("torus-group", "diagonal subgroup of the quotient torus preserving a family");
    tg->add_option("generators", file)->required();
    tg->callback([&] {
        auto H = diagonal_stabilizer(load_vector_file(resolve(file)));
        json j;
        j["finite"] = H.finite;
        if (!H.finite) j["note"] = H.note;
        else {
            j["order"] = to_string(H.order());
            json inv = json::array(), gens = json::array();
            for (const auto& s : H.invariant_factors) inv.push_back(to_string(s));
            for (const auto& g : H.generators) {
                json v = json::array();
                for (const auto& x : g) v.push_back(to_string(x));
                gens.push_back(v);
            }
            j["invariant_factors"] = inv;
            j["generators"] = gens;
        }
        print(j);
    });

    auto* toric = app.add_subcommand("toric", "toric resolution checks");
    toric->require_subcommand(1);
    auto* tv = toric->add_subcommand("verify", "smooth subdivision check");
    tv->add_option("fan", file)->required();
    tv->callback([&] {
        auto r = verify_smooth_subdivision(load_fan_file(resolve(file)));
        print({{"ok", r.ok}, {"rays", r.ray_count}, {"cones", r.cone_count}, {"failures", r.failures}});
        if (!r.ok) throw CLI::RuntimeError(1);
    });
    auto* tc = toric->add_subcommand("crepancy", "Reid criterion per ray");
    tc->add_option("fan", file)->required();
    tc->add_option("fpoly", file2)->required();
    tc->callback([&] {
        auto fan = load_fan_file(resolve(file));
        auto fp = load_fpoly_file(resolve(file2));
        json rows = json::array();
        for (const auto& r : crepancy_check(fan, fp.f, fp.one))
            rows.push_back({{"ray", vector_string(r.ray)},
                            {"alpha_one", to_string(r.alpha_one)},
                            {"alpha_f", to_string(r.alpha_f)},
                            {"crepant", r.holds},
                            {"meets_strict_transform", divisor_meets_strict_transform(fan, fan.ray_index(r.ray), fp.invariant)}});
        print({{"rays", rows}});
    });
    auto* tch = toric->add_subcommand("charts", "strict transform in every chart");
    tch->add_option("fan", file)->required();
    tch->add_option("fpoly", file2)->required();
    tch->callback([&] {
        auto fan = load_fan_file(resolve(file));
        auto fp = load_fpoly_file(resolve(file2));
        json rows = json::array();
        for (std::size_t c = 0; c < fan.cones.size(); ++c)
            rows.push_back({{"cone", c + 1}, {"strict_transform", strict_transform(fan, c, fp.invariant).to_string()}});
        print({{"charts", rows}});
    });
    auto* te = toric->add_subcommand("euler", "intersection complex and Euler number of the exceptional divisor");
    te->add_option("fan", file)->required();
    te->add_option("fpoly", file2)->required();
    te->add_option("components", file3)->required();
    te->callback([&] {
        auto fan = load_fan_file(resolve(file));
        auto fp = load_fpoly_file(resolve(file2));
        auto comps = load_components_file(resolve(file3));
        auto ic = intersection_complex(fan, comps, fp.invariant);
        json tri = json::array();
        for (const auto& t : ic.triangles) tri.push_back(t);
        json edges = json::array();
        for (const auto& [a, b] : ic.edges) edges.push_back({a, b});
        print({{"vertices", comps.size()}, {"edges", edges}, {"triangles", tri}, {"euler", euler_exceptional(comps, ic)}});
    });

    auto* cohom = app.add_subcommand("cohom", "cohomology ledger");
    cohom->require_subcommand(1);
    auto* hodge = cohom->add_subcommand("hodge", "Hodge numbers from resolution twist data");
    hodge->add_option("complexes", file)->required();
    hodge->callback([&] {
        auto r = hodge_pipeline_ci(load_complexes_file(resolve(file)));
        json table;
        for (const auto& [s, m] : r.solution.values) {
            if (s.find(':') != std::string::npos) continue;
            json row;
            for (const auto& [p, v] : m) row[std::to_string(p)] = to_string(v);
            table[s] = row;
        }
        print({{"ok", r.ok},
               {"h11", r.h11},
               {"h12", r.h12},
               {"axioms", r.axioms},
               {"table", table},
               {"undetermined", r.solution.undetermined},
               {"contradictions", r.solution.contradictions}});
        if (!r.ok) throw CLI::RuntimeError(1);
    });

    std::vector<std::string> weights;
    auto* mil = app.add_subcommand("milnor", "Milnor number of a quasi-homogeneous isolated singularity");
    mil->add_option("weights", weights)->required();
    mil->callback([&] {
        RatVector w;
        for (const auto& s : weights) w.push_back(parse_rational(s));
        print({{"milnor", to_string(milnor_quasihomogeneous(w))}});
    });

    std::string fixtures, only, json_out, format = "text";
    bool partial = false;
    auto* ra = app.add_subcommand("run-all", "full verification suite");
    ra->add_option("--fixtures", fixtures, "fixture directory (default $SRCY_FIXTURES)");
    ra->add_option("--only", only, "comma-separated groups");
    ra->add_flag("--partial", partial, "skip groups whose fixtures are missing");
    ra->add_option("--json", json_out, "also write the JSON report to a file");
    ra->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    ra->callback([&] {
        SuiteOptions opt;
        opt.allow_partial = partial;
        std::stringstream ss(only);
        std::string g;
        while (std::getline(ss, g, ','))
            if (!g.empty()) opt.only.insert(g);
        auto res = run_all(fixtures.empty() ? fixtures_dir() : fixtures, opt);
        for (const auto& e : res.fixture_errors) std::cerr << "fixture error: " << e << "\n";
        if (format == "json") std::cout << emit_json(res.report, 2) << "\n";
        else std::cout << emit_text(res.report);
        if (!json_out.empty()) {
            std::ofstream out(json_out);
            out << emit_json(res.report, 2) << "\n";
        }
        if (format == "text" && opt.only.empty() && !res.aborted) {
            for (const auto& c : res.report.checks)
                if (c.id == "mirror.euler") std::cout << "χ(mirror) = " << c.computed << "\n";
        }
        if (int code = res.exit_code()) throw CLI::RuntimeError(code);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
