// One line per acceptance criterion. Exit status is 0 when every failing line
// is in the known-failure list printed at the end.

#include "oracle.hpp"

#include "srcy/deformation.hpp"
#include "srcy/intmat.hpp"
#include "srcy/pfaffian.hpp"
#include "srcy/simplicial.hpp"
#include "srcy/suite.hpp"

#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace srcy;

namespace {

const std::set<std::string> known_failures{"automorphism-orders", "toric-crepancy-all-interior", "toric-chart-polynomials"};

struct Line {
    std::string id;
    bool pass;
    std::string detail;
};

std::vector<Line> lines;

void emit(const std::string& id, bool pass, const std::string& detail)
{
    lines.push_back({id, pass, detail});
    std::cout << (pass ? "PASS " : "FAIL ") << id << "  tol=exact  " << detail << "\n";
}

class Checks {
public:
    explicit Checks(const VerificationReport& r)
    {
        for (const auto& c : r.checks) by_id_[c.id] = &c;
    }

    // all ids present and passing; detail lists the failing ones
    void criterion(const std::string& id, const std::vector<std::string>& ids) const
    {
        std::string bad;
        for (const auto& k : ids) {
            auto it = by_id_.find(k);
            if (it == by_id_.end()) bad += " " + k + "=missing";
            else if (it->second->status != Status::Pass)
                bad += " " + k + "(expected " + it->second->expected + ", computed " + it->second->computed + ")";
        }
        emit(id, bad.empty(), std::to_string(ids.size()) + " checks" + (bad.empty() ? "" : ";" + bad));
    }

    const CheckRecord* get(const std::string& id) const
    {
        auto it = by_id_.find(id);
        return it == by_id_.end() ? nullptr : it->second;
    }

private:
    std::map<std::string, const CheckRecord*> by_id_;
};

std::vector<std::string> with_suffix(const std::string& prefix, const std::vector<std::string>& names)
{
    std::vector<std::string> out;
    for (const auto& n : names) out.push_back(prefix + n);
    return out;
}

const std::vector<std::string> tris{"delta4", "p1", "p2", "p3", "p4", "p5"};

std::string tri_file(const std::string& root, const std::string& name)
{
    return root + "/triangulations/" + (name == "delta4" ? std::string("boundary_delta4") : name) + ".txt";
}

void pfaffian_oracle()
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> e(-5, 5);
    int good = 0, total = 0;
    for (std::size_t d : {2, 4, 6, 8})
        for (int k = 0; k < 30; ++k, ++total) {
            std::vector<std::vector<long long>> A(d, std::vector<long long>(d, 0));
            std::vector<std::string> none;
            SkewPolyMatrix M(none, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i + 1; j < d; ++j) {
                    A[i][j] = e(rng);
                    A[j][i] = -A[i][j];
                    M.set(i, j, Polynomial::constant(none, A[i][j]));
                }
            Rational pf = pfaffian(M).constant_term();
            if (pf * pf == Rational(oracle::cofactor_det(A))) ++good;
        }
    emit("pfaffian-square-vs-cofactor", good == total && total >= 100,
         std::to_string(good) + "/" + std::to_string(total) + " random skew matrices, sizes 2,4,6,8");
}

void relabel_property(const std::string& root)
{
    std::mt19937 rng(4);
    bool ok = true;
    for (const auto& t : tris) {
        auto K = load_triangulation_file(tri_file(root, t));
        auto n = t1_degree_zero_basis(K).size();
        auto v = K.vertices();
        for (int rep = 0; rep < 2; ++rep) {
            std::vector<int> target(v.size());
            std::iota(target.begin(), target.end(), 1);
            std::shuffle(target.begin(), target.end(), rng);
            std::vector<int> map(32, -1);
            for (std::size_t i = 0; i < v.size(); ++i) map[static_cast<std::size_t>(v[i])] = target[i];
            auto K2 = relabel(K, map);
            ok = ok && t1_degree_zero_basis(K2).size() == n;
            for (int x : v)
                ok = ok && classify_link(link(K, make_face({x}))) ==
                               classify_link(link(K2, make_face({map[static_cast<std::size_t>(x)]})));
        }
    }
    emit("property-relabel-invariance", ok, "T1 size and vertex link types under 2 random relabelings per fixture");
}

void admissible_property(const std::string& root)
{
    bool ok = true;
    std::size_t faces = 0;
    for (const auto& t : tris) {
        auto cc = t1_link_table_crosscheck(load_triangulation_file(tri_file(root, t)));
        ok = ok && cc.mismatches.empty();
        faces += cc.rows.size();
    }
    std::vector<Face> pent;
    for (int i = 0; i < 5; ++i) pent.push_back(make_face({i, (i + 1) % 5}));
    auto P = SimplicialComplex::from_faces(pent);
    std::size_t e5 = 0;
    Face V = P.vertex_set();
    for (Face b = V; b; b = (b - 1) & V)
        if (face_size(b) >= 2 && admissible_b(P, b)) ++e5;
    emit("property-admissible-b-table", ok && e5 == 0,
         std::to_string(faces) + " fixture faces checked, pentagon gives " + std::to_string(e5));
}

void scaling_property()
{
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> e(-4, 4);
    std::vector<std::string> none;
    bool ok = true;
    for (int k = 0; k < 20; ++k) {
        SkewPolyMatrix M(none, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j) M.set(i, j, Polynomial::constant(none, e(rng)));
        Rational pf = pfaffian(M).constant_term();
        for (std::size_t i = 0; i < 6; ++i)
            ok = ok && pfaffian(M.scaled(i, Polynomial::constant(none, -2))).constant_term() == -2 * pf;
    }
    emit("property-pfaffian-scaling", ok, "20 random 6x6 matrices, each row/column scaled by -2");
}

void snf_property()
{
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> e(-5, 5), c(-2, 2);
    bool ok = true;
    for (int k = 0; k < 30; ++k) {
        IntMatrix A(4, IntVector(4));
        for (auto& r : A)
            for (auto& x : r) x = e(rng);
        auto U = identity_matrix(4), V = identity_matrix(4);
        for (int s = 0; s < 10; ++s) {
            std::size_t i = static_cast<std::size_t>(s % 4), j = static_cast<std::size_t>((s + 1 + k) % 4);
            if (i == j) continue;
            Integer m = c(rng);
            for (std::size_t col = 0; col < 4; ++col) U[i][col] += m * U[j][col];
            for (std::size_t row = 0; row < 4; ++row) V[row][j] += m * V[row][i];
        }
        ok = ok && smith_normal_form(multiply(multiply(U, A), V)).diagonal == smith_normal_form(A).diagonal;
    }
    emit("property-snf-basis-independence", ok, "30 random 4x4 matrices under random unimodular changes of basis");
}

} // namespace

int main(int argc, char** argv)
{
    std::string root = argc > 1 ? argv[1] : SRCY_TEST_FIXTURES;
    auto run = run_all(root);
    if (run.aborted) {
        for (const auto& e : run.fixture_errors) std::cerr << e << "\n";
        return 2;
    }
    Checks C(run.report);

    C.criterion("t1-dimensions", with_suffix("t1.", tris));
    auto deg = with_suffix("degree.", tris);
    for (const auto& t : tris) deg.push_back("hilbert_at_one." + t);
    C.criterion("degrees-and-hilbert", deg);
    C.criterion("automorphism-orders", with_suffix("aut.", tris));
    C.criterion("orbit-counts", with_suffix("orbits.count.", {"delta4", "p2", "p3", "p4", "p5"}));
    C.criterion("orbit-sizes", {"orbits.sizes.delta4", "orbits.sizes.p5", "orbits.total.p4"});
    pfaffian_oracle();
    C.criterion("pfaffian-printed-generators", {"pfaffian.roedland", "pfaffian.boehm"});
    C.criterion("syzygy-base", with_suffix("syzygy.base.p", {"1", "2", "3", "4", "5"}));
    C.criterion("syzygy-first-order", with_suffix("syzygy.first_order.p", {"1", "2", "3", "4", "5"}));
    C.criterion("torus-subgroups", {"torus.quintic.order", "torus.roedland.group", "torus.roedland.character", "torus.boehm.group",
                                    "torus.boehm.character"});
    C.criterion("toric-fan", {"toric.fan.size", "toric.fan.smooth_subdivision"});
    C.criterion("toric-crepancy-all-interior", {"toric.crepancy.interior_rays"});
    C.criterion("toric-meeting-rays", {"toric.meets.count", "toric.meets.excluded", "toric.crepancy.meeting_rays"});
    C.criterion("toric-chart-polynomials", {"toric.chart.tau1", "toric.chart.tau29", "toric.chart.tau48"});
    C.criterion("toric-method1", with_suffix("toric.method1.E", {"1", "2", "3", "4"}));
    C.criterion("toric-method3", {"toric.method3.E10", "toric.method3.E11"});
    C.criterion("toric-intersection-complex", {"toric.intersection.counts", "toric.intersection.facets"});
    C.criterion("toric-euler", {"toric.euler.sum_components", "toric.euler.exceptional"});
    C.criterion("mirror-euler", {"mirror.open_part", "mirror.euler"});
    C.criterion("cohomology-bott", {"cohom.bott.h6"});
    C.criterion("cohomology-hodge-pipeline", {"cohom.resolution.structure_degree", "cohom.resolution.square_degree", "cohom.h3_OX(-1)",
                                              "cohom.h3_Omega|X", "cohom.h4_J2", "cohom.h3_conormal", "cohom.hodge.p2"});
    C.criterion("milnor", {"milnor.q12", "milnor.quasihomogeneous"});
    relabel_property(root);
    admissible_property(root);
    scaling_property();
    snf_property();
    {
        auto again = run_all(root);
        emit("property-deterministic-report", emit_json(again.report) == emit_json(run.report), "two full runs compared byte for byte");
    }
    {
        bool ok = true;
        for (const char* id : {"cohom.hodge.p4", "cohom.hodge.p5", "mirror.inputs"}) {
            auto c = C.get(id);
            ok = ok && c && c->status == Status::Ingested;
        }
        emit("not-derived-recorded-only", ok, "Hodge numbers of the 4th and 5th examples and the mirror geometric counts are ingested, not derived");
    }

    int unexpected = 0, known = 0;
    for (const auto& l : lines) {
        if (l.pass) continue;
        if (known_failures.count(l.id)) ++known;
        else ++unexpected;
    }
    std::cout << "\nknown failures (documented):";
    for (const auto& k : known_failures) std::cout << " " << k;
    std::cout << "\n" << lines.size() << " criteria, " << (lines.size() - static_cast<std::size_t>(known + unexpected)) << " pass, " << known
              << " known failures, " << unexpected << " unexpected failures\n";
    return unexpected == 0 ? 0 : 1;
}
