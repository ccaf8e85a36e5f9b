#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"

#include "srcy/cohomology.hpp"
#include "srcy/toric.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

using namespace srcy;

namespace {

struct Loaded {
    Fan fan;
    FPolyData fp;
    std::vector<ComponentRecord> comps;
};

const Loaded& data()
{
    static const Loaded d{load_fan_file(fixture("toric/boehm_fan.txt")), load_fpoly_file(fixture("toric/boehm_fpoly.txt")),
                          load_components_file(fixture("toric/boehm_components.txt"))};
    return d;
}

std::vector<std::size_t> interior_rays(const Fan& fan)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        if (std::find(fan.sigma.begin(), fan.sigma.end(), i) == fan.sigma.end()) out.push_back(i);
    return out;
}

} // namespace

TEST_CASE("the fan is a smooth subdivision")
{
    auto r = verify_smooth_subdivision(data().fan);
    CHECK(r.ok);
    CHECK(r.ray_count == 18);
    CHECK(r.cone_count == 53);
}

TEST_CASE("a perturbed ray breaks the subdivision check")
{
    std::ifstream in(fixture("toric/boehm_fan.txt"));
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    // the first interior ray, (3,-1,0,-1), moved off the lattice of the subdivision
    auto pos = text.find("\n3 -1 0 -1\n");
    REQUIRE(pos != std::string::npos);
    text.replace(pos + 1, 9, "3 -1 1 -1");
    std::istringstream bad(text);
    Fan fan = load_fan(bad);
    CHECK_FALSE(verify_smooth_subdivision(fan).ok);
}

TEST_CASE("crepancy holds exactly on the rays meeting the strict transform")
{
    const auto& d = data();
    auto rows = crepancy_check(d.fan, d.fp.f, d.fp.one);
    std::size_t meets = 0;
    for (auto i : interior_rays(d.fan)) {
        bool m = divisor_meets_strict_transform(d.fan, i, d.fp.invariant);
        if (m) {
            ++meets;
            CHECK(rows[i].holds);
        }
    }
    CHECK(meets == 10);
}

TEST_CASE("crepancy negative control with a perturbed pairing vector")
{
    const auto& d = data();
    auto one = d.fp.one;
    one[0] += 1;
    auto rows = crepancy_check(d.fan, d.fp.f, one);
    std::size_t failing = 0;
    for (auto i : interior_rays(d.fan))
        if (divisor_meets_strict_transform(d.fan, i, d.fp.invariant) && !rows[i].holds) ++failing;
    CHECK(failing > 0);
}

TEST_CASE("chart polynomials")
{
    const auto& d = data();
    auto v = chart_variables(4);
    CHECK(strict_transform(d.fan, 0, d.fp.invariant) == parse_polynomial("y4*y1^2 + 1 + y4^4*y3^3*y2^5 + y4^2*y3*y2", v));
    CHECK(strict_transform(d.fan, 47, d.fp.invariant) == parse_polynomial("y2*y3^2 + 1 + y1 + y4^2*y2^2*y1^3", v));
    CHECK(strict_transform(d.fan, 28, d.fp.invariant) == parse_polynomial("y1^2*y4 + 1 + y2^2*y3 + y3", v));
    // no chart variable divides a strict transform
    for (std::size_t c = 0; c < d.fan.cones.size(); ++c) {
        auto p = strict_transform(d.fan, c, d.fp.invariant);
        for (std::size_t k = 0; k < 4; ++k)
            CHECK(std::any_of(p.terms().begin(), p.terms().end(), [&](const auto& t) { return t.first[k] == 0; }));
    }
}

TEST_CASE("toric surfaces: blow-ups of P2 keep the self-intersection sum 12 - 3n")
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<IntVector> rays{{1, 0}, {0, 1}, {-1, -1}};
        int blowups = trial % 5;
        for (int k = 0; k < blowups; ++k) {
            auto f = make_fan2d(rays);
            std::uniform_int_distribution<std::size_t> pick(0, f.rays.size() - 1);
            std::size_t i = pick(rng);
            const auto& a = f.rays[i];
            const auto& b = f.rays[(i + 1) % f.rays.size()];
            rays = f.rays;
            rays.push_back({a[0] + b[0], a[1] + b[1]});
        }
        auto f = make_fan2d(rays);
        CHECK(f.complete);
        CHECK(f.smooth);
        auto st = classify_toric_surface(f);
        CHECK(st.euler == rays.size());
        int sum = 0;
        for (int s : st.self_intersections) sum += s;
        CHECK(sum == 12 - 3 * static_cast<int>(rays.size()));
        if (blowups == 0) CHECK(st.tag == "P2");
        if (blowups >= 1) CHECK(st.presentations.count("Bl" + std::to_string(blowups) + "P2"));
    }
    auto f2 = classify_toric_surface(make_fan2d({{1, 0}, {0, 1}, {-1, 2}, {0, -1}}));
    CHECK(f2.tag == "F2");
    CHECK_FALSE(make_fan2d({{1, 0}, {0, 1}, {-1, -2}}).smooth);
}

TEST_CASE("components computed from the fan")
{
    const auto& d = data();
    for (const auto& c : d.comps) {
        if (c.label != "E1" && c.label != "E2" && c.label != "E3" && c.label != "E4") continue;
        auto m = method1_component(d.fan, d.fan.ray_index(c.ray), d.fp.invariant, c.chart);
        CHECK(static_cast<long long>(m.fan.rays.size()) == c.chi);
        CHECK(classify_toric_surface(m.fan).presentations.count(c.type));
    }
    auto poly = polytope_normal_fan({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 0, 4}, {0, 1, 2}});
    CHECK(poly.lattice_points == 10);
}

TEST_CASE("intersection complex and Euler number of the exceptional set")
{
    const auto& d = data();
    auto ic = intersection_complex(d.fan, d.comps, d.fp.invariant);
    CHECK(ic.edges.size() == 25);
    CHECK(ic.triangles.size() == 14);
    CHECK(ic.undetermined.empty());
    CHECK(euler_exceptional(d.comps, ic) == 25);
    // every triangle's edges are edges
    for (const auto& t : ic.triangles)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j)
                CHECK(std::find(ic.edges.begin(), ic.edges.end(), std::make_pair(t[i], t[j])) != ic.edges.end());
}

TEST_CASE("components without a common cone do not meet")
{
    const auto& d = data();
    std::vector<ComponentRecord> two;
    for (const auto& c : d.comps)
        if (c.label == "E1" || c.label == "E3") two.push_back(c);
    REQUIRE(two.size() == 2);
    auto ic = intersection_complex(d.fan, two, d.fp.invariant);
    CHECK(ic.edges.empty());
    CHECK(euler_exceptional(two, ic) == two[0].chi + two[1].chi);
}

TEST_CASE("mirror Euler number")
{
    MirrorEulerInput in{-120, 4, 12, 13, 6, 25, 4, 13, 2};
    CHECK(open_part_euler(in) == -6);
    CHECK(mirror_euler(in) == 120);
    // free action: only the quotient of the smooth part
    MirrorEulerInput freeq{-200, 0, 0, 5, 0, 0, 0, 0, 0};
    CHECK(mirror_euler(freeq) == -40);
    MirrorEulerInput bad = in;
    bad.n_fixed = 5;
    CHECK_THROWS(open_part_euler(bad));
}

TEST_CASE("Bott formula against Serre duality and the Euler characteristic")
{
    for (int n = 1; n <= 6; ++n)
        for (long long d = -12; d <= 8; ++d) {
            Rational alt = 0;
            for (int p = 0; p <= n; ++p) {
                CHECK(h_twist(n, d, p) == h_twist(n, -d - n - 1, n - p));
                alt += (p % 2 ? -1 : 1) * Rational(h_twist(n, d, p));
            }
            CHECK(alt == chi_twist(n, d));
        }
    CHECK(h_twist(6, -7, 6) == 1);
    CHECK(h_twist(6, -8, 6) == 7);
    CHECK(h_twist(6, -9, 6) == 28);
    CHECK(h_twist(6, -10, 6) == 84);
    // Euler characteristic is a polynomial of degree n in d
    for (int n = 1; n <= 6; ++n) {
        std::vector<Rational> v;
        for (long long d = -10; d < 10; ++d) v.push_back(chi_twist(n, d));
        for (int k = 0; k <= n; ++k) {
            std::vector<Rational> next;
            for (std::size_t i = 0; i + 1 < v.size(); ++i) next.push_back(v[i + 1] - v[i]);
            v = next;
        }
        CHECK(std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; }));
    }
}

TEST_CASE("shifting along a resolution refuses when an intermediate term has cohomology")
{
    Resolution r{parse_twist_sum("(0)^1", 6), parse_twist_sum("(-2)^2 + (-3)^1", 6)};
    CHECK_THROWS_WITH_AS(resolve_shift(r, 0, 0), doctest::Contains("term 0"), std::runtime_error);
    Resolution ok{parse_twist_sum("(-1)^1", 6), parse_twist_sum("(-7)^1", 6)};
    CHECK(resolve_shift(ok, 5) == 1);
}

TEST_CASE("les_solve is independent of sequence order and never goes negative")
{
    LesProblem base;
    base.n = 3;
    base.known["B"] = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    base.known["C"] = {{0, 4}, {1, 0}, {2, 0}, {3, 0}};
    base.known["E"] = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    base.sequences = {{{"A", 1}, {"B", 1}, {"C", 1}}, {{"D", 1}, {"E", 1}, {"A", 2}}, {{"F", 1}, {"C", 1}, {"E", 1}}};
    auto ref = les_solve(base);
    REQUIRE(ref.solved());
    CHECK(*ref.get("A", 1) == 4);
    CHECK(*ref.get("D", 2) == 8);
    CHECK(*ref.get("F", 0) == 4);
    CHECK(*ref.get("F", 1) == 0);
    std::mt19937 rng(1);
    for (int k = 0; k < 10; ++k) {
        auto p = base;
        std::shuffle(p.sequences.begin(), p.sequences.end(), rng);
        auto s = les_solve(p);
        CHECK(s.values == ref.values);
        for (const auto& [sheaf, m] : s.values)
            for (const auto& [deg, v] : m) CHECK(v >= 0);
    }
    // inconsistent data is reported, not clipped
    LesProblem bad;
    bad.n = 1;
    bad.known["A"] = {{0, 3}, {1, 0}};
    bad.known["B"] = {{0, 1}, {1, 0}};
    bad.known["C"] = {{0, 0}, {1, 0}};
    bad.sequences = {{{"A", 1}, {"B", 1}, {"C", 1}}};
    CHECK_FALSE(les_solve(bad).contradictions.empty());
    // nothing known: unknowns are listed, not guessed
    LesProblem open;
    open.n = 1;
    open.sequences = {{{"A", 1}, {"B", 1}, {"C", 1}}};
    auto o = les_solve(open);
    CHECK_FALSE(o.undetermined.empty());
    CHECK_FALSE(o.get("A", 0).has_value());
}

TEST_CASE("Hodge numbers of the (2,2,3) complete intersection")
{
    auto data = load_complexes_file(fixture("cohomology/ci_223.txt"));
    auto r = hodge_pipeline_ci(data);
    CHECK(r.ok);
    CHECK(r.h11 == 1);
    CHECK(r.h12 == 73);
    CHECK(*r.solution.get("O_X(-1)", 3) == 7);
    CHECK(*r.solution.get("Omega|X", 3) == 48);
    CHECK(*r.solution.get("J^2", 4) == 122);
    CHECK(*r.solution.get("N*", 3) == 121);
    CHECK(r.structure_degree <= 3);
    CHECK(r.square_degree <= 3);
}

TEST_CASE("swapping the twists in the last term of the square resolution is rejected")
{
    auto data = load_complexes_file(fixture("cohomology/ci_223.txt"));
    auto& sq = data.complexes.at("ideal_square");
    sq.back() = parse_twist_sum("(-10)^2 + (-9)^1", 6);
    Resolution with_o{parse_twist_sum("(0)^1", 6)};
    with_o.insert(with_o.end(), sq.begin(), sq.end());
    CHECK(hilbert_polynomial_degree(with_o) > 3);
    auto r = hodge_pipeline_ci(data);
    CHECK_FALSE(r.ok);
    CHECK(r.square_degree > 3);
}
