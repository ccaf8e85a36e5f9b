#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "oracle.hpp"

#include "srcy/deformation.hpp"
#include "srcy/simplicial.hpp"
#include "srcy/sr_ideal.hpp"
#include "srcy/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace srcy;

namespace {

struct Case {
    const char* file;
    std::size_t t1;
    long long degree;
};

const Case cases[] = {
    {"triangulations/boundary_delta4.txt", 105, 5}, {"triangulations/p1.txt", 92, 11}, {"triangulations/p2.txt", 79, 12},
    {"triangulations/p3.txt", 79, 12},              {"triangulations/p4.txt", 67, 13}, {"triangulations/p5.txt", 56, 14},
};

SimplicialComplex polygon(int n)
{
    std::vector<Face> f;
    for (int i = 0; i < n; ++i) f.push_back(make_face({i, (i + 1) % n}));
    return SimplicialComplex::from_faces(f);
}

SimplicialComplex two_points() { return SimplicialComplex::from_faces({make_face({0}), make_face({1})}); }

std::size_t count_admissible(const SimplicialComplex& L)
{
    std::size_t c = 0;
    Face V = L.vertex_set();
    for (Face b = V; b; b = (b - 1) & V)
        if (face_size(b) >= 2 && admissible_b(L, b)) ++c;
    return c;
}

std::vector<int> random_relabel(const SimplicialComplex& K, std::mt19937& rng)
{
    auto v = K.vertices();
    std::vector<int> target(v.size());
    std::iota(target.begin(), target.end(), 1);
    std::shuffle(target.begin(), target.end(), rng);
    std::vector<int> map(32, -1);
    for (std::size_t i = 0; i < v.size(); ++i) map[static_cast<std::size_t>(v[i])] = target[i];
    return map;
}

} // namespace

TEST_CASE("faces agree with brute-force enumeration of facet subsets")
{
    for (const auto& c : cases) {
        auto K = load_triangulation_file(fixture(c.file));
        auto ref = oracle::all_faces(oracle::read_facets(fixture(c.file)));
        std::set<std::vector<int>> got;
        for (Face f : K.faces()) got.insert(face_vertices(f));
        CHECK(got == ref);
        auto fv = f_vector(K);
        CHECK(fv.alternating_sum() == 0); // 3-spheres
        CHECK(is_combinatorial_3sphere_candidate(K).ok);
        for (int v : K.vertices()) CHECK(is_sphere(link(K, make_face({v})), 2));
    }
}

TEST_CASE("T1 in degree zero matches the Hom(I,A) minus derivations oracle")
{
    for (const auto& c : cases) {
        auto K = load_triangulation_file(fixture(c.file));
        auto basis = t1_degree_zero_basis(K);
        CHECK(basis.size() == c.t1);
        CHECK(oracle::t1_degree_zero(oracle::read_facets(fixture(c.file))) == c.t1);
    }
}

TEST_CASE("degree and Hilbert numerator at one")
{
    for (const auto& c : cases) {
        auto K = load_triangulation_file(fixture(c.file));
        CHECK(degree(K) == c.degree);
        CHECK(evaluate_at_one(hilbert_numerator(K)) == c.degree);
    }
}

TEST_CASE("minimal nonfaces are exactly the minimal non-faces by brute force")
{
    for (const auto& c : cases) {
        auto K = load_triangulation_file(fixture(c.file));
        auto gens = minimal_nonfaces(K).generators;
        for (Face g : gens) {
            CHECK_FALSE(K.contains(g));
            for (int v : face_vertices(g)) CHECK(K.contains(g & ~(Face{1} << v)));
        }
        Face V = K.vertex_set();
        std::size_t n = 0;
        for (Face s = V; s; s = (s - 1) & V) {
            if (K.contains(s)) continue;
            bool minimal = true;
            for (int v : face_vertices(s)) minimal = minimal && K.contains(s & ~(Face{1} << v));
            if (minimal) ++n;
        }
        CHECK(n == gens.size());
    }
}

TEST_CASE("admissible b counts for each link type")
{
    CHECK(count_admissible(two_points()) == 1);
    CHECK(count_admissible(polygon(3)) == 4);
    CHECK(count_admissible(polygon(4)) == 2);
    CHECK(count_admissible(polygon(5)) == 0);
    CHECK(count_admissible(polygon(7)) == 0);
    CHECK(count_admissible(boundary(make_face({0, 1, 2, 3}))) == 11);
    CHECK(count_admissible(join(two_points(), relabel(polygon(3), {2, 3, 4}))) == 5);
    CHECK(count_admissible(join(two_points(), relabel(polygon(4), {2, 3, 4, 5}))) == 3);
    CHECK(count_admissible(join(two_points(), relabel(polygon(5), {2, 3, 4, 5, 6}))) == 1);
    CHECK(count_admissible(cyclic_polytope_boundary(6)) == 1);
    CHECK(classify_link(polygon(5)).kind == LinkKind::Ngon);
    CHECK(classify_link(cyclic_polytope_boundary(7)).kind == LinkKind::CyclicPolytope);
}

TEST_CASE("every link in the examples matches its tabulated contribution")
{
    for (const auto& c : cases) {
        auto cc = t1_link_table_crosscheck(load_triangulation_file(fixture(c.file)));
        CHECK(cc.mismatches.empty());
    }
}

TEST_CASE("relabeling preserves T1 size, link types and automorphism order")
{
    std::mt19937 rng(7);
    for (const auto& c : cases) {
        auto K = load_triangulation_file(fixture(c.file));
        auto G = automorphism_group(K);
        for (int rep = 0; rep < 3; ++rep) {
            auto map = random_relabel(K, rng);
            auto K2 = relabel(K, map);
            CHECK(isomorphic(K, K2));
            CHECK(t1_degree_zero_basis(K2).size() == c.t1);
            CHECK(automorphism_group(K2).order() == G.order());
            for (int v : K.vertices())
                CHECK(classify_link(link(K, make_face({v}))) ==
                      classify_link(link(K2, make_face({map[static_cast<std::size_t>(v)]}))));
        }
    }
}

TEST_CASE("automorphism orders and orbit partitions")
{
    auto order = [](const char* f) { return automorphism_group(load_triangulation_file(fixture(f))).order(); };
    CHECK(order("triangulations/boundary_delta4.txt") == 120);
    CHECK(order("triangulations/p2.txt") == 8);
    CHECK(order("triangulations/p3.txt") == 48);
    CHECK(order("triangulations/p4.txt") == 8);
    CHECK(order("triangulations/p5.txt") == 14);

    // exhaustive check of the P1 value
    auto K = load_triangulation_file(fixture("triangulations/p1.txt"));
    auto v = K.vertices();
    std::vector<int> p = v;
    std::size_t n = 0;
    do {
        std::vector<int> map(32, -1);
        for (std::size_t i = 0; i < v.size(); ++i) map[static_cast<std::size_t>(v[i])] = p[i];
        if (relabel(K, map).facets() == K.facets()) ++n;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(automorphism_group(K).order() == n);

    auto K5 = load_triangulation_file(fixture("triangulations/p5.txt"));
    auto G5 = automorphism_group(K5);
    auto B5 = t1_degree_zero_basis(K5);
    auto O5 = orbits_on_t1(G5, B5);
    auto s = O5.sizes();
    std::sort(s.begin(), s.end());
    CHECK(s == std::vector<std::size_t>{7, 7, 14, 14, 14});
    // orbits are closed under the group
    for (const auto& g : G5.elements)
        for (std::size_t i = 0; i < B5.size(); ++i) {
            auto img = act(G5, g, B5[i]);
            auto it = std::find(B5.begin(), B5.end(), img);
            REQUIRE(it != B5.end());
            CHECK(O5.block_of(static_cast<std::size_t>(it - B5.begin())) == O5.block_of(i));
        }
}

TEST_CASE("loader rejects malformed triangulations")
{
    std::istringstream bad("1 2 x\n");
    CHECK_THROWS(load_triangulation(bad));
    CHECK_THROWS(load_triangulation_file(fixture("no/such/file.txt")));
}
