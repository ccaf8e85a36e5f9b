#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "oracle.hpp"

#include "srcy/deformation.hpp"
#include "srcy/intmat.hpp"
#include "srcy/pfaffian.hpp"
#include "srcy/singularity.hpp"
#include "srcy/torus.hpp"

#include <algorithm>
#include <random>

using namespace srcy;

namespace {

std::vector<std::vector<long long>> random_skew(std::size_t d, std::mt19937& rng)
{
    std::uniform_int_distribution<int> e(-4, 4);
    std::vector<std::vector<long long>> A(d, std::vector<long long>(d, 0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            A[i][j] = e(rng);
            A[j][i] = -A[i][j];
        }
    return A;
}

SkewPolyMatrix to_poly(const std::vector<std::vector<long long>>& A)
{
    std::vector<std::string> none;
    SkewPolyMatrix M(none, A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = i + 1; j < A.size(); ++j) M.set(i, j, Polynomial::constant(none, A[i][j]));
    return M;
}

IntMatrix random_unimodular(std::size_t n, std::mt19937& rng)
{
    std::uniform_int_distribution<int> e(-2, 2);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    IntMatrix U = identity_matrix(n);
    for (int k = 0; k < 12; ++k) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        Integer c = e(rng);
        for (std::size_t col = 0; col < n; ++col) U[i][col] += c * U[j][col];
    }
    return U;
}

} // namespace

TEST_CASE("Pf^2 equals the cofactor determinant on random skew matrices")
{
    std::mt19937 rng(11);
    int n = 0;
    for (std::size_t d : {2, 4, 6, 8})
        for (int k = 0; k < 30; ++k, ++n) {
            auto A = random_skew(d, rng);
            Rational pf = pfaffian(to_poly(A)).constant_term();
            CHECK(pf * pf == Rational(oracle::cofactor_det(A)));
        }
    CHECK(n >= 100);
    // odd size
    std::mt19937 r2(3);
    CHECK(pfaffian(to_poly(random_skew(5, r2))).is_zero());
}

TEST_CASE("scaling row and column k scales the Pfaffian")
{
    std::mt19937 rng(5);
    std::vector<std::string> none;
    for (int k = 0; k < 20; ++k) {
        auto A = random_skew(6, rng);
        auto M = to_poly(A);
        Rational pf = pfaffian(M).constant_term();
        for (std::size_t i = 0; i < 6; ++i) {
            auto S = M.scaled(i, Polynomial::constant(none, 3));
            CHECK(pfaffian(S).constant_term() == 3 * pf);
        }
    }
}

TEST_CASE("principal Pfaffians annihilate the matrix")
{
    std::vector<std::string> v{"a", "b", "c", "d", "e"};
    SkewPolyMatrix M(v, 5);
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> e(-3, 3);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            Polynomial p = Polynomial::constant(v, e(rng));
            for (const auto& x : v) p += Polynomial::variable(v, x) * Rational(e(rng));
            M.set(i, j, p);
        }
    for (const auto& r : matrix_times(M, principal_pfaffians(M))) CHECK(r.is_zero());
}

TEST_CASE("fixture syzygy matrices")
{
    for (int i = 1; i <= 5; ++i) {
        std::string b = "matrices/p" + std::to_string(i);
        auto M0 = load_matrix_file(fixture(b + "_base.mat"));
        auto f0 = load_vector_file(fixture(b + "_base.vec"));
        std::vector<Polynomial> g;
        for (const auto& p : f0) g.push_back(p.over(M0.vars()));
        for (const auto& r : matrix_times(M0, g)) CHECK(r.is_zero());
        CHECK(equal_up_to_sign(principal_pfaffians(M0), g) != 0);
    }
    auto M = load_matrix_file(fixture("matrices/p2_first_order.mat"));
    CHECK(verify_first_order(M, principal_pfaffians(M, 2)));
}

TEST_CASE("a corrupted first-order entry is detected")
{
    auto M = load_matrix_file(fixture("matrices/p2_first_order.mat"));
    auto f = principal_pfaffians(M, 2);
    auto vars = M.vars();
    auto bad = M;
    bad.set(0, 1, M.at(0, 1) + Polynomial::variable(vars, "t1") * Polynomial::variable(vars, "x1"));
    CHECK_FALSE(verify_first_order(bad, f));
}

TEST_CASE("printed Pfaffian generators")
{
    auto Mr = load_matrix_file(fixture("matrices/roedland.mat"));
    std::vector<Polynomial> r;
    for (const auto& p : load_vector_file(fixture("generators/roedland.vec"))) r.push_back(p.over(Mr.vars()));
    CHECK(equal_up_to_sign(principal_pfaffians(Mr), r) == 1);
    auto Mb = load_matrix_file(fixture("matrices/boehm.mat"));
    std::vector<Polynomial> b;
    for (const auto& p : load_vector_file(fixture("generators/boehm.vec"))) b.push_back(p.over(Mb.vars()));
    CHECK(equal_up_to_sign(principal_pfaffians(Mb), b) == -1);
}

TEST_CASE("Smith form diagonal does not depend on the basis")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> e(-6, 6);
    for (int k = 0; k < 40; ++k) {
        std::size_t r = 3 + static_cast<std::size_t>(k % 3), c = 4;
        IntMatrix A(r, IntVector(c));
        for (auto& row : A)
            for (auto& x : row) x = e(rng);
        auto S = smith_normal_form(A);
        CHECK(multiply(multiply(S.U, A), S.V) == S.S);
        auto B = multiply(multiply(random_unimodular(r, rng), A), random_unimodular(c, rng));
        CHECK(smith_normal_form(B).diagonal == S.diagonal);
        for (std::size_t i = 0; i + 1 < S.diagonal.size(); ++i)
            if (S.diagonal[i + 1] != 0) CHECK(S.diagonal[i + 1] % S.diagonal[i] == 0);
    }
}

TEST_CASE("integer kernel and determinant")
{
    IntMatrix A{{1, 2, 3}, {4, 5, 6}};
    auto K = integer_kernel(A, 3);
    REQUIRE(K.size() == 1);
    CHECK(multiply(A, K[0]) == IntVector{0, 0});
    CHECK(determinant({{2, 0, 0}, {1, 3, 0}, {5, 7, 4}}) == 24);
}

TEST_CASE("diagonal torus stabilizers")
{
    auto q = diagonal_stabilizer(load_vector_file(fixture("generators/quintic.vec")));
    CHECK(q.finite);
    CHECK(q.order() == 125);
    CHECK(q.invariant_factors == std::vector<Integer>{5, 5, 5});

    auto r = load_vector_file(fixture("generators/roedland.vec"));
    auto Hr = diagonal_stabilizer(r);
    CHECK(Hr.invariant_factors == std::vector<Integer>{7});
    CHECK(verify_character(r, {0, 1, 2, 3, 4, 5, 6}, 7));
    CHECK_FALSE(verify_character(r, {0, 1, 2, 3, 4, 5, 5}, 7));

    auto b = load_vector_file(fixture("generators/boehm.vec"));
    CHECK(diagonal_stabilizer(b).invariant_factors == std::vector<Integer>{13});
    CHECK(verify_character(b, {3, 3, 11, 11, 1, 7, 0}, 13));

    // a single binomial in three variables has a positive-dimensional stabilizer
    std::vector<std::string> v{"x1", "x2", "x3"};
    CHECK_FALSE(diagonal_stabilizer({parse_polynomial("x1*x2 - x3^2", v)}).finite);
}

namespace {

// dim C[x]/(Jacobian) for sum x_i^a_i: count monomials in a box of side max(a)
// that no partial derivative x_i^(a_i - 1) divides
long long milnor_brute(const std::vector<int>& a)
{
    int side = *std::max_element(a.begin(), a.end());
    long long count = 0;
    std::vector<int> e(a.size(), 0);
    while (true) {
        bool standard = true;
        for (std::size_t i = 0; i < a.size(); ++i) standard = standard && e[i] < a[i] - 1;
        if (standard) ++count;
        std::size_t i = 0;
        while (i < e.size() && ++e[i] == side) e[i++] = 0;
        if (i == e.size()) break;
    }
    return count;
}

} // namespace

TEST_CASE("Milnor numbers of quasi-homogeneous singularities")
{
    CHECK(milnor_quasihomogeneous({Rational(1, 3), Rational(1, 3)}) == milnor_brute({3, 3}));
    CHECK(milnor_quasihomogeneous({Rational(1, 3), Rational(1, 3)}) == 4);
    CHECK(milnor_quasihomogeneous({Rational(1, 2), Rational(1, 2)}) == 1);
    CHECK(milnor_quasihomogeneous({Rational(1, 5), Rational(1, 2), Rational(1, 3)}) == milnor_brute({5, 2, 3}));
    RatVector w{Rational(2, 5), Rational(1, 3), Rational(1, 5), Rational(1, 2)};
    CHECK(milnor_quasihomogeneous(w) == 12);
    std::vector<std::string> vars{"z", "x", "y", "w"};
    CHECK(check_quasihomogeneous(parse_polynomial("w^2 + x^3 + y^5 + y*z^2", vars), w));
    CHECK_FALSE(check_quasihomogeneous(parse_polynomial("w^2 + x^3 + y^4 + y*z^2", vars), w));
    CHECK_THROWS(milnor_quasihomogeneous({Rational(1), Rational(1, 2)}));
}

TEST_CASE("Jacobian rank at singular and smooth points of the specialised family")
{
    auto gens = load_vector_file(fixture("generators/boehm.vec"));
    auto at = [](std::vector<int> c) {
        std::map<std::string, Rational> m;
        for (int i = 0; i < 7; ++i) m["x" + std::to_string(i + 1)] = c[static_cast<std::size_t>(i)];
        m["s"] = Rational(1, 2);
        return m;
    };
    auto J = evaluate_jacobian(gens, "x1", at({1, 0, 0, 0, 0, 0, 0}));
    CHECK(J.rank < 3);
    auto K = evaluate_jacobian(gens, "x1", at({1, -1, 0, 0, 0, 0, 0}));
    CHECK(K.rank == 3);
}
