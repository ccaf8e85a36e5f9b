#pragma once

#include "srcy/polynomial.hpp"
#include "srcy/simplicial.hpp"
#include "srcy/sr_ideal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace srcy {

struct T1BasisElement {
    Face a = 0;                // support of the a-vector
    std::vector<int> a_vector; // positive exponents, aligned with face_vertices(a)
    Face b = 0;
    bool operator==(const T1BasisElement& o) const { return a == o.a && a_vector == o.a_vector && b == o.b; }
};

// canonical order: support, then b, then a-vector (vertex lists compared lexicographically)
bool t1_less(const T1BasisElement& x, const T1BasisElement& y);

bool admissible_b(const SimplicialComplex& L, Face b);

// compositions of |b| into |a| positive parts
Integer degree_zero_multiplicity(int a_size, int b_size);

// all compositions of n into k positive parts, lexicographic
std::vector<std::vector<int>> compositions(int n, int k);

std::vector<T1BasisElement> t1_degree_zero_basis(const SimplicialComplex& K);

// dim T^1_{<0} of each link type, keyed by LinkType; nullopt for Other
std::optional<int> table_link_contribution(const LinkType& t);

struct LinkCrosscheckRow {
    Face a = 0;
    LinkType type;
    int admissible = 0;
    int expected = 0;
};

struct LinkCrosscheck {
    bool ok = true;
    std::vector<LinkCrosscheckRow> rows;     // every nonempty face
    std::vector<LinkCrosscheckRow> mismatches;
};

LinkCrosscheck t1_link_table_crosscheck(const SimplicialComplex& K);

// variable name used for a vertex label in generated polynomials
std::string vertex_variable(int label);
std::vector<std::string> vertex_variables(const SimplicialComplex& K);

// x_p * x^a / x^b if b is contained in p; exponents over vertex_variables(K)
std::optional<Exponent> perturbation(const SimplicialComplex& K, const T1BasisElement& e, Face p);

struct FirstOrderFamily {
    std::vector<std::string> vars; // vertex variables, then t1..tk
    std::vector<Face> base;        // the Stanley-Reisner generators
    std::vector<Polynomial> generators;
    int parameters = 0;
};

FirstOrderFamily first_order_family(const SimplicialComplex& K);

// Linear-algebra comparison of the tangent directions of a one-parameter-
// per-coordinate family with the combinatorial T^1 basis, modulo the
// trivial deformations x_j d/dx_k.
struct TangentSpanReport {
    std::size_t t1_dimension = 0;       // rank of basis directions mod derivations
    std::size_t family_dimension = 0;   // rank of family directions mod derivations
    std::size_t derivation_rank = 0;
    bool family_within_t1 = false;      // family directions lie in span(T^1 basis, derivations)
    std::vector<std::string> parameters;
};

// `family` lists polynomials over x-variables and parameters; at parameters = 0
// each must equal +-(a Stanley-Reisner generator of K).
TangentSpanReport tangent_span(const SimplicialComplex& K, const std::vector<Polynomial>& family,
                               const std::vector<bool>& is_parameter);

} // namespace srcy
