#pragma once

#include "srcy/intmat.hpp"
#include "srcy/polynomial.hpp"
#include "srcy/simplicial.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace srcy {

// Working basis v_1..v_r expressed in ambient coordinates: column j of A is v_j.
struct AmbientLattice {
    RatMatrix A;
    std::size_t rank() const { return A.size(); }
    RatVector ambient(const IntVector& v) const; // A * v
};

struct Fan {
    AmbientLattice lattice;
    std::vector<IntVector> rays;                 // working-basis coordinates
    std::vector<std::vector<std::size_t>> cones; // ray indices, in listed order
    std::vector<std::size_t> sigma;              // rays spanning the subdivided cone

    std::size_t ray_index(const IntVector& r) const; // throws if absent
    std::vector<IntVector> cone_rays(std::size_t cone) const;
    bool cone_contains(std::size_t cone, std::size_t ray) const;
};

// Blocks `lattice`, `sigma` (ray indices), `rays`, `cones` (1-based ray indices).
Fan load_fan(std::istream& in);
Fan load_fan_file(const std::string& path);

struct FPolyData {
    std::vector<IntVector> f;         // monomials of the local equation, M-coordinates
    std::vector<IntVector> invariant; // monomials of the invariant polynomial
    IntVector one;                    // the all-ones pairing vector
};

FPolyData load_fpoly(std::istream& in);
FPolyData load_fpoly_file(const std::string& path);

IntVector parse_int_vector(const std::string& text); // "6,-2,-1,-2"
std::string vector_string(const IntVector& v);      // "(6,-2,-1,-2)"

struct SubdivisionReport {
    bool ok = true;
    std::size_t ray_count = 0, cone_count = 0;
    std::size_t nonunimodular = 0, bad_intersections = 0, bad_facets = 0;
    std::vector<std::string> failures;
};

// unimodular simplicial cones, pairwise intersections are common faces,
// interior facets shared by two cones on opposite sides, boundary facets on the boundary of sigma
SubdivisionReport verify_smooth_subdivision(const Fan& fan);

struct CrepancyRow {
    IntVector ray;
    Rational alpha_one, alpha_f;
    bool holds = false;
};

std::vector<CrepancyRow> crepancy_check(const Fan& fan, const std::vector<IntVector>& f_monomials, const IntVector& one);

// chart coordinates y1..y4 follow the cone's ray listing
std::vector<std::string> chart_variables(std::size_t r);

Polynomial strict_transform(const Fan& fan, std::size_t cone, const std::vector<IntVector>& invariant_monomials);

// restriction of the strict transform to y_rho = 0 in the given chart
Polynomial chart_restriction(const Fan& fan, std::size_t cone, std::size_t ray, const std::vector<IntVector>& invariant);

bool divisor_meets_strict_transform(const Fan& fan, std::size_t ray, const std::vector<IntVector>& invariant);

struct Fan2D {
    std::vector<IntVector> rays; // primitive, sorted counterclockwise starting from angle -pi
    bool complete = false;
    bool smooth = false;
};

Fan2D make_fan2d(std::vector<IntVector> rays);

struct SurfaceType {
    std::string tag;                     // P2, F<k>, Bl<m>P2, Bl<m>F<k>
    std::set<std::string> presentations; // every tag reachable by blow-downs
    std::vector<int> self_intersections;
    std::size_t euler = 0;
};

SurfaceType classify_toric_surface(const Fan2D& fan);

// cones containing `ray`, with generators other than `ray` written in the
// basis of the chart `chart` and the ray's own coordinate dropped
std::vector<std::vector<IntVector>> star_in_chart(const Fan& fan, std::size_t ray, std::size_t chart);

struct Method1Result {
    std::size_t chart = 0;
    Polynomial restriction;
    IntVector exponent;  // of the non-constant term, on the other chart coordinates
    IntMatrix kernel;    // rows, Hermite normal form
    Fan2D fan;
};

// chart = nullopt picks the first cone containing the ray whose restriction is a binomial with constant term
Method1Result method1_component(const Fan& fan, std::size_t ray, const std::vector<IntVector>& invariant,
                                std::optional<std::size_t> chart = std::nullopt);

struct ProjectionResult {
    std::size_t chart = 0;
    RatMatrix projection; // rows of M^{-1} kept
    std::size_t cone_count = 0;
    std::vector<IntVector> rays;
    std::vector<std::set<IntVector>> cones; // projected generators of each cone
};

// fan of the orbit closure of cone(r1, r2), projected to N(r1, r2)
ProjectionResult orbit_closure_component(const Fan& fan, std::size_t r1, std::size_t r2,
                                         std::optional<std::size_t> chart = std::nullopt);

// Star(ray) as a 3-dimensional fan in N(ray)
ProjectionResult star_fan(const Fan& fan, std::size_t ray, std::optional<std::size_t> chart = std::nullopt);

struct PBundle {
    IntVector fiber;    // e with +-e both rays of Star(ray)
    Fan2D base;
    std::vector<std::pair<std::size_t, std::string>> restrictions; // chart, restricted polynomial
};

std::optional<PBundle> pbundle_structure(const Fan& fan, std::size_t ray, const std::vector<IntVector>& invariant,
                                         std::optional<std::size_t> chart = std::nullopt);

struct PolytopeNormalFan {
    std::vector<IntVector> normals; // primitive inner facet normals, sorted
    std::size_t lattice_points = 0;
};

PolytopeNormalFan polytope_normal_fan(const std::vector<IntVector>& vertices);

struct ComponentRecord {
    std::string label;
    IntVector ray;
    std::string type;
    long long chi = 0;
    enum class Locus { Generic, Factor, Orbit } locus = Locus::Generic;
    int factor = 0, factors = 0; // for Factor
    IntVector partner;           // for Orbit
    std::optional<std::size_t> chart; // 0-based cone index
};

std::vector<ComponentRecord> load_components(std::istream& in);
std::vector<ComponentRecord> load_components_file(const std::string& path);

struct IntersectionComplex {
    SimplicialComplex complex; // vertices are 1-based component positions
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> triangles;
    std::vector<std::vector<int>> undetermined; // sets skipped in every chart for lack of a decision
};

IntersectionComplex intersection_complex(const Fan& fan, const std::vector<ComponentRecord>& comps,
                                         const std::vector<IntVector>& invariant);

long long euler_exceptional(const std::vector<ComponentRecord>& comps, const IntersectionComplex& ic);

struct MirrorEulerInput {
    long long chi_smooth, n_sing, milnor, group_order, n_fixed, chi_E, n_E_points, mckay, n_mckay_points;
};

long long open_part_euler(const MirrorEulerInput& in); // chi(U)
long long mirror_euler(const MirrorEulerInput& in);

} // namespace srcy
