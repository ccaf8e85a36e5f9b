#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace srcy {

// A face is a bitmask over vertex labels: bit v set <=> label v in the face.
// Labels are small nonnegative integers (< 32), kept as given in the files.
using Face = std::uint32_t;

constexpr int kMaxLabel = 31;

int face_size(Face f);
std::vector<int> face_vertices(Face f);
Face make_face(const std::vector<int>& labels);
std::string face_string(Face f); // "{1,2,5}"

class SimplicialComplex {
public:
    // the void complex (no faces at all)
    SimplicialComplex() = default;

    // non-maximal entries are dropped
    static SimplicialComplex from_faces(const std::vector<Face>& faces);
    static SimplicialComplex empty_face_only() { return from_faces({Face{0}}); }

    const std::vector<Face>& facets() const { return facets_; }
    Face vertex_set() const { return vertices_; }
    std::vector<int> vertices() const { return face_vertices(vertices_); }
    int vertex_count() const { return face_size(vertices_); }
    bool is_void() const { return facets_.empty(); }

    bool contains(Face f) const;
    int dimension() const; // -1 for {emptyset}, -2 for void
    bool is_pure() const;

    // every face, ordered by size then mask
    std::vector<Face> faces() const;
    std::vector<Face> faces_of_size(int k) const;

    bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

private:
    std::vector<Face> facets_; // sorted, pairwise incomparable
    Face vertices_ = 0;
};

struct FVector {
    std::vector<long long> counts; // counts[0] = f_{-1}
    long long alternating_sum() const; // f_0 - f_1 + f_2 - ...
};

// Parses one facet per line; '#' starts a comment line.
SimplicialComplex load_triangulation(std::istream& in);
SimplicialComplex load_triangulation_file(const std::string& path);

SimplicialComplex link(const SimplicialComplex& K, Face f);
SimplicialComplex join(const SimplicialComplex& X, const SimplicialComplex& Y);
SimplicialComplex boundary(Face f);
SimplicialComplex closure(Face f);
SimplicialComplex full_subcomplex(const SimplicialComplex& K, Face w);
SimplicialComplex union_of(const SimplicialComplex& X, const SimplicialComplex& Y);
SimplicialComplex relabel(const SimplicialComplex& K, const std::vector<int>& map); // map[old] = new

FVector f_vector(const SimplicialComplex& K);
long long euler_characteristic(const SimplicialComplex& K);
bool is_connected(const SimplicialComplex& K);

// Sphere / ball recognition for dimension <= 2 (and -1 for spheres).
bool is_sphere(const SimplicialComplex& K, int dim);
bool is_ball(const SimplicialComplex& K, int dim);
// Boundary of a pseudomanifold: closure of codimension-one faces lying in one facet.
SimplicialComplex pseudomanifold_boundary(const SimplicialComplex& K);

// Vertex bijection sending X onto Y, as map[label of X] = label of Y.
std::optional<std::vector<int>> find_isomorphism(const SimplicialComplex& X, const SimplicialComplex& Y);
bool isomorphic(const SimplicialComplex& X, const SimplicialComplex& Y);

enum class LinkKind {
    TwoPoints,
    Ngon,
    BoundaryTetrahedron,
    SuspTriangle,
    SuspQuadrangle,
    SuspNgon,
    CyclicPolytope,
    Other
};

struct LinkType {
    LinkKind kind = LinkKind::Other;
    int n = 0; // polygon size for Ngon / SuspNgon, vertex count for CyclicPolytope
    std::string name() const;
    bool operator==(const LinkType& o) const { return kind == o.kind && n == o.n; }
};

// boundary of the cyclic polytope C(n,3) on labels 0..n-1
SimplicialComplex cyclic_polytope_boundary(int n);

LinkType classify_link(const SimplicialComplex& L);

struct SphereCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

SphereCheck is_combinatorial_3sphere_candidate(const SimplicialComplex& K);

} // namespace srcy
