#include "srcy/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace srcy {

int face_size(Face f) { return std::popcount(f); }

std::vector<int> face_vertices(Face f)
{
    std::vector<int> v;
    for (int i = 0; i <= kMaxLabel; ++i)
        if (f >> i & 1u) v.push_back(i);
    return v;
}

Face make_face(const std::vector<int>& labels)
{
    Face f = 0;
    for (int v : labels) {
        if (v < 0 || v > kMaxLabel) throw std::invalid_argument("vertex label out of range: " + std::to_string(v));
        f |= Face{1} << v;
    }
    return f;
}

std::string face_string(Face f)
{
    std::string s = "{";
    bool first = true;
    for (int v : face_vertices(f)) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<Face>& faces)
{
    std::vector<Face> sorted = faces;
    // larger faces first so a single pass keeps only maximal ones
    std::sort(sorted.begin(), sorted.end(), [](Face a, Face b) {
        if (face_size(a) != face_size(b)) return face_size(a) > face_size(b);
        return a < b;
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    SimplicialComplex K;
    for (Face f : sorted) {
        bool covered = false;
        for (Face g : K.facets_)
            if ((f & g) == f) {
                covered = true;
                break;
            }
        if (!covered) K.facets_.push_back(f);
    }
    std::sort(K.facets_.begin(), K.facets_.end());
    for (Face f : K.facets_) K.vertices_ |= f;
    return K;
}

bool SimplicialComplex::contains(Face f) const
{
    return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return (f & g) == f; });
}

int SimplicialComplex::dimension() const
{
    int d = -2;
    for (Face f : facets_) d = std::max(d, face_size(f) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const
{
    if (facets_.empty()) return true;
    int s = face_size(facets_.front());
    return std::all_of(facets_.begin(), facets_.end(), [s](Face f) { return face_size(f) == s; });
}

std::vector<Face> SimplicialComplex::faces() const
{
    std::set<Face> all;
    for (Face f : facets_) {
        // enumerate submasks of f
        for (Face s = f;; s = (s - 1) & f) {
            all.insert(s);
            if (s == 0) break;
        }
    }
    std::vector<Face> out(all.begin(), all.end());
    std::stable_sort(out.begin(), out.end(), [](Face a, Face b) { return face_size(a) < face_size(b); });
    return out;
}

std::vector<Face> SimplicialComplex::faces_of_size(int k) const
{
    std::vector<Face> out;
    for (Face f : faces())
        if (face_size(f) == k) out.push_back(f);
    return out;
}

long long FVector::alternating_sum() const
{
    long long s = 0;
    for (std::size_t i = 1; i < counts.size(); ++i) s += (i % 2 == 1 ? 1 : -1) * counts[i];
    return s;
}

SimplicialComplex load_triangulation(std::istream& in)
{
    std::vector<Face> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<int> vs;
        std::string tok;
        while (ls >> tok) {
            std::size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != tok.size() || v < 0)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad vertex '" + tok + "'");
            vs.push_back(v);
        }
        Face f = make_face(vs);
        if (face_size(f) != static_cast<int>(vs.size()))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": repeated vertex");
        for (Face g : facets) {
            if (g == f) throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate facet " + face_string(f));
            if ((g & f) == f || (g & f) == g)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": facet " + face_string(f) +
                                            " comparable with " + face_string(g));
        }
        facets.push_back(f);
    }
    if (facets.empty()) throw std::invalid_argument("empty triangulation");
    return SimplicialComplex::from_faces(facets);
}

SimplicialComplex load_triangulation_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_triangulation(in);
}

SimplicialComplex link(const SimplicialComplex& K, Face f)
{
    if (!K.contains(f)) throw std::invalid_argument("link: " + face_string(f) + " is not a face");
    std::vector<Face> out;
    for (Face g : K.facets())
        if ((g & f) == f) out.push_back(g & ~f);
    return SimplicialComplex::from_faces(out);
}

SimplicialComplex join(const SimplicialComplex& X, const SimplicialComplex& Y)
{
    if (X.vertex_set() & Y.vertex_set()) throw std::invalid_argument("join: vertex sets overlap");
    std::vector<Face> out;
    for (Face a : X.facets())
        for (Face b : Y.facets()) out.push_back(a | b);
    return SimplicialComplex::from_faces(out);
}

SimplicialComplex boundary(Face f)
{
    if (f == 0) return SimplicialComplex{};
    std::vector<Face> out;
    for (int v : face_vertices(f)) out.push_back(f & ~(Face{1} << v));
    return SimplicialComplex::from_faces(out);
}

SimplicialComplex closure(Face f) { return SimplicialComplex::from_faces({f}); }

SimplicialComplex full_subcomplex(const SimplicialComplex& K, Face w)
{
    if (K.is_void()) return K;
    std::vector<Face> out;
    for (Face g : K.facets()) out.push_back(g & w);
    return SimplicialComplex::from_faces(out);
}

SimplicialComplex union_of(const SimplicialComplex& X, const SimplicialComplex& Y)
{
    std::vector<Face> out = X.facets();
    out.insert(out.end(), Y.facets().begin(), Y.facets().end());
    return SimplicialComplex::from_faces(out);
}

SimplicialComplex relabel(const SimplicialComplex& K, const std::vector<int>& map)
{
    std::vector<Face> out;
    for (Face g : K.facets()) {
        Face h = 0;
        for (int v : face_vertices(g)) h |= Face{1} << map.at(v);
        out.push_back(h);
    }
    return SimplicialComplex::from_faces(out);
}

FVector f_vector(const SimplicialComplex& K)
{
    FVector fv;
    if (K.is_void()) return fv;
    fv.counts.assign(K.dimension() + 2, 0);
    for (Face f : K.faces()) ++fv.counts[face_size(f)];
    return fv;
}

long long euler_characteristic(const SimplicialComplex& K) { return f_vector(K).alternating_sum(); }

bool is_connected(const SimplicialComplex& K)
{
    std::vector<int> vs = K.vertices();
    if (vs.empty()) return true;
    Face seen = Face{1} << vs.front();
    bool grew = true;
    while (grew) {
        grew = false;
        for (Face g : K.facets())
            if ((g & seen) && (g & ~seen)) {
                seen |= g;
                grew = true;
            }
    }
    return seen == K.vertex_set();
}

namespace {

// number of facets containing each face of size k
std::map<Face, int> ridge_counts(const SimplicialComplex& K, int k)
{
    std::map<Face, int> cnt;
    for (Face f : K.faces_of_size(k)) cnt[f] = 0;
    for (Face g : K.facets())
        for (auto& [f, c] : cnt)
            if ((g & f) == f) ++c;
    return cnt;
}

} // namespace

bool is_sphere(const SimplicialComplex& K, int dim)
{
    if (K.is_void() || !K.is_pure() || K.dimension() != dim) return false;
    switch (dim) {
    case -1:
        return true;
    case 0:
        return K.vertex_count() == 2;
    case 1: {
        if (K.vertex_count() < 3 || !is_connected(K)) return false;
        for (auto& [v, c] : ridge_counts(K, 1))
            if (c != 2) return false;
        return true;
    }
    case 2: {
        if (!is_connected(K) || euler_characteristic(K) != 2) return false;
        for (auto& [e, c] : ridge_counts(K, 2))
            if (c != 2) return false;
        for (Face v : K.faces_of_size(1))
            if (!is_sphere(link(K, v), 1)) return false;
        return true;
    }
    default:
        return false;
    }
}

bool is_ball(const SimplicialComplex& K, int dim)
{
    if (K.is_void() || !K.is_pure() || K.dimension() != dim) return false;
    switch (dim) {
    case 0:
        return K.vertex_count() == 1;
    case 1: {
        if (!is_connected(K)) return false;
        int ends = 0;
        for (auto& [v, c] : ridge_counts(K, 1)) {
            if (c > 2) return false;
            if (c == 1) ++ends;
        }
        return ends == 2;
    }
    case 2: {
        if (!is_connected(K) || euler_characteristic(K) != 1) return false;
        bool has_boundary = false;
        for (auto& [e, c] : ridge_counts(K, 2)) {
            if (c < 1 || c > 2) return false;
            if (c == 1) has_boundary = true;
        }
        if (!has_boundary) return false;
        for (Face v : K.faces_of_size(1)) {
            SimplicialComplex L = link(K, v);
            if (!is_sphere(L, 1) && !is_ball(L, 1)) return false;
        }
        return true;
    }
    default:
        return false;
    }
}

SimplicialComplex pseudomanifold_boundary(const SimplicialComplex& K)
{
    if (K.is_void()) return K;
    int d = K.dimension();
    std::vector<Face> out;
    for (auto& [r, c] : ridge_counts(K, d))
        if (c == 1) out.push_back(r);
    return SimplicialComplex::from_faces(out);
}

std::optional<std::vector<int>> find_isomorphism(const SimplicialComplex& X, const SimplicialComplex& Y)
{
    if (X.facets().size() != Y.facets().size() || X.vertex_count() != Y.vertex_count()) return std::nullopt;
    if (f_vector(X).counts != f_vector(Y).counts) return std::nullopt;
    std::vector<int> xs = X.vertices(), ys = Y.vertices();
    auto degree = [](const SimplicialComplex& K, int v) {
        int d = 0;
        for (Face g : K.facets())
            if (g >> v & 1u) ++d;
        return d;
    };
    std::set<Face> yfacets(Y.facets().begin(), Y.facets().end());
    std::vector<int> map(kMaxLabel + 1, -1);
    Face used = 0, assigned = 0;

    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
        if (i == xs.size()) return true;
        int x = xs[i];
        for (int y : ys) {
            if (used >> y & 1u || degree(X, x) != degree(Y, y)) continue;
            map[x] = y;
            used |= Face{1} << y;
            assigned |= Face{1} << x;
            bool ok = true;
            // facets that just became fully assigned must land on facets
            for (Face g : X.facets()) {
                if (!(g >> x & 1u) || (g & assigned) != g) continue;
                Face h = 0;
                for (int v : face_vertices(g)) h |= Face{1} << map[v];
                if (!yfacets.count(h)) {
                    ok = false;
                    break;
                }
            }
            if (ok && extend(i + 1)) return true;
            map[x] = -1;
            used &= ~(Face{1} << y);
            assigned &= ~(Face{1} << x);
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return map;
}

bool isomorphic(const SimplicialComplex& X, const SimplicialComplex& Y) { return find_isomorphism(X, Y).has_value(); }

std::string LinkType::name() const
{
    switch (kind) {
    case LinkKind::TwoPoints: return "two points";
    case LinkKind::Ngon:
        if (n == 3) return "triangle";
        if (n == 4) return "quadrangle";
        return std::to_string(n) + "-gon";
    case LinkKind::BoundaryTetrahedron: return "tetrahedron";
    case LinkKind::SuspTriangle: return "suspension of triangle";
    case LinkKind::SuspQuadrangle: return "octahedron";
    case LinkKind::SuspNgon: return "suspension of " + std::to_string(n) + "-gon";
    case LinkKind::CyclicPolytope: return "cyclic polytope C(" + std::to_string(n) + ",3)";
    case LinkKind::Other: return "other";
    }
    return "other";
}

SimplicialComplex cyclic_polytope_boundary(int n)
{
    if (n < 4) throw std::invalid_argument("cyclic polytope needs n >= 4");
    std::vector<Face> fs;
    for (int i = 0; i + 3 < n; ++i) {
        fs.push_back(make_face({i, i + 1, n - 2}));
        fs.push_back(make_face({i, i + 1, n - 1}));
    }
    fs.push_back(make_face({0, n - 2, n - 1}));
    fs.push_back(make_face({n - 3, n - 2, n - 1}));
    return SimplicialComplex::from_faces(fs);
}

LinkType classify_link(const SimplicialComplex& L)
{
    const int nv = L.vertex_count();
    if (L.dimension() == 0 && L.is_pure() && nv == 2) return {LinkKind::TwoPoints, 2};
    if (is_sphere(L, 1)) return {LinkKind::Ngon, nv};
    if (!is_sphere(L, 2)) return {LinkKind::Other, 0};
    if (nv == 4) return {LinkKind::BoundaryTetrahedron, 4};

    std::vector<int> vs = L.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            Face p = Face{1} << vs[i], q = Face{1} << vs[j];
            if (L.contains(p | q)) continue;
            SimplicialComplex rest = full_subcomplex(L, L.vertex_set() & ~(p | q));
            if (!is_sphere(rest, 1)) continue;
            if (join(rest, SimplicialComplex::from_faces({p, q})) != L) continue;
            int m = rest.vertex_count();
            if (m == 3) return {LinkKind::SuspTriangle, 3};
            if (m == 4) return {LinkKind::SuspQuadrangle, 4};
            return {LinkKind::SuspNgon, m};
        }
    if (nv >= 6 && isomorphic(L, cyclic_polytope_boundary(nv))) return {LinkKind::CyclicPolytope, nv};
    return {LinkKind::Other, 0};
}

SphereCheck is_combinatorial_3sphere_candidate(const SimplicialComplex& K)
{
    if (!K.is_pure()) throw std::invalid_argument("complex is not pure");
    SphereCheck r;
    auto fail = [&r](std::string msg) {
        r.ok = false;
        r.failures.push_back(std::move(msg));
    };
    if (K.dimension() != 3) {
        fail("dimension is " + std::to_string(K.dimension()) + ", expected 3");
        return r;
    }
    for (auto& [t, c] : ridge_counts(K, 3))
        if (c != 2) fail("triangle " + face_string(t) + " lies in " + std::to_string(c) + " facets");
    if (long long chi = euler_characteristic(K); chi != 0) fail("Euler characteristic " + std::to_string(chi));
    for (Face v : K.faces_of_size(1))
        if (!is_sphere(link(K, v), 2)) fail("link of " + face_string(v) + " is not a 2-sphere");
    return r;
}

} // namespace srcy
