#include "srcy/deformation.hpp"

#include "srcy/intmat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace srcy {

bool t1_less(const T1BasisElement& x, const T1BasisElement& y)
{
    auto xa = face_vertices(x.a), ya = face_vertices(y.a);
    if (xa != ya) return xa < ya;
    auto xb = face_vertices(x.b), yb = face_vertices(y.b);
    if (xb != yb) return xb < yb;
    return x.a_vector < y.a_vector;
}

bool admissible_b(const SimplicialComplex& L, Face b)
{
    if (face_size(b) < 2) throw std::invalid_argument("admissible_b: |b| must be at least 2");
    if ((b & L.vertex_set()) != b) throw std::invalid_argument("admissible_b: b not within the vertex set of L");

    const int dim_rest = L.dimension() - face_size(b) + 1;
    const SimplicialComplex rest = full_subcomplex(L, L.vertex_set() & ~b);

    if (!L.contains(b)) {
        if (!is_sphere(rest, dim_rest)) return false;
        return join(rest, boundary(b)) == L;
    }
    if (!is_ball(rest, dim_rest)) return false;
    SimplicialComplex glued = union_of(join(rest, boundary(b)), join(pseudomanifold_boundary(rest), closure(b)));
    return glued == L;
}

Integer degree_zero_multiplicity(int a_size, int b_size) { return binomial(b_size - 1, a_size - 1); }

std::vector<std::vector<int>> compositions(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (k <= 0 || n < k) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int parts) -> void {
        if (parts == 1) {
            cur.push_back(left);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int x = 1; x <= left - parts + 1; ++x) {
            cur.push_back(x);
            self(self, left - x, parts - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, k);
    return out;
}

namespace {

std::vector<Face> subsets_of_size_at_least(Face w, int k)
{
    std::vector<Face> out;
    for (Face s = w;; s = (s - 1) & w) {
        if (face_size(s) >= k) out.push_back(s);
        if (s == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<T1BasisElement> t1_degree_zero_basis(const SimplicialComplex& K)
{
    SphereCheck check = is_combinatorial_3sphere_candidate(K);
    if (!check.ok) throw std::invalid_argument("t1_degree_zero_basis: not a 3-sphere candidate: " + check.failures.front());

    std::vector<T1BasisElement> out;
    for (Face a : K.faces()) {
        if (a == 0) continue;
        const SimplicialComplex L = link(K, a);
        for (Face b : subsets_of_size_at_least(L.vertex_set(), 2)) {
            if (face_size(b) < face_size(a)) continue; // multiplicity zero
            if (!admissible_b(L, b)) continue;
            for (auto& av : compositions(face_size(b), face_size(a))) out.push_back({a, av, b});
        }
    }
    std::sort(out.begin(), out.end(), t1_less);
    return out;
}

std::optional<int> table_link_contribution(const LinkType& t)
{
    switch (t.kind) {
    case LinkKind::TwoPoints: return 1;
    case LinkKind::Ngon: return t.n == 3 ? 4 : t.n == 4 ? 2 : 0;
    case LinkKind::BoundaryTetrahedron: return 11;
    case LinkKind::SuspTriangle: return 5;
    case LinkKind::SuspQuadrangle: return 3;
    case LinkKind::SuspNgon: return 1;
    case LinkKind::CyclicPolytope: return 1;
    case LinkKind::Other: return std::nullopt;
    }
    return std::nullopt;
}

LinkCrosscheck t1_link_table_crosscheck(const SimplicialComplex& K)
{
    LinkCrosscheck r;
    for (Face a : K.faces()) {
        if (a == 0) continue;
        const SimplicialComplex L = link(K, a);
        if (L.dimension() < 0) continue; // facets: nothing to perturb
        LinkCrosscheckRow row;
        row.a = a;
        row.type = classify_link(L);
        auto expected = table_link_contribution(row.type);
        if (!expected) throw std::runtime_error("link of " + face_string(a) + " has no tabulated type");
        row.expected = *expected;
        for (Face b : subsets_of_size_at_least(L.vertex_set(), 2))
            if (admissible_b(L, b)) ++row.admissible;
        if (row.admissible != row.expected) {
            r.ok = false;
            r.mismatches.push_back(row);
        }
        r.rows.push_back(row);
    }
    return r;
}

std::string vertex_variable(int label) { return "x" + std::to_string(label); }

std::vector<std::string> vertex_variables(const SimplicialComplex& K)
{
    std::vector<std::string> v;
    for (int x : K.vertices()) v.push_back(vertex_variable(x));
    return v;
}

std::optional<Exponent> perturbation(const SimplicialComplex& K, const T1BasisElement& e, Face p)
{
    if ((e.b & p) != e.b) return std::nullopt;
    const std::vector<int> vs = K.vertices();
    const std::vector<int> av = face_vertices(e.a);
    Exponent ex(vs.size(), 0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Face v = Face{1} << vs[i];
        if (p & v) ex[i] += 1;
        if (e.b & v) ex[i] -= 1;
        for (std::size_t j = 0; j < av.size(); ++j)
            if (av[j] == vs[i]) ex[i] += e.a_vector[j];
    }
    return ex;
}

FirstOrderFamily first_order_family(const SimplicialComplex& K)
{
    const auto basis = t1_degree_zero_basis(K);
    FirstOrderFamily fam;
    fam.vars = vertex_variables(K);
    const std::size_t nx = fam.vars.size();
    for (std::size_t i = 0; i < basis.size(); ++i) fam.vars.push_back("t" + std::to_string(i + 1));
    fam.parameters = static_cast<int>(basis.size());
    fam.base = minimal_nonfaces(K).generators;
    const std::vector<int> vs = K.vertices();

    for (Face p : fam.base) {
        Exponent e(fam.vars.size(), 0);
        for (std::size_t i = 0; i < nx; ++i)
            if (p >> vs[i] & 1u) e[i] = 1;
        Polynomial f = Polynomial::monomial(fam.vars, e);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            auto m = perturbation(K, basis[k], p);
            if (!m) continue;
            Exponent g(fam.vars.size(), 0);
            std::copy(m->begin(), m->end(), g.begin());
            g[nx + k] = 1;
            f.add_term(g, 1);
        }
        fam.generators.push_back(std::move(f));
    }
    return fam;
}

namespace {

// Vectors in the space of generator-indexed values modulo I_0.
class QuotientSpace {
public:
    QuotientSpace(std::vector<Exponent> gens) : gens_(std::move(gens)) {}

    bool in_ideal(const Exponent& m) const
    {
        for (const auto& g : gens_) {
            bool divides = true;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (g[i] > m[i]) {
                    divides = false;
                    break;
                }
            if (divides) return true;
        }
        return false;
    }

    // values[i] is the image of generator i
    std::map<std::size_t, Rational> vector(const std::vector<std::map<Exponent, Rational>>& values)
    {
        std::map<std::size_t, Rational> v;
        for (std::size_t i = 0; i < values.size(); ++i)
            for (const auto& [m, c] : values[i]) {
                if (c == 0 || in_ideal(m)) continue;
                auto key = std::make_pair(i, m);
                auto it = index_.find(key);
                if (it == index_.end()) it = index_.emplace(key, index_.size()).first;
                v[it->second] += c;
            }
        return v;
    }

    std::size_t size() const { return index_.size(); }

private:
    std::vector<Exponent> gens_;
    std::map<std::pair<std::size_t, Exponent>, std::size_t> index_;
};

std::size_t rank_of(const std::vector<std::map<std::size_t, Rational>>& rows, std::size_t ncols)
{
    RatMatrix M;
    for (const auto& r : rows) {
        RatVector v(ncols, 0);
        for (const auto& [k, c] : r) v[k] = c;
        M.push_back(std::move(v));
    }
    return rank(M);
}

} // namespace

TangentSpanReport tangent_span(const SimplicialComplex& K, const std::vector<Polynomial>& family,
                               const std::vector<bool>& is_parameter)
{
    if (family.empty()) throw std::invalid_argument("tangent_span: empty family");
    const auto& fvars = family.front().vars();
    if (is_parameter.size() != fvars.size()) throw std::invalid_argument("tangent_span: parameter mask size");

    // x-variables of the family, in order, and their vertex labels
    std::vector<int> xidx, plist;
    for (std::size_t i = 0; i < fvars.size(); ++i) (is_parameter[i] ? plist : xidx).push_back(static_cast<int>(i));
    const std::vector<int> vs = K.vertices();
    if (xidx.size() != vs.size()) throw std::invalid_argument("tangent_span: variable count differs from vertex count");
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (fvars[xidx[i]] != vertex_variable(vs[i]))
            throw std::invalid_argument("tangent_span: expected variable " + vertex_variable(vs[i]));
    const std::size_t n = vs.size();
    auto restrict_x = [&](const Exponent& e) {
        Exponent r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = e[xidx[i]];
        return r;
    };

    // identify each family member with a Stanley-Reisner generator
    const auto sr = minimal_nonfaces(K).generators;
    std::vector<Exponent> base;
    std::vector<Rational> sign;
    for (const auto& f : family) {
        Polynomial f0 = f.set_zero(plist);
        if (f0.terms().size() != 1) throw std::invalid_argument("tangent_span: base member is not a monomial");
        const auto& [e, c] = *f0.terms().begin();
        if (c != 1 && c != -1) throw std::invalid_argument("tangent_span: base coefficient is not +-1");
        Exponent ex = restrict_x(e);
        bool known = std::any_of(sr.begin(), sr.end(), [&](Face p) {
            for (std::size_t i = 0; i < n; ++i)
                if (ex[i] != static_cast<int>(p >> vs[i] & 1u)) return false;
            return true;
        });
        if (!known) throw std::invalid_argument("tangent_span: base member is not a Stanley-Reisner generator");
        base.push_back(ex);
        sign.push_back(c);
    }

    QuotientSpace Q(base);
    using Values = std::vector<std::map<Exponent, Rational>>;
    std::vector<std::map<std::size_t, Rational>> D, T, F;

    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Values vals(base.size());
            for (std::size_t i = 0; i < base.size(); ++i) {
                if (base[i][k] == 0) continue;
                Exponent m = base[i];
                Rational c = m[k];
                --m[k];
                ++m[j];
                vals[i][m] += c;
            }
            D.push_back(Q.vector(vals));
        }

    for (const auto& e : t1_degree_zero_basis(K)) {
        Values vals(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            Face p = 0;
            for (std::size_t v = 0; v < n; ++v)
                if (base[i][v]) p |= Face{1} << vs[v];
            if (auto m = perturbation(K, e, p)) vals[i][*m] += 1;
        }
        T.push_back(Q.vector(vals));
    }

    TangentSpanReport r;
    for (int t : plist) {
        Values vals(base.size());
        for (std::size_t i = 0; i < family.size(); ++i) {
            Polynomial d = family[i].derivative(t).set_zero(plist);
            for (const auto& [e, c] : d.terms()) vals[i][restrict_x(e)] += c * sign[i];
        }
        auto v = Q.vector(vals);
        if (v.empty()) continue; // parameter absent from the family
        F.push_back(std::move(v));
        r.parameters.push_back(fvars[t]);
    }

    const std::size_t cols = Q.size();
    auto cat = [](auto a, const auto& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    r.derivation_rank = rank_of(D, cols);
    const std::size_t dt = rank_of(cat(D, T), cols);
    r.t1_dimension = dt - r.derivation_rank;
    r.family_dimension = rank_of(cat(D, F), cols) - r.derivation_rank;
    r.family_within_t1 = rank_of(cat(cat(D, T), F), cols) == dt;
    return r;
}

} // namespace srcy
