#include "srcy/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace srcy {

namespace {

std::size_t position(const std::vector<int>& labels, int label)
{
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::invalid_argument("label " + std::to_string(label) + " not permuted");
    return static_cast<std::size_t>(it - labels.begin());
}

} // namespace

int PermutationGroup::image(const Permutation& g, int label) const { return g.images[position(labels, label)]; }

Face PermutationGroup::image(const Permutation& g, Face f) const
{
    Face h = 0;
    for (int v : face_vertices(f)) h |= Face{1} << image(g, v);
    return h;
}

Permutation PermutationGroup::compose(const Permutation& g, const Permutation& h) const
{
    Permutation r;
    for (int y : h.images) r.images.push_back(image(g, y));
    return r;
}

Permutation PermutationGroup::inverse(const Permutation& g) const
{
    Permutation r;
    r.images.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) r.images[position(labels, g.images[i])] = labels[i];
    return r;
}

Permutation PermutationGroup::identity() const { return Permutation{labels}; }

std::vector<Permutation> generate_group(const std::vector<int>& labels, const std::vector<Permutation>& gens)
{
    PermutationGroup tmp;
    tmp.labels = labels;
    std::set<Permutation> seen{tmp.identity()};
    std::vector<Permutation> frontier{tmp.identity()};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Permutation y = tmp.compose(g, x);
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

PermutationGroup automorphism_group(const SimplicialComplex& K)
{
    PermutationGroup G;
    G.labels = K.vertices();
    const auto& vs = G.labels;
    std::set<Face> facets(K.facets().begin(), K.facets().end());

    // backtracking over images, checking facets once fully assigned
    std::vector<int> img(vs.size(), -1);
    Face used = 0;
    std::function<void(std::size_t)> extend = [&](std::size_t i) {
        if (i == vs.size()) {
            G.elements.push_back(Permutation{img});
            return;
        }
        for (int y : vs) {
            if (used >> y & 1u) continue;
            img[i] = y;
            used |= Face{1} << y;
            Face assigned = 0;
            for (std::size_t k = 0; k <= i; ++k) assigned |= Face{1} << vs[k];
            bool ok = true;
            for (Face f : K.facets()) {
                if (!(f >> vs[i] & 1u) || (f & assigned) != f) continue;
                Face h = 0;
                for (int v : face_vertices(f)) h |= Face{1} << img[position(vs, v)];
                if (!facets.count(h)) {
                    ok = false;
                    break;
                }
            }
            if (ok) extend(i + 1);
            used &= ~(Face{1} << y);
            img[i] = -1;
        }
    };
    extend(0);
    std::sort(G.elements.begin(), G.elements.end());

    // greedy generating set: take elements outside the current span
    std::set<Permutation> span{G.identity()};
    for (const auto& g : G.elements) {
        if (span.count(g)) continue;
        G.generators.push_back(g);
        auto grp = generate_group(G.labels, G.generators);
        span = std::set<Permutation>(grp.begin(), grp.end());
        if (span.size() == G.elements.size()) break;
    }
    return G;
}

std::vector<std::size_t> OrbitPartition::sizes() const
{
    std::vector<std::size_t> s;
    for (const auto& b : blocks) s.push_back(b.size());
    return s;
}

std::size_t OrbitPartition::block_of(std::size_t index) const
{
    for (std::size_t k = 0; k < blocks.size(); ++k)
        if (std::binary_search(blocks[k].begin(), blocks[k].end(), index)) return k;
    throw std::out_of_range("index not in partition");
}

T1BasisElement act(const PermutationGroup& G, const Permutation& g, const T1BasisElement& e)
{
    T1BasisElement r;
    r.a = G.image(g, e.a);
    r.b = G.image(g, e.b);
    // carry exponents along with their vertices, then re-sort by new label
    std::vector<std::pair<int, int>> moved;
    auto av = face_vertices(e.a);
    for (std::size_t i = 0; i < av.size(); ++i) moved.emplace_back(G.image(g, av[i]), e.a_vector[i]);
    std::sort(moved.begin(), moved.end());
    for (auto& [v, x] : moved) r.a_vector.push_back(x);
    return r;
}

OrbitPartition orbits_on_t1(const PermutationGroup& G, const std::vector<T1BasisElement>& basis)
{
    auto find = [&basis](const T1BasisElement& e) -> std::size_t {
        auto it = std::lower_bound(basis.begin(), basis.end(), e, t1_less);
        if (it == basis.end() || !(*it == e)) throw std::logic_error("group does not preserve the T1 basis");
        return static_cast<std::size_t>(it - basis.begin());
    };
    std::vector<std::size_t> parent(basis.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (const auto& g : G.generators) {
            std::size_t a = root(i), b = root(find(act(G, g, basis[i])));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    OrbitPartition P;
    std::map<std::size_t, std::size_t> block_index;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::size_t r = root(i);
        auto it = block_index.find(r);
        if (it == block_index.end()) {
            it = block_index.emplace(r, P.blocks.size()).first;
            P.blocks.emplace_back();
        }
        P.blocks[it->second].push_back(i);
    }
    return P;
}

FirstOrderFamily invariant_specialize(const FirstOrderFamily& family, const OrbitPartition& partition,
                                      const std::map<std::size_t, std::string>& assignment)
{
    const std::size_t nx = family.vars.size() - static_cast<std::size_t>(family.parameters);
    FirstOrderFamily out;
    out.vars.assign(family.vars.begin(), family.vars.begin() + nx);
    out.base = family.base;
    std::vector<std::string> names;
    for (const auto& [block, name] : assignment) {
        if (block >= partition.blocks.size()) throw std::invalid_argument("assignment names a missing orbit");
        if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    }
    out.vars.insert(out.vars.end(), names.begin(), names.end());
    out.parameters = static_cast<int>(names.size());

    // old parameter k -> new variable index, or -1 for zero
    std::vector<int> target(family.parameters, -1);
    for (const auto& [block, name] : assignment) {
        int idx = static_cast<int>(nx + (std::find(names.begin(), names.end(), name) - names.begin()));
        for (std::size_t k : partition.blocks[block]) target[k] = idx;
    }
    for (const auto& f : family.generators) {
        Polynomial g(out.vars);
        for (const auto& [e, c] : f.terms()) {
            Exponent h(out.vars.size(), 0);
            std::copy(e.begin(), e.begin() + nx, h.begin());
            bool zero = false;
            for (int k = 0; k < family.parameters; ++k) {
                if (e[nx + k] == 0) continue;
                if (target[k] < 0) {
                    zero = true;
                    break;
                }
                h[target[k]] += e[nx + k];
            }
            if (!zero) g.add_term(h, c);
        }
        out.generators.push_back(std::move(g));
    }
    return out;
}

std::vector<Polynomial> permute_generators(const PermutationGroup& G, const Permutation& g,
                                           const std::vector<Polynomial>& gens)
{
    std::vector<Polynomial> out;
    for (const auto& f : gens) {
        const auto& vars = f.vars();
        std::vector<int> dest(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            dest[i] = static_cast<int>(i);
            for (int v : G.labels)
                if (vars[i] == vertex_variable(v)) dest[i] = f.var_index(vertex_variable(G.image(g, v)));
        }
        Polynomial h(vars);
        for (const auto& [e, c] : f.terms()) {
            Exponent x(e.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) x[dest[i]] += e[i];
            h.add_term(x, c);
        }
        out.push_back(std::move(h));
    }
    return out;
}

} // namespace srcy
