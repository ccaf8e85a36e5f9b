#include "srcy/sr_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace srcy {

MonomialIdealPresentation minimal_nonfaces(const SimplicialComplex& K)
{
    if (K.is_void()) throw std::invalid_argument("minimal_nonfaces: void complex");
    MonomialIdealPresentation P;
    P.variables = K.vertex_set();
    const std::vector<int> vs = K.vertices();
    const int n = static_cast<int>(vs.size());

    // breadth-first by size; supersets of known non-faces are skipped
    std::vector<Face> level{0};
    for (int k = 1; k <= n; ++k) {
        std::vector<Face> next;
        for (Face f : level) {
            int top = -1;
            for (int i = 0; i < n; ++i)
                if (f >> vs[i] & 1u) top = i;
            for (int i = top + 1; i < n; ++i) {
                Face g = f | Face{1} << vs[i];
                bool above = std::any_of(P.generators.begin(), P.generators.end(),
                                         [g](Face m) { return (g & m) == m; });
                if (above) continue;
                if (K.contains(g))
                    next.push_back(g);
                else
                    P.generators.push_back(g);
            }
        }
        level = std::move(next);
    }
    std::sort(P.generators.begin(), P.generators.end(), [](Face a, Face b) {
        if (face_size(a) != face_size(b)) return face_size(a) < face_size(b);
        return a < b;
    });
    return P;
}

long long degree(const SimplicialComplex& K)
{
    if (!K.is_pure()) throw std::invalid_argument("degree: complex is not pure");
    return static_cast<long long>(K.facets().size());
}

std::vector<Integer> hilbert_numerator(const SimplicialComplex& K)
{
    FVector fv = f_vector(K);
    const int d = K.dimension() + 1; // Krull dimension
    std::vector<Integer> c(std::max(d, 0) + 1, 0);
    for (int i = -1; i <= d - 1; ++i) {
        const Integer fi = fv.counts[i + 1];
        const int e = d - i - 1;
        // f_i t^{i+1} (1-t)^e
        for (int k = 0; k <= e; ++k) {
            Integer term = fi * binomial(e, k);
            if (k % 2) term = -term;
            c[i + 1 + k] += term;
        }
    }
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    return c;
}

Integer evaluate_at_one(const std::vector<Integer>& coeffs)
{
    Integer s = 0;
    for (const auto& x : coeffs) s += x;
    return s;
}

} // namespace srcy
