#include "srcy/torus.hpp"

#include "srcy/intmat.hpp"
#include "srcy/pfaffian.hpp"

#include <algorithm>
#include <stdexcept>

namespace srcy {

Integer FiniteAbelianGroup::order() const
{
    Integer n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
}

namespace {

std::vector<std::size_t> geometric_indices(const Polynomial& p)
{
    std::vector<std::size_t> idx;
    auto mask = parameter_mask(p.vars());
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (!mask[i]) idx.push_back(i);
    return idx;
}

// exponents of each monomial restricted to the geometric variables, deduplicated
std::vector<IntVector> geometric_monomials(const Polynomial& p)
{
    auto idx = geometric_indices(p);
    std::vector<IntVector> out;
    for (const auto& [e, c] : p.terms()) {
        IntVector v;
        for (auto i : idx) v.emplace_back(e[i]);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

IntMatrix exponent_differences(const std::vector<Polynomial>& gens)
{
    IntMatrix D;
    for (const auto& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("zero generator");
        auto mons = geometric_monomials(g);
        for (std::size_t k = 1; k < mons.size(); ++k) {
            IntVector d(mons[k].size());
            for (std::size_t i = 0; i < d.size(); ++i) d[i] = mons[k][i] - mons[0][i];
            D.push_back(std::move(d));
        }
    }
    return D;
}

FiniteAbelianGroup diagonal_stabilizer(const std::vector<Polynomial>& gens)
{
    if (gens.empty()) throw std::invalid_argument("no generators");
    const std::size_t n = geometric_indices(gens.front()).size();
    for (const auto& g : gens)
        if (g.vars() != gens.front().vars()) throw std::invalid_argument("generators over different variables");

    FiniteAbelianGroup H;
    IntMatrix D = exponent_differences(gens);
    for (const auto& row : D) {
        Integer s = 0;
        for (const auto& x : row) s += x;
        if (s != 0) {
            H.finite = false;
            H.note = "generators are not homogeneous";
            return H;
        }
    }
    if (D.empty()) D.push_back(IntVector(n, 0));
    SmithForm sf = smith_normal_form(D);
    std::size_t r = 0;
    for (const auto& d : sf.diagonal)
        if (d != 0) ++r;
    if (r + 1 < n) {
        H.finite = false;
        H.note = "difference lattice has rank " + std::to_string(r) + " < " + std::to_string(n - 1);
        return H;
    }
    for (std::size_t k = 0; k < sf.diagonal.size(); ++k) {
        const Integer& s = sf.diagonal[k];
        if (s <= 1) continue;
        H.invariant_factors.push_back(s);
        std::vector<Integer> w(n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = sf.V[i][k] % s;
            if (w[i] < 0) w[i] += s;
        }
        // shift along the diagonal so the first weight is zero
        Integer shift = w[0];
        for (auto& x : w) x = ((x - shift) % s + s) % s;
        H.generators.push_back(std::move(w));
    }
    return H;
}

bool verify_character(const std::vector<Polynomial>& gens, const std::vector<Integer>& weights, const Integer& n)
{
    if (n <= 0) throw std::invalid_argument("character order must be positive");
    for (const auto& g : gens) {
        auto mons = geometric_monomials(g);
        if (!mons.empty() && mons.front().size() != weights.size())
            throw std::invalid_argument("weight vector length differs from variable count");
        bool first = true;
        Integer ref = 0;
        for (const auto& m : mons) {
            Integer w = 0;
            for (std::size_t i = 0; i < m.size(); ++i) w += m[i] * weights[i];
            w = (w % n + n) % n;
            if (first) {
                ref = w;
                first = false;
            } else if (w != ref) {
                return false;
            }
        }
    }
    return true;
}

} // namespace srcy
