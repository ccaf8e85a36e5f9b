#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// the library, so agreement is evidence rather than a tautology.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

using Facets = std::vector<std::vector<int>>;

inline Facets read_facets(const std::string& path)
{
    std::ifstream in(path);
    Facets out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::vector<int> f;
        int v;
        while (is >> v) f.push_back(v);
        if (!f.empty()) out.push_back(f);
    }
    return out;
}

inline std::vector<int> vertices(const Facets& F)
{
    std::set<int> s;
    for (const auto& f : F) s.insert(f.begin(), f.end());
    return {s.begin(), s.end()};
}

// all faces as sorted vertex lists, including the empty face
inline std::set<std::vector<int>> all_faces(const Facets& F)
{
    std::set<std::vector<int>> out;
    for (auto f : F) {
        std::sort(f.begin(), f.end());
        for (unsigned m = 0; m < (1u << f.size()); ++m) {
            std::vector<int> g;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (m >> i & 1u) g.push_back(f[i]);
            out.insert(g);
        }
    }
    return out;
}

// determinant by cofactor expansion along the first row
inline long long cofactor_det(const std::vector<std::vector<long long>>& A)
{
    std::size_t n = A.size();
    if (n == 0) return 1;
    if (n == 1) return A[0][0];
    long long d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (A[0][j] == 0) continue;
        std::vector<std::vector<long long>> m;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<long long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(A[i][k]);
            m.push_back(row);
        }
        d += (j % 2 ? -1 : 1) * A[0][j] * cofactor_det(m);
    }
    return d;
}

constexpr std::int64_t P = 2147483647;

inline std::int64_t mod(std::int64_t a) { return ((a % P) + P) % P; }

inline std::int64_t inv(std::int64_t a)
{
    std::int64_t r = 1, e = P - 2;
    a = mod(a);
    while (e) {
        if (e & 1) r = r * a % P;
        a = a * a % P;
        e >>= 1;
    }
    return r;
}

// rank mod P of sparse rows
inline std::size_t rank_mod_p(std::vector<std::map<std::size_t, std::int64_t>> rows)
{
    std::map<std::size_t, std::map<std::size_t, std::int64_t>> pivots; // pivot column -> normalized row
    std::size_t r = 0;
    for (auto& row : rows) {
        for (auto it = row.begin(); it != row.end();) {
            if (it->second == 0) it = row.erase(it);
            else ++it;
        }
        while (!row.empty()) {
            auto [c, v] = *row.begin();
            auto pv = pivots.find(c);
            if (pv == pivots.end()) {
                std::int64_t s = inv(v);
                for (auto& [k, x] : row) x = x * s % P;
                pivots[c] = row;
                ++r;
                break;
            }
            for (const auto& [k, x] : pv->second) {
                auto& y = row[k];
                y = mod(y - v * x % P);
                if (y == 0) row.erase(k);
            }
        }
    }
    return r;
}

using Mono = std::vector<int>;

inline void monomials_of_degree(std::size_t n, int d, Mono& cur, std::size_t i, std::vector<Mono>& out)
{
    if (i + 1 == n) {
        cur[i] = d;
        out.push_back(cur);
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur[i] = k;
        monomials_of_degree(n, d - k, cur, i + 1, out);
    }
}

// dim T^1 in degree 0 of the Stanley-Reisner ring: dim Hom(I, A)_0 minus the
// image of the derivations x_i d/dx_j
inline std::size_t t1_degree_zero(const Facets& F)
{
    auto V = vertices(F);
    const std::size_t n = V.size();
    auto faces = all_faces(F);
    // minimal nonfaces by brute force over subsets
    std::vector<std::vector<std::size_t>> gens;
    for (unsigned m = 1; m < (1u << n); ++m) {
        std::vector<int> s;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1u) {
                s.push_back(V[i]);
                idx.push_back(i);
            }
        if (faces.count(s)) continue;
        bool minimal = true;
        for (std::size_t k = 0; k < s.size() && minimal; ++k) {
            auto t = s;
            t.erase(t.begin() + static_cast<long>(k));
            if (!faces.count(t)) minimal = false;
        }
        if (minimal) gens.push_back(idx);
    }
    auto in_ideal = [&](const Mono& m) {
        for (const auto& g : gens)
            if (std::all_of(g.begin(), g.end(), [&](std::size_t i) { return m[i] > 0; })) return true;
        return false;
    };
    std::map<int, std::vector<Mono>> basis; // degree -> monomials of A
    auto A = [&](int d) -> const std::vector<Mono>& {
        auto it = basis.find(d);
        if (it != basis.end()) return it->second;
        std::vector<Mono> all, keep;
        Mono cur(n, 0);
        monomials_of_degree(n, d, cur, 0, all);
        for (const auto& m : all)
            if (!in_ideal(m)) keep.push_back(m);
        return basis[d] = keep;
    };
    // unknown index for (generator k, basis monomial)
    std::vector<std::map<Mono, std::size_t>> unknown(gens.size());
    std::size_t N = 0;
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (const auto& m : A(static_cast<int>(gens[k].size()))) unknown[k][m] = N++;

    std::vector<std::map<std::size_t, std::int64_t>> rows;
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t l = k + 1; l < gens.size(); ++l) {
            Mono uk(n, 0), ul(n, 0);
            std::set<std::size_t> L(gens[k].begin(), gens[k].end());
            L.insert(gens[l].begin(), gens[l].end());
            for (auto i : L) {
                if (!std::count(gens[k].begin(), gens[k].end(), i)) uk[i] = 1;
                if (!std::count(gens[l].begin(), gens[l].end(), i)) ul[i] = 1;
            }
            std::map<Mono, std::map<std::size_t, std::int64_t>> eq;
            for (const auto& [m, idx] : unknown[k]) {
                Mono t = m;
                for (std::size_t i = 0; i < n; ++i) t[i] += uk[i];
                if (!in_ideal(t)) eq[t][idx] += 1;
            }
            for (const auto& [m, idx] : unknown[l]) {
                Mono t = m;
                for (std::size_t i = 0; i < n; ++i) t[i] += ul[i];
                if (!in_ideal(t)) eq[t][idx] = mod(eq[t][idx] - 1);
            }
            for (auto& [t, row] : eq) rows.push_back(row);
        }
    std::size_t hom = N - rank_mod_p(rows);

    std::vector<std::map<std::size_t, std::int64_t>> der;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::map<std::size_t, std::int64_t> row;
            for (std::size_t k = 0; k < gens.size(); ++k) {
                if (!std::count(gens[k].begin(), gens[k].end(), j)) continue;
                Mono t(n, 0);
                for (auto v : gens[k]) t[v] = 1;
                t[j] -= 1;
                t[i] += 1;
                if (in_ideal(t)) continue;
                row[unknown[k].at(t)] = 1;
            }
            der.push_back(row);
        }
    return hom - rank_mod_p(der);
}

} // namespace oracle
