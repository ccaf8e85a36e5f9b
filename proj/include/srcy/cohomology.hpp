#pragma once

#include "srcy/rational.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace srcy {

// h^p(P^n, O(d)) by Bott's formula
Integer h_twist(int n, long long d, int p);
// chi(O(d)) = C(d+n, n) as a polynomial in d
Rational chi_twist(int n, long long d);

struct TwistSum {
    int n = 0;
    std::vector<std::pair<long long, long long>> terms; // (twist, multiplicity)

    Integer h(int p, long long shift = 0) const;
    Rational chi(long long shift = 0) const;
    std::string to_string() const;
};

// term 0 first: 0 -> A_k -> ... -> A_1 -> A_0 -> F -> 0
using Resolution = std::vector<TwistSum>;

struct ComplexesFile {
    int ambient = 0;
    int dimension = 0;
    std::map<std::string, Resolution> complexes;
};

ComplexesFile load_complexes(std::istream& in);
ComplexesFile load_complexes_file(const std::string& path);
TwistSum parse_twist_sum(const std::string& text, int n); // "(-2)^2 + (-3)^1"

// h^p(F) = h^{p+k}(A_k); throws naming the term and degree whose vanishing fails
Integer resolve_shift(const Resolution& res, int p, long long shift = 0);

// degree in k of sum_i (-1)^i chi(A_i(k)); -1 for the zero polynomial
int hilbert_polynomial_degree(const Resolution& res);
Rational resolution_chi(const Resolution& res, long long shift = 0);

struct SheafTerm {
    std::string sheaf;
    long long mult = 1;
};

// 0 -> a -> b -> c -> 0
struct ShortExact {
    SheafTerm a, b, c;
};

struct LesProblem {
    int n = 0; // degrees 0..n
    std::map<std::string, std::map<int, Integer>> known;
    std::vector<ShortExact> sequences;
};

struct LesSolution {
    std::map<std::string, std::map<int, Integer>> values;
    std::vector<std::string> undetermined;  // "h^p(S)"
    std::vector<std::string> contradictions;
    bool solved() const { return undetermined.empty() && contradictions.empty(); }
    std::optional<Integer> get(const std::string& sheaf, int p) const;
};

// Uses only exactness: alternating sums over stretches bounded by zeros vanish,
// nonnegativity forces zeros. Never guesses an underdetermined entry.
LesSolution les_solve(const LesProblem& problem);

struct HodgeResult {
    bool ok = false;
    long long h11 = 0, h12 = 0;
    int structure_degree = -1; // Hilbert polynomial degree of O_X from its resolution
    int square_degree = -1;    // same for O / J^2
    LesSolution solution;
    std::vector<std::string> axioms;
    std::vector<std::string> notes;
};

// needs complexes "structure" (resolution of O_X, term 0 = O) and "ideal_square"
HodgeResult hodge_pipeline_ci(const ComplexesFile& data);

} // namespace srcy
