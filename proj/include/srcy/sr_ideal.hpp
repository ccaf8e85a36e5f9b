#pragma once

#include "srcy/rational.hpp"
#include "srcy/simplicial.hpp"

#include <vector>

namespace srcy {

struct MonomialIdealPresentation {
    std::vector<Face> generators; // square-free monomials as vertex subsets
    Face variables = 0;           // ambient variables (the vertex set)
};

MonomialIdealPresentation minimal_nonfaces(const SimplicialComplex& K);

// number of facets; throws for a non-pure complex
long long degree(const SimplicialComplex& K);

// coefficients c_0, c_1, ... of sum_i f_i t^{i+1} (1-t)^{d-i-1}
std::vector<Integer> hilbert_numerator(const SimplicialComplex& K);
Integer evaluate_at_one(const std::vector<Integer>& coeffs);

} // namespace srcy
