#pragma once

#include "srcy/polynomial.hpp"

#include <string>
#include <vector>

namespace srcy {

struct FiniteAbelianGroup {
    bool finite = true;
    std::string note;                      // reason when not finite
    std::vector<Integer> invariant_factors; // each > 1, dividing the next
    std::vector<std::vector<Integer>> generators; // residues mod the matching invariant factor
    Integer order() const;
};

// Exponent-difference lattice D: one row per non-reference monomial, taken
// against the lexicographically least monomial of its generator. Parameter
// variables are ignored.
IntMatrix exponent_differences(const std::vector<Polynomial>& gens);

// Diagonal scalings of the geometric variables preserving every generator up
// to a constant, modulo overall scalars.
FiniteAbelianGroup diagonal_stabilizer(const std::vector<Polynomial>& gens);

bool verify_character(const std::vector<Polynomial>& gens, const std::vector<Integer>& weights, const Integer& n);

} // namespace srcy
