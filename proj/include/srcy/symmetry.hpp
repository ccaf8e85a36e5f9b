#pragma once

#include "srcy/deformation.hpp"
#include "srcy/polynomial.hpp"
#include "srcy/simplicial.hpp"

#include <map>
#include <string>
#include <vector>

namespace srcy {

// Permutations of a fixed label set, in one-line notation: images[i] is the
// image of labels[i].
struct Permutation {
    std::vector<int> images;
    bool operator<(const Permutation& o) const { return images < o.images; }
    bool operator==(const Permutation& o) const { return images == o.images; }
};

struct PermutationGroup {
    std::vector<int> labels;
    std::vector<Permutation> elements; // sorted; identity first
    std::vector<Permutation> generators;

    std::size_t order() const { return elements.size(); }
    int image(const Permutation& g, int label) const;
    Face image(const Permutation& g, Face f) const;
    Permutation compose(const Permutation& g, const Permutation& h) const; // g after h
    Permutation inverse(const Permutation& g) const;
    Permutation identity() const;
};

// closure of a set of permutations under composition
std::vector<Permutation> generate_group(const std::vector<int>& labels, const std::vector<Permutation>& gens);

PermutationGroup automorphism_group(const SimplicialComplex& K);

struct OrbitPartition {
    std::vector<std::vector<std::size_t>> blocks; // indices into the basis, each sorted; blocks by least index
    std::vector<std::size_t> sizes() const;
    std::size_t block_of(std::size_t index) const;
};

T1BasisElement act(const PermutationGroup& G, const Permutation& g, const T1BasisElement& e);

OrbitPartition orbits_on_t1(const PermutationGroup& G, const std::vector<T1BasisElement>& basis);

// Each block is sent to a parameter name, or to zero when absent from the map.
FirstOrderFamily invariant_specialize(const FirstOrderFamily& family, const OrbitPartition& partition,
                                      const std::map<std::size_t, std::string>& assignment);

// generators with x-variables permuted by g (parameters untouched)
std::vector<Polynomial> permute_generators(const PermutationGroup& G, const Permutation& g,
                                           const std::vector<Polynomial>& gens);

} // namespace srcy
