#pragma once

#include "srcy/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace srcy {

struct JacobianAtPoint {
    RatVector values;  // dehomogenized generator values
    std::size_t rank = 0; // rank of the Jacobian in the affine chart
};

// `point` assigns every variable of the generators; parameters (names starting
// with 's' or 't') are substituted as given, geometric coordinates are scaled
// so that the chart variable is 1.
JacobianAtPoint evaluate_jacobian(const std::vector<Polynomial>& gens, const std::string& chart_var,
                                  const std::map<std::string, Rational>& point);

// prod (1/w_i - 1); throws unless every weight lies in (0,1) and the product is a natural number
Integer milnor_quasihomogeneous(const RatVector& weights);

// every monomial of f has weighted degree exactly 1
bool check_quasihomogeneous(const Polynomial& f, const RatVector& weights);

} // namespace srcy
