#pragma once

#include "srcy/rational.hpp"

#include <cstddef>

namespace srcy {

// U * A * V = S with U, V unimodular and S diagonal, s_1 | s_2 | ...
struct SmithForm {
    IntMatrix U, S, V;
    IntVector diagonal; // min(rows, cols) entries, nonnegative
};

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& A);
IntMatrix multiply(const IntMatrix& A, const IntMatrix& B);
IntVector multiply(const IntMatrix& A, const IntVector& x);

SmithForm smith_normal_form(const IntMatrix& A);

// Row-style Hermite normal form of the row lattice: upper echelon, positive
// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
IntMatrix hermite_normal_form(const IntMatrix& A);

// Basis (as rows) of {x in Z^n : A x = 0}, in Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& A, std::size_t ncols);

Integer determinant(const IntMatrix& A);
std::size_t rank(const RatMatrix& A);
RatMatrix to_rational(const IntMatrix& A);
RatMatrix inverse(const RatMatrix& A); // throws on singular input
RatMatrix multiply(const RatMatrix& A, const RatMatrix& B);
RatVector multiply(const RatMatrix& A, const RatVector& x);

Integer gcd_of(const IntVector& v);
IntVector primitive(const IntVector& v);

} // namespace srcy
