#pragma once

#include "srcy/polynomial.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace srcy {

class SkewPolyMatrix {
public:
    SkewPolyMatrix(std::vector<std::string> vars, std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& vars() const { return vars_; }

    // (i, j) for any i, j; the lower triangle is the negated upper triangle
    Polynomial at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Polynomial& p); // i < j
    SkewPolyMatrix without(std::size_t k) const;                  // delete row and column k
    SkewPolyMatrix scaled(std::size_t k, const Polynomial& c) const; // row and column k times c

private:
    std::vector<std::string> vars_;
    std::size_t dim_;
    std::vector<std::vector<Polynomial>> upper_;
};

// Parameter variables are those whose names start with 't' or 's'.
std::vector<bool> parameter_mask(const std::vector<std::string>& vars);

// `truncate_bound` > 0 drops monomials of parameter degree >= bound at every step.
Polynomial pfaffian(const SkewPolyMatrix& M, int truncate_bound = 0);

// entry i is (-1)^i Pf(M without row/column i), 0-based; throws if M f != 0
std::vector<Polynomial> principal_pfaffians(const SkewPolyMatrix& M, int truncate_bound = 0);

std::vector<Polynomial> matrix_times(const SkewPolyMatrix& M, const std::vector<Polynomial>& f);

bool verify_first_order(const SkewPolyMatrix& M1, const std::vector<Polynomial>& f1);

// +1 or -1 if a == s*b entrywise, 0 otherwise
int equal_up_to_sign(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);

// Matrix file: `vars ...`, `dim d`, `entry i j : <poly>` (1-based, i < j).
SkewPolyMatrix load_matrix(std::istream& in);
SkewPolyMatrix load_matrix_file(const std::string& path);

// Vector file: `vars ...`, `entry i : <poly>`; every index up to the largest must appear.
std::vector<Polynomial> load_vector(std::istream& in);
std::vector<Polynomial> load_vector_file(const std::string& path);

} // namespace srcy
