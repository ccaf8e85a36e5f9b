#pragma once

#include "srcy/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace srcy {

using Exponent = std::vector<int>;

// Expands "x1..x7 s" style declarations into a variable list.
std::vector<std::string> expand_variable_list(const std::vector<std::string>& tokens);

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(const std::vector<std::string>& vars, const Rational& c);
    static Polynomial variable(const std::vector<std::string>& vars, const std::string& name);
    static Polynomial monomial(const std::vector<std::string>& vars, const Exponent& e, const Rational& c = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    std::size_t nvars() const { return vars_.size(); }
    int var_index(const std::string& name) const; // -1 if absent

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    int total_degree() const;
    // degree counted only over the variables flagged in mask
    int partial_degree(const Exponent& e, const std::vector<bool>& mask) const;

    void add_term(const Exponent& e, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial pow(int k) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(int var) const;
    // replace variable `var` by a polynomial over the same variables
    Polynomial substitute(int var, const Polynomial& value) const;
    Polynomial set_zero(const std::vector<int>& vars) const;
    Rational evaluate(const RatVector& point) const;
    // drop monomials whose degree in the masked variables is >= bound
    Polynomial truncate(const std::vector<bool>& mask, int bound) const;
    // re-express over another variable list (names must be present there)
    Polynomial over(const std::vector<std::string>& vars) const;
    // divide out the largest monomial dividing every term
    Polynomial strip_monomial_content() const;

    std::string to_string() const;

private:
    void require_same_ring(const Polynomial& o) const;
    std::vector<std::string> vars_;
    std::map<Exponent, Rational> terms_; // no zero coefficients
};

// Parses + - * / ^ and parentheses; juxtaposition is rejected.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

} // namespace srcy
