#include "srcy/singularity.hpp"

#include "srcy/intmat.hpp"
#include "srcy/pfaffian.hpp"

#include <stdexcept>

namespace srcy {

JacobianAtPoint evaluate_jacobian(const std::vector<Polynomial>& gens, const std::string& chart_var,
                                  const std::map<std::string, Rational>& point)
{
    if (gens.empty()) throw std::invalid_argument("no generators");
    const auto& vars = gens.front().vars();
    const auto params = parameter_mask(vars);
    const int chart = gens.front().var_index(chart_var);
    if (chart < 0 || params[chart]) throw std::invalid_argument("bad chart variable " + chart_var);

    auto value_of = [&point](const std::string& v) {
        auto it = point.find(v);
        if (it == point.end()) throw std::invalid_argument("point does not assign " + v);
        return it->second;
    };
    const Rational scale = value_of(chart_var);
    if (scale == 0) throw std::invalid_argument("point not in the chart " + chart_var + " != 0");

    RatVector p(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) p[i] = params[i] ? value_of(vars[i]) : value_of(vars[i]) / scale;

    JacobianAtPoint r;
    RatMatrix J;
    for (const auto& g : gens) {
        Polynomial h = g.over(vars);
        r.values.push_back(h.evaluate(p));
        RatVector row;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (params[i] || static_cast<int>(i) == chart) continue;
            row.push_back(h.derivative(static_cast<int>(i)).evaluate(p));
        }
        J.push_back(std::move(row));
    }
    r.rank = rank(J);
    return r;
}

Integer milnor_quasihomogeneous(const RatVector& weights)
{
    Rational prod = 1;
    for (const auto& w : weights) {
        if (w <= 0 || w >= 1) throw std::invalid_argument("weight " + to_string(w) + " outside (0,1)");
        prod *= 1 / w - 1;
    }
    if (!is_integer(prod)) throw std::invalid_argument("Milnor product " + to_string(prod) + " is not an integer");
    return boost::multiprecision::numerator(prod);
}

bool check_quasihomogeneous(const Polynomial& f, const RatVector& weights)
{
    if (weights.size() != f.nvars()) throw std::invalid_argument("weight count differs from variable count");
    for (const auto& [e, c] : f.terms()) {
        Rational d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += weights[i] * e[i];
        if (d != 1) return false;
    }
    return true;
}

} // namespace srcy
