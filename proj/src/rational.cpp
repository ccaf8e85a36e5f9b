#include "srcy/rational.hpp"

#include <stdexcept>

namespace srcy {

std::string to_string(const Integer& z)
{
    return z.str();
}

std::string to_string(const Rational& q)
{
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational '" + text + "'");
    }
}

bool is_integer(const Rational& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Integer binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace srcy
