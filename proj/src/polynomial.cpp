#include "srcy/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace srcy {

std::vector<std::string> expand_variable_list(const std::vector<std::string>& tokens)
{
    std::vector<std::string> out;
    for (const auto& tok : tokens) {
        auto dots = tok.find("..");
        if (dots == std::string::npos) {
            out.push_back(tok);
            continue;
        }
        // "x1..x7": shared alphabetic prefix, numeric range
        std::string lo = tok.substr(0, dots), hi = tok.substr(dots + 2);
        auto split = [&tok](const std::string& s) {
            std::size_t k = s.size();
            while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
            if (k == s.size() || k == 0) throw std::invalid_argument("bad variable range '" + tok + "'");
            return std::make_pair(s.substr(0, k), std::stoi(s.substr(k)));
        };
        auto [p1, a] = split(lo);
        auto [p2, b] = split(hi);
        if (p1 != p2 || a > b) throw std::invalid_argument("bad variable range '" + tok + "'");
        for (int i = a; i <= b; ++i) out.push_back(p1 + std::to_string(i));
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (out[i] == out[j]) throw std::invalid_argument("variable declared twice: " + out[i]);
    return out;
}

Polynomial Polynomial::constant(const std::vector<std::string>& vars, const Rational& c)
{
    Polynomial p(vars);
    p.add_term(Exponent(vars.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(const std::vector<std::string>& vars, const std::string& name)
{
    Polynomial p(vars);
    int k = p.var_index(name);
    if (k < 0) throw std::invalid_argument("unknown variable " + name);
    Exponent e(vars.size(), 0);
    e[k] = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::monomial(const std::vector<std::string>& vars, const Exponent& e, const Rational& c)
{
    Polynomial p(vars);
    p.add_term(e, c);
    return p;
}

int Polynomial::var_index(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

bool Polynomial::is_constant() const
{
    if (terms_.empty()) return true;
    return terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                             [](int x) { return x == 0; });
}

Rational Polynomial::constant_term() const
{
    auto it = terms_.find(Exponent(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

int Polynomial::partial_degree(const Exponent& e, const std::vector<bool>& mask) const
{
    int s = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (mask[i]) s += e[i];
    return s;
}

void Polynomial::add_term(const Exponent& e, const Rational& c)
{
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::require_same_ring(const Polynomial& o) const
{
    if (vars_ != o.vars_) throw std::invalid_argument("polynomials over different variable lists");
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    require_same_ring(o);
    Polynomial r(vars_);
    Exponent e(vars_.size());
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const
{
    Polynomial r(vars_);
    if (c == 0) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
    return r;
}

Polynomial Polynomial::pow(int k) const
{
    if (k < 0) throw std::invalid_argument("negative power");
    Polynomial r = constant(vars_, 1), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

Polynomial Polynomial::derivative(int var) const
{
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        --f[var];
        r.add_term(f, c * e[var]);
    }
    return r;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const
{
    require_same_ring(value);
    Polynomial r(vars_);
    std::map<int, Polynomial> powers;
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        int k = f[var];
        f[var] = 0;
        auto it = powers.find(k);
        if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
        r += monomial(vars_, f, c) * it->second;
    }
    return r;
}

Polynomial Polynomial::set_zero(const std::vector<int>& vars) const
{
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        bool dies = std::any_of(vars.begin(), vars.end(), [&e](int v) { return e[v] > 0; });
        if (!dies) r.terms_.emplace(e, c);
    }
    return r;
}

Rational Polynomial::evaluate(const RatVector& point) const
{
    if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point has wrong arity");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        s += t;
    }
    return s;
}

Polynomial Polynomial::truncate(const std::vector<bool>& mask, int bound) const
{
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_)
        if (partial_degree(e, mask) < bound) r.terms_.emplace(e, c);
    return r;
}

Polynomial Polynomial::over(const std::vector<std::string>& vars) const
{
    std::vector<int> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end()) {
            // allowed only if the variable never occurs
            bool used = std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] > 0; });
            if (used) throw std::invalid_argument("variable " + vars_[i] + " missing from target ring");
            where[i] = -1;
        } else {
            where[i] = static_cast<int>(it - vars.begin());
        }
    }
    Polynomial r(vars);
    for (const auto& [e, c] : terms_) {
        Exponent f(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (where[i] >= 0) f[where[i]] = e[i];
        r.add_term(f, c);
    }
    return r;
}

Polynomial Polynomial::strip_monomial_content() const
{
    if (terms_.empty()) return *this;
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < m.size(); ++i) f[i] -= m[i];
        r.terms_.emplace(f, c);
    }
    return r;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rational a = c < 0 ? Rational(-c) : c;
        std::string body;
        if (mono.empty())
            body = srcy::to_string(a);
        else if (a == 1)
            body = mono;
        else
            body = srcy::to_string(a) + "*" + mono;
        if (first)
            s += (c < 0 ? "-" : "") + body;
        else
            s += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return s;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + msg +
                                    " in \"" + s_ + "\"");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool atom_starts()
    {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Polynomial expr()
    {
        Polynomial p = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                p += term();
            } else if (peek('-')) {
                ++pos_;
                p -= term();
            } else {
                return p;
            }
        }
    }

    Polynomial term()
    {
        Polynomial p = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                p = p * unary();
            } else if (peek('/')) {
                ++pos_;
                Integer d = integer();
                if (d == 0) fail("division by zero");
                p = p * Rational(1, d);
            } else if (atom_starts()) {
                fail("implicit multiplication is not allowed");
            } else {
                return p;
            }
        }
    }

    Polynomial unary()
    {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        Polynomial base = atom();
        if (peek('^')) {
            ++pos_;
            Integer k = integer();
            if (k > 1000) fail("exponent too large");
            base = base.pow(static_cast<int>(k));
        }
        return base;
    }

    Integer integer()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(s_.substr(start, pos_ - start));
    }

    Polynomial atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(vars_, Rational(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
                pos_ = start;
                fail("undeclared variable '" + name + "'");
            }
            return Polynomial::variable(vars_, name);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars)
{
    return Parser(text, vars).parse();
}

} // namespace srcy
