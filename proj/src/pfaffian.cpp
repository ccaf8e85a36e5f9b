#include "srcy/pfaffian.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace srcy {

SkewPolyMatrix::SkewPolyMatrix(std::vector<std::string> vars, std::size_t dim)
    : vars_(std::move(vars)), dim_(dim), upper_(dim, std::vector<Polynomial>(dim, Polynomial(vars_)))
{
}

Polynomial SkewPolyMatrix::at(std::size_t i, std::size_t j) const
{
    if (i >= dim_ || j >= dim_) throw std::out_of_range("matrix index");
    if (i == j) return Polynomial(vars_);
    return i < j ? upper_[i][j] : -upper_[j][i];
}

void SkewPolyMatrix::set(std::size_t i, std::size_t j, const Polynomial& p)
{
    if (i >= j || j >= dim_) throw std::out_of_range("entries are set on the upper triangle");
    upper_[i][j] = p.over(vars_);
}

SkewPolyMatrix SkewPolyMatrix::without(std::size_t k) const
{
    SkewPolyMatrix r(vars_, dim_ - 1);
    for (std::size_t i = 0, ii = 0; i < dim_; ++i) {
        if (i == k) continue;
        for (std::size_t j = i + 1, jj = ii + 1; j < dim_; ++j) {
            if (j == k) continue;
            r.upper_[ii][jj] = upper_[i][j];
            ++jj;
        }
        ++ii;
    }
    return r;
}

SkewPolyMatrix SkewPolyMatrix::scaled(std::size_t k, const Polynomial& c) const
{
    SkewPolyMatrix r = *this;
    for (std::size_t j = 0; j < dim_; ++j) {
        if (j < k) r.upper_[j][k] = upper_[j][k] * c;
        if (j > k) r.upper_[k][j] = upper_[k][j] * c;
    }
    return r;
}

std::vector<bool> parameter_mask(const std::vector<std::string>& vars)
{
    std::vector<bool> m;
    for (const auto& v : vars) m.push_back(!v.empty() && (v[0] == 't' || v[0] == 's'));
    return m;
}

namespace {

Polynomial cut(const Polynomial& p, const std::vector<bool>& mask, int bound)
{
    return bound > 0 ? p.truncate(mask, bound) : p;
}

Polynomial pf_rec(const SkewPolyMatrix& M, const std::vector<std::size_t>& idx, const std::vector<bool>& mask, int bound)
{
    const auto& vars = M.vars();
    if (idx.empty()) return Polynomial::constant(vars, 1);
    if (idx.size() % 2) return Polynomial(vars);
    Polynomial r(vars);
    const std::size_t first = idx[0];
    for (std::size_t k = 1; k < idx.size(); ++k) {
        Polynomial a = M.at(first, idx[k]);
        if (a.is_zero()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t m = 1; m < idx.size(); ++m)
            if (m != k) rest.push_back(idx[m]);
        Polynomial term = cut(a * pf_rec(M, rest, mask, bound), mask, bound);
        if (k % 2 == 1)
            r += term;
        else
            r -= term;
    }
    return r;
}

} // namespace

Polynomial pfaffian(const SkewPolyMatrix& M, int truncate_bound)
{
    std::vector<std::size_t> idx(M.dim());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return pf_rec(M, idx, parameter_mask(M.vars()), truncate_bound);
}

std::vector<Polynomial> matrix_times(const SkewPolyMatrix& M, const std::vector<Polynomial>& f)
{
    if (f.size() != M.dim()) throw std::invalid_argument("vector length differs from matrix dimension");
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < M.dim(); ++i) {
        Polynomial s(M.vars());
        for (std::size_t j = 0; j < M.dim(); ++j) s += M.at(i, j) * f[j].over(M.vars());
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Polynomial> principal_pfaffians(const SkewPolyMatrix& M, int truncate_bound)
{
    if (M.dim() % 2 == 0) throw std::invalid_argument("principal pfaffians need odd dimension");
    std::vector<Polynomial> p;
    for (std::size_t i = 0; i < M.dim(); ++i) {
        Polynomial q = pfaffian(M.without(i), truncate_bound);
        p.push_back(i % 2 ? -q : q);
    }
    auto mask = parameter_mask(M.vars());
    for (const auto& r : matrix_times(M, p))
        if (!cut(r, mask, truncate_bound).is_zero()) throw std::logic_error("principal pfaffians fail M*f = 0");
    return p;
}

bool verify_first_order(const SkewPolyMatrix& M1, const std::vector<Polynomial>& f1)
{
    for (const auto& f : f1)
        for (const auto& v : f.vars())
            if (std::find(M1.vars().begin(), M1.vars().end(), v) == M1.vars().end())
                throw std::invalid_argument("vector variable " + v + " not declared by the matrix");
    auto mask = parameter_mask(M1.vars());
    for (const auto& r : matrix_times(M1, f1))
        if (!r.truncate(mask, 2).is_zero()) return false;
    return true;
}

int equal_up_to_sign(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b)
{
    if (a.size() != b.size()) return 0;
    for (int s : {1, -1}) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) {
            Polynomial bb = b[i].over(a[i].vars());
            ok = a[i] == bb * Rational(s);
        }
        if (ok) return s;
    }
    return 0;
}

namespace {

struct Header {
    std::vector<std::string> vars;
    std::size_t dim = 0;
    bool have_vars = false;
};

std::string trim(const std::string& s)
{
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// calls on_entry(indices, polynomial text, line number) for each entry line
template <typename F>
Header read_entries(std::istream& in, F on_entry)
{
    Header h;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ls(t);
        std::string key;
        ls >> key;
        auto where = [lineno](const std::string& msg) { return "line " + std::to_string(lineno) + ": " + msg; };
        if (key == "vars") {
            std::vector<std::string> toks;
            std::string tok;
            while (ls >> tok) toks.push_back(tok);
            h.vars = expand_variable_list(toks);
            h.have_vars = true;
        } else if (key == "dim") {
            long long d = -1;
            if (!(ls >> d) || d <= 0) throw std::invalid_argument(where("bad dim"));
            h.dim = static_cast<std::size_t>(d);
        } else if (key == "entry") {
            if (!h.have_vars) throw std::invalid_argument(where("entry before vars"));
            auto colon = t.find(':');
            if (colon == std::string::npos) throw std::invalid_argument(where("entry without ':'"));
            std::istringstream is(t.substr(5, colon - 5));
            std::vector<long long> ix;
            long long v;
            while (is >> v) ix.push_back(v);
            try {
                on_entry(ix, h, parse_polynomial(t.substr(colon + 1), h.vars));
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument(where(e.what()));
            }
        } else {
            throw std::invalid_argument(where("unknown keyword '" + key + "'"));
        }
    }
    if (!h.have_vars) throw std::invalid_argument("missing vars line");
    return h;
}

} // namespace

SkewPolyMatrix load_matrix(std::istream& in)
{
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> entries;
    Header h = read_entries(in, [&](const std::vector<long long>& ix, const Header& hd, Polynomial p) {
        if (hd.dim == 0) throw std::invalid_argument("entry before dim");
        if (ix.size() != 2 || ix[0] < 1 || ix[1] <= ix[0] || ix[1] > static_cast<long long>(hd.dim))
            throw std::invalid_argument("matrix entries need 1 <= i < j <= dim");
        auto key = std::make_pair(static_cast<std::size_t>(ix[0] - 1), static_cast<std::size_t>(ix[1] - 1));
        if (!entries.emplace(key, std::move(p)).second) throw std::invalid_argument("entry given twice");
    });
    if (h.dim == 0) throw std::invalid_argument("missing dim line");
    SkewPolyMatrix M(h.vars, h.dim);
    for (auto& [k, p] : entries) M.set(k.first, k.second, p);
    return M;
}

SkewPolyMatrix load_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_matrix(in);
}

std::vector<Polynomial> load_vector(std::istream& in)
{
    std::map<std::size_t, Polynomial> entries;
    Header h = read_entries(in, [&](const std::vector<long long>& ix, const Header&, Polynomial p) {
        if (ix.size() != 1 || ix[0] < 1) throw std::invalid_argument("vector entries need one index >= 1");
        if (!entries.emplace(static_cast<std::size_t>(ix[0] - 1), std::move(p)).second)
            throw std::invalid_argument("entry given twice");
    });
    std::vector<Polynomial> out;
    for (auto& [k, p] : entries) {
        if (k != out.size()) throw std::invalid_argument("vector entry " + std::to_string(out.size() + 1) + " missing");
        out.push_back(p);
    }
    if (out.empty()) throw std::invalid_argument("vector file has no entries");
    (void)h;
    return out;
}

std::vector<Polynomial> load_vector_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_vector(in);
}

} // namespace srcy
