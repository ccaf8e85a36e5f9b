#include "srcy/cohomology.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace srcy {

Integer h_twist(int n, long long d, int p)
{
    if (p == 0 && d >= 0) return binomial(d + n, n);
    if (p == n && d <= -n - 1) return binomial(-d - 1, n);
    return 0;
}

Rational chi_twist(int n, long long d)
{
    Rational r = 1;
    for (int j = 1; j <= n; ++j) r *= Rational(d + j, j);
    return r;
}

Integer TwistSum::h(int p, long long shift) const
{
    Integer s = 0;
    for (const auto& [d, m] : terms) s += m * h_twist(n, d + shift, p);
    return s;
}

Rational TwistSum::chi(long long shift) const
{
    Rational s = 0;
    for (const auto& [d, m] : terms) s += Rational(m) * chi_twist(n, d + shift);
    return s;
}

std::string TwistSum::to_string() const
{
    std::string s;
    for (const auto& [d, m] : terms) {
        if (!s.empty()) s += " + ";
        s += (m == 1 ? "" : std::to_string(m)) + "O(" + std::to_string(d) + ")";
    }
    return s.empty() ? "0" : s;
}

TwistSum parse_twist_sum(const std::string& text, int n)
{
    static const std::regex item(R"(^\s*\(\s*(-?\d+)\s*\)\s*\^\s*(\d+)\s*$)");
    TwistSum t;
    t.n = n;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '+')) {
        std::smatch m;
        if (!std::regex_match(part, m, item)) throw std::invalid_argument("bad twist term '" + part + "'");
        long long mult = std::stoll(m[2]);
        if (mult <= 0) throw std::invalid_argument("multiplicity must be positive");
        t.terms.push_back({std::stoll(m[1]), mult});
    }
    if (t.terms.empty()) throw std::invalid_argument("empty twist sum");
    return t;
}

ComplexesFile load_complexes(std::istream& in)
{
    static const std::regex term_re(R"(^term\s+(\d+)\s*:(.*)$)");
    ComplexesFile f;
    std::string line, current;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        line = line.substr(b);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        std::istringstream is(line);
        std::string key;
        is >> key;
        auto where = "complexes line " + std::to_string(lineno) + ": ";
        try {
            if (key == "ambient") {
                is >> f.ambient;
            } else if (key == "dimension") {
                is >> f.dimension;
            } else if (key == "complex") {
                is >> current;
                if (current.empty()) throw std::invalid_argument("complex needs a name");
                f.complexes[current];
            } else if (key == "term") {
                std::smatch m;
                if (!std::regex_match(line, m, term_re)) throw std::invalid_argument("bad term line");
                if (current.empty()) throw std::invalid_argument("term outside a complex");
                if (f.ambient <= 0) throw std::invalid_argument("ambient must come first");
                auto& res = f.complexes[current];
                std::size_t pos = std::stoul(m[1]);
                if (pos != res.size()) throw std::invalid_argument("terms must be listed in order from 0");
                res.push_back(parse_twist_sum(m[2], f.ambient));
            } else {
                throw std::invalid_argument("unknown key " + key);
            }
        } catch (const std::exception& e) {
            throw std::runtime_error(where + e.what());
        }
    }
    if (f.ambient <= 0 || f.dimension <= 0) throw std::runtime_error("complexes file: ambient and dimension required");
    return f;
}

ComplexesFile load_complexes_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_complexes(in);
}

Integer resolve_shift(const Resolution& res, int p, long long shift)
{
    if (res.empty()) throw std::invalid_argument("empty resolution");
    int n = res[0].n;
    if (p < 0 || p > n) return 0;
    std::size_t k = res.size() - 1;
    for (std::size_t i = 0; i < k; ++i)
        for (int q : {p + static_cast<int>(i), p + static_cast<int>(i) + 1}) {
            Integer v = res[i].h(q, shift);
            if (v != 0)
                throw std::runtime_error("shift refused: h^" + std::to_string(q) + " of term " + std::to_string(i) +
                                         " = " + to_string(v) + ", not zero");
        }
    return res[k].h(p + static_cast<int>(k), shift);
}

Rational resolution_chi(const Resolution& res, long long shift)
{
    Rational s = 0;
    for (std::size_t i = 0; i < res.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * res[i].chi(shift);
    return s;
}

int hilbert_polynomial_degree(const Resolution& res)
{
    if (res.empty()) return -1;
    int n = res[0].n;
    // values at n+1 points determine a polynomial of degree <= n
    std::vector<Rational> v;
    for (int k = 0; k <= n; ++k) v.push_back(resolution_chi(res, k));
    int deg = -1;
    std::vector<Rational> diff = v;
    for (int order = 0; order <= n; ++order) {
        if (std::any_of(diff.begin(), diff.end(), [](const Rational& q) { return q != 0; })) deg = order;
        std::vector<Rational> next;
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
        diff = next;
    }
    return deg;
}

std::optional<Integer> LesSolution::get(const std::string& sheaf, int p) const
{
    auto it = values.find(sheaf);
    if (it == values.end()) return std::nullopt;
    auto jt = it->second.find(p);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
}

namespace {

using Key = std::pair<std::string, int>;

std::string key_name(const Key& k) { return "h^" + std::to_string(k.second) + "(" + k.first + ")"; }

struct Entry {
    Key key;
    long long mult;
};

} // namespace

LesSolution les_solve(const LesProblem& problem)
{
    LesSolution sol;
    std::map<Key, Integer> value;
    for (const auto& [s, m] : problem.known)
        for (const auto& [p, v] : m) value[{s, p}] = v;

    std::vector<std::vector<Entry>> sequences;
    std::set<Key> all;
    for (const auto& se : problem.sequences) {
        std::vector<Entry> seq;
        for (int p = 0; p <= problem.n; ++p)
            for (const auto* t : {&se.a, &se.b, &se.c}) {
                if (t->mult <= 0) throw std::invalid_argument("multiplicity must be positive");
                seq.push_back({{t->sheaf, p}, t->mult});
                all.insert({t->sheaf, p});
            }
        sequences.push_back(seq);
    }

    auto contradiction = [&](const std::string& s) { sol.contradictions.push_back(s); };

    for (int round = 0; round < 1000; ++round) {
        // equations over unknowns: sum coef * x = rhs
        std::vector<Key> unknown;
        std::map<Key, std::size_t> col;
        for (const auto& k : all)
            if (!value.count(k)) {
                col[k] = unknown.size();
                unknown.push_back(k);
            }
        std::vector<std::pair<RatVector, Rational>> eqs;
        for (const auto& seq : sequences) {
            std::vector<long> zeros{-1};
            for (std::size_t i = 0; i < seq.size(); ++i) {
                auto it = value.find(seq[i].key);
                if (it != value.end() && it->second == 0) zeros.push_back(static_cast<long>(i));
            }
            zeros.push_back(static_cast<long>(seq.size()));
            for (std::size_t z = 0; z + 1 < zeros.size(); ++z) {
                if (zeros[z + 1] - zeros[z] < 2) continue;
                RatVector row(unknown.size(), Rational(0));
                Rational rhs = 0;
                bool any = false;
                for (long l = zeros[z] + 1; l < zeros[z + 1]; ++l) {
                    const auto& e = seq[static_cast<std::size_t>(l)];
                    Rational c = (l % 2 == 0 ? 1 : -1) * e.mult;
                    auto it = value.find(e.key);
                    if (it != value.end()) {
                        rhs -= c * Rational(it->second);
                    } else {
                        row[col[e.key]] += c;
                        any = true;
                    }
                }
                if (!any) {
                    if (rhs != 0) contradiction("exactness fails around " + key_name(seq[static_cast<std::size_t>(zeros[z] + 1)].key));
                    continue;
                }
                eqs.push_back({row, rhs});
            }
        }
        if (!sol.contradictions.empty() || unknown.empty()) break;

        // reduced row echelon form
        std::vector<std::pair<RatVector, Rational>> rref = eqs;
        std::size_t r = 0;
        for (std::size_t c = 0; c < unknown.size() && r < rref.size(); ++c) {
            std::size_t piv = r;
            while (piv < rref.size() && rref[piv].first[c] == 0) ++piv;
            if (piv == rref.size()) continue;
            std::swap(rref[r], rref[piv]);
            Rational inv = 1 / rref[r].first[c];
            for (auto& x : rref[r].first) x *= inv;
            rref[r].second *= inv;
            for (std::size_t i = 0; i < rref.size(); ++i) {
                if (i == r || rref[i].first[c] == 0) continue;
                Rational f = rref[i].first[c];
                for (std::size_t j = 0; j < unknown.size(); ++j) rref[i].first[j] -= f * rref[r].first[j];
                rref[i].second -= f * rref[r].second;
            }
            ++r;
        }

        std::map<Key, Rational> found;
        auto consider = [&](const RatVector& row, const Rational& rhs) {
            std::vector<std::size_t> nz;
            int pos = 0, neg = 0;
            for (std::size_t j = 0; j < row.size(); ++j)
                if (row[j] != 0) {
                    nz.push_back(j);
                    (row[j] > 0 ? pos : neg)++;
                }
            if (nz.empty()) {
                if (rhs != 0) contradiction("inconsistent exactness relations");
                return;
            }
            if (nz.size() == 1) {
                found[unknown[nz[0]]] = rhs / row[nz[0]];
                return;
            }
            if (pos == 0 || neg == 0) {
                Rational s = pos ? rhs : -rhs;
                if (s == 0)
                    for (auto j : nz) found[unknown[j]] = 0;
                else if (s < 0)
                    contradiction("nonnegative entries cannot sum to " + to_string(s));
            }
        };
        for (const auto& [row, rhs] : eqs) consider(row, rhs);
        for (const auto& [row, rhs] : rref) consider(row, rhs);
        if (!sol.contradictions.empty()) break;
        if (found.empty()) break;
        for (const auto& [k, q] : found) {
            if (!is_integer(q) || q < 0) {
                contradiction(key_name(k) + " forced to " + to_string(q));
                continue;
            }
            value[k] = numerator(q);
        }
        if (!sol.contradictions.empty()) break;
    }

    for (const auto& [k, v] : value) sol.values[k.first][k.second] = v;
    for (const auto& k : all)
        if (!value.count(k)) sol.undetermined.push_back(key_name(k));
    return sol;
}

namespace {

void add_resolution(LesProblem& pb, const std::string& name, const Resolution& res, long long shift)
{
    std::size_t k = res.size() - 1;
    auto term = [&](std::size_t i) { return name + ":A" + std::to_string(i); };
    auto syz = [&](std::size_t i) { return i == k ? term(k) : name + ":Z" + std::to_string(i); };
    for (std::size_t i = 0; i <= k; ++i)
        for (int p = 0; p <= pb.n; ++p) pb.known[term(i)][p] = res[i].h(p, shift);
    if (k == 0) throw std::invalid_argument("resolution of length zero");
    pb.sequences.push_back({{syz(1), 1}, {term(0), 1}, {name, 1}});
    for (std::size_t i = 1; i < k; ++i) pb.sequences.push_back({{syz(i + 1), 1}, {term(i), 1}, {syz(i), 1}});
}

} // namespace

HodgeResult hodge_pipeline_ci(const ComplexesFile& data)
{
    HodgeResult out;
    auto st = data.complexes.find("structure");
    auto sq = data.complexes.find("ideal_square");
    if (st == data.complexes.end() || sq == data.complexes.end())
        throw std::invalid_argument("need complexes 'structure' and 'ideal_square'");
    const Resolution& S = st->second;
    const Resolution& Q = sq->second;
    const int n = data.ambient, dx = data.dimension;
    if (S.size() < 2 || S[0].terms != std::vector<std::pair<long long, long long>>{{0, 1}})
        throw std::invalid_argument("structure resolution must start with O");

    out.structure_degree = hilbert_polynomial_degree(S);
    Resolution oq{S[0]};
    oq.insert(oq.end(), Q.begin(), Q.end());
    out.square_degree = hilbert_polynomial_degree(oq);
    if (out.structure_degree > dx) out.notes.push_back("structure resolution is not supported in dimension " + std::to_string(dx));
    if (out.square_degree > dx) out.notes.push_back("ideal_square resolution: O/J^2 not supported in dimension " + std::to_string(dx));

    Resolution J(S.begin() + 1, S.end());

    LesProblem pb;
    pb.n = n;
    add_resolution(pb, "O_X(-1)", S, -1);
    add_resolution(pb, "J", J, 0);
    add_resolution(pb, "J^2", Q, 0);
    for (int p = 0; p <= n; ++p) pb.known["O"][p] = h_twist(n, 0, p);
    pb.sequences.push_back({{"J", 1}, {"O", 1}, {"O_X", 1}});
    pb.sequences.push_back({{"Omega|X", 1}, {"O_X(-1)", n + 1}, {"O_X", 1}});
    pb.sequences.push_back({{"J^2", 1}, {"J", 1}, {"N*", 1}});
    pb.sequences.push_back({{"N*", 1}, {"Omega|X", 1}, {"Omega_X", 1}});

    for (const char* s : {"O_X", "O_X(-1)", "Omega|X", "N*", "Omega_X"}) {
        for (int p = dx + 1; p <= n; ++p) pb.known[s][p] = 0;
        out.axioms.push_back(std::string("h^p(") + s + ") = 0 for p > " + std::to_string(dx));
    }
    pb.known["Omega_X"][dx] = 0;
    out.axioms.push_back("h^" + std::to_string(dx) + "(Omega_X) = 0 (h^{2,0} = 0)");

    // the shift lemma must agree with the chase where it applies
    for (int p = 0; p <= n; ++p) {
        try {
            Integer v = resolve_shift(S, p, -1);
            out.notes.push_back("shift: h^" + std::to_string(p) + "(O_X(-1)) = " + to_string(v));
        } catch (const std::exception& e) {
            out.notes.push_back(std::string("shift O_X(-1), p=") + std::to_string(p) + ": " + e.what());
        }
    }

    out.solution = les_solve(pb);
    auto h11 = out.solution.get("Omega_X", 1), h12 = out.solution.get("Omega_X", 2);
    if (h11 && h12) {
        out.h11 = static_cast<long long>(*h11);
        out.h12 = static_cast<long long>(*h12);
    }
    out.ok = h11 && h12 && out.solution.contradictions.empty() && out.structure_degree <= dx &&
             out.square_degree <= dx;
    return out;
}

} // namespace srcy
