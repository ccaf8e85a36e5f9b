#include "srcy/toric.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace srcy {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

IntVector parse_ints(const std::vector<std::string>& toks, std::size_t from = 0)
{
    IntVector v;
    for (std::size_t i = from; i < toks.size(); ++i) v.push_back(Integer(toks[i]));
    return v;
}

IntMatrix columns(const std::vector<IntVector>& cols)
{
    std::size_t r = cols.front().size();
    IntMatrix M(r, IntVector(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < r; ++i) M[i][j] = cols[j][i];
    return M;
}

IntVector to_integer(const RatVector& v)
{
    IntVector out;
    for (const auto& q : v) {
        if (!is_integer(q)) throw std::runtime_error("non-integral lattice vector");
        out.push_back(numerator(q));
    }
    return out;
}

// 0: (-pi,0), 1: angle 0, 2: (0,pi), 3: pi
int half_plane(const IntVector& v)
{
    if (v[1] < 0) return 0;
    if (v[1] == 0) return v[0] > 0 ? 1 : 3;
    return 2;
}

Integer cross(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

bool angle_less(const IntVector& a, const IntVector& b)
{
    int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

void sort_by_angle(std::vector<IntVector>& rays)
{
    std::sort(rays.begin(), rays.end(), angle_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

Rational dot(const RatVector& a, const IntVector& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
    return s;
}

// normal of the hyperplane through three vectors of Z^4 (generalized cross product)
std::vector<long long> normal4(const std::vector<std::vector<long long>>& rows)
{
    std::vector<long long> n(4);
    for (int j = 0; j < 4; ++j) {
        long long m[3][3];
        for (int i = 0; i < 3; ++i) {
            int c = 0;
            for (int k = 0; k < 4; ++k)
                if (k != j) m[i][c++] = rows[i][k];
        }
        long long d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        n[j] = (j % 2 == 0) ? d : -d;
    }
    return n;
}

long long dot_ll(const std::vector<long long>& a, const std::vector<long long>& b)
{
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<long long> to_ll(const IntVector& v)
{
    std::vector<long long> out;
    for (const auto& x : v) out.push_back(static_cast<long long>(x));
    return out;
}

std::vector<long long> primitive_ll(std::vector<long long> v)
{
    long long g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

// inequality rows H with cone = {x : H x >= 0}, for a unimodular cone given by rays
std::vector<std::vector<long long>> cone_inequalities(const std::vector<IntVector>& rays)
{
    RatMatrix inv = inverse(to_rational(columns(rays)));
    std::vector<std::vector<long long>> H;
    for (const auto& row : inv) {
        Integer l = 1;
        for (const auto& q : row) l = boost::multiprecision::lcm(l, denominator(q));
        std::vector<long long> h;
        for (const auto& q : row) h.push_back(static_cast<long long>(numerator(q * Rational(l))));
        H.push_back(h);
    }
    return H;
}

} // namespace

RatVector AmbientLattice::ambient(const IntVector& v) const
{
    RatVector out(A.size(), Rational(0));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += A[i][j] * Rational(v[j]);
    return out;
}

std::size_t Fan::ray_index(const IntVector& r) const
{
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (rays[i] == r) return i;
    throw std::invalid_argument("ray " + vector_string(r) + " not in fan");
}

std::vector<IntVector> Fan::cone_rays(std::size_t cone) const
{
    std::vector<IntVector> out;
    for (auto i : cones.at(cone)) out.push_back(rays.at(i));
    return out;
}

bool Fan::cone_contains(std::size_t cone, std::size_t ray) const
{
    const auto& c = cones.at(cone);
    return std::find(c.begin(), c.end(), ray) != c.end();
}

IntVector parse_int_vector(const std::string& text)
{
    std::string s = text;
    for (auto& ch : s)
        if (ch == ',' || ch == '(' || ch == ')') ch = ' ';
    auto toks = split_ws(s);
    if (toks.empty()) throw std::invalid_argument("empty vector: " + text);
    return parse_ints(toks);
}

std::string vector_string(const IntVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

Fan load_fan(std::istream& in)
{
    Fan fan;
    std::string line, block;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto toks = split_ws(line);
        if (toks.size() == 1 && (toks[0] == "lattice" || toks[0] == "rays" || toks[0] == "cones" || toks[0] == "sigma")) {
            block = toks[0];
            continue;
        }
        try {
            if (block == "lattice") {
                RatVector row;
                for (const auto& t : toks) row.push_back(parse_rational(t));
                fan.lattice.A.push_back(row);
            } else if (block == "rays") {
                fan.rays.push_back(parse_ints(toks));
            } else if (block == "cones" || block == "sigma") {
                std::vector<std::size_t> c;
                for (const auto& t : toks) {
                    long long k = std::stoll(t);
                    if (k < 1) throw std::invalid_argument("ray index must be 1-based");
                    c.push_back(static_cast<std::size_t>(k - 1));
                }
                if (block == "cones") fan.cones.push_back(c);
                else fan.sigma = c;
            } else {
                throw std::invalid_argument("data outside a block");
            }
        } catch (const std::exception& e) {
            throw std::runtime_error("fan file line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    std::size_t r = fan.lattice.A.size();
    if (r == 0) throw std::runtime_error("fan file: missing lattice block");
    for (const auto& row : fan.lattice.A)
        if (row.size() != r) throw std::runtime_error("fan file: lattice matrix not square");
    for (const auto& v : fan.rays)
        if (v.size() != r) throw std::runtime_error("fan file: ray of wrong length");
    for (const auto& c : fan.cones)
        for (auto i : c)
            if (i >= fan.rays.size()) throw std::runtime_error("fan file: cone refers to missing ray");
    for (auto i : fan.sigma)
        if (i >= fan.rays.size()) throw std::runtime_error("fan file: sigma refers to missing ray");
    return fan;
}

Fan load_fan_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_fan(in);
}

FPolyData load_fpoly(std::istream& in)
{
    FPolyData d;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto toks = split_ws(line);
        if (toks[0] == "f") d.f.push_back(parse_ints(toks, 1));
        else if (toks[0] == "invariant") d.invariant.push_back(parse_ints(toks, 1));
        else if (toks[0] == "one") d.one = parse_ints(toks, 1);
        else throw std::runtime_error("fpoly file: unknown key " + toks[0]);
    }
    if (d.f.empty() || d.invariant.empty() || d.one.empty()) throw std::runtime_error("fpoly file: incomplete");
    return d;
}

FPolyData load_fpoly_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_fpoly(in);
}

SubdivisionReport verify_smooth_subdivision(const Fan& fan)
{
    SubdivisionReport rep;
    rep.ray_count = fan.rays.size();
    rep.cone_count = fan.cones.size();
    const std::size_t r = fan.lattice.rank();
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        if (rep.failures.size() < 50) rep.failures.push_back(s);
    };

    if (fan.sigma.size() != r) {
        fail("sigma must be simplicial of full dimension");
        return rep;
    }
    std::vector<IntVector> sig;
    for (auto i : fan.sigma) sig.push_back(fan.rays[i]);
    if (determinant(columns(sig)) == 0) {
        fail("sigma is degenerate");
        return rep;
    }
    auto Hs = cone_inequalities(sig);
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        auto v = to_ll(fan.rays[i]);
        for (const auto& h : Hs)
            if (dot_ll(h, v) < 0) fail("ray " + vector_string(fan.rays[i]) + " outside sigma");
        if (gcd_of(fan.rays[i]) != 1) fail("ray " + vector_string(fan.rays[i]) + " not primitive");
    }

    std::vector<std::vector<std::vector<long long>>> H(fan.cones.size());
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        if (fan.cones[c].size() != r) {
            ++rep.nonunimodular;
            fail("cone " + std::to_string(c + 1) + " not simplicial");
            continue;
        }
        Integer d = determinant(columns(fan.cone_rays(c)));
        if (abs(d) != 1) {
            ++rep.nonunimodular;
            fail("cone " + std::to_string(c + 1) + " has determinant " + to_string(d));
            continue;
        }
        H[c] = cone_inequalities(fan.cone_rays(c));
    }
    if (!rep.ok) return rep;
    if (r != 4) {
        fail("intersection check implemented for rank 4 only");
        return rep;
    }

    // pairwise intersections: extreme rays of the intersection must be common rays
    for (std::size_t a = 0; a < fan.cones.size(); ++a) {
        for (std::size_t b = a + 1; b < fan.cones.size(); ++b) {
            std::vector<std::vector<long long>> rows = H[a];
            rows.insert(rows.end(), H[b].begin(), H[b].end());
            std::set<std::vector<long long>> common;
            for (auto i : fan.cones[a])
                if (fan.cone_contains(b, i)) common.insert(to_ll(fan.rays[i]));
            bool good = true;
            for (std::size_t i = 0; i < 8 && good; ++i)
                for (std::size_t j = i + 1; j < 8 && good; ++j)
                    for (std::size_t k = j + 1; k < 8 && good; ++k) {
                        auto n = normal4({rows[i], rows[j], rows[k]});
                        if (std::all_of(n.begin(), n.end(), [](long long x) { return x == 0; })) continue;
                        for (int s : {1, -1}) {
                            std::vector<long long> v = n;
                            for (auto& x : v) x *= s;
                            bool inside = true;
                            for (const auto& h : rows)
                                if (dot_ll(h, v) < 0) {
                                    inside = false;
                                    break;
                                }
                            if (inside && !common.count(primitive_ll(v))) good = false;
                        }
                    }
            if (!good) {
                ++rep.bad_intersections;
                fail("cones " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " overlap improperly");
            }
        }
    }

    // ridge pairing
    std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> ridges;
    for (std::size_t c = 0; c < fan.cones.size(); ++c)
        for (std::size_t drop = 0; drop < r; ++drop) {
            std::vector<std::size_t> ridge;
            for (std::size_t k = 0; k < r; ++k)
                if (k != drop) ridge.push_back(fan.cones[c][k]);
            std::sort(ridge.begin(), ridge.end());
            ridges[ridge].push_back({c, fan.cones[c][drop]});
        }
    for (const auto& [ridge, owners] : ridges) {
        std::vector<std::vector<long long>> rr;
        for (auto i : ridge) rr.push_back(to_ll(fan.rays[i]));
        bool on_boundary = false;
        for (const auto& h : Hs)
            if (std::all_of(rr.begin(), rr.end(), [&](const auto& v) { return dot_ll(h, v) == 0; })) on_boundary = true;
        std::string name = "ridge";
        for (auto i : ridge) name += " " + std::to_string(i + 1);
        if (on_boundary) {
            if (owners.size() != 1) {
                ++rep.bad_facets;
                fail(name + " on the boundary lies in " + std::to_string(owners.size()) + " cones");
            }
            continue;
        }
        if (owners.size() != 2) {
            ++rep.bad_facets;
            fail(name + " lies in " + std::to_string(owners.size()) + " cones");
            continue;
        }
        auto n = normal4(rr);
        long long s1 = dot_ll(n, to_ll(fan.rays[owners[0].second]));
        long long s2 = dot_ll(n, to_ll(fan.rays[owners[1].second]));
        if (!((s1 > 0 && s2 < 0) || (s1 < 0 && s2 > 0))) {
            ++rep.bad_facets;
            fail(name + " has both cones on one side");
        }
    }
    return rep;
}

std::vector<CrepancyRow> crepancy_check(const Fan& fan, const std::vector<IntVector>& f_monomials, const IntVector& one)
{
    std::vector<CrepancyRow> out;
    for (const auto& ray : fan.rays) {
        RatVector a = fan.lattice.ambient(ray);
        CrepancyRow row;
        row.ray = ray;
        row.alpha_one = dot(a, one);
        bool first = true;
        for (const auto& m : f_monomials) {
            Rational v = dot(a, m);
            if (first || v < row.alpha_f) row.alpha_f = v;
            first = false;
        }
        row.holds = row.alpha_one == row.alpha_f + 1;
        out.push_back(row);
    }
    return out;
}

std::vector<std::string> chart_variables(std::size_t r)
{
    std::vector<std::string> v;
    for (std::size_t i = 1; i <= r; ++i) v.push_back("y" + std::to_string(i));
    return v;
}

Polynomial strict_transform(const Fan& fan, std::size_t cone, const std::vector<IntVector>& invariant)
{
    auto rays = fan.cone_rays(cone);
    std::vector<RatVector> amb;
    for (const auto& v : rays) amb.push_back(fan.lattice.ambient(v));
    std::vector<Exponent> exps;
    for (const auto& m : invariant) {
        Exponent e;
        for (const auto& a : amb) {
            Rational q = dot(a, m);
            if (!is_integer(q))
                throw std::runtime_error("non-integral chart exponent in cone " + std::to_string(cone + 1));
            e.push_back(static_cast<int>(numerator(q)));
        }
        exps.push_back(e);
    }
    Polynomial p(chart_variables(rays.size()));
    for (const auto& e : exps) p += Polynomial::monomial(p.vars(), e);
    return p.strip_monomial_content();
}

Polynomial chart_restriction(const Fan& fan, std::size_t cone, std::size_t ray, const std::vector<IntVector>& invariant)
{
    const auto& c = fan.cones.at(cone);
    auto it = std::find(c.begin(), c.end(), ray);
    if (it == c.end()) throw std::invalid_argument("ray not in chart");
    return strict_transform(fan, cone, invariant).set_zero({static_cast<int>(it - c.begin())});
}

bool divisor_meets_strict_transform(const Fan& fan, std::size_t ray, const std::vector<IntVector>& invariant)
{
    for (std::size_t c = 0; c < fan.cones.size(); ++c)
        if (fan.cone_contains(c, ray) && !chart_restriction(fan, c, ray, invariant).is_constant()) return true;
    return false;
}

Fan2D make_fan2d(std::vector<IntVector> rays)
{
    Fan2D f;
    for (auto& v : rays) {
        if (v.size() != 2) throw std::invalid_argument("2D fan needs rank-2 rays");
        v = primitive(v);
    }
    sort_by_angle(rays);
    f.rays = rays;
    std::size_t n = rays.size();
    if (n < 3) return f;
    f.complete = true;
    f.smooth = true;
    for (std::size_t i = 0; i < n; ++i) {
        Integer d = cross(rays[i], rays[(i + 1) % n]);
        if (d <= 0) f.complete = false;
        if (d != 1) f.smooth = false;
    }
    return f;
}

SurfaceType classify_toric_surface(const Fan2D& fan)
{
    if (!fan.complete || !fan.smooth) throw std::invalid_argument("fan must be complete and smooth");
    const auto& v = fan.rays;
    std::size_t n = v.size();
    SurfaceType st;
    st.euler = n;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = v[(i + n - 1) % n];
        const auto& b = v[i];
        const auto& c = v[(i + 1) % n];
        IntVector t{a[0] + c[0], a[1] + c[1]};
        Integer k = b[0] != 0 ? t[0] / b[0] : t[1] / b[1];
        if (k * b[0] != t[0] || k * b[1] != t[1]) throw std::logic_error("smooth fan without relation");
        st.self_intersections.push_back(-static_cast<int>(k));
    }

    // every minimal model reachable by contracting (-1)-curves
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> stack{st.self_intersections};
    bool reaches_p2 = false;
    std::set<int> hirzebruch;
    while (!stack.empty()) {
        auto q = stack.back();
        stack.pop_back();
        if (!seen.insert(q).second) continue;
        std::size_t m = q.size();
        if (m == 3) reaches_p2 = true;
        if (m == 4) {
            int k = 0;
            for (int x : q) k = std::max(k, std::abs(x));
            hirzebruch.insert(k);
        }
        if (m > 3)
            for (std::size_t i = 0; i < m; ++i)
                if (q[i] == -1) {
                    auto r = q;
                    r[(i + m - 1) % m] += 1;
                    r[(i + 1) % m] += 1;
                    r.erase(r.begin() + static_cast<long>(i));
                    stack.push_back(r);
                }
    }
    auto bl = [](std::size_t k) { return k == 0 ? std::string() : "Bl" + std::to_string(k); };
    if (reaches_p2) st.presentations.insert(bl(n - 3) + "P2");
    for (int k : hirzebruch) st.presentations.insert(bl(n - 4) + "F" + std::to_string(k));

    if (n == 3) st.tag = "P2";
    else if (n == 4) st.tag = "F" + std::to_string(*hirzebruch.begin());
    else if (reaches_p2) st.tag = bl(n - 3) + "P2";
    else st.tag = bl(n - 4) + "F" + std::to_string(*hirzebruch.begin());
    return st;
}

std::vector<std::vector<IntVector>> star_in_chart(const Fan& fan, std::size_t ray, std::size_t chart)
{
    const auto& tc = fan.cones.at(chart);
    auto it = std::find(tc.begin(), tc.end(), ray);
    if (it == tc.end()) throw std::invalid_argument("chart does not contain the ray");
    std::size_t k = static_cast<std::size_t>(it - tc.begin());
    RatMatrix inv = inverse(to_rational(columns(fan.cone_rays(chart))));
    std::vector<std::vector<IntVector>> out;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        if (!fan.cone_contains(c, ray)) continue;
        std::vector<IntVector> gens;
        for (auto i : fan.cones[c]) {
            if (i == ray) continue;
            IntVector full = to_integer(multiply(inv, to_rational(IntMatrix{fan.rays[i]})[0]));
            IntVector g;
            for (std::size_t j = 0; j < full.size(); ++j)
                if (j != k) g.push_back(full[j]);
            gens.push_back(g);
        }
        out.push_back(gens);
    }
    return out;
}

Method1Result method1_component(const Fan& fan, std::size_t ray, const std::vector<IntVector>& invariant,
                                std::optional<std::size_t> chart)
{
    auto binomial_with_one = [](const Polynomial& p) {
        return p.terms().size() == 2 && !p.constant_term().is_zero();
    };
    Method1Result res;
    bool found = false;
    if (chart) {
        res.chart = *chart;
        res.restriction = chart_restriction(fan, *chart, ray, invariant);
        if (!binomial_with_one(res.restriction))
            throw std::invalid_argument("restriction " + res.restriction.to_string() + " is not a binomial with constant term");
        found = true;
    } else {
        for (std::size_t c = 0; c < fan.cones.size() && !found; ++c) {
            if (!fan.cone_contains(c, ray)) continue;
            auto p = chart_restriction(fan, c, ray, invariant);
            if (binomial_with_one(p)) {
                res.chart = c;
                res.restriction = p;
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("no chart gives a binomial restriction");
    }
    const auto& tc = fan.cones[res.chart];
    std::size_t k = static_cast<std::size_t>(std::find(tc.begin(), tc.end(), ray) - tc.begin());
    Exponent e;
    for (const auto& [ex, c] : res.restriction.terms())
        if (std::any_of(ex.begin(), ex.end(), [](int x) { return x != 0; })) e = ex;
    for (std::size_t j = 0; j < e.size(); ++j)
        if (j != k) res.exponent.push_back(e[j]);
    res.kernel = integer_kernel(IntMatrix{res.exponent}, res.exponent.size());
    if (res.kernel.size() != 2) throw std::logic_error("kernel of exponent functional must have rank 2");

    // phi = kernel^T (3x2); preimage of each star cone is {u : C^{-1} phi u >= 0}
    RatMatrix phi(res.exponent.size(), RatVector(2));
    for (std::size_t i = 0; i < phi.size(); ++i)
        for (std::size_t j = 0; j < 2; ++j) phi[i][j] = Rational(res.kernel[j][i]);
    std::vector<IntVector> rays2;
    for (const auto& gens : star_in_chart(fan, ray, res.chart)) {
        IntMatrix C = columns(gens);
        if (determinant(C) == 0) continue;
        RatMatrix G = multiply(inverse(to_rational(C)), phi);
        for (std::size_t i = 0; i < G.size(); ++i) {
            RatVector d{-G[i][1], G[i][0]};
            for (int s : {1, -1}) {
                RatVector u{d[0] * s, d[1] * s};
                if (u[0] == 0 && u[1] == 0) continue;
                bool ok = true;
                for (const auto& row : G)
                    if (row[0] * u[0] + row[1] * u[1] < 0) ok = false;
                if (!ok) continue;
                Integer l = boost::multiprecision::lcm(denominator(u[0]), denominator(u[1]));
                rays2.push_back(primitive(IntVector{numerator(u[0] * Rational(l)), numerator(u[1] * Rational(l))}));
            }
        }
    }
    res.fan = make_fan2d(rays2);
    return res;
}

namespace {

std::size_t pick_chart(const Fan& fan, const std::vector<std::size_t>& need, std::optional<std::size_t> chart)
{
    if (chart) {
        for (auto r : need)
            if (!fan.cone_contains(*chart, r)) throw std::invalid_argument("chart does not contain the cone");
        return *chart;
    }
    for (std::size_t c = 0; c < fan.cones.size(); ++c)
        if (std::all_of(need.begin(), need.end(), [&](std::size_t r) { return fan.cone_contains(c, r); })) return c;
    throw std::invalid_argument("cone not in fan");
}

ProjectionResult project_star(const Fan& fan, const std::vector<std::size_t>& last, std::size_t chart)
{
    // M = [remaining rays of the chart, last...]; keep the rows of M^{-1} for the remaining ones
    ProjectionResult pr;
    pr.chart = chart;
    std::vector<IntVector> cols;
    for (auto i : fan.cones[chart])
        if (std::find(last.begin(), last.end(), i) == last.end()) cols.push_back(fan.rays[i]);
    std::size_t keep = cols.size();
    for (auto i : last) cols.push_back(fan.rays[i]);
    RatMatrix inv = inverse(to_rational(columns(cols)));
    pr.projection.assign(inv.begin(), inv.begin() + static_cast<long>(keep));
    std::set<IntVector> all;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) {
        if (!std::all_of(last.begin(), last.end(), [&](std::size_t r) { return fan.cone_contains(c, r); })) continue;
        ++pr.cone_count;
        std::set<IntVector> gens;
        for (auto i : fan.cones[c]) {
            if (std::find(last.begin(), last.end(), i) != last.end()) continue;
            gens.insert(primitive(to_integer(multiply(pr.projection, to_rational(IntMatrix{fan.rays[i]})[0]))));
        }
        all.insert(gens.begin(), gens.end());
        pr.cones.push_back(gens);
    }
    pr.rays.assign(all.begin(), all.end());
    if (keep == 2) sort_by_angle(pr.rays);
    return pr;
}

} // namespace

ProjectionResult orbit_closure_component(const Fan& fan, std::size_t r1, std::size_t r2, std::optional<std::size_t> chart)
{
    std::size_t c = pick_chart(fan, {r1, r2}, chart);
    return project_star(fan, {r2, r1}, c);
}

ProjectionResult star_fan(const Fan& fan, std::size_t ray, std::optional<std::size_t> chart)
{
    std::size_t c = pick_chart(fan, {ray}, chart);
    return project_star(fan, {ray}, c);
}

std::optional<PBundle> pbundle_structure(const Fan& fan, std::size_t ray, const std::vector<IntVector>& invariant,
                                         std::optional<std::size_t> chart)
{
    auto star = star_fan(fan, ray, chart);
    std::set<IntVector> rs(star.rays.begin(), star.rays.end());
    for (const auto& e : star.rays) {
        IntVector neg = e;
        for (auto& x : neg) x = -x;
        if (!rs.count(neg) || neg < e) continue;
        IntMatrix P = integer_kernel(IntMatrix{e}, e.size());
        std::vector<IntVector> base;
        for (const auto& v : star.rays) {
            if (v == e || v == neg) continue;
            base.push_back(multiply(P, v));
        }
        Fan2D b = make_fan2d(base);
        if (!b.complete || !b.smooth) continue;
        PBundle pb;
        pb.fiber = e;
        pb.base = b;
        for (std::size_t c = 0; c < fan.cones.size(); ++c)
            if (fan.cone_contains(c, ray))
                pb.restrictions.push_back({c, chart_restriction(fan, c, ray, invariant).to_string()});
        return pb;
    }
    return std::nullopt;
}

PolytopeNormalFan polytope_normal_fan(const std::vector<IntVector>& vertices)
{
    auto sub = [](const IntVector& a, const IntVector& b) {
        return IntVector{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    };
    auto cross3 = [](const IntVector& a, const IntVector& b) {
        return IntVector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    };
    auto dot3 = [](const IntVector& a, const IntVector& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
    std::set<IntVector> normals;
    std::vector<std::pair<IntVector, Integer>> facets; // n.x >= h
    std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                IntVector nv = cross3(sub(vertices[j], vertices[i]), sub(vertices[k], vertices[i]));
                if (nv == IntVector{0, 0, 0}) continue;
                for (int s : {1, -1}) {
                    IntVector m = nv;
                    for (auto& x : m) x *= s;
                    Integer h = dot3(m, vertices[i]);
                    if (std::all_of(vertices.begin(), vertices.end(), [&](const IntVector& v) { return dot3(m, v) >= h; })) {
                        IntVector p = primitive(m);
                        if (normals.insert(p).second) facets.push_back({p, dot3(p, vertices[i])});
                    }
                }
            }
    PolytopeNormalFan out;
    out.normals.assign(normals.begin(), normals.end());
    IntVector lo = vertices[0], hi = vertices[0];
    for (const auto& v : vertices)
        for (int c = 0; c < 3; ++c) {
            lo[c] = std::min(lo[c], v[c]);
            hi[c] = std::max(hi[c], v[c]);
        }
    for (Integer x = lo[0]; x <= hi[0]; ++x)
        for (Integer y = lo[1]; y <= hi[1]; ++y)
            for (Integer z = lo[2]; z <= hi[2]; ++z) {
                IntVector p{x, y, z};
                if (std::all_of(facets.begin(), facets.end(), [&](const auto& f) { return dot3(f.first, p) >= f.second; }))
                    ++out.lattice_points;
            }
    return out;
}

std::vector<ComponentRecord> load_components(std::istream& in)
{
    std::vector<ComponentRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto toks = split_ws(line);
        auto where = "components line " + std::to_string(lineno) + ": ";
        if (toks.size() < 4) throw std::runtime_error(where + "expected label ray type chi");
        ComponentRecord rec;
        rec.label = toks[0];
        rec.ray = parse_int_vector(toks[1]);
        rec.type = toks[2];
        rec.chi = std::stoll(toks[3]);
        for (std::size_t i = 4; i < toks.size(); ++i) {
            const auto& t = toks[i];
            if (t.rfind("locus=", 0) == 0) {
                std::string v = t.substr(6);
                if (v == "generic") {
                    rec.locus = ComponentRecord::Locus::Generic;
                } else if (v.rfind("factor:", 0) == 0) {
                    rec.locus = ComponentRecord::Locus::Factor;
                    auto s = v.substr(7);
                    auto slash = s.find('/');
                    if (slash == std::string::npos) throw std::runtime_error(where + "factor needs k/n");
                    rec.factor = std::stoi(s.substr(0, slash));
                    rec.factors = std::stoi(s.substr(slash + 1));
                } else if (v.rfind("orbit:", 0) == 0) {
                    rec.locus = ComponentRecord::Locus::Orbit;
                    rec.partner = parse_int_vector(v.substr(6));
                } else {
                    throw std::runtime_error(where + "unknown locus " + v);
                }
            } else if (t.rfind("chart=", 0) == 0) {
                long long c = std::stoll(t.substr(6));
                if (c < 1) throw std::runtime_error(where + "chart is 1-based");
                rec.chart = static_cast<std::size_t>(c - 1);
            } else {
                throw std::runtime_error(where + "unknown token " + t);
            }
        }
        out.push_back(rec);
    }
    return out;
}

std::vector<ComponentRecord> load_components_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_components(in);
}

namespace {

struct LocalData {
    std::vector<int> zeros;
    std::optional<Polynomial> poly;
};

std::optional<LocalData> local_data(const Fan& fan, const ComponentRecord& comp, std::size_t cone, const Polynomial& ft)
{
    const auto& c = fan.cones[cone];
    auto pos = [&](const IntVector& r) -> int {
        for (std::size_t k = 0; k < c.size(); ++k)
            if (fan.rays[c[k]] == r) return static_cast<int>(k);
        return -1;
    };
    int k = pos(comp.ray);
    if (k < 0) return std::nullopt;
    if (comp.locus == ComponentRecord::Locus::Orbit) {
        int k2 = pos(comp.partner);
        if (k2 < 0) return std::nullopt;
        return LocalData{{k, k2}, std::nullopt};
    }
    Polynomial fb = ft.set_zero({k});
    if (fb.is_zero()) return std::nullopt;
    Polynomial g = fb.strip_monomial_content();
    if (g.is_constant()) return std::nullopt;
    return LocalData{{k}, g};
}

} // namespace

IntersectionComplex intersection_complex(const Fan& fan, const std::vector<ComponentRecord>& comps,
                                         const std::vector<IntVector>& invariant)
{
    std::vector<Polynomial> ft;
    for (std::size_t c = 0; c < fan.cones.size(); ++c) ft.push_back(strict_transform(fan, c, invariant));

    IntersectionComplex ic;
    auto meets = [&](const std::vector<int>& S) {
        // distinct factors of one split divisor are disjoint
        for (std::size_t a = 0; a < S.size(); ++a)
            for (std::size_t b = a + 1; b < S.size(); ++b) {
                const auto& x = comps[static_cast<std::size_t>(S[a])];
                const auto& y = comps[static_cast<std::size_t>(S[b])];
                if (x.locus == ComponentRecord::Locus::Factor && y.locus == ComponentRecord::Locus::Factor &&
                    x.ray == y.ray && x.factor != y.factor)
                    return false;
            }
        bool undetermined = false;
        for (std::size_t c = 0; c < fan.cones.size(); ++c) {
            std::vector<LocalData> L;
            bool present = true;
            for (int i : S) {
                auto d = local_data(fan, comps[static_cast<std::size_t>(i)], c, ft[c]);
                if (!d) {
                    present = false;
                    break;
                }
                L.push_back(*d);
            }
            if (!present) continue;
            std::vector<int> Z;
            for (const auto& d : L) Z.insert(Z.end(), d.zeros.begin(), d.zeros.end());
            bool ok = true;
            std::set<std::string> polys;
            for (const auto& d : L) {
                if (!d.poly) continue;
                Polynomial q = d.poly->set_zero(Z);
                if (q.is_zero()) continue;
                if (q.is_constant()) {
                    ok = false;
                    break;
                }
                polys.insert(q.strip_monomial_content().to_string());
            }
            if (!ok) continue;
            if (polys.size() >= 2) {
                undetermined = true;
                continue;
            }
            return true;
        }
        if (undetermined) {
            std::vector<int> lab;
            for (int i : S) lab.push_back(i + 1);
            ic.undetermined.push_back(lab);
        }
        return false;
    };

    int n = static_cast<int>(comps.size());
    if (n > kMaxLabel) throw std::invalid_argument("too many components");
    std::vector<Face> faces;
    for (int i = 0; i < n; ++i) faces.push_back(make_face({i + 1}));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (meets({i, j})) {
                ic.edges.push_back({i + 1, j + 1});
                faces.push_back(make_face({i + 1, j + 1}));
            }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (meets({i, j, k})) {
                    ic.triangles.push_back({i + 1, j + 1, k + 1});
                    faces.push_back(make_face({i + 1, j + 1, k + 1}));
                }
    ic.complex = SimplicialComplex::from_faces(faces);
    return ic;
}

long long euler_exceptional(const std::vector<ComponentRecord>& comps, const IntersectionComplex& ic)
{
    long long s = 0;
    for (const auto& c : comps) s += c.chi;
    return s - 2 * static_cast<long long>(ic.edges.size()) + static_cast<long long>(ic.triangles.size());
}

long long open_part_euler(const MirrorEulerInput& in)
{
    if (in.group_order <= 0) throw std::invalid_argument("group order must be positive");
    long long num = in.chi_smooth + in.n_sing * in.milnor - in.n_fixed;
    if (num % in.group_order != 0)
        throw std::invalid_argument("chi_smooth + n_sing*milnor - n_fixed = " + std::to_string(num) +
                                    " is not divisible by " + std::to_string(in.group_order));
    return num / in.group_order;
}

long long mirror_euler(const MirrorEulerInput& in)
{
    return open_part_euler(in) + in.n_E_points * in.chi_E + in.n_mckay_points * in.mckay;
}

} // namespace srcy
