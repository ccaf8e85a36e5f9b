#include "srcy/intmat.hpp"

#include <stdexcept>
#include <utility>

namespace srcy {

using boost::multiprecision::abs;

IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix I(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

IntMatrix transpose(const IntMatrix& A)
{
    if (A.empty()) return {};
    IntMatrix T(A[0].size(), IntVector(A.size()));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A[i].size(); ++j) T[j][i] = A[i][j];
    return T;
}

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B)
{
    if (A.empty()) return {};
    std::size_t n = B.empty() ? 0 : B[0].size();
    IntMatrix C(A.size(), IntVector(n, 0));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t k = 0; k < B.size(); ++k) {
            if (A[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

IntVector multiply(const IntMatrix& A, const IntVector& x)
{
    IntVector y(A.size(), 0);
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += A[i][j] * x[j];
    return y;
}

namespace {

void swap_rows(IntMatrix& M, std::size_t a, std::size_t b) { std::swap(M[a], M[b]); }

void swap_cols(IntMatrix& M, std::size_t a, std::size_t b)
{
    for (auto& row : M) std::swap(row[a], row[b]);
}

// row[a] -= q * row[b]
void sub_row(IntMatrix& M, std::size_t a, std::size_t b, const Integer& q)
{
    if (q == 0) return;
    for (std::size_t j = 0; j < M[a].size(); ++j) M[a][j] -= q * M[b][j];
}

void sub_col(IntMatrix& M, std::size_t a, std::size_t b, const Integer& q)
{
    if (q == 0) return;
    for (auto& row : M) row[a] -= q * row[b];
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& A)
{
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    SmithForm r;
    r.S = A;
    r.U = identity_matrix(m);
    r.V = identity_matrix(n);
    IntMatrix& S = r.S;

    const std::size_t lim = std::min(m, n);
    for (std::size_t t = 0; t < lim; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            bool found = false;
            std::size_t pi = t, pj = t;
            Integer best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (S[i][j] != 0 && (!found || abs(S[i][j]) < best)) {
                        found = true;
                        best = abs(S[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (!found) break;
            if (pi != t) {
                swap_rows(S, pi, t);
                swap_rows(r.U, pi, t);
            }
            if (pj != t) {
                swap_cols(S, pj, t);
                swap_cols(r.V, pj, t);
            }

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                Integer q = S[i][t] / S[t][t];
                sub_row(S, i, t, q);
                sub_row(r.U, i, t, q);
                if (S[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                Integer q = S[t][j] / S[t][t];
                sub_col(S, j, t, q);
                sub_col(r.V, j, t, q);
                if (S[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: fold an offending row into the pivot row
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (S[i][j] % S[t][t] != 0) {
                        sub_row(S, t, i, Integer(-1));
                        sub_row(r.U, t, i, Integer(-1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (S[t][t] < 0) {
            for (auto& x : S[t]) x = -x;
            for (auto& x : r.U[t]) x = -x;
        }
    }
    r.diagonal.resize(lim);
    for (std::size_t t = 0; t < lim; ++t) r.diagonal[t] = S[t][t];
    return r;
}

IntMatrix hermite_normal_form(const IntMatrix& A)
{
    IntMatrix H = A;
    const std::size_t m = H.size();
    const std::size_t n = m ? H[0].size() : 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        // Euclid down the column until a single nonzero remains at `row`
        for (;;) {
            std::size_t piv = m;
            for (std::size_t i = row; i < m; ++i)
                if (H[i][col] != 0 && (piv == m || abs(H[i][col]) < abs(H[piv][col]))) piv = i;
            if (piv == m) break;
            std::swap(H[row], H[piv]);
            bool done = true;
            for (std::size_t i = row + 1; i < m; ++i) {
                if (H[i][col] == 0) continue;
                sub_row(H, i, row, H[i][col] / H[row][col]);
                if (H[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (H[row][col] == 0) continue;
        if (H[row][col] < 0)
            for (auto& x : H[row]) x = -x;
        for (std::size_t i = 0; i < row; ++i) sub_row(H, i, row, floor_div(H[i][col], H[row][col]));
        ++row;
    }
    H.resize(row);
    return H;
}

IntMatrix integer_kernel(const IntMatrix& A, std::size_t ncols)
{
    if (A.empty()) return hermite_normal_form(identity_matrix(ncols));
    SmithForm sf = smith_normal_form(A);
    std::size_t r = 0;
    for (const auto& d : sf.diagonal)
        if (d != 0) ++r;
    // columns r.. of V span the kernel
    IntMatrix K;
    for (std::size_t j = r; j < ncols; ++j) {
        IntVector v(ncols);
        for (std::size_t i = 0; i < ncols; ++i) v[i] = sf.V[i][j];
        K.push_back(std::move(v));
    }
    return hermite_normal_form(K);
}

Integer determinant(const IntMatrix& A)
{
    // fraction-free Bareiss elimination
    const std::size_t n = A.size();
    if (n == 0) return 1;
    IntMatrix M = A;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && M[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

RatMatrix to_rational(const IntMatrix& A)
{
    RatMatrix R(A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        for (const auto& x : A[i]) R[i].emplace_back(x);
    return R;
}

std::size_t rank(const RatMatrix& A)
{
    RatMatrix M = A;
    const std::size_t m = M.size();
    const std::size_t n = m ? M[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && M[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(M[p], M[r]);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (M[i][c] == 0) continue;
            Rational f = M[i][c] / M[r][c];
            for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[r][j];
        }
        ++r;
    }
    return r;
}

RatMatrix inverse(const RatMatrix& A)
{
    const std::size_t n = A.size();
    RatMatrix M = A;
    RatMatrix I(n, RatVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        std::swap(M[p], M[c]);
        std::swap(I[p], I[c]);
        Rational piv = M[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            M[c][j] /= piv;
            I[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || M[i][c] == 0) continue;
            Rational f = M[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                M[i][j] -= f * M[c][j];
                I[i][j] -= f * I[c][j];
            }
        }
    }
    return I;
}

RatMatrix multiply(const RatMatrix& A, const RatMatrix& B)
{
    if (A.empty()) return {};
    std::size_t n = B.empty() ? 0 : B[0].size();
    RatMatrix C(A.size(), RatVector(n, 0));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t k = 0; k < B.size(); ++k)
            for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
}

RatVector multiply(const RatMatrix& A, const RatVector& x)
{
    RatVector y(A.size(), 0);
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += A[i][j] * x[j];
    return y;
}

Integer gcd_of(const IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
    return g;
}

IntVector primitive(const IntVector& v)
{
    Integer g = gcd_of(v);
    if (g == 0) return v;
    IntVector r;
    for (const auto& x : v) r.push_back(x / g);
    return r;
}

} // namespace srcy
