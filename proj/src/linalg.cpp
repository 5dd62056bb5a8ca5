#include "quatring/linalg.hpp"

#include <algorithm>

namespace quatring {

qmat qmat_identity(int n) {
    qmat m(n, qvec(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

qmat qmat_mul(const qmat& a, const qmat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    qmat c(n, qvec(m, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw internal_error("qmat_mul: shape mismatch");
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t l = 0; l < m; ++l) c[i][l] += a[i][j] * b[j][l];
        }
    }
    return c;
}

qmat qmat_transpose(const qmat& a) {
    size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    qmat t(m, qvec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

qvec row_times_mat(const qvec& x, const qmat& a) {
    size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    if (x.size() != n) throw internal_error("row_times_mat: shape mismatch");
    qvec y(m, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < m; ++j) y[j] += x[i] * a[i][j];
    }
    return y;
}

Rat qmat_det(qmat a) {
    size_t n = a.size();
    Rat det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

std::vector<int> rref(qmat& a) {
    std::vector<int> pivots;
    size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        Rat inv = 1 / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t k = 0; k < rows; ++k) {
            if (k == r || a[k][c] == 0) continue;
            Rat f = a[k][c];
            for (size_t j = c; j < cols; ++j) a[k][j] -= f * a[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

qmat qmat_inverse(const qmat& a) {
    size_t n = a.size();
    qmat aug(n, qvec(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw internal_error("qmat_inverse: not square");
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (piv.size() != n || piv.back() != static_cast<int>(n - 1))
        throw qerror("singular", "matrix is singular");
    for (size_t i = 0; i < n; ++i)
        if (piv[i] != static_cast<int>(i)) throw qerror("singular", "matrix is singular");
    qmat inv(n, qvec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

namespace {

qvec make_primitive(qvec v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, x.get_den());
    Int g = 0;
    for (auto& x : v) {
        x *= Rat(l);
        x.canonicalize();
        g = gcd(g, x.get_num());
    }
    if (g > 1)
        for (auto& x : v) {
            x /= Rat(g);
            x.canonicalize();
        }
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

}  // namespace

std::vector<qvec> kernel_basis(const qmat& a) {
    size_t cols = a.empty() ? 0 : a[0].size();
    qmat m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<qvec> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        qvec x(cols, Rat(0));
        x[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][f];
        basis.push_back(make_primitive(std::move(x)));
    }
    return basis;
}

std::optional<qvec> solve(const qmat& a, const qvec& b) {
    size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    if (b.size() != rows) throw internal_error("solve: shape mismatch");
    qmat aug(rows, qvec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    qvec x(cols, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

zmat hnf(zmat rows) {
    size_t nrows = rows.size(), cols = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < nrows; ++c) {
        // gcd-reduce column c over rows >= r
        for (;;) {
            size_t best = nrows;
            for (size_t k = r; k < nrows; ++k) {
                if (rows[k][c] == 0) continue;
                if (best == nrows ||
                    mpz_cmpabs(rows[k][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0)
                    best = k;
            }
            if (best == nrows) break;
            std::swap(rows[best], rows[r]);
            bool clean = true;
            for (size_t k = r + 1; k < nrows; ++k) {
                if (rows[k][c] == 0) continue;
                Int q = rows[k][c] / rows[r][c];  // truncated division
                if (q != 0)
                    for (size_t j = 0; j < cols; ++j) rows[k][j] -= q * rows[r][j];
                if (rows[k][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (size_t j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
        for (size_t k = 0; k < r; ++k) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[k][c].get_mpz_t(), rows[r][c].get_mpz_t());
            if (q != 0)
                for (size_t j = 0; j < cols; ++j) rows[k][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

bool hnf_contains(const zmat& h, zvec v) {
    size_t cols = v.size();
    size_t r = 0;
    for (size_t c = 0; c < cols; ++c) {
        bool pivot_here = r < h.size() && [&] {
            for (size_t j = 0; j < c; ++j)
                if (h[r][j] != 0) return false;
            return h[r][c] != 0;
        }();
        if (pivot_here) {
            if (!mpz_divisible_p(v[c].get_mpz_t(), h[r][c].get_mpz_t())) return false;
            Int q = v[c] / h[r][c];
            if (q != 0)
                for (size_t j = 0; j < cols; ++j) v[j] -= q * h[r][j];
            ++r;
        } else if (v[c] != 0) {
            return false;
        }
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Int zmat_det(zmat a) {
    // Bareiss fraction-free elimination
    size_t n = a.size();
    if (n == 0) return Int(1);
    Int prev = 1;
    int sign = 1;
    for (size_t c = 0; c + 1 < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return Int(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            sign = -sign;
        }
        for (size_t r = c + 1; r < n; ++r) {
            for (size_t j = c + 1; j < n; ++j) {
                Int t = a[r][j] * a[c][c] - a[r][c] * a[c][j];
                mpz_divexact(a[r][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[c][c];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

zvec row_times_zmat(const zvec& x, const zmat& a) {
    size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    if (x.size() != n) throw internal_error("row_times_zmat: shape mismatch");
    zvec y(m, Int(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) y[j] += x[i] * a[i][j];
    return y;
}

zmat unimodular_with_first_row(const zvec& c) {
    size_t n = c.size();
    // column-reduce c to (+-g, 0, ..., 0), tracking the operations in v
    zmat v(n, zvec(n, Int(0)));
    for (size_t i = 0; i < n; ++i) v[i][i] = 1;
    zvec w = c;
    for (size_t k = 1; k < n; ++k) {
        if (w[k] == 0) continue;
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), w[0].get_mpz_t(), w[k].get_mpz_t());
        Int u0 = w[0] / g, uk = w[k] / g;
        for (size_t i = 0; i < n; ++i) {
            Int col0 = v[i][0], colk = v[i][k];
            v[i][0] = s * col0 + t * colk;
            v[i][k] = -uk * col0 + u0 * colk;
        }
        w[0] = g;
        w[k] = 0;
    }
    if (w[0] == -1) {
        for (size_t i = 0; i < n; ++i) v[i][0] = -v[i][0];
        w[0] = 1;
    }
    if (w[0] != 1) throw qerror("not_primitive", "vector is not primitive");
    return unimodular_inverse(v);
}

zmat unimodular_inverse(const zmat& u) {
    size_t n = u.size();
    qmat q(n, qvec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) q[i][j] = Rat(u[i][j]);
    qmat inv = qmat_inverse(q);
    zmat out(n, zvec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (inv[i][j].get_den() != 1)
                throw internal_error("unimodular_inverse: determinant is not a unit");
            out[i][j] = inv[i][j].get_num();
        }
    return out;
}

}  // namespace quatring
