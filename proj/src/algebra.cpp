#include "quatring/algebra.hpp"

#include <algorithm>
#include <string>

namespace quatring {

namespace {

std::string triple(int i, int j, int k) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
           std::to_string(k + 1) + ")";
}

}  // namespace

mult_table mult_table::create(int n, std::vector<Rat> constants) {
    if (n < 2 || n > 8) throw qerror("bad_dimension", "table dimension must be in [2, 8]");
    if (constants.size() != static_cast<size_t>(n) * n * n)
        throw qerror("bad_table", "expected " + std::to_string(n * n * n) + " structure constants");
    mult_table b(n, std::move(constants));
    // e_1 must act as a two-sided identity
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            Rat expect = (j == k) ? 1 : 0;
            if (b.c(0, j, k) != expect || b.c(j, 0, k) != expect)
                throw qerror("bad_identity", "e_1 is not a two-sided identity");
        }
    // associativity on all basis triples
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            qvec eij = b.multiply(b.basis_element(i), b.basis_element(j));
            for (int k = 0; k < n; ++k) {
                qvec lhs = b.multiply(eij, b.basis_element(k));
                qvec rhs = b.multiply(b.basis_element(i),
                                      b.multiply(b.basis_element(j), b.basis_element(k)));
                if (lhs != rhs)
                    throw qerror("not_associative", "associativity violated at " + triple(i, j, k));
            }
        }
    return b;
}

mult_table mult_table::create_with_recovered_identity(int n, std::vector<Rat> constants) {
    if (n < 2 || n > 8) throw qerror("bad_dimension", "table dimension must be in [2, 8]");
    if (constants.size() != static_cast<size_t>(n) * n * n)
        throw qerror("bad_table", "expected " + std::to_string(n * n * n) + " structure constants");
    mult_table raw(n, std::move(constants));
    // solve u e_j = e_j and e_j u = e_j for all j
    qmat sys;
    qvec rhs;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            qvec left(n), right(n);
            for (int i = 0; i < n; ++i) {
                left[i] = raw.c(i, j, k);
                right[i] = raw.c(j, i, k);
            }
            sys.push_back(left);
            rhs.push_back(j == k ? Rat(1) : Rat(0));
            sys.push_back(right);
            rhs.push_back(j == k ? Rat(1) : Rat(0));
        }
    auto u = solve(sys, rhs);
    if (!u) throw qerror("no_identity", "table has no two-sided identity");
    // complete u to a basis with standard vectors, greedily keeping full rank
    qmat p = {*u};
    for (int i = 0; i < n && static_cast<int>(p.size()) < n; ++i) {
        qmat trial = p;
        qvec e(n, Rat(0));
        e[i] = 1;
        trial.push_back(e);
        qmat probe = trial;
        if (static_cast<int>(rref(probe).size()) == static_cast<int>(trial.size())) p = trial;
    }
    if (static_cast<int>(p.size()) != n) throw internal_error("identity recovery: basis completion failed");
    return change_basis(raw, p);
}

qvec mult_table::multiply(const qvec& x, const qvec& y) const {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
        throw qerror("table_mismatch", "element length does not match table dimension");
    qvec z(n_, Rat(0));
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (y[j] == 0) continue;
            Rat f = x[i] * y[j];
            for (int k = 0; k < n_; ++k) {
                const Rat& cc = c(i, j, k);
                if (cc != 0) z[k] += f * cc;
            }
        }
    }
    return z;
}

qvec mult_table::one() const {
    qvec e(n_, Rat(0));
    e[0] = 1;
    return e;
}

qvec mult_table::basis_element(int i) const {
    qvec e(n_, Rat(0));
    e[i] = 1;
    return e;
}

bool mult_table::is_scalar(const qvec& x) const {
    for (int i = 1; i < n_; ++i)
        if (x[i] != 0) return false;
    return true;
}

Rat std_involution::trd(const qvec& x) const {
    Rat v = 2 * x[0];
    for (int i = 1; i < n; ++i) v += t[i] * x[i];
    return v;
}

Rat std_involution::nrd(const qvec& x) const {
    // n_xi = sum n_i x_i^2 + sum (n_ij - n_i - n_j) x_i x_j with n_1 = 1 and
    // the cross terms against x_1 reducing to t_j x_1 x_j
    Rat v = x[0] * x[0];
    for (int i = 1; i < n; ++i) {
        v += nval[i] * x[i] * x[i] + t[i] * x[0] * x[i];
        for (int j = i + 1; j < n; ++j) v += (nij[i][j] - nval[i] - nval[j]) * x[i] * x[j];
    }
    return v;
}

qvec std_involution::conj(const qvec& x) const {
    qvec y(n);
    Rat tr = trd(x);
    y[0] = tr - x[0];
    for (int i = 1; i < n; ++i) y[i] = -x[i];
    return y;
}

quad_form std_involution::nrd_form() const {
    quad_form f = quad_form::zero(n);
    f.q[0] = 1;
    for (int i = 1; i < n; ++i) {
        f.q[i] = nval[i];
        f.set_t(0, i, t[i]);
        for (int j = i + 1; j < n; ++j) f.set_t(i, j, nij[i][j] - nval[i] - nval[j]);
    }
    return f;
}

Rat std_involution::bilinear(const qvec& x, const qvec& y) const {
    qvec s(n);
    for (int i = 0; i < n; ++i) s[i] = x[i] + y[i];
    return nrd(s) - nrd(x) - nrd(y);
}

std::optional<std_involution> has_standard_involution(const mult_table& b, trace_log* tr) {
    const int n = b.dim();
    std_involution data;
    data.n = n;
    data.t.assign(n, Rat(0));
    data.nval.assign(n, Rat(0));
    data.nij.assign(n, std::vector<Rat>(n, Rat(0)));

    trace_step(tr, "deg2.step1");
    for (int i = 1; i < n; ++i) {
        qvec sq = b.multiply(b.basis_element(i), b.basis_element(i));
        data.t[i] = sq[i];
        // n_i = t_i e_i - e_i^2 must be scalar
        qvec ni(n);
        for (int k = 0; k < n; ++k) ni[k] = -sq[k];
        ni[i] += data.t[i];
        if (!b.is_scalar(ni)) return std::nullopt;
        data.nval[i] = ni[0];
    }
    trace_step(tr, "deg2.step2");
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            qvec s(n, Rat(0));
            s[i] = 1;
            s[j] = 1;
            qvec sq = b.multiply(s, s);
            qvec nij(n);
            Rat tij = data.t[i] + data.t[j];
            for (int k = 0; k < n; ++k) nij[k] = -sq[k] + tij * s[k];
            if (!b.is_scalar(nij)) return std::nullopt;
            data.nij[i][j] = nij[0];
        }
    return data;
}

std::vector<qvec> center(const mult_table& b) {
    const int n = b.dim();
    // x e_j = e_j x: for each j, k the k-coordinate gives a linear condition
    qmat sys;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            qvec row(n);
            for (int i = 0; i < n; ++i) row[i] = b.c(i, j, k) - b.c(j, i, k);
            sys.push_back(row);
        }
    return kernel_basis(sys);
}

std::vector<qvec> jacobson_radical(const mult_table& b) {
    if (b.dim() != 4) throw qerror("bad_dimension", "jacobson_radical expects a rank-4 algebra");
    auto inv = has_standard_involution(b);
    if (!inv) throw qerror("no_standard_involution", "algebra has no standard involution");
    return radical(inv->nrd_form());
}

mult_table change_basis(const mult_table& b, const qmat& p) {
    const int n = b.dim();
    if (static_cast<int>(p.size()) != n) throw qerror("bad_table", "basis size mismatch");
    qmat pinv = qmat_inverse(p);
    std::vector<Rat> constants(static_cast<size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            qvec prod = b.multiply(p[i], p[j]);
            qvec coords = row_times_mat(prod, pinv);
            for (int k = 0; k < n; ++k) constants[(i * n + j) * n + k] = coords[k];
        }
    return mult_table::create(n, std::move(constants));
}

}  // namespace quatring
