#include "quatring/quadform.hpp"

#include <algorithm>

namespace quatring {

local_ring local_ring::at_prime(const Int& p) {
    if (!is_prime(p)) throw qerror("not_prime", "local ring: " + p.get_str() + " is not prime");
    return local_ring{false, p};
}

long local_ring::ord(const Rat& x) const {
    if (x == 0) return ord_infinity;
    if (field) return 0;
    return ord_v(x, place{false, p});
}

Rat local_ring::pi_pow(long e) const {
    if (field || e == 0) return Rat(1);
    Int v;
    mpz_pow_ui(v.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return Rat(v);
}

quad_form quad_form::zero(int rank) {
    quad_form f;
    f.rank = rank;
    f.q.assign(rank, Rat(0));
    f.t.assign(rank, std::vector<Rat>(rank, Rat(0)));
    return f;
}

quad_form quad_form::diagonal(const std::vector<Rat>& d) {
    quad_form f = zero(static_cast<int>(d.size()));
    f.q = d;
    return f;
}

const Rat& quad_form::tval(int i, int j) const {
    return i < j ? t[i][j] : t[j][i];
}

void quad_form::set_t(int i, int j, const Rat& v) {
    if (i == j) throw internal_error("set_t: diagonal");
    if (i < j)
        t[i][j] = v;
    else
        t[j][i] = v;
}

Rat quad_form::gram(int i, int j) const {
    if (i == j) return 2 * q[i];
    return tval(i, j);
}

qmat quad_form::gram_matrix() const {
    qmat g(rank, qvec(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) g[i][j] = gram(i, j);
    return g;
}

Rat quad_form::eval(const qvec& x) const {
    if (static_cast<int>(x.size()) != rank) throw internal_error("quad_form::eval: rank mismatch");
    Rat v = 0;
    for (int i = 0; i < rank; ++i) {
        if (x[i] == 0) continue;
        v += q[i] * x[i] * x[i];
        for (int j = i + 1; j < rank; ++j) v += t[i][j] * x[i] * x[j];
    }
    return v;
}

Rat quad_form::bilinear(const qvec& x, const qvec& y) const {
    Rat v = 0;
    for (int i = 0; i < rank; ++i) {
        v += 2 * q[i] * x[i] * y[i];
        for (int j = i + 1; j < rank; ++j) v += t[i][j] * (x[i] * y[j] + x[j] * y[i]);
    }
    return v;
}

bool quad_form::operator==(const quad_form& o) const {
    if (rank != o.rank || q != o.q) return false;
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            if (t[i][j] != o.t[i][j]) return false;
    return true;
}

void quad_form::check_integral(const local_ring& r) const {
    if (r.field) return;
    for (int i = 0; i < rank; ++i) {
        if (q[i] != 0 && r.ord(q[i]) < 0)
            throw qerror("not_integral", "form value Q(e_" + std::to_string(i + 1) + ") is not integral");
        for (int j = i + 1; j < rank; ++j)
            if (t[i][j] != 0 && r.ord(t[i][j]) < 0)
                throw qerror("not_integral", "bilinear value T(e_i,e_j) is not integral");
    }
}

quad_form normal_decomp::block_form() const {
    int n = 0;
    for (const auto& b : blocks) n += b.size();
    quad_form f = quad_form::zero(n);
    int at = 0;
    for (const auto& b : blocks) {
        if (!b.binary) {
            f.q[at] = (b.e == ord_infinity) ? Rat(0) : b.u * ring.pi_pow(b.e);
            at += 1;
        } else {
            Rat s = ring.pi_pow(b.e);
            f.q[at] = b.a * s;
            f.q[at + 1] = b.c * s;
            f.set_t(at, at + 1, b.b * s);
            at += 2;
        }
    }
    return f;
}

namespace {

/* quotient must lie in the ring; failing that indicates a bug */
void check_ring_division(const local_ring& r, const Rat& quot) {
    if (quot != 0 && r.ord(quot) < 0)
        throw internal_error("normalize: division left the ring");
}

}  // namespace

normal_decomp normalize(const quad_form& f, const local_ring& r, trace_log* tr) {
    f.check_integral(r);
    const int n = f.rank;

    // current basis vectors, rows in input coordinates
    qmat v = qmat_identity(n);
    qmat out;
    std::vector<atom_block> blocks;

    auto T = [&](const qvec& x, const qvec& y) { return f.bilinear(x, y); };
    auto Q = [&](const qvec& x) { return f.eval(x); };

    int s = 0;
    while (s < n) {
        // Step 1: locate the minimal valuation of T(e_i, e_j), i <= j,
        // preferring i = j, then smallest indices.
        trace_step(tr, "normalizequadform.step1");
        long m = ord_infinity;
        int bi = -1, bj = -1;
        bool diag_found = false;
        for (int i = s; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                long o = r.ord(T(v[i], v[j]));
                if (o == ord_infinity) continue;
                bool better;
                if (o < m)
                    better = true;
                else if (o > m)
                    better = false;
                else if ((i == j) != diag_found)
                    better = (i == j);
                else
                    better = false;  // earlier (i, j) in scan order wins ties
                if (better) {
                    m = o;
                    bi = i;
                    bj = j;
                    diag_found = (i == j);
                }
            }
        }
        if (bi < 0) {
            // T vanishes identically on the remaining span, so Q does too
            for (int k = s; k < n; ++k) {
                if (Q(v[k]) != 0) throw internal_error("normalize: zero T with nonzero Q");
                atom_block b;
                b.binary = false;
                b.e = ord_infinity;
                b.u = 0;
                blocks.push_back(b);
                out.push_back(v[k]);
            }
            break;
        }

        if (bi == bj) {
            // Step 2: unary split along a diagonal minimum
            trace_step(tr, "normalizequadform.step2");
            std::swap(v[s], v[bi]);
            qvec f1 = v[s];
            Rat tff = T(f1, f1);
            for (int k = s + 1; k < n; ++k) {
                Rat coef = T(f1, v[k]) / tff;
                check_ring_division(r, coef);
                if (coef != 0)
                    for (int c = 0; c < n; ++c) v[k][c] -= coef * f1[c];
            }
            Rat qf = Q(f1);
            atom_block b;
            b.binary = false;
            b.e = r.ord(qf);
            b.u = qf / r.pi_pow(b.e);
            blocks.push_back(b);
            out.push_back(f1);
            s += 1;
        } else if (r.half_in_ring()) {
            // Step 3: replace e_i by e_i + e_j (valid since 2 is a unit)
            trace_step(tr, "normalizequadform.step3");
            qvec f1(n);
            for (int c = 0; c < n; ++c) f1[c] = v[bi][c] + v[bj][c];
            std::swap(v[s], v[bi]);
            v[s] = f1;
            Rat tff = T(f1, f1);
            if (r.ord(tff) != m) throw internal_error("normalize: step 3 valuation drifted");
            for (int k = s + 1; k < n; ++k) {
                Rat coef = T(f1, v[k]) / tff;
                check_ring_division(r, coef);
                if (coef != 0)
                    for (int c = 0; c < n; ++c) v[k][c] -= coef * f1[c];
            }
            Rat qf = Q(f1);
            atom_block b;
            b.binary = false;
            b.e = r.ord(qf);
            b.u = qf / r.pi_pow(b.e);
            blocks.push_back(b);
            out.push_back(f1);
            s += 1;
        } else {
            // Step 4: dyadic binary block
            trace_step(tr, "normalizequadform.step4");
            Rat tij = T(v[bi], v[bj]);
            Rat scale = r.pi_pow(m) / tij;
            std::swap(v[s], v[bi]);
            std::swap(v[s + 1], v[bj]);
            for (int c = 0; c < n; ++c) v[s][c] *= scale;
            qvec f1 = v[s], f2 = v[s + 1];
            Rat a11 = T(f1, f1), a12 = T(f1, f2), a22 = T(f2, f2);
            Rat d = a11 * a22 - a12 * a12;
            for (int k = s + 2; k < n; ++k) {
                Rat tk = a12 * T(f2, v[k]) - a22 * T(f1, v[k]);
                Rat uk = a12 * T(f1, v[k]) - a11 * T(f2, v[k]);
                Rat ck1 = tk / d, ck2 = uk / d;
                check_ring_division(r, ck1);
                check_ring_division(r, ck2);
                for (int c = 0; c < n; ++c) v[k][c] += ck1 * f1[c] + ck2 * f2[c];
            }
            Rat qa = Q(f1), qb = a12, qc = Q(f2);
            if (r.ord(qa) > r.ord(qc)) {
                std::swap(f1, f2);
                std::swap(qa, qc);
            }
            long e = r.ord(qb);
            if (e > r.ord(qa) || e > r.ord(qc))
                throw internal_error("normalize: binary block valuation mismatch");
            Rat s_e = r.pi_pow(e);
            atom_block b;
            b.binary = true;
            b.e = e;
            b.a = qa / s_e;
            b.b = qb / s_e;
            b.c = qc / s_e;
            // atomic conditions: ord b < ord 2a <= ord 2c and ord(a) ord(b) = 0
            if (!(r.ord(b.b) == 0 && r.ord(2 * b.a) > 0 && r.ord(2 * b.a) <= r.ord(2 * b.c)))
                throw internal_error("normalize: block is not atomic");
            blocks.push_back(b);
            out.push_back(f1);
            out.push_back(f2);
            s += 2;
        }
        trace_step(tr, "normalizequadform.step5");
    }

    normal_decomp nd;
    nd.ring = r;
    nd.basis = std::move(out);
    nd.blocks = std::move(blocks);

    // valuations must be nondecreasing
    long last = 0;
    for (const auto& b : nd.blocks) {
        if (b.e < last) throw internal_error("normalize: block valuations decreased");
        last = b.e;
    }
    // base change must be invertible over the ring
    Rat det = qmat_det(nd.basis);
    if (det == 0 || (!r.field && r.ord(det) != 0))
        throw internal_error("normalize: base change not invertible over the ring");
    // transported form must equal the block form exactly
    quad_form tf = transport(f, qmat_transpose(nd.basis));
    if (!(tf == nd.block_form())) throw internal_error("normalize: transport mismatch");
    return nd;
}

std::vector<qvec> radical(const quad_form& f) {
    return kernel_basis(f.gram_matrix());
}

bool is_nonsingular(const quad_form& f) {
    return radical(f).empty();
}

quad_form transport(const quad_form& f, const qmat& p) {
    int n = f.rank;
    if (static_cast<int>(p.size()) != n) throw internal_error("transport: shape mismatch");
    if (qmat_det(p) == 0) throw qerror("singular", "transport: matrix is singular");
    std::vector<qvec> cols(n, qvec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cols[j][i] = p[i][j];
    quad_form g = quad_form::zero(n);
    for (int i = 0; i < n; ++i) {
        g.q[i] = f.eval(cols[i]);
        for (int j = i + 1; j < n; ++j) g.set_t(i, j, f.bilinear(cols[i], cols[j]));
    }
    return g;
}

}  // namespace quatring
