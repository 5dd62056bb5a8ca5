#include "quatring/orders.hpp"

#include <algorithm>
#include <numeric>

namespace quatring {

namespace {

struct lattice_data {
    Int den;
    zmat rows;
};

/* rational row spans -> canonical (den, HNF rows) with common content reduced */
lattice_data canonical_lattice(const std::vector<qvec>& rows) {
    Int den = 1;
    for (const auto& r : rows)
        for (const auto& x : r) den = lcm(den, x.get_den());
    zmat zrows;
    for (const auto& r : rows) {
        zvec v(4);
        for (int c = 0; c < 4; ++c) {
            Rat s = r[c] * den;
            s.canonicalize();
            v[c] = s.get_num();
        }
        zrows.push_back(std::move(v));
    }
    zrows = hnf(std::move(zrows));
    if (zrows.size() != 4) throw qerror("not_full_rank", "lattice does not have rank 4");
    Int g = den;
    for (const auto& r : zrows)
        for (const auto& x : r) g = gcd(g, x);
    if (g > 1) {
        den /= g;
        for (auto& r : zrows)
            for (auto& x : r) x /= g;
    }
    return {den, zrows};
}

qvec scale_vec(const qvec& x, const Rat& c) {
    qvec y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = c * x[i];
    return y;
}

qvec sub_vec(const qvec& x, const qvec& y) {
    qvec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

qvec quat_one() { return {Rat(1), Rat(0), Rat(0), Rat(0)}; }

bool integral_element(const quat_alg& alg, const qvec& x) {
    return quat_trd(x).get_den() == 1 && quat_nrd(alg, x).get_den() == 1;
}

/* close a starting lattice under multiplication */
order_z close_lattice(const quat_alg& alg, std::vector<qvec> rows, int max_rounds) {
    lattice_data cur = canonical_lattice(rows);
    for (int round = 0; round < max_rounds; ++round) {
        std::vector<qvec> next;
        std::array<qvec, 4> basis;
        for (int i = 0; i < 4; ++i) {
            qvec v(4);
            for (int c = 0; c < 4; ++c) v[c] = Rat(cur.rows[i][c], cur.den);
            for (auto& e : v) e.canonicalize();
            basis[i] = v;
            next.push_back(v);
        }
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) next.push_back(quat_mul(alg, basis[i], basis[j]));
        lattice_data grown = canonical_lattice(next);
        if (grown.den == cur.den && grown.rows == cur.rows)
            return order_z::create(alg, cur.den, cur.rows);
        cur = std::move(grown);
    }
    throw qerror("not_an_order", "lattice did not stabilize under multiplication");
}

}  // namespace

order_z order_z::create(const quat_alg& alg, const Int& den_in, zmat rows_in) {
    if (den_in <= 0) throw qerror("bad_argument", "order denominator must be positive");
    std::vector<qvec> rat_rows;
    for (const auto& r : rows_in) {
        if (r.size() != 4) throw qerror("bad_argument", "order rows must have length 4");
        qvec v(4);
        for (int c = 0; c < 4; ++c) {
            v[c] = Rat(r[c], den_in);
            v[c].canonicalize();
        }
        rat_rows.push_back(std::move(v));
    }
    lattice_data l = canonical_lattice(rat_rows);
    order_z o(alg, l.den, l.rows);
    if (!o.contains(quat_one())) throw qerror("no_identity", "order does not contain 1");
    for (int i = 0; i < 4; ++i) {
        qvec x = o.basis_element(i);
        if (!integral_element(alg, x))
            throw qerror("not_integral", "basis element has nonintegral trace or norm");
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!o.contains(quat_mul(alg, o.basis_element(i), o.basis_element(j))))
                throw qerror("not_closed", "lattice is not closed under multiplication");
    return o;
}

order_z order_z::from_rational_rows(const quat_alg& alg, const std::vector<qvec>& rows) {
    lattice_data l = canonical_lattice(rows);
    return create(alg, l.den, std::move(l.rows));
}

qvec order_z::basis_element(int i) const {
    qvec v(4);
    for (int c = 0; c < 4; ++c) {
        v[c] = Rat(rows_[i][c], den_);
        v[c].canonicalize();
    }
    return v;
}

bool order_z::contains(const qvec& x) const {
    zvec v(4);
    for (int c = 0; c < 4; ++c) {
        Rat s = x[c] * den_;
        s.canonicalize();
        if (s.get_den() != 1) return false;
        v[c] = s.get_num();
    }
    return hnf_contains(rows_, std::move(v));
}

bool order_z::contains_order(const order_z& other) const {
    for (int i = 0; i < 4; ++i)
        if (!contains(other.basis_element(i))) return false;
    return true;
}

Rat order_z::index_in(const order_z& sub) const {
    Int d_sub = abs(zmat_det(sub.rows_));
    Int d_sup = abs(zmat_det(rows_));
    Int den4_sub, den4_sup;
    mpz_pow_ui(den4_sub.get_mpz_t(), sub.den_.get_mpz_t(), 4);
    mpz_pow_ui(den4_sup.get_mpz_t(), den_.get_mpz_t(), 4);
    Rat idx = Rat(d_sub * den4_sup) / Rat(d_sup * den4_sub);
    idx.canonicalize();
    return idx;
}

quat_alg integralize(const quat_alg& alg) {
    auto red = [](const Rat& x) {
        Int m = x.get_num() * x.get_den();
        Int s = sqrad(abs(m));
        return m < 0 ? Rat(-s) : Rat(s);
    };
    return quat_alg(red(alg.a), red(alg.b));
}

order_z standard_order(const quat_alg& alg) {
    quat_alg ib = integralize(alg);
    zmat id(4, zvec(4, Int(0)));
    for (int i = 0; i < 4; ++i) id[i][i] = 1;
    return order_z::create(ib, 1, std::move(id));
}

order_z order_from_generators(const quat_alg& alg, const std::vector<qvec>& gens,
                              int max_rounds) {
    if (alg.a.get_den() != 1 || alg.b.get_den() != 1)
        throw qerror("bad_argument", "ambient algebra must have integer coefficients");
    std::vector<qvec> rows;
    for (int i = 0; i < 4; ++i) {
        qvec e(4, Rat(0));
        e[i] = 1;
        rows.push_back(e);
    }
    for (const auto& g : gens) {
        if (g.size() != 4) throw qerror("bad_argument", "generators must have length 4");
        if (!integral_element(alg, g))
            throw qerror("not_integral", "generator has nonintegral trace or norm");
        rows.push_back(g);
    }
    return close_lattice(alg, std::move(rows), max_rounds);
}

namespace {

order_z adjoin_elements(const order_z& o, const std::vector<qvec>& elems) {
    std::vector<qvec> rows;
    for (int i = 0; i < 4; ++i) rows.push_back(o.basis_element(i));
    for (const auto& e : elems) rows.push_back(e);
    return close_lattice(o.algebra(), std::move(rows), 20);
}

/* basis of the order of the shape 1, y2, y3, y4 */
std::array<qvec, 4> free_basis_starting_at_one(const order_z& o) {
    const zmat& h = o.rows();
    const Int& den = o.den();
    // solve c^T h = (den, 0, 0, 0) over Z; h is upper triangular with pivots
    // on the diagonal
    zvec target = {den, Int(0), Int(0), Int(0)};
    zvec c(4, Int(0));
    for (int col = 0; col < 4; ++col) {
        Int acc = target[col];
        for (int r = 0; r < col; ++r) acc -= c[r] * h[r][col];
        if (!mpz_divisible_p(acc.get_mpz_t(), h[col][col].get_mpz_t()))
            throw internal_error("free basis: 1 is not in the lattice");
        c[col] = acc / h[col][col];
    }
    Int g = gcd(gcd(abs(c[0]), abs(c[1])), gcd(abs(c[2]), abs(c[3])));
    if (g != 1) throw internal_error("free basis: coefficient vector is imprimitive");
    zmat u = unimodular_with_first_row(c);
    std::array<qvec, 4> out;
    for (int i = 0; i < 4; ++i) {
        zvec row = row_times_zmat(u[i], h);
        qvec v(4);
        for (int cc = 0; cc < 4; ++cc) {
            v[cc] = Rat(row[cc], den);
            v[cc].canonicalize();
        }
        out[i] = v;
    }
    if (out[0] != quat_one()) throw internal_error("free basis: first vector is not 1");
    return out;
}

Int rat_as_int(const Rat& x, const char* what) {
    if (x.get_den() != 1) throw internal_error(std::string(what) + ": expected an integer");
    return x.get_num();
}

}  // namespace

disc_data discriminant(const order_z& o) {
    const quat_alg& alg = o.algebra();
    qmat g(4, qvec(4));
    std::array<qvec, 4> x;
    for (int i = 0; i < 4; ++i) x[i] = o.basis_element(i);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g[i][j] = quat_trd(quat_mul(alg, x[i], x[j]));
    Rat det = qmat_det(g);
    Int disc = abs(rat_as_int(det, "discriminant"));
    if (!mpz_perfect_square_p(disc.get_mpz_t()))
        throw qerror("not_an_order", "discriminant is not a perfect square");
    Int reduced;
    mpz_sqrt(reduced.get_mpz_t(), disc.get_mpz_t());
    // cross-check: d(O) = |trd((y2 y3 - y3 y2) conj(y4))| on a free basis 1, y2, y3, y4
    auto fb = free_basis_starting_at_one(o);
    qvec comm = sub_vec(quat_mul(alg, fb[1], fb[2]), quat_mul(alg, fb[2], fb[1]));
    Rat wedge = quat_trd(quat_mul(alg, comm, quat_conj(fb[3])));
    if (abs(rat_as_int(wedge, "discriminant wedge")) != reduced)
        throw internal_error("discriminant: wedge route disagrees with the Gram route");
    return {disc, reduced};
}

bool is_maximal(const order_z& o) {
    return discriminant(o).reduced == algebra_discriminant(o.algebra());
}

saturated_order p_saturate(const order_z& o, const Int& p, trace_log* tr) {
    const quat_alg& alg = o.algebra();
    local_ring r = local_ring::at_prime(p);

    trace_step(tr, "computesaturatedorder.step1");
    auto basis = free_basis_starting_at_one(o);

    quad_form f = quad_form::zero(4);
    for (int i = 0; i < 4; ++i) f.q[i] = quat_nrd(alg, basis[i]);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            qvec s(4);
            for (int c = 0; c < 4; ++c) s[c] = basis[i][c] + basis[j][c];
            f.set_t(i, j, quat_nrd(alg, s) - f.q[i] - f.q[j]);
        }

    trace_step(tr, "computesaturatedorder.step2");
    auto nd = normalize(f, r, tr);

    std::array<qvec, 4> g;
    for (int row = 0; row < 4; ++row) {
        qvec v(4, Rat(0));
        for (int s = 0; s < 4; ++s)
            for (int c = 0; c < 4; ++c) v[c] += nd.basis[row][s] * basis[s][c];
        g[row] = v;
    }
    // the output basis keeps a p-unit multiple of 1 in front
    if (g[0][1] != 0 || g[0][2] != 0 || g[0][3] != 0 || r.ord(g[0][0]) != 0)
        throw internal_error("p_saturate: normalization moved 1");
    g[0] = quat_one();
    // clear away-from-p denominators so the basis lies in the order
    for (int row = 1; row < 4; ++row) {
        Int d = 1;
        for (int s = 0; s < 4; ++s) d = lcm(d, nd.basis[row][s].get_den());
        if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
            throw internal_error("p_saturate: denominator is divisible by p");
        if (d != 1) g[row] = scale_vec(g[row], Rat(d));
    }

    trace_step(tr, "computesaturatedorder.step3");
    // rescale each atomic block by pi^{-floor(e/2)}
    struct block_group {
        atom_block block;
        std::vector<qvec> vecs;
    };
    std::vector<block_group> groups;
    int at = 0;
    for (const auto& b : nd.blocks) {
        if (b.e == ord_infinity)
            throw qerror("singular_norm", "norm form is singular; not a quaternion order");
        block_group grp;
        grp.block = b;
        for (int s = 0; s < b.size(); ++s) grp.vecs.push_back(g[at + s]);
        at += b.size();
        long k = b.e / 2;
        if (k > 0) {
            Rat inv_pk = 1 / r.pi_pow(k);
            for (auto& v : grp.vecs) v = scale_vec(v, inv_pk);
            grp.block.e -= 2 * k;
        }
        groups.push_back(std::move(grp));
    }
    std::stable_sort(groups.begin(), groups.end(),
                     [](const block_group& x, const block_group& y) { return x.block.e < y.block.e; });

    std::vector<qvec> new_rows;
    for (int i = 0; i < 4; ++i) new_rows.push_back(o.basis_element(i));
    for (const auto& grp : groups)
        for (const auto& v : grp.vecs) new_rows.push_back(v);
    order_z out = order_z::from_rational_rows(alg, new_rows);

    saturated_order sat{out, {}, {}};
    int pos = 0;
    for (const auto& grp : groups) {
        atom_block b = grp.block;
        // recompute the factored values from the final vectors
        if (!b.binary) {
            Rat q = quat_nrd(alg, grp.vecs[0]);
            if (r.ord(q) != b.e) throw internal_error("p_saturate: block valuation drifted");
            b.u = q / r.pi_pow(b.e);
        } else {
            Rat qa = quat_nrd(alg, grp.vecs[0]);
            Rat qc = quat_nrd(alg, grp.vecs[1]);
            qvec s(4);
            for (int c = 0; c < 4; ++c) s[c] = grp.vecs[0][c] + grp.vecs[1][c];
            Rat qb = quat_nrd(alg, s) - qa - qc;
            if (r.ord(qb) != b.e) throw internal_error("p_saturate: block valuation drifted");
            b.a = qa / r.pi_pow(b.e);
            b.b = qb / r.pi_pow(b.e);
            b.c = qc / r.pi_pow(b.e);
        }
        if (b.e > 1) throw internal_error("p_saturate: block valuation above 1");
        for (const auto& v : grp.vecs) sat.basis[pos++] = v;
        sat.blocks.push_back(b);
    }
    if (sat.basis[0] != quat_one()) throw internal_error("p_saturate: basis does not start at 1");
    return sat;
}

namespace {

/* p-unit rational reduced mod p */
Int rat_mod_p(const Rat& x, const Int& p) {
    Int num = mod_floor(x.get_num(), p);
    Int den = mod_floor(x.get_den(), p);
    return mod_floor(num * inv_mod(den, p), p);
}

order_z p_maximalize_impl(const order_z& o, const Int& p, trace_log* tr) {
    const quat_alg& alg = o.algebra();
    order_z cur = o;
    long last_dord = -1;
    for (int iter = 0; iter < 10; ++iter) {
        trace_step(tr, "computepmaxorder.step1");
        auto sat = p_saturate(cur, p, tr);
        cur = sat.order;
        long dord = ord_p_int(discriminant(cur).reduced, p);
        if (last_dord >= 0 && dord >= last_dord)
            throw internal_error("p_maximalize: discriminant did not descend");
        last_dord = dord;

        if (p != 2) {
            trace_step(tr, "computepmaxorder.step2");
            // all blocks are unary at odd p; pick the first unit square
            int pick = -1;
            for (int idx = 1; idx <= 3; ++idx)
                if (ord_v(quat_nrd(alg, sat.basis[idx]), place{false, p}) == 0) {
                    pick = idx;
                    break;
                }
            if (pick < 0) throw internal_error("p_maximalize: no unit square in the basis");
            qvec iv = sat.basis[pick];
            std::vector<qvec> rest;
            for (int idx = 1; idx <= 3; ++idx)
                if (idx != pick) rest.push_back(sat.basis[idx]);
            if (quat_trd(iv) != 0 || quat_trd(rest[0]) != 0)
                throw internal_error("p_maximalize: saturated basis is not orthogonal to 1");
            Rat a = -quat_nrd(alg, iv);       // i^2
            Rat b = -quat_nrd(alg, rest[0]);  // j^2
            long ob = ord_v(b, place{false, p});
            if (ob == 0) return cur;
            if (ob != 1) throw internal_error("p_maximalize: saturated square has valuation > 1");
            if (legendre_rat(a, p) == 1) {
                Int x = sqrt_mod_p(rat_mod_p(a, p), p);
                qvec xm1(4, Rat(0));
                xm1[0] = Rat(x);
                qvec elem = scale_vec(quat_mul(alg, sub_vec(xm1, iv), rest[0]), Rat(1, p));
                return adjoin_elements(cur, {elem});
            }
            return cur;  // the local algebra is a division ring
        }

        // p = 2
        if (sat.blocks[0].binary) {
            trace_step(tr, "computepmaxorder.step3a");
            qvec iv = sat.basis[1];
            Rat t = quat_trd(iv), n = quat_nrd(alg, iv);
            if (ord_v(t, place{false, Int(2)}) != 0)
                throw internal_error("p_maximalize: binary 1-block with even trace");
            if (sat.blocks.size() < 2 || sat.blocks[1].e == 0) return cur;
            // second block has valuation 1: find a square of valuation 1 in its
            // span; when both diagonal values sit deeper, their sum works since
            // the middle coefficient of the atomic block is a unit
            qvec jv;
            bool found = false;
            std::vector<qvec> candidates = {sat.basis[2], sat.basis[3]};
            {
                qvec sum(4);
                for (int c = 0; c < 4; ++c) sum[c] = sat.basis[2][c] + sat.basis[3][c];
                candidates.push_back(sum);
            }
            for (const auto& cand : candidates)
                if (ord_v(quat_nrd(alg, cand), place{false, Int(2)}) == 1) {
                    jv = cand;
                    found = true;
                    break;
                }
            if (!found)
                throw internal_error("p_maximalize: no valuation-1 square in the odd-trace case");
            // root of the minimal polynomial T^2 - t T + n of i modulo 2
            Int tn = rat_as_int(n, "p_maximalize n");
            Int tt = rat_as_int(t, "p_maximalize t");
            Int root(-1);
            for (Int x = 0; x < 2; ++x)
                if (mod_floor(x * x - tt * x + tn, 2) == 0) {
                    root = x;
                    break;
                }
            if (root < 0) return cur;  // division ring: already maximal
            qvec xm1(4, Rat(0));
            xm1[0] = Rat(root);
            qvec elem = scale_vec(quat_mul(alg, sub_vec(xm1, iv), jv), Rat(1, 2));
            return adjoin_elements(cur, {elem});
        }

        trace_step(tr, "computepmaxorder.step3b");
        // 1 spans a unary block, so i, j, k all have trace zero
        qvec iv = sat.basis[1], jv = sat.basis[2];
        for (const auto& blk : sat.blocks)
            if (blk.binary)
                throw internal_error("p_maximalize: binary block among trace-zero vectors");
        Int a = rat_as_int(-quat_nrd(alg, iv), "step3b a");
        Int b = rat_as_int(-quat_nrd(alg, jv), "step3b b");
        auto w = valuation_game(a, b, tr);
        qvec iprime(4);
        qvec ij = quat_mul(alg, iv, jv);
        for (int c = 0; c < 4; ++c)
            iprime[c] = (Rat(w.y) * iv[c] + Rat(w.z) * jv[c] + Rat(w.w) * ij[c]) / 2;
        iprime[0] += Rat(1, 2);
        cur = adjoin_elements(cur, {iprime});
        // return to step 1
    }
    throw internal_error("p_maximalize: iteration limit reached");
}

}  // namespace

order_z p_maximalize(const order_z& o, const Int& p, trace_log* tr) {
    order_z out = p_maximalize_impl(o, p, tr);
    const quat_alg& alg = o.algebra();
    int target = hilbert(alg.a, alg.b, place{false, p}) == -1 ? 1 : 0;
    if (ord_p_int(discriminant(out).reduced, p) != target)
        throw internal_error("p_maximalize: local discriminant is off target");
    if (!out.contains_order(o)) throw internal_error("p_maximalize: output lost the input");
    return out;
}

order_z max_order(const order_z& o, trace_log* tr) {
    order_z cur = o;
    Int d = discriminant(o).reduced;
    for (const auto& e : factor(d).entries) cur = p_maximalize(cur, e.prime, tr);
    if (!is_maximal(cur)) throw internal_error("max_order: result is not maximal");
    return cur;
}

Int factor_via_maxorder(const Int& n, std::uint64_t seed) {
    if (n < 3 || n % 2 == 0) throw qerror("bad_argument", "n must be odd and > 1");
    if (is_prime(n)) throw qerror("bad_argument", "n is prime");
    if (mpz_perfect_square_p(n.get_mpz_t())) throw qerror("bad_argument", "n is a perfect square");
    // prime powers p^k are excluded as well
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = 2; k <= bits; ++k) {
        Int root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) && is_prime(root))
            throw qerror("bad_argument", "n is a prime power");
    }
    seeded_rng rng(seed);
    for (int trial = 0; trial < 64; ++trial) {
        Int b = 2 + rng.below(n - 3);
        Int g = gcd(b, n);
        if (g > 1 && g < n) return g;  // the draw itself already factors n
        if (g != 1) continue;
        quat_alg alg{Rat(n), Rat(b)};
        order_z om = max_order(standard_order(alg));
        Int f = gcd(discriminant(om).reduced, n);
        if (f > 1 && f < n) return f;
    }
    throw qerror("budget_exhausted", "no splitting draw found");
}

bool quadratic_residuosity(const Int& a, const Int& b) {
    if (b <= 0 || b % 2 == 0) throw qerror("bad_argument", "modulus must be odd and positive");
    if (gcd(a, b) != 1) throw qerror("bad_argument", "gcd(a, b) must be 1");
    for (const auto& e : factor(sqrad(b)).entries)
        if (legendre(a, e.prime) != 1) return false;
    return true;
}

residuosity_result residuosity_via_splitting(const Int& a, const Int& b, std::uint64_t seed) {
    if (b <= 0 || b % 2 == 0) throw qerror("bad_argument", "modulus must be odd and positive");
    if (gcd(a, b) != 1) throw qerror("bad_argument", "gcd(a, b) must be 1");
    if (b == 1 || a == 1) return {true, true, Int(0)};  // trivially a square
    if (a <= 0 || jacobi(a, b) != 1)
        return {quadratic_residuosity(a, b), true, Int(0)};
    seeded_rng rng(seed);
    Int bound = std::max(Int(1000000), Int(1000 * a));
    Int binv = inv_mod(mod_floor(b, a), a);
    for (long budget = 0; budget < 100000; ++budget) {
        Int s = 1 + rng.below(a - 1);
        if (gcd(s, a) != 1) continue;
        Int r = mod_floor(s * s * binv, a);
        Int ell;
        try {
            ell = random_prime_in_progression(r, a, bound, rng, 256);
        } catch (const qerror&) {
            continue;
        }
        if (ell == 2 || ell % b == 0 || b % ell == 0) continue;
        if (legendre(a, ell) != 1) continue;
        // l b is a square mod a and (a | l) = 1: the splitting decision on
        // (a, l b) answers residuosity mod sqrad(b)
        bool value = is_matrix_ring_global(quat_alg{Rat(a), Rat(ell * b)});
        return {value, false, ell};
    }
    throw qerror("budget_exhausted", "no auxiliary prime found");
}

bool is_matrix_ring_via_residuosity(const quat_alg& alg) {
    quat_alg sq = integralize(alg);  // squarefree integers now
    Int a = sq.a.get_num(), b = sq.b.get_num();
    if (hilbert_real(Rat(a), Rat(b)) == -1) return false;
    if (hilbert_even(Rat(a), Rat(b)) == -1) return false;
    Int g = gcd(a, b);
    Int a1 = a / g, b1 = b / g;
    auto odd_abs = [](const Int& v) -> Int {
        long o = ord_p_int(v, 2);
        Int w = v / (Int(1) << static_cast<unsigned long>(o));
        return abs(w);
    };
    Int go = odd_abs(g), a1o = odd_abs(a1), b1o = odd_abs(b1);
    // odd p | a1: ramified iff (b | p) = -1, symmetrically for b1; at p | g
    // the unit part of -ab is -a1 b1
    if (a1o > 1 && !quadratic_residuosity(b, a1o)) return false;
    if (b1o > 1 && !quadratic_residuosity(a, b1o)) return false;
    if (go > 1 && !quadratic_residuosity(-a1 * b1, go)) return false;
    return true;
}

}  // namespace quatring
