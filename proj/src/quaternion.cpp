#include "quatring/quaternion.hpp"

#include <algorithm>

namespace quatring {

quat_alg::quat_alg(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a == 0 || b == 0) throw qerror("zero_coefficient", "(a, b | Q) requires a, b nonzero");
}

mult_table standard_table(const quat_alg& alg) {
    const Rat &a = alg.a, &b = alg.b;
    std::vector<Rat> c(64, Rat(0));
    auto put = [&](int i, int j, int k, const Rat& v) { c[(i * 4 + j) * 4 + k] = v; };
    for (int k = 0; k < 4; ++k) {
        put(0, k, k, 1);
        if (k) put(k, 0, k, 1);
    }
    put(1, 1, 0, a);
    put(1, 2, 3, 1);
    put(1, 3, 2, a);
    put(2, 1, 3, -1);
    put(2, 2, 0, b);
    put(2, 3, 1, -b);
    put(3, 1, 2, -a);
    put(3, 2, 1, b);
    put(3, 3, 0, -a * b);
    return mult_table::create(4, std::move(c));
}

qvec quat_mul(const quat_alg& alg, const qvec& x, const qvec& y) {
    const Rat &a = alg.a, &b = alg.b;
    qvec z(4);
    z[0] = x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - a * b * x[3] * y[3];
    z[1] = x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2];
    z[2] = x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1];
    z[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
    return z;
}

Rat quat_trd(const qvec& x) { return 2 * x[0]; }

Rat quat_nrd(const quat_alg& alg, const qvec& x) {
    return x[0] * x[0] - alg.a * x[1] * x[1] - alg.b * x[2] * x[2] + alg.a * alg.b * x[3] * x[3];
}

qvec quat_conj(const qvec& x) { return {x[0], -x[1], -x[2], -x[3]}; }

std::variant<recognition, recognize_failure> recognize(const mult_table& b, trace_log* tr) {
    if (b.dim() != 4) throw qerror("bad_dimension", "recognize expects a rank-4 algebra");
    trace_step(tr, "identquatalg.step1");
    auto inv = has_standard_involution(b, tr);
    if (!inv) return recognize_failure{recognize_failure::no_involution, {}};

    trace_step(tr, "identquatalg.step2");
    quad_form nrd = inv->nrd_form();
    auto nd = normalize(nrd, local_ring::rationals(), tr);
    if (nd.basis[0] != b.one()) throw internal_error("recognize: normalization moved the identity");

    trace_step(tr, "identquatalg.step3");
    for (const auto& blk : nd.blocks)
        if (blk.e == ord_infinity)
            return recognize_failure{recognize_failure::singular_norm, radical(nrd)};

    qvec gi = nd.basis[1], gj = nd.basis[2], gk = nd.basis[3];
    qvec isq = b.multiply(gi, gi), jsq = b.multiply(gj, gj);
    if (!b.is_scalar(isq) || !b.is_scalar(jsq))
        throw internal_error("recognize: generator squares are not scalars");
    recognition rec{quat_alg(isq[0], jsq[0]), gi, gj, gk, nd.basis};
    return rec;
}

qvec nilpotent_from_zerodivisor(const mult_table& b, const std_involution& inv, const qvec& x,
                                trace_log* tr) {
    bool zero = std::all_of(x.begin(), x.end(), [](const Rat& v) { return v == 0; });
    if (zero || inv.nrd(x) != 0)
        throw qerror("not_zerodivisor", "input must be nonzero with nrd(x) = 0");
    trace_step(tr, "etatoeps.step1");
    if (inv.trd(x) == 0) return x;

    trace_step(tr, "etatoeps.step2");
    // 0 != y orthogonal to 1 and x under the norm form
    quad_form f = inv.nrd_form();
    qmat sys = {f.gram_matrix()[0], qvec(4)};
    qmat g = f.gram_matrix();
    for (int c = 0; c < 4; ++c) {
        Rat v = 0;
        for (int r = 0; r < 4; ++r) v += x[r] * g[r][c];
        sys[1][c] = v;
    }
    auto ker = kernel_basis(sys);
    if (ker.empty()) throw internal_error("etatoeps: no orthogonal complement");
    qvec y = ker.front();
    qvec xy = b.multiply(x, y);
    qvec e = std::all_of(xy.begin(), xy.end(), [](const Rat& v) { return v == 0; }) ? y : xy;
    if (inv.trd(e) != 0 || inv.nrd(e) != 0) throw internal_error("etatoeps: output is not nilpotent");
    return e;
}

namespace {

qvec scale(const qvec& x, const Rat& c) {
    qvec y(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] = c * x[i];
    return y;
}

qvec add(const qvec& x, const qvec& y) {
    qvec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

qvec sub(const qvec& x, const qvec& y) {
    qvec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

bool is_zero(const qvec& x) {
    return std::all_of(x.begin(), x.end(), [](const Rat& v) { return v == 0; });
}

/* coordinates of z in span{u1, u2}; the pair is linearly independent and the
 * system consistent by construction */
std::pair<Rat, Rat> in_plane(const qvec& u1, const qvec& u2, const qvec& z) {
    qmat sys(4, qvec(2));
    for (int r = 0; r < 4; ++r) {
        sys[r][0] = u1[r];
        sys[r][1] = u2[r];
    }
    auto sol = solve(sys, z);
    if (!sol) throw internal_error("split: element left the invariant plane");
    return {(*sol)[0], (*sol)[1]};
}

}  // namespace

splitting split_from_nilpotent(const quat_alg& alg, const qvec& e, trace_log* tr) {
    mult_table b = standard_table(alg);
    auto inv = *has_standard_involution(b);
    if (is_zero(e) || !is_zero(b.multiply(e, e)))
        throw qerror("not_nilpotent", "input must satisfy e != 0, e^2 = 0");

    trace_step(tr, "m2ffound.step1");
    int pick = -1;
    Rat s;
    for (int cand = 1; cand <= 3; ++cand) {
        s = inv.trd(b.multiply(e, b.basis_element(cand)));
        if (s != 0) {
            pick = cand;
            break;
        }
    }
    if (pick < 0)
        throw qerror("corrupted_input", "trd(e k) vanished for k in {i, j, ij}");
    qvec k = b.basis_element(pick);
    Rat t = inv.trd(k), n = inv.nrd(k);
    // e' is normalized so that trd(e'k) = 1, giving e'k + ke' = te' + 1;
    // the canonical images below need this sign
    qvec ep = scale(e, 1 / s);

    trace_step(tr, "m2ffound.step2");
    // j' = k + (-t k + n + 1) e',  i' = e' k - (k + t) e'
    qvec coeff = add(scale(k, -t), scale(b.one(), n + 1));
    qvec jp = add(k, b.multiply(coeff, ep));
    qvec ip = sub(b.multiply(ep, k), b.multiply(add(k, scale(b.one(), t)), ep));

    // left multiplication on I = F e' + F (k e') in the basis (e', k e')
    qvec u1 = ep, u2 = b.multiply(k, ep);
    auto image_of = [&](const qvec& z) {
        auto c1 = in_plane(u1, u2, b.multiply(z, u1));
        auto c2 = in_plane(u1, u2, b.multiply(z, u2));
        return mat2{{{c1.first, c2.first}, {c1.second, c2.second}}};
    };
    mat2 mi = image_of(b.basis_element(1));
    mat2 mj = image_of(b.basis_element(2));
    mat2 mip = image_of(ip), mjp = image_of(jp);
    if (!(mip == mat2{{{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}}} &&
          mjp == mat2{{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}}))
        throw internal_error("split: canonical images are off");
    // the induced linear map must be bijective
    qmat span = {{mi[0][0], mi[0][1], mi[1][0], mi[1][1]},
                 {mj[0][0], mj[0][1], mj[1][0], mj[1][1]}};
    qvec kmat(4);
    {
        mat2 mk{};
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                mk[r][c] = 0;
                for (int l = 0; l < 2; ++l) mk[r][c] += mi[r][l] * mj[l][c];
            }
        kmat = {mk[0][0], mk[0][1], mk[1][0], mk[1][1]};
    }
    qmat full = {{Rat(1), Rat(0), Rat(0), Rat(1)}, span[0], span[1], kmat};
    if (qmat_det(full) == 0) throw internal_error("split: image map is singular");

    return splitting{ip, jp, mi, mj, e};
}

conic conic::diagonal(const Rat& c1, const Rat& c2, const Rat& c3) {
    if (c1 == 0 || c2 == 0 || c3 == 0)
        throw qerror("zero_coefficient", "diagonal conic requires nonzero coefficients");
    conic c;
    c.form = quad_form::diagonal({c1, c2, c3});
    return c;
}

conic conic_of(const quat_alg& alg) {
    return conic::diagonal(-alg.a, -alg.b, alg.a * alg.b);
}

quat_alg algebra_of_conic(const Rat& a, const Rat& b, const Rat& c) {
    if (a == 0 || b == 0 || c == 0) throw qerror("zero_coefficient", "conic coefficients must be nonzero");
    return quat_alg(-b * c, -a * c);
}

namespace {

/* definiteness of a rank-3 form over Q by leading principal minors */
bool is_definite(const quad_form& f) {
    qmat g = f.gram_matrix();
    Rat m1 = g[0][0];
    Rat m2 = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    Rat m3 = qmat_det(g);
    bool pos = m1 > 0 && m2 > 0 && m3 > 0;
    bool neg = m1 < 0 && m2 > 0 && m3 < 0;
    return pos || neg;
}

}  // namespace

std::optional<std::array<Int, 3>> find_isotropic_naive(const conic& c, long height) {
    if (height < 1) throw qerror("bad_argument", "height bound must be >= 1");
    if (is_definite(c.form)) return std::nullopt;
    // clear denominators; the zero set is unchanged
    Int den = 1;
    for (int i = 0; i < 3; ++i) {
        den = lcm(den, c.form.q[i].get_den());
        for (int j = i + 1; j < 3; ++j) den = lcm(den, c.form.tval(i, j).get_den());
    }
    std::array<Int, 6> co;  // q1 q2 q3 t12 t13 t23
    co[0] = Rat(c.form.q[0] * den).get_num();
    co[1] = Rat(c.form.q[1] * den).get_num();
    co[2] = Rat(c.form.q[2] * den).get_num();
    co[3] = Rat(c.form.tval(0, 1) * den).get_num();
    co[4] = Rat(c.form.tval(0, 2) * den).get_num();
    co[5] = Rat(c.form.tval(1, 2) * den).get_num();

    auto eval = [&](const Int& x, const Int& y, const Int& z) -> Int {
        return co[0] * x * x + co[1] * y * y + co[2] * z * z + co[3] * x * y + co[4] * x * z +
               co[5] * y * z;
    };
    auto canonical = [](std::array<Int, 3> p) {
        for (auto& v : p) {
            if (v == 0) continue;
            if (v < 0)
                for (auto& w : p) w = -w;
            break;
        }
        return p;
    };
    for (long h = 1; h <= height; ++h) {
        Int hh = h;
        for (Int x = -hh; x <= hh; ++x) {
            bool xedge = (x == hh || x == -hh);
            for (Int y = -hh; y <= hh; ++y) {
                bool yedge = (y == hh || y == -hh);
                if (xedge || yedge) {
                    for (Int z = -hh; z <= hh; ++z) {
                        if (gcd(gcd(abs(x), abs(y)), abs(z)) != 1) continue;
                        if (eval(x, y, z) == 0) return canonical({x, y, z});
                    }
                } else {
                    for (Int z : {Int(-hh), hh}) {
                        if (gcd(gcd(abs(x), abs(y)), abs(z)) != 1) continue;
                        if (eval(x, y, z) == 0) return canonical({x, y, z});
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::array<Int, 3> conic_point_mod_p(const conic& c, const Int& p, seeded_rng& rng) {
    if (!is_prime(p)) throw qerror("not_prime", "conic_point_mod_p: modulus not prime");
    // reduce coefficients mod p
    auto red = [&](const Rat& v) {
        Int den = mod_floor(v.get_den(), p);
        if (den == 0) throw qerror("singular_reduction", "coefficient has p in the denominator");
        return mod_floor(v.get_num() * inv_mod(den, p), p);
    };
    std::array<Int, 6> co = {red(c.form.q[0]),       red(c.form.q[1]),       red(c.form.q[2]),
                             red(c.form.tval(0, 1)), red(c.form.tval(0, 2)), red(c.form.tval(1, 2))};
    auto eval = [&](const Int& x, const Int& y, const Int& z) {
        return mod_floor(co[0] * x * x + co[1] * y * y + co[2] * z * z + co[3] * x * y +
                             co[4] * x * z + co[5] * y * z,
                         p);
    };
    auto canonical = [&](std::array<Int, 3> pt) {
        for (auto& v : pt) {
            if (v == 0) continue;
            Int inv = inv_mod(v, p);
            for (auto& w : pt) w = mod_floor(w * inv, p);
            break;
        }
        return pt;
    };

    if (p == 2) {
        bool all_zero = std::all_of(co.begin(), co.end(), [](const Int& v) { return v == 0; });
        if (all_zero) throw qerror("singular_reduction", "form vanishes mod 2");
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                for (int z = 0; z < 2; ++z) {
                    if (x == 0 && y == 0 && z == 0) continue;
                    if (eval(x, y, z) == 0) return {Int(x), Int(y), Int(z)};
                }
        throw internal_error("conic_point_mod_p: no point over F_2");
    }

    // nonsingularity: Gram determinant nonzero mod p (p odd)
    {
        Int g = (2 * co[0]) * ((2 * co[1]) * (2 * co[2]) - co[5] * co[5]) -
                co[3] * (co[3] * (2 * co[2]) - co[5] * co[4]) +
                co[4] * (co[3] * co[5] - (2 * co[1]) * co[4]);
        if (mod_floor(g, p) == 0) throw qerror("singular_reduction", "conic is singular mod p");
    }

    // intersect with the line through a random (x0 : y0 : 0) and (0 : 0 : 1)
    for (int attempt = 0; attempt < 4096; ++attempt) {
        Int x0 = rng.below(p), y0 = rng.below(p);
        if (x0 == 0 && y0 == 0) continue;
        // Q(x0, y0, t) = A t^2 + B t + C
        Int A = co[2];
        Int B = mod_floor(co[4] * x0 + co[5] * y0, p);
        Int C = eval(x0, y0, 0);
        if (A == 0) {
            if (B == 0) {
                if (C == 0) return canonical({x0, y0, Int(0)});
                continue;
            }
            Int tt = mod_floor(-C * inv_mod(B, p), p);
            return canonical({x0, y0, tt});
        }
        Int disc = mod_floor(B * B - 4 * A * C, p);
        if (disc != 0 && legendre_unchecked(disc, p) == -1) continue;
        Int r = sqrt_mod_p(disc, p);
        Int tt = mod_floor((-B + r) * inv_mod(2 * A, p), p);
        return canonical({x0, y0, tt});
    }
    throw internal_error("conic_point_mod_p: random line search failed");
}

}  // namespace quatring
