#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "quatring/algebra.hpp"

using namespace quatring;

namespace {

std::vector<Rat> constants_from(int n, const std::function<qvec(int, int)>& prod) {
    std::vector<Rat> c(static_cast<size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            qvec p = prod(i, j);
            for (int k = 0; k < n; ++k) c[(i * n + j) * n + k] = p[k];
        }
    return c;
}

// (a, b | Q) in the basis 1, i, j, ij
std::vector<Rat> quat_constants(const Rat& a, const Rat& b) {
    auto e = [](int k, const Rat& v) {
        qvec x(4, Rat(0));
        x[k] = v;
        return x;
    };
    return constants_from(4, [&](int i, int j) -> qvec {
        if (i == 0) return e(j, 1);
        if (j == 0) return e(i, 1);
        if (i == 1 && j == 1) return e(0, a);
        if (i == 1 && j == 2) return e(3, 1);
        if (i == 1 && j == 3) return e(2, a);
        if (i == 2 && j == 1) return e(3, -1);
        if (i == 2 && j == 2) return e(0, b);
        if (i == 2 && j == 3) return e(1, -b);
        if (i == 3 && j == 1) return e(2, -a);
        if (i == 3 && j == 2) return e(1, b);
        return e(0, -a * b);  // (ij)^2
    });
}

mult_table quat_table(const Rat& a, const Rat& b) {
    return mult_table::create(4, quat_constants(a, b));
}

// Q x Q x Q with orthogonal idempotents
mult_table qqq_table() {
    return mult_table::create(3, constants_from(3, [](int i, int j) -> qvec {
        qvec z(3, Rat(0));
        if (i == 0) { z[j] = 1; return z; }
        if (j == 0) { z[i] = 1; return z; }
        if (i == j) z[i] = 1;  // e_i idempotent, cross products vanish
        return z;
    }));
}

// Q[x]/(x^4) in the basis 1, x, x^2, x^3
mult_table truncated_poly_table() {
    return mult_table::create(4, constants_from(4, [](int i, int j) -> qvec {
        qvec z(4, Rat(0));
        if (i + j < 4) z[i + j] = 1;
        return z;
    }));
}

// Q[x,y,z]/(x,y,z)^2
mult_table square_zero_table() {
    return mult_table::create(4, constants_from(4, [](int i, int j) -> qvec {
        qvec z(4, Rat(0));
        if (i == 0) z[j] = 1;
        else if (j == 0) z[i] = 1;
        return z;
    }));
}

// M_2(Q) in the basis 1, E11, E12, E21
mult_table m2_matrix_unit_table() {
    // elements as (s, a, b, c) = s*I + a E11 + b E12 + c E21
    auto mat = [](const qvec& v) {
        // returns entries (m11, m12, m21, m22)
        return std::array<Rat, 4>{v[0] + v[1], v[2], v[3], v[0]};
    };
    auto unmat = [](const std::array<Rat, 4>& m) {
        qvec v(4);
        v[0] = m[3];
        v[1] = m[0] - m[3];
        v[2] = m[1];
        v[3] = m[2];
        return v;
    };
    return mult_table::create(4, constants_from(4, [&](int i, int j) -> qvec {
        qvec ei(4, Rat(0)), ej(4, Rat(0));
        ei[i] = 1;
        ej[j] = 1;
        auto a = mat(ei), b = mat(ej);
        std::array<Rat, 4> p = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                                a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
        return unmat(p);
    }));
}

qvec elem(std::initializer_list<int> v) {
    qvec x;
    for (int c : v) x.push_back(Rat(c));
    return x;
}

}  // namespace

TEST_CASE("constructor validates identity and associativity") {
    CHECK_NOTHROW(quat_table(1, 1));
    auto bad = quat_constants(1, 1);
    bad[(1 * 4 + 2) * 4 + 0] = 5;  // corrupt i*j
    CHECK_THROWS_WITH_AS(mult_table::create(4, bad), doctest::Contains("associativity violated"),
                         qerror);
    auto noid = quat_constants(1, 1);
    noid[(0 * 4 + 1) * 4 + 1] = 2;  // e_1 e_2 = 2 e_2
    CHECK_THROWS_AS(mult_table::create(4, noid), qerror);
    CHECK_THROWS_AS(mult_table::create(1, {Rat(1)}), qerror);
}

TEST_CASE("identity recovery constructor") {
    // (-1,-1) written in the basis i, 1, j, ij: identity sits in slot 2
    mult_table b = quat_table(-1, -1);
    qmat p = {elem({0, 1, 0, 0}), elem({1, 0, 0, 0}), elem({0, 0, 1, 0}), elem({0, 0, 0, 1})};
    // build the permuted constants directly (change_basis would reject p[0] != 1)
    std::vector<Rat> c(64);
    qmat pinv = qmat_inverse(p);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            qvec prod = row_times_mat(b.multiply(p[i], p[j]), pinv);
            for (int k = 0; k < 4; ++k) c[(i * 4 + j) * 4 + k] = prod[k];
        }
    CHECK_THROWS_AS(mult_table::create(4, c), qerror);
    mult_table fixed = mult_table::create_with_recovered_identity(4, c);
    CHECK(fixed.dim() == 4);
    CHECK(has_standard_involution(fixed).has_value());
}

TEST_CASE("multiply") {
    mult_table m2 = quat_table(1, 1);  // M2(Q) presented by i -> diag(1,-1), j -> antidiag(1,1)
    // i*j = ij, which maps to [[0,1],[-1,0]]
    CHECK(m2.multiply(elem({0, 1, 0, 0}), elem({0, 0, 1, 0})) == elem({0, 0, 0, 1}));
    // identity axiom
    qvec x = {Rat(3), Rat(-1, 2), Rat(5), Rat(0)};
    CHECK(m2.multiply(m2.one(), x) == x);
    CHECK(m2.multiply(x, m2.one()) == x);
    // orthogonal idempotents
    mult_table qqq = qqq_table();
    CHECK(qqq.multiply(elem({0, 1, 0}), elem({0, 0, 1})) == elem({0, 0, 0}));
    CHECK_THROWS_AS(m2.multiply(elem({1, 0}), x), qerror);
}

TEST_CASE("center") {
    auto c1 = center(quat_table(1, 1));
    REQUIRE(c1.size() == 1);
    CHECK(c1[0] == elem({1, 0, 0, 0}));
    CHECK(center(truncated_poly_table()).size() == 4);  // commutative
    CHECK(center(quat_table(-1, -1)).size() == 1);
    CHECK(center(m2_matrix_unit_table()).size() == 1);
}

TEST_CASE("standard involution detection") {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {-1, -1}, {2, 3}, {-7, 5}}) {
        auto inv = has_standard_involution(quat_table(a, b));
        REQUIRE(inv.has_value());
        CHECK(inv->t[1] == 0);
        CHECK(inv->t[2] == 0);
        CHECK(inv->t[3] == 0);
    }
    CHECK_FALSE(has_standard_involution(qqq_table()).has_value());
    CHECK_FALSE(has_standard_involution(truncated_poly_table()).has_value());
    CHECK(has_standard_involution(square_zero_table()).has_value());
}

TEST_CASE("trd, nrd, conj") {
    mult_table b = quat_table(-1, -1);
    auto inv = *has_standard_involution(b);
    qvec one = b.one();
    CHECK(inv.trd(one) == 2);
    CHECK(inv.nrd(one) == 1);
    CHECK(inv.conj(one) == one);

    qvec ipj = elem({0, 1, 1, 0});
    CHECK(inv.trd(ipj) == 0);
    CHECK(inv.nrd(ipj) == 2);

    // on the matrix-unit presentation trd is the trace, nrd the determinant
    mult_table m2 = m2_matrix_unit_table();
    auto minv = *has_standard_involution(m2);
    // 1, E11, E12, E21 have traces 2, 1, 0, 0 and determinants 1, 0, 0, 0
    CHECK(minv.trd(elem({1, 0, 0, 0})) == 2);
    CHECK(minv.trd(elem({0, 1, 0, 0})) == 1);
    CHECK(minv.trd(elem({0, 0, 1, 0})) == 0);
    CHECK(minv.nrd(elem({0, 1, 0, 0})) == 0);
    // E11 + 2 E21 - E12: matrix [[1,-1],[2,0]], trace 1, det 2
    qvec m = elem({0, 1, -1, 2});
    CHECK(minv.trd(m) == 1);
    CHECK(minv.nrd(m) == 2);
}

TEST_CASE("quadratic identity and involution laws") {
    seeded_rng rng(99);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{-1, -1}, {2, 3}, {1, 1}}) {
        mult_table t = quat_table(a, b);
        auto inv = *has_standard_involution(t);
        for (int trial = 0; trial < 50; ++trial) {
            qvec x(4), y(4);
            for (int i = 0; i < 4; ++i) {
                x[i] = Rat(Int(rng.below_u64(11)) - 5);
                y[i] = Rat(Int(rng.below_u64(11)) - 5);
            }
            // x^2 - trd(x) x + nrd(x) = 0
            qvec lhs = t.multiply(x, x);
            Rat tr = inv.trd(x), nr = inv.nrd(x);
            for (int i = 0; i < 4; ++i) {
                Rat expect = tr * x[i] - (i == 0 ? nr : Rat(0));
                CHECK(lhs[i] == expect);
            }
            CHECK(inv.conj(inv.conj(x)) == x);
            CHECK(inv.conj(t.multiply(x, y)) == t.multiply(inv.conj(y), inv.conj(x)));
            CHECK(inv.nrd(t.multiply(x, y)) == inv.nrd(x) * inv.nrd(y));
        }
    }
}

TEST_CASE("base change covariance") {
    seeded_rng rng(123);
    mult_table b = quat_table(-1, -1);
    auto inv = *has_standard_involution(b);
    for (int trial = 0; trial < 30; ++trial) {
        qmat p = qmat_identity(4);
        for (int step = 0; step < 6; ++step) {
            int r = 1 + static_cast<int>(rng.below_u64(3));
            int s = static_cast<int>(rng.below_u64(4));
            if (r == s) continue;
            Rat c = Rat(Int(rng.below_u64(5)) - 2);
            for (int k = 0; k < 4; ++k) p[r][k] += c * p[s][k];
        }
        mult_table bc = change_basis(b, p);
        auto inv2 = has_standard_involution(bc);
        REQUIRE(inv2.has_value());
        qvec x = {Rat(1), Rat(2), Rat(-3), Rat(1)};
        qvec x_old = row_times_mat(x, p);
        CHECK(inv2->trd(x) == inv.trd(x_old));
        CHECK(inv2->nrd(x) == inv.nrd(x_old));
    }
    // a non-involution table stays non-involution under base change
    mult_table c = truncated_poly_table();
    qmat p = qmat_identity(4);
    p[2][1] = 1;
    CHECK_FALSE(has_standard_involution(change_basis(c, p)).has_value());
}

TEST_CASE("jacobson radical") {
    CHECK(jacobson_radical(quat_table(2, 5)).empty());
    auto rad = jacobson_radical(square_zero_table());
    REQUIRE(rad.size() == 3);
    for (const auto& v : rad) CHECK(v[0] == 0);
    CHECK_THROWS_AS(jacobson_radical(truncated_poly_table()), qerror);  // no involution
    CHECK_THROWS_AS(jacobson_radical(qqq_table()), qerror);             // wrong dimension
}
