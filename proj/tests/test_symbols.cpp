#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quatring/symbols.hpp"

using namespace quatring;

namespace {

// independent dyadic oracle: for a = 2^alpha u, b = 2^beta w with u, w odd,
// (a,b)_2 = (-1)^{eps(u) eps(w) + alpha omega(w) + beta omega(u)}
int eps(const Int& u) { return mpz_tstbit(Int((u - 1) / 2).get_mpz_t(), 0); }
int omega(const Int& u) { return mpz_tstbit(Int((u * u - 1) / 8).get_mpz_t(), 0); }

int hilbert2_oracle(const Rat& ar, const Rat& br) {
    Int a = ar.get_num() * ar.get_den(), b = br.get_num() * br.get_den();
    long alpha = ord_p_int(a, 2), beta = ord_p_int(b, 2);
    Int u = a >> static_cast<unsigned long>(alpha);
    Int w = b >> static_cast<unsigned long>(beta);
    int e = eps(u) * eps(w) + static_cast<int>(alpha % 2) * omega(w) +
            static_cast<int>(beta % 2) * omega(u);
    return e % 2 == 0 ? 1 : -1;
}

// independent odd-place oracle via the classical unit-part formula
int hilbert_odd_oracle(const Rat& ar, const Rat& br, const Int& p) {
    Int a = ar.get_num() * ar.get_den(), b = br.get_num() * br.get_den();
    long alpha = ord_p_int(a, p), beta = ord_p_int(b, p);
    Int pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), alpha);
    Int u = a / pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), beta);
    Int w = b / pk;
    int sign = 1;
    if ((alpha % 2) && (beta % 2) && legendre(-1, p) == -1) sign = -sign;
    if (beta % 2) sign *= legendre(u, p);
    if (alpha % 2) sign *= legendre(w, p);
    return sign;
}

Int legendre_product_jacobi(const Int& a, const Int& b) {
    // oracle: product of legendre symbols over the factorization of b
    Int out = 1;
    for (const auto& e : factor(b).entries) {
        int l = legendre(a, e.prime);
        if (l == 0) return 0;
        if (e.exponent % 2 == 1) out *= l;
    }
    return out;
}

}  // namespace

TEST_CASE("square symbol") {
    CHECK(square_symbol(4, place::finite(7)) == 1);
    CHECK(square_symbol(4, place::finite(3)) == 1);
    CHECK(square_symbol(3, place::finite(3)) == 0);
    CHECK(square_symbol(-1, place::real()) == 0);
    CHECK(square_symbol(2, place::real()) == 1);
    CHECK(square_symbol(Rat(9, 4), place::finite(5)) == 1);
    CHECK(square_symbol(Rat(1, 3), place::finite(3)) == 0);
    CHECK(square_symbol(Rat(2, 9), place::finite(3)) == legendre(2, 3));
    CHECK_THROWS_AS(square_symbol(3, place::finite(2)), qerror);
    CHECK_THROWS_AS(square_symbol(0, place::real()), qerror);
}

TEST_CASE("hilbert at odd places") {
    CHECK(hilbert_odd(2, 3, 3) == -1);
    CHECK(hilbert_odd(1, 77, 7) == 1);
    CHECK(hilbert_odd(3, 3, 3) == -1);
    CHECK(hilbert_odd(-1, 3, 3) == -1);  // x^2 + y^2 - 3z^2 - 3w^2 is anisotropic over Q_3
    // units give 1
    seeded_rng rng(8);
    for (int t = 0; t < 200; ++t) {
        Int p = std::vector<Int>{3, 5, 7, 11}[t % 4];
        Int a = 1 + rng.below(50), b = 1 + rng.below(50);
        if (a % p == 0 || b % p == 0) continue;
        CHECK(hilbert_odd(Rat(a), Rat(b), p) == 1);
    }
    // against the independent classical oracle
    for (int t = 0; t < 400; ++t) {
        Int p = std::vector<Int>{3, 5, 7, 13}[t % 4];
        Int a = Int(rng.below(400)) - 200, b = Int(rng.below(400)) - 200;
        if (a == 0 || b == 0) continue;
        CHECK(hilbert_odd(Rat(a), Rat(b), p) == hilbert_odd_oracle(Rat(a), Rat(b), p));
    }
}

TEST_CASE("square symbol is multiplicative on even valuations") {
    seeded_rng rng(3);
    place v3 = place::finite(3);
    for (int t = 0; t < 200; ++t) {
        Int a = Int(rng.below(200)) - 100, b = Int(rng.below(200)) - 100;
        if (a == 0 || b == 0) continue;
        if (ord_v(Rat(a), v3) % 2 != 0 || ord_v(Rat(b), v3) % 2 != 0) continue;
        CHECK(square_symbol(Rat(a * b), v3) == square_symbol(Rat(a), v3) * square_symbol(Rat(b), v3));
    }
    // but not in general: (9 | 3) = 1 while (3 | 3)^2 = 0
    CHECK(square_symbol(9, v3) == 1);
    CHECK(square_symbol(3, v3) == 0);
}

TEST_CASE("hilbert at the real place") {
    CHECK(hilbert_real(-1, -1) == -1);
    CHECK(hilbert_real(-1, 2) == 1);
    CHECK(hilbert_real(1, -5) == 1);
}

TEST_CASE("even norm lift and valuation game") {
    auto s = even_norm_lift(5, 2);
    CHECK(mod_floor(1 - 5 * s.y * s.y - 2 * s.z * s.z, 4) == 0);
    CHECK(s.y % 2 == 1);
    auto w = valuation_game(-1, -1);
    CHECK(mod_floor(1 - (-1) * w.y * w.y - (-1) * w.z * w.z + w.w * w.w, 4) == 0);
    CHECK(w.y % 2 == 1);
    seeded_rng rng(55);
    for (int t = 0; t < 300; ++t) {
        Int a = 2 * (Int(rng.below(200)) - 100) + 1;
        Int odd = 2 * (Int(rng.below(200)) - 100) + 1;
        Int b = (t % 2) ? odd : Int(2 * odd);
        auto v = valuation_game(a, b);
        CHECK(mod_floor(1 - a * v.y * v.y - b * v.z * v.z + a * b * v.w * v.w, 4) == 0);
        CHECK(v.y % 2 == 1);
    }
    CHECK_THROWS_AS(valuation_game(2, 3), qerror);
    CHECK_THROWS_AS(even_norm_lift(3, 3), qerror);
}

TEST_CASE("dyadic hilbert symbol against the closed-form oracle") {
    CHECK(hilbert_even(-1, -1) == -1);
    CHECK(hilbert_even(2, 2) == 1);
    CHECK(hilbert_even(5, 2) == -1);
    CHECK(hilbert_even(-1, -1) == hilbert2_oracle(-1, -1));
    seeded_rng rng(99);
    for (int t = 0; t < 2000; ++t) {
        Int a = Int(rng.below(2000)) - 1000;
        Int b = Int(rng.below(2000)) - 1000;
        if (a == 0 || b == 0) continue;
        CHECK(hilbert_even(Rat(a), Rat(b)) == hilbert2_oracle(Rat(a), Rat(b)));
    }
    // rationals reduce by square scaling
    for (int t = 0; t < 200; ++t) {
        Rat a(Int(rng.below(300)) - 150, 1 + rng.below(60));
        Rat b(Int(rng.below(300)) - 150, 1 + rng.below(60));
        a.canonicalize();
        b.canonicalize();
        if (a == 0 || b == 0) continue;
        CHECK(hilbert_even(a, b) == hilbert2_oracle(a, b));
    }
}

TEST_CASE("symmetry and reduction identities") {
    seeded_rng rng(1001);
    std::vector<place> places = {place::finite(2), place::finite(3), place::finite(5),
                                 place::real()};
    for (int t = 0; t < 300; ++t) {
        Int a = Int(rng.below(200)) - 100, b = Int(rng.below(200)) - 100;
        if (a == 0 || b == 0) continue;
        Int tt = 1 + rng.below(9), uu = 1 + rng.below(9);
        for (const auto& v : places) {
            int h = hilbert(Rat(a), Rat(b), v);
            CHECK(hilbert(Rat(b), Rat(a), v) == h);
            CHECK(hilbert(Rat(a * tt * tt), Rat(b * uu * uu), v) == h);
            CHECK(hilbert(Rat(-a * b), Rat(b), v) == h);
        }
    }
}

TEST_CASE("ramified sets and discriminants") {
    auto r1 = ramified_set(quat_alg{Rat(-1), Rat(-1)});
    REQUIRE(r1.size() == 2);
    CHECK(r1[0] == place::finite(2));
    CHECK(r1[1] == place::real());
    CHECK(algebra_discriminant(quat_alg{Rat(-1), Rat(-1)}) == 2);

    CHECK(ramified_set(quat_alg{Rat(1), Rat(1)}).empty());
    CHECK(algebra_discriminant(quat_alg{Rat(1), Rat(1)}) == 1);
    CHECK(is_matrix_ring_global(quat_alg{Rat(1), Rat(1)}));
    CHECK_FALSE(is_matrix_ring_global(quat_alg{Rat(-1), Rat(-1)}));

    for (Int p : {5, 13, 17}) CHECK(ramified_set(quat_alg{Rat(-1), Rat(p)}).empty());

    // parity of the ramified set
    seeded_rng rng(7);
    for (int t = 0; t < 100; ++t) {
        Int a = Int(rng.below(500)) - 250, b = Int(rng.below(500)) - 250;
        if (a == 0 || b == 0) continue;
        CHECK(ramified_set(quat_alg{Rat(a), Rat(b)}).size() % 2 == 0);
    }
}

TEST_CASE("hilbert reciprocity") {
    CHECK(reciprocity_check(-1, -1));
    auto rep = local_symbols(-1, -1);
    int at2 = 0, atinf = 0;
    for (auto& [v, h] : rep.symbols) {
        if (v.is_even()) at2 = h;
        if (v.is_real()) atinf = h;
    }
    CHECK(at2 == -1);
    CHECK(atinf == -1);
    CHECK(rep.product == 1);

    seeded_rng rng(13);
    for (int t = 0; t < 300; ++t) {
        Int a = Int(rng.below(20000)) - 10000, b = Int(rng.below(20000)) - 10000;
        if (a == 0 || b == 0) continue;
        CHECK(reciprocity_check(Rat(a), Rat(b)));
    }
}

TEST_CASE("jacobi") {
    CHECK(jacobi(2, 15) == 1);
    CHECK(jacobi(7, 15) == -1);
    CHECK(jacobi(1234567, 1) == 1);
    CHECK(jacobi(-1, 5) == 1);
    CHECK(jacobi(-1, 3) == -1);
    CHECK(jacobi(6, 15) == 0);
    CHECK_THROWS_AS(jacobi(3, 4), qerror);
    CHECK_THROWS_AS(jacobi(3, 0), qerror);
    // against the product-of-legendre oracle and gmp
    seeded_rng rng(21);
    for (int t = 0; t < 1500; ++t) {
        Int b = 2 * rng.below(3000) + 1;
        Int a = 1 + rng.below(3000);
        if (b == 1) continue;
        Int expect = legendre_product_jacobi(a, b);
        CHECK(jacobi(a, b) == expect);
        CHECK(jacobi(a, b) == mpz_jacobi(a.get_mpz_t(), b.get_mpz_t()));
    }
}
