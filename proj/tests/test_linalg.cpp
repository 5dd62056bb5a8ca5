#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quatring/linalg.hpp"

using namespace quatring;

namespace {

qmat qm(std::initializer_list<std::initializer_list<int>> rows) {
    qmat m;
    for (auto& r : rows) {
        qvec v;
        for (int x : r) v.push_back(Rat(x));
        m.push_back(v);
    }
    return m;
}

zmat zm(std::initializer_list<std::initializer_list<int>> rows) {
    zmat m;
    for (auto& r : rows) {
        zvec v;
        for (int x : r) v.push_back(Int(x));
        m.push_back(v);
    }
    return m;
}

}  // namespace

TEST_CASE("inverse and determinant") {
    qmat a = qm({{2, 1}, {1, 1}});
    CHECK(qmat_det(a) == 1);
    qmat inv = qmat_inverse(a);
    CHECK(qmat_mul(a, inv) == qmat_identity(2));
    CHECK_THROWS_AS(qmat_inverse(qm({{1, 2}, {2, 4}})), qerror);
    CHECK(zmat_det(zm({{2, 0, 0}, {1, 3, 0}, {5, 5, 7}})) == 42);
    CHECK(zmat_det(zm({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("kernel basis") {
    // rank-1 matrix, 3 columns -> kernel dim 2
    auto k = kernel_basis(qm({{1, 2, 3}}));
    REQUIRE(k.size() == 2);
    for (const auto& v : k) {
        Rat dot = 0;
        qvec row = {Rat(1), Rat(2), Rat(3)};
        for (int i = 0; i < 3; ++i) dot += row[i] * v[i];
        CHECK(dot == 0);
    }
    CHECK(kernel_basis(qm({{1, 0}, {0, 1}})).empty());
}

TEST_CASE("solve") {
    auto x = solve(qm({{1, 1}, {1, -1}}), {Rat(3), Rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve(qm({{1, 1}, {2, 2}}), {Rat(1), Rat(3)}).has_value());
}

TEST_CASE("hnf") {
    // hurwitz-like lattice rows
    zmat h = hnf(zm({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {1, 1, 1, 1}}));
    REQUIRE(h.size() == 4);
    CHECK(h[0] == zvec({Int(1), Int(1), Int(1), Int(1)}));
    CHECK(h[1] == zvec({Int(0), Int(2), Int(0), Int(0)}));
    CHECK(h[3] == zvec({Int(0), Int(0), Int(0), Int(2)}));
    CHECK(hnf(h) == h);  // idempotent

    CHECK(hnf_contains(h, {Int(2), Int(0), Int(0), Int(0)}));
    CHECK(hnf_contains(h, {Int(1), Int(1), Int(1), Int(1)}));
    CHECK_FALSE(hnf_contains(h, {Int(1), Int(0), Int(0), Int(0)}));

    // dependent rows collapse
    zmat d = hnf(zm({{1, 2}, {2, 4}, {3, 6}}));
    REQUIRE(d.size() == 1);
    CHECK(d[0] == zvec({Int(1), Int(2)}));
}

TEST_CASE("unimodular completion") {
    zvec c = {Int(3), Int(5), Int(0), Int(7)};
    zmat u = unimodular_with_first_row(c);
    CHECK(u[0] == c);
    Int det = zmat_det(u);
    CHECK((det == 1 || det == -1));
    zmat inv = unimodular_inverse(u);
    // u * inv = identity
    for (size_t i = 0; i < 4; ++i) {
        zvec row = row_times_zmat(u[i], inv);
        for (size_t j = 0; j < 4; ++j) CHECK(row[j] == (i == j ? 1 : 0));
    }
    CHECK_THROWS_AS(unimodular_with_first_row({Int(2), Int(4)}), qerror);
}
