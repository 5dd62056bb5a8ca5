#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quatring/quadform.hpp"

using namespace quatring;

namespace {

quad_form random_integral_form(seeded_rng& rng, int rank) {
    quad_form f = quad_form::zero(rank);
    for (int i = 0; i < rank; ++i) {
        f.q[i] = Rat(Int(rng.below_u64(41)) - 20);
        // sprinkle extra p-powers to vary valuations
        if (rng.below_u64(4) == 0) f.q[i] *= 4;
        if (rng.below_u64(5) == 0) f.q[i] *= 3;
        for (int j = i + 1; j < rank; ++j) {
            Rat v = Rat(Int(rng.below_u64(41)) - 20);
            if (rng.below_u64(4) == 0) v *= 2;
            f.set_t(i, j, v);
        }
    }
    return f;
}

}  // namespace

TEST_CASE("normalize <1,-1> over Q") {
    quad_form f = quad_form::diagonal({Rat(1), Rat(-1)});
    auto nd = normalize(f, local_ring::rationals());
    REQUIRE(nd.blocks.size() == 2);
    CHECK_FALSE(nd.blocks[0].binary);
    CHECK(nd.blocks[0].u == 1);
    CHECK(nd.blocks[0].e == 0);
    CHECK(nd.blocks[1].u == -1);
    CHECK(nd.basis == qmat_identity(2));
}

TEST_CASE("normalize xy over Z_(2): atomic binary [0,1,0]") {
    quad_form f = quad_form::zero(2);
    f.set_t(0, 1, Rat(1));
    auto nd = normalize(f, local_ring::at_prime(2));
    REQUIRE(nd.blocks.size() == 1);
    CHECK(nd.blocks[0].binary);
    CHECK(nd.blocks[0].e == 0);
    CHECK(nd.blocks[0].a == 0);
    CHECK(nd.blocks[0].b == 1);
    CHECK(nd.blocks[0].c == 0);
}

TEST_CASE("normalize 2x^2+2xy+2y^2 over Z_(2): [1,1,1] at valuation 1") {
    quad_form f = quad_form::diagonal({Rat(2), Rat(2)});
    f.set_t(0, 1, Rat(2));
    auto nd = normalize(f, local_ring::at_prime(2));
    REQUIRE(nd.blocks.size() == 1);
    CHECK(nd.blocks[0].binary);
    CHECK(nd.blocks[0].e == 1);
    CHECK(nd.blocks[0].a == 1);
    CHECK(nd.blocks[0].b == 1);
    CHECK(nd.blocks[0].c == 1);
}

TEST_CASE("zero form and zero columns") {
    auto nd = normalize(quad_form::zero(3), local_ring::at_prime(2));
    REQUIRE(nd.blocks.size() == 3);
    for (const auto& b : nd.blocks) {
        CHECK_FALSE(b.binary);
        CHECK(b.e == ord_infinity);
        CHECK(b.u == 0);
    }
    // <1, 0>: the zero column sorts last
    quad_form f = quad_form::diagonal({Rat(1), Rat(0)});
    auto nd2 = normalize(f, local_ring::at_prime(3));
    REQUIRE(nd2.blocks.size() == 2);
    CHECK(nd2.blocks[0].e == 0);
    CHECK(nd2.blocks[1].e == ord_infinity);
}

TEST_CASE("radical") {
    // <1,-a,-b,ab> is nonsingular for ab != 0
    quad_form nrd = quad_form::diagonal({Rat(1), Rat(1), Rat(1), Rat(1)});
    CHECK(radical(nrd).empty());
    CHECK(is_nonsingular(nrd));

    CHECK(radical(quad_form::zero(3)).size() == 3);

    quad_form f = quad_form::diagonal({Rat(1), Rat(0)});
    auto rad = radical(f);
    REQUIRE(rad.size() == 1);
    CHECK(rad[0][0] == 0);
    CHECK(rad[0][1] == 1);
}

TEST_CASE("transport identities") {
    quad_form f = quad_form::zero(2);
    f.set_t(0, 1, Rat(1));  // xy
    CHECK(transport(f, qmat_identity(2)) == f);
    qmat swap = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(transport(f, swap) == f);
    CHECK_THROWS_AS(transport(f, qmat(2, qvec(2, Rat(0)))), qerror);
}

TEST_CASE("integrality precondition") {
    quad_form f = quad_form::diagonal({Rat(1, 2), Rat(1)});
    CHECK_THROWS_AS(normalize(f, local_ring::at_prime(2)), qerror);
    CHECK_NOTHROW(normalize(f, local_ring::at_prime(3)));
    CHECK_NOTHROW(normalize(f, local_ring::rationals()));
}

TEST_CASE("normalization property battery") {
    seeded_rng rng(2024);
    std::vector<local_ring> rings = {local_ring::rationals(), local_ring::at_prime(2),
                                     local_ring::at_prime(3), local_ring::at_prime(5)};
    for (int trial = 0; trial < 1000; ++trial) {
        int rank = 1 + static_cast<int>(rng.below_u64(4));
        quad_form f = random_integral_form(rng, rank);
        const auto& r = rings[trial % rings.size()];
        auto nd = normalize(f, r);  // internal checks cover transport + atomicity

        // base change invertible over the ring
        Rat det = qmat_det(nd.basis);
        REQUIRE(det != 0);
        if (!r.field) CHECK(r.ord(det) == 0);

        // binary blocks only at p = 2; nondecreasing valuations
        long last = 0;
        for (const auto& b : nd.blocks) {
            if (b.binary) CHECK((!r.field && r.p == 2));
            CHECK(b.e >= last);
            last = b.e;
        }

        // Gram determinants differ exactly by det(basis)^2
        Rat din = qmat_det(f.gram_matrix());
        Rat dout = qmat_det(nd.block_form().gram_matrix());
        CHECK(dout == det * det * din);
        if (!r.field && din != 0) CHECK(r.ord(dout) == r.ord(din));

        // radical dimension matches the count of infinite-valuation blocks
        size_t zero_blocks = 0;
        for (const auto& b : nd.blocks)
            if (b.e == ord_infinity) ++zero_blocks;
        CHECK(radical(f).size() == zero_blocks);

        // radical dimension invariant under an invertible transport
        qmat p = qmat_identity(rank);
        if (rank > 1) {
            p[0][rank - 1] = Rat(Int(rng.below_u64(7)) - 3);
            p[rank - 1][0] += p[0][rank - 1] == 0 ? Rat(1) : Rat(0);
        }
        CHECK(radical(transport(f, p)).size() == radical(f).size());
    }
}
