#ifndef QUATRING_QUATERNION_HPP_
#define QUATRING_QUATERNION_HPP_

#include <array>
#include <optional>
#include <variant>

#include "quatring/algebra.hpp"

namespace quatring {

/* (a, b | Q): i^2 = a, j^2 = b, ji = -ij. */
struct quat_alg {
    Rat a, b;
    quat_alg(Rat a_, Rat b_);
};

mult_table standard_table(const quat_alg& alg);

/* closed-form arithmetic in coordinates 1, i, j, ij */
qvec quat_mul(const quat_alg& alg, const qvec& x, const qvec& y);
Rat quat_trd(const qvec& x);
Rat quat_nrd(const quat_alg& alg, const qvec& x);
qvec quat_conj(const qvec& x);

struct recognition {
    quat_alg alg;
    qvec gen_i, gen_j, gen_k;  // coordinates in the input basis
    qmat basis;                // normalized basis rows 1, i, j, k
};

struct recognize_failure {
    enum kind { no_involution, singular_norm } why;
    std::vector<qvec> radical;  // filled in the singular case
};

/* Quaternion recognition: standard involution test, norm normalization over Q,
 * nonsingularity; on success a = i^2 and b = j^2 read off the basis. */
std::variant<recognition, recognize_failure> recognize(const mult_table& b, trace_log* tr = nullptr);

/* From a zerodivisor certificate (x != 0, nrd(x) = 0) to e != 0 with e^2 = 0. */
qvec nilpotent_from_zerodivisor(const mult_table& b, const std_involution& inv, const qvec& x,
                                trace_log* tr = nullptr);

using mat2 = std::array<std::array<Rat, 2>, 2>;

struct splitting {
    qvec i_prime, j_prime;  // new standard generators with squares 1
    mat2 image_i, image_j;  // 2x2 images of the original standard generators
    qvec nilpotent;
};

/* Explicit splitting of a standard-form algebra from a nilpotent e. */
splitting split_from_nilpotent(const quat_alg& alg, const qvec& e, trace_log* tr = nullptr);

/* Ternary conic; diagonal <-a, -b, ab> in the standard case, but general
 * ternary forms are accepted. */
struct conic {
    quad_form form;  // rank 3
    static conic diagonal(const Rat& c1, const Rat& c2, const Rat& c3);
};

conic conic_of(const quat_alg& alg);
quat_alg algebra_of_conic(const Rat& a, const Rat& b, const Rat& c);

/* Exhaustive primitive search by increasing max-norm then lexicographic order;
 * the returned point is sign-normalized (first nonzero coordinate positive).
 * Definite forms short-circuit to "none". */
std::optional<std::array<Int, 3>> find_isotropic_naive(const conic& c, long height);

/* Point on the conic mod p via a random line and a square root; exhaustive
 * over the 7 points of P^2(F_2) when p = 2. */
std::array<Int, 3> conic_point_mod_p(const conic& c, const Int& p, seeded_rng& rng);

}  // namespace quatring

#endif  // QUATRING_QUATERNION_HPP_
