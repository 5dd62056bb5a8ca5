#ifndef QUATRING_SYMBOLS_HPP_
#define QUATRING_SYMBOLS_HPP_

#include <vector>

#include "quatring/quaternion.hpp"

namespace quatring {

/* Square symbol (a | v) for an odd place: 1 if a is a square in Q_v, -1 for
 * the unramified nonsquare class, 0 when ord_v(a) is odd; at the real place
 * 1 or 0 according as a > 0 or a < 0. */
int square_symbol(const Rat& a, const place& v);

/* Hilbert symbol at an odd prime via the square-symbol criterion. */
int hilbert_odd(const Rat& a, const Rat& b, const Int& p);

int hilbert_real(const Rat& a, const Rat& b);

/* Solution of 1 - a y^2 - b z^2 = 0 mod 4 with y odd, for ord2(a) = 0 and
 * ord2(b) = 1, by the Hensel-style lift (p = 2, e = f = 1). */
struct even_norm_solution {
    Int y, z;  // residues mod 4
};
even_norm_solution even_norm_lift(const Int& a, const Int& b, trace_log* tr = nullptr);

/* Witness y, z, w mod 4 with 1 - a y^2 - b z^2 + a b w^2 = 0 mod 4, y odd;
 * preconditions ord2(a) = 0 and ord2(b) in {0, 1}. */
struct even_lift_witness {
    Int y, z, w;  // residues mod 4
};
even_lift_witness valuation_game(const Int& a, const Int& b, trace_log* tr = nullptr);

/* Dyadic Hilbert symbol (a, b)_2. */
int hilbert_even(const Rat& a, const Rat& b, trace_log* tr = nullptr);

/* Reduction of an arbitrary nonzero rational pair to integers with
 * ord2(a) = 0, ord2(b) in {0, 1}: square scalings, (a,b) -> (-ab, b), swap. */
std::pair<Int, Int> dyadic_reduce(const Rat& a, const Rat& b);

int hilbert(const Rat& a, const Rat& b, const place& v, trace_log* tr = nullptr);

std::vector<place> ramified_set(const quat_alg& alg);
Int algebra_discriminant(const quat_alg& alg);
bool is_matrix_ring_global(const quat_alg& alg);

/* Jacobi symbol (a | b) for odd b != 0 (taken mod |b|), by the Euclidean
 * reduce-and-flip loop whose flips are products of symbols over v | 2oo. */
int jacobi(const Int& a, const Int& b, trace_log* tr = nullptr);

struct reciprocity_report {
    std::vector<std::pair<place, int>> symbols;  // over supp(2 a b oo)
    int product;
};
reciprocity_report local_symbols(const Rat& a, const Rat& b);
bool reciprocity_check(const Rat& a, const Rat& b);

}  // namespace quatring

#endif  // QUATRING_SYMBOLS_HPP_
