#ifndef QUATRING_ORDERS_HPP_
#define QUATRING_ORDERS_HPP_

#include <array>

#include "quatring/symbols.hpp"

namespace quatring {

/* Z-order in (a, b | Q): denominator d and a 4x4 integer matrix in row
 * Hermite normal form whose rows, divided by d, are a basis in coordinates
 * 1, i, j, ij.  Construction verifies the ring axioms. */
class order_z {
  public:
    static order_z create(const quat_alg& alg, const Int& den, zmat rows);
    static order_z from_rational_rows(const quat_alg& alg, const std::vector<qvec>& rows);

    const quat_alg& algebra() const { return alg_; }
    const Int& den() const { return den_; }
    const zmat& rows() const { return rows_; }

    qvec basis_element(int i) const;  // rows_[i] / den_
    bool contains(const qvec& x) const;
    bool contains_order(const order_z& other) const;
    /* index [this : sub] as a positive rational (integer when sub is inside) */
    Rat index_in(const order_z& sub) const;

    bool operator==(const order_z& o) const {
        return alg_.a == o.alg_.a && alg_.b == o.alg_.b && den_ == o.den_ && rows_ == o.rows_;
    }

  private:
    order_z(quat_alg alg, Int den, zmat rows)
        : alg_(std::move(alg)), den_(std::move(den)), rows_(std::move(rows)) {}
    quat_alg alg_;
    Int den_;
    zmat rows_;  // HNF
};

/* Square-class representatives: a, b scaled by rational squares to the
 * squarefree integers sign(x) sqrad(|num den|). */
quat_alg integralize(const quat_alg& alg);

/* The free order 1, i, j, ij of the integralized algebra. */
order_z standard_order(const quat_alg& alg);

/* Multiplicative closure of a starting lattice plus integral generators;
 * fails with "not_an_order" when the lattice does not stabilize. */
order_z order_from_generators(const quat_alg& alg, const std::vector<qvec>& gens,
                              int max_rounds = 20);

struct disc_data {
    Int disc;     // |det trd(x_i x_j)|
    Int reduced;  // square root
};

/* Discriminant with the wedge-product route checked internally. */
disc_data discriminant(const order_z& o);

bool is_maximal(const order_z& o);

struct saturated_order {
    order_z order;
    std::array<qvec, 4> basis;       // p-local basis 1, i, j, k
    std::vector<atom_block> blocks;  // normalized blocks of nrd on that basis
};

saturated_order p_saturate(const order_z& o, const Int& p, trace_log* tr = nullptr);

order_z p_maximalize(const order_z& o, const Int& p, trace_log* tr = nullptr);

order_z max_order(const order_z& o, trace_log* tr = nullptr);

/* Reduction demo: factor odd composite n through a maximal order of
 * (n, b | Q); our maximal-order engine itself factors, so this demonstrates
 * the reduction rather than providing a factoring method. */
Int factor_via_maxorder(const Int& n, std::uint64_t seed);

/* Direct residuosity test: a square mod sqrad(b)?  Factors b. */
bool quadratic_residuosity(const Int& a, const Int& b);

struct residuosity_result {
    bool value;
    bool used_fallback;  // direct route taken (hypotheses absent)
    Int ell;             // auxiliary prime when the splitting route ran
};

/* Residuosity through the matrix-ring decision on (a, ell b | Q) for an
 * auxiliary prime ell found by progression search. */
residuosity_result residuosity_via_splitting(const Int& a, const Int& b, std::uint64_t seed);

/* Matrix-ring decision reduced to residuosity tests mod sqrad of the
 * coefficient parts, plus the symbols at 2 and the real place. */
bool is_matrix_ring_via_residuosity(const quat_alg& alg);

}  // namespace quatring

#endif  // QUATRING_ORDERS_HPP_
