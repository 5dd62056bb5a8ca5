#ifndef QUATRING_QUADFORM_HPP_
#define QUATRING_QUADFORM_HPP_

#include <vector>

#include "quatring/linalg.hpp"
#include "quatring/trace.hpp"

namespace quatring {

/* The base ring for form normalization: Q itself (trivial valuation,
 * uniformizer 1) or Z localized at a prime p. */
struct local_ring {
    bool field;
    Int p;

    static local_ring rationals() { return local_ring{true, Int(0)}; }
    static local_ring at_prime(const Int& p);

    long ord(const Rat& x) const;
    Rat uniformizer() const { return field ? Rat(1) : Rat(p); }
    bool half_in_ring() const { return field || p != 2; }
    Rat pi_pow(long e) const;  // uniformizer^e, e >= 0
    std::string str() const { return field ? "Q" : p.get_str(); }
};

/* A quadratic form on a free module, stored by the values Q(e_i) and the
 * off-diagonal bilinear values T(e_i, e_j).  The Gram matrix is derived
 * (diagonal 2 q_i), so nothing is lost at p = 2. */
struct quad_form {
    int rank = 0;
    std::vector<Rat> q;                // q[i] = Q(e_i)
    std::vector<std::vector<Rat>> t;   // t[i][j] = T(e_i, e_j), i < j

    static quad_form zero(int rank);
    static quad_form diagonal(const std::vector<Rat>& d);

    const Rat& tval(int i, int j) const;  // i != j
    void set_t(int i, int j, const Rat& v);
    Rat gram(int i, int j) const;  // T(e_i, e_j), diagonal 2 q_i
    qmat gram_matrix() const;

    Rat eval(const qvec& x) const;
    Rat bilinear(const qvec& x, const qvec& y) const;

    bool operator==(const quad_form& o) const;

    void check_integral(const local_ring& r) const;  // ord >= 0 everywhere
};

/* Atomic block of a normalized form: unary <u> (u = 0 with e = infinity for a
 * zero column) or, for p = 2, binary [a,b,c]; values are after factoring out
 * the uniformizer power pi^e. */
struct atom_block {
    bool binary = false;
    long e = 0;  // valuation; ord_infinity for zero unary blocks
    Rat u;       // unary coefficient
    Rat a, b, c; // binary coefficients
    int size() const { return binary ? 2 : 1; }
};

struct normal_decomp {
    local_ring ring;
    qmat basis;  // rows = output basis vectors in input coordinates
    std::vector<atom_block> blocks;

    quad_form block_form() const;  // the orthogonal sum of pi^e * blocks
};

/* Normalization over a field or a local PID.  The output basis is invertible
 * over the ring and transports the input form exactly onto block_form(). */
normal_decomp normalize(const quad_form& f, const local_ring& r, trace_log* tr = nullptr);

/* Kernel of the Gram bilinear map, as primitive integer vectors. */
std::vector<qvec> radical(const quad_form& f);

bool is_nonsingular(const quad_form& f);

/* Form in the image coordinates: transport(f, p)(x) = f(p x), columns of p
 * are the new basis vectors.  Throws qerror("singular") on singular p. */
quad_form transport(const quad_form& f, const qmat& p);

}  // namespace quatring

#endif  // QUATRING_QUADFORM_HPP_
