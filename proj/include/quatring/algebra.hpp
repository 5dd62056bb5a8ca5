#ifndef QUATRING_ALGEBRA_HPP_
#define QUATRING_ALGEBRA_HPP_

#include <optional>
#include <vector>

#include "quatring/quadform.hpp"

namespace quatring {

/* A rank-n Q-algebra given by structure constants c[i][j][k] with
 * e_1 = 1 and associativity checked on all basis triples. */
class mult_table {
  public:
    static mult_table create(int n, std::vector<Rat> constants);
    /* Accepts tables whose identity is not e_1: recovers the identity by
     * linear algebra and rewrites the table in a basis starting with it. */
    static mult_table create_with_recovered_identity(int n, std::vector<Rat> constants);

    int dim() const { return n_; }
    const Rat& c(int i, int j, int k) const { return c_[(i * n_ + j) * n_ + k]; }

    qvec multiply(const qvec& x, const qvec& y) const;
    qvec one() const;
    qvec basis_element(int i) const;
    bool is_scalar(const qvec& x) const;  // coordinates 2..n all zero

    bool operator==(const mult_table& o) const { return n_ == o.n_ && c_ == o.c_; }

  private:
    mult_table(int n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}
    int n_;
    std::vector<Rat> c_;
};

/* Trace and norm data recovered by the degree-2 test: e_i^2 = t_i e_i - n_i
 * and (e_i+e_j)^2 = (t_i+t_j)(e_i+e_j) - n_ij, all scalars. */
struct std_involution {
    int n = 0;
    std::vector<Rat> t;               // index 1..n-1 (basis elements past 1)
    std::vector<Rat> nval;            // same indexing
    std::vector<std::vector<Rat>> nij;  // i < j, both >= 1

    Rat trd(const qvec& x) const;
    Rat nrd(const qvec& x) const;
    qvec conj(const qvec& x) const;
    quad_form nrd_form() const;  // nrd as a quadratic form on the basis
    Rat bilinear(const qvec& x, const qvec& y) const;  // T(x,y) = nrd(x+y)-nrd(x)-nrd(y)
};

/* Algorithm: degree-2 test.  Returns the involution data iff every n_i and
 * n_ij is a scalar; the induced map x -> trd(x) - x is then the unique
 * standard involution. */
std::optional<std_involution> has_standard_involution(const mult_table& b, trace_log* tr = nullptr);

/* Basis of { x : x e_i = e_i x for all i }. */
std::vector<qvec> center(const mult_table& b);

/* rad(B) = rad(nrd) for a rank-4 algebra with a standard involution. */
std::vector<qvec> jacobson_radical(const mult_table& b);

/* Table in the basis given by the rows of p; p[0] must be e_1. */
mult_table change_basis(const mult_table& b, const qmat& p);

}  // namespace quatring

#endif  // QUATRING_ALGEBRA_HPP_
