#ifndef QUATRING_LINALG_HPP_
#define QUATRING_LINALG_HPP_

#include <optional>
#include <vector>

#include "quatring/arith.hpp"

namespace quatring {

using qvec = std::vector<Rat>;
using qmat = std::vector<qvec>;  // rows
using zvec = std::vector<Int>;
using zmat = std::vector<zvec>;  // rows

qmat qmat_identity(int n);
qmat qmat_mul(const qmat& a, const qmat& b);
qmat qmat_transpose(const qmat& a);
qvec row_times_mat(const qvec& x, const qmat& a);
Rat qmat_det(qmat a);
qmat qmat_inverse(const qmat& a);  // throws qerror("singular")

/* Reduced row echelon form in place; returns pivot columns. */
std::vector<int> rref(qmat& a);

/* Basis of { x : a x = 0 } (x as length-ncols vectors), scaled to primitive
 * integer vectors with positive leading entry.  Deterministic. */
std::vector<qvec> kernel_basis(const qmat& a);

/* One exact solution of a x = b, or nullopt when inconsistent. */
std::optional<qvec> solve(const qmat& a, const qvec& b);

/* Row Hermite normal form: upper echelon, positive pivots, entries above a
 * pivot reduced into [0, pivot).  Zero rows are dropped. */
zmat hnf(zmat rows);

/* Member test of v against HNF rows. */
bool hnf_contains(const zmat& h, zvec v);

Int zmat_det(zmat a);

/* Unimodular matrix whose first row is the given primitive vector. */
zmat unimodular_with_first_row(const zvec& c);

/* Inverse of a matrix with determinant +-1. */
zmat unimodular_inverse(const zmat& u);

zvec row_times_zmat(const zvec& x, const zmat& a);

}  // namespace quatring

#endif  // QUATRING_LINALG_HPP_
