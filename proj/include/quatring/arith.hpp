#ifndef QUATRING_ARITH_HPP_
#define QUATRING_ARITH_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace quatring {

using Int = mpz_class;
using Rat = mpq_class;

/* Library error with a stable machine-readable code ("not_prime",
 * "no_square_root", "bound_exhausted", "not_an_order", ...). */
struct qerror : std::runtime_error {
    std::string code;
    qerror(std::string c, const std::string& msg)
        : std::runtime_error(msg), code(std::move(c)) {}
};

struct internal_error : qerror {
    explicit internal_error(const std::string& msg) : qerror("internal", msg) {}
};

/* Extended valuation: ord(0) = ord_infinity. */
inline constexpr long ord_infinity = std::numeric_limits<long>::max();

/* A place of Q: a finite prime p or the real place. */
struct place {
    bool real_place;
    Int p;  // prime when finite

    static place real() { return place{true, Int(0)}; }
    static place finite(const Int& p);  // checks p prime

    bool is_real() const { return real_place; }
    bool is_finite() const { return !real_place; }
    bool is_even() const { return !real_place && p == 2; }
    std::string str() const { return real_place ? "inf" : p.get_str(); }

    friend bool operator==(const place& a, const place& b) {
        return a.real_place == b.real_place && (a.real_place || a.p == b.p);
    }
    friend bool operator<(const place& a, const place& b) {
        if (a.real_place != b.real_place) return !a.real_place;  // finite first
        if (a.real_place) return false;
        return a.p < b.p;
    }
};

struct factor_entry {
    Int prime;
    unsigned exponent;
};

/* Sign and prime powers, primes strictly increasing; reconstructs the input. */
struct factorization {
    int sign = 1;
    std::vector<factor_entry> entries;

    Int value() const;
};

/* Deterministic RNG: mt19937_64 plus hand-rolled rejection sampling, so that
 * identical seeds give identical streams on every platform. */
class seeded_rng {
  public:
    explicit seeded_rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }
    std::uint64_t below_u64(std::uint64_t n);
    Int below(const Int& n);  // uniform in [0, n), n > 0

  private:
    std::mt19937_64 gen_;
};

/* ord_p of a nonzero integer. */
long ord_p_int(const Int& x, const Int& p);

/* Valuation at a place.  Finite v: exponent of p (negatives allowed),
 * ord(0) = ord_infinity.  Real v: 0 if x > 0, 1 if x < 0 (the sign
 * convention making -1 a uniformizer), ord_infinity if x = 0. */
long ord_v(const Rat& x, const place& v);

/* Legendre symbol by Euler's criterion (repeated squaring); p an odd prime. */
int legendre(const Int& a, const Int& p);
int legendre_unchecked(const Int& a, const Int& p);

/* Legendre symbol of a p-unit rational (numerator times inverse denominator). */
int legendre_rat(const Rat& a, const Int& p);

/* Square root mod p (Tonelli-Shanks for odd p), canonical r <= p - r.
 * Throws qerror("no_square_root") on a nonresidue. */
Int sqrt_mod_p(const Int& a, const Int& p);

/* Exact Miller-Rabin below 2^64, seeded 64-round Miller-Rabin above. */
bool is_prime(const Int& n);

/* Trial division to 10^4 then Pollard rho (Brent), deterministic in n. */
factorization factor(const Int& n);

/* Product of primes dividing n to odd exponent, n >= 1. */
Int sqrad(const Int& n);

/* Proven prime l ≡ b (mod q), 2 <= l < bound, or qerror("bound_exhausted"). */
Int random_prime_in_progression(const Int& b, const Int& q, const Int& bound,
                                seeded_rng& rng, long budget = 10000);

/* mod in [0, m), m > 0. */
Int mod_floor(const Int& a, const Int& m);

/* Inverse of a mod m, gcd(a, m) = 1. */
Int inv_mod(const Int& a, const Int& m);

Int powmod(const Int& base, const Int& exp, const Int& m);

}  // namespace quatring

#endif  // QUATRING_ARITH_HPP_
