#include "quatring/arith.hpp"

#include <algorithm>
#include <array>

namespace quatring {

place place::finite(const Int& p) {
    if (p < 2 || !is_prime(p)) throw qerror("not_prime", "place: " + p.get_str() + " is not prime");
    return place{false, p};
}

Int factorization::value() const {
    Int v = sign;
    for (const auto& e : entries) {
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), e.prime.get_mpz_t(), e.exponent);
        v *= pk;
    }
    return v;
}

std::uint64_t seeded_rng::below_u64(std::uint64_t n) {
    if (n == 0) throw internal_error("below_u64: empty range");
    std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        std::uint64_t r = gen_();
        if (r < lim) return r % n;
    }
}

Int seeded_rng::below(const Int& n) {
    if (n <= 0) throw internal_error("rng below: empty range");
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    // assemble from 64-bit words, mask to bit length, reject out-of-range
    for (;;) {
        Int r = 0;
        size_t words = (bits + 63) / 64;
        for (size_t i = 0; i < words; ++i) {
            std::uint64_t w = gen_();
            Int piece;
            mpz_import(piece.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
            r = (r << 64) | piece;
        }
        mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), bits);
        if (r < n) return r;
    }
}

long ord_p_int(const Int& x, const Int& p) {
    if (x == 0) return ord_infinity;
    Int rest;
    mp_bitcnt_t k = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return static_cast<long>(k);
}

long ord_v(const Rat& x, const place& v) {
    if (x == 0) return ord_infinity;
    if (v.is_real()) return x > 0 ? 0 : 1;
    return ord_p_int(x.get_num(), v.p) - ord_p_int(x.get_den(), v.p);
}

int legendre_unchecked(const Int& a, const Int& p) {
    Int m = mod_floor(a, p);
    if (m == 0) return 0;
    Int e = (p - 1) / 2;
    Int r = powmod(m, e, p);
    if (r == 1) return 1;
    if (r == p - 1) return -1;
    throw qerror("not_prime", "legendre: modulus " + p.get_str() + " is not prime");
}

int legendre(const Int& a, const Int& p) {
    if (p == 2 || p < 3 || !is_prime(p))
        throw qerror("not_prime", "legendre: " + p.get_str() + " is not an odd prime");
    return legendre_unchecked(a, p);
}

int legendre_rat(const Rat& a, const Int& p) {
    Int num = mod_floor(a.get_num(), p);
    Int den = mod_floor(a.get_den(), p);
    if (den == 0) throw qerror("not_unit", "legendre_rat: denominator divisible by p");
    return legendre_unchecked(num * inv_mod(den, p), p);
}

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw qerror("not_unit", "inv_mod: not invertible");
    return r;
}

Int powmod(const Int& base, const Int& exp, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

namespace {

bool miller_rabin_witness(const Int& n, const Int& a) {
    // returns true if a proves n composite
    Int m = mod_floor(a, n);
    if (m == 0) return false;
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    Int x = powmod(m, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
        if (x == 1) return true;
    }
    return true;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int q : small_primes) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    Int limit64("18446744073709551616");  // 2^64
    if (n < limit64) {
        // deterministic base set for n < 2^64
        for (int q : small_primes)
            if (miller_rabin_witness(n, Int(q))) return false;
        return true;
    }
    // 64 seeded rounds: error probability < 4^-64 = 2^-128
    seeded_rng rng(0x9e3779b97f4a7c15ULL ^ mpz_fdiv_ui(n.get_mpz_t(), 0x7fffffffULL));
    for (int round = 0; round < 64; ++round) {
        Int a = 2 + rng.below(n - 3);
        if (miller_rabin_witness(n, a)) return false;
    }
    return true;
}

namespace {

const std::vector<long>& small_prime_table() {
    static const std::vector<long> table = [] {
        std::vector<long> primes;
        std::vector<bool> sieve(10001, true);
        for (long i = 2; i <= 10000; ++i) {
            if (!sieve[i]) continue;
            primes.push_back(i);
            for (long j = 2 * i; j <= 10000; j += i) sieve[j] = false;
        }
        return primes;
    }();
    return table;
}

Int pollard_rho_brent(const Int& n, seeded_rng& rng) {
    // n odd composite, no factor <= 10^4
    for (int attempt = 0; attempt < 64; ++attempt) {
        Int y = 2 + rng.below(n - 3);
        Int c = 1 + rng.below(n - 2);
        Int m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int rem = r - k;
                Int lim = m < rem ? m : rem;
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x > y ? x - y : y - x;
                    q = (q * diff) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Int diff = x > ys ? x - ys : ys - x;
                g = gcd(diff, n);
            }
        }
        if (g != n && g != 1) return g;
    }
    throw qerror("factor_failed", "pollard rho failed on " + n.get_str());
}

void factor_into(const Int& n, std::vector<factor_entry>& out, seeded_rng& rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back({n, 1});
        return;
    }
    Int d = pollard_rho_brent(n, rng);
    factor_into(d, out, rng);
    factor_into(n / d, out, rng);
}

}  // namespace

factorization factor(const Int& n) {
    if (n == 0) throw qerror("factor_zero", "factor: n = 0");
    factorization f;
    f.sign = n < 0 ? -1 : 1;
    Int m = abs(n);
    for (long q : small_prime_table()) {
        if (m == 1) break;
        if (Int(q) * q > m) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
            m /= q;
            ++e;
        }
        if (e) f.entries.push_back({Int(q), e});
    }
    if (m > 1) {
        if (is_prime(m)) {
            f.entries.push_back({m, 1});
        } else {
            // deterministic seed derived from n
            seeded_rng rng(0xC0FFEEULL ^ mpz_fdiv_ui(m.get_mpz_t(), 0xffffffffULL));
            std::vector<factor_entry> rest;
            factor_into(m, rest, rng);
            std::sort(rest.begin(), rest.end(),
                      [](const factor_entry& a, const factor_entry& b) { return a.prime < b.prime; });
            for (const auto& e : rest) {
                if (!f.entries.empty() && f.entries.back().prime == e.prime)
                    f.entries.back().exponent += e.exponent;
                else
                    f.entries.push_back(e);
            }
        }
    }
    return f;
}

Int sqrad(const Int& n) {
    if (n < 1) throw qerror("bad_argument", "sqrad: n must be positive");
    Int r = 1;
    for (const auto& e : factor(n).entries)
        if (e.exponent % 2 == 1) r *= e.prime;
    return r;
}

Int sqrt_mod_p(const Int& a, const Int& p) {
    if (p < 2 || !is_prime(p)) throw qerror("not_prime", "sqrt_mod_p: modulus not prime");
    Int m = mod_floor(a, p);
    if (p == 2) return m;
    if (m == 0) return Int(0);
    if (legendre_unchecked(m, p) != 1)
        throw qerror("no_square_root", a.get_str() + " is not a square mod " + p.get_str());
    Int r;
    if (p % 4 == 3) {
        r = powmod(m, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        Int q = p - 1;
        unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
        q >>= s;
        Int z = 2;
        while (legendre_unchecked(z, p) != -1) ++z;
        Int c = powmod(z, q, p);
        r = powmod(m, (q + 1) / 2, p);
        Int t = powmod(m, q, p);
        unsigned long mm = s;
        while (t != 1) {
            Int tt = t;
            unsigned long i = 0;
            while (tt != 1) {
                tt = (tt * tt) % p;
                ++i;
                if (i == mm) throw internal_error("tonelli-shanks: order mismatch");
            }
            Int b = c;
            for (unsigned long j = 0; j + i + 1 < mm; ++j) b = (b * b) % p;
            mm = i;
            c = (b * b) % p;
            t = (t * c) % p;
            r = (r * b) % p;
        }
    }
    if (p - r < r) r = p - r;
    return r;
}

Int random_prime_in_progression(const Int& b, const Int& q, const Int& bound,
                                seeded_rng& rng, long budget) {
    if (q < 1 || bound < 2) throw qerror("bad_argument", "prime search: bad modulus or bound");
    if (gcd(b, q) != 1) throw qerror("bad_argument", "prime search: gcd(b, q) != 1");
    Int b0 = mod_floor(b, q);
    // candidates b0 + k q < bound
    if (b0 >= bound) throw qerror("bound_exhausted", "no candidates below bound");
    Int count = (bound - 1 - b0) / q + 1;
    for (long trial = 0; trial < budget; ++trial) {
        Int ell = b0 + q * rng.below(count);
        if (ell >= 2 && is_prime(ell)) return ell;
    }
    throw qerror("bound_exhausted", "prime search budget exhausted");
}

}  // namespace quatring
