#ifndef ILAB_INTARITH_HPP
#define ILAB_INTARITH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ilab {

using Int = mpz_class;

struct ZeroInput : std::invalid_argument {
    ZeroInput() : std::invalid_argument("input must be nonzero") {}
};
struct NonCoprimeModuli : std::invalid_argument {
    NonCoprimeModuli() : std::invalid_argument("moduli are not pairwise coprime") {}
};

/// Primality. Deterministic (Miller-Rabin with a proven witness set) for
/// n < 2^64; strong-probable-prime with error < 2^-128 beyond, in which
/// case `probable` is set.
struct PrimalityResult {
    bool prime = false;
    bool probable = false;  // true when only a probabilistic certificate exists
};

PrimalityResult is_prime_detail(const Int& n);
bool is_prime(const Int& n);

/// Budgets for factor(). rho_budget is an iteration cap per cofactor;
/// once exhausted the remaining cofactor is returned composite-flagged.
struct FactorOptions {
    unsigned long trial_bound = 100000;
    unsigned long long rho_budget = 1000000000ULL;
};

/// Signed integer with (possibly partial) prime factorization.
/// value = sign * cofactor * prod p^e, cofactor = 1 when complete.
struct FactoredInt {
    Int value;
    std::vector<std::pair<Int, unsigned>> factors;  // primes strictly increasing
    Int cofactor = 1;        // |cofactor| = 1 iff complete (sign kept in `sign`)
    bool complete = true;
    int sign = 1;

    bool has_prime(const Int& p) const;
    unsigned exponent_of(const Int& p) const;
    std::set<Int> support() const;  // known prime support
    Int recompose() const;
};

FactoredInt factor(const Int& n, const FactorOptions& opts = {});

/// Largest e with p^e | n.  n != 0, p prime.
unsigned valuation(const Int& n, const Int& p);

/// True iff every prime divisor of n lies in S.  Factoring-free: strips
/// powers of the members of S and tests the remainder for +-1.
bool prime_support_within(const Int& n, const std::set<Int>& S);

/// Chinese remainder: residues (r_i, m_i) with pairwise coprime m_i.
/// Returns (a, M) with a == r_i mod m_i, 0 <= a < M = prod m_i.
std::pair<Int, Int> crt(const std::vector<std::pair<Int, Int>>& residues);

/// Perfect-square test; returns the nonnegative root when true.
std::optional<Int> perfect_square_root(const Int& n);
bool is_perfect_square(const Int& n);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int abs(const Int& a);

/// Smallest prime strictly greater than n (probable-prime beyond 2^64,
/// which the desk-scale callers never reach).
Int next_prime(const Int& n);

/// All primes <= bound, by sieve.
std::vector<unsigned long> primes_up_to(unsigned long bound);

std::string to_string(const Int& n);

}  // namespace ilab

#endif
