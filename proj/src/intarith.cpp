#include "ilab/intarith.hpp"

#include <algorithm>
#include <map>

namespace ilab {

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

std::string to_string(const Int& n) { return n.get_str(); }

namespace {

// Strong probable-prime test to base a; n odd, n > 2.
bool miller_rabin(const Int& n, const Int& a_in) {
    Int a = a_in % n;
    if (a == 0) return true;
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

const unsigned long kSmallWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

PrimalityResult is_prime_detail(const Int& n) {
    PrimalityResult r;
    if (n < 2) return r;
    for (unsigned long p : kSmallWitnesses) {
        if (n == p) { r.prime = true; return r; }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return r;
    }
    Int two_64 = Int(1) << 64;
    if (n < two_64) {
        // The 12 witnesses above decide primality for every n < 2^64.
        for (unsigned long a : kSmallWitnesses)
            if (!miller_rabin(n, Int(a))) return r;
        r.prime = true;
        return r;
    }
    // 64 rounds of Miller-Rabin with deterministic pseudo-random bases:
    // composite escape probability < 4^-64 = 2^-128.
    gmp_randstate_t st;
    gmp_randinit_mt(st);
    gmp_randseed_ui(st, 0x11ab5eedUL);
    bool ok = true;
    for (int i = 0; i < 64 && ok; ++i) {
        Int a;
        mpz_urandomm(a.get_mpz_t(), st, Int(n - 3).get_mpz_t());
        a += 2;
        ok = miller_rabin(n, a);
    }
    gmp_randclear(st);
    r.prime = ok;
    r.probable = ok;
    return r;
}

bool is_prime(const Int& n) { return is_prime_detail(n).prime; }

namespace {

// Brent's variant of Pollard rho.  Returns a nontrivial factor of n
// (composite, odd, not a perfect power of a found prime necessarily),
// or nullopt when the iteration budget runs out.
std::optional<Int> pollard_brent(const Int& n, unsigned long long budget, unsigned long c0) {
    if (mpz_even_p(n.get_mpz_t())) return Int(2);
    unsigned long long used = 0;  // shared across retry polynomials
    for (unsigned long c = c0; c < c0 + 16; ++c) {
        Int y = 2, r = 1, q = 1, g = 1, x, ys;
        const unsigned long m = 128;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            used += mpz_get_ui(r.get_mpz_t());
            if (used > budget) return std::nullopt;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = m;
                if (r - k < lim) lim = mpz_get_ui(Int(r - k).get_mpz_t());
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                }
                g = gcd(q, n);
                k += lim;
                used += lim;
                if (used > budget) return std::nullopt;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time.
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(x > ys ? x - ys : ys - x, n);
                if (++used > budget) return std::nullopt;
            }
        }
        if (g != n) return g;
        // g == n: cycle degenerated, retry with another polynomial.
    }
    return std::nullopt;
}

}  // namespace

bool FactoredInt::has_prime(const Int& p) const {
    for (auto& [q, e] : factors)
        if (q == p) return true;
    return false;
}

unsigned FactoredInt::exponent_of(const Int& p) const {
    for (auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

std::set<Int> FactoredInt::support() const {
    std::set<Int> s;
    for (auto& [q, e] : factors) s.insert(q);
    return s;
}

Int FactoredInt::recompose() const {
    Int v = cofactor;
    for (auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return sign * v;
}

FactoredInt factor(const Int& n, const FactorOptions& opts) {
    if (n == 0) throw ZeroInput();
    FactoredInt out;
    out.value = n;
    out.sign = n < 0 ? -1 : 1;
    Int m = abs(n);
    std::map<Int, unsigned> fac;

    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e) fac[p] += e;
    };

    strip(Int(2));
    for (unsigned long p = 3; p <= opts.trial_bound && m > 1; p += 2) {
        if (Int(p) * p > m) break;
        strip(Int(p));
    }
    if (m > 1 && Int(opts.trial_bound) * Int(opts.trial_bound) >= m) {
        // Remainder below trial-bound squared must be prime.
        fac[m] += 1;
        m = 1;
    }

    // Pollard stage on whatever survives trial division.
    std::vector<Int> stack;
    if (m > 1) stack.push_back(m);
    Int residual = 1;
    unsigned long salt = 1;
    while (!stack.empty()) {
        Int v = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (is_prime(v)) {
            fac[v] += 1;
            continue;
        }
        if (auto r = perfect_square_root(v)) {
            stack.push_back(*r);
            stack.push_back(*r);
            continue;
        }
        auto d = pollard_brent(v, opts.rho_budget, salt++);
        if (!d) {
            residual *= v;  // budget exhausted: composite cofactor
            continue;
        }
        stack.push_back(*d);
        stack.push_back(v / *d);
    }

    for (auto& [p, e] : fac) out.factors.emplace_back(p, e);
    out.cofactor = residual;
    out.complete = (residual == 1);
    return out;
}

unsigned valuation(const Int& n, const Int& p) {
    if (n == 0) throw ZeroInput();
    Int m = abs(n);
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

bool prime_support_within(const Int& n, const std::set<Int>& S) {
    if (n == 0) throw ZeroInput();
    Int m = abs(n);
    for (const Int& p : S) {
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()))
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    }
    return m == 1;
}

std::pair<Int, Int> crt(const std::vector<std::pair<Int, Int>>& residues) {
    Int a = 0, M = 1;
    for (auto& [r, m] : residues) {
        if (m <= 0) throw NonCoprimeModuli();
        Int g = gcd(M, m);
        if (g != 1) throw NonCoprimeModuli();
        // a' = a mod M, r mod m.
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), M.get_mpz_t(), m.get_mpz_t()) == 0 && m != 1)
            throw NonCoprimeModuli();
        Int t = ((r - a) % m * inv) % m;
        if (t < 0) t += m;
        a += M * t;
        M *= m;
        a %= M;
        if (a < 0) a += M;
    }
    return {a, M};
}

std::optional<Int> perfect_square_root(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& n) { return perfect_square_root(n).has_value(); }

Int next_prime(const Int& n) {
    Int p;
    mpz_nextprime(p.get_mpz_t(), n.get_mpz_t());
    return p;
}

std::vector<unsigned long> primes_up_to(unsigned long bound) {
    std::vector<bool> comp(bound + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= bound; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (unsigned long j = i * i; j <= bound; j += i) comp[j] = true;
    }
    return out;
}

}  // namespace ilab
