#ifndef ILAB_GATE_HPP
#define ILAB_GATE_HPP

#include <optional>
#include <set>

#include "ilab/modpoly.hpp"
#include "ilab/poly.hpp"

namespace ilab {

struct NonConstantGcd : std::runtime_error {
    NonConstantGcd() : std::runtime_error("gcd of the two discriminants is not constant") {}
};
struct NotSeparable : std::runtime_error {
    NotSeparable() : std::runtime_error("polynomial is not separable in x") {}
};
struct NoWitnessInRange : std::runtime_error {
    explicit NoWitnessInRange(const std::string& range)
        : std::runtime_error("no witness found in range " + range) {}
};
struct FixedDivisorViolated : std::runtime_error {
    explicit FixedDivisorViolated(const Int& p)
        : std::runtime_error("every residue mod " + p.get_str() + " is bad") {}
};

struct BadPrime {
    Int p;
    std::vector<Int> bad_residues;  // empty when not enumerated
    Int chosen_residue;
    bool exhaustive;  // true: bad_residues lists every bad residue mod p
};

/// Candidate prime (or unfactored composite) that could not be pinned into
/// the progression; soundness for these is re-checked per specialization.
struct SkippedCandidate {
    Int value;
    bool is_prime;        // false: composite cofactor of a partial factorization
    bool witness_clear;   // G1,G2 do not both vanish at the witness mod value
};

struct Progression {
    Int a{0};
    Int b{1};
    Int member(long k) const { return a + b * k; }
    bool contains(const Int& c) const {
        Int d = (c - a) % b;
        return d == 0;
    }
};

struct Refinement {
    Int t_ref;
    Int modulus;  // prod p^{k_p}
    std::vector<std::pair<Int, unsigned>> exponents;
};

struct GateCertificate {
    BiPoly f;
    int n = 0;
    IntPoly F1;  // disc_x f
    IntPoly F2;  // n(n-1) disc_x(fbar')
    Int N;
    std::set<Int> N_support;
    bool N_support_complete = true;
    IntPoly G1, G2;  // F_i / N
    Int witness_c;
    std::vector<BadPrime> bad_primes;
    std::vector<SkippedCandidate> skipped;
    Progression progression;
    std::optional<Refinement> refinement;

    /// Factoring-free soundness check for one member: the gcd of F1(c) and
    /// F2(c) must be supported on N_support.  This is exactly the
    /// hypothesis-(ii) check, valid standalone for any integer c.
    bool member_supported(const Int& c) const;
};

struct GateOptions {
    Int witness_lo = -10000;
    Int witness_hi = 10000;
    unsigned long residue_enum_bound = 10000000;  // enumerate bad residues for p <= this
    FactorOptions factor_opts{.trial_bound = 100000, .rho_budget = 1u << 22};
};

/// Condition (i): N = gcd(F1, F2) constant; returns (N, G1, G2).
struct GateBase {
    int n;
    IntPoly F1, F2;
    Int N;
    std::set<Int> N_support;
    bool N_support_complete;
    IntPoly G1, G2;
};
GateBase compute_N(const BiPoly& f, const FactorOptions& = {});

/// Condition (ii) for a concrete c, factoring-free.
bool witness_accepted(const IntPoly& F1, const IntPoly& F2, const std::set<Int>& N_support,
                      const Int& c);

/// Smallest-|c| witness in [lo, hi], positives first at equal absolute value.
Int find_witness(const GateBase& base, const Int& lo, const Int& hi);

/// Bad primes of the pair (G1, G2): candidates are the primes dividing
/// Res_t(G1,G2) or gcd(lc G1, lc G2); the bad residues mod p are the common
/// roots of G1 and G2 mod p.
struct BadPrimeScan {
    std::vector<BadPrime> bad;       // nonempty bad-residue sets, pinned later
    std::vector<SkippedCandidate> skipped;
};
BadPrimeScan bad_primes(const IntPoly& G1, const IntPoly& G2, const std::set<Int>& N_support,
                        const Int& witness, const GateOptions& opts = {});

/// CRT of the chosen residues.
Progression build_progression(const std::vector<BadPrime>& bad);

/// Intersect the progression with {t_ref + M Z}, M = prod_{p in S} p^{k_p},
/// k_p = 2 v_p(disc f(t_ref, x)) + 1.  Requires b coprime to S.
std::pair<Progression, Refinement> refine_for_exceptional_primes(const BiPoly& f,
                                                                 const Progression& prog,
                                                                 const Int& t_ref,
                                                                 const std::set<Int>& S);

/// Full pipeline: compute_N, find or check witness, bad primes, progression.
GateCertificate run_gate(const BiPoly& f, const GateOptions& opts = {},
                         std::optional<Int> forced_witness = std::nullopt);

}  // namespace ilab

#endif
