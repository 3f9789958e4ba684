#ifndef ILAB_MODPOLY_HPP
#define ILAB_MODPOLY_HPP

#include <optional>
#include <vector>

#include "ilab/poly.hpp"

namespace ilab {

struct BranchOverflow : std::runtime_error {
    BranchOverflow() : std::runtime_error("singular-root lifting exceeded the branch cap") {}
};

inline constexpr uint64_t kDefaultSeed = 0x11ab0001u;

/// Polynomial over F_p, residues in [0,p).
class ModPoly {
    Int p_;
    std::vector<Int> c_;

  public:
    explicit ModPoly(Int p) : p_(std::move(p)) {}
    ModPoly(Int p, std::vector<Int> coeffs);
    static ModPoly reduce(const IntPoly& f, const Int& p);

    const Int& modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Int& operator[](int i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& lc() const;
    Int eval(const Int& x) const;
    void normalize();
    bool operator==(const ModPoly& o) const { return c_ == o.c_; }

    static ModPoly x(const Int& p);
    static ModPoly constant(const Int& p, const Int& v);
};

ModPoly operator+(const ModPoly& a, const ModPoly& b);
ModPoly operator-(const ModPoly& a, const ModPoly& b);
ModPoly operator*(const ModPoly& a, const ModPoly& b);
ModPoly mod(const ModPoly& a, const ModPoly& b);
ModPoly divexact_mod(const ModPoly& a, const ModPoly& b);
ModPoly monic(const ModPoly& a);
ModPoly gcd_mod(const ModPoly& a, const ModPoly& b);
ModPoly derivative(const ModPoly& a);
ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m);

bool is_squarefree_mod(const ModPoly& a);

/// Full factorization over F_p: squarefree decomposition, distinct-degree
/// splitting, then Cantor-Zassenhaus equal-degree splitting with a
/// deterministic PRNG.  Factors are monic; the product of
/// factor^multiplicity times lc(a) equals a.
std::vector<std::pair<ModPoly, int>> factor_mod(const ModPoly& a, uint64_t seed = kDefaultSeed);

/// Multiset of irreducible-factor degrees of f mod p.
struct DegreePattern {
    std::vector<int> degrees;  // sorted ascending, with multiplicity
    bool squarefree = false;

    int sum() const;
};

DegreePattern degree_pattern(const IntPoly& f, const Int& p, uint64_t seed = kDefaultSeed);

bool is_irreducible_mod(const IntPoly& f, const Int& p, uint64_t seed = kDefaultSeed);

/// All roots of f mod p, sorted.
std::vector<Int> roots_mod_prime(const IntPoly& f, const Int& p, uint64_t seed = kDefaultSeed);

/// All r in [0, p^k) with f(r) = 0 mod p^k.  Simple roots lift by Hensel;
/// singular residues branch level by level with a cap of 10^4 live branches.
std::vector<Int> roots_mod_prime_power(const IntPoly& f, const Int& p, unsigned k,
                                       uint64_t seed = kDefaultSeed);

/// A certified p-adic root: r mod p^(2v+1), v = v_p(disc f), with
/// v_p(f'(r)) <= v, so Newton lifting converges to a unique root in Z_p.
struct HenselRoot {
    Int root;
    Int modulus;  // p^(2v+1)
    unsigned precision;
    unsigned derivative_valuation;
};

std::optional<HenselRoot> hensel_certified_root(const IntPoly& f, const Int& p,
                                                uint64_t seed = kDefaultSeed);

}  // namespace ilab

#endif
