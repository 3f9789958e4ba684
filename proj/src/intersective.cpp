#include "ilab/intersective.hpp"

#include <algorithm>
#include <cassert>
#include <array>
#include <set>

namespace ilab {

namespace {

// One monomial x_i^2 x_j x_k of the orbit invariant; i, j, k in 0..4.
struct Monomial {
    int i, j, k;  // j < k
    auto operator<=>(const Monomial&) const = default;
};

using Invariant = std::vector<Monomial>;  // 10 monomials, sorted

Invariant base_invariant() {
    // x1^2(x2 x5 + x3 x4) + x2^2(x1 x3 + x4 x5) + x3^2(x1 x5 + x2 x4)
    //  + x4^2(x1 x2 + x3 x5) + x5^2(x1 x4 + x2 x3), zero-based.
    std::vector<std::array<int, 3>> raw = {
        {0, 1, 4}, {0, 2, 3}, {1, 0, 2}, {1, 3, 4}, {2, 0, 4},
        {2, 1, 3}, {3, 0, 1}, {3, 2, 4}, {4, 0, 3}, {4, 1, 2}};
    Invariant inv;
    for (auto& [i, j, k] : raw) inv.push_back({i, std::min(j, k), std::max(j, k)});
    std::sort(inv.begin(), inv.end());
    return inv;
}

Invariant apply_perm(const Invariant& inv, const Perm& s) {
    Invariant out;
    for (const auto& m : inv) {
        int j = s(m.j), k = s(m.k);
        out.push_back({s(m.i), std::min(j, k), std::max(j, k)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The six conjugate invariants (coset functions of F20 in S5).
const std::vector<Invariant>& conjugate_invariants() {
    static const std::vector<Invariant> orbit = [] {
        std::set<Invariant> seen;
        PermGroup S5 = symmetric_group(5);
        Invariant base = base_invariant();
        for (const Perm& s : S5.elements()) seen.insert(apply_perm(base, s));
        std::vector<Invariant> v(seen.begin(), seen.end());
        return v;
    }();
    return orbit;
}

Int eval_invariant_mod(const Invariant& inv, const std::vector<Int>& r, const Int& p) {
    Int acc = 0;
    for (const auto& m : inv) acc += r[m.i] * r[m.i] % p * r[m.j] % p * r[m.k] % p;
    acc %= p;
    if (acc < 0) acc += p;
    return acc;
}

}  // namespace

IntPoly sextic_resolvent(const IntPoly& quintic, uint64_t seed) {
    if (quintic.degree() != 5 || quintic.lc() != 1 || quintic[4] != 0) throw NotDepressed();
    const auto& invariants = conjugate_invariants();
    if (invariants.size() != 6) throw PrecisionFailure();

    // Height bound: roots are bounded by the Cauchy bound rho, each
    // invariant by 10 rho^4, and coefficient j of the sextic by C(6,j) Theta^j.
    Int rho = 1;
    for (int i = 0; i <= 5; ++i) rho = std::max(rho, abs(quintic[i]));
    rho += 1;
    Int theta = 10 * rho * rho * rho * rho;
    Int hbound = 20;
    for (int i = 0; i < 6; ++i) hbound *= theta;
    Int target = 2 * hbound + 1;

    std::vector<Int> coeff_residues(7, 0);
    Int modulus = 1;
    Int p = 1000003;
    int audits_left = 1;
    IntPoly reconstructed;
    while (true) {
        ModPoly red = ModPoly::reduce(quintic, p);
        bool split = false;
        std::vector<Int> roots;
        if (red.degree() == 5 && is_squarefree_mod(red)) {
            roots = roots_mod_prime(quintic, p, seed);
            split = roots.size() == 5;
        }
        if (split) {
            // g_p(y) = prod (y - theta_m) over the six conjugate invariants
            ModPoly g = ModPoly::constant(p, 1);
            for (const auto& inv : invariants) {
                Int t = eval_invariant_mod(inv, roots, p);
                g = g * ModPoly(p, {(p - t) % p, Int(1)});
            }
            if (modulus <= target) {
                Int old_modulus = modulus;
                for (int i = 0; i <= 6; ++i) {
                    auto [a, M] = crt({{coeff_residues[i], old_modulus}, {g[i], p}});
                    coeff_residues[i] = a;
                    modulus = M;
                }
                if (modulus > target) {
                    // symmetric lift
                    std::vector<Int> c(7);
                    for (int i = 0; i <= 6; ++i) {
                        c[i] = coeff_residues[i];
                        if (c[i] * 2 > modulus) c[i] -= modulus;
                    }
                    reconstructed = IntPoly(std::move(c));
                }
            } else {
                // audit against one further split prime
                ModPoly check = ModPoly::reduce(reconstructed, p);
                if (!(check == g)) throw PrecisionFailure();
                if (--audits_left == 0) break;
            }
        }
        p = next_prime(p);
    }
    return reconstructed;
}

EvidenceTable roots_mod_all(const std::vector<IntPoly>& factors, unsigned long prime_bound,
                            uint64_t seed) {
    EvidenceTable table;
    table.prime_bound = prime_bound;
    IntPoly product = IntPoly::constant(1);
    for (const auto& f : factors) product = product * f;
    Int disc = discriminant(product);
    assert(disc != 0);

    for (unsigned long pl : primes_up_to(prime_bound)) {
        Int p = (long)pl;
        ++table.primes_checked;
        if (disc % p != 0) {
            // a root mod p is simple and lifts by Hensel
            bool found = false;
            Int root;
            for (const auto& f : factors) {
                auto roots = roots_mod_prime(f, p, seed);
                if (!roots.empty()) {
                    found = true;
                    root = roots.front();
                    break;
                }
            }
            if (!found) {
                table.refutation = {p, 1};
                table.rows.push_back({p, 1, false, 0, false});
                return table;
            }
            continue;  // unramified rows are not stored
        }
        auto cert = hensel_certified_root(product, p, seed);
        unsigned k = 2 * valuation(disc, p) + 1;
        if (cert) {
            table.rows.push_back({p, cert->precision, true, cert->root, true});
        } else {
            table.refutation = {p, k};
            table.rows.push_back({p, k, false, 0, false});
            return table;
        }
    }
    return table;
}

std::string to_string(IntersectiveStatus s) {
    switch (s) {
        case IntersectiveStatus::EmpiricallyIntersective: return "EmpiricallyIntersective";
        case IntersectiveStatus::CertifiedGivenGaloisID: return "CertifiedGivenGaloisID";
        case IntersectiveStatus::Refuted: return "Refuted";
    }
    return "?";
}

IntersectiveCandidate certify_optimal(const SpecializationCertificate& realization,
                                      const PermGroup& G, const std::string& group_name,
                                      const std::vector<PermGroup>& cover_subgroups,
                                      const std::vector<IntPoly>& factors,
                                      unsigned long prime_bound, uint64_t seed) {
    IntersectiveCandidate out;
    out.factors = factors;
    out.m = factors.size();

    for (const auto& f : factors) {
        if (f.degree() <= 1)
            throw CoverFails("factor of degree <= 1 cannot be nontrivially intersective");
        auto ev = irreducibility_evidence(f, 20, seed);
        if (ev.status == IrrStatus::Reducible)
            throw CoverFails("factor has a rational root or is reducible");
        if (!ev.certified()) throw CoverFails("factor irreducibility not certified");
    }
    {
        IntPoly product = IntPoly::constant(1);
        for (const auto& f : factors) product = product * f;
        auto pev = irreducibility_evidence(product, 8, seed);
        if (pev.status == IrrStatus::Reducible && pev.rational_root)
            throw CoverFails("product has a rational root");
    }

    out.cover = conjugate_cover_check(G, cover_subgroups, /*certify_s_value=*/true);
    if (!out.cover.is_cover) throw CoverFails("subgroup conjugates do not cover the group");
    if (!out.cover.trivial_intersection)
        throw CoverFails("conjugate intersection is not trivial");
    out.reasoning.push_back("cover: union of conjugates = G, intersection trivial, m = " +
                            std::to_string(out.m));

    out.compatibility = decomposition_compatibility(G, cover_subgroups, 2);
    if (!out.compatibility.compatible)
        throw CoverFails("an admissible tame decomposition subgroup escapes the cover");
    out.reasoning.push_back(
        "every cyclic and involution-centralizing subgroup lies in a conjugate of a cover member");

    if (!realization.galois_surviving || *realization.galois_surviving != group_name)
        throw GaloisIDAmbiguous();
    out.reasoning.push_back("galois id (heuristic): " + group_name + " survives elimination");

    std::set<Int> exceptional_needing_roots;
    for (const auto& e : realization.prime_statuses) {
        switch (e.status) {
            case PrimeStatus::UnramifiedCertified:
            case PrimeStatus::InertiaLE2Certified:
                break;
            case PrimeStatus::Exceptional:
                exceptional_needing_roots.insert(e.p);
                break;
            case PrimeStatus::Uncertified:
                throw InertiaUncertified();
        }
    }
    if (!realization.blanket_le2) throw InertiaUncertified();
    out.reasoning.push_back("realization: all inertia groups outside the exceptional set "
                            "have order <= 2 (support check + per-prime statuses)");

    out.evidence = roots_mod_all(factors, prime_bound, seed);
    if (out.evidence.refuted()) {
        out.status = IntersectiveStatus::Refuted;
        return out;
    }
    // exceptional primes must carry explicit p-adic root evidence
    IntPoly product = IntPoly::constant(1);
    for (const auto& f : factors) product = product * f;
    for (const Int& p : exceptional_needing_roots) {
        if (p <= Int((long)prime_bound)) continue;  // already in the table
        auto cert = hensel_certified_root(product, p, seed);
        if (!cert) throw InertiaUncertified();
        out.evidence.rows.push_back({p, cert->precision, true, cert->root, true});
    }

    out.status = IntersectiveStatus::CertifiedGivenGaloisID;
    if (out.cover.s_value == (int)out.m)
        out.reasoning.push_back("optimal: m = " + std::to_string(out.m) +
                                " = s(G) (no single proper subgroup covers)");
    return out;
}

}  // namespace ilab
