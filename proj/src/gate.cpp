#include "ilab/gate.hpp"

#include <algorithm>

namespace ilab {

bool GateCertificate::member_supported(const Int& c) const {
    return witness_accepted(F1, F2, N_support, c);
}

GateBase compute_N(const BiPoly& f, const FactorOptions& fopts) {
    GateBase out;
    out.n = f.deg_x();
    if (out.n < 3) throw DegreeTooLow();
    if (!f.monic_in_x()) throw NotMonic();
    out.F1 = discriminant_x(f);
    if (out.F1.is_zero()) throw NotSeparable();
    BiPoly nd = normalized_derivative(f);
    out.F2 = Int(out.n * (out.n - 1)) * discriminant_x(nd);
    IntPoly g = gcd_z(out.F1, out.F2);
    if (g.degree() != 0) throw NonConstantGcd();
    out.N = g[0];
    auto fN = factor(out.N, fopts);
    out.N_support = fN.support();
    out.N_support_complete = fN.complete;
    out.G1 = divexact(out.F1, out.N);
    out.G2 = divexact(out.F2, out.N);
    return out;
}

bool witness_accepted(const IntPoly& F1, const IntPoly& F2, const std::set<Int>& N_support,
                      const Int& c) {
    Int v1 = F1.eval(c), v2 = F2.eval(c);
    if (v1 == 0 || v2 == 0) return false;  // a discriminant vanished: inseparable
    return prime_support_within(gcd(v1, v2), N_support);
}

Int find_witness(const GateBase& base, const Int& lo, const Int& hi) {
    Int bound = std::max(abs(lo), abs(hi));
    for (Int a = 0; a <= bound; ++a) {
        for (int s : {+1, -1}) {
            Int c = s > 0 ? a : Int(-a);
            if (s < 0 && a == 0) continue;
            if (c < lo || c > hi) continue;
            if (witness_accepted(base.F1, base.F2, base.N_support, c)) return c;
        }
    }
    throw NoWitnessInRange(lo.get_str() + ".." + hi.get_str());
}

BadPrimeScan bad_primes(const IntPoly& G1, const IntPoly& G2, const std::set<Int>& N_support,
                        const Int& witness, const GateOptions& opts) {
    BadPrimeScan out;
    std::set<Int> candidates;
    std::vector<Int> composites;

    auto add_candidates = [&](const Int& v) {
        if (v == 0) return;  // zero resultant cannot happen for coprime G_i
        auto f = factor(v, opts.factor_opts);
        for (auto& [p, e] : f.factors) candidates.insert(p);
        if (!f.complete) composites.push_back(f.cofactor);
    };

    Int res = resultant(G1, G2);
    add_candidates(res);
    add_candidates(gcd(G1.lc(), G2.lc()));

    for (const Int& p : candidates) {
        if (N_support.count(p)) continue;  // exceptional primes are not pinned
        if (p <= Int((unsigned long)opts.residue_enum_bound)) {
            // Bad residues = common roots of G1, G2 mod p.
            std::vector<Int> common;
            ModPoly a = ModPoly::reduce(G1, p);
            ModPoly b = ModPoly::reduce(G2, p);
            if (a.is_zero()) {
                common = roots_mod_prime(G2, p);
            } else if (b.is_zero()) {
                common = roots_mod_prime(G1, p);
            } else {
                ModPoly g = gcd_mod(a, b);
                if (g.degree() >= 1) {
                    std::vector<Int> cf(g.coeffs());
                    common = roots_mod_prime(IntPoly(std::move(cf)), p);
                }
            }
            if (common.empty()) continue;  // candidate with no bad residue
            BadPrime bp;
            bp.p = p;
            bp.bad_residues = std::move(common);
            bp.exhaustive = true;
            Int w = witness % p;
            if (w < 0) w += p;
            if (std::find(bp.bad_residues.begin(), bp.bad_residues.end(), w) ==
                bp.bad_residues.end()) {
                bp.chosen_residue = w;
            } else {
                // Hypothesis (ii) rules this out for a genuine witness; fall
                // back to the first non-bad residue for standalone use.
                bool found = false;
                for (Int r = 0; r < p; ++r) {
                    if (std::find(bp.bad_residues.begin(), bp.bad_residues.end(), r) ==
                        bp.bad_residues.end()) {
                        bp.chosen_residue = r;
                        found = true;
                        break;
                    }
                }
                if (!found) throw FixedDivisorViolated(p);
            }
            out.bad.push_back(std::move(bp));
        } else {
            Int g = gcd(gcd(G1.eval(witness), G2.eval(witness)), p);
            out.skipped.push_back({p, true, g == 1});
        }
    }
    for (Int c : composites) {
        // Strip exceptional primes from the cofactor before recording it.
        for (const Int& p : N_support)
            while (mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t()))
                mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        if (c == 1) continue;
        Int g = gcd(gcd(G1.eval(witness), G2.eval(witness)), c);
        out.skipped.push_back({c, false, g == 1});
    }
    return out;
}

Progression build_progression(const std::vector<BadPrime>& bad) {
    std::vector<std::pair<Int, Int>> residues;
    for (const auto& bp : bad) residues.emplace_back(bp.chosen_residue, bp.p);
    auto [a, M] = crt(residues);
    return Progression{a, M};
}

std::pair<Progression, Refinement> refine_for_exceptional_primes(const BiPoly& f,
                                                                 const Progression& prog,
                                                                 const Int& t_ref,
                                                                 const std::set<Int>& S) {
    Refinement ref;
    ref.t_ref = t_ref;
    ref.modulus = 1;
    if (S.empty()) return {prog, ref};
    IntPoly fc = f.specialize(t_ref);
    Int disc = discriminant(fc);
    if (disc == 0) throw NotSeparable();
    for (const Int& p : S) {
        if (gcd(prog.b, p) != 1) throw NonCoprimeModuli();
        unsigned k = 2 * valuation(disc, p) + 1;
        ref.exponents.emplace_back(p, k);
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
        ref.modulus *= pk;
    }
    Int a0 = prog.a % prog.b;
    if (a0 < 0) a0 += prog.b;
    Int t0 = t_ref % ref.modulus;
    if (t0 < 0) t0 += ref.modulus;
    auto [a, M] = crt({{a0, prog.b}, {t0, ref.modulus}});
    return {Progression{a, M}, ref};
}

GateCertificate run_gate(const BiPoly& f, const GateOptions& opts,
                         std::optional<Int> forced_witness) {
    GateCertificate cert;
    cert.f = f;
    GateBase base = compute_N(f, opts.factor_opts);
    cert.n = base.n;
    cert.F1 = base.F1;
    cert.F2 = base.F2;
    cert.N = base.N;
    cert.N_support = base.N_support;
    cert.N_support_complete = base.N_support_complete;
    cert.G1 = base.G1;
    cert.G2 = base.G2;
    if (forced_witness) {
        if (!witness_accepted(base.F1, base.F2, base.N_support, *forced_witness))
            throw NoWitnessInRange("forced witness rejected: " + forced_witness->get_str());
        cert.witness_c = *forced_witness;
    } else {
        cert.witness_c = find_witness(base, opts.witness_lo, opts.witness_hi);
    }
    auto scan = bad_primes(base.G1, base.G2, base.N_support, cert.witness_c, opts);
    cert.bad_primes = std::move(scan.bad);
    cert.skipped = std::move(scan.skipped);
    cert.progression = build_progression(cert.bad_primes);
    return cert;
}

}  // namespace ilab
