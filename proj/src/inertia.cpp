#include "ilab/inertia.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace ilab {

std::string to_string(PrimeStatus s) {
    switch (s) {
        case PrimeStatus::UnramifiedCertified: return "UnramifiedCertified";
        case PrimeStatus::InertiaLE2Certified: return "InertiaLE2Certified";
        case PrimeStatus::Exceptional: return "Exceptional";
        case PrimeStatus::Uncertified: return "Uncertified";
    }
    return "?";
}

bool SpecializationCertificate::all_statuses_certified() const {
    for (const auto& e : prime_statuses)
        if (e.status == PrimeStatus::Uncertified) return false;
    return true;
}

IrreducibilityEvidence irreducibility_evidence(const IntPoly& f_c, int sieve_primes,
                                               uint64_t seed) {
    IrreducibilityEvidence ev;
    int n = f_c.degree();
    if (n <= 0) return ev;
    if (n == 1) {
        ev.status = IrrStatus::Reducible;
        ev.rational_root = -f_c[0];  // monic linear
        return ev;
    }

    // Scan primes for an irreducible reduction; collect degree patterns for
    // the subset-sum sieve along the way.
    uint32_t possible = (1u << (n + 1)) - 1;  // degrees of potential factors
    Int q = 1;
    int usable = 0;
    int budget = std::max(sieve_primes * 6, 120);
    for (int i = 0; i < budget && usable < sieve_primes; ++i) {
        q = next_prime(q);
        ModPoly red = ModPoly::reduce(f_c, q);
        if (red.degree() != n || !is_squarefree_mod(red)) continue;
        auto pattern = degree_pattern(f_c, q, seed).degrees;
        ++usable;
        ev.sieve_patterns.push_back(pattern);
        if (pattern.size() == 1) {
            ev.status = IrrStatus::CertifiedModPrime;
            ev.witness_prime = q;
            return ev;
        }
        uint32_t mask = 1;
        for (int d : pattern) mask |= mask << d;
        possible &= mask;
    }

    // Integer-root search through one large prime: any integer root lies in
    // [-B, B], B the Cauchy bound, and must show up mod P > 2B.
    Int B = 1;
    for (int i = 0; i <= n; ++i) B = std::max(B, abs(f_c[i]));
    B += 1;
    if (mpz_sizeinbase(B.get_mpz_t(), 2) < 4000) {
        Int P = next_prime(2 * B);
        for (const Int& r : roots_mod_prime(f_c, P, seed)) {
            Int cand = r > P / 2 ? Int(r - P) : r;
            if (f_c.eval(cand) == 0) {
                ev.status = IrrStatus::Reducible;
                ev.rational_root = cand;
                return ev;
            }
        }
    }

    if (usable >= sieve_primes && possible == ((1u << n) | 1u)) {
        ev.status = IrrStatus::CertifiedSieve;
        return ev;
    }
    ev.status = IrrStatus::Inconclusive;
    return ev;
}

SpecializationCertificate inertia_certificate(const GateCertificate& gate, const Int& c,
                                              const InertiaOptions& opts) {
    SpecializationCertificate cert;
    cert.c = c;
    cert.f_c = gate.f.specialize(c);
    Int D = gate.F1.eval(c);
    if (D == 0) throw NotSeparable();
    Int F2c = gate.F2.eval(c);
    cert.support_check_passed = gate.member_supported(c);
    cert.blanket_le2 = cert.support_check_passed;
    cert.irreducible = irreducibility_evidence(cert.f_c, 20, opts.seed);
    cert.disc = factor(D, opts.disc_factor);

    for (auto& [p, e] : cert.disc.factors) {
        PrimeStatusEntry entry;
        entry.p = p;
        entry.disc_valuation = e;
        if (gate.N_support.count(p)) {
            entry.status = PrimeStatus::Exceptional;
            if (opts.round2_exceptional && cert.irreducible.certified()) {
                auto lm = local_field_disc_valuation(cert.f_c, p, cert.irreducible);
                if (lm.field_disc_valuation == 0) {
                    entry.status = PrimeStatus::UnramifiedCertified;
                    entry.note = "round-2 field-disc valuation 0";
                } else {
                    entry.note =
                        "round-2 field-disc valuation " + std::to_string(lm.field_disc_valuation);
                }
            }
        } else if (F2c % p != 0 && gate.N % p != 0) {
            entry.status = PrimeStatus::InertiaLE2Certified;
        } else {
            entry.status = PrimeStatus::Uncertified;
        }
        cert.prime_statuses.push_back(std::move(entry));
    }
    if (opts.compute_real_roots) {
        cert.real_roots = sturm_real_roots(cert.f_c).real_root_count;
    }
    return cert;
}

Int quadratic_twist(const SpecializationCertificate& cert, bool real_variant) {
    if (!cert.disc.complete)
        throw UncertifiedPrimesPresent();  // unknown primes may ramify
    if (!cert.all_statuses_certified()) throw UncertifiedPrimesPresent();
    Int a = 1;
    for (const auto& e : cert.prime_statuses)
        if (e.status != PrimeStatus::UnramifiedCertified) a *= e.p;
    if (a == 1) throw NoRamifiedPrimes();
    if (real_variant) {
        if (cert.real_roots != cert.f_c.degree())
            throw std::invalid_argument("real variant requires a totally real specialization");
        return a;
    }
    return -a;
}

unsigned scan_thread_count(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("INERTIA_LAB_THREADS")) {
        long v = std::atol(env);
        if (v >= 1 && v <= 256) return (unsigned)v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? std::min(hw, 8u) : 1;
}

std::vector<SpecializationCertificate> scan_progression(const GateCertificate& gate,
                                                        const ScanOptions& opts) {
    std::vector<SpecializationCertificate> out;
    if (opts.count <= 0) return out;

    auto candidate = [&](long step) -> Int {
        // step 0,1,2,... maps to k = 0, +1, -1, +2, -2, ... or to -1,-2,...
        long k;
        if (opts.negative_only) {
            k = -(step + 1);
        } else {
            k = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
        }
        if (opts.integer_line) return Int(k);
        return gate.progression.member(k);
    };

    auto evaluate = [&](const Int& c) -> std::optional<SpecializationCertificate> {
        if (opts.negative_only && c >= 0) return std::nullopt;
        if (!gate.member_supported(c)) return std::nullopt;
        if (gate.F1.eval(c) == 0) return std::nullopt;
        SpecializationCertificate cert = inertia_certificate(gate, c, opts.inertia);
        if (!cert.irreducible.certified()) return std::nullopt;
        if (opts.require_real_roots >= 0 && cert.real_roots != opts.require_real_roots)
            return std::nullopt;
        if (!opts.galois_candidates.empty() && !opts.claimed_group.empty()) {
            try {
                auto verdict = identify(cert.f_c, opts.galois_candidates,
                                        opts.galois_prime_budget, opts.inertia.seed);
                if (!verdict.survives(opts.claimed_group)) return std::nullopt;
                cert.galois_surviving = opts.claimed_group;
            } catch (const AllCandidatesEliminated&) {
                return std::nullopt;
            }
        }
        return cert;
    };

    unsigned threads = scan_thread_count(opts.threads);
    long step = 0;
    while ((long)out.size() < opts.count && step < opts.max_steps) {
        long block = std::min<long>(threads, opts.max_steps - step);
        std::vector<std::optional<SpecializationCertificate>> results(block);
        if (block == 1 || threads == 1) {
            for (long i = 0; i < block; ++i) results[i] = evaluate(candidate(step + i));
        } else {
            std::vector<std::thread> pool;
            for (long i = 0; i < block; ++i)
                pool.emplace_back([&, i] { results[i] = evaluate(candidate(step + i)); });
            for (auto& t : pool) t.join();
        }
        for (long i = 0; i < block && (long)out.size() < opts.count; ++i)
            if (results[i]) out.push_back(std::move(*results[i]));
        step += block;
    }
    return out;
}

}  // namespace ilab
