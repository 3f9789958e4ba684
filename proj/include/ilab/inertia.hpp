#ifndef ILAB_INERTIA_HPP
#define ILAB_INERTIA_HPP

#include <optional>

#include "ilab/galois_id.hpp"
#include "ilab/gate.hpp"

namespace ilab {

struct IrreducibilityUnknown : std::runtime_error {
    IrreducibilityUnknown() : std::runtime_error("irreducibility of f_c is not certified") {}
};
struct UncertifiedPrimesPresent : std::runtime_error {
    UncertifiedPrimesPresent() : std::runtime_error("certificate has uncertified prime statuses") {}
};
struct NoRamifiedPrimes : std::runtime_error {
    NoRamifiedPrimes() : std::runtime_error("no ramified primes (Minkowski forbids this)") {}
};

enum class IrrStatus { CertifiedModPrime, CertifiedSieve, Reducible, Inconclusive };

struct IrreducibilityEvidence {
    IrrStatus status = IrrStatus::Inconclusive;
    Int witness_prime;                       // CertifiedModPrime
    std::optional<Int> rational_root;        // Reducible
    std::vector<std::vector<int>> sieve_patterns;
    bool certified() const {
        return status == IrrStatus::CertifiedModPrime || status == IrrStatus::CertifiedSieve;
    }
};

IrreducibilityEvidence irreducibility_evidence(const IntPoly& f_c, int sieve_primes = 20,
                                               uint64_t seed = kDefaultSeed);

enum class PrimeStatus { UnramifiedCertified, InertiaLE2Certified, Exceptional, Uncertified };

std::string to_string(PrimeStatus s);

struct PrimeStatusEntry {
    Int p;
    PrimeStatus status;
    unsigned disc_valuation = 0;
    std::string note;
};

struct SpecializationCertificate {
    Int c;
    IntPoly f_c;
    IrreducibilityEvidence irreducible;
    FactoredInt disc;  // possibly partial; cofactor flagged
    bool support_check_passed = false;
    /// support_check_passed certifies that every prime outside N_support has
    /// inertia of order <= 2, including any hiding in the unfactored cofactor.
    bool blanket_le2 = false;
    std::vector<PrimeStatusEntry> prime_statuses;
    int real_roots = -1;
    std::optional<std::string> galois_surviving;  // claimed group, when filtered
    std::optional<Int> twist;

    bool all_statuses_certified() const;
};

/// Dedekind criterion / Round-2 result at one prime.
struct LocalMaximality {
    Int p;
    bool dedekind_pass = false;
    unsigned field_disc_valuation = 0;
    enum class Method { Dedekind, Round2 } method = Method::Dedekind;
    unsigned index_valuation = 0;  // v_p([O_max : Z[theta]])
};

/// Dedekind criterion: pass means Z[x]/(f_c) is p-maximal, in which case
/// field_disc_valuation = v_p(disc f_c).
LocalMaximality dedekind_test(const IntPoly& f_c, const Int& p);

/// Pohst-Zassenhaus Round-2 loop: p-radical via the kernel of the p-power
/// map, ring of multipliers, iterated to p-maximality.  Requires monic f_c
/// with certified irreducibility (pass the evidence).
LocalMaximality local_field_disc_valuation(const IntPoly& f_c, const Int& p,
                                           const IrreducibilityEvidence& ev);

struct InertiaOptions {
    FactorOptions disc_factor{.trial_bound = 100000, .rho_budget = 1u << 20};
    bool round2_exceptional = true;  // try to certify N-support primes unramified
    uint64_t seed = kDefaultSeed;
    bool compute_real_roots = true;
};

/// Per-specialization certificate along the Theorem-2.2 argument.
SpecializationCertificate inertia_certificate(const GateCertificate& gate, const Int& c,
                                              const InertiaOptions& opts = {});

/// a = -prod(ramified primes); +prod for the totally-real variant.
Int quadratic_twist(const SpecializationCertificate& cert, bool real_variant = false);

struct ScanOptions {
    long count = 3;
    long max_steps = 100000;
    bool negative_only = false;
    int require_real_roots = -1;  // -1: no filter
    /// Walk all integers with the member support check instead of
    /// progression members (each certificate is then standalone-certified).
    bool integer_line = false;
    std::vector<GroupProfile> galois_candidates;  // empty: skip the filter
    std::string claimed_group;
    int galois_prime_budget = 120;
    InertiaOptions inertia;
    unsigned threads = 0;  // 0: use INERTIA_LAB_THREADS or hardware default
};

/// Walks c = a, a+-b, a+-2b, ... (or the integer line) and emits
/// certificates for the first `count` values passing the filters.
std::vector<SpecializationCertificate> scan_progression(const GateCertificate& gate,
                                                        const ScanOptions& opts);

/// Worker count used by scans: the request, else INERTIA_LAB_THREADS, else
/// a hardware default.
unsigned scan_thread_count(unsigned requested = 0);

}  // namespace ilab

#endif
