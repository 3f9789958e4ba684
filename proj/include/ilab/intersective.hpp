#ifndef ILAB_INTERSECTIVE_HPP
#define ILAB_INTERSECTIVE_HPP

#include "ilab/inertia.hpp"

namespace ilab {

struct NotDepressed : std::runtime_error {
    NotDepressed() : std::runtime_error("quintic must be monic with zero quartic term") {}
};
struct PrecisionFailure : std::runtime_error {
    PrecisionFailure() : std::runtime_error("resolvent reconstruction failed its consistency audit") {}
};
struct CoverFails : std::runtime_error {
    explicit CoverFails(const std::string& what) : std::runtime_error(what) {}
};
struct InertiaUncertified : std::runtime_error {
    InertiaUncertified() : std::runtime_error("realization has uncertified ramified primes") {}
};
struct GaloisIDAmbiguous : std::runtime_error {
    GaloisIDAmbiguous() : std::runtime_error("galois identification does not pin the claimed group") {}
};

/// Monic integer sextic whose roots are the six conjugates of the degree-4
/// orbit invariant with stabilizer F20 (meeting A5 in D5): the splitting
/// field is contained in that of the quintic, and the sextic is irreducible
/// exactly when the quintic's group is not conjugate into F20.
///
/// Computed exactly: the invariant is evaluated at the quintic's roots
/// modulo totally split primes and the integer coefficients are recovered by
/// CRT under a rigorous Cauchy-bound height estimate, then audited against
/// one further split prime.
IntPoly sextic_resolvent(const IntPoly& quintic, uint64_t seed = kDefaultSeed);

struct RootEvidenceRow {
    Int p;
    unsigned k = 1;  // precision p^k that was checked
    bool has_root = false;
    Int root;
    bool hensel_certified = false;
};

struct EvidenceTable {
    unsigned long prime_bound = 0;
    size_t primes_checked = 0;
    std::vector<RootEvidenceRow> rows;  // ramified rows and any refutation
    std::optional<std::pair<Int, unsigned>> refutation;  // (p, k): no root mod p^k
    bool refuted() const { return refutation.has_value(); }
};

/// For every p <= bound: a root mod p suffices when p does not divide
/// disc(prod factors) (Hensel lifts it); otherwise the product is checked
/// mod p^{2v+1}, v = v_p(disc), which decides existence of a Z_p root.
EvidenceTable roots_mod_all(const std::vector<IntPoly>& factors, unsigned long prime_bound,
                            uint64_t seed = kDefaultSeed);

enum class IntersectiveStatus { EmpiricallyIntersective, CertifiedGivenGaloisID, Refuted };

std::string to_string(IntersectiveStatus s);

struct IntersectiveCandidate {
    std::vector<IntPoly> factors;
    size_t m = 0;
    CoverDatum cover;
    CompatibilityReport compatibility;
    EvidenceTable evidence;
    IntersectiveStatus status = IntersectiveStatus::EmpiricallyIntersective;
    std::vector<std::string> reasoning;  // the serialized certification chain
};

/// Assembles the optimal-intersectivity certificate: subgroup-conjugate
/// cover with trivial intersection, tame decomposition compatibility at
/// inertia bound 2, certified inertia statuses on the realization, root
/// evidence, and m compared against s(G).
IntersectiveCandidate certify_optimal(const SpecializationCertificate& realization,
                                      const PermGroup& G, const std::string& group_name,
                                      const std::vector<PermGroup>& cover_subgroups,
                                      const std::vector<IntPoly>& factors,
                                      unsigned long prime_bound = 10000,
                                      uint64_t seed = kDefaultSeed);

}  // namespace ilab

#endif
