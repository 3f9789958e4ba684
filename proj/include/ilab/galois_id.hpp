#ifndef ILAB_GALOIS_ID_HPP
#define ILAB_GALOIS_ID_HPP

#include <set>

#include "ilab/groups.hpp"
#include "ilab/modpoly.hpp"

namespace ilab {

struct AllCandidatesEliminated : std::runtime_error {
    AllCandidatesEliminated()
        : std::runtime_error("every candidate group was eliminated "
                             "(bad candidate list or reducible input)") {}
};

struct FrobeniusSample {
    Int prime;
    std::vector<int> pattern;  // ascending factor degrees with multiplicity
    bool used = false;         // false when the reduction is not squarefree
};

/// Candidate Galois group with its cycle-type data.  Enumerable groups carry
/// the exact census; A_n/S_n are handled by the parity rule.
struct GroupProfile {
    std::string name;
    int degree = 0;
    Int order;
    bool inside_alternating = false;
    bool symbolic = false;  // pattern membership decided by parity only
    std::set<std::vector<int>> patterns;

    bool admits_pattern(const std::vector<int>& pat) const;
    static GroupProfile from_group(std::string name, const PermGroup& G);
    static GroupProfile symbolic_sn(int n);
    static GroupProfile symbolic_an(int n);
};

/// The transitive groups of the given degree (3, 5, 7 or 13), complete per
/// the classical lists.
const std::vector<GroupProfile>& transitive_profiles(int degree);

struct EliminationRecord {
    std::string candidate;
    std::string reason;  // "pattern", "parity", "order"
    Int witness_prime;   // for pattern eliminations
    std::vector<int> pattern;
};

enum class VerdictStatus { IdentifiedHeuristic, Ambiguous };

struct GaloisVerdict {
    std::vector<std::string> candidates;
    std::vector<EliminationRecord> eliminated;
    std::vector<std::string> surviving;
    size_t sample_count = 0;
    bool complete_list = false;
    VerdictStatus status = VerdictStatus::Ambiguous;
    Int order_bound;
    bool parity_even = false;

    const std::string& best() const { return surviving.front(); }
    bool survives(const std::string& name) const;
};

std::vector<FrobeniusSample> sample_patterns(const IntPoly& f_c, int prime_budget,
                                             uint64_t seed = kDefaultSeed);

/// Every pattern forces an element whose order is the lcm of its parts;
/// the returned bound is the lcm over all used samples, and divides |G|.
Int order_lower_bound(const std::vector<FrobeniusSample>& samples);

enum class Parity { Even, Odd };
Parity parity_test(const IntPoly& f_c);

GaloisVerdict identify(const IntPoly& f_c, const std::vector<GroupProfile>& candidates,
                       int prime_budget = 500, uint64_t seed = kDefaultSeed,
                       bool complete_list = false);

}  // namespace ilab

#endif
