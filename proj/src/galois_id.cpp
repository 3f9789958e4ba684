#include "ilab/galois_id.hpp"

#include <algorithm>

namespace ilab {

namespace {

bool partition_even(const std::vector<int>& pat) {
    int transpositions = 0;
    for (int part : pat) transpositions += part - 1;
    return transpositions % 2 == 0;
}

}  // namespace

bool GroupProfile::admits_pattern(const std::vector<int>& pat) const {
    if (symbolic) return inside_alternating ? partition_even(pat) : true;
    return patterns.count(pat) > 0;
}

GroupProfile GroupProfile::from_group(std::string name, const PermGroup& G) {
    GroupProfile p;
    p.name = std::move(name);
    p.degree = G.degree();
    p.order = (unsigned long)G.order();
    p.inside_alternating = true;
    for (auto& [t, n] : G.cycle_type_census()) {
        p.patterns.insert(t);
        if (!partition_even(t)) p.inside_alternating = false;
    }
    return p;
}

GroupProfile GroupProfile::symbolic_sn(int n) {
    GroupProfile p;
    p.name = "S" + std::to_string(n);
    p.degree = n;
    p.order = 1;
    for (int i = 2; i <= n; ++i) p.order *= i;
    p.symbolic = true;
    p.inside_alternating = false;
    return p;
}

GroupProfile GroupProfile::symbolic_an(int n) {
    GroupProfile p = symbolic_sn(n);
    p.name = "A" + std::to_string(n);
    p.order /= 2;
    p.inside_alternating = true;
    return p;
}

const std::vector<GroupProfile>& transitive_profiles(int degree) {
    static const auto deg3 = [] {
        std::vector<GroupProfile> v;
        v.push_back(GroupProfile::from_group("C3", cyclic_group(3)));
        v.push_back(GroupProfile::from_group("S3", symmetric_group(3)));
        return v;
    }();
    static const auto deg5 = [] {
        std::vector<GroupProfile> v;
        v.push_back(GroupProfile::from_group("C5", cyclic_group(5)));
        v.push_back(GroupProfile::from_group("D5", frobenius_group(5, 4)));
        v.push_back(GroupProfile::from_group("F20", frobenius_group(5, 2)));
        v.push_back(GroupProfile::from_group("A5", alternating_group(5)));
        v.push_back(GroupProfile::from_group("S5", symmetric_group(5)));
        return v;
    }();
    static const auto deg7 = [] {
        std::vector<GroupProfile> v;
        v.push_back(GroupProfile::from_group("C7", cyclic_group(7)));
        v.push_back(GroupProfile::from_group("D7", frobenius_group(7, 6)));
        v.push_back(GroupProfile::from_group("F21", frobenius_group(7, 2)));
        v.push_back(GroupProfile::from_group("F42", frobenius_group(7, 3)));
        v.push_back(GroupProfile::from_group("PSL2(7)", psl27_degree7()));
        v.push_back(GroupProfile::symbolic_an(7));
        v.push_back(GroupProfile::symbolic_sn(7));
        return v;
    }();
    static const auto deg13 = [] {
        std::vector<GroupProfile> v;
        v.push_back(GroupProfile::from_group("C13", cyclic_group(13)));
        v.push_back(GroupProfile::from_group("D13", frobenius_group(13, 12)));
        v.push_back(GroupProfile::from_group("C13:C3", frobenius_group(13, 3)));
        v.push_back(GroupProfile::from_group("C13:C4", frobenius_group(13, 5)));
        v.push_back(GroupProfile::from_group("C13:C6", frobenius_group(13, 4)));
        v.push_back(GroupProfile::from_group("C13:C12", frobenius_group(13, 2)));
        v.push_back(GroupProfile::from_group("PSL3(3)", psl33_degree13()));
        v.push_back(GroupProfile::symbolic_an(13));
        v.push_back(GroupProfile::symbolic_sn(13));
        return v;
    }();
    static const std::vector<GroupProfile> empty;
    switch (degree) {
        case 3: return deg3;
        case 5: return deg5;
        case 7: return deg7;
        case 13: return deg13;
        default: return empty;
    }
}

bool GaloisVerdict::survives(const std::string& name) const {
    return std::find(surviving.begin(), surviving.end(), name) != surviving.end();
}

std::vector<FrobeniusSample> sample_patterns(const IntPoly& f_c, int prime_budget, uint64_t seed) {
    std::vector<FrobeniusSample> out;
    Int p = 1;
    for (int i = 0; i < prime_budget; ++i) {
        p = next_prime(p);
        FrobeniusSample s;
        s.prime = p;
        ModPoly red = ModPoly::reduce(f_c, p);
        if (red.degree() != f_c.degree() || !is_squarefree_mod(red)) {
            out.push_back(std::move(s));  // skipped: ramified or degenerate
            continue;
        }
        s.pattern = degree_pattern(f_c, p, seed).degrees;
        s.used = true;
        out.push_back(std::move(s));
    }
    return out;
}

Int order_lower_bound(const std::vector<FrobeniusSample>& samples) {
    Int bound = 1;
    for (const auto& s : samples) {
        if (!s.used) continue;
        Int l = 1;
        for (int part : s.pattern) l = lcm(l, part);
        bound = lcm(bound, l);
    }
    return bound;
}

Parity parity_test(const IntPoly& f_c) {
    return is_perfect_square(discriminant(f_c)) ? Parity::Even : Parity::Odd;
}

GaloisVerdict identify(const IntPoly& f_c, const std::vector<GroupProfile>& candidates,
                       int prime_budget, uint64_t seed, bool complete_list) {
    GaloisVerdict v;
    v.complete_list = complete_list;
    auto samples = sample_patterns(f_c, prime_budget, seed);
    for (const auto& s : samples)
        if (s.used) ++v.sample_count;
    v.order_bound = order_lower_bound(samples);
    Parity par = parity_test(f_c);
    v.parity_even = par == Parity::Even;

    for (const auto& cand : candidates) {
        v.candidates.push_back(cand.name);
        bool alive = true;
        if (par == Parity::Even && !cand.inside_alternating) {
            v.eliminated.push_back({cand.name, "parity", 0, {}});
            alive = false;
        } else if (par == Parity::Odd && cand.inside_alternating) {
            v.eliminated.push_back({cand.name, "parity", 0, {}});
            alive = false;
        }
        if (alive && cand.order % v.order_bound != 0) {
            v.eliminated.push_back({cand.name, "order", 0, {}});
            alive = false;
        }
        if (alive) {
            for (const auto& s : samples) {
                if (!s.used) continue;
                if (!cand.admits_pattern(s.pattern)) {
                    v.eliminated.push_back({cand.name, "pattern", s.prime, s.pattern});
                    alive = false;
                    break;
                }
            }
        }
        if (alive) v.surviving.push_back(cand.name);
    }
    if (v.surviving.empty()) throw AllCandidatesEliminated();
    v.status = (v.surviving.size() == 1) ? VerdictStatus::IdentifiedHeuristic
                                         : VerdictStatus::Ambiguous;
    return v;
}

}  // namespace ilab
