#ifndef ILAB_GROUPS_HPP
#define ILAB_GROUPS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ilab {

struct OrderBoundExceeded : std::runtime_error {
    OrderBoundExceeded() : std::runtime_error("group closure exceeded the element bound") {}
};
struct SubgroupNotContained : std::runtime_error {
    SubgroupNotContained() : std::runtime_error("listed subgroup is not contained in the group") {}
};

/// Permutation of {0..d-1} (printed 1-based).
class Perm {
    std::vector<int> img_;

  public:
    Perm() = default;
    explicit Perm(int degree);
    explicit Perm(std::vector<int> images);
    /// 1-based disjoint cycles, e.g. {{1,2,3},{4,5}}.
    static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }
    bool is_identity() const;

    Perm operator*(const Perm& o) const;  // (a*b)(i) = a(b(i))
    Perm inverse() const;
    auto operator<=>(const Perm&) const = default;

    std::vector<int> cycle_type() const;  // ascending partition of the degree
    int order() const;
    bool has_fixed_point() const;
    std::string to_string() const;  // cycle notation
};

class PermGroup {
    int degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;  // sorted

  public:
    PermGroup() = default;
    static PermGroup generate(const std::vector<Perm>& gens, size_t bound = 100000);
    static PermGroup from_elements(std::vector<Perm> elements);

    int degree() const { return degree_; }
    size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return gens_; }

    bool contains(const Perm& p) const;
    bool contains_all(const std::vector<Perm>& ps) const;
    bool is_abelian() const;
    bool fixes_a_point() const;  // one point fixed by every element

    std::map<std::vector<int>, size_t> cycle_type_census() const;
    std::vector<Perm> involutions() const;
    std::vector<Perm> fixed_point_free_elements() const;
    bool generated_by_involutions() const;
    PermGroup centralizer(const Perm& t) const;
    PermGroup conjugate(const Perm& g) const;  // g H g^-1
};

// Builders (explicit constructions, no transcribed element lists).
PermGroup cyclic_group(int n);
PermGroup dihedral_group(int n);
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
/// <x -> x+1, x -> m x> acting on Z/p, p prime: C_p : <ord(m)>.
PermGroup frobenius_group(int p, int m);
/// PSL2(7) = PSL3(2) acting on the 7 points of the Fano plane.
PermGroup psl27_degree7();
/// PSL3(3) = SL3(3) acting on the 13 points of P^2(F_3).
PermGroup psl33_degree13();

PermGroup point_stabilizer(const PermGroup& G, int point0);  // 0-based point
/// The subgroup generated by one element of prime order p (a Sylow subgroup
/// when p^2 does not divide |G|).
PermGroup cyclic_sylow(const PermGroup& G, int p);
/// D5 inside A5 on 5 points.
PermGroup d5_in_a5();

/// All subgroups, by breadth-first closure growth; feasible for |G| <= ~400.
std::vector<PermGroup> all_subgroups(const PermGroup& G);

struct CoverDatum {
    size_t m = 0;
    bool is_cover = false;
    bool trivial_intersection = false;
    int s_value = -1;  // set to m when the cover is proved optimal
    bool single_cover_impossible_checked = false;
    std::vector<size_t> subgroup_orders;
};

/// Exact union/intersection over all conjugates of the listed subgroups.
CoverDatum conjugate_cover_check(const PermGroup& G, const std::vector<PermGroup>& Hs,
                                 bool certify_s_value = false);

struct OffendingSubgroup {
    std::vector<Perm> elements;
    size_t order;
    bool abelian;
    std::vector<int> element_orders;  // sorted
};

struct CompatibilityReport {
    bool compatible = true;
    std::vector<OffendingSubgroup> offenders;  // minimal by inclusion
};

/// Checks that every admissible tame decomposition subgroup D = <s, t> with
/// s of order <= inertia_order_bound and t normalizing <s> (including all
/// cyclic subgroups, t ranging over the full normalizer) is contained in a
/// conjugate of some H_i.
CompatibilityReport decomposition_compatibility(const PermGroup& G,
                                                const std::vector<PermGroup>& Hs,
                                                int inertia_order_bound = 2);

std::string format_cycle_type(const std::vector<int>& partition);  // "1^5 2^4"

}  // namespace ilab

#endif
