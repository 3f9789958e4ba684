#include "ilab/groups.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace ilab {

Perm::Perm(int degree) : img_(degree) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        assert(v >= 0 && v < (int)img_.size() && !seen[v]);
        seen[v] = true;
    }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i] - 1;
            int to = cyc[(i + 1) % cyc.size()] - 1;
            img[from] = to;
        }
    }
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::operator*(const Perm& o) const {
    assert(degree() == o.degree());
    std::vector<int> img(degree());
    for (int i = 0; i < degree(); ++i) img[i] = img_[o.img_[i]];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> img(degree());
    for (int i = 0; i < degree(); ++i) img[img_[i]] = i;
    return Perm(std::move(img));
}

std::vector<int> Perm::cycle_type() const {
    std::vector<bool> seen(degree(), false);
    std::vector<int> parts;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

int Perm::order() const {
    int o = 1;
    for (int len : cycle_type()) o = (int)std::lcm(o, len);
    return o;
}

bool Perm::has_fixed_point() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] == i) return true;
    return false;
}

std::string Perm::to_string() const {
    std::ostringstream os;
    std::vector<bool> seen(degree(), false);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) {
            seen[i] = true;
            continue;
        }
        os << "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << " ";
            os << j + 1;
            first = false;
            j = img_[j];
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : "()";
}

PermGroup PermGroup::generate(const std::vector<Perm>& gens, size_t bound) {
    PermGroup G;
    assert(!gens.empty());
    G.degree_ = gens[0].degree();
    G.gens_ = gens;
    std::set<Perm> closed;
    std::deque<Perm> queue;
    Perm id(G.degree_);
    closed.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Perm p = queue.front();
        queue.pop_front();
        for (const Perm& g : gens) {
            Perm q = p * g;
            if (closed.insert(q).second) {
                if (closed.size() > bound) throw OrderBoundExceeded();
                queue.push_back(q);
            }
        }
    }
    G.elements_.assign(closed.begin(), closed.end());
    return G;
}

PermGroup PermGroup::from_elements(std::vector<Perm> elements) {
    PermGroup G;
    assert(!elements.empty());
    G.degree_ = elements[0].degree();
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    G.elements_ = std::move(elements);
    G.gens_ = G.elements_;
    return G;
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::contains_all(const std::vector<Perm>& ps) const {
    for (const auto& p : ps)
        if (!contains(p)) return false;
    return true;
}

bool PermGroup::is_abelian() const {
    for (const Perm& a : gens_)
        for (const Perm& b : gens_)
            if (!(a * b == b * a)) return false;
    return true;
}

bool PermGroup::fixes_a_point() const {
    for (int i = 0; i < degree_; ++i) {
        bool fixed = true;
        for (const Perm& p : elements_)
            if (p(i) != i) {
                fixed = false;
                break;
            }
        if (fixed) return true;
    }
    return false;
}

std::map<std::vector<int>, size_t> PermGroup::cycle_type_census() const {
    std::map<std::vector<int>, size_t> census;
    for (const Perm& p : elements_) census[p.cycle_type()]++;
    return census;
}

std::vector<Perm> PermGroup::involutions() const {
    std::vector<Perm> out;
    for (const Perm& p : elements_)
        if (!p.is_identity() && (p * p).is_identity()) out.push_back(p);
    return out;
}

std::vector<Perm> PermGroup::fixed_point_free_elements() const {
    std::vector<Perm> out;
    for (const Perm& p : elements_)
        if (!p.has_fixed_point()) out.push_back(p);
    return out;
}

bool PermGroup::generated_by_involutions() const {
    auto inv = involutions();
    if (inv.empty()) return order() == 1;
    return PermGroup::generate(inv, order() + 1).order() == order();
}

PermGroup PermGroup::centralizer(const Perm& t) const {
    std::vector<Perm> cent;
    for (const Perm& p : elements_)
        if (p * t == t * p) cent.push_back(p);
    return PermGroup::from_elements(std::move(cent));
}

PermGroup PermGroup::conjugate(const Perm& g) const {
    std::vector<Perm> conj;
    Perm gi = g.inverse();
    conj.reserve(elements_.size());
    for (const Perm& h : elements_) conj.push_back(g * h * gi);
    return PermGroup::from_elements(std::move(conj));
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

PermGroup cyclic_group(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return PermGroup::generate({Perm(std::move(img))});
}

PermGroup dihedral_group(int n) {
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return PermGroup::generate({Perm(std::move(rot)), Perm(std::move(refl))});
}

PermGroup symmetric_group(int n) {
    if (n == 1) return PermGroup::generate({Perm(1)});
    std::vector<int> cyc(n), swap01(n);
    for (int i = 0; i < n; ++i) {
        cyc[i] = (i + 1) % n;
        swap01[i] = i;
    }
    std::swap(swap01[0], swap01[1]);
    return PermGroup::generate({Perm(std::move(cyc)), Perm(std::move(swap01))});
}

PermGroup alternating_group(int n) {
    assert(n >= 3);
    std::vector<Perm> gens;
    gens.push_back(Perm::from_cycles(n, {{1, 2, 3}}));
    if (n > 3) {
        if (n % 2 == 1) {
            std::vector<int> cyc(n);
            for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;  // odd n-cycle is even
            gens.push_back(Perm(std::move(cyc)));
        } else {
            std::vector<int> c(n);
            std::iota(c.begin(), c.end(), 0);
            // (2 3 ... n) as an (n-1)-cycle on the last n-1 points
            for (int i = 1; i < n; ++i) c[i] = i == n - 1 ? 1 : i + 1;
            gens.push_back(Perm(std::move(c)));
        }
    }
    return PermGroup::generate(gens);
}

PermGroup frobenius_group(int p, int m) {
    std::vector<int> add(p), mul(p);
    for (int i = 0; i < p; ++i) {
        add[i] = (i + 1) % p;
        mul[i] = (int)((long)i * m % p);
    }
    return PermGroup::generate({Perm(std::move(add)), Perm(std::move(mul))});
}

namespace {

// Permutation action of an invertible matrix over F_q on a labelled point set.
template <class Point, class Apply>
Perm matrix_to_perm(const std::vector<Point>& points, Apply&& apply) {
    std::vector<int> img(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        Point q = apply(points[i]);
        auto it = std::find(points.begin(), points.end(), q);
        assert(it != points.end());
        img[i] = (int)(it - points.begin());
    }
    return Perm(std::move(img));
}

using Mat3 = std::array<std::array<int, 3>, 3>;
using Vec3 = std::array<int, 3>;

Vec3 apply_mat(const Mat3& M, const Vec3& v, int q) {
    Vec3 w{0, 0, 0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) w[i] = (w[i] + M[i][j] * v[j]) % q;
    return w;
}

Vec3 normalize_proj(Vec3 v, int q) {
    // scale so the first nonzero coordinate is 1
    int lead = 0;
    while (lead < 3 && v[lead] == 0) ++lead;
    assert(lead < 3);
    int inv = 1;
    for (int t = 1; t < q; ++t)
        if (t * v[lead] % q == 1) inv = t;
    for (auto& c : v) c = c * inv % q;
    return v;
}

}  // namespace

PermGroup psl27_degree7() {
    // GL_3(2) on the 7 nonzero vectors of F_2^3.
    std::vector<Vec3> points;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                if (a + b + c > 0) points.push_back({a, b, c});
    Mat3 A{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
    Mat3 B{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
    auto pa = matrix_to_perm(points, [&](const Vec3& v) { return apply_mat(A, v, 2); });
    auto pb = matrix_to_perm(points, [&](const Vec3& v) { return apply_mat(B, v, 2); });
    return PermGroup::generate({pa, pb});
}

PermGroup psl33_degree13() {
    // SL_3(3) on the 13 points of the projective plane over F_3.
    std::vector<Vec3> points;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                if (a + b + c == 0) continue;
                Vec3 v = normalize_proj({a, b, c}, 3);
                if (std::find(points.begin(), points.end(), v) == points.end())
                    points.push_back(v);
            }
    assert(points.size() == 13);
    Mat3 A{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
    Mat3 B{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
    auto pa = matrix_to_perm(points, [&](const Vec3& v) { return normalize_proj(apply_mat(A, v, 3), 3); });
    auto pb = matrix_to_perm(points, [&](const Vec3& v) { return normalize_proj(apply_mat(B, v, 3), 3); });
    return PermGroup::generate({pa, pb}, 6000);
}

PermGroup point_stabilizer(const PermGroup& G, int point0) {
    std::vector<Perm> stab;
    for (const Perm& p : G.elements())
        if (p(point0) == point0) stab.push_back(p);
    return PermGroup::from_elements(std::move(stab));
}

PermGroup cyclic_sylow(const PermGroup& G, int p) {
    for (const Perm& g : G.elements())
        if (g.order() == p) return PermGroup::generate({g});
    assert(false && "no element of the requested prime order");
    return PermGroup();
}

PermGroup d5_in_a5() {
    return PermGroup::generate(
        {Perm::from_cycles(5, {{1, 2, 3, 4, 5}}), Perm::from_cycles(5, {{2, 5}, {3, 4}})});
}

std::vector<PermGroup> all_subgroups(const PermGroup& G) {
    std::set<std::vector<Perm>> seen;
    std::deque<std::vector<Perm>> queue;
    std::vector<Perm> triv{Perm(G.degree())};
    seen.insert(triv);
    queue.push_back(triv);
    while (!queue.empty()) {
        auto H = queue.front();
        queue.pop_front();
        for (const Perm& g : G.elements()) {
            if (std::binary_search(H.begin(), H.end(), g)) continue;
            std::vector<Perm> gens = H;
            gens.push_back(g);
            PermGroup K = PermGroup::generate(gens, G.order() + 1);
            auto key = K.elements();
            if (seen.insert(key).second) queue.push_back(key);
        }
    }
    std::vector<PermGroup> out;
    for (auto& els : seen) out.push_back(PermGroup::from_elements(els));
    std::sort(out.begin(), out.end(),
              [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
    return out;
}

namespace {

// Distinct conjugates of H in G, as sorted element vectors.
std::vector<std::vector<Perm>> conjugates_of(const PermGroup& G, const PermGroup& H) {
    std::set<std::vector<Perm>> out;
    for (const Perm& g : G.elements()) {
        Perm gi = g.inverse();
        std::vector<Perm> conj;
        conj.reserve(H.order());
        for (const Perm& h : H.elements()) conj.push_back(g * h * gi);
        std::sort(conj.begin(), conj.end());
        out.insert(std::move(conj));
    }
    return {out.begin(), out.end()};
}

bool subset_of(const std::vector<Perm>& small, const std::vector<Perm>& big_sorted) {
    for (const Perm& p : small)
        if (!std::binary_search(big_sorted.begin(), big_sorted.end(), p)) return false;
    return true;
}

}  // namespace

CoverDatum conjugate_cover_check(const PermGroup& G, const std::vector<PermGroup>& Hs,
                                 bool certify_s_value) {
    CoverDatum out;
    out.m = Hs.size();
    std::set<Perm> covered;
    std::set<Perm> intersection(G.elements().begin(), G.elements().end());
    for (const auto& H : Hs) {
        if (!G.contains_all(H.elements())) throw SubgroupNotContained();
        if (H.order() >= G.order()) throw SubgroupNotContained();  // must be proper
        out.subgroup_orders.push_back(H.order());
        for (auto& conj : conjugates_of(G, H)) {
            covered.insert(conj.begin(), conj.end());
            std::set<Perm> next;
            for (const Perm& p : intersection)
                if (std::binary_search(conj.begin(), conj.end(), p)) next.insert(p);
            intersection = std::move(next);
        }
    }
    out.is_cover = covered.size() == G.order();
    out.trivial_intersection = intersection.size() == 1;
    if (certify_s_value && out.is_cover && out.trivial_intersection && out.m == 2) {
        // No single proper subgroup's conjugates cover a finite group; verify
        // exhaustively over the maximal subgroups, which dominate all others.
        auto subs = all_subgroups(G);
        std::vector<PermGroup> proper;
        for (auto& H : subs)
            if (H.order() < G.order()) proper.push_back(H);
        bool single_cover = false;
        for (auto& H : proper) {
            bool maximal = true;
            for (auto& K : proper)
                if (K.order() > H.order() && K.order() < G.order() &&
                    subset_of(H.elements(), K.elements()) && K.order() != H.order())
                    maximal = false;
            if (!maximal) continue;
            std::set<Perm> cov;
            for (auto& conj : conjugates_of(G, H)) cov.insert(conj.begin(), conj.end());
            if (cov.size() == G.order()) single_cover = true;
        }
        out.single_cover_impossible_checked = !single_cover;
        if (!single_cover) out.s_value = 2;
    }
    return out;
}

CompatibilityReport decomposition_compatibility(const PermGroup& G,
                                                const std::vector<PermGroup>& Hs,
                                                int inertia_order_bound) {
    CompatibilityReport rep;
    // All distinct conjugates of each H_i.
    std::vector<std::vector<Perm>> conj_sets;
    for (const auto& H : Hs) {
        if (!G.contains_all(H.elements())) throw SubgroupNotContained();
        for (auto& c : conjugates_of(G, H)) conj_sets.push_back(c);
    }
    auto contained_somewhere = [&](const std::vector<Perm>& D) {
        for (const auto& c : conj_sets)
            if (D.size() <= c.size() && subset_of(D, c)) return true;
        return false;
    };

    std::set<std::vector<Perm>> candidates;
    // (a) cyclic subgroups
    for (const Perm& g : G.elements()) {
        PermGroup C = PermGroup::generate({g}, G.order() + 1);
        candidates.insert(C.elements());
    }
    // (b) tame decomposition shapes <s, t>: s the inertia generator of order
    // <= bound, t normalizing <s>.
    for (const Perm& s : G.elements()) {
        if (s.is_identity()) continue;
        int o = s.order();
        if (o > inertia_order_bound) continue;
        PermGroup S = PermGroup::generate({s}, G.order() + 1);
        for (const Perm& t : G.elements()) {
            // t normalizes <s>?
            Perm ti = t.inverse();
            bool normalizes = true;
            for (const Perm& x : S.elements())
                if (!S.contains(t * x * ti)) {
                    normalizes = false;
                    break;
                }
            if (!normalizes) continue;
            PermGroup D = PermGroup::generate({s, t}, G.order() + 1);
            candidates.insert(D.elements());
        }
    }

    std::vector<std::vector<Perm>> bad;
    for (const auto& D : candidates)
        if (!contained_somewhere(D)) bad.push_back(D);
    if (bad.empty()) return rep;

    rep.compatible = false;
    // keep only inclusion-minimal offenders
    for (const auto& D : bad) {
        bool minimal = true;
        for (const auto& E : bad)
            if (E.size() < D.size() && subset_of(E, D)) minimal = false;
        if (!minimal) continue;
        OffendingSubgroup off;
        off.elements = D;
        off.order = D.size();
        PermGroup Dg = PermGroup::from_elements(D);
        off.abelian = Dg.is_abelian();
        for (const Perm& p : D) off.element_orders.push_back(p.order());
        std::sort(off.element_orders.begin(), off.element_orders.end());
        rep.offenders.push_back(std::move(off));
    }
    std::sort(rep.offenders.begin(), rep.offenders.end(),
              [](const OffendingSubgroup& a, const OffendingSubgroup& b) {
                  return a.order < b.order;
              });
    return rep;
}

std::string format_cycle_type(const std::vector<int>& partition) {
    std::ostringstream os;
    int i = 0;
    bool first = true;
    while (i < (int)partition.size()) {
        int j = i;
        while (j < (int)partition.size() && partition[j] == partition[i]) ++j;
        if (!first) os << " ";
        os << partition[i];
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

}  // namespace ilab
