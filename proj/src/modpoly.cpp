#include "ilab/modpoly.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace ilab {

ModPoly::ModPoly(Int p, std::vector<Int> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
    for (auto& v : c_) {
        v %= p_;
        if (v < 0) v += p_;
    }
    normalize();
}

ModPoly ModPoly::reduce(const IntPoly& f, const Int& p) {
    return ModPoly(p, f.coeffs());
}

void ModPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& ModPoly::operator[](int i) const {
    static const Int zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const Int& ModPoly::lc() const {
    static const Int zero(0);
    return c_.empty() ? zero : c_.back();
}

Int ModPoly::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = (r * x + *it) % p_;
    if (r < 0) r += p_;
    return r;
}

ModPoly ModPoly::x(const Int& p) { return ModPoly(p, {Int(0), Int(1)}); }
ModPoly ModPoly::constant(const Int& p, const Int& v) { return ModPoly(p, {v}); }

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    assert(a.modulus() == b.modulus());
    std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a[(int)i] + b[(int)i];
    return ModPoly(a.modulus(), std::move(c));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    assert(a.modulus() == b.modulus());
    std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a[(int)i] - b[(int)i];
    return ModPoly(a.modulus(), std::move(c));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    assert(a.modulus() == b.modulus());
    if (a.is_zero() || b.is_zero()) return ModPoly(a.modulus());
    std::vector<Int> c(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a[(int)i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a[(int)i] * b[(int)j];
    }
    return ModPoly(a.modulus(), std::move(c));
}

namespace {

Int inv_mod(const Int& a, const Int& p) {
    Int r;
    int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    assert(ok);
    (void)ok;
    return r;
}

}  // namespace

ModPoly mod(const ModPoly& a, const ModPoly& b) {
    assert(!b.is_zero());
    const Int& p = a.modulus();
    std::vector<Int> r(a.coeffs());
    int db = b.degree();
    Int binv = inv_mod(b.lc(), p);
    for (int dr = (int)r.size() - 1; dr >= db; --dr) {
        Int t = r[dr] % p;
        if (t == 0) continue;
        t = t * binv % p;
        for (int i = 0; i <= db; ++i) {
            r[dr - db + i] = (r[dr - db + i] - t * b[i]) % p;
        }
    }
    r.resize(std::min<size_t>(r.size(), db));
    return ModPoly(p, std::move(r));
}

ModPoly divexact_mod(const ModPoly& a, const ModPoly& b) {
    assert(!b.is_zero());
    const Int& p = a.modulus();
    if (a.is_zero()) return ModPoly(p);
    std::vector<Int> r(a.coeffs());
    int db = b.degree(), da = a.degree();
    assert(da >= db);
    std::vector<Int> q(da - db + 1, Int(0));
    Int binv = inv_mod(b.lc(), p);
    for (int dr = da; dr >= db; --dr) {
        Int t = r[dr] % p;
        if (t < 0) t += p;
        if (t != 0) {
            t = t * binv % p;
            q[dr - db] = t;
            for (int i = 0; i <= db; ++i) r[dr - db + i] = (r[dr - db + i] - t * b[i]) % p;
        }
    }
    for (int i = 0; i < db; ++i) assert(r[i] % p == 0);
    return ModPoly(p, std::move(q));
}

ModPoly monic(const ModPoly& a) {
    if (a.is_zero() || a.lc() == 1) return a;
    Int inv = inv_mod(a.lc(), a.modulus());
    std::vector<Int> c(a.coeffs());
    for (auto& v : c) v *= inv;
    return ModPoly(a.modulus(), std::move(c));
}

ModPoly gcd_mod(const ModPoly& a, const ModPoly& b) {
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

ModPoly derivative(const ModPoly& a) {
    if (a.degree() < 1) return ModPoly(a.modulus());
    std::vector<Int> c(a.degree(), Int(0));
    for (int i = 1; i <= a.degree(); ++i) c[i - 1] = Int(i) * a[i];
    return ModPoly(a.modulus(), std::move(c));
}

ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& m) {
    ModPoly r = ModPoly::constant(base.modulus(), 1);
    ModPoly b = mod(base, m);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = mod(r * r, m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(r * b, m);
    }
    return r;
}

bool is_squarefree_mod(const ModPoly& a) {
    if (a.degree() < 1) return !a.is_zero();
    ModPoly d = derivative(a);
    if (d.is_zero()) return false;
    return gcd_mod(a, d).degree() == 0;
}

namespace {

// p-th root of f over F_p when f = g(x^p): Frobenius fixes F_p pointwise,
// so g just collects every p-th coefficient.
ModPoly pth_root(const ModPoly& f) {
    const Int& p = f.modulus();
    assert(mpz_fits_ulong_p(p.get_mpz_t()) || f.degree() == 0);
    unsigned long pl = mpz_get_ui(p.get_mpz_t());
    std::vector<Int> c;
    for (int i = 0; i <= f.degree(); i += pl) c.push_back(f[i]);
    return ModPoly(p, std::move(c));
}

// Squarefree decomposition over F_p (monic input): list of (g_i, m_i) with
// f = prod g_i^{m_i}, g_i squarefree pairwise coprime.
void squarefree_mod(const ModPoly& f, int mult, std::vector<std::pair<ModPoly, int>>& out) {
    if (f.degree() < 1) return;
    ModPoly d = derivative(f);
    if (d.is_zero()) {
        unsigned long pl = mpz_get_ui(f.modulus().get_mpz_t());
        squarefree_mod(pth_root(f), mult * (int)pl, out);
        return;
    }
    ModPoly g = gcd_mod(f, d);
    ModPoly w = divexact_mod(f, g);
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = gcd_mod(w, g);
        ModPoly z = divexact_mod(w, y);
        if (z.degree() > 0) out.emplace_back(monic(z), mult * i);
        w = std::move(y);
        g = divexact_mod(g, w);
        ++i;
    }
    if (g.degree() > 0) {
        unsigned long pl = mpz_get_ui(f.modulus().get_mpz_t());
        squarefree_mod(pth_root(g), mult * (int)pl, out);
    }
}

Int rand_residue(std::mt19937_64& rng, const Int& p) {
    // Enough entropy for the desk-scale p used here.
    Int r = 0;
    size_t bits = mpz_sizeinbase(p.get_mpz_t(), 2);
    for (size_t i = 0; i < bits + 64; i += 32) {
        r = (r << 32) + (unsigned long)(rng() & 0xffffffffUL);
    }
    return r % p;
}

ModPoly random_poly_mod(std::mt19937_64& rng, const Int& p, int deg) {
    std::vector<Int> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rand_residue(rng, p));
    return ModPoly(p, std::move(c));
}

// Equal-degree splitting of h = product of irreducibles of degree d.
void edf(const ModPoly& h, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (h.degree() == d) {
        out.push_back(monic(h));
        return;
    }
    const Int& p = h.modulus();
    ModPoly g(p);
    while (true) {
        ModPoly a = random_poly_mod(rng, p, h.degree() - 1);
        if (a.degree() < 1 && d > 1) continue;
        if (a.is_zero()) continue;
        if (p == 2) {
            // Trace map sum_{i<d} a^(2^i) mod h.
            ModPoly t = mod(a, h), acc = mod(a, h);
            for (int i = 1; i < d; ++i) {
                t = mod(t * t, h);
                acc = acc + t;
            }
            g = gcd_mod(acc, h);
        } else {
            Int pd;
            mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), d);
            Int e = (pd - 1) / 2;
            ModPoly t = powmod(a, e, h);
            g = gcd_mod(t - ModPoly::constant(p, 1), h);
        }
        if (g.degree() > 0 && g.degree() < h.degree()) break;
    }
    edf(g, d, rng, out);
    edf(divexact_mod(h, g), d, rng, out);
}

}  // namespace

std::vector<std::pair<ModPoly, int>> factor_mod(const ModPoly& a, uint64_t seed) {
    assert(!a.is_zero());
    std::vector<std::pair<ModPoly, int>> result;
    if (a.degree() < 1) return result;
    const Int& p = a.modulus();
    std::mt19937_64 rng(seed ^ (uint64_t)mpz_get_ui(p.get_mpz_t()) ^ (uint64_t)a.degree());

    std::vector<std::pair<ModPoly, int>> sqf;
    squarefree_mod(monic(a), 1, sqf);
    for (auto& [g, m] : sqf) {
        // Distinct-degree splitting of squarefree g.
        ModPoly rem = g;
        ModPoly h = ModPoly::x(p);
        int d = 0;
        while (rem.degree() > 0) {
            ++d;
            if (2 * d > rem.degree()) {
                result.emplace_back(rem, m);  // remainder is irreducible
                break;
            }
            h = powmod(h, p, rem);
            ModPoly gd = gcd_mod(h - ModPoly::x(p), rem);
            if (gd.degree() > 0) {
                std::vector<ModPoly> pieces;
                edf(gd, d, rng, pieces);
                for (auto& q : pieces) result.emplace_back(q, m);
                rem = divexact_mod(rem, gd);
                h = mod(h, rem);
            }
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
        if (x.second != y.second) return x.second < y.second;
        for (int i = std::max(x.first.degree(), 0); i >= 0; --i)
            if (x.first[i] != y.first[i]) return x.first[i] < y.first[i];
        return false;
    });
    return result;
}

int DegreePattern::sum() const {
    int s = 0;
    for (int d : degrees) s += d;
    return s;
}

DegreePattern degree_pattern(const IntPoly& f, const Int& p, uint64_t seed) {
    ModPoly a = ModPoly::reduce(f, p);
    DegreePattern out;
    out.squarefree = is_squarefree_mod(a);
    for (auto& [g, m] : factor_mod(a, seed))
        for (int i = 0; i < m; ++i) out.degrees.push_back(g.degree());
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
}

bool is_irreducible_mod(const IntPoly& f, const Int& p, uint64_t seed) {
    ModPoly a = ModPoly::reduce(f, p);
    if (a.degree() != f.degree()) return false;  // leading coefficient died
    if (a.degree() < 1) return false;
    auto fac = factor_mod(a, seed);
    return fac.size() == 1 && fac[0].second == 1;
}

std::vector<Int> roots_mod_prime(const IntPoly& f, const Int& p, uint64_t seed) {
    ModPoly a = ModPoly::reduce(f, p);
    std::vector<Int> roots;
    if (a.is_zero()) {
        // Zero mod p: every residue is a root; callers avoid this, but answer
        // faithfully for small p.
        assert(mpz_fits_ulong_p(p.get_mpz_t()));
        for (Int r = 0; r < p; ++r) roots.push_back(r);
        return roots;
    }
    if (a.degree() < 1) return roots;
    // Strip the x^p - x part: gcd(a, x^p - x) is the product of (x - r).
    ModPoly xp = powmod(ModPoly::x(p), p, a);
    ModPoly lin = gcd_mod(xp - ModPoly::x(p), a);
    if (lin.degree() < 1) return roots;
    std::mt19937_64 rng(seed ^ 0x5eedULL);
    std::vector<ModPoly> pieces;
    edf(lin, 1, rng, pieces);
    for (auto& q : pieces) {
        Int r = (p - q[0]) % p;
        roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Int> roots_mod_prime_power(const IntPoly& f, const Int& p, unsigned k, uint64_t seed) {
    assert(k >= 1);
    std::vector<Int> level = roots_mod_prime(f, p, seed);
    Int pj = p;
    IntPoly fp = derivative(f);
    for (unsigned j = 1; j < k; ++j) {
        Int pj1 = pj * p;
        std::vector<Int> next;
        for (const Int& r : level) {
            Int fr = f.eval(r) % pj1;
            if (fr < 0) fr += pj1;
            Int fpr = fp.eval(r) % p;
            if (fpr < 0) fpr += p;
            if (fpr != 0) {
                // Simple residue: unique lift with f'(r) s = -f(r)/pj (mod p).
                Int t = fr / pj;
                Int s = ((p - t % p) * inv_mod(fpr, p)) % p;
                next.push_back(r + s * pj);
            } else {
                // Singular: every s works iff f(r) = 0 mod pj1.
                if (fr % pj1 == 0) {
                    for (Int s = 0; s < p; ++s) next.push_back(r + s * pj);
                }
            }
            if (next.size() > 10000) throw BranchOverflow();
        }
        level = std::move(next);
        pj = pj1;
    }
    std::sort(level.begin(), level.end());
    return level;
}

std::optional<HenselRoot> hensel_certified_root(const IntPoly& f, const Int& p, uint64_t seed) {
    assert(f.degree() >= 1);
    unsigned v = 0;
    if (f.degree() >= 2) {
        Int d = discriminant(f);
        assert(d != 0);
        v = valuation(d, p);
    }
    unsigned k = 2 * v + 1;
    std::vector<Int> roots;
    try {
        roots = roots_mod_prime_power(f, p, k, seed);
    } catch (const BranchOverflow&) {
        return std::nullopt;
    }
    IntPoly fp = derivative(f);
    Int pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
    for (const Int& r : roots) {
        Int d = fp.eval(r);
        unsigned w = d == 0 ? k : valuation(d, p);
        if (w <= v) return HenselRoot{r, pk, k, w};
    }
    return std::nullopt;
}

}  // namespace ilab
