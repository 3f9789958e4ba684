#include "ilab/poly.hpp"

#include <cassert>
#include <sstream>

namespace ilab {

// ---------------------------------------------------------------------------
// IntPoly basics
// ---------------------------------------------------------------------------

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly IntPoly::constant(const Int& v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(v);
    return p;
}

IntPoly IntPoly::monomial(const Int& coeff, int deg) {
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(deg + 1, Int(0));
        p.c_[deg] = coeff;
    }
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::lc() const {
    static const Int zero(0);
    return c_.empty() ? zero : c_.back();
}

const Int& IntPoly::operator[](int i) const {
    static const Int zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

Int IntPoly::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a[(int)i] + b[(int)i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a[(int)i] - b[(int)i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<Int> c(a.coeffs());
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a[(int)i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a[(int)i] * b[(int)j];
    }
    return IntPoly(std::move(c));
}

IntPoly operator*(const Int& k, const IntPoly& a) {
    std::vector<Int> c(a.coeffs());
    for (auto& v : c) v *= k;
    return IntPoly(std::move(c));
}

IntPoly pow(const IntPoly& a, unsigned e) {
    IntPoly r = IntPoly::constant(1);
    IntPoly base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

IntPoly derivative(const IntPoly& a) {
    if (a.degree() < 1) return IntPoly();
    std::vector<Int> c(a.degree(), Int(0));
    for (int i = 1; i <= a.degree(); ++i) c[i - 1] = Int(i) * a[i];
    return IntPoly(std::move(c));
}

Int content(const IntPoly& a) {
    Int g = 0;
    for (const Int& v : a.coeffs()) g = gcd(g, v);
    return g;
}

IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return a;
    Int c = content(a);
    if (a.lc() < 0) c = -c;
    return divexact(a, c);
}

IntPoly divexact(const IntPoly& a, const Int& k) {
    assert(k != 0);
    std::vector<Int> c(a.coeffs());
    for (auto& v : c) {
        assert(mpz_divisible_p(v.get_mpz_t(), k.get_mpz_t()));
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
    }
    return IntPoly(std::move(c));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    assert(!b.is_zero());
    if (a.is_zero()) return IntPoly();
    std::vector<Int> rem(a.coeffs());
    int dr = a.degree(), db = b.degree();
    assert(dr >= db);
    std::vector<Int> q(dr - db + 1, Int(0));
    while (dr >= db) {
        Int& lead = rem[dr];
        if (lead != 0) {
            assert(mpz_divisible_p(lead.get_mpz_t(), b.lc().get_mpz_t()));
            Int t;
            mpz_divexact(t.get_mpz_t(), lead.get_mpz_t(), b.lc().get_mpz_t());
            q[dr - db] = t;
            for (int i = 0; i <= db; ++i) rem[dr - db + i] -= t * b[i];
        }
        --dr;
    }
    for (auto& v : rem) assert(v == 0);
    return IntPoly(std::move(q));
}

bool divides(const IntPoly& b, const IntPoly& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    if (a.degree() < b.degree()) return false;
    std::vector<Int> rem(a.coeffs());
    int dr = a.degree(), db = b.degree();
    while (dr >= db) {
        Int& lead = rem[dr];
        if (lead != 0) {
            if (!mpz_divisible_p(lead.get_mpz_t(), b.lc().get_mpz_t())) return false;
            Int t;
            mpz_divexact(t.get_mpz_t(), lead.get_mpz_t(), b.lc().get_mpz_t());
            for (int i = 0; i <= db; ++i) rem[dr - db + i] -= t * b[i];
        }
        --dr;
    }
    for (auto& v : rem)
        if (v != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Generic subresultant machinery, instantiated over Z and over Z[t].
// ---------------------------------------------------------------------------

namespace {

template <class C>
struct Ring;

template <>
struct Ring<Int> {
    static Int zero() { return Int(0); }
    static Int one() { return Int(1); }
    static bool is_zero(const Int& a) { return a == 0; }
    static Int neg(const Int& a) { return -a; }
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Int exact_div(const Int& a, const Int& b) {
        assert(b != 0 && mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()));
        Int q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static Int gcd(const Int& a, const Int& b) { return ilab::gcd(a, b); }
    static Int pow(const Int& a, unsigned e) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
        return r;
    }
};

template <>
struct Ring<IntPoly> {
    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly::constant(1); }
    static bool is_zero(const IntPoly& a) { return a.is_zero(); }
    static IntPoly neg(const IntPoly& a) { return -a; }
    static IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }
    static IntPoly exact_div(const IntPoly& a, const IntPoly& b) { return divexact(a, b); }
    static IntPoly gcd(const IntPoly& a, const IntPoly& b) { return gcd_z(a, b); }
    static IntPoly pow(const IntPoly& a, unsigned e) { return ilab::pow(a, e); }
};

// Dense polynomial over a coefficient ring C, internal to this file.
template <class C>
struct RPoly {
    std::vector<C> c;

    void normalize() {
        while (!c.empty() && Ring<C>::is_zero(c.back())) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const C& lc() const { return c.back(); }
};

template <class C>
RPoly<C> rp_mul_coeff(const RPoly<C>& a, const C& k) {
    RPoly<C> r = a;
    for (auto& v : r.c) v = Ring<C>::mul(v, k);
    r.normalize();
    return r;
}

template <class C>
RPoly<C> rp_divexact_coeff(const RPoly<C>& a, const C& k) {
    RPoly<C> r = a;
    for (auto& v : r.c) v = Ring<C>::exact_div(v, k);
    return r;
}

// Pseudo-remainder: returns lc(b)^(deg a - deg b + 1) * a  mod b.
template <class C>
RPoly<C> rp_prem(RPoly<C> a, const RPoly<C>& b) {
    int db = b.degree();
    int e = a.degree() - db + 1;
    const C& d = b.lc();
    while (!a.is_zero() && a.degree() >= db) {
        int da = a.degree();
        C la = a.lc();
        RPoly<C> next;
        next.c.assign(std::max<size_t>(a.c.size(), 0), Ring<C>::zero());
        // next = d*a - la * x^(da-db) * b
        for (size_t i = 0; i < a.c.size(); ++i) next.c[i] = Ring<C>::mul(d, a.c[i]);
        for (int i = 0; i <= db; ++i) {
            size_t k = i + da - db;
            next.c[k] = next.c[k] - Ring<C>::mul(la, b.c[i]);
        }
        next.normalize();
        a = std::move(next);
        --e;
    }
    if (e > 0) {
        C f = Ring<C>::pow(b.lc(), static_cast<unsigned>(e));
        a = rp_mul_coeff(a, f);
    }
    return a;
}

template <class C>
C rp_content(const RPoly<C>& a) {
    C g = Ring<C>::zero();
    for (const auto& v : a.c) g = Ring<C>::gcd(g, v);
    return g;
}

// Resultant over a UFD via the subresultant PRS (Collins/Brown-Traub,
// in the form of Cohen, Algorithm 3.3.7).
template <class C>
C rp_resultant(RPoly<C> A, RPoly<C> B) {
    if (A.is_zero() || B.is_zero()) return Ring<C>::zero();
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    C a = rp_content(A), b = rp_content(B);
    A = rp_divexact_coeff(A, a);
    B = rp_divexact_coeff(B, b);
    C t = Ring<C>::mul(Ring<C>::pow(a, static_cast<unsigned>(B.degree())),
                       Ring<C>::pow(b, static_cast<unsigned>(A.degree())));
    C g = Ring<C>::one(), h = Ring<C>::one();

    auto finish = [&](const RPoly<C>& last, const C& hh) {
        // res = s * t * lc(B)^degA / h^(degA-1) with degA the degree of the
        // last positive-degree element of the chain.
        unsigned dA = static_cast<unsigned>(last.degree());
        C num = Ring<C>::pow(B.lc(), dA);
        C den = Ring<C>::pow(hh, dA - 1);
        C r = Ring<C>::exact_div(num, den);
        r = Ring<C>::mul(t, r);
        if (s < 0) r = Ring<C>::neg(r);
        return r;
    };

    if (B.degree() == 0) {
        C r = Ring<C>::pow(B.lc(), static_cast<unsigned>(A.degree()));
        r = Ring<C>::mul(t, r);
        if (s < 0) r = Ring<C>::neg(r);
        return r;
    }

    while (true) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        RPoly<C> R = rp_prem(A, B);
        A = std::move(B);
        C divisor = Ring<C>::mul(g, Ring<C>::pow(h, static_cast<unsigned>(delta)));
        if (R.is_zero()) return Ring<C>::zero();  // positive-degree common factor
        B = rp_divexact_coeff(R, divisor);
        if (B.degree() == 0) return finish(A, h);
        g = A.lc();
        if (delta > 0)
            h = Ring<C>::exact_div(Ring<C>::pow(g, static_cast<unsigned>(delta)),
                                   Ring<C>::pow(h, static_cast<unsigned>(delta - 1)));
    }
}

// Primitive GCD via the subresultant PRS; result primitive.
template <class C>
RPoly<C> rp_gcd_primitive(RPoly<C> A, RPoly<C> B) {
    if (A.is_zero()) return B;
    if (B.is_zero()) return A;
    if (A.degree() < B.degree()) std::swap(A, B);
    A = rp_divexact_coeff(A, rp_content(A));
    B = rp_divexact_coeff(B, rp_content(B));
    C g = Ring<C>::one(), h = Ring<C>::one();
    while (true) {
        int delta = A.degree() - B.degree();
        RPoly<C> R = rp_prem(A, B);
        if (R.is_zero()) {
            return rp_divexact_coeff(B, rp_content(B));
        }
        if (R.degree() == 0) {
            RPoly<C> one;
            one.c.push_back(Ring<C>::one());
            return one;  // coprime primitive parts
        }
        A = std::move(B);
        C divisor = Ring<C>::mul(g, Ring<C>::pow(h, static_cast<unsigned>(delta)));
        B = rp_divexact_coeff(R, divisor);
        g = A.lc();
        if (delta > 0)
            h = Ring<C>::exact_div(Ring<C>::pow(g, static_cast<unsigned>(delta)),
                                   Ring<C>::pow(h, static_cast<unsigned>(delta - 1)));
    }
}

RPoly<Int> to_rp(const IntPoly& p) {
    RPoly<Int> r;
    r.c = p.coeffs();
    return r;
}

IntPoly from_rp(const RPoly<Int>& p) { return IntPoly(p.c); }

RPoly<IntPoly> to_rp(const BiPoly& p) {
    RPoly<IntPoly> r;
    r.c = p.x_coeffs();
    return r;
}

}  // namespace

IntPoly gcd_z(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.lc() < 0 ? -b : b;
    if (b.is_zero()) return a.lc() < 0 ? -a : a;
    Int cg = gcd(content(a), content(b));
    RPoly<Int> g = rp_gcd_primitive(to_rp(a), to_rp(b));
    IntPoly out = cg * from_rp(g);
    if (out.lc() < 0) out = -out;
    return out;
}

Int resultant(const IntPoly& a, const IntPoly& b) {
    return rp_resultant(to_rp(a), to_rp(b));
}

Int discriminant(const IntPoly& p) {
    int d = p.degree();
    if (d < 2) throw DegreeTooLow();
    Int r = resultant(p, derivative(p));
    if (((d * (d - 1)) / 2) & 1) r = -r;
    return Ring<Int>::exact_div(r, p.lc());
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
    assert(!p.is_zero());
    IntPoly f = primitive_part(p);
    std::vector<IntPoly> out;
    if (f.degree() < 1) return out;
    IntPoly fp = derivative(f);
    IntPoly g = gcd_z(f, fp);
    if (g.degree() == 0) {
        out.push_back(f);
        return out;
    }
    IntPoly w = divexact(f, g);
    IntPoly y = divexact(fp, g);
    IntPoly z = y - derivative(w);
    while (w.degree() > 0) {
        IntPoly ai = gcd_z(w, z);
        out.push_back(ai);
        w = divexact(w, ai);
        y = divexact(z, ai);
        z = y - derivative(w);
    }
    return out;
}

bool is_constant_times_square(const IntPoly& p) {
    if (p.is_zero()) return true;
    if (p.degree() == 0) return true;
    if (p.degree() & 1) return false;
    auto dec = squarefree_decomposition(p);
    for (size_t i = 0; i < dec.size(); ++i)
        if ((i % 2 == 0) && dec[i].degree() > 0) return false;  // odd multiplicity i+1
    return true;
}

std::optional<IntPoly> polynomial_square_root(const IntPoly& p) {
    if (p.is_zero()) return IntPoly();
    int d2 = p.degree();
    if (d2 & 1) return std::nullopt;
    int d = d2 / 2;
    auto lead = perfect_square_root(p.lc());
    if (!lead) return std::nullopt;
    std::vector<Int> g(d + 1, Int(0));
    g[d] = *lead;
    Int two_lead = 2 * *lead;
    for (int k = d - 1; k >= 0; --k) {
        // coefficient of t^(d+k): 2 g_d g_k plus the pairs with k < i <= j < d
        Int acc = p[d + k];
        for (int i = k + 1; i < d; ++i) {
            int j = d + k - i;
            if (j >= d || j < i) continue;
            acc -= (i == j ? Int(1) : Int(2)) * g[i] * g[j];
        }
        if (!mpz_divisible_p(acc.get_mpz_t(), two_lead.get_mpz_t())) return std::nullopt;
        mpz_divexact(g[k].get_mpz_t(), acc.get_mpz_t(), two_lead.get_mpz_t());
    }
    IntPoly root{std::move(g)};
    if (root * root == p) return root;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sturm sequences
// ---------------------------------------------------------------------------

namespace {

int sign_at_infinity(const IntPoly& p, bool positive) {
    if (p.is_zero()) return 0;
    int s = sgn(p.lc());
    if (!positive && (p.degree() & 1)) s = -s;
    return s;
}

int count_sign_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

SturmReport sturm_real_roots(const IntPoly& p) {
    if (p.degree() < 1) {
        SturmReport r;
        r.poly = p;
        return r;
    }
    if (gcd_z(p, derivative(p)).degree() > 0) throw NotSquarefree();

    // Sign-faithful pseudo-remainder chain: p_{i+1} = -prem(p_{i-1}, p_i)
    // with the pseudo factor forced positive, contents stripped.
    std::vector<IntPoly> chain;
    chain.push_back(primitive_part(p));
    chain.push_back(primitive_part(derivative(p)));
    while (chain.back().degree() > 0) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        RPoly<Int> r = rp_prem(to_rp(a), to_rp(b));
        IntPoly rem = from_rp(r);
        int delta = a.degree() - b.degree();
        if (b.lc() < 0 && ((delta + 1) & 1)) rem = -rem;  // make the scale factor positive
        rem = -rem;
        if (rem.is_zero()) break;
        Int c = content(rem);  // positive: dividing it out preserves all signs
        chain.push_back(divexact(rem, c));
    }

    std::vector<int> at_minus, at_plus;
    SturmReport rep;
    rep.poly = p;
    for (const IntPoly& q : chain) {
        at_minus.push_back(sign_at_infinity(q, false));
        at_plus.push_back(sign_at_infinity(q, true));
        rep.sequence_lengths.push_back(q.degree());
    }
    rep.real_root_count = count_sign_changes(at_minus) - count_sign_changes(at_plus);
    return rep;
}

std::string to_string(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Int& c = p[i];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// BiPoly
// ---------------------------------------------------------------------------

BiPoly::BiPoly(std::vector<IntPoly> x_coeffs) : xc_(std::move(x_coeffs)) { normalize(); }

BiPoly BiPoly::from_univariate_in_x(const IntPoly& p) {
    std::vector<IntPoly> xc;
    for (int i = 0; i <= p.degree(); ++i) xc.push_back(IntPoly::constant(p[i]));
    return BiPoly(std::move(xc));
}

BiPoly BiPoly::from_univariate_in_t(const IntPoly& p) {
    std::vector<IntPoly> xc;
    xc.push_back(p);
    return BiPoly(std::move(xc));
}

void BiPoly::normalize() {
    while (!xc_.empty() && xc_.back().is_zero()) xc_.pop_back();
}

int BiPoly::deg_t() const {
    int d = -1;
    for (const auto& c : xc_) d = std::max(d, c.degree());
    return d;
}

const IntPoly& BiPoly::coeff_x(int i) const {
    static const IntPoly zero;
    if (i < 0 || i >= static_cast<int>(xc_.size())) return zero;
    return xc_[i];
}

bool BiPoly::monic_in_x() const {
    return !xc_.empty() && xc_.back() == IntPoly::constant(1);
}

IntPoly BiPoly::specialize(const Int& c) const {
    std::vector<Int> out;
    out.reserve(xc_.size());
    for (const auto& q : xc_) out.push_back(q.eval(c));
    return IntPoly(std::move(out));
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    std::vector<IntPoly> c(std::max(a.x_coeffs().size(), b.x_coeffs().size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff_x((int)i) + b.coeff_x((int)i);
    return BiPoly(std::move(c));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    std::vector<IntPoly> c(std::max(a.x_coeffs().size(), b.x_coeffs().size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff_x((int)i) - b.coeff_x((int)i);
    return BiPoly(std::move(c));
}

BiPoly operator-(const BiPoly& a) {
    std::vector<IntPoly> c(a.x_coeffs());
    for (auto& v : c) v = -v;
    return BiPoly(std::move(c));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    std::vector<IntPoly> c(a.x_coeffs().size() + b.x_coeffs().size() - 1);
    for (size_t i = 0; i < a.x_coeffs().size(); ++i)
        for (size_t j = 0; j < b.x_coeffs().size(); ++j)
            c[i + j] = c[i + j] + a.coeff_x((int)i) * b.coeff_x((int)j);
    return BiPoly(std::move(c));
}

BiPoly operator*(const Int& k, const BiPoly& a) {
    std::vector<IntPoly> c(a.x_coeffs());
    for (auto& v : c) v = k * v;
    return BiPoly(std::move(c));
}

BiPoly pow(const BiPoly& a, unsigned e) {
    BiPoly r = BiPoly::from_univariate_in_x(IntPoly::constant(1));
    BiPoly base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

BiPoly derivative_x(const BiPoly& f) {
    if (f.deg_x() < 1) return BiPoly();
    std::vector<IntPoly> c(f.deg_x());
    for (int i = 1; i <= f.deg_x(); ++i) c[i - 1] = Int(i) * f.coeff_x(i);
    return BiPoly(std::move(c));
}

BiPoly derivative_t(const BiPoly& f) {
    std::vector<IntPoly> c;
    for (int i = 0; i <= f.deg_x(); ++i) c.push_back(derivative(f.coeff_x(i)));
    return BiPoly(std::move(c));
}

IntPoly resultant_x(const BiPoly& a, const BiPoly& b) {
    return rp_resultant(to_rp(a), to_rp(b));
}

IntPoly discriminant_x(const BiPoly& f) {
    int d = f.deg_x();
    if (d < 2) throw DegreeTooLow();
    IntPoly r = resultant_x(f, derivative_x(f));
    if (((d * (d - 1)) / 2) & 1) r = -r;
    return divexact(r, f.coeff_x(d));
}

BiPoly normalized_derivative(const BiPoly& f) {
    int n = f.deg_x();
    if (n < 2) throw DegreeTooLow();
    if (!f.monic_in_x()) throw NotMonic();
    // n^(n-2) f'(t,x) = g(t, n x): coeff of y^k in g is (k+1) a_{k+1} n^(n-2-k),
    // and the top term (k = n-1) collapses to 1.
    std::vector<IntPoly> c(n);
    c[n - 1] = IntPoly::constant(1);
    for (int k = 0; k < n - 1; ++k) {
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), Int(n).get_mpz_t(), n - 2 - k);
        c[k] = (Int(k + 1) * scale) * f.coeff_x(k + 1);
    }
    return BiPoly{std::move(c)};
}

std::string to_string(const BiPoly& f, const std::string& xvar, const std::string& tvar) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;

    auto is_monomial = [](const IntPoly& c, int& k) {
        int nz = 0;
        for (int j = 0; j <= c.degree(); ++j)
            if (c[j] != 0) { nz++; k = j; }
        return nz == 1;
    };

    for (int i = f.deg_x(); i >= 0; --i) {
        const IntPoly& c = f.coeff_x(i);
        if (c.is_zero()) continue;
        int k = 0;
        bool mono = is_monomial(c, k);

        std::string xpart;
        if (i == 1) xpart = xvar;
        else if (i > 1) xpart = xvar + "^" + std::to_string(i);

        if (mono) {
            Int a = c[k];
            int sign = sgn(a);
            Int av = abs(a);
            std::string piece;
            if (k > 0) {
                if (av != 1) piece += av.get_str() + "*";
                piece += tvar;
                if (k > 1) piece += "^" + std::to_string(k);
                if (!xpart.empty()) piece += "*" + xpart;
            } else {
                if (xpart.empty()) piece = av.get_str();
                else if (av == 1) piece = xpart;
                else piece = av.get_str() + "*" + xpart;
            }
            if (first) {
                if (sign < 0) os << "-";
                os << piece;
                first = false;
            } else {
                os << (sign < 0 ? " - " : " + ") << piece;
            }
        } else {
            std::string cs = to_string(c, tvar);
            std::string piece = "(" + cs + ")";
            if (!xpart.empty()) piece += "*" + xpart;
            if (!first) os << " + ";
            os << piece;
            first = false;
        }
    }
    return os.str();
}

}  // namespace ilab
