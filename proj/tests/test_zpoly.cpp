#include <doctest.h>

#include <random>

#include "ilab/poly.hpp"

using namespace ilab;

namespace {

// f(t,x) = x^3 + t x + (t - 1)
BiPoly s3_poly() {
    return BiPoly({IntPoly{-1, 1}, IntPoly{0, 1}, IntPoly{}, IntPoly{1}});
}

// f(0,v,x) = x^5 - 10x^3 + v x^2 + (25 - 3v) x + 9v - 24, parameter v plays t.
BiPoly a5_poly() {
    return BiPoly({IntPoly{-24, 9}, IntPoly{25, -3}, IntPoly{0, 1}, IntPoly{-10},
                   IntPoly{}, IntPoly{1}});
}

// Independent resultant oracle: Bareiss fraction-free elimination on the
// Sylvester matrix.
Int sylvester_resultant(const IntPoly& A, const IntPoly& B) {
    int m = A.degree(), n = B.degree();
    REQUIRE(m >= 0);
    REQUIRE(n >= 0);
    int N = m + n;
    if (N == 0) return Int(1);
    std::vector<std::vector<Int>> M(N, std::vector<Int>(N, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = A[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = B[n - j];
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < N; ++r)
                if (M[r][k] != 0) { piv = r; break; }
            if (piv < 0) return Int(0);
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i)
            for (int j = k + 1; j < N; ++j) {
                Int t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = M[k][k];
    }
    return sign < 0 ? Int(-M[N - 1][N - 1]) : M[N - 1][N - 1];
}

// --- Exact Descartes/bisection real-root counter (VCA), test-only oracle ---

int descartes_var(const IntPoly& p) {
    int changes = 0, prevs = 0;
    for (int i = 0; i <= p.degree(); ++i) {
        int s = sgn(p[i]);
        if (s == 0) continue;
        if (prevs != 0 && s != prevs) ++changes;
        prevs = s;
    }
    return changes;
}

IntPoly translate1(const IntPoly& p) {  // p(x+1)
    std::vector<Int> c(p.coeffs());
    int n = p.degree();
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) c[j] += c[j + 1];
    return IntPoly(std::move(c));
}

IntPoly reverse_poly(const IntPoly& p, int n) {  // x^n p(1/x)
    std::vector<Int> c(n + 1, Int(0));
    for (int i = 0; i <= p.degree(); ++i) c[n - i] = p[i];
    return IntPoly(std::move(c));
}

IntPoly scale_half(const IntPoly& p) {  // 2^n p(x/2)
    int n = p.degree();
    std::vector<Int> c(p.coeffs());
    for (int i = 0; i <= n; ++i) c[i] <<= (n - i);
    return IntPoly(std::move(c));
}

int count_roots_01(const IntPoly& p, int depth = 0) {  // open interval (0,1)
    REQUIRE(depth < 64);
    int v = descartes_var(translate1(reverse_poly(p, p.degree())));
    if (v == 0) return 0;
    if (v == 1) return 1;
    IntPoly pl = scale_half(p);
    IntPoly pr = translate1(pl);
    int mid = pl.eval(1) == 0 ? 1 : 0;
    return count_roots_01(pl, depth + 1) + mid + count_roots_01(pr, depth + 1);
}

int vca_real_roots(const IntPoly& p) {
    // Scale so all real roots land in (-1,1), then count both sides and 0.
    Int bound = 1;
    for (int i = 0; i <= p.degree(); ++i) bound = std::max(bound, abs(p[i]));
    Int rho = 2 * bound + 2;  // crude but safe Cauchy-style bound for |lc|>=1
    IntPoly q;                // p(rho x), integer again
    {
        std::vector<Int> c(p.coeffs());
        Int f = 1;
        for (int i = 0; i <= p.degree(); ++i) {
            c[i] *= f;
            f *= rho;
        }
        q = IntPoly(std::move(c));
    }
    IntPoly qn;  // q(-x)
    {
        std::vector<Int> c(q.coeffs());
        for (int i = 1; i <= q.degree(); i += 2) c[i] = -c[i];
        qn = IntPoly(std::move(c));
    }
    int at0 = q.eval(0) == 0 ? 1 : 0;
    return at0 + count_roots_01(q) + count_roots_01(qn);
}

std::mt19937_64 rng(0x5eed);

IntPoly random_poly(int deg, long coeff_range) {
    std::vector<Int> c;
    for (int i = 0; i <= deg; ++i)
        c.emplace_back((long)(rng() % (2 * coeff_range + 1)) - coeff_range);
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

BiPoly random_monic_bipoly(int n, int tdeg, long range) {
    std::vector<IntPoly> xc;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> c;
        for (int j = 0; j <= tdeg; ++j)
            c.emplace_back((long)(rng() % (2 * range + 1)) - range);
        xc.emplace_back(std::move(c));
    }
    xc.push_back(IntPoly{1});
    return BiPoly(std::move(xc));
}

}  // namespace

TEST_CASE("ring ops and derivative") {
    BiPoly f = s3_poly();
    BiPoly fx = derivative_x(f);
    CHECK(fx == BiPoly({IntPoly{0, 1}, IntPoly{}, IntPoly{3}}));  // 3x^2 + t
    CHECK(derivative_t(f) == BiPoly({IntPoly{1}, IntPoly{1}}));   // x + 1
    CHECK(derivative(IntPoly{7}).is_zero());
    IntPoly xp1{1, 1};
    CHECK(xp1 * xp1 == IntPoly{1, 2, 1});
    CHECK(pow(xp1, 3) == IntPoly{1, 3, 3, 1});
    CHECK(pow(BiPoly::from_univariate_in_t(IntPoly{0, 1}), 2) ==
          BiPoly::from_univariate_in_t(IntPoly{0, 0, 1}));
}

TEST_CASE("content and primitive part") {
    CHECK(content(IntPoly{18, -12, 6}) == 6);
    CHECK(content(IntPoly()) == 0);
    // -4t^3 - 27(t-1)^2 = -4t^3 - 27t^2 + 54t - 27
    IntPoly D{-27, 54, -27, -4};
    CHECK(content(D) == 1);
    CHECK(primitive_part(IntPoly{-4, -8}) == IntPoly{1, 2});
}

TEST_CASE("gcd_z") {
    IntPoly D{-27, 54, -27, -4};
    IntPoly F2{0, -72};
    CHECK(gcd_z(D, F2) == IntPoly{1});
    CHECK(gcd_z(IntPoly{0, 2}, IntPoly{0, 0, 4}) == IntPoly{0, 2});
    CHECK(gcd_z(IntPoly{6}, IntPoly{15}) == IntPoly{3});
    CHECK(gcd_z(IntPoly(), IntPoly{0, -3}) == IntPoly{0, 3});
}

TEST_CASE("gcd_z divides both and quotients are coprime") {
    for (int it = 0; it < 50; ++it) {
        IntPoly g = random_poly(2, 5);
        IntPoly a = g * random_poly(3, 5);
        IntPoly b = g * random_poly(3, 5);
        if (a.is_zero() || b.is_zero()) continue;
        IntPoly h = gcd_z(a, b);
        CHECK(divides(h, a));
        CHECK(divides(h, b));
        IntPoly qa = primitive_part(divexact(a, h));
        IntPoly qb = primitive_part(divexact(b, h));
        CHECK(gcd_z(qa, qb).degree() == 0);
    }
}

TEST_CASE("resultant basics") {
    CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{3, 1}) == 10);
    // Res_x(x - a, x - b) = a - b for integers a, b.
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            CHECK(resultant(IntPoly{-a, 1}, IntPoly{-b, 1}) == a - b);
}

TEST_CASE("resultant vs Sylvester-Bareiss oracle") {
    for (int it = 0; it < 120; ++it) {
        IntPoly a = random_poly(2 + (int)(rng() % 5), 20);
        IntPoly b = random_poly(1 + (int)(rng() % 5), 20);
        CHECK(resultant(a, b) == sylvester_resultant(a, b));
    }
    // and with a forced common factor the resultant vanishes
    for (int it = 0; it < 30; ++it) {
        IntPoly g = random_poly(1 + (int)(rng() % 2), 6);
        IntPoly a = g * random_poly(2, 6);
        IntPoly b = g * random_poly(3, 6);
        CHECK(resultant(a, b) == 0);
        CHECK(gcd_z(a, b).degree() > 0);
    }
}

TEST_CASE("bivariate resultant commutes with specialization") {
    // For monic-in-x inputs the leading coefficient never drops, so
    // Res_x(f,g)(c) = Res(f(c,x), g(c,x)) exactly.
    for (int it = 0; it < 40; ++it) {
        BiPoly f = random_monic_bipoly(2 + (int)(rng() % 3), 2, 7);
        BiPoly g = random_monic_bipoly(1 + (int)(rng() % 3), 2, 7);
        IntPoly r = resultant_x(f, g);
        for (long c = -3; c <= 3; ++c)
            CHECK(r.eval(c) == resultant(f.specialize(c), g.specialize(c)));
    }
}

TEST_CASE("gcd_z with shared content and factor") {
    IntPoly t1{1, 1};
    CHECK(gcd_z(Int(6) * (t1 * t1), Int(4) * (t1 * IntPoly{0, 1})) == Int(2) * t1);
}

TEST_CASE("resultant zero iff gcd nonconstant") {
    for (int it = 0; it < 80; ++it) {
        IntPoly a = random_poly(3, 8);
        IntPoly b = random_poly(2, 8);
        bool rz = resultant(a, b) == 0;
        bool gn = gcd_z(a, b).degree() > 0;
        CHECK(rz == gn);
    }
}

TEST_CASE("discriminants") {
    // disc_x(x^3 + t x + (t-1)) = -4t^3 - 27(t-1)^2
    IntPoly expected{-27, 54, -27, -4};
    CHECK(discriminant_x(s3_poly()) == expected);

    for (long b = -4; b <= 4; ++b)
        for (long c = -4; c <= 4; ++c)
            CHECK(discriminant(IntPoly{c, b, 1}) == b * b - 4 * c);

    CHECK_THROWS_AS(discriminant(IntPoly{1, 1}), DegreeTooLow);
}

TEST_CASE("normalized derivative") {
    // S3: fbar'(t,y) = y^2 + 3t
    BiPoly nd = normalized_derivative(s3_poly());
    CHECK(nd == BiPoly({IntPoly{0, 3}, IntPoly{}, IntPoly{1}}));

    // A5 at u=0: y^4 - 150 y^2 + 50 v y + 3125 - 375 v
    BiPoly nd5 = normalized_derivative(a5_poly());
    CHECK(nd5 == BiPoly({IntPoly{3125, -375}, IntPoly{0, 50}, IntPoly{-150},
                         IntPoly{}, IntPoly{1}}));

    // n = 2: fbar'(t,y) = y + b
    BiPoly quad({IntPoly{5}, IntPoly{3}, IntPoly{1}});  // x^2 + 3x + 5
    CHECK(normalized_derivative(quad) == BiPoly({IntPoly{3}, IntPoly{1}}));

    BiPoly notmonic({IntPoly{1}, IntPoly{}, IntPoly{2}});
    CHECK_THROWS_AS(normalized_derivative(notmonic), NotMonic);

    // substituting y = n x and dividing by n^{n-2} recovers f' exactly:
    for (int it = 0; it < 40; ++it) {
        int n = 3 + (int)(rng() % 4);
        BiPoly f = random_monic_bipoly(n, 2, 9);
        BiPoly g = normalized_derivative(f);
        // g(t, n x) as BiPoly in x
        std::vector<IntPoly> xc;
        Int nn = 1;
        for (int i = 0; i <= g.deg_x(); ++i) {
            xc.push_back(nn * g.coeff_x(i));
            nn *= n;
        }
        BiPoly gnx{std::move(xc)};
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), Int(n).get_mpz_t(), n - 2);
        CHECK(gnx == scale * derivative_x(f));
    }
}

TEST_CASE("discriminant scaling identity for the normalized derivative") {
    // The scaling law D(fbar') = n^{(n-1)(n-2)} D(f') concerns products of
    // root differences; with the lc-normalized discriminant it reads
    //   n^{2n-4} disc(fbar') = n^{(n-1)(n-2)} disc(f')
    // since lc(f') = n and deg f' = n - 1.  Checked over 200 random monic f.
    for (int it = 0; it < 200; ++it) {
        int n = 3 + (int)(rng() % 3);
        BiPoly f = random_monic_bipoly(n, 1 + (int)(rng() % 2), 6);
        BiPoly fp = derivative_x(f);
        BiPoly nd = normalized_derivative(f);
        IntPoly lhs = discriminant_x(nd);
        IntPoly rhs = discriminant_x(fp);
        Int left_scale, right_scale;
        mpz_pow_ui(left_scale.get_mpz_t(), Int(n).get_mpz_t(), 2 * n - 4);
        mpz_pow_ui(right_scale.get_mpz_t(), Int(n).get_mpz_t(), (n - 1) * (n - 2));
        CHECK(left_scale * lhs == right_scale * rhs);
    }
    // S3 pins both sides concretely: disc(y^2+3t) = -12t = disc(3x^2+t).
    BiPoly f = s3_poly();
    CHECK(discriminant_x(normalized_derivative(f)) == IntPoly{0, -12});
    CHECK(discriminant_x(derivative_x(f)) == IntPoly{0, -12});
}

TEST_CASE("specialization") {
    CHECK(s3_poly().specialize(2) == IntPoly{1, 2, 0, 1});   // x^3 + 2x + 1
    CHECK(a5_poly().specialize(0) == IntPoly{-24, 25, 0, -10, 0, 1});
    BiPoly constant_in_t = BiPoly::from_univariate_in_x(IntPoly{1, 2, 3});
    CHECK(constant_in_t.specialize(77) == IntPoly{1, 2, 3});
}

TEST_CASE("specialization commutes with the discriminant") {
    for (int it = 0; it < 60; ++it) {
        int n = 2 + (int)(rng() % 4);
        BiPoly f = random_monic_bipoly(n, 2, 8);
        Int c = (long)(rng() % 21) - 10;
        IntPoly fc = f.specialize(c);
        REQUIRE(fc.degree() == n);
        CHECK(discriminant_x(f).eval(c) == discriminant(fc));
    }
}

TEST_CASE("polynomial square roots") {
    for (int it = 0; it < 40; ++it) {
        IntPoly g = random_poly(1 + (int)(rng() % 4), 30);
        auto r = polynomial_square_root(g * g);
        REQUIRE(r.has_value());
        CHECK((*r == g || *r == -g));
        CHECK(r->lc() > 0);
    }
    CHECK_FALSE(polynomial_square_root(IntPoly{0, 1}).has_value());
    CHECK_FALSE(polynomial_square_root(IntPoly{1, 2, 2}).has_value());
    CHECK_FALSE(polynomial_square_root(IntPoly{2, 0, 0, 0, 1} * IntPoly{2, 0, 0, 0, 1} +
                                       IntPoly{1})
                    .has_value());
    CHECK(polynomial_square_root(IntPoly()).has_value());
}

TEST_CASE("constant times square detection") {
    IntPoly D{-27, 54, -27, -4};
    CHECK_FALSE(is_constant_times_square(D));
    // 9(t+1)^2
    IntPoly sq = Int(9) * (IntPoly{1, 1} * IntPoly{1, 1});
    CHECK(is_constant_times_square(sq));
    CHECK_FALSE(is_constant_times_square(IntPoly{1, 0, 1}));
    // 2 t^2 (non-square constant times square)
    CHECK(is_constant_times_square(IntPoly{0, 0, 2}));
    // (t+2)*(t^2+1)^2: odd-multiplicity part nonconstant
    IntPoly q = IntPoly{1, 0, 1};
    CHECK_FALSE(is_constant_times_square(IntPoly{2, 1} * q * q));
    CHECK(is_constant_times_square(IntPoly{1, 2, 1} * q * q));  // ((t+1)(t^2+1))^2
}

TEST_CASE("discriminant in t of the S3 discriminant") {
    IntPoly D{-27, 54, -27, -4};
    CHECK(discriminant(D) == -629856);
    CHECK(discriminant(IntPoly{-1, 0, 1}) == 4);
}

TEST_CASE("sturm: fixed cases") {
    CHECK(sturm_real_roots(IntPoly{0, -1, 0, 1}).real_root_count == 3);  // x^3 - x
    CHECK(sturm_real_roots(IntPoly{1, 0, 1}).real_root_count == 0);      // x^2 + 1
    CHECK_THROWS_AS(sturm_real_roots(IntPoly{1, 2, 1}), NotSquarefree);
}

TEST_CASE("sturm agrees with Descartes-bisection oracle") {
    int done = 0;
    while (done < 100) {
        IntPoly p = random_poly(2 + (int)(rng() % 6), 12);
        if (p.degree() < 1) continue;
        if (gcd_z(p, derivative(p)).degree() > 0) continue;
        CHECK(sturm_real_roots(p).real_root_count == vca_real_roots(p));
        ++done;
    }
}

TEST_CASE("bipoly printing") {
    CHECK(to_string(s3_poly()) == "x^3 + t*x + (t - 1)");
    CHECK(to_string(IntPoly{-27, 54, -27, -4}) == "-4*t^3 - 27*t^2 + 54*t - 27");
    CHECK(to_string(IntPoly()) == "0");
}
