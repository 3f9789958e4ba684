// Dedekind criterion and the Pohst-Zassenhaus Round-2 loop: p-radical via
// the kernel of the p-power map, ring of multipliers, iterated to
// p-maximality, over explicit integer matrices in Hermite normal form.

#include <cassert>

#include "ilab/inertia.hpp"

namespace ilab {

namespace {

using Matrix = std::vector<std::vector<Int>>;

Int floordiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Row HNF of an m x n integer matrix of full column rank: returns the n x n
// upper-triangular basis of the row span, positive diagonal, entries above
// each pivot reduced into [0, pivot).
Matrix hnf_rows(Matrix M, int n) {
    int m = static_cast<int>(M.size());
    int r = 0;
    for (int col = 0; col < n && r < m; ++col) {
        while (true) {
            int best = -1;
            for (int i = r; i < m; ++i) {
                if (M[i][col] == 0) continue;
                if (best < 0 || abs(M[i][col]) < abs(M[best][col])) best = i;
            }
            assert(best >= 0 && "rank deficiency in HNF");
            std::swap(M[r], M[best]);
            if (M[r][col] < 0)
                for (auto& v : M[r]) v = -v;
            bool clean = true;
            for (int i = r + 1; i < m; ++i) {
                if (M[i][col] == 0) continue;
                Int q = floordiv(M[i][col], M[r][col]);
                if (q != 0)
                    for (int j = 0; j < n; ++j) M[i][j] -= q * M[r][j];
                if (M[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        for (int i = 0; i < r; ++i) {
            Int q = floordiv(M[i][col], M[r][col]);
            if (q != 0)
                for (int j = 0; j < n; ++j) M[i][j] -= q * M[r][j];
        }
        ++r;
    }
    M.resize(n);
    return M;
}

// Solve y * W = u for upper-triangular W with nonzero diagonal; division is
// exact by construction (module membership).
std::vector<Int> solve_upper(const Matrix& W, const std::vector<Int>& u) {
    int n = static_cast<int>(W.size());
    std::vector<Int> y(n);
    for (int j = 0; j < n; ++j) {
        Int acc = u[j];
        for (int i = 0; i < j; ++i) acc -= y[i] * W[i][j];
        assert(mpz_divisible_p(acc.get_mpz_t(), W[j][j].get_mpz_t()));
        mpz_divexact(y[j].get_mpz_t(), acc.get_mpz_t(), W[j][j].get_mpz_t());
    }
    return y;
}

// Left null space over F_p: basis of { y : y * M = 0 (mod p) }.
std::vector<std::vector<Int>> left_nullspace_mod(const Matrix& M, const Int& p) {
    int rows = static_cast<int>(M.size());
    int cols = rows ? static_cast<int>(M[0].size()) : 0;
    // augment [M | I] and row-reduce the left block
    Matrix A(rows, std::vector<Int>(cols + rows, 0));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            A[i][j] = M[i][j] % p;
            if (A[i][j] < 0) A[i][j] += p;
        }
        A[i][cols + i] = 1;
    }
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (A[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(A[r], A[piv]);
        Int inv;
        mpz_invert(inv.get_mpz_t(), A[r][col].get_mpz_t(), p.get_mpz_t());
        for (auto& v : A[r]) v = v * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || A[i][col] == 0) continue;
            Int f = A[i][col];
            for (int j = 0; j < cols + rows; ++j) {
                A[i][j] = (A[i][j] - f * A[r][j]) % p;
                if (A[i][j] < 0) A[i][j] += p;
            }
        }
        ++r;
    }
    std::vector<std::vector<Int>> out;
    for (int i = r; i < rows; ++i)
        out.emplace_back(A[i].begin() + cols, A[i].end());
    return out;
}

// Multiplication context for Z[theta] with theta a root of monic f.
struct PowerBasis {
    int n;
    Matrix pows;  // theta^k in power-basis coordinates, k = 0..2n-2

    explicit PowerBasis(const IntPoly& f) : n(f.degree()) {
        pows.assign(2 * n - 1, std::vector<Int>(n, 0));
        for (int k = 0; k < n; ++k) pows[k][k] = 1;
        for (int k = n; k <= 2 * n - 2; ++k) {
            // theta^k = theta * theta^(k-1), then reduce theta^n.
            std::vector<Int> shifted(n + 1, 0);
            for (int j = 0; j < n; ++j) shifted[j + 1] = pows[k - 1][j];
            for (int j = 0; j < n; ++j)
                pows[k][j] = shifted[j] - shifted[n] * f[j];
        }
    }

    // product of two power-coordinate vectors, reduced mod f
    std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b) const {
        std::vector<Int> conv(2 * n - 1, 0);
        for (int i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < n; ++j) conv[i + j] += a[i] * b[j];
        }
        std::vector<Int> out(n, 0);
        for (int k = 0; k < 2 * n - 1; ++k) {
            if (conv[k] == 0) continue;
            for (int j = 0; j < n; ++j) out[j] += conv[k] * pows[k][j];
        }
        return out;
    }
};

// Multiplication of two basis-coordinate vectors modulo p, via the
// basis-product table T (T[i][j] = coords of b_i b_j).
std::vector<Int> mul_coords_mod(const std::vector<Int>& y, const std::vector<Int>& z,
                                const std::vector<std::vector<std::vector<Int>>>& T,
                                const Int& p) {
    int n = static_cast<int>(y.size());
    std::vector<Int> out(n, 0);
    for (int i = 0; i < n; ++i) {
        if (y[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (z[j] == 0) continue;
            Int c = y[i] * z[j] % p;
            if (c == 0) continue;
            for (int k = 0; k < n; ++k) out[k] = (out[k] + c * T[i][j][k]) % p;
        }
    }
    for (auto& v : out)
        if (v < 0) v += p;
    return out;
}

}  // namespace

LocalMaximality dedekind_test(const IntPoly& f, const Int& p) {
    assert(f.lc() == 1);
    LocalMaximality out;
    out.p = p;
    out.method = LocalMaximality::Method::Dedekind;
    Int disc = discriminant(f);
    assert(disc != 0);
    unsigned vdisc = valuation(disc, p);
    if (vdisc == 0) {
        out.dedekind_pass = true;
        out.field_disc_valuation = 0;
        return out;
    }
    ModPoly fbar = ModPoly::reduce(f, p);
    auto fac = factor_mod(fbar);
    ModPoly gbar = ModPoly::constant(p, 1);
    ModPoly hbar = ModPoly::constant(p, 1);
    for (auto& [q, m] : fac) {
        gbar = gbar * q;
        for (int i = 1; i < m; ++i) hbar = hbar * q;
    }
    // integer lifts with coefficients in [0, p)
    auto lift = [&](const ModPoly& a) {
        std::vector<Int> c(a.coeffs());
        return IntPoly(std::move(c));
    };
    IntPoly g = lift(gbar), h = lift(hbar);
    IntPoly T = g * h - f;
    // g h = f mod p, so the division is exact
    IntPoly Tp = divexact(T, p);
    ModPoly Tbar = ModPoly::reduce(Tp, p);
    ModPoly d = gcd_mod(gcd_mod(Tbar, gbar), hbar);
    out.dedekind_pass = d.degree() == 0;
    out.field_disc_valuation = out.dedekind_pass ? vdisc : 0;
    return out;
}

LocalMaximality local_field_disc_valuation(const IntPoly& f, const Int& p,
                                           const IrreducibilityEvidence& ev) {
    if (!ev.certified()) throw IrreducibilityUnknown();
    assert(f.lc() == 1);
    LocalMaximality out;
    out.p = p;
    out.method = LocalMaximality::Method::Round2;
    const int n = f.degree();
    Int disc = discriminant(f);
    assert(disc != 0);
    const unsigned vdisc = valuation(disc, p);
    if (vdisc <= 1) {
        // index^2 divides disc, so the equation order is already p-maximal
        out.field_disc_valuation = vdisc;
        return out;
    }

    PowerBasis pb(f);
    Matrix W(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) W[i][i] = 1;
    unsigned e = 0;
    unsigned v_index = 0;

    int m = 0;
    {
        Int pm = 1;
        while (pm < n) {
            pm *= p;
            ++m;
        }
    }
    Int pe = 1;

    while (true) {
        // basis product table T[i][j] = coords of b_i b_j in the basis
        std::vector<std::vector<std::vector<Int>>> T(n,
            std::vector<std::vector<Int>>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                auto u = pb.mul(W[i], W[j]);
                for (auto& v : u) {
                    assert(mpz_divisible_p(v.get_mpz_t(), pe.get_mpz_t()));
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), pe.get_mpz_t());
                }
                T[i][j] = solve_upper(W, u);
                if (j != i) T[j][i] = T[i][j];
            }
        }

        // Frobenius matrix: row i = coords of b_i^(p^m) mod p
        Matrix F(n, std::vector<Int>(n, 0));
        Int exponent;
        mpz_pow_ui(exponent.get_mpz_t(), p.get_mpz_t(), m);
        for (int i = 0; i < n; ++i) {
            std::vector<Int> acc(n, 0), base(n, 0);
            // identity element: coords of 1 in the basis
            {
                std::vector<Int> one(n, 0);
                one[0] = pe;  // 1 in power coords is e_0; in basis coords solve
                acc = solve_upper(W, one);
                for (auto& v : acc) {
                    v %= p;
                    if (v < 0) v += p;
                }
            }
            base.assign(n, 0);
            base[i] = 1;
            size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
            for (size_t bit = bits; bit-- > 0;) {
                acc = mul_coords_mod(acc, acc, T, p);
                if (mpz_tstbit(exponent.get_mpz_t(), bit)) acc = mul_coords_mod(acc, base, T, p);
            }
            F[i] = acc;
        }

        // radical of O/pO = kernel of the Frobenius map
        auto kernel = left_nullspace_mod(F, p);

        // J = radical + pO, as an O-coordinate HNF
        Matrix Jrows;
        for (auto& y : kernel) Jrows.push_back(y);
        for (int i = 0; i < n; ++i) {
            std::vector<Int> row(n, 0);
            row[i] = p;
            Jrows.push_back(row);
        }
        Matrix J = hnf_rows(std::move(Jrows), n);

        // multiplier test: y such that y * J_k lies in p*J for all k
        Matrix Psi(n, std::vector<Int>(n * n, 0));
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                // product of b_i with the ideal element J_k (O-coords)
                std::vector<Int> prod(n, 0);
                for (int a = 0; a < n; ++a) {
                    if (J[k][a] == 0) continue;
                    for (int t = 0; t < n; ++t) prod[t] += J[k][a] * T[i][a][t];
                }
                // coordinates in the J basis; exact since J is an ideal
                auto w = solve_upper(J, prod);
                for (int t = 0; t < n; ++t) Psi[i][k * n + t] = w[t] % p;
            }
        }
        auto enlarging = left_nullspace_mod(Psi, p);

        bool grew = false;
        if (!enlarging.empty()) {
            // candidate new order: O + (1/p) * span(enlarging)
            Matrix rows;
            for (auto& y : enlarging) {
                std::vector<Int> power(n, 0);
                for (int i = 0; i < n; ++i) {
                    if (y[i] == 0) continue;
                    for (int j = 0; j < n; ++j) power[j] += y[i] * W[i][j];
                }
                rows.push_back(power);  // denominator p^(e+1)
            }
            for (int i = 0; i < n; ++i) {
                std::vector<Int> row(n);
                for (int j = 0; j < n; ++j) row[j] = p * W[i][j];
                rows.push_back(row);
            }
            Matrix W2 = hnf_rows(std::move(rows), n);
            unsigned e2 = e + 1;
            // strip common p factors to keep the denominator minimal
            while (e2 > 0) {
                bool all = true;
                for (auto& row : W2)
                    for (auto& v : row)
                        if (!mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t())) all = false;
                if (!all) break;
                for (auto& row : W2)
                    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
                --e2;
            }
            unsigned vdet = 0;
            for (int i = 0; i < n; ++i) vdet += valuation(W2[i][i], p);
            unsigned v2 = e2 * n - vdet;
            if (v2 > v_index) {
                W = std::move(W2);
                e = e2;
                mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
                v_index = v2;
                out.index_valuation = v_index;
                grew = true;
            }
        }
        if (!grew) break;
        if (2 * v_index >= vdisc) break;  // index cannot exceed v_disc/2
    }

    out.index_valuation = v_index;
    out.field_disc_valuation = vdisc - 2 * v_index;
    return out;
}

}  // namespace ilab
