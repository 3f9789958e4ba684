#ifndef ILAB_POLY_HPP
#define ILAB_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "ilab/intarith.hpp"

namespace ilab {

struct DegreeTooLow : std::invalid_argument {
    DegreeTooLow() : std::invalid_argument("degree must be at least 2") {}
};
struct NotMonic : std::invalid_argument {
    NotMonic() : std::invalid_argument("polynomial must be monic in x") {}
};
struct NotSquarefree : std::invalid_argument {
    NotSquarefree() : std::invalid_argument("polynomial must be squarefree") {}
};

/// Dense univariate polynomial over Z, ascending degree, trailing zeros
/// stripped.  The zero polynomial has an empty coefficient list.
class IntPoly {
    std::vector<Int> c_;

  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);
    static IntPoly constant(const Int& v);
    static IntPoly monomial(const Int& coeff, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Int& lc() const;
    const Int& operator[](int i) const;  // 0 beyond degree
    const std::vector<Int>& coeffs() const { return c_; }
    void normalize();

    Int eval(const Int& x) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const Int& k, const IntPoly& a);
IntPoly pow(const IntPoly& a, unsigned e);
IntPoly derivative(const IntPoly& a);

/// GCD of coefficients, nonnegative; content(0) = 0.
Int content(const IntPoly& a);
/// a / content(a) with the sign of the leading coefficient preserved.
IntPoly primitive_part(const IntPoly& a);

/// Exact division: a = q*b must hold over Z; asserts otherwise.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
IntPoly divexact(const IntPoly& a, const Int& k);
bool divides(const IntPoly& b, const IntPoly& a);  // b | a in Z[t]

/// GCD in the UFD Z[t] (content included), positive leading coefficient,
/// computed by the subresultant PRS.
IntPoly gcd_z(const IntPoly& a, const IntPoly& b);

/// Resultant over Z via the subresultant algorithm.
Int resultant(const IntPoly& a, const IntPoly& b);

/// disc = (-1)^{d(d-1)/2} Res(p, p') / lc(p); requires deg >= 2.
Int discriminant(const IntPoly& p);

/// Squarefree decomposition of a nonzero polynomial (Yun): returns
/// a_1..a_k with primitive_part(p) = +- prod a_i^i, a_i primitive.
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

/// True iff p = c * q^2 for some rational c and q in Q[t].
bool is_constant_times_square(const IntPoly& p);

/// Exact square root in Z[t] (positive leading coefficient), when one exists.
std::optional<IntPoly> polynomial_square_root(const IntPoly& p);

struct SturmReport {
    IntPoly poly;
    int real_root_count = 0;
    std::vector<int> sequence_lengths;  // degrees along the Sturm chain
};

/// Exact count of distinct real roots; requires p squarefree.
SturmReport sturm_real_roots(const IntPoly& p);

std::string to_string(const IntPoly& p, const std::string& var = "t");

/// Polynomial in x whose coefficients are polynomials in t (dense in x).
class BiPoly {
    std::vector<IntPoly> xc_;

  public:
    BiPoly() = default;
    explicit BiPoly(std::vector<IntPoly> x_coeffs);
    static BiPoly from_univariate_in_x(const IntPoly& p);
    static BiPoly from_univariate_in_t(const IntPoly& p);

    int deg_x() const { return static_cast<int>(xc_.size()) - 1; }
    int deg_t() const;
    bool is_zero() const { return xc_.empty(); }
    const IntPoly& coeff_x(int i) const;  // zero polynomial beyond degree
    const std::vector<IntPoly>& x_coeffs() const { return xc_; }
    bool monic_in_x() const;
    void normalize();

    IntPoly specialize(const Int& c) const;  // t -> c, result in Z[x]
    bool operator==(const BiPoly& o) const { return xc_ == o.xc_; }
};

BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a);
BiPoly operator*(const Int& k, const BiPoly& a);
BiPoly pow(const BiPoly& a, unsigned e);
BiPoly derivative_x(const BiPoly& f);
BiPoly derivative_t(const BiPoly& f);

/// Resultant with respect to x; result lives in Z[t].
IntPoly resultant_x(const BiPoly& a, const BiPoly& b);

/// Discriminant with respect to x; deg_x >= 2.
IntPoly discriminant_x(const BiPoly& f);

/// The monic normalization of the derivative: the unique monic-in-y
/// polynomial with n^{n-2} f'(t,x) = fbar'(t, n x), n = deg_x f.
/// Requires f monic in x of degree >= 2.
BiPoly normalized_derivative(const BiPoly& f);

std::string to_string(const BiPoly& f, const std::string& xvar = "x",
                      const std::string& tvar = "t");

}  // namespace ilab

#endif
