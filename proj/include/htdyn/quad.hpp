#ifndef HTDYN_QUAD_HPP
#define HTDYN_QUAD_HPP

#include "htdyn/interval.hpp"
#include "htdyn/intpoly.hpp"

#include <vector>

namespace htdyn {

// Element a + b*sqrt(D) of a quadratic field. D squarefree, != 0, 1.
// Elements with b == 0 are plain rationals and combine with any D.
struct QuadElem {
    Int D = 0; // 0 allowed only when b == 0
    Rat a, b;

    QuadElem() = default;
    QuadElem(Int D_, Rat a_, Rat b_);
    static QuadElem rational(Rat r) { return QuadElem(Int(0), std::move(r), Rat(0)); }

    bool is_rational() const { return b == 0; }
    bool operator==(const QuadElem& o) const;
    bool operator!=(const QuadElem& o) const { return !(*this == o); }
};

// checks field compatibility and returns the common D (0 if both rational)
Int common_field(const QuadElem& x, const QuadElem& y);

QuadElem q_add(const QuadElem& x, const QuadElem& y);
QuadElem q_sub(const QuadElem& x, const QuadElem& y);
QuadElem q_mul(const QuadElem& x, const QuadElem& y);
QuadElem q_div(const QuadElem& x, const QuadElem& y);
QuadElem q_neg(const QuadElem& x);
QuadElem q_inv(const QuadElem& x);
// Galois conjugation sigma(a + b sqrt D) = a - b sqrt D
QuadElem q_conj(const QuadElem& x);
// a^2 - b^2 D (the field norm) and 2a (the trace)
Rat q_norm(const QuadElem& x);
Rat q_trace(const QuadElem& x);
bool q_is_zero(const QuadElem& x);
// exact sign in the principal real embedding (sqrt D > 0); D > 0 or rational
int q_sign(const QuadElem& x);
inline bool q_is_real_field(const QuadElem& x) { return x.D >= 0; }
// interval enclosure in the principal embedding (D >= 0)
Iv q_enclosure(const QuadElem& x, mpfr_prec_t prec);
// complex enclosure (works for D < 0 as well)
CBox q_enclosure_complex(const QuadElem& x, mpfr_prec_t prec);
double q_double(const QuadElem& x);
// primitive integer minimal polynomial (degree 2 if b != 0, else 1)
IntPoly q_min_poly(const QuadElem& x);
std::string to_string(const QuadElem& x);

// Polynomial with coefficients in Q(sqrt D), constant term first.
struct QuadPoly {
    Int D = 0;
    std::vector<QuadElem> c;

    QuadPoly() = default;
    QuadPoly(Int D_, std::vector<QuadElem> coeffs);
    static QuadPoly from_int(const Int& D, const IntPoly& p);
    int degree() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    const QuadElem& lead() const;
    QuadElem coeff(size_t i) const;
    void normalize();
    bool operator==(const QuadPoly& o) const;
};

QuadPoly qp_add(const QuadPoly& a, const QuadPoly& b);
QuadPoly qp_sub(const QuadPoly& a, const QuadPoly& b);
QuadPoly qp_mul(const QuadPoly& a, const QuadPoly& b);
QuadPoly qp_scale(const QuadPoly& a, const QuadElem& k);
QuadPoly qp_neg(const QuadPoly& a);
QuadPoly qp_derivative(const QuadPoly& a);
QuadPoly qp_compose(const QuadPoly& a, const QuadPoly& b);
QuadElem qp_eval(const QuadPoly& a, const QuadElem& x);
// coefficient-wise Galois conjugation
QuadPoly qp_conj(const QuadPoly& a);
// f * sigma(f), which has rational coefficients; cleared to primitive Z[x]
IntPoly qp_norm_poly(const QuadPoly& a);
// true when every coefficient is rational; extracts the cleared IntPoly
bool qp_is_rational(const QuadPoly& a, IntPoly* out = nullptr);
std::pair<QuadPoly, QuadPoly> qp_divmod(const QuadPoly& a, const QuadPoly& b);
QuadPoly qp_gcd(const QuadPoly& a, const QuadPoly& b); // monic
// exact real-root count over the principal embedding (D > 0); squarefree input
int qp_sturm_count_all(const QuadPoly& p);
std::string to_string(const QuadPoly& p);

} // namespace htdyn

#endif
