#ifndef HTDYN_INTERVAL_HPP
#define HTDYN_INTERVAL_HPP

#include "htdyn/rational.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace htdyn {

// RAII wrapper over mpfr_t. Precision is fixed per object.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static Real of_double(double d, mpfr_prec_t prec = 64);
    static Real of_int(const Int& z, mpfr_prec_t prec, mpfr_rnd_t rnd);
    static Real of_rat(const Rat& q, mpfr_prec_t prec, mpfr_rnd_t rnd);

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_nan() const { return mpfr_nan_p(v_); }
    int sgn() const { return mpfr_sgn(v_); }
    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const Real& o) const { return cmp(o) < 0; }
    bool operator<=(const Real& o) const { return cmp(o) <= 0; }
    bool operator>(const Real& o) const { return cmp(o) > 0; }
    bool operator>=(const Real& o) const { return cmp(o) >= 0; }

    // exact dyadic value (must be finite)
    Rat to_rat() const;

private:
    mpfr_t v_;
};

// Closed interval [lo, hi] with directed rounding; rigorous enclosure type.
struct Iv {
    Real lo, hi;

    Iv() = default;
    Iv(Real l, Real h) : lo(std::move(l)), hi(std::move(h)) {}

    static Iv point(const Real& x) { return Iv(x, x); }
    static Iv of_double(double d, mpfr_prec_t prec = 64);
    static Iv of_int(const Int& z, mpfr_prec_t prec);
    static Iv of_rat(const Rat& q, mpfr_prec_t prec);
    static Iv zero(mpfr_prec_t prec = 64) { return of_double(0.0, prec); }

    mpfr_prec_t prec() const { return std::max(lo.prec(), hi.prec()); }
    bool contains_zero() const { return lo.sgn() <= 0 && hi.sgn() >= 0; }
    bool strictly_positive() const { return lo.sgn() > 0; }
    bool strictly_negative() const { return hi.sgn() < 0; }
    double mid_double() const { return 0.5 * (lo.to_double() + hi.to_double()); }
    double wid_double() const;
    bool valid() const { return !lo.is_nan() && !hi.is_nan() && lo.cmp(hi) <= 0; }
};

Iv iv_add(const Iv& a, const Iv& b, mpfr_prec_t prec);
Iv iv_sub(const Iv& a, const Iv& b, mpfr_prec_t prec);
Iv iv_neg(const Iv& a);
Iv iv_mul(const Iv& a, const Iv& b, mpfr_prec_t prec);
Iv iv_sqr(const Iv& a, mpfr_prec_t prec);
// throws invalid_argument_error if b contains zero
Iv iv_div(const Iv& a, const Iv& b, mpfr_prec_t prec);
// requires a.lo >= 0 (clamps tiny negative noise is NOT done; caller ensures)
Iv iv_sqrt(const Iv& a, mpfr_prec_t prec);
// requires a.lo > 0
Iv iv_log(const Iv& a, mpfr_prec_t prec);
Iv iv_abs(const Iv& a);
// pointwise max(1, x)
Iv iv_max1(const Iv& a, mpfr_prec_t prec);
// hull of union
Iv iv_hull(const Iv& a, const Iv& b);
bool iv_disjoint(const Iv& a, const Iv& b);

// Complex rectangle (interval real and imaginary parts).
struct CBox {
    Iv re, im;

    CBox() = default;
    CBox(Iv r, Iv i) : re(std::move(r)), im(std::move(i)) {}
    static CBox of_rat(const Rat& r, const Rat& i, mpfr_prec_t prec) {
        return CBox(Iv::of_rat(r, prec), Iv::of_rat(i, prec));
    }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

CBox cb_add(const CBox& a, const CBox& b, mpfr_prec_t prec);
CBox cb_sub(const CBox& a, const CBox& b, mpfr_prec_t prec);
CBox cb_neg(const CBox& a);
CBox cb_mul(const CBox& a, const CBox& b, mpfr_prec_t prec);
// throws if divisor box contains zero
CBox cb_div(const CBox& a, const CBox& b, mpfr_prec_t prec);
Iv cb_norm2(const CBox& a, mpfr_prec_t prec);
Iv cb_abs(const CBox& a, mpfr_prec_t prec);

// Interval Horner evaluation of an integer polynomial.
class IntPoly;
CBox cb_eval_poly(const IntPoly& p, const CBox& z, mpfr_prec_t prec);
Iv iv_eval_poly(const IntPoly& p, const Iv& x, mpfr_prec_t prec);

// log of |z| for an integer, as a tight interval (z != 0)
Iv iv_log_abs_int(const Int& z, mpfr_prec_t prec);

std::string to_string(const Real& x, int digits = 17);

} // namespace htdyn

#endif
