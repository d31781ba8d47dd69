#include "htdyn/interval.hpp"

#include "htdyn/intpoly.hpp"

#include <cstdio>

namespace htdyn {

Real Real::of_double(double d, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
}

Real Real::of_int(const Int& z, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), rnd);
    return r;
}

Real Real::of_rat(const Rat& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
    return r;
}

Rat Real::to_rat() const {
    if (mpfr_zero_p(v_)) return Rat(0);
    if (!mpfr_number_p(v_)) throw invalid_argument_error("to_rat of non-finite value");
    Int mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v_);
    Rat r(mant);
    if (e > 0) {
        Int p(1);
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
        r *= Rat(p);
    } else if (e < 0) {
        Int p(1);
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), -e);
        r /= Rat(p);
    }
    return r;
}

Iv Iv::of_double(double d, mpfr_prec_t prec) {
    Real x(prec);
    mpfr_set_d(x.get(), d, MPFR_RNDN); // doubles are exact at prec >= 53
    return Iv(x, x);
}

Iv Iv::of_int(const Int& z, mpfr_prec_t prec) {
    return Iv(Real::of_int(z, prec, MPFR_RNDD), Real::of_int(z, prec, MPFR_RNDU));
}

Iv Iv::of_rat(const Rat& q, mpfr_prec_t prec) {
    return Iv(Real::of_rat(q, prec, MPFR_RNDD), Real::of_rat(q, prec, MPFR_RNDU));
}

double Iv::wid_double() const {
    Real w(64);
    mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
    return w.to_double();
}

Iv iv_add(const Iv& a, const Iv& b, mpfr_prec_t prec) {
    Iv r{Real(prec), Real(prec)};
    mpfr_add(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
    mpfr_add(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
    return r;
}

Iv iv_sub(const Iv& a, const Iv& b, mpfr_prec_t prec) {
    Iv r{Real(prec), Real(prec)};
    mpfr_sub(r.lo.get(), a.lo.get(), b.hi.get(), MPFR_RNDD);
    mpfr_sub(r.hi.get(), a.hi.get(), b.lo.get(), MPFR_RNDU);
    return r;
}

Iv iv_neg(const Iv& a) {
    Iv r{Real(a.lo.prec()), Real(a.hi.prec())};
    mpfr_neg(r.lo.get(), a.hi.get(), MPFR_RNDD);
    mpfr_neg(r.hi.get(), a.lo.get(), MPFR_RNDU);
    return r;
}

Iv iv_mul(const Iv& a, const Iv& b, mpfr_prec_t prec) {
    Real cand(prec), best_lo(prec), best_hi(prec);
    bool first = true;
    const mpfr_srcptr as[2] = {a.lo.get(), a.hi.get()};
    const mpfr_srcptr bs[2] = {b.lo.get(), b.hi.get()};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(cand.get(), as[i], bs[j], MPFR_RNDD);
            if (first || mpfr_cmp(cand.get(), best_lo.get()) < 0) mpfr_set(best_lo.get(), cand.get(), MPFR_RNDD);
            mpfr_mul(cand.get(), as[i], bs[j], MPFR_RNDU);
            if (first || mpfr_cmp(cand.get(), best_hi.get()) > 0) mpfr_set(best_hi.get(), cand.get(), MPFR_RNDU);
            first = false;
        }
    return Iv(best_lo, best_hi);
}

Iv iv_sqr(const Iv& a, mpfr_prec_t prec) {
    Iv r{Real(prec), Real(prec)};
    if (a.contains_zero()) {
        mpfr_set_zero(r.lo.get(), 1);
        Real c1(prec), c2(prec);
        mpfr_sqr(c1.get(), a.lo.get(), MPFR_RNDU);
        mpfr_sqr(c2.get(), a.hi.get(), MPFR_RNDU);
        mpfr_max(r.hi.get(), c1.get(), c2.get(), MPFR_RNDU);
        return r;
    }
    Real m1(prec), m2(prec);
    mpfr_abs(m1.get(), a.lo.get(), MPFR_RNDD);
    mpfr_abs(m2.get(), a.hi.get(), MPFR_RNDD);
    if (mpfr_cmp(m1.get(), m2.get()) > 0) mpfr_swap(m1.get(), m2.get());
    mpfr_sqr(r.lo.get(), m1.get(), MPFR_RNDD);
    mpfr_abs(m1.get(), a.lo.get(), MPFR_RNDU);
    mpfr_abs(m2.get(), a.hi.get(), MPFR_RNDU);
    if (mpfr_cmp(m1.get(), m2.get()) < 0) mpfr_swap(m1.get(), m2.get());
    mpfr_sqr(r.hi.get(), m1.get(), MPFR_RNDU);
    return r;
}

Iv iv_div(const Iv& a, const Iv& b, mpfr_prec_t prec) {
    if (b.contains_zero()) throw invalid_argument_error("interval division by zero-containing interval");
    Real cand(prec), best_lo(prec), best_hi(prec);
    bool first = true;
    const mpfr_srcptr as[2] = {a.lo.get(), a.hi.get()};
    const mpfr_srcptr bs[2] = {b.lo.get(), b.hi.get()};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_div(cand.get(), as[i], bs[j], MPFR_RNDD);
            if (first || mpfr_cmp(cand.get(), best_lo.get()) < 0) mpfr_set(best_lo.get(), cand.get(), MPFR_RNDD);
            mpfr_div(cand.get(), as[i], bs[j], MPFR_RNDU);
            if (first || mpfr_cmp(cand.get(), best_hi.get()) > 0) mpfr_set(best_hi.get(), cand.get(), MPFR_RNDU);
            first = false;
        }
    return Iv(best_lo, best_hi);
}

Iv iv_sqrt(const Iv& a, mpfr_prec_t prec) {
    if (a.lo.sgn() < 0) throw invalid_argument_error("interval sqrt of negative interval");
    Iv r{Real(prec), Real(prec)};
    mpfr_sqrt(r.lo.get(), a.lo.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi.get(), a.hi.get(), MPFR_RNDU);
    return r;
}

Iv iv_log(const Iv& a, mpfr_prec_t prec) {
    if (a.lo.sgn() <= 0) throw invalid_argument_error("interval log needs positive interval");
    Iv r{Real(prec), Real(prec)};
    mpfr_log(r.lo.get(), a.lo.get(), MPFR_RNDD);
    mpfr_log(r.hi.get(), a.hi.get(), MPFR_RNDU);
    return r;
}

Iv iv_abs(const Iv& a) {
    mpfr_prec_t prec = a.prec();
    Iv r{Real(prec), Real(prec)};
    if (a.contains_zero()) {
        mpfr_set_zero(r.lo.get(), 1);
        Real m1(prec), m2(prec);
        mpfr_abs(m1.get(), a.lo.get(), MPFR_RNDU);
        mpfr_abs(m2.get(), a.hi.get(), MPFR_RNDU);
        mpfr_max(r.hi.get(), m1.get(), m2.get(), MPFR_RNDU);
        return r;
    }
    if (a.lo.sgn() > 0) return a;
    return iv_neg(a);
}

Iv iv_max1(const Iv& a, mpfr_prec_t prec) {
    Iv r{Real(prec), Real(prec)};
    Real one(prec);
    mpfr_set_ui(one.get(), 1, MPFR_RNDN);
    mpfr_max(r.lo.get(), a.lo.get(), one.get(), MPFR_RNDD);
    mpfr_max(r.hi.get(), a.hi.get(), one.get(), MPFR_RNDU);
    return r;
}

Iv iv_hull(const Iv& a, const Iv& b) {
    mpfr_prec_t prec = std::max(a.prec(), b.prec());
    Iv r{Real(prec), Real(prec)};
    mpfr_min(r.lo.get(), a.lo.get(), b.lo.get(), MPFR_RNDD);
    mpfr_max(r.hi.get(), a.hi.get(), b.hi.get(), MPFR_RNDU);
    return r;
}

bool iv_disjoint(const Iv& a, const Iv& b) {
    return mpfr_cmp(a.hi.get(), b.lo.get()) < 0 || mpfr_cmp(b.hi.get(), a.lo.get()) < 0;
}

CBox cb_add(const CBox& a, const CBox& b, mpfr_prec_t prec) {
    return CBox(iv_add(a.re, b.re, prec), iv_add(a.im, b.im, prec));
}

CBox cb_sub(const CBox& a, const CBox& b, mpfr_prec_t prec) {
    return CBox(iv_sub(a.re, b.re, prec), iv_sub(a.im, b.im, prec));
}

CBox cb_neg(const CBox& a) { return CBox(iv_neg(a.re), iv_neg(a.im)); }

CBox cb_mul(const CBox& a, const CBox& b, mpfr_prec_t prec) {
    Iv re = iv_sub(iv_mul(a.re, b.re, prec), iv_mul(a.im, b.im, prec), prec);
    Iv im = iv_add(iv_mul(a.re, b.im, prec), iv_mul(a.im, b.re, prec), prec);
    return CBox(std::move(re), std::move(im));
}

CBox cb_div(const CBox& a, const CBox& b, mpfr_prec_t prec) {
    Iv n2 = cb_norm2(b, prec);
    if (n2.contains_zero()) throw invalid_argument_error("complex interval division by zero-containing box");
    CBox conj(b.re, iv_neg(b.im));
    CBox num = cb_mul(a, conj, prec);
    return CBox(iv_div(num.re, n2, prec), iv_div(num.im, n2, prec));
}

Iv cb_norm2(const CBox& a, mpfr_prec_t prec) {
    return iv_add(iv_sqr(a.re, prec), iv_sqr(a.im, prec), prec);
}

Iv cb_abs(const CBox& a, mpfr_prec_t prec) { return iv_sqrt(cb_norm2(a, prec), prec); }

CBox cb_eval_poly(const IntPoly& p, const CBox& z, mpfr_prec_t prec) {
    CBox acc(Iv::zero(prec), Iv::zero(prec));
    for (int i = p.degree(); i >= 0; --i) {
        acc = cb_mul(acc, z, prec);
        acc.re = iv_add(acc.re, Iv::of_int(p.coeff(i), prec), prec);
    }
    return acc;
}

Iv iv_eval_poly(const IntPoly& p, const Iv& x, mpfr_prec_t prec) {
    Iv acc = Iv::zero(prec);
    for (int i = p.degree(); i >= 0; --i) {
        acc = iv_mul(acc, x, prec);
        acc = iv_add(acc, Iv::of_int(p.coeff(i), prec), prec);
    }
    return acc;
}

Iv iv_log_abs_int(const Int& z, mpfr_prec_t prec) {
    if (z == 0) throw invalid_argument_error("log of zero");
    Int a = abs(z);
    return iv_log(Iv::of_int(a, prec), prec);
}

std::string to_string(const Real& x, int digits) {
    char buf[512];
    std::string fmt = "%." + std::to_string(digits) + "Rg";
    mpfr_snprintf(buf, sizeof(buf), fmt.c_str(), x.get());
    return std::string(buf);
}

} // namespace htdyn
