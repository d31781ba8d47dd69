#include "htdyn/roots.hpp"

#include <algorithm>
#include <cmath>

namespace htdyn {

CBox ComplexBall::box(mpfr_prec_t prec) const {
    Iv r = Iv::of_rat(re, prec), i = Iv::of_rat(im, prec), d = Iv::of_rat(rad, prec);
    Iv spread(iv_neg(d).lo, d.hi); // [-rad, rad] outward rounded
    return CBox(iv_add(r, spread, prec), iv_add(i, spread, prec));
}

namespace {

// plain complex arithmetic on mpfr at a fixed precision (round to nearest);
// rigor comes from the interval certification pass afterwards
struct Cx {
    Real re, im;
    explicit Cx(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
};

void cx_add(Cx& r, const Cx& a, const Cx& b) {
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void cx_sub(Cx& r, const Cx& a, const Cx& b) {
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void cx_mul(Cx& r, const Cx& a, const Cx& b, Real& t1, Real& t2) {
    // r must not alias a or b
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
}

void cx_div(Cx& r, const Cx& a, const Cx& b, Real& t1, Real& t2, Real& n2) {
    mpfr_sqr(t1.get(), b.re.get(), MPFR_RNDN);
    mpfr_sqr(t2.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(n2.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(r.re.get(), t1.get(), n2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), t1.get(), n2.get(), MPFR_RNDN);
}

// starting points from the Newton polygon of coefficient magnitudes (Bini's
// recipe: one annulus per upper-hull edge, angles spread with an offset)
std::vector<Cx> starting_points(const IntPoly& q, mpfr_prec_t prec) {
    int n = q.degree();
    std::vector<double> lg(n + 1, -1e300);
    for (int i = 0; i <= n; ++i) {
        if (q.coeff(i) != 0) {
            long e;
            double m = mpz_get_d_2exp(&e, q.coeff(i).get_mpz_t());
            lg[i] = std::log2(std::fabs(m)) + static_cast<double>(e);
        }
    }
    std::vector<int> hull;
    for (int i = 0; i <= n; ++i) {
        if (lg[i] < -1e299) continue;
        while (hull.size() >= 2) {
            int a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            double yb = lg[a] + (lg[i] - lg[a]) * (b - a) / static_cast<double>(i - a);
            if (lg[b] <= yb) hull.pop_back();
            else break;
        }
        hull.push_back(i);
    }
    std::vector<Cx> z;
    z.reserve(n);
    const double two_pi = 6.283185307179586;
    for (size_t e = 0; e + 1 < hull.size(); ++e) {
        int a = hull[e], b = hull[e + 1];
        int cnt = b - a;
        double log2r = (lg[a] - lg[b]) / cnt;
        double ang0 = 0.43 + 1.77 * static_cast<double>(e);
        for (int t = 0; t < cnt; ++t) {
            double theta = two_pi * t / cnt + ang0;
            Cx p(prec);
            Real radius(prec), ex(prec);
            mpfr_set_d(ex.get(), log2r, MPFR_RNDN);
            mpfr_ui_pow(radius.get(), 2, ex.get(), MPFR_RNDN);
            mpfr_set_d(p.re.get(), std::cos(theta), MPFR_RNDN);
            mpfr_set_d(p.im.get(), std::sin(theta), MPFR_RNDN);
            mpfr_mul(p.re.get(), p.re.get(), radius.get(), MPFR_RNDN);
            mpfr_mul(p.im.get(), p.im.get(), radius.get(), MPFR_RNDN);
            z.push_back(std::move(p));
        }
    }
    while ((int)z.size() < n) {
        Cx p(prec);
        mpfr_set_d(p.re.get(), 0.7 + 0.1 * z.size(), MPFR_RNDN);
        mpfr_set_d(p.im.get(), 0.4 - 0.05 * z.size(), MPFR_RNDN);
        z.push_back(std::move(p));
    }
    return z;
}

// one Aberth-Ehrlich pass; returns the worst log2 relative correction
double aberth_sweep(const std::vector<Cx>& coef, std::vector<Cx>& z, mpfr_prec_t prec) {
    int n = static_cast<int>(z.size());
    Real t1(prec), t2(prec), n2(prec);
    Cx pv(prec), dv(prec), tmp(prec), w(prec), s(prec), d(prec), corr(prec), one(prec);
    mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
    double worst = -1e300;
    for (int k = 0; k < n; ++k) {
        mpfr_set_zero(pv.re.get(), 1);
        mpfr_set_zero(pv.im.get(), 1);
        mpfr_set_zero(dv.re.get(), 1);
        mpfr_set_zero(dv.im.get(), 1);
        for (int i = static_cast<int>(coef.size()) - 1; i >= 0; --i) {
            cx_mul(tmp, dv, z[k], t1, t2);
            cx_add(dv, tmp, pv);
            cx_mul(tmp, pv, z[k], t1, t2);
            cx_add(pv, tmp, coef[i]);
        }
        if (mpfr_zero_p(dv.re.get()) && mpfr_zero_p(dv.im.get())) {
            mpfr_add_d(z[k].re.get(), z[k].re.get(), 1e-3, MPFR_RNDN);
            worst = 1e300;
            continue;
        }
        cx_div(w, pv, dv, t1, t2, n2);
        mpfr_set_zero(s.re.get(), 1);
        mpfr_set_zero(s.im.get(), 1);
        for (int j = 0; j < n; ++j) {
            if (j == k) continue;
            cx_sub(d, z[k], z[j]);
            if (mpfr_zero_p(d.re.get()) && mpfr_zero_p(d.im.get())) {
                mpfr_add_d(z[k].re.get(), z[k].re.get(), 1e-4 * (j + 1), MPFR_RNDN);
                mpfr_add_d(z[k].im.get(), z[k].im.get(), 3e-5 * (j + 1), MPFR_RNDN);
                cx_sub(d, z[k], z[j]);
            }
            cx_div(tmp, one, d, t1, t2, n2);
            cx_add(s, s, tmp);
        }
        cx_mul(tmp, w, s, t1, t2);
        Cx den(prec);
        mpfr_ui_sub(den.re.get(), 1, tmp.re.get(), MPFR_RNDN);
        mpfr_neg(den.im.get(), tmp.im.get(), MPFR_RNDN);
        if (mpfr_zero_p(den.re.get()) && mpfr_zero_p(den.im.get())) {
            mpfr_set(corr.re.get(), w.re.get(), MPFR_RNDN);
            mpfr_set(corr.im.get(), w.im.get(), MPFR_RNDN);
        } else {
            cx_div(corr, w, den, t1, t2, n2);
        }
        cx_sub(z[k], z[k], corr);
        mpfr_hypot(t1.get(), corr.re.get(), corr.im.get(), MPFR_RNDN);
        mpfr_hypot(t2.get(), z[k].re.get(), z[k].im.get(), MPFR_RNDN);
        mpfr_add_ui(t2.get(), t2.get(), 1, MPFR_RNDN);
        mpfr_div(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
        double rel;
        if (mpfr_nan_p(t1.get())) rel = 1e300;
        else if (mpfr_zero_p(t1.get())) rel = -1e300;
        else rel = static_cast<double>(mpfr_get_exp(t1.get()));
        worst = std::max(worst, rel);
    }
    return worst;
}

struct Certified {
    Rat re, im, rad;
};

// a posteriori disk: the disk of radius deg*|p(c)/p'(c)| around c contains at
// least one root of q; with pairwise disjointness, exactly one
bool certify_candidate(const IntPoly& q, const IntPoly& dq, const Cx& z, mpfr_prec_t prec, Certified& out) {
    Rat cre = z.re.to_rat(), cim = z.im.to_rat();
    CBox c = CBox::of_rat(cre, cim, prec);
    CBox pv = cb_eval_poly(q, c, prec);
    CBox dv = cb_eval_poly(dq, c, prec);
    Iv pa = cb_abs(pv, prec);
    Iv da = cb_abs(dv, prec);
    if (da.lo.sgn() <= 0) return false;
    Real r(prec);
    mpfr_div(r.get(), pa.hi.get(), da.lo.get(), MPFR_RNDU);
    mpfr_mul_ui(r.get(), r.get(), q.degree(), MPFR_RNDU);
    out.re = cre;
    out.im = cim;
    out.rad = r.to_rat();
    return true;
}

bool disks_disjoint(const Certified& a, const Certified& b, mpfr_prec_t prec) {
    Iv dx = iv_sub(Iv::of_rat(a.re, prec), Iv::of_rat(b.re, prec), prec);
    Iv dy = iv_sub(Iv::of_rat(a.im, prec), Iv::of_rat(b.im, prec), prec);
    Iv d2 = iv_add(iv_sqr(dx, prec), iv_sqr(dy, prec), prec);
    Iv rs = iv_add(Iv::of_rat(a.rad, prec), Iv::of_rat(b.rad, prec), prec);
    Iv rs2 = iv_sqr(rs, prec);
    return mpfr_cmp(d2.lo.get(), rs2.hi.get()) > 0;
}

} // namespace

std::vector<ComplexBall> approx_roots_squarefree(const IntPoly& q, const Rat& eps, const RootConfig& cfg) {
    if (q.is_zero() || q.degree() < 1)
        throw invalid_argument_error("approx_roots: polynomial must have degree >= 1");
    if (eps <= 0) throw invalid_argument_error("approx_roots: eps must be positive");
    std::vector<ComplexBall> out;

    IntPoly p = primitive_part(q);
    if (p.coeff(0) == 0) {
        ComplexBall b;
        b.re = b.im = b.rad = Rat(0);
        b.exact_real = true;
        out.push_back(b);
        std::vector<Int> shifted(p.coeffs().begin() + 1, p.coeffs().end());
        p = from_raw(std::move(shifted));
        if (p.degree() < 1) return out;
    }
    if (p.degree() == 1) {
        ComplexBall b;
        b.re = make_rat(-p.coeff(0), p.coeff(1));
        b.im = Rat(0);
        b.rad = Rat(0);
        b.exact_real = true;
        out.push_back(std::move(b));
        std::sort(out.begin(), out.end(),
                  [](const ComplexBall& x, const ComplexBall& y) { return x.re < y.re; });
        return out;
    }

    int n = p.degree();
    int nreal = sturm_count_all(p);
    std::vector<std::pair<Rat, Rat>> ivs = isolate_real_roots(p);
    Rat real_width = eps;

    int ncomplex = n - nreal;
    std::vector<Certified> cplx;
    if (ncomplex > 0) {
        IntPoly dp = derivative(p);
        bool done = false;
        std::vector<Certified> best;
        for (mpfr_prec_t prec = cfg.start_prec; prec <= cfg.max_prec; prec *= 2) {
            std::vector<Cx> coef;
            coef.reserve(n + 1);
            for (int i = 0; i <= n; ++i) {
                Cx c(prec);
                mpfr_set_z(c.re.get(), p.coeff(i).get_mpz_t(), MPFR_RNDN);
                coef.push_back(std::move(c));
            }
            std::vector<Cx> z = starting_points(p, prec);
            double last = 1e300;
            int plateau = 0;
            for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
                double worst = aberth_sweep(coef, z, prec);
                if (worst < -static_cast<double>(prec) + 16) break;
                if (sweep > 10 && worst > last - 0.5) {
                    if (++plateau >= 4) break;
                } else {
                    plateau = 0;
                }
                last = worst;
            }

            std::vector<Certified> all;
            bool cert_ok = true;
            for (const Cx& zz : z) {
                Certified c;
                if (!certify_candidate(p, dp, zz, prec + 32, c)) {
                    cert_ok = false;
                    break;
                }
                all.push_back(std::move(c));
            }
            if (!cert_ok) continue;

            cplx.clear();
            for (const Certified& c : all)
                if (abs(c.im) > c.rad) cplx.push_back(c);
            if ((int)cplx.size() != ncomplex) {
                best = cplx;
                continue;
            }

            bool ok = true;
            for (const Certified& c : cplx)
                if (c.rad > eps) {
                    ok = false;
                    break;
                }
            if (ok)
                for (size_t i = 0; i < cplx.size() && ok; ++i)
                    for (size_t j = i + 1; j < cplx.size(); ++j)
                        if (!disks_disjoint(cplx[i], cplx[j], prec)) {
                            ok = false;
                            break;
                        }
            if (!ok) {
                best = cplx;
                continue;
            }

            for (const Certified& c : cplx) {
                Rat gap = abs(c.im) - c.rad;
                if (gap < real_width) real_width = gap / 2;
            }
            done = true;
            break;
        }
        if (!done) {
            std::vector<ComplexBall> partial;
            for (const Certified& c : best) {
                ComplexBall b;
                b.re = c.re;
                b.im = c.im;
                b.rad = c.rad;
                partial.push_back(std::move(b));
            }
            throw precision_exhausted_balls(std::move(partial));
        }
    }

    // exact real roots, refined and separated so the closed disks are disjoint
    std::vector<std::pair<Rat, Rat>> refined;
    refined.reserve(ivs.size());
    for (auto& iv : ivs) refined.push_back(refine_isolating_interval(p, iv, real_width));
    for (size_t i = 0; i + 1 < refined.size(); ++i) {
        while (refined[i].second >= refined[i + 1].first) {
            Rat w1 = (refined[i].second - refined[i].first) / 4;
            Rat w2 = (refined[i + 1].second - refined[i + 1].first) / 4;
            refined[i] = refine_isolating_interval(p, refined[i], w1);
            refined[i + 1] = refine_isolating_interval(p, refined[i + 1], w2);
        }
    }
    for (const auto& r : refined) {
        ComplexBall b;
        b.re = (r.first + r.second) / 2;
        b.im = Rat(0);
        b.rad = (r.second - r.first) / 2;
        b.exact_real = true;
        out.push_back(std::move(b));
    }
    for (const Certified& c : cplx) {
        ComplexBall b;
        b.re = c.re;
        b.im = c.im;
        b.rad = c.rad;
        b.exact_real = false;
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const ComplexBall& x, const ComplexBall& y) {
        if (x.re != y.re) return x.re < y.re;
        return x.im < y.im;
    });
    return out;
}

std::vector<ComplexBall> approx_roots(const IntPoly& p, const Rat& eps, const RootConfig& cfg) {
    if (p.is_zero() || p.degree() < 1)
        throw invalid_argument_error("approx_roots: polynomial must have degree >= 1");
    std::vector<ComplexBall> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        auto balls = approx_roots_squarefree(factor, eps, cfg);
        for (auto& b : balls) {
            b.multiplicity = mult;
            for (int i = 0; i < mult; ++i) out.push_back(b);
        }
    }
    std::sort(out.begin(), out.end(), [](const ComplexBall& x, const ComplexBall& y) {
        if (x.re != y.re) return x.re < y.re;
        return x.im != y.im ? x.im < y.im : x.multiplicity < y.multiplicity;
    });
    return out;
}

} // namespace htdyn
