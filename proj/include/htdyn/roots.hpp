#ifndef HTDYN_ROOTS_HPP
#define HTDYN_ROOTS_HPP

#include "htdyn/interval.hpp"
#include "htdyn/intpoly.hpp"

#include <vector>

namespace htdyn {

// Certified root enclosure: the closed disk |z - (re + i*im)| <= rad contains
// exactly one root of the squarefree part of the source polynomial.
// exact_real means im == 0 is exact (the root was isolated by Sturm counts).
struct ComplexBall {
    Rat re, im;
    Rat rad;
    bool exact_real = false;
    int multiplicity = 1;

    double re_d() const { return re.get_d(); }
    double im_d() const { return im.get_d(); }
    double rad_d() const { return rad.get_d(); }
    // enclosing rectangle as interval box
    CBox box(mpfr_prec_t prec) const;
};

struct RootConfig {
    mpfr_prec_t start_prec = 128;
    mpfr_prec_t max_prec = 1 << 14;
    int max_sweeps = 120;
};

// thrown when the precision ladder tops out; carries the best enclosures
struct precision_exhausted_balls : precision_exhausted_error {
    std::vector<ComplexBall> best;
    explicit precision_exhausted_balls(std::vector<ComplexBall> b)
        : precision_exhausted_error("precision escalation limit exceeded"), best(std::move(b)) {}
};

// All deg(p) roots, multiplicity collapsed onto squarefree factors and then
// re-expanded (a root of multiplicity m appears as m copies of its ball).
// Every ball has radius <= eps; balls of distinct roots are pairwise disjoint;
// real roots of p come back with exact_real and im = 0.
std::vector<ComplexBall> approx_roots(const IntPoly& p, const Rat& eps, const RootConfig& cfg = {});

// roots of a squarefree polynomial (no multiplicity expansion)
std::vector<ComplexBall> approx_roots_squarefree(const IntPoly& q, const Rat& eps, const RootConfig& cfg = {});

} // namespace htdyn

#endif
