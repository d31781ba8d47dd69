#ifndef HTDYN_INTPOLY_HPP
#define HTDYN_INTPOLY_HPP

#include "htdyn/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace htdyn {

// Dense univariate polynomial over Z, constant term first.
// Invariant: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector (degree() == -1).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int a) { return IntPoly(std::vector<Int>{std::move(a)}); }
    static IntPoly x() { return IntPoly({0, 1}); }
    // a*x^k
    static IntPoly monomial(Int a, size_t k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int>& coeffs() const { return c_; }
    // coefficient of x^i, zero beyond the degree
    const Int& coeff(size_t i) const;
    const Int& lead() const;

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

private:
    std::vector<Int> c_;
    void normalize();
    friend IntPoly from_raw(std::vector<Int>&&);
};

IntPoly from_raw(std::vector<Int>&& coeffs);

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly neg(const IntPoly& a);
IntPoly scale(const IntPoly& a, const Int& k);
// a(x) * x^k
IntPoly shift_up(const IntPoly& a, size_t k);
IntPoly derivative(const IntPoly& a);
// x^deg * a(1/x)
IntPoly reverse(const IntPoly& a);
// a(-x)
IntPoly negate_arg(const IntPoly& a);
// a(b(x))
IntPoly compose(const IntPoly& a, const IntPoly& b);

// gcd of |coefficients|, positive; 0 for the zero polynomial
Int content(const IntPoly& a);
// a / content(a); sign of the leading coefficient is preserved
IntPoly primitive_part(const IntPoly& a);
// primitive part with positive leading coefficient
IntPoly normalized(const IntPoly& a);

Int eval_int(const IntPoly& a, const Int& x);
Rat eval_rat(const IntPoly& a, const Rat& x);
// sign of a(x) computed without building the full rational value
int sign_at(const IntPoly& a, const Rat& x);
// sign of a at +inf / -inf
int sign_at_pos_inf(const IntPoly& a);
int sign_at_neg_inf(const IntPoly& a);
// b^deg(a) * a(n/b): integer homogeneous evaluation
Int eval_homogeneous(const IntPoly& a, const Int& n, const Int& b);

// Exact division; nullopt if b does not divide a in Q[x] (result cleared to
// primitive integer form only when the quotient is integral).
std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b);
// a = qb + r with deg r < deg b, computed over Q and cleared; requires that
// the division is exact in Z[x] ... use prem for the general case.
// Pseudo remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r. Returns r.
IntPoly prem(const IntPoly& a, const IntPoly& b);

// gcd in Z[x], primitive with positive leading coefficient (subresultant PRS)
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
// resultant of a and b (0 iff common complex root)
Int resultant(const IntPoly& a, const IntPoly& b);
// primitive a / gcd(a, a'); same roots, multiplicity one
IntPoly squarefree_part(const IntPoly& a);
// Yun decomposition: list of (factor, multiplicity), factors primitive,
// squarefree, pairwise coprime; product of factor^mult = a up to content/sign
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& a);

// ---- Sturm machinery (exact real root counting) ----

struct SturmChain {
    std::vector<IntPoly> seq;
};
// p must be squarefree
SturmChain sturm_chain(const IntPoly& p);

// Number of real roots in (lo, hi); nullopt endpoint = -inf / +inf.
// Throws invalid_argument_error if a finite endpoint is a root of p
// (the documented perturb-and-retry contract) or p is not squarefree.
int sturm_count(const IntPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi);
int sturm_count(const SturmChain& ch, const std::optional<Rat>& lo, const std::optional<Rat>& hi);
int sturm_count_all(const IntPoly& p);

// Disjoint open rational intervals, one real root each, sorted.
// p must be squarefree and nonzero.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p);
// Bisect an isolating interval of p until its width is <= w.
std::pair<Rat, Rat> refine_isolating_interval(const IntPoly& p, std::pair<Rat, Rat> iv, const Rat& w);
// Cauchy bound: every complex root has |z| < bound
Rat root_bound(const IntPoly& p);

// ---- rational-coefficient helpers ----

// Polynomial over Q, used for transient computations (Lagrange interpolation,
// extended gcd in number-field arithmetic).
struct RatPoly {
    std::vector<Rat> c; // constant first, normalized (no trailing zeros)

    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }
    static RatPoly from_int(const IntPoly& p);
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();
    bool operator==(const RatPoly& o) const { return c == o.c; }
};

RatPoly add(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);
RatPoly mul(const RatPoly& a, const RatPoly& b);
RatPoly scale(const RatPoly& a, const Rat& k);
Rat eval(const RatPoly& a, const Rat& x);
// quotient and remainder over Q
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b); // monic
// g = gcd, and s with s*a = g mod b   (the cofactor needed for inversion)
std::pair<RatPoly, RatPoly> half_ext_gcd(const RatPoly& a, const RatPoly& b);
// clear denominators to a primitive IntPoly (sign of lead preserved)
IntPoly clear_denominators(const RatPoly& a);

// Lagrange interpolation through (xs[i], ys[i]), exact over Q.
RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// ---- resultant-based elimination (algebraic-number arithmetic) ----

// R(x) = Res_y(p(y), A(y) - x*B(y)), primitive. Roots of R are exactly
// A(t)/B(t) over roots t of p with B(t) != 0 (with the usual lead factor).
// Degree of R in x is deg p when B has no common root with p of top weight;
// computed by sampling + interpolation.
IntPoly elim_resultant(const IntPoly& p, const IntPoly& A, const IntPoly& B);
// roots a+b over roots a of p, b of q:  Res_y(p(y), q(x-y))
IntPoly sum_resultant(const IntPoly& p, const IntPoly& q);
// roots a*b (q(0) != 0 required; strip zero roots first)
IntPoly prod_resultant(const IntPoly& p, const IntPoly& q);

// ---- text format ----
// Terms "c*x^k" with rational c, '+'/'-' separators, whitespace-insensitive.
// Rational coefficients are cleared: returns (primitive IntPoly, denominator).
std::pair<IntPoly, Int> parse_poly_cleared(const std::string& s);
// As above but requires the result to be integral after clearing is folded in.
IntPoly parse_poly(const std::string& s);
std::string to_string(const IntPoly& p);

} // namespace htdyn

#endif
