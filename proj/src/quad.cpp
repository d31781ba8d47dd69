#include "htdyn/quad.hpp"

namespace htdyn {

namespace {

bool squarefree_ok(const Int& D) {
    if (D == 0 || D == 1) return false;
    Int a = abs(D);
    // trial division is plenty for the small D used as field tags
    for (long p = 2; Int(p) * p <= a && p < 100000; ++p) {
        if (mpz_divisible_ui_p(a.get_mpz_t(), (unsigned long)(p * p))) return false;
    }
    return true;
}

} // namespace

QuadElem::QuadElem(Int D_, Rat a_, Rat b_) : D(std::move(D_)), a(std::move(a_)), b(std::move(b_)) {
    if (b == 0) {
        D = 0;
        return;
    }
    if (!squarefree_ok(D)) throw invalid_argument_error("QuadElem: D must be squarefree, not 0 or 1");
}

bool QuadElem::operator==(const QuadElem& o) const {
    if (b == 0 && o.b == 0) return a == o.a;
    return D == o.D && a == o.a && b == o.b;
}

Int common_field(const QuadElem& x, const QuadElem& y) {
    if (x.b == 0) return y.b == 0 ? Int(0) : y.D;
    if (y.b == 0) return x.D;
    if (x.D != y.D) throw invalid_argument_error("quadratic field mismatch");
    return x.D;
}

QuadElem q_add(const QuadElem& x, const QuadElem& y) {
    Int D = common_field(x, y);
    return QuadElem(D, x.a + y.a, x.b + y.b);
}

QuadElem q_sub(const QuadElem& x, const QuadElem& y) {
    Int D = common_field(x, y);
    return QuadElem(D, x.a - y.a, x.b - y.b);
}

QuadElem q_mul(const QuadElem& x, const QuadElem& y) {
    Int D = common_field(x, y);
    if (D == 0) return QuadElem::rational(x.a * y.a);
    return QuadElem(D, x.a * y.a + x.b * y.b * Rat(D), x.a * y.b + x.b * y.a);
}

QuadElem q_neg(const QuadElem& x) { return QuadElem(x.D, -x.a, -x.b); }

QuadElem q_conj(const QuadElem& x) { return QuadElem(x.D, x.a, -x.b); }

Rat q_norm(const QuadElem& x) { return x.a * x.a - x.b * x.b * Rat(x.D); }

Rat q_trace(const QuadElem& x) { return 2 * x.a; }

bool q_is_zero(const QuadElem& x) { return x.a == 0 && x.b == 0; }

QuadElem q_inv(const QuadElem& x) {
    if (q_is_zero(x)) throw invalid_argument_error("division by zero");
    if (x.b == 0) return QuadElem::rational(1 / x.a);
    Rat n = q_norm(x); // nonzero: sqrt(D) irrational
    return QuadElem(x.D, x.a / n, -x.b / n);
}

QuadElem q_div(const QuadElem& x, const QuadElem& y) { return q_mul(x, q_inv(y)); }

int q_sign(const QuadElem& x) {
    if (x.b == 0) return sgn(x.a);
    if (x.D < 0) throw invalid_argument_error("sign of imaginary quadratic element");
    int sa = sgn(x.a), sb = sgn(x.b);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // competing terms: compare a^2 with b^2 D
    Rat d = x.a * x.a - x.b * x.b * Rat(x.D);
    return sgn(d) > 0 ? sa : sb;
}

Iv q_enclosure(const QuadElem& x, mpfr_prec_t prec) {
    if (x.b == 0) return Iv::of_rat(x.a, prec);
    if (x.D < 0) throw invalid_argument_error("real enclosure of imaginary quadratic element");
    Iv s = iv_sqrt(Iv::of_int(x.D, prec), prec);
    return iv_add(Iv::of_rat(x.a, prec), iv_mul(Iv::of_rat(x.b, prec), s, prec), prec);
}

CBox q_enclosure_complex(const QuadElem& x, mpfr_prec_t prec) {
    if (x.D >= 0) return CBox(q_enclosure(x, prec), Iv::zero(prec));
    Iv s = iv_sqrt(Iv::of_int(-x.D, prec), prec);
    return CBox(Iv::of_rat(x.a, prec), iv_mul(Iv::of_rat(x.b, prec), s, prec));
}

double q_double(const QuadElem& x) {
    if (x.b == 0) return x.a.get_d();
    return q_enclosure(x, 64).mid_double();
}

IntPoly q_min_poly(const QuadElem& x) {
    if (x.b == 0) {
        // den*x - num
        return primitive_part(from_raw(std::vector<Int>{-x.a.get_num(), x.a.get_den()}));
    }
    // x^2 - 2a x + (a^2 - b^2 D), cleared
    RatPoly r(std::vector<Rat>{x.a * x.a - x.b * x.b * Rat(x.D), -2 * x.a, Rat(1)});
    return clear_denominators(r);
}

std::string to_string(const QuadElem& x) {
    if (x.b == 0) return to_string(x.a);
    std::string s;
    if (x.a != 0) s += to_string(x.a);
    if (x.b == 1) s += s.empty() ? "sqrt(" + to_string(x.D) + ")" : "+sqrt(" + to_string(x.D) + ")";
    else if (x.b == -1) s += "-sqrt(" + to_string(x.D) + ")";
    else {
        if (!s.empty() && x.b > 0) s += "+";
        s += to_string(x.b) + "*sqrt(" + to_string(x.D) + ")";
    }
    return s;
}

// ---- QuadPoly ----

QuadPoly::QuadPoly(Int D_, std::vector<QuadElem> coeffs) : D(std::move(D_)), c(std::move(coeffs)) {
    for (auto& x : c)
        if (x.b != 0 && x.D != D) throw invalid_argument_error("QuadPoly: mixed fields");
    normalize();
}

QuadPoly QuadPoly::from_int(const Int& D, const IntPoly& p) {
    std::vector<QuadElem> v;
    v.reserve(p.coeffs().size());
    for (const auto& z : p.coeffs()) v.push_back(QuadElem::rational(Rat(z)));
    return QuadPoly(D, std::move(v));
}

void QuadPoly::normalize() {
    while (!c.empty() && q_is_zero(c.back())) c.pop_back();
}

const QuadElem& QuadPoly::lead() const {
    static const QuadElem zero_{};
    return c.empty() ? zero_ : c.back();
}

QuadElem QuadPoly::coeff(size_t i) const { return i < c.size() ? c[i] : QuadElem{}; }

bool QuadPoly::operator==(const QuadPoly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
        if (!(c[i] == o.c[i])) return false;
    return true;
}

QuadPoly qp_add(const QuadPoly& a, const QuadPoly& b) {
    std::vector<QuadElem> v(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = q_add(a.coeff(i), b.coeff(i));
    return QuadPoly(a.D != 0 ? a.D : b.D, std::move(v));
}

QuadPoly qp_sub(const QuadPoly& a, const QuadPoly& b) {
    std::vector<QuadElem> v(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = q_sub(a.coeff(i), b.coeff(i));
    return QuadPoly(a.D != 0 ? a.D : b.D, std::move(v));
}

QuadPoly qp_mul(const QuadPoly& a, const QuadPoly& b) {
    if (a.is_zero() || b.is_zero()) return QuadPoly(a.D != 0 ? a.D : b.D, {});
    std::vector<QuadElem> v(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            v[i + j] = q_add(v[i + j], q_mul(a.c[i], b.c[j]));
    return QuadPoly(a.D != 0 ? a.D : b.D, std::move(v));
}

QuadPoly qp_scale(const QuadPoly& a, const QuadElem& k) {
    std::vector<QuadElem> v(a.c);
    for (auto& x : v) x = q_mul(x, k);
    return QuadPoly(a.D, std::move(v));
}

QuadPoly qp_neg(const QuadPoly& a) {
    std::vector<QuadElem> v(a.c);
    for (auto& x : v) x = q_neg(x);
    return QuadPoly(a.D, std::move(v));
}

QuadPoly qp_derivative(const QuadPoly& a) {
    if (a.c.size() <= 1) return QuadPoly(a.D, {});
    std::vector<QuadElem> v(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i)
        v[i - 1] = q_mul(a.c[i], QuadElem::rational(Rat((long)i)));
    return QuadPoly(a.D, std::move(v));
}

QuadPoly qp_compose(const QuadPoly& a, const QuadPoly& b) {
    QuadPoly r(a.D != 0 ? a.D : b.D, {});
    for (int i = a.degree(); i >= 0; --i) {
        r = qp_mul(r, b);
        r = qp_add(r, QuadPoly(r.D, {a.coeff(i)}));
    }
    return r;
}

QuadElem qp_eval(const QuadPoly& a, const QuadElem& x) {
    QuadElem r;
    for (int i = a.degree(); i >= 0; --i) r = q_add(q_mul(r, x), a.coeff(i));
    return r;
}

QuadPoly qp_conj(const QuadPoly& a) {
    std::vector<QuadElem> v(a.c);
    for (auto& x : v) x = q_conj(x);
    return QuadPoly(a.D, std::move(v));
}

IntPoly qp_norm_poly(const QuadPoly& a) {
    QuadPoly n = qp_mul(a, qp_conj(a));
    RatPoly r;
    r.c.reserve(n.c.size());
    for (auto& x : n.c) {
        if (x.b != 0) throw invalid_argument_error("norm poly: unexpected irrational coefficient");
        r.c.push_back(x.a);
    }
    r.normalize();
    return clear_denominators(r);
}

bool qp_is_rational(const QuadPoly& a, IntPoly* out) {
    RatPoly r;
    for (auto& x : a.c) {
        if (x.b != 0) return false;
        r.c.push_back(x.a);
    }
    r.normalize();
    if (out) *out = clear_denominators(r);
    return true;
}

std::pair<QuadPoly, QuadPoly> qp_divmod(const QuadPoly& a, const QuadPoly& b) {
    if (b.is_zero()) throw invalid_argument_error("QuadPoly division by zero");
    QuadPoly r = a;
    int db = b.degree();
    if (a.degree() < db) return {QuadPoly(a.D, {}), a};
    std::vector<QuadElem> q(a.degree() - db + 1);
    QuadElem inv = q_inv(b.lead());
    for (int i = a.degree(); i >= db; --i) {
        if ((int)r.c.size() - 1 < i) continue;
        QuadElem f = q_mul(r.c[i], inv);
        q[i - db] = f;
        for (int j = 0; j <= db; ++j)
            r.c[i - db + j] = q_sub(r.c[i - db + j], q_mul(f, b.coeff(j)));
        r.normalize();
    }
    return {QuadPoly(a.D != 0 ? a.D : b.D, std::move(q)), r};
}

QuadPoly qp_gcd(const QuadPoly& a, const QuadPoly& b) {
    QuadPoly A = a, B = b;
    while (!B.is_zero()) {
        auto [q, r] = qp_divmod(A, B);
        A = B;
        B = r;
    }
    if (!A.is_zero()) A = qp_scale(A, q_inv(A.lead()));
    return A;
}

namespace {

int qp_sign_at(const QuadPoly& p, const Rat& x) {
    return q_sign(qp_eval(p, QuadElem::rational(x)));
}

int qp_sign_inf(const QuadPoly& p, bool pos) {
    int s = q_sign(p.lead());
    if (!pos && p.degree() % 2 != 0) s = -s;
    return s;
}

} // namespace

int qp_sturm_count_all(const QuadPoly& p) {
    if (p.is_zero()) throw invalid_argument_error("sturm of zero polynomial");
    if (p.D < 0 && !qp_is_rational(p)) throw invalid_argument_error("sturm needs a real field");
    std::vector<QuadPoly> chain{p, qp_derivative(p)};
    while (chain.back().degree() > 0) {
        auto [q, r] = qp_divmod(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) {
            if (chain.back().degree() > 0)
                throw invalid_argument_error("sturm: input not squarefree over the field");
            break;
        }
        chain.push_back(qp_neg(r));
    }
    auto vars = [&](bool pos) {
        int v = 0, prev = 0;
        for (const auto& q : chain) {
            if (q.is_zero()) continue;
            int s = qp_sign_inf(q, pos);
            if (prev != 0 && s != prev && s != 0) ++v;
            if (s != 0) prev = s;
        }
        return v;
    };
    return vars(false) - vars(true);
}

std::string to_string(const QuadPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        QuadElem x = p.coeff(i);
        if (q_is_zero(x)) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(x) + ")";
        if (i == 1) out += "*x";
        else if (i > 1) out += "*x^" + std::to_string(i);
    }
    return out;
}

} // namespace htdyn
