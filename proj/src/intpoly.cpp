#include "htdyn/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace htdyn {

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw invalid_argument_error("empty rational literal");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(t));
        Int n(t.substr(0, slash)), d(t.substr(slash + 1));
        return make_rat(n, d);
    } catch (const std::invalid_argument&) {
        throw invalid_argument_error("malformed rational: " + s);
    }
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly from_raw(std::vector<Int>&& coeffs) {
    IntPoly p;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
}

IntPoly IntPoly::monomial(Int a, size_t k) {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = std::move(a);
    return from_raw(std::move(v));
}

const Int& IntPoly::coeff(size_t i) const {
    static const Int zero_(0);
    return i < c_.size() ? c_[i] : zero_;
}

const Int& IntPoly::lead() const {
    static const Int zero_(0);
    return c_.empty() ? zero_ : c_.back();
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return from_raw(std::move(v));
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return from_raw(std::move(v));
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly::zero();
    std::vector<Int> v(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return from_raw(std::move(v));
}

IntPoly neg(const IntPoly& a) {
    std::vector<Int> v(a.coeffs());
    for (auto& z : v) z = -z;
    return from_raw(std::move(v));
}

IntPoly scale(const IntPoly& a, const Int& k) {
    if (k == 0) return IntPoly::zero();
    std::vector<Int> v(a.coeffs());
    for (auto& z : v) z *= k;
    return from_raw(std::move(v));
}

IntPoly shift_up(const IntPoly& a, size_t k) {
    if (a.is_zero()) return a;
    std::vector<Int> v(a.coeffs().size() + k, Int(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) v[i + k] = a.coeffs()[i];
    return from_raw(std::move(v));
}

IntPoly derivative(const IntPoly& a) {
    if (a.degree() <= 0) return IntPoly::zero();
    std::vector<Int> v(a.coeffs().size() - 1);
    for (size_t i = 1; i < a.coeffs().size(); ++i) v[i - 1] = Int(i) * a.coeffs()[i];
    return from_raw(std::move(v));
}

IntPoly reverse(const IntPoly& a) {
    std::vector<Int> v(a.coeffs().rbegin(), a.coeffs().rend());
    return from_raw(std::move(v));
}

IntPoly negate_arg(const IntPoly& a) {
    std::vector<Int> v(a.coeffs());
    for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return from_raw(std::move(v));
}

IntPoly compose(const IntPoly& a, const IntPoly& b) {
    // Horner in Z[x]
    IntPoly r;
    for (int i = a.degree(); i >= 0; --i) {
        r = mul(r, b);
        r = add(r, IntPoly::constant(a.coeff(i)));
    }
    return r;
}

Int content(const IntPoly& a) {
    Int g(0);
    for (const auto& z : a.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return a;
    Int g = content(a);
    if (g == 1) return a;
    std::vector<Int> v(a.coeffs());
    for (auto& z : v) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    return from_raw(std::move(v));
}

IntPoly normalized(const IntPoly& a) {
    IntPoly p = primitive_part(a);
    if (!p.is_zero() && sgn(p.lead()) < 0) p = neg(p);
    return p;
}

Int eval_int(const IntPoly& a, const Int& x) {
    Int r(0);
    for (int i = a.degree(); i >= 0; --i) r = r * x + a.coeff(i);
    return r;
}

Rat eval_rat(const IntPoly& a, const Rat& x) {
    Rat r(0);
    for (int i = a.degree(); i >= 0; --i) r = r * x + Rat(a.coeff(i));
    return r;
}

Int eval_homogeneous(const IntPoly& a, const Int& n, const Int& b) {
    // b^deg * a(n/b) via Horner with a running power of b
    if (a.is_zero()) return Int(0);
    Int r(0), bp(1);
    for (int i = a.degree(); i >= 0; --i) {
        r = r * n + a.coeff(i) * bp;
        if (i > 0) bp *= b;
    }
    return r;
}

int sign_at(const IntPoly& a, const Rat& x) {
    return sgn(eval_homogeneous(a, x.get_num(), x.get_den()));
}

int sign_at_pos_inf(const IntPoly& a) { return sgn(a.lead()); }

int sign_at_neg_inf(const IntPoly& a) {
    int s = sgn(a.lead());
    return (a.degree() % 2 != 0) ? -s : s;
}

std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw invalid_argument_error("division by zero polynomial");
    if (a.is_zero()) return IntPoly::zero();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> q(a.degree() - b.degree() + 1, Int(0));
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), b.lead().get_mpz_t())) return std::nullopt;
        Int qc;
        mpz_divexact(qc.get_mpz_t(), rem[i].get_mpz_t(), b.lead().get_mpz_t());
        q[i - b.degree()] = qc;
        for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= qc * b.coeff(j);
    }
    for (const auto& z : rem)
        if (z != 0) return std::nullopt;
    return from_raw(std::move(q));
}

IntPoly prem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw invalid_argument_error("prem by zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<Int> r(a.coeffs());
    const Int& lb = b.lead();
    int k = a.degree() - b.degree() + 1;
    int dr = a.degree();
    while (dr >= b.degree()) {
        Int top = r[dr];
        for (int i = 0; i <= dr; ++i) r[i] *= lb;
        for (int j = 0; j <= b.degree(); ++j) r[dr - b.degree() + j] -= top * b.coeff(j);
        --k;
        while (dr >= 0 && r[dr] == 0) --dr;
        if (dr < 0) break;
    }
    r.resize(dr + 1);
    IntPoly out = from_raw(std::move(r));
    // pad remaining multiplier so the total factor is exactly lc(b)^(da-db+1)
    for (; k > 0; --k) out = scale(out, lb);
    return out;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    Int ca = content(a), cb = content(b);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    IntPoly A = primitive_part(a), B = primitive_part(b);
    if (A.degree() < B.degree()) std::swap(A, B);
    // subresultant PRS keeps the intermediate coefficients polynomial-sized
    Int g(1), h(1);
    while (true) {
        int delta = A.degree() - B.degree();
        IntPoly R = prem(A, B);
        if (R.is_zero()) break;
        if (R.degree() == 0) return IntPoly::constant(cg);
        A = B;
        Int divisor = g * pow_int(h, delta);
        std::vector<Int> v(R.coeffs());
        for (auto& z : v) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), divisor.get_mpz_t());
        B = from_raw(std::move(v));
        g = A.lead();
        // h = g^delta * h^(1-delta)
        if (delta == 0) {
            // h unchanged
        } else {
            Int gp = pow_int(g, delta);
            if (delta == 1) {
                h = gp;
            } else {
                Int hp = pow_int(h, delta - 1);
                mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
            }
        }
    }
    IntPoly r = normalized(B);
    return scale(r, cg);
}

Int resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero())
        throw invalid_argument_error("resultant of zero polynomial");
    // constants: Res(c, b) = c^deg(b)
    if (a.degree() == 0) return pow_int(a.lead(), b.degree());
    if (b.degree() == 0) return pow_int(b.lead(), a.degree());

    Int ca = content(a), cb = content(b);
    IntPoly A = primitive_part(a), B = primitive_part(b);
    Int t = pow_int(ca, b.degree()) * pow_int(cb, a.degree());
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    Int g(1), h(1);
    while (B.degree() > 0) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPoly R = prem(A, B);
        A = B;
        if (R.is_zero()) return Int(0);
        Int divisor = g * pow_int(h, delta);
        std::vector<Int> v(R.coeffs());
        for (auto& z : v) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), divisor.get_mpz_t());
        B = from_raw(std::move(v));
        g = A.lead();
        if (delta >= 1) {
            Int gp = pow_int(g, delta);
            if (delta == 1) {
                h = gp;
            } else {
                Int hp = pow_int(h, delta - 1);
                mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
            }
        }
    }
    // B is a nonzero constant here
    Int lb = B.lead();
    Int res;
    {
        Int numr = pow_int(lb, A.degree());
        if (A.degree() >= 1) {
            Int hp = pow_int(h, A.degree() - 1);
            mpz_divexact(res.get_mpz_t(), numr.get_mpz_t(), hp.get_mpz_t());
        } else {
            res = 1;
        }
    }
    return s * t * res;
}

IntPoly squarefree_part(const IntPoly& a) {
    if (a.is_zero()) throw invalid_argument_error("squarefree part of zero polynomial");
    if (a.degree() == 0) return IntPoly::constant(Int(1));
    IntPoly g = poly_gcd(a, derivative(a));
    if (g.degree() == 0) return normalized(a);
    auto q = try_divide(primitive_part(a), g);
    // gcd divides the primitive part exactly over Z (Gauss)
    return normalized(*q);
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& a) {
    if (a.is_zero()) throw invalid_argument_error("squarefree decomposition of zero");
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly p = normalized(a);
    if (p.degree() == 0) return out;
    // Yun's algorithm
    IntPoly dp = derivative(p);
    IntPoly g = poly_gcd(p, dp);
    if (g.degree() == 0) {
        out.emplace_back(p, 1);
        return out;
    }
    IntPoly c = *try_divide(p, g);
    IntPoly d = sub(*try_divide(dp, g), derivative(c));
    int i = 1;
    while (c.degree() > 0) {
        IntPoly ai = poly_gcd(c, d);
        if (ai.degree() > 0) out.emplace_back(normalized(ai), i);
        c = *try_divide(c, ai);
        d = sub(*try_divide(d, ai), derivative(c));
        ++i;
    }
    return out;
}

// ---- Sturm ----

SturmChain sturm_chain(const IntPoly& p) {
    if (p.is_zero()) throw invalid_argument_error("Sturm chain of zero polynomial");
    SturmChain ch;
    ch.seq.push_back(primitive_part(p));
    if (p.degree() == 0) return ch;
    ch.seq.push_back(primitive_part(derivative(p)));
    while (true) {
        const IntPoly& a = ch.seq[ch.seq.size() - 2];
        const IntPoly& b = ch.seq.back();
        if (b.is_zero()) {
            if (ch.seq[ch.seq.size() - 2].degree() > 0)
                throw invalid_argument_error("sturm_chain: input not squarefree");
            ch.seq.pop_back();
            break;
        }
        if (b.degree() == 0) break;
        // sign-correct pseudo remainder: multiply a by lc(b)^e with e even,
        // so the remainder keeps the sign of the exact rational remainder
        int delta = a.degree() - b.degree();
        int e = delta + 1;
        IntPoly r = prem(a, b);
        if ((e & 1) && sgn(b.lead()) < 0) r = neg(r);
        if (r.is_zero()) {
            if (b.degree() > 0) throw invalid_argument_error("sturm_chain: input not squarefree");
            break;
        }
        ch.seq.push_back(primitive_part(neg(r)));
    }
    return ch;
}

namespace {

int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int variations_at(const SturmChain& ch, const std::optional<Rat>& x, bool at_pos_inf) {
    std::vector<int> signs;
    signs.reserve(ch.seq.size());
    for (const auto& q : ch.seq) {
        if (x) signs.push_back(sign_at(q, *x));
        else signs.push_back(at_pos_inf ? sign_at_pos_inf(q) : sign_at_neg_inf(q));
    }
    return sign_variations(signs);
}

} // namespace

int sturm_count(const SturmChain& ch, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    const IntPoly& p = ch.seq.front();
    if (lo && hi && !(*lo < *hi)) throw invalid_argument_error("sturm_count: lo >= hi");
    if (lo && sign_at(p, *lo) == 0)
        throw invalid_argument_error("sturm_count: endpoint is a root; perturb the endpoint");
    if (hi && sign_at(p, *hi) == 0)
        throw invalid_argument_error("sturm_count: endpoint is a root; perturb the endpoint");
    int vlo = variations_at(ch, lo, false);
    int vhi = variations_at(ch, hi, true);
    return vlo - vhi;
}

int sturm_count(const IntPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    return sturm_count(sturm_chain(p), lo, hi);
}

int sturm_count_all(const IntPoly& p) { return sturm_count(p, std::nullopt, std::nullopt); }

Rat root_bound(const IntPoly& p) {
    if (p.degree() < 1) throw invalid_argument_error("root bound needs degree >= 1");
    Int m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Int a = abs(p.coeff(i));
        if (a > m) m = a;
    }
    Rat b(m, abs(p.lead()));
    b.canonicalize();
    return b + 1;
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw invalid_argument_error("isolate_real_roots of zero polynomial");
    std::vector<std::pair<Rat, Rat>> out;
    if (p.degree() < 1) return out;
    SturmChain ch = sturm_chain(p);
    Rat bound = root_bound(p);
    // nudge endpoints off roots (the bound itself is never a root, by Cauchy)
    Rat lo = -bound, hi = bound;
    int total = sturm_count(ch, lo, hi);
    if (total == 0) return out;

    struct Seg { Rat lo, hi; int count; };
    std::vector<Seg> stack{{lo, hi, total}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.emplace_back(s.lo, s.hi);
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        // keep endpoints off roots
        Rat step = (s.hi - s.lo) / 4;
        while (sign_at(p, mid) == 0) {
            step /= 3;
            mid += step;
        }
        int cl = sturm_count(ch, s.lo, mid);
        stack.push_back({s.lo, mid, cl});
        stack.push_back({mid, s.hi, s.count - cl});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::pair<Rat, Rat> refine_isolating_interval(const IntPoly& p, std::pair<Rat, Rat> iv, const Rat& w) {
    int slo = sign_at(p, iv.first);
    while (iv.second - iv.first > w) {
        Rat mid = (iv.first + iv.second) / 2;
        int sm = sign_at(p, mid);
        if (sm == 0) {
            // mid is the root itself; shrink symmetrically around it,
            // keeping the endpoints off roots
            Rat h = (iv.second - iv.first) / 8;
            while (h > w / 2) h /= 2;
            while (sign_at(p, mid - h) == 0 || sign_at(p, mid + h) == 0) h /= 3;
            return {mid - h, mid + h};
        }
        if (sm == slo) iv.first = mid;
        else iv.second = mid;
    }
    return iv;
}

// ---- RatPoly ----

void RatPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

RatPoly RatPoly::from_int(const IntPoly& p) {
    std::vector<Rat> v;
    v.reserve(p.coeffs().size());
    for (const auto& z : p.coeffs()) v.emplace_back(z);
    return RatPoly(std::move(v));
}

RatPoly add(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> v(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.c.size()) v[i] += a.c[i];
        if (i < b.c.size()) v[i] += b.c[i];
    }
    return RatPoly(std::move(v));
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> v(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.c.size()) v[i] += a.c[i];
        if (i < b.c.size()) v[i] -= b.c[i];
    }
    return RatPoly(std::move(v));
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> v(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    }
    return RatPoly(std::move(v));
}

RatPoly scale(const RatPoly& a, const Rat& k) {
    std::vector<Rat> v(a.c);
    for (auto& q : v) q *= k;
    return RatPoly(std::move(v));
}

Rat eval(const RatPoly& a, const Rat& x) {
    Rat r(0);
    for (int i = a.degree(); i >= 0; --i) r = r * x + a.c[i];
    return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw invalid_argument_error("RatPoly division by zero");
    std::vector<Rat> r(a.c);
    int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<Rat> q(a.degree() - db + 1, Rat(0));
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        Rat f = r[i] / b.c[db];
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c[j];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly A = a, B = b;
    while (!B.is_zero()) {
        auto [q, r] = divmod(A, B);
        A = B;
        B = r;
    }
    if (!A.is_zero()) A = scale(A, Rat(1) / A.c.back());
    return A;
}

std::pair<RatPoly, RatPoly> half_ext_gcd(const RatPoly& a, const RatPoly& b) {
    // returns (g, s) with s*a = g (mod b), g = gcd(a, b) monic
    RatPoly r0 = b, r1 = a;
    RatPoly s0, s1;
    s1.c = {Rat(1)};
    s1.normalize();
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = sub(s0, mul(q, s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if (!r0.is_zero()) {
        Rat inv = Rat(1) / r0.c.back();
        r0 = scale(r0, inv);
        s0 = scale(s0, inv);
    }
    return {r0, s0};
}

IntPoly clear_denominators(const RatPoly& a) {
    if (a.is_zero()) return IntPoly::zero();
    Int l(1);
    for (const auto& q : a.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> v;
    v.reserve(a.c.size());
    for (const auto& q : a.c) {
        Rat t = q * Rat(l);
        v.push_back(t.get_num());
    }
    return primitive_part(from_raw(std::move(v)));
}

RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    // Newton's divided differences
    size_t n = xs.size();
    if (n == 0 || ys.size() != n) throw invalid_argument_error("interpolate: bad sample count");
    std::vector<Rat> dd(ys);
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
            if (i == k) break;
        }
    RatPoly p;
    for (size_t i = n; i-- > 0;) {
        // p = p*(x - xs[i]) + dd[i]
        RatPoly lin(std::vector<Rat>{-xs[i], Rat(1)});
        p = mul(p, lin);
        if (p.c.empty()) p.c.resize(1, Rat(0));
        p.c[0] += dd[i];
        p.normalize();
    }
    return p;
}

// ---- elimination resultants ----

IntPoly elim_resultant(const IntPoly& p, const IntPoly& A, const IntPoly& B) {
    if (p.is_zero()) throw invalid_argument_error("elim_resultant: zero modulus");
    if (A.is_zero() && B.is_zero()) throw invalid_argument_error("elim_resultant: zero map");
    int dy = std::max(A.degree(), B.degree());
    int dx = p.degree();
    // samples k where deg_y(A - k*B) stays dy
    std::vector<Rat> xs, ys;
    Int k(0);
    long tries = 0;
    while ((int)xs.size() < dx + 1) {
        if (++tries > 8 * (dx + 4)) throw invalid_argument_error("elim_resultant: degenerate map");
        Int kv = k;
        // alternate 0, 1, -1, 2, -2, ...
        if (k > 0 && sgn(kv) > 0) k = -k;
        else k = -k + 1;
        Int top = A.coeff(dy) - kv * B.coeff(dy);
        if (top == 0) continue;
        IntPoly g = sub(A, scale(B, kv));
        // degree of g must be exactly dy for consistent product formula
        if (g.degree() != dy) continue;
        xs.emplace_back(kv);
        ys.emplace_back(resultant(p, g));
    }
    RatPoly r = interpolate(xs, ys);
    IntPoly out = clear_denominators(r);
    if (out.is_zero()) throw invalid_argument_error("elim_resultant: vanishing resultant");
    return out;
}

IntPoly sum_resultant(const IntPoly& p, const IntPoly& q) {
    if (p.degree() < 1 || q.degree() < 1)
        throw invalid_argument_error("sum_resultant needs degree >= 1");
    int dx = p.degree() * q.degree();
    std::vector<Rat> xs, ys;
    Int k(0);
    while ((int)xs.size() < dx + 1) {
        Int kv = k;
        if (k > 0) k = -k;
        else k = -k + 1;
        // q(kv - y) as a polynomial in y
        IntPoly lin = from_raw(std::vector<Int>{kv, Int(-1)});
        IntPoly qk = compose(q, lin);
        xs.emplace_back(kv);
        ys.emplace_back(resultant(p, qk));
    }
    RatPoly r = interpolate(xs, ys);
    IntPoly out = clear_denominators(r);
    return out;
}

IntPoly prod_resultant(const IntPoly& p, const IntPoly& q) {
    if (p.degree() < 1 || q.degree() < 1)
        throw invalid_argument_error("prod_resultant needs degree >= 1");
    if (q.coeff(0) == 0) throw invalid_argument_error("prod_resultant: q(0) = 0");
    int m = q.degree();
    int dx = p.degree() * q.degree();
    std::vector<Rat> xs, ys;
    Int k(0);
    while ((int)xs.size() < dx + 1) {
        Int kv = k;
        if (k > 0) k = -k;
        else k = -k + 1;
        // y^m q(kv/y) = sum_j q_j kv^j y^(m-j)
        std::vector<Int> v(m + 1, Int(0));
        Int kp(1);
        for (int j = 0; j <= m; ++j) {
            v[m - j] = q.coeff(j) * kp;
            kp *= kv;
        }
        IntPoly qk = from_raw(std::move(v));
        if (qk.degree() != m) continue; // cannot happen given q(0) != 0
        xs.emplace_back(kv);
        ys.emplace_back(resultant(p, qk));
    }
    RatPoly r = interpolate(xs, ys);
    return clear_denominators(r);
}

// ---- text format ----

namespace {

struct PolyParser {
    const std::string& s;
    size_t i = 0;
    explicit PolyParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    Int parse_uint() {
        skip_ws();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw invalid_argument_error("expected integer in polynomial: " + s);
        Int v(s.substr(i, j - i));
        i = j;
        return v;
    }

    // term := [rat] ['*'] ['x' ['^' uint]]
    // rat  := uint ['/' uint]
    std::pair<Rat, long> parse_term() {
        Rat coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Int n = parse_uint();
            Int d(1);
            if (consume('/')) d = parse_uint();
            coef = make_rat(n, d);
            have_coef = true;
        }
        consume('*');
        long expo = 0;
        skip_ws();
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            expo = 1;
            if (consume('^')) {
                Int e = parse_uint();
                if (e > 64000) throw invalid_argument_error("exponent too large");
                expo = e.get_si();
            }
        } else if (!have_coef) {
            throw invalid_argument_error("malformed polynomial term in: " + s);
        }
        return {coef, expo};
    }
};

} // namespace

std::pair<IntPoly, Int> parse_poly_cleared(const std::string& s) {
    PolyParser pp(s);
    std::map<long, Rat> terms;
    bool first = true;
    while (!pp.eof()) {
        int sg = 1;
        if (pp.consume('-')) sg = -1;
        else if (pp.consume('+')) {
            if (first) throw invalid_argument_error("polynomial cannot start with '+'");
        } else if (!first) {
            throw invalid_argument_error("expected '+' or '-' in polynomial: " + s);
        }
        // allow consecutive signs like "- -" never; keep strict
        auto [coef, expo] = pp.parse_term();
        terms[expo] += sg * coef;
        first = false;
    }
    if (first) throw invalid_argument_error("empty polynomial");
    long maxe = 0;
    for (const auto& [e, c] : terms)
        if (c != 0 && e > maxe) maxe = e;
    Int lcm(1);
    for (const auto& [e, c] : terms)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> v(maxe + 1, Int(0));
    for (const auto& [e, c] : terms) {
        Rat t = c * Rat(lcm);
        v[e] = t.get_num();
    }
    return {from_raw(std::move(v)), lcm};
}

IntPoly parse_poly(const std::string& s) { return parse_poly_cleared(s).first; }

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Int& a = p.coeff(i);
        if (a == 0) continue;
        Int aa = abs(a);
        if (out.empty()) {
            if (sgn(a) < 0) out += "-";
        } else {
            out += sgn(a) < 0 ? " - " : " + ";
        }
        bool unit = (aa == 1);
        if (i == 0) {
            out += aa.get_str();
        } else {
            if (!unit) out += aa.get_str() + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace htdyn
