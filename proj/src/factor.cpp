#include "htdyn/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace htdyn {

namespace {

// ---- arithmetic mod a word-size prime ----

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return (u64)((u128)a * b % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

using FpPoly = std::vector<u64>; // constant first, no trailing zeros

void fp_normalize(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return (int)a.size() - 1; }

FpPoly fp_reduce(const IntPoly& f, const Fp& F) {
    FpPoly r(f.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) {
        Int m = f.coeffs()[i] % (long)F.p;
        long v = m.get_si();
        if (v < 0) v += (long)F.p;
        r[i] = (u64)v;
    }
    fp_normalize(r);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const Fp& F) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    fp_normalize(r);
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const Fp& F) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    fp_normalize(r);
    return r;
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, const Fp& F) {
    int db = fp_deg(b);
    u64 binv = F.inv(b.back());
    while (fp_deg(a) >= db) {
        u64 c = F.mul(a.back(), binv);
        int shift = fp_deg(a) - db;
        for (int j = 0; j <= db; ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
        fp_normalize(a);
    }
    return a;
}

FpPoly fp_divexact(FpPoly a, const FpPoly& b, const Fp& F) {
    int db = fp_deg(b);
    u64 binv = F.inv(b.back());
    FpPoly q(fp_deg(a) - db + 1, 0);
    while (fp_deg(a) >= db) {
        u64 c = F.mul(a.back(), binv);
        int shift = fp_deg(a) - db;
        q[shift] = c;
        for (int j = 0; j <= db; ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
        fp_normalize(a);
    }
    return q;
}

FpPoly fp_monic(FpPoly a, const Fp& F) {
    if (a.empty()) return a;
    u64 inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const Fp& F) {
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, F);
}

FpPoly fp_deriv(const FpPoly& a, const Fp& F) {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], i % F.p);
    fp_normalize(r);
    return r;
}

FpPoly fp_powmod(FpPoly base, const Int& e, const FpPoly& mod, const Fp& F) {
    FpPoly r{1};
    base = fp_rem(std::move(base), mod, F);
    for (long bit = (long)mpz_sizeinbase(e.get_mpz_t(), 2) - 1; bit >= 0; --bit) {
        r = fp_rem(fp_mul(r, r, F), mod, F);
        if (mpz_tstbit(e.get_mpz_t(), bit)) r = fp_rem(fp_mul(r, base, F), mod, F);
    }
    return r;
}

// extended gcd: returns (g, s, t) monic g with s*a + t*b = g
void fp_ext_gcd(const FpPoly& a, const FpPoly& b, const Fp& F, FpPoly& g, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // q, r of r0 / r1
        FpPoly rem = r0;
        int db = fp_deg(r1);
        u64 binv = F.inv(r1.back());
        FpPoly q(std::max(0, fp_deg(r0) - db) + 1, 0);
        while (fp_deg(rem) >= db) {
            u64 c = F.mul(rem.back(), binv);
            int shift = fp_deg(rem) - db;
            q[shift] = c;
            for (int j = 0; j <= db; ++j) rem[shift + j] = F.sub(rem[shift + j], F.mul(c, r1[j]));
            fp_normalize(rem);
        }
        fp_normalize(q);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, F), F);
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, F), F);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    u64 inv = F.inv(r0.back());
    for (auto& c : r0) c = F.mul(c, inv);
    for (auto& c : s0) c = F.mul(c, inv);
    for (auto& c : t0) c = F.mul(c, inv);
    g = std::move(r0);
    s = std::move(s0);
    t = std::move(t0);
}

// distinct-degree factorization of monic squarefree f; returns (product, d)
std::vector<std::pair<FpPoly, int>> fp_ddf(FpPoly f, const Fp& F) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly h{0, 1}; // x
    int d = 0;
    while (fp_deg(f) > 0) {
        ++d;
        if (2 * d > fp_deg(f)) {
            out.emplace_back(f, fp_deg(f));
            break;
        }
        h = fp_powmod(std::move(h), Int((long)F.p), f, F);
        FpPoly hx = fp_sub(h, FpPoly{0, 1}, F);
        FpPoly g = fp_gcd(f, hx, F);
        if (fp_deg(g) > 0) {
            out.emplace_back(g, d);
            f = fp_divexact(std::move(f), g, F);
            h = fp_rem(std::move(h), f, F);
        }
    }
    return out;
}

// equal-degree splitting (Cantor-Zassenhaus, odd p)
void fp_edf(const FpPoly& f, int d, const Fp& F, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    int n = fp_deg(f);
    if (n == d) {
        out.push_back(fp_monic(f, F));
        return;
    }
    Int pd = pow_int(Int((long)F.p), d);
    Int e = (pd - 1) / 2;
    while (true) {
        FpPoly r(n);
        for (int i = 0; i < n; ++i) r[i] = rng() % F.p;
        fp_normalize(r);
        if (fp_deg(r) < 1) continue;
        FpPoly b = fp_powmod(r, e, f, F);
        b = fp_sub(b, FpPoly{1}, F);
        FpPoly g = fp_gcd(f, b, F);
        if (fp_deg(g) > 0 && fp_deg(g) < n) {
            fp_edf(g, d, F, rng, out);
            fp_edf(fp_divexact(f, g, F), d, F, rng, out);
            return;
        }
    }
}

std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f, const Fp& F, std::mt19937_64& rng) {
    std::vector<FpPoly> out;
    for (auto& [g, d] : fp_ddf(fp_monic(f, F), F)) fp_edf(g, d, F, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- arithmetic mod m = p^k (Int coefficients in [0, m)) ----

IntPoly zp_reduce(const IntPoly& a, const Int& m) {
    std::vector<Int> v(a.coeffs());
    for (auto& c : v) {
        c %= m;
        if (c < 0) c += m;
    }
    return from_raw(std::move(v));
}

IntPoly zp_balanced(const IntPoly& a, const Int& m) {
    std::vector<Int> v(a.coeffs());
    Int half = m / 2;
    for (auto& c : v) {
        c %= m;
        if (c < 0) c += m;
        if (c > half) c -= m;
    }
    return from_raw(std::move(v));
}

IntPoly zp_mul(const IntPoly& a, const IntPoly& b, const Int& m) { return zp_reduce(mul(a, b), m); }
IntPoly zp_sub(const IntPoly& a, const IntPoly& b, const Int& m) { return zp_reduce(sub(a, b), m); }
IntPoly zp_add(const IntPoly& a, const IntPoly& b, const Int& m) { return zp_reduce(add(a, b), m); }

// division by monic h, coefficients mod m
std::pair<IntPoly, IntPoly> zp_divmod_monic(const IntPoly& a, const IntPoly& h, const Int& m) {
    std::vector<Int> r(a.coeffs());
    int dh = h.degree();
    int dr = (int)r.size() - 1;
    if (dr < dh) return {IntPoly::zero(), zp_reduce(a, m)};
    std::vector<Int> q(dr - dh + 1, Int(0));
    for (int i = dr; i >= dh; --i) {
        Int c = r[i] % m;
        if (c < 0) c += m;
        if (c != 0) {
            q[i - dh] = c;
            for (int j = 0; j <= dh; ++j) {
                r[i - dh + j] -= c * h.coeff(j);
            }
        }
        r[i] = 0;
    }
    return {zp_reduce(from_raw(std::move(q)), m), zp_reduce(from_raw(std::move(r)), m)};
}

// one quadratic Hensel step: modulus m -> m^2 (von zur Gathen 15.10);
// h monic, f = g*h (mod m), s*g + t*h = 1 (mod m)
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t, const Int& m) {
    Int m2 = m * m;
    IntPoly e = zp_sub(f, mul(g, h), m2);
    auto [q, r] = zp_divmod_monic(zp_mul(s, e, m2), h, m2);
    IntPoly g1 = zp_add(g, zp_add(zp_mul(t, e, m2), zp_mul(q, g, m2), m2), m2);
    IntPoly h1 = zp_add(h, r, m2);
    IntPoly b = zp_sub(zp_add(zp_mul(s, g1, m2), zp_mul(t, h1, m2), m2), IntPoly::constant(Int(1)), m2);
    auto [c, d] = zp_divmod_monic(zp_mul(s, b, m2), h1, m2);
    IntPoly s1 = zp_sub(s, d, m2);
    IntPoly t1 = zp_sub(t, zp_add(zp_mul(t, b, m2), zp_mul(c, g1, m2), m2), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

IntPoly lift_fp(const FpPoly& a) {
    std::vector<Int> v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = Int((unsigned long)a[i]);
    return from_raw(std::move(v));
}

// lift "f = lead * prod(monic factors)" from mod p to mod p^(2^steps),
// recursively splitting the factor list in two
void hensel_tree(const IntPoly& f, const std::vector<FpPoly>& factors, size_t lo, size_t hi,
                 const Fp& F, const Int& target, int steps, std::vector<IntPoly>& out) {
    if (hi - lo == 1) {
        // single factor: make f monic mod target (lc of f is invertible mod p)
        Int m = target;
        Int lc = f.lead() % m;
        if (lc < 0) lc += m;
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t()) == 0)
            throw invalid_argument_error("hensel: leading coefficient not invertible");
        std::vector<Int> v(f.coeffs());
        for (auto& c : v) {
            c = c * inv % m;
            if (c < 0) c += m;
        }
        out.push_back(from_raw(std::move(v)));
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    FpPoly gp{(u64)mpz_fdiv_ui(f.lead().get_mpz_t(), F.p)};
    for (size_t i = lo; i < mid; ++i) gp = fp_mul(gp, factors[i], F);
    FpPoly hp{1};
    for (size_t i = mid; i < hi; ++i) hp = fp_mul(hp, factors[i], F);
    FpPoly gg, ss, tt;
    fp_ext_gcd(gp, hp, F, gg, ss, tt);
    if (fp_deg(gg) != 0) throw invalid_argument_error("hensel: factors not coprime");
    IntPoly g = lift_fp(gp), h = lift_fp(hp), s = lift_fp(ss), t = lift_fp(tt);
    Int m{(long)F.p};
    for (int i = 0; i < steps; ++i) {
        hensel_step(zp_reduce(f, m * m), g, h, s, t, m);
        m *= m;
    }
    hensel_tree(zp_reduce(g, target), factors, lo, mid, F, target, steps, out);
    hensel_tree(zp_reduce(h, target), factors, mid, hi, F, target, steps, out);
}

// subset-sum bitset of reachable factor-degree totals
std::vector<bool> degree_set(const std::vector<int>& degs, int n) {
    std::vector<bool> can(n + 1, false);
    can[0] = true;
    for (int d : degs)
        for (int i = n; i >= d; --i)
            if (can[i - d]) can[i] = true;
    return can;
}

const long kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                        61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127};

// Mignotte-style bound on coefficients of any monic-lifted divisor product
// times the leading coefficient
Int divisor_bound(const IntPoly& f) {
    Int s(0);
    for (const auto& c : f.coeffs()) s += c * c;
    Int l2 = isqrt(s) + 1;
    Int b = l2 + abs(f.lead());
    Int two_n(1);
    mpz_mul_2exp(two_n.get_mpz_t(), two_n.get_mpz_t(), f.degree() + 1);
    return b * two_n;
}

// factor a primitive squarefree polynomial of degree >= 1
FactorOutcome factor_squarefree(const IntPoly& f0, const FactorBudget& budget) {
    FactorOutcome out;
    IntPoly f = normalized(f0);
    int n = f.degree();
    if (n <= 1) {
        out.factors.emplace_back(f, 1);
        return out;
    }
    if (n > budget.max_degree) {
        out.factors.emplace_back(f, 1);
        out.certified = false;
        return out;
    }

    // degree sieve over several good primes
    struct PrimeInfo {
        Fp F;
        FpPoly fp;
        std::vector<int> ddf_degrees; // factor degrees (expanded)
    };
    std::vector<PrimeInfo> infos;
    for (long p : kPrimes) {
        if ((int)infos.size() >= budget.sieve_primes) break;
        Fp F{(u64)p};
        if (mpz_fdiv_ui(f.lead().get_mpz_t(), p) == 0) continue;
        FpPoly fp = fp_reduce(f, F);
        if (fp_deg(fp) != n) continue;
        if (fp_deg(fp_gcd(fp, fp_deriv(fp, F), F)) != 0) continue;
        PrimeInfo info{F, fp, {}};
        for (auto& [g, d] : fp_ddf(fp_monic(fp, F), F)) {
            int cnt = fp_deg(g) / d;
            for (int i = 0; i < cnt; ++i) info.ddf_degrees.push_back(d);
        }
        infos.push_back(std::move(info));
    }
    if (infos.empty()) {
        // pathological input (lead divisible by all small primes); give up
        out.factors.emplace_back(f, 1);
        out.certified = false;
        return out;
    }

    std::vector<bool> feasible(n + 1, true);
    for (const auto& info : infos) {
        auto can = degree_set(info.ddf_degrees, n);
        for (int i = 0; i <= n; ++i) feasible[i] = feasible[i] && can[i];
    }
    bool proper_possible = false;
    for (int i = 1; i < n; ++i)
        if (feasible[i]) proper_possible = true;
    if (!proper_possible) {
        out.factors.emplace_back(f, 1); // irreducible, proved by the sieve
        return out;
    }

    // full modular factorization at the prime with the fewest factors
    const PrimeInfo* best = &infos[0];
    for (const auto& info : infos)
        if (info.ddf_degrees.size() < best->ddf_degrees.size()) best = &info;
    std::mt19937_64 rng(0x5eed0000u ^ (u64)best->F.p ^ ((u64)n << 32));
    std::vector<FpPoly> modular = fp_factor_squarefree(best->fp, best->F, rng);
    int r = (int)modular.size();
    if (r > budget.max_modular_factors) {
        out.factors.emplace_back(f, 1);
        out.certified = false;
        return out;
    }
    if (r == 1) {
        out.factors.emplace_back(f, 1);
        return out;
    }

    // Hensel lift to p^(2^steps) > 2 * bound
    Int bound = divisor_bound(f) * abs(f.lead()) * 2;
    int steps = 0;
    Int target{(long)best->F.p};
    while (target <= bound) {
        target *= target;
        ++steps;
    }
    std::vector<IntPoly> lifted;
    hensel_tree(zp_reduce(f, target), modular, 0, modular.size(), best->F, target, steps, lifted);

    // recombination
    std::vector<int> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = (int)i;
    IntPoly rem = f;
    long tested = 0;
    bool budget_hit = false;

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        IntPoly prodp = IntPoly::constant(rem.lead());
        for (int idx : subset) prodp = zp_mul(prodp, lifted[idx], target);
        IntPoly cand = primitive_part(zp_balanced(prodp, target));
        if (cand.degree() < 1) return false;
        auto q = try_divide(rem, cand);
        if (!q) return false;
        out.factors.emplace_back(normalized(cand), 1);
        rem = primitive_part(*q);
        return true;
    };

    for (int card = 1; !alive.empty() && card <= (int)alive.size() / 2; ++card) {
        // iterate subsets of the alive set of this cardinality
        std::vector<int> idx(card);
        for (int i = 0; i < card; ++i) idx[i] = i;
        bool more = (int)alive.size() >= card;
        while (more) {
            if (++tested > budget.max_subsets) {
                budget_hit = true;
                break;
            }
            std::vector<int> subset;
            subset.reserve(card);
            int degsum = 0;
            for (int i : idx) {
                subset.push_back(alive[i]);
                degsum += lifted[alive[i]].degree();
            }
            if (feasible[degsum] && try_subset(subset)) {
                // remove used, restart this cardinality
                std::vector<int> next;
                for (int a : alive)
                    if (std::find(subset.begin(), subset.end(), a) == subset.end()) next.push_back(a);
                alive = std::move(next);
                if ((int)alive.size() < card) break;
                for (int i = 0; i < card; ++i) idx[i] = i;
                continue;
            }
            // advance combination
            int i = card - 1;
            while (i >= 0 && idx[i] == (int)alive.size() - card + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (budget_hit) break;
    }
    if (rem.degree() > 0) out.factors.emplace_back(normalized(rem), 1);
    out.certified = !budget_hit;
    return out;
}

} // namespace

FactorOutcome factor_int_poly(const IntPoly& p, const FactorBudget& budget) {
    if (p.is_zero()) throw invalid_argument_error("factor of zero polynomial");
    FactorOutcome out;
    for (const auto& [sqf, mult] : squarefree_decomposition(p)) {
        FactorOutcome part = factor_squarefree(sqf, budget);
        if (!part.certified) out.certified = false;
        for (auto& [g, m1] : part.factors) out.factors.emplace_back(g, m1 * mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

int irreducible_status(const IntPoly& p, const FactorBudget& budget) {
    if (p.degree() < 1) throw invalid_argument_error("irreducibility needs degree >= 1");
    FactorOutcome out = factor_squarefree(normalized(p), budget);
    if (out.factors.size() == 1 && out.factors[0].second == 1 &&
        out.factors[0].first.degree() == p.degree())
        return out.certified ? 1 : -1;
    return 0;
}

} // namespace htdyn
