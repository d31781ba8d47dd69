#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "htdyn/intpoly.hpp"

#include <complex>
#include <random>

using namespace htdyn;

namespace {

IntPoly P(std::initializer_list<long> c) { return IntPoly(c); }

// brute-force resultant from double roots, test-only oracle for small inputs
double resultant_numeric(const std::vector<std::complex<double>>& ra,
                         const std::vector<std::complex<double>>& rb,
                         double la, double lb) {
    std::complex<double> r = std::pow(la, (double)rb.size()) * std::pow(lb, (double)ra.size());
    for (const auto& x : ra)
        for (const auto& y : rb) r *= (x - y);
    return r.real();
}

IntPoly random_poly(std::mt19937_64& rng, int deg, long bound) {
    std::vector<Int> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back((long)(rng() % (2 * bound + 1)) - bound);
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

// rational-arithmetic Sturm chain, independent of the pseudo-remainder path
int sturm_count_oracle(const IntPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(RatPoly::from_int(p));
    chain.push_back(RatPoly::from_int(derivative(p)));
    while (chain.back().degree() > 0) {
        auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(scale(r, Rat(-1)));
    }
    auto vars = [&](bool neg) {
        int v = 0, prev = 0;
        for (const auto& q : chain) {
            if (q.is_zero()) continue;
            int s = sgn(q.c.back());
            if (neg && q.degree() % 2 != 0) s = -s;
            if (prev != 0 && s != prev) ++v;
            if (s != 0) prev = s;
        }
        return v;
    };
    return vars(true) - vars(false);
}

} // namespace

TEST_CASE("basic arithmetic and normalization") {
    IntPoly a = P({1, 2, 3});
    IntPoly b = P({-1, -2, -3});
    CHECK(add(a, b).is_zero());
    CHECK(mul(a, IntPoly::zero()).is_zero());
    CHECK(P({0, 0, 0}).is_zero());
    CHECK(P({5}).degree() == 0);
    CHECK(mul(P({1, 1}), P({-1, 1})) == P({-1, 0, 1}));
    CHECK(compose(P({0, 0, 1}), P({-2, 0, 1})) == P({4, 0, -4, 0, 1}));
}

TEST_CASE("content and primitive part") {
    CHECK(content(P({6, -9, 12})) == 3);
    CHECK(primitive_part(P({6, -9, 12})) == P({2, -3, 4}));
    CHECK(primitive_part(P({-4, -8})) == P({-1, -2}));
    CHECK(normalized(P({4, -8})) == P({-1, 2}));
}

TEST_CASE("resultant known values") {
    // Res(x^2-2, x^2-3) = 1 (product formula over +-sqrt2, +-sqrt3)
    CHECK(resultant(P({-2, 0, 1}), P({-3, 0, 1})) == 1);
    // shared root
    CHECK(resultant(P({-1, 1}), P({-1, 1})) == 0);
    // Res(x^2-x-1, x) = p(0) up to sign = -1
    CHECK(resultant(P({-1, -1, 1}), P({0, 1})) == -1);
}

TEST_CASE("resultant matches product formula on random small polys") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        IntPoly a = random_poly(rng, 2 + (int)(rng() % 3), 4);
        IntPoly b = random_poly(rng, 2 + (int)(rng() % 3), 4);
        Int r = resultant(a, b);
        // oracle via approx roots at double precision
        auto roots_of = [](const IntPoly& p) {
            std::vector<std::complex<double>> rs;
            // simple Durand-Kerner at double precision, oracle only
            int n = p.degree();
            std::vector<std::complex<double>> z(n);
            for (int i = 0; i < n; ++i) z[i] = std::polar(1.0 + 0.3 * i, 0.7 + 2.39996 * i);
            for (int it = 0; it < 500; ++it) {
                for (int i = 0; i < n; ++i) {
                    std::complex<double> v = 0, d = 1;
                    for (int k = n; k >= 0; --k) v = v * z[i] + std::complex<double>(p.coeff(k).get_d());
                    for (int j = 0; j < n; ++j)
                        if (j != i) d *= (z[i] - z[j]);
                    z[i] -= v / (std::complex<double>(p.lead().get_d()) * d);
                }
            }
            for (auto& w : z) rs.push_back(w);
            return rs;
        };
        double oracle = resultant_numeric(roots_of(a), roots_of(b), a.lead().get_d(), b.lead().get_d());
        double got = r.get_d();
        double scale = std::max(1.0, std::fabs(oracle));
        CHECK(std::fabs(got - oracle) / scale < 1e-5);
    }
}

TEST_CASE("resultant symmetry and multiplicativity") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        IntPoly a = random_poly(rng, 1 + (int)(rng() % 3), 5);
        IntPoly b = random_poly(rng, 1 + (int)(rng() % 3), 5);
        IntPoly c = random_poly(rng, 1 + (int)(rng() % 2), 5);
        Int rab = resultant(a, b), rba = resultant(b, a);
        int s = (a.degree() * b.degree()) % 2 ? -1 : 1;
        CHECK(rab == s * rba);
        CHECK(resultant(a, mul(b, c)) == resultant(a, b) * resultant(a, c));
    }
}

TEST_CASE("squarefree part") {
    // (x-1)^2 (x+2) -> (x-1)(x+2) up to sign
    IntPoly p = mul(mul(P({-1, 1}), P({-1, 1})), P({2, 1}));
    CHECK(normalized(squarefree_part(p)) == normalized(mul(P({-1, 1}), P({2, 1}))));
    CHECK(squarefree_part(P({-1, -1, 1})) == P({-1, -1, 1}));
    CHECK(normalized(squarefree_part(P({0, 0, 0, 1}))) == P({0, 1}));
    auto dec = squarefree_decomposition(mul(mul(P({-1, 1}), P({-1, 1})), P({2, 1})));
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].second == 1);
    CHECK(dec[1].second == 2);
}

TEST_CASE("sturm counts") {
    CHECK(sturm_count_all(P({-5, 0, 1})) == 2);
    CHECK(sturm_count_all(P({1, 0, 1})) == 0);
    // x^3 - 3x + 1: positive discriminant depressed cubic, three real roots
    CHECK(sturm_count_all(P({1, -3, 0, 1})) == 3);
    CHECK(sturm_count(P({-2, 0, 1}), Rat(0), Rat(2)) == 1);
    CHECK(sturm_count(P({-2, 0, 1}), Rat(-2), Rat(0)) == 1);
    CHECK_THROWS_AS((void)sturm_count(P({-4, 0, 1}), Rat(2), Rat(3)), invalid_argument_error);
}

TEST_CASE("sturm matches rational-arithmetic oracle on random squarefree polys") {
    std::mt19937_64 rng(23);
    int tested = 0;
    while (tested < 60) {
        IntPoly p = random_poly(rng, 2 + (int)(rng() % 7), 6);
        if (poly_gcd(p, derivative(p)).degree() != 0) continue;
        CHECK(sturm_count_all(p) == sturm_count_oracle(p));
        ++tested;
    }
}

TEST_CASE("isolate real roots") {
    auto iv = isolate_real_roots(P({-2, 0, 1}));
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].first < iv[0].second);
    CHECK(iv[0].second <= iv[1].first);
    CHECK(isolate_real_roots(P({1, 0, 1})).empty());
    // golden ratio poly: roots near -0.618, 1.618
    auto gv = isolate_real_roots(P({-1, -1, 1}));
    REQUIRE(gv.size() == 2);
    auto r0 = refine_isolating_interval(P({-1, -1, 1}), gv[0], Rat(1, 1000000));
    auto r1 = refine_isolating_interval(P({-1, -1, 1}), gv[1], Rat(1, 1000000));
    CHECK(std::fabs(Rat((r0.first + r0.second) / 2).get_d() + 0.6180339887) < 1e-5);
    CHECK(std::fabs(Rat((r1.first + r1.second) / 2).get_d() - 1.6180339887) < 1e-5);
}

TEST_CASE("roots with power-of-two denominators are handled") {
    // root exactly at 1/2 lands on a bisection midpoint
    IntPoly p = P({-1, 2}); // 2x - 1
    auto iv = isolate_real_roots(p);
    REQUIRE(iv.size() == 1);
    auto r = refine_isolating_interval(p, iv[0], Rat(1, 1 << 20));
    CHECK(r.first < Rat(1, 2));
    CHECK(Rat(1, 2) < r.second);
}

TEST_CASE("elimination resultants") {
    IntPoly phi = P({-1, -1, 1});         // roots phi, -1/phi
    IntPoly sqrt2 = P({-2, 0, 1});        // roots +-sqrt2
    // sum: roots phi + s2 etc, degree 4
    IntPoly s = sum_resultant(phi, sqrt2);
    CHECK(s.degree() == 4);
    // phi + sqrt2 ~ 3.032 must be a root
    auto ivs = isolate_real_roots(squarefree_part(s));
    bool found = false;
    for (auto& iv : ivs) {
        auto r = refine_isolating_interval(squarefree_part(s), iv, Rat(1, 1 << 24));
        double m = Rat((r.first + r.second) / 2).get_d();
        if (std::fabs(m - (1.6180339887 + 1.4142135623)) < 1e-5) found = true;
    }
    CHECK(found);
    // product: phi * (-1/phi) = -1 must be a root of prod_resultant
    IntPoly pr = prod_resultant(phi, phi);
    CHECK(sign_at(pr, Rat(-1)) == 0);
    // elim: image of roots of x^2-2 under A/B = (y^2+y)/1 : roots 2+-sqrt2
    IntPoly img = elim_resultant(sqrt2, P({0, 1, 1}), P({1}));
    CHECK(img.degree() == 2);
    CHECK(sign_at(img, Rat(2)) != 0);
    IntPoly target = P({2, -4, 1}); // (x-2)^2 - 2
    CHECK(normalized(img) == normalized(target));
}

TEST_CASE("poly text format round trip") {
    IntPoly p = parse_poly("x^2 - 7/2");
    CHECK(p == P({-7, 0, 2}));
    CHECK(parse_poly("x^3-3x") == P({0, -3, 0, 1}));
    CHECK(parse_poly(" -x + 5 ") == P({5, -1}));
    CHECK(parse_poly("3*x^2+1/3") == P({1, 0, 9}));
    CHECK(parse_poly(to_string(P({-1, -1, 1}))) == P({-1, -1, 1}));
    CHECK_THROWS_AS(parse_poly(""), invalid_argument_error);
    CHECK_THROWS_AS(parse_poly("x^^2"), invalid_argument_error);
}

TEST_CASE("interpolation and rational poly helpers") {
    // interpolate x^2 - 3 through 4 points
    std::vector<Rat> xs{Rat(0), Rat(1), Rat(2), Rat(-1)};
    std::vector<Rat> ys;
    for (auto& x : xs) ys.push_back(x * x - 3);
    RatPoly r = interpolate(xs, ys);
    CHECK(clear_denominators(r) == P({-3, 0, 1}));
    auto [g, s] = half_ext_gcd(RatPoly::from_int(P({0, 1})), RatPoly::from_int(P({-2, 0, 1})));
    // s * x = g mod (x^2 - 2), g must be constant 1: s = x/2
    CHECK(g.degree() == 0);
    RatPoly prod = mul(s, RatPoly::from_int(P({0, 1})));
    auto [q2, rem2] = divmod(prod, RatPoly::from_int(P({-2, 0, 1})));
    CHECK(rem2.degree() == 0);
    CHECK(rem2.c[0] == 1);
}
