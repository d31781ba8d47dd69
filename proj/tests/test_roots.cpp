#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "htdyn/roots.hpp"

#include <cmath>
#include <random>

using namespace htdyn;

namespace {
IntPoly P(std::initializer_list<long> c) { return IntPoly(c); }
Rat eps10() { return Rat(1, Int("10000000000")); }
} // namespace

TEST_CASE("pure imaginary pair") {
    auto balls = approx_roots(P({1, 0, 1}), eps10());
    REQUIRE(balls.size() == 2);
    for (const auto& b : balls) {
        CHECK(!b.exact_real);
        CHECK(std::fabs(b.re_d()) < 1e-9);
        CHECK(std::fabs(std::fabs(b.im_d()) - 1.0) < 1e-9);
        CHECK(b.rad <= eps10());
    }
}

TEST_CASE("golden ratio roots are exact-real") {
    auto balls = approx_roots(P({-1, -1, 1}), eps10());
    REQUIRE(balls.size() == 2);
    CHECK(balls[0].exact_real);
    CHECK(balls[1].exact_real);
    CHECK(std::fabs(balls[0].re_d() + 0.61803398874989) < 1e-9);
    CHECK(std::fabs(balls[1].re_d() - 1.61803398874989) < 1e-9);
    CHECK(balls[0].im == 0);
}

TEST_CASE("unit circle pair of 2x^2-x+2") {
    auto balls = approx_roots(P({2, -1, 2}), eps10());
    REQUIRE(balls.size() == 2);
    for (const auto& b : balls) {
        double mod = std::hypot(b.re_d(), b.im_d());
        CHECK(std::fabs(mod - 1.0) < 1e-8);
        CHECK(std::fabs(b.re_d() - 0.25) < 1e-8);
    }
}

TEST_CASE("multiplicities expand") {
    // (x-1)^2 (x^2+1)
    IntPoly p = mul(mul(P({-1, 1}), P({-1, 1})), P({1, 0, 1}));
    auto balls = approx_roots(p, eps10());
    REQUIRE(balls.size() == 4);
    int ones = 0;
    for (const auto& b : balls)
        if (b.exact_real && std::fabs(b.re_d() - 1.0) < 1e-9) {
            ++ones;
            CHECK(b.multiplicity == 2);
        }
    CHECK(ones == 2);
}

TEST_CASE("real count agrees with sturm on random polys") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 25; ++iter) {
        int deg = 2 + (int)(rng() % 7);
        std::vector<Int> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back((long)(rng() % 17) - 8);
        if (c.back() == 0) c.back() = 3;
        IntPoly p(std::move(c));
        if (p.degree() < 1) continue;
        IntPoly sf = squarefree_part(p);
        if (sf.degree() < 1) continue;
        int nreal = sturm_count_all(sf);
        auto balls = approx_roots_squarefree(sf, Rat(1, Int("1000000000000")));
        int got_real = 0;
        for (const auto& b : balls)
            if (b.exact_real) ++got_real;
        CHECK((int)balls.size() == sf.degree());
        CHECK(got_real == nreal);
        // nonreal balls have imaginary part provably separated from zero
        for (const auto& b : balls)
            if (!b.exact_real) CHECK(abs(b.im) > b.rad);
    }
}

TEST_CASE("disjointness of all balls") {
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 10; ++iter) {
        int deg = 3 + (int)(rng() % 5);
        std::vector<Int> c;
        for (int i = 0; i <= deg; ++i) c.emplace_back((long)(rng() % 11) - 5);
        if (c.back() == 0) c.back() = 2;
        IntPoly p(std::move(c));
        IntPoly sf = squarefree_part(p);
        if (sf.degree() < 2) continue;
        auto balls = approx_roots_squarefree(sf, Rat(1, 1 << 30));
        for (size_t i = 0; i < balls.size(); ++i)
            for (size_t j = i + 1; j < balls.size(); ++j) {
                Rat dx = balls[i].re - balls[j].re;
                Rat dy = balls[i].im - balls[j].im;
                Rat d2 = dx * dx + dy * dy;
                Rat rs = balls[i].rad + balls[j].rad;
                CHECK(d2 > rs * rs);
            }
    }
}

TEST_CASE("isolating intervals converge to approx_roots centers") {
    IntPoly p = P({1, -3, 0, 1}); // three real roots
    auto ivs = isolate_real_roots(p);
    auto balls = approx_roots(p, Rat(1, Int("1000000000000")));
    REQUIRE(ivs.size() == 3);
    REQUIRE(balls.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        auto r = refine_isolating_interval(p, ivs[i], Rat(1, Int("10000000000000")));
        double mid = Rat((r.first + r.second) / 2).get_d();
        CHECK(std::fabs(mid - balls[i].re_d()) < 1e-9);
    }
}

TEST_CASE("big coefficient polynomial still certifies") {
    // x^4 - 10^12 x^2 + 1: wildly separated real roots
    IntPoly p = IntPoly(std::vector<Int>{Int(1), Int(0), -Int("1000000000000"), Int(0), Int(1)});
    auto balls = approx_roots(p, Rat(1, 1000000));
    REQUIRE(balls.size() == 4);
    for (const auto& b : balls) CHECK(b.exact_real);
}

TEST_CASE("degree one and zero roots") {
    auto balls = approx_roots(P({0, 0, 2, 0, 0, 1}), eps10()); // x^2(x^3+2)... actually 2x^2+x^5
    // p = x^2 (x^3 + 2)
    REQUIRE(balls.size() == 5);
    int zero_mult = 0;
    for (const auto& b : balls)
        if (b.re == 0 && b.im == 0 && b.rad == 0) ++zero_mult;
    CHECK(zero_mult == 2);
}
