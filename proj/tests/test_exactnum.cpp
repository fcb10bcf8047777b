#include <random>

#include "appell/linsolve.hpp"
#include "appell/series.hpp"
#include "doctest.h"

using namespace appell;

namespace {

// Deterministic small rationals for property tests.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(uint64_t seed) : g(seed) {}
    Rat rat(long bound = 20) {
        std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
        long n = num(g);
        if (n == 0) n = 1;
        return appell::rat(n, den(g));
    }
    UniPoly poly(int maxdeg) {
        std::uniform_int_distribution<int> d(0, maxdeg);
        int deg = d(g);
        std::vector<Rat> c;
        for (int i = 0; i <= deg; ++i) c.push_back(rat(9));
        return UniPoly(std::move(c));
    }
    RatFunc ratfunc(int maxdeg) {
        UniPoly num = poly(maxdeg), den = poly(maxdeg);
        while (den.is_zero()) den = poly(maxdeg);
        return RatFunc(num, den);
    }
};

TS1 taylor_at_origin(const RatFunc& f, int order) {
    GenSeries1 g{Rat(0), TS1::constant(Rat(1), order)};
    GenSeries1 r = g.mul_ratfunc(f);
    REQUIRE(r.alpha >= 0);
    REQUIRE(is_integer(r.alpha));
    TS1 out(order);
    for (int k = 0; k <= r.body.order(); ++k) {
        long abs = to_long(r.alpha) + k;
        if (abs <= order) out.set((int)abs, r.body[k]);
    }
    return out;
}

}  // namespace

TEST_CASE("ratfunc normalization examples") {
    UniPoly t2m1({std::vector<Rat>{Rat(-1), Rat(0), Rat(1)}});
    UniPoly tm1({std::vector<Rat>{Rat(-1), Rat(1)}});
    RatFunc f(t2m1, tm1);
    CHECK(f.is_polynomial());
    CHECK(f.num().str() == "1 + t");

    RatFunc z(UniPoly::zero(), tm1);
    CHECK(z.is_zero());
    CHECK(z.den().degree() == 0);

    UniPoly n({std::vector<Rat>{Rat(0), Rat(6), Rat(2)}});  // 2t^2 + 6t
    UniPoly d({std::vector<Rat>{Rat(0), Rat(2)}});          // 2t
    RatFunc g(n, d);
    CHECK(g.is_polynomial());
    CHECK(g.num().str() == "3 + t");
}

TEST_CASE("ratfunc field properties") {
    Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        RatFunc f = rng.ratfunc(3), g = rng.ratfunc(3);
        if (g.is_zero()) continue;
        CHECK((f / g) * g == f);
        CHECK((f + (-f)).is_zero());
        CHECK((f - f).is_zero());
    }
}

TEST_CASE("polynomial division and gcd") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        UniPoly a = rng.poly(5), b = rng.poly(3);
        if (b.is_zero()) continue;
        UniPoly q, r;
        UniPoly::divrem(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        UniPoly g = UniPoly::gcd(a * b, b);
        if (!b.is_zero()) {
            UniPoly q2, r2;
            UniPoly::divrem(b, g, q2, r2);
            CHECK(r2.is_zero());
        }
    }
}

TEST_CASE("series ring homomorphism for rational functions regular at 0") {
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        RatFunc f = rng.ratfunc(3), g = rng.ratfunc(3);
        if (f.den().valuation() != 0 || g.den().valuation() != 0) continue;
        if (f.den()[0] == 0 || g.den()[0] == 0) continue;
        TS1 tf = taylor_at_origin(f, 10), tg = taylor_at_origin(g, 10);
        TS1 tfg = taylor_at_origin(f * g, 10);
        TS1 prod = tf * tg;
        for (int k = 0; k <= 10; ++k) CHECK(prod[k] == tfg[k]);
    }
}

TEST_CASE("series pow examples") {
    // geometric series
    TS1 s(8);
    s.set(0, Rat(1));
    s.set(1, Rat(-1));
    TS1 inv = s.pow_rational(Rat(-1));
    for (int k = 0; k <= 8; ++k) CHECK(inv[k] == 1);

    // (1+z)^(1/2): coefficient of z^2 is -1/8
    TS1 u(6);
    u.set(0, Rat(1));
    u.set(1, Rat(1));
    TS1 h = u.pow_rational(rat(1, 2));
    CHECK(h[2] == rat(-1, 8));

    // 1^e = 1 for fractional e
    TS1 one = TS1::constant(Rat(1), 5);
    TS1 p = one.pow_rational(rat(3, 7));
    CHECK(p[0] == 1);
    CHECK(p.is_zero_through(0) == false);
    for (int k = 1; k <= 5; ++k) CHECK(p[k] == 0);
}

TEST_CASE("series pow rational root property") {
    Rng rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        TS1 s(8);
        s.set(0, Rat(1));  // unit with exact q-th roots available
        for (int k = 1; k <= 8; ++k) s.set(k, rng.rat(6));
        long p = (long)(rng.g() % 5) + 1, q = (long)(rng.g() % 3) + 1;
        TS1 r = s.pow_rational(rat(p, q));
        TS1 rq = TS1::constant(Rat(1), 8);
        for (long i = 0; i < q; ++i) rq = rq * r;
        TS1 sp = TS1::constant(Rat(1), 8);
        for (long i = 0; i < p; ++i) sp = sp * s;
        for (int k = 0; k <= 8; ++k) CHECK(rq[k] == sp[k]);
    }
}

TEST_CASE("series composition examples") {
    // outer = sum z^k, inner = 2t
    TS1 geo(6);
    for (int k = 0; k <= 6; ++k) geo.set(k, Rat(1));
    TS1 inner(6);
    inner.set(1, Rat(2));
    TS1 comp = geo.compose(inner);
    Rat pw(1);
    for (int k = 0; k <= 6; ++k) {
        CHECK(comp[k] == pw);
        pw *= 2;
    }

    // identity outer
    TS1 ido(6);
    ido.set(1, Rat(1));
    TS1 inner2(6);
    inner2.set(1, Rat(3));
    inner2.set(2, Rat(-5));
    TS1 c2 = ido.compose(inner2);
    CHECK(c2[1] == 3);
    CHECK(c2[2] == -5);

    // 1/(1-z) at t+t^2: 1,1,2,3,5 (oracle: expanded by hand)
    TS1 geo4(4);
    for (int k = 0; k <= 4; ++k) geo4.set(k, Rat(1));
    TS1 tt(4);
    tt.set(1, Rat(1));
    tt.set(2, Rat(1));
    TS1 fib = geo4.compose(tt);
    CHECK(fib[0] == 1);
    CHECK(fib[1] == 1);
    CHECK(fib[2] == 2);
    CHECK(fib[3] == 3);
    CHECK(fib[4] == 5);

    // nonzero inner constant term rejected
    TS1 bad(4);
    bad.set(0, Rat(1));
    CHECK_THROWS_AS((void)geo4.compose(bad), std::domain_error);
}

TEST_CASE("gen series partial derivatives") {
    // constant -> 0
    GenSeries2 c{Rat(0), Rat(0), TS2::constant(Rat(1), 6)};
    auto dc = c.partial(0).normalized();
    CHECK(!dc.body.first_nonzero().has_value());

    // x^(1/2) -> (1/2) x^(-1/2)
    GenSeries2 h{rat(1, 2), Rat(0), TS2::constant(Rat(1), 6)};
    auto dh = h.partial(0);
    CHECK(dh.alpha == rat(-1, 2));
    CHECK(dh.body.coeff(0, 0) == rat(1, 2));

    // x^a (1+x) -> x^(a-1) (a + (a+1) x)
    Rat a = rat(3, 7);
    TS2 body = TS2::constant(Rat(1), 6) + TS2::variable(0, 6);
    GenSeries2 g{a, Rat(0), body};
    auto dg = g.partial(0);
    CHECK(dg.alpha == a - 1);
    CHECK(dg.body.coeff(0, 0) == a);
    CHECK(dg.body.coeff(1, 0) == a + 1);
}

TEST_CASE("gen series mixed partials commute") {
    Rng rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        TS2 body(5);
        for (int n = 0; n <= 5; ++n)
            for (int m = 0; n + m <= 5; ++m) body.set(n, m, rng.rat(9));
        GenSeries2 g{rng.rat(9), rng.rat(9), body};
        auto xy = g.partial(0).partial(1).normalized();
        auto yx = g.partial(1).partial(0).normalized();
        auto diff = (xy + yx.scaled(Rat(-1))).normalized();
        CHECK(!diff.body.first_nonzero().has_value());
    }
}

TEST_CASE("kernel_modulo finds dependencies") {
    // rows over Q(t): r0 = (1, t), r1 = (t, t^2) are proportional.
    RatFunc t = RatFunc::var(), one{Rat(1)};
    std::vector<std::vector<RatFunc>> tagged = {{one, t}, {t, t * t}};
    auto ker = kernel_modulo(tagged, {});
    REQUIRE(ker.size() == 1);
    // c0 * r0 + c1 * r1 = 0 with c0 = -t * c1.
    CHECK(!ker[0][1].is_zero());
    UniPoly lhs = ker[0][0], rhs = ker[0][1];
    CHECK(lhs + rhs * UniPoly::var() == UniPoly::zero());
}
