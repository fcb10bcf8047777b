#include <random>

#include "appell/hyperseries.hpp"
#include "doctest.h"

using namespace appell;

TEST_CASE("pochhammer") {
    CHECK(pochhammer(rat(5, 3), 0) == 1);
    CHECK(pochhammer(Rat(1), 4) == 24);
    CHECK(pochhammer(rat(1, 2), 2) == rat(3, 4));
}

TEST_CASE("2F1 series") {
    PfqSpec gauss{{rat(1, 3), rat(1, 5)}, {rat(1, 7)}};
    TS1 s = pfq_series(gauss, 6);
    CHECK(s[0] == 1);
    // coefficient of z^n for 2F1(1,1;2;z) is 1/(n+1)
    PfqSpec log_like{{Rat(1), Rat(1)}, {Rat(2)}};
    TS1 l = pfq_series(log_like, 8);
    for (int n = 0; n <= 8; ++n) CHECK(l[n] == rat(1, n + 1));
    // terminating: upper -2 gives a degree-2 polynomial
    PfqSpec term{{Rat(-2), rat(4, 3)}, {rat(3, 2)}};
    TS1 t = pfq_series(term, 8);
    for (int n = 3; n <= 8; ++n) CHECK(t[n] == 0);
    CHECK(t[2] != 0);
}

TEST_CASE("pfq zero denominator before termination") {
    PfqSpec bad{{rat(1, 3)}, {Rat(-2)}};
    CHECK_THROWS_AS((void)pfq_series(bad, 8), std::domain_error);
    // termination precedes the denominator zero: fine
    PfqSpec ok{{Rat(-1)}, {Rat(-2)}};
    TS1 s = pfq_series(ok, 8);
    CHECK(s[0] == 1);
    CHECK(s[1] == rat(1, 2));
    CHECK(s[2] == 0);
}

TEST_CASE("appell series coefficients") {
    auto f4 = AppellSpec::f4(rat(1, 3), rat(1, 5), rat(1, 7), rat(1, 11));
    TS2 s = appell_series(f4, 4);
    CHECK(s.coeff(0, 0) == 1);
    // F4 coefficient (1,1) = a(a+1)b(b+1)/(c1*c2)
    Rat a = rat(1, 3), b = rat(1, 5), c1 = rat(1, 7), c2 = rat(1, 11);
    CHECK(s.coeff(1, 1) == a * (a + 1) * b * (b + 1) / (c1 * c2));
}

TEST_CASE("F1 diagonal is Gauss 2F1(a, b1+b2; c)") {
    Rat a = rat(2, 3), b1 = rat(1, 4), b2 = rat(3, 5), c = rat(7, 6);
    auto f1 = AppellSpec::f1(a, b1, b2, c);
    TS2 s = appell_series(f1, 8);
    PfqSpec g{{a, b1 + b2}, {c}};
    TS1 gs = pfq_series(g, 8);
    for (int n = 0; n <= 8; ++n) {
        Rat diag(0);
        for (int k = 0; k <= n; ++k) diag += s.coeff(k, n - k);
        CHECK(diag == gs[n]);
    }
}

TEST_CASE("F2(x,0) matches 2F1(a,b1;c1) coefficientwise") {
    Rat a = rat(1, 3), b1 = rat(2, 5), b2 = rat(-3, 7), c1 = rat(5, 4), c2 = rat(1, 6);
    auto f2 = AppellSpec::f2(a, b1, b2, c1, c2);
    TS2 s = appell_series(f2, 8);
    TS1 g = pfq_series(PfqSpec{{a, b1}, {c1}}, 8);
    for (int n = 0; n <= 8; ++n) CHECK(s.coeff(n, 0) == g[n]);
}

TEST_CASE("F3 invariant under swapping a1<->b1 and a2<->b2") {
    std::mt19937_64 rng(5);
    auto r = [&] { return rat((long)(rng() % 17) + 1, (long)(rng() % 13) + 1); };
    for (int trial = 0; trial < 5; ++trial) {
        Rat a1 = r(), a2 = r(), b1 = r(), b2 = r(), c = r();
        TS2 s1 = appell_series(AppellSpec::f3(a1, a2, b1, b2, c), 6);
        TS2 s2 = appell_series(AppellSpec::f3(b1, a2, a1, b2, c), 6);
        TS2 s3 = appell_series(AppellSpec::f3(a1, b2, b1, a2, c), 6);
        for (int n = 0; n <= 6; ++n)
            for (int m = 0; n + m <= 6; ++m) {
                CHECK(s1.coeff(n, m) == s2.coeff(n, m));
                CHECK(s1.coeff(n, m) == s3.coeff(n, m));
            }
    }
}

TEST_CASE("terminating F2 support is exactly (k+1)(l+1) terms") {
    Rat a = rat(4, 7);
    for (long k = 0; k <= 2; ++k)
        for (long l = 0; l <= 2; ++l) {
            auto spec = AppellSpec::f2(a, Rat(-k), Rat(-l), Rat(-2 * k), Rat(-2 * l));
            auto v = appell_terminating_eval(spec, rat(1, 3), rat(2, 5));
            CHECK(v.terms == (k + 1) * (l + 1));
            TS2 s = appell_series(spec, (int)(k + l) + 3);
            for (const auto& [key, val] : s.terms()) {
                CHECK(key.first <= k);
                CHECK(key.second <= l);
            }
        }
}

TEST_CASE("terminating eval examples") {
    // F2(a; -1,-1; -2,-2; x,y) = 1 + ax/2 + ay/2 + a(a+1)xy/4
    Rat a = rat(3, 5), x = rat(1, 2), y = rat(-2, 7);
    auto spec = AppellSpec::f2(a, Rat(-1), Rat(-1), Rat(-2), Rat(-2));
    auto v = appell_terminating_eval(spec, x, y);
    CHECK(v.terms == 4);
    CHECK(v.value == 1 + a * x / 2 + a * y / 2 + a * (a + 1) * x * y / 4);

    // zero b-parameters: single term
    auto spec0 = AppellSpec::f2(a, Rat(0), Rat(0), rat(1, 3), rat(1, 5));
    auto v0 = appell_terminating_eval(spec0, x, y);
    CHECK(v0.terms == 1);
    CHECK(v0.value == 1);
}

TEST_CASE("terminating eval agrees with series evaluation") {
    Rat a = rat(2, 9);
    auto spec = AppellSpec::f2(a, Rat(-2), Rat(-1), Rat(-4), Rat(-2));
    Rat x = rat(3, 4), y = rat(-1, 3);
    auto v = appell_terminating_eval(spec, x, y);
    TS2 s = appell_series(spec, 6);
    Rat acc(0);
    for (const auto& [key, c] : s.terms())
        acc += c * rat_pow_int(x, key.first) * rat_pow_int(y, key.second);
    CHECK(acc == v.value);
}

TEST_CASE("terminating F2 sums of the even dihedral combination at rational points") {
    // k = l = 1: each finite sum has (k+1)(l+1) = 4 terms at any admissible w.
    Rat a = rat(1, 3);
    auto spec = AppellSpec::f2(a, Rat(-1), Rat(-1), Rat(-2), Rat(-2));
    int checked = 0;
    for (long n = 1; n <= 25; ++n) {
        Rat w = rat(n, 26);
        Rat xp = 2 * w / (1 + w), yp = Rat(2) / (1 + w);
        Rat xm = 2 * w / (w - 1), ym = Rat(2) / (1 - w);
        auto vp = appell_terminating_eval(spec, xp, yp);
        auto vm = appell_terminating_eval(spec, xm, ym);
        CHECK(vp.terms == 4);
        CHECK(vm.terms == 4);
        ++checked;
    }
    CHECK(checked == 25);
}

TEST_CASE("terminating eval rejects non-terminating input") {
    auto spec = AppellSpec::f2(rat(1, 3), rat(1, 5), Rat(-1), rat(1, 7), Rat(-2));
    CHECK_THROWS_AS((void)appell_terminating_eval(spec, Rat(1), Rat(1)), std::domain_error);
}

TEST_CASE("F2-F3 reversal identity for terminating series") {
    // F2(a;-k,-l;-2k,-2l;x,y) = k! l! (a)_{k+l} / ((2k)!(2l)!) x^k y^l
    //                            * F3(k+1,l+1;-k,-l;1-a-k-l;1/x,1/y)
    Rat a = rat(3, 7);
    for (long k = 1; k <= 2; ++k)
        for (long l = 1; l <= 2; ++l) {
            Rat x = rat(5, 3), y = rat(-7, 2);
            auto f2 = AppellSpec::f2(a, Rat(-k), Rat(-l), Rat(-2 * k), Rat(-2 * l));
            auto f3 = AppellSpec::f3(Rat(k + 1), Rat(l + 1), Rat(-k), Rat(-l),
                                     Rat(1) - a - Rat(k + l));
            Rat pref = pochhammer(Rat(1), k) * pochhammer(Rat(1), l) * pochhammer(a, k + l) /
                       (pochhammer(Rat(1), 2 * k) * pochhammer(Rat(1), 2 * l));
            Rat lhs = appell_terminating_eval(f2, x, y).value;
            Rat rhs = pref * rat_pow_int(x, k) * rat_pow_int(y, l) *
                      appell_terminating_eval(f3, Rat(1) / x, Rat(1) / y).value;
            CHECK(lhs == rhs);
        }
}
