#include <random>

#include "appell/derive.hpp"
#include "doctest.h"

using namespace appell;

namespace {

RatFunc T() { return RatFunc::var(); }
RatFunc C(const Rat& v) { return RatFunc(v); }

GenSeries2 appell_gen(const AppellSpec& spec, int order) {
    return GenSeries2::from_ts2(appell_series(spec, order));
}

}  // namespace

TEST_CASE("each system annihilates its own series") {
    std::vector<AppellSpec> specs = {
        AppellSpec::f1(rat(1, 3), rat(2, 5), rat(3, 7), rat(5, 4)),
        AppellSpec::f2(rat(1, 3), rat(2, 5), rat(3, 7), rat(5, 4), rat(7, 9)),
        AppellSpec::f3(rat(1, 3), rat(2, 5), rat(3, 7), rat(5, 4), rat(7, 9)),
        AppellSpec::f4(rat(1, 3), rat(2, 5), rat(3, 7), rat(5, 4)),
    };
    for (const auto& spec : specs) {
        auto ops = appell_system(spec);
        CHECK(ops.size() == (spec.kind == AppellKind::F1 ? 3 : 2));
        auto check = solves_system(ops, appell_gen(spec, 10), 8);
        INFO(spec.str(), " ", check.detail);
        CHECK(check.ok);
    }
}

TEST_CASE("F1 operator combination reproduces the third operator") {
    Rat a = rat(2, 7), b1 = rat(1, 3), b2 = rat(4, 5), c = rat(9, 11);
    auto ops = appell_system(AppellSpec::f1(a, b1, b2, c));
    // ((1-y) Dy - b2) o op1 + ((x-1) Dx + b1) o op2 == (a-c+1) * op3
    WeylOp left1, left2;
    left1.add_term(0, 1, parse_bipoly("1-y"));
    left1.add_term(0, 0, BiPoly(-b2));
    left2.add_term(1, 0, parse_bipoly("x-1"));
    left2.add_term(0, 0, BiPoly(b1));
    WeylOp lhs = weyl_compose(left1, ops[0]) + weyl_compose(left2, ops[1]);
    WeylOp rhs = ops[2].scaled(a - c + 1);
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("F4 operators annihilate the prefactored origin solution") {
    Rat a = rat(1, 3), b = rat(2, 5), c1 = rat(3, 7), c2 = rat(5, 9);
    auto ops = appell_system(AppellSpec::f4(a, b, c1, c2));
    auto shifted = AppellSpec::f4(1 + a - c1, 1 + b - c1, 2 - c1, c2);
    GenSeries2 cand{1 - c1, Rat(0), appell_series(shifted, 10)};
    auto check = solves_system(ops, cand, 8);
    INFO(check.detail);
    CHECK(check.ok);
}

TEST_CASE("weyl_prolong Leibniz examples") {
    WeylOp xdx;
    xdx.add_term(1, 0, BiPoly::x());
    WeylOp p = weyl_prolong(xdx, 0);  // Dx o (x Dx) = x Dx^2 + Dx
    CHECK(p.terms.size() == 2);
    CHECK(p.terms.at({2, 0}) == BiPoly::x());
    CHECK(p.terms.at({1, 0}) == BiPoly(Rat(1)));

    WeylOp cst;
    cst.add_term(0, 0, BiPoly(rat(3, 2)));
    WeylOp q = weyl_prolong(cst, 0);
    CHECK(q.terms.size() == 1);
    CHECK(q.terms.count({1, 0}) == 1);
}

TEST_CASE("singular locus membership") {
    Curve c1{T(), C(Rat(1)) - T()};
    CHECK(curve_on_locus(AppellKind::F2, c1) == std::string("x+y=1"));
    Curve c2{RatFunc(T().pow_int(2)), RatFunc((C(Rat(1)) - T()).pow_int(2))};
    CHECK(curve_on_locus(AppellKind::F4, c2) == std::string("quadratic"));
    Curve c3{T(), C(Rat(2)) - T()};
    CHECK(!curve_on_locus(AppellKind::F2, c3).has_value());
}

TEST_CASE("specialize keeps indices and substitutes coefficients") {
    WeylOp op;
    op.add_term(2, 0, parse_bipoly("x*(1-x)"));
    op.add_term(0, 1, parse_bipoly("y"));
    Curve curve{T(), C(Rat(2)) - T()};
    auto s = specialize(op, curve);
    CHECK(s.at({2, 0}) == T() * (C(Rat(1)) - T()));
    CHECK(s.at({0, 1}) == C(Rat(2)) - T());
    // constant-coefficient operator unchanged
    WeylOp cst;
    cst.add_term(1, 1, BiPoly(rat(5, 3)));
    auto s2 = specialize(cst, curve);
    CHECK(s2.at({1, 1}) == C(rat(5, 3)));
}

TEST_CASE("full derivative elements") {
    Curve curve{T(), C(Rat(2)) - T()};
    auto e = full_derivative_elements(curve, 2);
    // d/dt = dx - dy
    CHECK(e[1].at({1, 0}) == C(Rat(1)));
    CHECK(e[1].at({0, 1}) == C(Rat(-1)));
    // d2/dt2 = dx^2 - 2 dxdy + dy^2
    CHECK(e[2].at({2, 0}) == C(Rat(1)));
    CHECK(e[2].at({1, 1}) == C(Rat(-2)));
    CHECK(e[2].at({0, 2}) == C(Rat(1)));
    // constant y: d2/dt2 = dx^2
    Curve cy{T(), C(rat(1, 3))};
    auto e2 = full_derivative_elements(cy, 2);
    CHECK(e2[2].size() == 1);
    CHECK(e2[2].at({2, 0}) == C(Rat(1)));
}

TEST_CASE("order-2 obstruction examples") {
    // F2 along (t, 2-t): vanishes identically
    Curve c1{T(), C(Rat(2)) - T()};
    CHECK(order2_obstruction(AppellKind::F2, c1).is_zero());
    // F2 along (t, t): nonzero
    Curve c2{T(), T()};
    CHECK(!order2_obstruction(AppellKind::F2, c2).is_zero());
    // F4 along (st, (1-s)(1-t)) for fixed rational s
    Rat s = rat(3, 7);
    Curve c3{RatFunc(UniPoly(std::vector<Rat>{Rat(0), s})),
             RatFunc(UniPoly(std::vector<Rat>{1 - s})) * (C(Rat(1)) - T())};
    CHECK(order2_obstruction(AppellKind::F4, c3).is_zero());
}

TEST_CASE("minimal_ode: F2 with c1=2b1,c2=2b2 along (t,2-t) gives the xy2 equation") {
    Rat a = rat(3, 11), b1 = rat(2, 7), b2 = rat(5, 9);
    auto sys = AppellSpec::f2(a, b1, b2, 2 * b1, 2 * b2);
    Curve curve{T(), C(Rat(2)) - T()};
    auto r = minimal_ode(sys, curve, 2, 0);
    REQUIRE(r.found());
    CHECK(r.order == 2);
    CHECK(lode_equal(r.ode, f2_xy2_ode(a, b1, b2)));
}

TEST_CASE("minimal_ode: necessity of c1=2b1,c2=2b2 at order 2 without prolongation") {
    Rat a = rat(3, 11), b1 = rat(2, 7), b2 = rat(5, 9);
    auto sys = AppellSpec::f2(a, b1, b2, 2 * b1 + rat(1, 5), 2 * b2);
    Curve curve{T(), C(Rat(2)) - T()};
    auto r = minimal_ode(sys, curve, 2, 0);
    CHECK(!r.found());
}

TEST_CASE("minimal_ode consistency with the composed series") {
    // F1 along (t, t^2): residual of the derived ODE on the composed series.
    Rat a = rat(1, 3), b1 = rat(2, 5), b2 = rat(3, 7), c = rat(5, 4);
    auto sys = AppellSpec::f1(a, b1, b2, c);
    Curve curve{T(), RatFunc(T().pow_int(2))};
    auto r = minimal_ode(sys, curve, 4, 2);
    REQUIRE(r.found());
    CHECK(r.order == 3);  // rank-3 system, generic curve
    TS2 s = appell_series(sys, 14);
    TS1 tt(14);
    tt.set(1, Rat(1));
    TS1 t2(14);
    t2.set(2, Rat(1));
    TS2 composed = TS2::compose_biv(s, TS2::from_ts1(tt, 0), TS2::from_ts1(t2, 0));
    CHECK(lode_annihilates(r.ode, GenSeries1::from_ts1(composed.to_ts1()), 9));
}

TEST_CASE("minimal_ode along a generic line for F1 has order 3") {
    Rat a = rat(1, 3), b1 = rat(2, 5), b2 = rat(3, 7), c = rat(5, 4);
    Curve line{T(), C(rat(5, 3)) * T() + C(rat(1, 2))};
    auto r = minimal_ode(AppellSpec::f1(a, b1, b2, c), line, 4, 2);
    REQUIRE(r.found());
    CHECK(r.order == 3);
}

TEST_CASE("generic lines give order-4 equations that annihilate the composed series") {
    struct Case {
        AppellSpec sys;
        Rat slope;
    } cases[] = {
        {AppellSpec::f2(rat(1, 3), rat(2, 5), rat(3, 7), rat(5, 4), rat(7, 9)), rat(1, 2)},
        {AppellSpec::f4(rat(1, 3), rat(2, 7), rat(5, 4), rat(7, 9)), rat(1, 3)},
    };
    for (const auto& cs : cases) {
        Curve line{T(), C(cs.slope) * T()};
        auto r = minimal_ode(cs.sys, line, 4, 2);
        REQUIRE(r.found());
        CHECK(r.order == 4);
        TS2 s = appell_series(cs.sys, 16);
        TS1 tt(16);
        tt.set(1, Rat(1));
        TS1 ht(16);
        ht.set(1, cs.slope);
        TS2 comp = TS2::compose_biv(s, TS2::from_ts1(tt, 0), TS2::from_ts1(ht, 0));
        CHECK(lode_annihilates(r.ode, GenSeries1::from_ts1(comp.to_ts1()), 10));
    }
}

TEST_CASE("f1 curve residual families") {
    Rat a = rat(2, 7), b = rat(3, 5);
    // (eq:f1q0) family: b1=2b, b2=a-b, c=1+b along (t, t^2)
    Curve par{T(), RatFunc(T().pow_int(2))};
    CHECK(f1_curve_residual(a, 2 * b, a - b, 1 + b, par).is_zero());
    // reducible family: c=a+1 along (t, s t)
    Rat s = rat(4, 9);
    Curve line{T(), RatFunc(UniPoly(std::vector<Rat>{Rat(0), s}))};
    CHECK(f1_curve_residual(a, rat(1, 3), rat(2, 9), a + 1, line).is_zero());
    // generic line: nonzero
    Curve shifted{T(), T() + C(Rat(1))};
    CHECK(!f1_curve_residual(a, rat(1, 3), rat(2, 9), rat(8, 5), shifted).is_zero());
}

TEST_CASE("f4 reducibility predicate") {
    CHECK(f4_reducibility(Rat(2), rat(1, 5), rat(1, 2), rat(1, 7)).status ==
          ReducibilityReport::Status::reducible);
    CHECK(f4_reducibility(Rat(2), rat(1, 5), rat(1, 2), rat(1, 7)).witness == "a");
    CHECK(f4_reducibility(rat(1, 3), rat(1, 5), rat(1, 2), rat(1, 7)).status ==
          ReducibilityReport::Status::irreducible);
    auto r = f4_reducibility(rat(1, 3), rat(1, 5), rat(1, 3) + 3, rat(1, 7));
    CHECK(r.status == ReducibilityReport::Status::reducible);
    CHECK(r.witness == "c1-a");
    CHECK(f4_reducibility(rat(1, 3), rat(1, 5), Rat(2), rat(1, 7)).status ==
          ReducibilityReport::Status::hypothesis_violated);
}

TEST_CASE("change of variables: F2 system transported to (1-u,1-v)") {
    // If ops annihilate F2(x,y) then transported ops annihilate F2(1-u,1-v);
    // check on the solution F2(a;b1,b2;1+a+b1+b2-c1-c2+...) is involved, so
    // instead verify the inverse route: transported ops applied to the series
    // of a known solution expressed in the new variables.
    Rat a = rat(1, 3), b1 = rat(2, 5), b2 = rat(3, 7), c = rat(5, 4);
    auto sys = AppellSpec::f1(a, b1, b2, c);
    auto ops = appell_system(sys);
    // F1(a; b1, b2; 1+a+b1+b2-c; 1-x, 1-y) solves the system; in coordinates
    // u = 1-x, v = 1-y the candidate is the plain F1 series.
    auto cand_spec = AppellSpec::f1(a, b1, b2, 1 + a + b1 + b2 - c);
    auto moved = weyl_change_vars(ops, parse_birat("1-u"), parse_birat("1-v"));
    auto check = solves_system(moved, appell_gen(cand_spec, 10), 8);
    INFO(check.detail);
    CHECK(check.ok);
}
