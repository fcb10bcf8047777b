#include "appell/expr.hpp"
#include "doctest.h"

using namespace appell;

namespace {

GenSeries2 expand(const std::string& text, const ExprContext& ctx, int order) {
    return expr_expand(parse_expr(text, ctx), order);
}

}  // namespace

TEST_CASE("parse and expand basics") {
    ExprContext ctx;
    auto g = expand("1/(1-t)", ctx, 6);
    for (int k = 0; k <= 6; ++k) CHECK(g.body.coeff(k, 0) == 1);

    auto h = expand("pFq([1,1],[2]; t)", ctx, 4);
    CHECK(h.body.coeff(0, 0) == 1);
    CHECK(h.body.coeff(1, 0) == rat(1, 2));
    CHECK(h.body.coeff(2, 0) == rat(1, 3));
    CHECK(h.body.coeff(3, 0) == rat(1, 4));
}

TEST_CASE("parameters and poch") {
    ExprContext ctx;
    ctx.params = {{"a", rat(1, 2)}, {"k", Rat(2)}};
    auto g = expand("poch(a, 2) * t^k", ctx, 5);
    auto n = g.normalized();
    CHECK(n.alpha == 2);
    CHECK(n.body.coeff(0, 0) == rat(3, 4));
}

TEST_CASE("fractional powers of units and monomials") {
    ExprContext ctx;
    ctx.params = {{"a", rat(1, 3)}};
    auto g = expand("(1-t)^(-a)", ctx, 4).normalized();
    CHECK(g.alpha == 0);
    CHECK(g.body.coeff(0, 0) == 1);
    CHECK(g.body.coeff(1, 0) == rat(1, 3));

    auto m = expand("t^(1/2) * t^(3/2)", ctx, 4).normalized();
    CHECK(m.alpha == 2);

    auto f = expand("(t + t^2)^(1/2)", ctx, 4).normalized();
    CHECK(f.alpha == rat(1, 2));
    CHECK(f.body.coeff(0, 0) == 1);
    ExprContext two;
    two.vars = {"t", "s"};
    CHECK_THROWS_AS((void)expand("(t + s)^(1/2)", two, 4), std::domain_error);
    CHECK_THROWS_AS((void)expand("2^(1/2) * t", ctx, 4), std::domain_error);
}

TEST_CASE("non-terminating call needs vanishing arguments") {
    ExprContext ctx;
    ctx.params = {{"a", rat(1, 3)}};
    CHECK_THROWS_WITH_AS((void)expand("pFq([a, 1],[3/2]; 1 + t)", ctx, 4),
                         doctest::Contains("vanish"), std::domain_error);
    // terminating call accepts non-vanishing arguments
    auto g = expand("pFq([-2, a],[3/2]; 1 + t)", ctx, 4);
    (void)g;
}

TEST_CASE("subst clause") {
    ExprContext ctx;
    ctx.params = {{"a", rat(2, 5)}};
    ctx.vars = {"z"};
    // dihedr2-style both sides
    auto lhs = expand("pFq([a/2, (a+1)/2], [1/2]; z) subst z = w^2", ctx, 10);
    ExprContext wctx;
    wctx.params = ctx.params;
    wctx.vars = {"w"};
    auto rhs = expand("((1-w)^(-a) + (1+w)^(-a))/2", wctx, 10);
    auto cmp = genval_equal(lhs, rhs, 8);
    INFO(cmp.detail);
    CHECK(cmp.ok);
}

TEST_CASE("expand stats report terminating term counts") {
    ExprContext ctx;
    ctx.params = {{"a", rat(1, 7)}};
    ExpandStats stats;
    auto e = parse_expr("F2(a; -1, -2; -2, -4; t, 1 - t)", ctx);
    (void)expr_expand(e, 6, &stats);
    REQUIRE(stats.terminating_terms.size() == 1);
    CHECK(stats.terminating_terms[0] == 6);  // (1+1)(2+1)
}

TEST_CASE("genval compare helpers") {
    ExprContext ctx;
    auto a = expand("(1-t)^(-1)", ctx, 8);
    auto b = expand("1/(1-t)", ctx, 8);
    CHECK(genval_equal(a, b, 8).ok);
    auto c = expand("3/(1-t)", ctx, 8);
    CHECK(!genval_equal(a, c, 8).ok);
    Rat ratio;
    CHECK(genval_proportional(c, b, 8, &ratio).ok);
    CHECK(ratio == 3);
}

TEST_CASE("bivariate identity: Bailey separation at sample parameters") {
    ExprContext ctx;
    ctx.params = {{"a", rat(1, 2)}, {"b", rat(1, 3)}, {"c", rat(1, 5)}};
    ctx.vars = {"x", "y"};
    auto lhs = expand("F4(a; b; c, a+b-c+1; x*(1-y), y*(1-x))", ctx, 8);
    auto rhs = expand("pFq([a,b],[c]; x) * pFq([a,b],[a+b-c+1]; y)", ctx, 8);
    auto cmp = genval_equal(lhs, rhs, 8);
    INFO(cmp.detail);
    CHECK(cmp.ok);
}
