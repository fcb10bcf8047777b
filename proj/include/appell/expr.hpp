// Expression trees over rational constants, at most two variables, rational
// powers, and hypergeometric calls; text grammar and exact expansion.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "appell/hyperseries.hpp"

namespace appell {

struct Expr;
using ExprP = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { constant, variable, add, mul, pow, pfq, appell, subst };
    Kind kind;

    Rat cval;                 // constant
    int var = 0;              // variable axis
    std::vector<ExprP> kids;  // add/mul children, pow base, call arguments
    Rat expo;                 // pow exponent
    std::optional<PfqSpec> pfq_spec;
    std::optional<AppellSpec> appell_spec;
    UniPoly subst_poly;       // subst: kids[0]'s variable replaced by this polynomial

    static ExprP constant(Rat v);
    static ExprP variable(int axis);
    static ExprP add(std::vector<ExprP> kids);
    static ExprP mul(std::vector<ExprP> kids);
    static ExprP pow(ExprP base, Rat e);
    static ExprP pfq(PfqSpec spec, ExprP arg);
    static ExprP appell(AppellSpec spec, ExprP x, ExprP y);
    static ExprP subst(ExprP body, UniPoly poly);
};

struct ExprContext {
    std::map<std::string, Rat> params;
    std::vector<std::string> vars = {"t", "s"};  // axis order
};

// Grammar: + - * / ^, rational literals p/q, parenthesization, parameter and
// variable identifiers, poch(a,n), pFq([...],[...]; arg),
// F1(a; b1,b2; c; x,y), F2(a; b1,b2; c1,c2; x,y), F3(a1,a2; b1,b2; c; x,y),
// F4(a; b; c1,c2; x,y), and a trailing `subst var = <poly in new var>` clause.
ExprP parse_expr(const std::string& text, const ExprContext& ctx);

struct ExpandStats {
    std::vector<long> terminating_terms;  // term counts of terminating calls
};

// Exact truncated expansion at the origin; throws on invariant violations
// (non-vanishing argument of a non-terminating call, non-unit power base),
// naming the offending subexpression.
GenSeries2 expr_expand(const ExprP& e, int order, ExpandStats* stats = nullptr);

struct CompareResult {
    bool ok;
    std::string detail;  // first mismatching coefficient when !ok
};

// Coefficientwise equality through absolute total degree N.
CompareResult genval_equal(const GenSeries2& a, const GenSeries2& b, int N);
// lhs*rhs0 == rhs*lhs0 with lhs0, rhs0 the leading coefficients (one constant
// across all compared coefficients); reports the ratio rhs0/lhs0.
CompareResult genval_proportional(const GenSeries2& a, const GenSeries2& b, int N, Rat* ratio);

}  // namespace appell
