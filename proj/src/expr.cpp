#include "appell/expr.hpp"

#include <cctype>
#include <sstream>

namespace appell {

ExprP Expr::constant(Rat v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::constant;
    e->cval = std::move(v);
    return e;
}
ExprP Expr::variable(int axis) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::variable;
    e->var = axis;
    return e;
}
ExprP Expr::add(std::vector<ExprP> kids) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::add;
    e->kids = std::move(kids);
    return e;
}
ExprP Expr::mul(std::vector<ExprP> kids) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::mul;
    e->kids = std::move(kids);
    return e;
}
ExprP Expr::pow(ExprP base, Rat ex) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::pow;
    e->kids = {std::move(base)};
    e->expo = std::move(ex);
    return e;
}
ExprP Expr::pfq(PfqSpec spec, ExprP arg) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::pfq;
    e->pfq_spec = std::move(spec);
    e->kids = {std::move(arg)};
    return e;
}
ExprP Expr::appell(AppellSpec spec, ExprP x, ExprP y) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::appell;
    e->appell_spec = std::move(spec);
    e->kids = {std::move(x), std::move(y)};
    return e;
}
ExprP Expr::subst(ExprP body, UniPoly poly) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::subst;
    e->kids = {std::move(body)};
    e->subst_poly = std::move(poly);
    return e;
}

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    const ExprContext& ctx;

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("'") + c + "' expected");
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("expr parse error at position " + std::to_string(i) + ": " +
                                    what);
    }
    bool peek_word(const std::string& w) {
        skip();
        if (s.compare(i, w.size(), w) != 0) return false;
        size_t e = i + w.size();
        if (e < s.size() && (std::isalnum((unsigned char)s[e]) || s[e] == '_')) return false;
        return true;
    }
    std::string ident() {
        skip();
        size_t j = i;
        while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
        if (j == i) fail("identifier expected");
        return s.substr(j, i - j);
    }

    ExprP top() {
        ExprP e = expr();
        if (peek_word("subst")) {
            i += 5;
            std::string v = ident();
            bool known = false;
            for (const auto& name : ctx.vars) known = known || name == v;
            if (!known) fail("subst variable '" + v + "' is not an expression variable");
            expect('=');
            // Polynomial in one fresh variable; any identifier not bound to a
            // parameter plays that role.
            size_t j = i;
            std::string rest = s.substr(j);
            e = Expr::subst(e, parse_subst_poly(rest, j));
        }
        skip();
        if (i != s.size()) fail("trailing input");
        return e;
    }

    UniPoly parse_subst_poly(const std::string& rest, size_t base) {
        // Find the fresh variable name: first identifier not in params.
        std::string var;
        for (size_t k = 0; k < rest.size();) {
            if (std::isalpha((unsigned char)rest[k]) || rest[k] == '_') {
                size_t j = k;
                while (k < rest.size() && (std::isalnum((unsigned char)rest[k]) || rest[k] == '_'))
                    ++k;
                std::string w = rest.substr(j, k - j);
                if (!ctx.params.count(w)) {
                    var = w;
                    break;
                }
            } else
                ++k;
        }
        if (var.empty()) fail("subst polynomial has no variable");
        RatFunc f = [&] {
            // Parameters are substituted textually via a pre-pass: the
            // rational-function parser accepts only one symbol.
            std::string t;
            for (size_t k = 0; k < rest.size();) {
                if (std::isalpha((unsigned char)rest[k]) || rest[k] == '_') {
                    size_t j = k;
                    while (k < rest.size() &&
                           (std::isalnum((unsigned char)rest[k]) || rest[k] == '_'))
                        ++k;
                    std::string w = rest.substr(j, k - j);
                    if (w == var)
                        t += w;
                    else if (ctx.params.count(w))
                        t += "(" + rat_str(ctx.params.at(w)) + ")";
                    else
                        throw std::invalid_argument("expr parse error at position " +
                                                    std::to_string(base + j) +
                                                    ": unknown symbol '" + w + "'");
                } else
                    t += rest[k++];
            }
            return parse_ratfunc(t, var);
        }();
        i = s.size();
        if (!f.is_polynomial()) fail("subst replacement must be polynomial");
        if (f.num().valuation() < 1) fail("subst replacement must vanish at the origin");
        return f.num();
    }

    ExprP expr() {
        std::vector<ExprP> terms{term()};
        for (;;) {
            skip();
            if (eat('+'))
                terms.push_back(term());
            else if (eat('-'))
                terms.push_back(Expr::mul({Expr::constant(Rat(-1)), term()}));
            else
                break;
        }
        return terms.size() == 1 ? terms[0] : Expr::add(std::move(terms));
    }
    ExprP term() {
        std::vector<ExprP> factors{factor()};
        for (;;) {
            skip();
            if (eat('*'))
                factors.push_back(factor());
            else if (eat('/'))
                factors.push_back(Expr::pow(factor(), Rat(-1)));
            else
                break;
        }
        return factors.size() == 1 ? factors[0] : Expr::mul(std::move(factors));
    }
    ExprP factor() {
        skip();
        if (eat('-')) return Expr::mul({Expr::constant(Rat(-1)), factor()});
        if (eat('+')) return factor();
        ExprP base = primary();
        skip();
        if (eat('^')) {
            Rat e = const_exponent();
            return Expr::pow(base, e);
        }
        return base;
    }
    Rat const_exponent() {
        skip();
        if (eat('(')) {
            Rat v = const_value(expr());
            expect(')');
            return v;
        }
        bool neg = eat('-');
        ExprP p = primary();
        Rat v = const_value(p);
        return neg ? -v : v;
    }
    Rat const_value(const ExprP& e) {
        GenSeries2 n = expr_expand(e, 1).normalized();
        if (!n.body.first_nonzero()) return Rat(0);
        if (n.alpha != 0 || n.beta != 0) fail("constant expected");
        for (const auto& [k, v] : n.body.terms())
            if (k.first + k.second > 0) fail("constant expected");
        return n.body.coeff(0, 0);
    }

    std::vector<Rat> rat_list() {
        std::vector<Rat> out;
        out.push_back(const_value(expr()));
        while (eat(',')) out.push_back(const_value(expr()));
        return out;
    }

    Rat rat_slot() { return const_value(expr()); }

    ExprP primary() {
        skip();
        if (eat('(')) {
            ExprP e = expr();
            expect(')');
            return e;
        }
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            size_t j = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            return Expr::constant(parse_rat(s.substr(j, i - j)));
        }
        std::string name = ident();
        if (name == "poch") {
            expect('(');
            Rat a = rat_slot();
            expect(',');
            Rat n = rat_slot();
            expect(')');
            if (!is_integer(n) || n < 0) fail("poch index must be a non-negative integer");
            return Expr::constant(pochhammer(a, to_long(n)));
        }
        if (name == "pFq") {
            expect('(');
            expect('[');
            std::vector<Rat> upper = rat_list();
            expect(']');
            expect(',');
            expect('[');
            std::vector<Rat> lower = rat_list();
            expect(']');
            expect(';');
            ExprP arg = expr();
            expect(')');
            return Expr::pfq(PfqSpec{std::move(upper), std::move(lower)}, std::move(arg));
        }
        if (name == "F1" || name == "F2" || name == "F3" || name == "F4") {
            expect('(');
            AppellSpec spec;
            if (name == "F1") {
                Rat a = rat_slot();
                expect(';');
                Rat b1 = rat_slot();
                expect(',');
                Rat b2 = rat_slot();
                expect(';');
                Rat c = rat_slot();
                spec = AppellSpec::f1(a, b1, b2, c);
            } else if (name == "F2") {
                Rat a = rat_slot();
                expect(';');
                Rat b1 = rat_slot();
                expect(',');
                Rat b2 = rat_slot();
                expect(';');
                Rat c1 = rat_slot();
                expect(',');
                Rat c2 = rat_slot();
                spec = AppellSpec::f2(a, b1, b2, c1, c2);
            } else if (name == "F3") {
                Rat a1 = rat_slot();
                expect(',');
                Rat a2 = rat_slot();
                expect(';');
                Rat b1 = rat_slot();
                expect(',');
                Rat b2 = rat_slot();
                expect(';');
                Rat c = rat_slot();
                spec = AppellSpec::f3(a1, a2, b1, b2, c);
            } else {
                Rat a = rat_slot();
                expect(';');
                Rat b = rat_slot();
                expect(';');
                Rat c1 = rat_slot();
                expect(',');
                Rat c2 = rat_slot();
                spec = AppellSpec::f4(a, b, c1, c2);
            }
            expect(';');
            ExprP x = expr();
            expect(',');
            ExprP y = expr();
            expect(')');
            return Expr::appell(std::move(spec), std::move(x), std::move(y));
        }
        if (ctx.params.count(name)) return Expr::constant(ctx.params.at(name));
        for (size_t k = 0; k < ctx.vars.size(); ++k)
            if (ctx.vars[k] == name) return Expr::variable((int)k);
        fail("unknown symbol '" + name + "'");
    }
};

}  // namespace

ExprP parse_expr(const std::string& text, const ExprContext& ctx) {
    Parser p{text, 0, ctx};
    return p.top();
}

// ---------------------------------------------------------------- expand

namespace {

GenSeries2 gen_one(int order) { return GenSeries2{Rat(0), Rat(0), TS2::constant(Rat(1), order)}; }

GenSeries2 gen_pow_int(const GenSeries2& base, long e, int order) {
    if (e < 0) return base.pow_rational(Rat(e));
    GenSeries2 acc = gen_one(order);
    GenSeries2 b = base;
    unsigned long n = (unsigned long)e;
    while (n) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

// A value usable as the argument of a non-terminating series: a pure series
// vanishing at the origin. Returns it as a plain TS2.
TS2 vanishing_argument(const GenSeries2& v, const std::string& where) {
    GenSeries2 n = v.normalized();
    if (!n.body.first_nonzero()) return TS2(n.body.order());
    if (!is_integer(n.alpha) || !is_integer(n.beta) || n.alpha < 0 || n.beta < 0)
        throw std::domain_error(where + ": argument has a fractional or negative prefactor");
    long a = to_long(n.alpha), b = to_long(n.beta);
    TS2 body = n.body.shifted_up((int)a, (int)b);
    if (body.coeff(0, 0) != 0)
        throw std::domain_error(where + ": argument of a non-terminating series must vanish at "
                                        "the expansion point");
    return body;
}

}  // namespace

GenSeries2 expr_expand(const ExprP& e, int order, ExpandStats* stats) {
    switch (e->kind) {
        case Expr::Kind::constant:
            return GenSeries2{Rat(0), Rat(0), TS2::constant(e->cval, order)};
        case Expr::Kind::variable:
            return GenSeries2{Rat(0), Rat(0), TS2::variable(e->var, order)};
        case Expr::Kind::add: {
            GenSeries2 acc = expr_expand(e->kids[0], order, stats);
            for (size_t k = 1; k < e->kids.size(); ++k)
                acc = acc + expr_expand(e->kids[k], order, stats);
            return acc;
        }
        case Expr::Kind::mul: {
            GenSeries2 acc = expr_expand(e->kids[0], order, stats);
            for (size_t k = 1; k < e->kids.size(); ++k)
                acc = acc * expr_expand(e->kids[k], order, stats);
            return acc;
        }
        case Expr::Kind::pow: {
            GenSeries2 base = expr_expand(e->kids[0], order, stats);
            if (is_integer(e->expo)) return gen_pow_int(base, to_long(e->expo), order);
            return base.pow_rational(e->expo);
        }
        case Expr::Kind::pfq: {
            const PfqSpec& spec = *e->pfq_spec;
            GenSeries2 arg = expr_expand(e->kids[0], order, stats);
            long bound = spec.termination_bound();
            if (bound >= 0) {
                spec.validate();
                if (stats) stats->terminating_terms.push_back(bound + 1);
                GenSeries2 acc = gen_one(order);
                Rat c(1);
                GenSeries2 argp = gen_one(order);
                for (long n = 1; n <= bound; ++n) {
                    Rat num(1), den = Rat(n);
                    for (const auto& a : spec.upper) num *= a + Rat(n - 1);
                    for (const auto& b : spec.lower) den *= b + Rat(n - 1);
                    if (den == 0) throw std::domain_error("zero Pochhammer in pFq denominator");
                    c = c * num / den;
                    argp = argp * arg;
                    acc = acc + argp.scaled(c);
                }
                return acc;
            }
            TS2 inner = vanishing_argument(arg, spec.str());
            return GenSeries2::from_ts2(TS2::compose_uni(pfq_series(spec, order), inner));
        }
        case Expr::Kind::appell: {
            const AppellSpec& spec = *e->appell_spec;
            GenSeries2 ax = expr_expand(e->kids[0], order, stats);
            GenSeries2 ay = expr_expand(e->kids[1], order, stats);
            if (spec.is_terminating()) {
                spec.validate();
                long nb, mb, sb;
                spec.termination(nb, mb, sb);
                auto combine = [](long a, long b) {
                    if (a < 0) return b;
                    if (b < 0) return a;
                    return std::min(a, b);
                };
                long n_max = combine(nb, sb);
                long terms = 0;
                GenSeries2 acc = gen_one(order);
                bool first = true;
                std::vector<GenSeries2> xp{gen_one(order)};
                for (long n = 1; n <= n_max; ++n) xp.push_back(xp.back() * ax);
                for (long n = 0; n <= n_max; ++n) {
                    long m_hi = combine(mb, sb >= 0 ? sb - n : -1);
                    GenSeries2 yp = gen_one(order);
                    for (long m = 0; m <= m_hi; ++m) {
                        Rat num = spec.coeff_num(n, m);
                        if (num != 0) {
                            Rat den = spec.coeff_den(n, m);
                            if (den == 0)
                                throw std::domain_error("zero denominator Pochhammer in " +
                                                        spec.str());
                            GenSeries2 term = (xp[n] * yp).scaled(num / den);
                            acc = first ? term : acc + term;
                            first = false;
                            ++terms;
                        }
                        if (m < m_hi) yp = yp * ay;
                    }
                }
                if (stats) stats->terminating_terms.push_back(terms);
                return acc;
            }
            TS2 ix = vanishing_argument(ax, spec.str() + " first argument");
            TS2 iy = vanishing_argument(ay, spec.str() + " second argument");
            return GenSeries2::from_ts2(TS2::compose_biv(appell_series(spec, order), ix, iy));
        }
        case Expr::Kind::subst: {
            GenSeries2 body = expr_expand(e->kids[0], order, stats);
            GenSeries2 nb = body.normalized();
            if (nb.body.depends_on_y() || nb.beta != 0)
                throw std::domain_error("subst: body must be univariate");
            const UniPoly& p = e->subst_poly;
            int val = p.valuation();
            TS1 inner1(order);
            for (int k = 0; k <= std::min(order, p.degree()); ++k) inner1.set(k, p[k]);
            TS2 inner = TS2::from_ts1(inner1, 0);
            TS2 composed = nb.body.first_nonzero()
                               ? TS2::compose_uni(nb.body.to_ts1(), inner)
                               : TS2(std::min(order, nb.body.order() * std::max(val, 1)));
            if (nb.alpha == 0) return GenSeries2::from_ts2(composed);
            if (p.degree() != val)
                throw std::domain_error(
                    "subst: fractional prefactor requires a monomial replacement");
            Rat scale = rat_pow_exact(p[val], nb.alpha).value_or(Rat(0));
            if (scale == 0)
                throw std::domain_error("subst: irrational constant power");
            return GenSeries2{nb.alpha * Rat(val), Rat(0), composed.scaled(scale)};
        }
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------- compare

CompareResult genval_equal(const GenSeries2& a, const GenSeries2& b, int N) {
    GenSeries2 diff = (a + b.scaled(Rat(-1))).normalized();
    if (diff.abs_order() < Rat(N))
        throw std::domain_error("genval_equal: insufficient truncation order");
    for (const auto& [k, v] : diff.body.terms()) {
        Rat deg = diff.alpha + diff.beta + Rat(k.first + k.second);
        if (deg > Rat(N) || v == 0) continue;
        std::ostringstream os;
        os << "coefficient mismatch at x^" << rat_str(diff.alpha + k.first) << " y^"
           << rat_str(diff.beta + k.second) << ": difference " << rat_str(v);
        return {false, os.str()};
    }
    return {true, ""};
}

CompareResult genval_proportional(const GenSeries2& a, const GenSeries2& b, int N, Rat* ratio) {
    GenSeries2 na = a.normalized(), nb = b.normalized();
    auto fa = na.body.first_nonzero(), fb = nb.body.first_nonzero();
    if (!fa || !fb) return {false, "proportional comparison with a vanishing side"};
    Rat a0 = na.body.coeff(fa->first, fa->second);
    Rat b0 = nb.body.coeff(fb->first, fb->second);
    if (ratio) *ratio = a0 / b0;
    return genval_equal(na.scaled(b0), nb.scaled(a0), N);
}

}  // namespace appell
