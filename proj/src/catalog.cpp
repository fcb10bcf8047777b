#include "appell/catalog.hpp"

#include <cctype>
#include <chrono>
#include <random>
#include <sstream>

#include "json.hpp"

namespace appell {

std::string verify_mode_name(VerifyMode m) {
    switch (m) {
        case VerifyMode::exact: return "exact";
        case VerifyMode::proportional: return "proportional";
        case VerifyMode::same_ode: return "same-ode";
        case VerifyMode::solves_system: return "solves-system";
        case VerifyMode::expect_fail: return "expect-fail";
    }
    return "?";
}

ParamSpec free_rat(std::string name) {
    ParamSpec p;
    p.kind = ParamSpec::Kind::free_rat;
    p.name = std::move(name);
    return p;
}
ParamSpec free_int(std::string name, long lo, long hi) {
    ParamSpec p;
    p.kind = ParamSpec::Kind::free_int;
    p.name = std::move(name);
    p.lo = lo;
    p.hi = hi;
    return p;
}
ParamSpec derived(std::string name, std::function<Rat(const ParamMap&)> fn) {
    ParamSpec p;
    p.kind = ParamSpec::Kind::derived;
    p.name = std::move(name);
    p.derive = std::move(fn);
    return p;
}

RatFunc curve_component(const std::string& text, const ParamMap& m) {
    std::string t;
    for (size_t k = 0; k < text.size();) {
        if (std::isalpha((unsigned char)text[k]) || text[k] == '_') {
            size_t j = k;
            while (k < text.size() && (std::isalnum((unsigned char)text[k]) || text[k] == '_')) ++k;
            std::string w = text.substr(j, k - j);
            if (w == "t")
                t += w;
            else if (m.count(w))
                t += "(" + rat_str(m.at(w)) + ")";
            else
                throw std::invalid_argument("curve_component: unknown symbol '" + w + "'");
        } else
            t += text[k++];
    }
    return parse_ratfunc(t, "t");
}

std::string params_str(const ParamMap& m) {
    std::string s;
    for (const auto& [k, v] : m) s += (s.empty() ? "" : ", ") + k + "=" + rat_str(v);
    return s;
}

namespace {

Rat pm(const ParamMap& m, const std::string& k) { return m.at(k); }
bool ok_lower(const Rat& r) { return !is_nonpos_integer(r); }
bool nonint(const Rat& r) { return !is_integer(r); }

Curve mkcurve(const std::string& xs, const std::string& ys, const ParamMap& m) {
    return Curve{curve_component(xs, m), curve_component(ys, m)};
}

ExprContext ctx_of(const ParamMap& m, std::vector<std::string> vars) {
    ExprContext c;
    c.params = m;
    c.vars = std::move(vars);
    return c;
}

CheckOutcome cmp_lodes(const Lode& a, const Lode& b, const std::string& what) {
    if (lode_equal(a, b)) return {true, ""};
    return {false, what + ": equations differ (orders " + std::to_string(a.order()) + " vs " +
                       std::to_string(b.order()) + ")"};
}

struct ElimSpec {
    AppellSpec sys;
    Curve curve;
    int max_order = 4;
    int depth = 2;
    int expect_order = 0;
};

CheckOutcome elim_equals(const ElimSpec& e, const Lode& want, const std::string& what) {
    auto r = minimal_ode(e.sys, e.curve, e.max_order, e.depth);
    if (!r.found()) return {false, what + ": no ODE found within bounds"};
    if (e.expect_order > 0 && r.order != e.expect_order)
        return {false, what + ": derived order " + std::to_string(r.order) + ", expected " +
                           std::to_string(e.expect_order)};
    return cmp_lodes(r.ode, want, what);
}

CheckOutcome check_solves_text(const std::vector<WeylOp>& ops, const std::string& cand,
                               const ExprContext& ctx, int N) {
    GenSeries2 g = expr_expand(parse_expr(cand, ctx), N + 8);
    auto res = solves_system(ops, g, N);
    return {res.ok, res.detail};
}

// ---------------------------------------------------------------- exact

void add_exact(std::vector<IdentityRecord>& out) {
    auto text2 = [&](std::string id, std::string lhs, std::string rhs,
                     std::vector<std::string> vars, std::vector<ParamSpec> params,
                     std::function<bool(const ParamMap&)> adm, std::string prov,
                     std::string constr) {
        IdentityRecord r;
        r.id = std::move(id);
        r.mode = VerifyMode::exact;
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        r.lhs_vars = vars;
        r.rhs_vars = vars;
        r.params = std::move(params);
        r.admissible = std::move(adm);
        r.provenance = std::move(prov);
        r.constraints = std::move(constr);
        out.push_back(std::move(r));
    };

    text2("bailey-separation", "F4(a; b; c, a+b-c+1; x*(1-y), y*(1-x))",
          "pFq([a,b],[c]; x) * pFq([a,b],[a+b-c+1]; y)", {"x", "y"},
          {free_rat("a"), free_rat("b"), free_rat("c")},
          [](const ParamMap& m) {
              return ok_lower(pm(m, "c")) && ok_lower(pm(m, "a") + pm(m, "b") - pm(m, "c") + 1);
          },
          "Bailey separation of variables for F4", "c2 = a+b-c+1");

    text2("f2-separation",
          "F2(b1+b2-1/2; b1, b2; 2*b1, 2*b2; 4*(1-s^2)*t/(1+s+t-s*t)^2, "
          "4*(1-t^2)*s/(1+s+t-s*t)^2)",
          "((1+s+t-s*t)/(1-s))^(2*b1+2*b2-1) * pFq([b1+b2-1/2, b2], [2*b2]; -4*s/(1-s)^2) * "
          "pFq([b1+b2-1/2, b2], [b1+1/2]; t^2)",
          {"t", "s"}, {free_rat("b1"), free_rat("b2")},
          [](const ParamMap& m) {
              return ok_lower(2 * pm(m, "b1")) && ok_lower(2 * pm(m, "b2")) &&
                     ok_lower(pm(m, "b1") + rat(1, 2));
          },
          "separation of variables for F2", "a = b1+b2-1/2, c1 = 2 b1, c2 = 2 b2");

    text2("f2-f4-srivastava", "F4(a; b; c, a-b+1; x, y^2)",
          "(1+y)^(-2*a) * F2(a; b, a-b+1/2; c, 2*a-2*b+1; x/(1+y)^2, 4*y/(1+y)^2)", {"x", "y"},
          {free_rat("a"), free_rat("b"), free_rat("c")},
          [](const ParamMap& m) {
              return ok_lower(pm(m, "c")) && ok_lower(pm(m, "a") - pm(m, "b") + 1) &&
                     ok_lower(2 * pm(m, "a") - 2 * pm(m, "b") + 1);
          },
          "F4 to F2 quadratic-argument transformation", "c2 = a-b+1");

    text2("f2-f4-quadratic", "F4(a/2; (a+1)/2; b1+1/2, b2+1/2; x^2, y^2)",
          "(1+x+y)^(-a) * F2(a; b1, b2; 2*b1, 2*b2; 2*x/(x+y+1), 2*y/(x+y+1))", {"x", "y"},
          {free_rat("a"), free_rat("b1"), free_rat("b2")},
          [](const ParamMap& m) {
              return ok_lower(pm(m, "b1") + rat(1, 2)) && ok_lower(pm(m, "b2") + rat(1, 2)) &&
                     ok_lower(2 * pm(m, "b1")) && ok_lower(2 * pm(m, "b2"));
          },
          "F4-F2 relation on squared arguments", "none");

    text2("f1-f3-pullback", "F1(a; b1, b2; c; x, y)",
          "(1-x)^(-b1) * F3(c-a, a; b1, b2; c; x/(x-1), y)", {"x", "y"},
          {free_rat("a"), free_rat("b1"), free_rat("b2"), free_rat("c")},
          [](const ParamMap& m) { return ok_lower(pm(m, "c")); }, "F1 as a prefactored F3",
          "none");

    const char* f2q[3][2] = {
        {"(1-x)^(-a) * F2(a; c1-b1, b2; c1, c2; x/(x-1), y/(1-x))", "f2-origin-transform-1"},
        {"(1-y)^(-a) * F2(a; b1, c2-b2; c1, c2; x/(1-y), y/(y-1))", "f2-origin-transform-2"},
        {"(1-x-y)^(-a) * F2(a; c1-b1, c2-b2; c1, c2; x/(x+y-1), y/(x+y-1))",
         "f2-origin-transform-3"}};
    for (auto& row : f2q)
        text2(row[1], "F2(a; b1, b2; c1, c2; x, y)", row[0], {"x", "y"},
              {free_rat("a"), free_rat("b1"), free_rat("b2"), free_rat("c1"), free_rat("c2")},
              [](const ParamMap& m) { return ok_lower(pm(m, "c1")) && ok_lower(pm(m, "c2")); },
              "F2 series transformations at the origin", "none");

    const char* f1sx[5][2] = {
        {"(1-x)^(-b1) * (1-y)^(-b2) * F1(c-a; b1, b2; c; x/(x-1), y/(y-1))", "f1-sextet-1"},
        {"(1-x)^(-a) * F1(a; c-b1-b2, b2; c; x/(x-1), (x-y)/(x-1))", "f1-sextet-2"},
        {"(1-y)^(-a) * F1(a; b1, c-b1-b2; c; (x-y)/(1-y), y/(y-1))", "f1-sextet-3"},
        {"(1-x)^(c-a-b1) * (1-y)^(-b2) * F1(c-a; c-b1-b2, b2; c; x, (x-y)/(1-y))", "f1-sextet-4"},
        {"(1-x)^(-b1) * (1-y)^(c-a-b2) * F1(c-a; b1, c-b1-b2; c; (x-y)/(x-1), y)", "f1-sextet-5"}};
    for (auto& row : f1sx)
        text2(row[1], "F1(a; b1, b2; c; x, y)", row[0], {"x", "y"},
              {free_rat("a"), free_rat("b1"), free_rat("b2"), free_rat("c")},
              [](const ParamMap& m) { return ok_lower(pm(m, "c")); },
              "F1 series transformations at the origin", "none");

    text2("f1-singular-y0", "F1(a; b1, b2; c; t, 0)", "pFq([a, b1], [c]; t)", {"t"},
          {free_rat("a"), free_rat("b1"), free_rat("b2"), free_rat("c")},
          [](const ParamMap& m) { return ok_lower(pm(m, "c")); }, "F1 on the singular line y=0",
          "none");

    text2("f1-singular-diagonal", "F1(a; b1, b2; c; t, t)", "pFq([a, b1+b2], [c]; t)", {"t"},
          {free_rat("a"), free_rat("b1"), free_rat("b2"), free_rat("c")},
          [](const ParamMap& m) { return ok_lower(pm(m, "c")); }, "F1 on the singular line y=x",
          "none");

    text2("f1-trivial-null", "F1(-1; b1, b2; c; t, (c - b1*t)/b2)", "0", {"t"},
          {free_rat("b1"), free_rat("b2"), free_rat("c")},
          [](const ParamMap& m) {
              return pm(m, "b2") != 0 && pm(m, "c") != 0 && pm(m, "c") != -1;
          },
          "terminating F1 vanishing along a line", "a = -1, y = (c - b1 x)/b2");

    text2("f1-f2-blowup-exact", "F1(a; b1, b2; c; v/(1-u), v)",
          "(1-u)^b1 * F2(b1+b2; b1, a; b1+b2, c; u, v)", {"u", "v"},
          {free_rat("a"), free_rat("b1"), free_rat("b2"), free_rat("c")},
          [](const ParamMap& m) {
              return ok_lower(pm(m, "c")) && ok_lower(pm(m, "b1") + pm(m, "b2"));
          },
          "F1 as an F2 series on the blown-up origin", "u = (x-y)/x, v = y");

    auto dadm = [](const ParamMap& m) { return nonint(pm(m, "a")); };
    {
        IdentityRecord r;
        r.id = "dihedr1";
        r.mode = VerifyMode::exact;
        r.lhs = "pFq([a/2, (a+1)/2], [a+1]; z) subst z = 2*w - w^2";
        r.rhs = "((2-w)/2)^(-a)";
        r.lhs_vars = {"z"};
        r.rhs_vars = {"w"};
        r.params = {free_rat("a")};
        r.admissible = dadm;
        r.provenance = "dihedral Gauss evaluation, argument rationalized by z = 2w - w^2";
        r.constraints = "none";
        out.push_back(r);

        r.id = "dihedr2";
        r.lhs = "pFq([a/2, (a+1)/2], [1/2]; z) subst z = w^2";
        r.rhs = "((1-w)^(-a) + (1+w)^(-a))/2";
        r.provenance = "dihedral Gauss evaluation, argument rationalized by z = w^2";
        out.push_back(r);

        r.id = "dihedr3";
        r.lhs = "pFq([(a+1)/2, (a+2)/2], [3/2]; z) subst z = w^2";
        r.rhs = "((1-w)^(-a) - (1+w)^(-a)) / (2*a*w)";
        out.push_back(r);

        r.id = "dih12";
        r.lhs = "poch((a+1)/2, l) / poch(1/2, l) * pFq([a/2, (a+1)/2 + l], [1/2 - k]; z) "
                "subst z = w^2";
        r.rhs = "(1+w)^(-a)/2 * F2(a; -k, -l; -2*k, -2*l; 2*w/(1+w), 2/(1+w)) + "
                "(1-w)^(-a)/2 * F2(a; -k, -l; -2*k, -2*l; 2*w/(w-1), 2/(1-w))";
        r.params = {free_rat("a"), free_int("k", 0, 2), free_int("l", 0, 2)};
        r.check_term_counts = true;
        r.provenance = "dihedral Gauss function as two terminating F2 sums, even combination";
        r.constraints = "b1 = -k, b2 = -l, c1 = -2k, c2 = -2l";
        out.push_back(r);

        r.id = "dih32";
        r.order = 12;
        r.lhs = "poch((a+1)/2, k) * poch(a/2, k+l+1) / (poch(1/2, k) * poch(1/2, k+1) * "
                "poch(1/2, l)) * (-1)^(k+1) * z^(k+1/2) * "
                "pFq([(a+1)/2 + k, a/2 + k + l + 1], [3/2 + k]; z) subst z = w^2";
        r.rhs = "(1+w)^(-a)/2 * F2(a; -k, -l; -2*k, -2*l; 2*w/(1+w), 2/(1+w)) - "
                "(1-w)^(-a)/2 * F2(a; -k, -l; -2*k, -2*l; 2*w/(w-1), 2/(1-w))";
        r.provenance = "dihedral Gauss function as two terminating F2 sums, odd combination";
        out.push_back(r);

        r.id = "diha2";
        r.order = 8;
        r.lhs = "pFq([(a-l)/2, (a+l+1)/2], [a+k+1]; z) subst z = 2*w - w^2";
        r.rhs = "((2-w)/2)^(-a-k) * (1-w)^k * F3(k+1, l+1; -k, -l; a+k+1; -w/(2*(1-w)), w/2)";
        r.provenance = "dihedral Gauss function as a terminating F3 sum";
        out.push_back(r);
    }

    {
        IdentityRecord r;
        r.id = "f2-f3-reversal";
        r.mode = VerifyMode::exact;
        r.order = 1;
        r.lhs = "F2(a; -k, -l; -2*k, -2*l; x0, y0)";
        r.rhs = "poch(1,k) * poch(1,l) * poch(a, k+l) / (poch(1,2*k) * poch(1,2*l)) * "
                "x0^k * y0^l * F3(k+1, l+1; -k, -l; 1-a-k-l; 1/x0, 1/y0)";
        r.lhs_vars = r.rhs_vars = {};
        r.params = {free_rat("a"), free_int("k", 1, 2), free_int("l", 1, 2), free_rat("x0"),
                    free_rat("y0")};
        r.admissible = [](const ParamMap& m) {
            return nonint(pm(m, "a")) && pm(m, "x0") != 0 && pm(m, "y0") != 0;
        };
        r.provenance = "terminating F2 rewritten as an F3 sum by reversing both summations";
        r.constraints = "b1 = -k, b2 = -l, c1 = -2k, c2 = -2l; evaluated at rational points";
        out.push_back(r);
    }

    struct Q {
        const char* id;
        const char* lhs;
        const char* rhs;
    } quads[] = {
        {"appendix-4f3-1", "F2(a; b, b; c, c; t, -t)",
         "pFq([a/2, (a+1)/2, b, c-b], [c, c/2, (c+1)/2]; t^2)"},
        {"appendix-4f3-2", "F2(a; b1, b2; 2*b1, 2*b2; t, -t)",
         "pFq([a/2, (a+1)/2, (b1+b2)/2, (b1+b2+1)/2], [b1+1/2, b2+1/2, b1+b2]; t^2)"},
        {"appendix-4f3-3", "F3(a, a; b, b; c; t, -t)",
         "pFq([a, b, (a+b)/2, (a+b+1)/2], [a+b, c/2, (c+1)/2]; t^2)"},
        {"appendix-4f3-4", "F4(a; b; c1, c2; t, t)",
         "pFq([a, b, (c1+c2)/2, (c1+c2-1)/2], [c1, c2, c1+c2-1]; 4*t)"},
        {"appendix-4f3-5", "F4(a; b; c, c; t, -t)",
         "pFq([a/2, (a+1)/2, b/2, (b+1)/2], [c, c/2, (c+1)/2]; -4*t^2)"},
    };
    for (auto& q : quads) {
        std::vector<ParamSpec> ps;
        std::function<bool(const ParamMap&)> adm;
        std::string id = q.id;
        if (id == "appendix-4f3-2") {
            ps = {free_rat("a"), free_rat("b1"), free_rat("b2")};
            adm = [](const ParamMap& m) {
                return ok_lower(2 * pm(m, "b1")) && ok_lower(2 * pm(m, "b2")) &&
                       ok_lower(pm(m, "b1") + rat(1, 2)) && ok_lower(pm(m, "b2") + rat(1, 2)) &&
                       ok_lower(pm(m, "b1") + pm(m, "b2"));
            };
        } else if (id == "appendix-4f3-4") {
            ps = {free_rat("a"), free_rat("b"), free_rat("c1"), free_rat("c2")};
            adm = [](const ParamMap& m) {
                return ok_lower(pm(m, "c1")) && ok_lower(pm(m, "c2")) &&
                       ok_lower(pm(m, "c1") + pm(m, "c2") - 1);
            };
        } else {
            ps = {free_rat("a"), free_rat("b"), free_rat("c")};
            adm = [id](const ParamMap& m) {
                Rat c = pm(m, "c");
                bool base = ok_lower(c) && ok_lower(c / 2) && ok_lower((c + 1) / 2);
                if (id == "appendix-4f3-3") base = base && ok_lower(pm(m, "a") + pm(m, "b"));
                return base;
            };
        }
        text2(q.id, q.lhs, q.rhs, {"t"}, std::move(ps), std::move(adm),
              "quadratic-argument reduction to a 4F3 series", "arguments on the line y = x or y = -x");
    }
}

// ------------------------------------------- proportional and negative

void add_special(std::vector<IdentityRecord>& out) {
    {
        IdentityRecord r;
        r.id = "f1-x1-gamma";
        r.mode = VerifyMode::proportional;
        r.params = {free_rat("a"), free_rat("b1"), free_int("j", 1, 4), free_rat("c"),
                    derived("b2", [](const ParamMap& m) { return Rat(-pm(m, "j")); })};
        r.admissible = [](const ParamMap& m) {
            Rat c = pm(m, "c");
            if (!ok_lower(c) || !ok_lower(c - pm(m, "b2")) || !nonint(pm(m, "a"))) return false;
            for (long mm = 0; mm <= to_long(pm(m, "j")); ++mm)
                if (c + Rat(mm) == 0) return false;
            return true;
        };
        r.checker = [](const ParamMap& m, int N) -> CheckOutcome {
            Rat a = pm(m, "a"), b1 = pm(m, "b1"), b2 = pm(m, "b2"), c = pm(m, "c");
            long j = to_long(-b2);
            TS1 lhs = TS1::constant(Rat(0), N);
            for (long mm = 0; mm <= j; ++mm) {
                Rat coef = pochhammer(a, mm) * pochhammer(b2, mm) /
                           (pochhammer(c, mm) * pochhammer(Rat(1), mm));
                lhs = lhs + pfq_series(PfqSpec{{a + Rat(mm), b1}, {c + Rat(mm)}}, N).scaled(coef);
            }
            TS1 rhs = pfq_series(PfqSpec{{a, b1}, {c - b2}}, N);
            Rat ratio;
            auto cmp = genval_proportional(GenSeries2::from_ts2(TS2::from_ts1(lhs, 0)),
                                           GenSeries2::from_ts2(TS2::from_ts1(rhs, 0)), N, &ratio);
            if (!cmp.ok) return {false, cmp.detail};
            return {true, "ratio " + rat_str(ratio)};
        };
        r.provenance = "F1 on the singular line y=1; the constant is absorbed by the mode";
        r.constraints = "b2 = -j a negative integer so the inner sums terminate";
        out.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "f3-x1-gamma";
        r.mode = VerifyMode::proportional;
        r.params = {free_rat("a1"), free_rat("a2"), free_rat("b1"), free_int("j", 1, 4),
                    free_rat("c"), derived("b2", [](const ParamMap& m) { return Rat(-pm(m, "j")); })};
        r.admissible = [](const ParamMap& m) {
            Rat c = pm(m, "c");
            if (!ok_lower(c) || !ok_lower(c - pm(m, "a2")) || !ok_lower(c - pm(m, "b2")) ||
                !nonint(pm(m, "a2")))
                return false;
            for (long mm = 0; mm <= to_long(pm(m, "j")); ++mm)
                if (c + Rat(mm) == 0) return false;
            return true;
        };
        r.checker = [](const ParamMap& m, int N) -> CheckOutcome {
            Rat a1 = pm(m, "a1"), a2 = pm(m, "a2"), b1 = pm(m, "b1"), b2 = pm(m, "b2"),
                c = pm(m, "c");
            long j = to_long(-b2);
            TS1 lhs = TS1::constant(Rat(0), N);
            for (long mm = 0; mm <= j; ++mm) {
                Rat coef = pochhammer(a2, mm) * pochhammer(b2, mm) /
                           (pochhammer(c, mm) * pochhammer(Rat(1), mm));
                lhs = lhs + pfq_series(PfqSpec{{a1, b1}, {c + Rat(mm)}}, N).scaled(coef);
            }
            TS1 rhs = pfq_series(PfqSpec{{a1, b1, c - a2 - b2}, {c - a2, c - b2}}, N);
            Rat ratio;
            auto cmp = genval_proportional(GenSeries2::from_ts2(TS2::from_ts1(lhs, 0)),
                                           GenSeries2::from_ts2(TS2::from_ts1(rhs, 0)), N, &ratio);
            if (!cmp.ok) return {false, cmp.detail};
            return {true, "ratio " + rat_str(ratio)};
        };
        r.provenance = "F3 on the singular line y=1; coefficient sums stabilize with the degree";
        r.constraints = "b2 = -j a negative integer so the inner sums terminate";
        out.push_back(r);
    }
    {
        IdentityRecord r;
        r.id = "f2x1-wrongformula";
        r.mode = VerifyMode::expect_fail;
        r.params = {free_rat("a"), free_rat("b1"), free_rat("b2"), free_rat("c1"),
                    free_rat("c2")};
        r.admissible = [](const ParamMap& m) {
            // Termination would make the termwise evaluation exact; the
            // negative control needs genuinely infinite inner sums.
            return ok_lower(pm(m, "c1")) && ok_lower(pm(m, "c2")) && nonint(pm(m, "b2")) &&
                   nonint(pm(m, "a")) &&
                   ok_lower(pm(m, "a") + pm(m, "b2") - pm(m, "c2") + 1) &&
                   nonint(pm(m, "c2") - pm(m, "a") - pm(m, "b2"));
        };
        r.checker = [](const ParamMap& m, int N) -> CheckOutcome {
            Rat a = pm(m, "a"), b1 = pm(m, "b1"), b2 = pm(m, "b2"), c1 = pm(m, "c1"),
                c2 = pm(m, "c2");
            // The y=1 specialization of the truncated double series: the inner
            // sums over the second index are partial sums only.
            TS2 s = appell_series(AppellSpec::f2(a, b1, b2, c1, c2), N);
            TS1 part(N);
            for (int n = 0; n <= N; ++n) {
                Rat acc(0);
                for (int mm = 0; n + mm <= N; ++mm) acc += s.coeff(n, mm);
                part.set(n, acc);
            }
            TS1 h = pfq_series(PfqSpec{{a, b1, a - c2 + 1}, {c1, a + b2 - c2 + 1}}, N);
            Rat ratio;
            auto cmp = genval_proportional(GenSeries2::from_ts2(TS2::from_ts1(part, 0)),
                                           GenSeries2::from_ts2(TS2::from_ts1(h, 0)), N, &ratio);
            long n0 = rat_floor(c2 - a - b2) + 1;
            if (n0 < 0) n0 = 0;
            if (!cmp.ok)
                return {true, "mismatch as expected (" + cmp.detail +
                                  "); the inner sums stop converging from x^" +
                                  std::to_string(n0) + " on"};
            return {false, "unexpected agreement through the compared order"};
        };
        r.provenance = "termwise evaluation of F2 at y=1 is not a valid series identity";
        r.constraints = "generic parameters; the companion same-ode record passes";
        out.push_back(r);
    }
}

// ---------------------------------------------------------------- same-ode

void add_same_ode(std::vector<IdentityRecord>& out) {
    auto rec = [&](std::string id, std::vector<ParamSpec> ps,
                   std::function<bool(const ParamMap&)> adm,
                   std::function<CheckOutcome(const ParamMap&, int)> chk, std::string prov,
                   std::string constr) {
        IdentityRecord r;
        r.id = std::move(id);
        r.mode = VerifyMode::same_ode;
        r.params = std::move(ps);
        r.admissible = std::move(adm);
        r.checker = std::move(chk);
        r.provenance = std::move(prov);
        r.constraints = std::move(constr);
        out.push_back(std::move(r));
    };
    auto f2_params = [] {
        return std::vector<ParamSpec>{free_rat("a"), free_rat("b1"), free_rat("b2"),
                                      free_rat("c1"), free_rat("c2")};
    };
    auto f2_adm = [](const ParamMap& m) {
        return ok_lower(pm(m, "c1")) && ok_lower(pm(m, "c2"));
    };

    rec("f2-y0-euler", f2_params(), f2_adm,
        [](const ParamMap& m, int) {
            ElimSpec e{AppellSpec::f2(pm(m, "a"), pm(m, "b1"), pm(m, "b2"), pm(m, "c1"),
                                      pm(m, "c2")),
                       mkcurve("t", "0", m), 4, 2, 2};
            return elim_equals(e, euler_ode(pm(m, "a"), pm(m, "b1"), pm(m, "c1")), "F2(x,0)");
        },
        "F2 on the singular line y=0 satisfies the Gauss equation", "none");

    rec("f2-y1-hpg32", f2_params(), f2_adm,
        [](const ParamMap& m, int) {
            Rat a = pm(m, "a"), b1 = pm(m, "b1"), b2 = pm(m, "b2"), c1 = pm(m, "c1"),
                c2 = pm(m, "c2");
            ElimSpec e{AppellSpec::f2(a, b1, b2, c1, c2), mkcurve("t", "1", m), 4, 2, 3};
            return elim_equals(e, hpg32_ode(a, b1, a - c2 + 1, c1, a + b2 - c2 + 1), "F2(x,1)");
        },
        "F2 on the singular line y=1 satisfies a 3F2 equation", "none");

    rec("f2-y1mx-hpg32", f2_params(), f2_adm,
        [](const ParamMap& m, int) {
            Rat a = pm(m, "a"), b1 = pm(m, "b1"), b2 = pm(m, "b2"), c1 = pm(m, "c1"),
                c2 = pm(m, "c2");
            ElimSpec e{AppellSpec::f2(a, b1, b2, c1, c2), mkcurve("t", "1-t", m), 4, 2, 3};
            Lode h = hpg32_ode(a, c1 - b1, a - c2 + 1, c1, a + b2 - c2 + 1);
            RatFunc phi = curve_component("t/(t-1)", m);
            return elim_equals(e, pullback_transform(h, phi, {{Rat(1), -a}}), "F2(x,1-x)");
        },
        "F2 on the singular line x+y=1 satisfies a prefactored 3F2 equation", "none");

    rec("f2-xy2",
        {free_rat("a"), free_rat("b1"), free_rat("b2"),
         derived("c1", [](const ParamMap& m) { return Rat(2 * pm(m, "b1")); }),
         derived("c2", [](const ParamMap& m) { return Rat(2 * pm(m, "b2")); })},
        f2_adm,
        [](const ParamMap& m, int) -> CheckOutcome {
            Rat a = pm(m, "a"), b1 = pm(m, "b1"), b2 = pm(m, "b2");
            ElimSpec e{AppellSpec::f2(a, b1, b2, 2 * b1, 2 * b2), mkcurve("t", "2-t", m), 2, 0, 2};
            Lode want = f2_xy2_ode(a, b1, b2);
            auto first = elim_equals(e, want, "F2(x,2-x)");
            if (!first.pass) return first;
            RatFunc phi = curve_component("t^2/(2-t)^2", m);
            Lode pb = pullback_transform(euler_ode(a / 2 + rat(1, 2) - b2, a / 2, b1 + rat(1, 2)),
                                         phi, {{Rat(2), -a}});
            return cmp_lodes(pb, want, "quadratic pullback of the Gauss equation");
        },
        "F2(x,2-x) with c1=2b1, c2=2b2: order-2 equation and its pullback form",
        "c1 = 2 b1, c2 = 2 b2");

    rec("f2-xy2-necessity", f2_params(),
        [](const ParamMap& m) {
            return ok_lower(pm(m, "c1")) && ok_lower(pm(m, "c2")) &&
                   (pm(m, "c1") != 2 * pm(m, "b1") || pm(m, "c2") != 2 * pm(m, "b2"));
        },
        [](const ParamMap& m, int) -> CheckOutcome {
            auto r = minimal_ode(AppellSpec::f2(pm(m, "a"), pm(m, "b1"), pm(m, "b2"),
                                                pm(m, "c1"), pm(m, "c2")),
                                 mkcurve("t", "2-t", m), 2, 0);
            if (r.found())
                return {false, "unexpected order-" + std::to_string(r.order) +
                                   " equation without the parameter relations"};
            return {true, "no ODE found within bounds, as classified"};
        },
        "no order-2 equation along y = 2-x without c1=2b1, c2=2b2",
        "(c1, c2) != (2 b1, 2 b2)");

    auto sep_params = [] {
        return std::vector<ParamSpec>{free_rat("b1"), free_rat("b2"), free_rat("s")};
    };
    auto sep_adm = [](const ParamMap& m) {
        Rat s = pm(m, "s");
        return ok_lower(2 * pm(m, "b1")) && ok_lower(2 * pm(m, "b2")) && s != 0 && s != 1 &&
               s != -1;
    };

    rec("f2-separated-family", sep_params(), sep_adm,
        [](const ParamMap& m, int) -> CheckOutcome {
            Rat b1 = pm(m, "b1"), b2 = pm(m, "b2"), s = pm(m, "s");
            Rat a = b1 + b2 - rat(1, 2);
            ElimSpec e{AppellSpec::f2(a, b1, b2, 2 * b1, 2 * b2),
                       mkcurve("1 - t^2", "1 - (t+s)^2/(s^2-1)", m), 2, 0, 2};
            Lode want = f2_sep_ode(b1, b2, s);
            auto first = elim_equals(e, want, "separated F2 family");
            if (!first.pass) return first;
            Rat K = (s + 1) / (s - 1);
            RatFunc phi = RatFunc(K) * curve_component("(t+1)^2/(t-1)^2", m);
            Lode pb = pullback_transform(euler_ode(b2, b1 + b2 - rat(1, 2), b1 + rat(1, 2)), phi,
                                         {{Rat(1), 1 - 2 * b1 - 2 * b2}});
            return cmp_lodes(pb, want, "pullback with K=(s+1)/(s-1)");
        },
        "the separated F2 family and its Gauss pullback", "a = b1+b2-1/2, c_i = 2 b_i");

    rec("f2-sep-product", sep_params(), sep_adm,
        [](const ParamMap& m, int) -> CheckOutcome {
            Rat b1 = pm(m, "b1"), b2 = pm(m, "b2"), s = pm(m, "s");
            Rat a = b1 + b2 - rat(1, 2);
            ElimSpec e{AppellSpec::f2(a, b1, b2, 2 * b1, 2 * b2),
                       mkcurve("-4*s*t/(t-s)^2", "-(s^2-1)*(t^2-1)/(t-s)^2", m), 2, 0, 2};
            Lode pb = pullback_transform(euler_ode(b1 + b2 - rat(1, 2), b2, b1 + rat(1, 2)),
                                         RatFunc(UniPoly::var().pow(2)),
                                         {{s, 2 * b1 + 2 * b2 - 1}});
            return elim_equals(e, pb, "product form of the separated F2 family");
        },
        "separated F2 family in product coordinates", "a = b1+b2-1/2, c_i = 2 b_i");

    auto f3_params = [] {
        return std::vector<ParamSpec>{free_rat("a1"), free_rat("a2"), free_rat("b1"),
                                      free_rat("b2"), free_rat("c")};
    };
    auto f3_adm = [](const ParamMap& m) { return ok_lower(pm(m, "c")); };

    rec("f3-y1-hpg32", f3_params(), f3_adm,
        [](const ParamMap& m, int) {
            Rat a1 = pm(m, "a1"), a2 = pm(m, "a2"), b1 = pm(m, "b1"), b2 = pm(m, "b2"),
                c = pm(m, "c");
            ElimSpec e{AppellSpec::f3(a1, a2, b1, b2, c), mkcurve("t", "1", m), 4, 2, 3};
            return elim_equals(e, hpg32_ode(a1, b1, c - a2 - b2, c - a2, c - b2), "F3(x,1)");
        },
        "F3 on the singular line y=1 satisfies a 3F2 equation", "none");

    rec("f3-singular-hyperbola", f3_params(), f3_adm,
        [](const ParamMap& m, int) {
            Rat a1 = pm(m, "a1"), a2 = pm(m, "a2"), b1 = pm(m, "b1"), b2 = pm(m, "b2"),
                c = pm(m, "c");
            ElimSpec e{AppellSpec::f3(a1, a2, b1, b2, c), mkcurve("t", "t/(t-1)", m), 4, 2, 3};
            Lode h = hpg32_ode(1 + a1 + a2 - c, 1 + b1 + a2 - c, 1 - b2, 1 + a1 + a2 + b1 - c,
                               1 + a2 - b2);
            Lode pb = pullback_transform(h, curve_component("1-t", m),
                                         {{Rat(0), 1 - c}, {Rat(1), a2}});
            return elim_equals(e, pb, "F3 on xy=x+y");
        },
        "F3 on its hyperbola component satisfies a prefactored 3F2 equation", "none");

    rec("f3-karlsson", {free_rat("b1"), free_rat("b2"), free_rat("c")},
        [](const ParamMap& m) { return ok_lower(pm(m, "c")); },
        [](const ParamMap& m, int) {
            Rat b1 = pm(m, "b1"), b2 = pm(m, "b2"), c = pm(m, "c");
            ElimSpec e{AppellSpec::f3(1 - b1, 1 - b2, b1, b2, c), mkcurve("t", "t/(2*t-1)", m), 2,
                       0, 2};
            Lode eu = euler_ode((b2 - b1 + c) / 2, (b1 + b2 + c - 1) / 2, c);
            Lode pb = pullback_transform(eu, curve_component("4*t*(1-t)", m),
                                         {{Rat(1), c - 1}, {rat(1, 2), b2}});
            return elim_equals(e, pb, "F3 along y = x/(2x-1)");
        },
        "F3 along y = x/(2x-1) reduces to a quadratic-argument Gauss equation",
        "a1 = 1-b1, a2 = 1-b2");

    rec("f3-separated-family", {free_rat("b1"), free_rat("b2"), free_rat("s")},
        [](const ParamMap& m) {
            Rat s = pm(m, "s");
            return s != 0 && s != 1 && s != -1 && ok_lower(pm(m, "b1") + rat(1, 2));
        },
        [](const ParamMap& m, int) {
            Rat b1 = pm(m, "b1"), b2 = pm(m, "b2"), s = pm(m, "s");
            ElimSpec e{AppellSpec::f3(1 - b1, 1 - b2, b1, b2, rat(3, 2)),
                       mkcurve("-(t-1)^2/(4*t)", "s*(t-1)^2/((1-s)*(s*t^2-1))", m), 2, 0, 2};
            Lode eu = euler_ode(1 - b2, b2, b1 + rat(1, 2));
            Lode pb = pullback_transform(eu, curve_component("s*t^2/(s*t^2-1)", m),
                                         {{Rat(0), b1}, {Rat(1), Rat(-1)}});
            return elim_equals(e, pb, "separated F3 family");
        },
        "the separated F3 family and its Gauss pullback", "a_i = 1-b_i, c = 3/2");

    rec("f3-sep-product", {free_rat("b1"), free_rat("b2"), free_rat("s")},
        [](const ParamMap& m) {
            Rat s = pm(m, "s");
            return s != 0 && s != 1 && s != -1 && ok_lower(pm(m, "b1") + rat(1, 2));
        },
        [](const ParamMap& m, int) {
            Rat b1 = pm(m, "b1"), b2 = pm(m, "b2"), s = pm(m, "s");
            ElimSpec e{AppellSpec::f3(1 - b1, 1 - b2, b1, b2, rat(3, 2)),
                       mkcurve("-(t-s)^2/(4*s*t)", "-(t-s)^2/((s^2-1)*(t^2-1))", m), 2, 0, 2};
            Lode eu = euler_ode(b1 + b2 - rat(1, 2), b2, b1 + rat(1, 2));
            Lode pb = pullback_transform(
                eu, RatFunc(UniPoly::var().pow(2)),
                {{Rat(0), b1}, {Rat(1), b2}, {Rat(-1), b2}, {s, Rat(-1)}});
            return elim_equals(e, pb, "product form of the separated F3 family");
        },
        "separated F3 family in product coordinates", "a_i = 1-b_i, c = 3/2");

    auto f4_params = [] {
        return std::vector<ParamSpec>{free_rat("a"), free_rat("b"), free_rat("c1"),
                                      free_rat("c2")};
    };
    auto f4_adm = [](const ParamMap& m) {
        return ok_lower(pm(m, "c1")) && ok_lower(pm(m, "c2"));
    };

    rec("kato-ode", f4_params(), f4_adm,
        [](const ParamMap& m, int) {
            Rat a = pm(m, "a"), b = pm(m, "b"), c1 = pm(m, "c1"), c2 = pm(m, "c2");
            ElimSpec e{AppellSpec::f4(a, b, c1, c2), mkcurve("t^2", "(t-1)^2", m), 4, 2, 3};
            return elim_equals(e, kato_ode(a, b, c1, c2), "F4 on the quadratic locus");
        },
        "the kato equation for F4 along the quadratic singular locus", "none");

    rec("f4-bailey-family", {free_rat("a"), free_rat("b"), free_rat("c1"), free_rat("s")},
        [](const ParamMap& m) {
            Rat s = pm(m, "s");
            return ok_lower(pm(m, "c1")) && s != 0 && s != 1;
        },
        [](const ParamMap& m, int) {
            Rat a = pm(m, "a"), b = pm(m, "b"), c1 = pm(m, "c1");
            ElimSpec e{AppellSpec::f4(a, b, c1, a + b - c1 + 1),
                       mkcurve("s*t", "(1-s)*(1-t)", m), 2, 0, 2};
            return elim_equals(e, euler_ode(a, b, c1), "F4 along tangent lines");
        },
        "the Bailey F4 family along x = st, y = (1-s)(1-t)", "c2 = a+b-c1+1");

    rec("f4-quadratic-euler", {free_rat("a"), free_rat("b"), free_rat("c1")},
        [](const ParamMap& m) { return ok_lower(pm(m, "c1")) && ok_lower(2 * pm(m, "c1") - 1); },
        [](const ParamMap& m, int) {
            Rat a = pm(m, "a"), b = pm(m, "b"), c1 = pm(m, "c1");
            ElimSpec e{AppellSpec::f4(a, b, c1, a + b - c1 + rat(3, 2)),
                       mkcurve("t^2", "(1-t)^2", m), 2, 2, 2};
            return elim_equals(e, euler_ode(2 * a, 2 * b, 2 * c1 - 1),
                               "order-2 case on the quadratic locus");
        },
        "the only order-2 case of F4 on its quadratic locus", "c2 = a+b-c1+3/2");

    rec("f4-symsq", {free_rat("a"), free_rat("b"), free_rat("c")},
        [](const ParamMap& m) {
            return ok_lower(pm(m, "c")) && ok_lower(pm(m, "a") + pm(m, "b") - pm(m, "c") + 1);
        },
        [](const ParamMap& m, int) -> CheckOutcome {
            Rat a = pm(m, "a"), b = pm(m, "b"), c = pm(m, "c");
            Lode sq = symmetric_square(euler_ode(a, b, c));
            auto first = cmp_lodes(kato_ode(a, b, c, a + b - c + 1), sq,
                                   "kato vs symmetric square");
            if (!first.pass) return first;
            ElimSpec e{AppellSpec::f4(a, b, c, a + b - c + 1), mkcurve("t^2", "(1-t)^2", m), 4, 2,
                       3};
            return elim_equals(e, sq, "elimination vs symmetric square");
        },
        "F4 on the quadratic locus as a squared Gauss function", "c2 = a+b-c+1");

    rec("a4hpg2s", {free_rat("c")},
        [](const ParamMap& m) {
            Rat c = pm(m, "c");
            return ok_lower(c + rat(1, 2)) && ok_lower(2 * c) && nonint(2 * c);
        },
        [](const ParamMap& m, int) {
            Rat c = pm(m, "c");
            return cmp_lodes(kato_ode(2 * c - rat(1, 2), 3 * c - 1, c + rat(1, 2), c + rat(1, 2)),
                             symmetric_square(euler_ode(c, 3 * c - 1, 2 * c)),
                             "symmetric-square case");
        },
        "one-parameter symmetric-square family on the quadratic locus",
        "a = 2c-1/2, b = 3c-1, c1 = c2 = c+1/2");

    rec("a4hpg2s-alt1", {free_rat("c")},
        [](const ParamMap& m) { return nonint(2 * pm(m, "c")); },
        [](const ParamMap& m, int) {
            Rat c = pm(m, "c");
            Lode shifted = pullback_transform(
                kato_ode(c, 2 * c - rat(1, 2), rat(3, 2) - c, c + rat(1, 2)), RatFunc::var(),
                {{Rat(0), 1 - 2 * c}});
            return cmp_lodes(shifted, symmetric_square(euler_ode(c, 3 * c - 1, 2 * c)),
                             "projectively normalized companion");
        },
        "companion solution t^(1-2c) F4(c; 2c-1/2; 3/2-c, c+1/2) of the square family", "none");

    rec("a4hpg2s-alt2", {free_rat("c")},
        [](const ParamMap& m) { return nonint(2 * pm(m, "c")); },
        [](const ParamMap& m, int) {
            Rat c = pm(m, "c");
            Lode shifted = pullback_transform(
                kato_ode(rat(1, 2), c, rat(3, 2) - c, rat(3, 2) - c), RatFunc::var(),
                {{Rat(0), 1 - 2 * c}, {Rat(1), 1 - 2 * c}});
            return cmp_lodes(shifted, symmetric_square(euler_ode(c, 3 * c - 1, 2 * c)),
                             "doubly normalized companion");
        },
        "companion solution (t(1-t))^(1-2c) F4(1/2; c; 3/2-c, 3/2-c) of the square family",
        "none");

    rec("a4hpg3", {free_rat("a"), free_rat("b"), free_rat("c")},
        [](const ParamMap& m) {
            Rat c = pm(m, "c");
            return ok_lower(c + rat(1, 2)) && ok_lower(2 * c) &&
                   ok_lower(pm(m, "a") + pm(m, "b") + rat(1, 2));
        },
        [](const ParamMap& m, int) {
            Rat a = pm(m, "a"), b = pm(m, "b"), c = pm(m, "c");
            return cmp_lodes(kato_ode(a, b, c + rat(1, 2), rat(1, 2)),
                             hpg32_ode(2 * a, 2 * b, c, a + b + rat(1, 2), 2 * c),
                             "c2 = 1/2 case");
        },
        "the kato equation with c2=1/2 coincides with a 3F2 equation", "c1 = c+1/2, c2 = 1/2");

    rec("a4hpg3-c32", {free_rat("a"), free_rat("b"), free_rat("c")},
        [](const ParamMap& m) { return ok_lower(pm(m, "c")); },
        [](const ParamMap& m, int) {
            Rat a = pm(m, "a"), b = pm(m, "b"), c = pm(m, "c");
            Lode h = pullback_transform(
                hpg32_ode(2 * a - 1, 2 * b - 1, c - rat(1, 2), a + b - rat(1, 2), 2 * c - 1),
                RatFunc::var(), {{Rat(1), Rat(-1)}});
            return cmp_lodes(kato_ode(a, b, c, rat(3, 2)), h, "c2 = 3/2 case");
        },
        "the kato equation with c2=3/2 after the projective shift by (1-t)^(-1)", "c2 = 3/2");

    rec("a4hpg3-moebius", {free_rat("a"), free_rat("c1"), free_rat("c2")},
        [](const ParamMap& m) {
            return ok_lower(pm(m, "c1")) && ok_lower(pm(m, "c2")) &&
                   ok_lower(2 * pm(m, "c1") - 1);
        },
        [](const ParamMap& m, int) {
            Rat a = pm(m, "a"), c1 = pm(m, "c1"), c2 = pm(m, "c2");
            // Transported 3F2 data fixed by the local-exponent bookkeeping.
            Lode h = pullback_transform(
                hpg32_ode(2 * a, 2 * a - 2 * c2 + 2, c1 - rat(1, 2), 2 * c1 - 1,
                          2 * a - c2 + rat(3, 2)),
                curve_component("t/(t-1)", m), {{Rat(1), -2 * a}});
            return cmp_lodes(kato_ode(a, a + rat(1, 2), c1, c2), h, "b = a+1/2 case");
        },
        "the kato equation with b=a+1/2 after permuting t=1 and infinity", "b = a+1/2");

    rec("a4hpg3-companion1", {free_rat("a"), free_rat("b"), free_rat("c")},
        [](const ParamMap& m) { return ok_lower(pm(m, "c") + rat(1, 2)); },
        [](const ParamMap& m, int) {
            Rat a = pm(m, "a"), b = pm(m, "b"), c = pm(m, "c");
            Lode shifted = pullback_transform(
                kato_ode(a + rat(1, 2), b + rat(1, 2), c + rat(1, 2), rat(3, 2)), RatFunc::var(),
                {{Rat(1), Rat(1)}});
            return cmp_lodes(shifted, hpg32_ode(2 * a, 2 * b, c, a + b + rat(1, 2), 2 * c),
                             "shifted companion");
        },
        "companion solution (1-t) F4(a+1/2; b+1/2; c+1/2, 3/2) of the 3F2 case", "none");

    rec("a4hpg3-companion2", {free_rat("a"), free_rat("b"), free_rat("c")},
        [](const ParamMap& m) {
            return ok_lower(pm(m, "c") + rat(1, 2)) && ok_lower(1 + pm(m, "a") - pm(m, "b")) &&
                   nonint(2 * pm(m, "a"));
        },
        [](const ParamMap& m, int) {
            Rat a = pm(m, "a"), b = pm(m, "b"), c = pm(m, "c");
            auto r = minimal_ode(AppellSpec::f4(a, a + rat(1, 2), c + rat(1, 2), 1 + a - b),
                                 mkcurve("t^2/(t-1)^2", "1/(t-1)^2", m), 4, 2);
            if (!r.found()) return CheckOutcome{false, "no ODE found within bounds"};
            Lode shifted = pullback_transform(r.ode, RatFunc::var(), {{Rat(1), -2 * a}});
            return cmp_lodes(shifted, hpg32_ode(2 * a, 2 * b, c, a + b + rat(1, 2), 2 * c),
                             "transformed-argument companion");
        },
        "companion solution (1-t)^(-2a) F4(a; a+1/2; c+1/2, 1+a-b) with transformed arguments",
        "none");

    auto f1q_params = [] { return std::vector<ParamSpec>{free_rat("a"), free_rat("b")}; };
    auto f1q_adm = [](const ParamMap& m) {
        Rat a = pm(m, "a"), b = pm(m, "b");
        return ok_lower(1 + b) && ok_lower(2 * a) && ok_lower(1 + a - 2 * b) && nonint(a) &&
               nonint(b) && nonint(a - b) && nonint(a - 2 * b);
    };
    auto f1q0_lode = [](const ParamMap& m) {
        Rat a = pm(m, "a"), b = pm(m, "b");
        return pullback_transform(euler_ode(a, rat(1, 2), 1 + b),
                                  curve_component("-4*t/(t-1)^2", m), {{Rat(1), -2 * a}});
    };

    rec("f1q0-ode", f1q_params(), f1q_adm,
        [f1q0_lode](const ParamMap& m, int) {
            Rat a = pm(m, "a"), b = pm(m, "b");
            ElimSpec e{AppellSpec::f1(a, 2 * b, a - b, 1 + b), mkcurve("t", "t^2", m), 2, 2, 2};
            return elim_equals(e, f1q0_lode(m), "F1 along y = x^2");
        },
        "F1 along y = x^2 equals a quadratic-argument Gauss pullback",
        "b1 = 2b, b2 = a-b, c = 1+b");

    struct F1Q {
        const char* id;
        const char* note;
        std::function<AppellSpec(const ParamMap&)> sys;
        const char* cx;
        const char* cy;
        std::function<std::vector<ThetaFactor>(const ParamMap&)> theta;
    } f1qs[] = {
        {"f1q1a", "companion (1-x)^(-a) F1(a; 1-a, a-b; 1+b)",
         [](const ParamMap& m) {
             return AppellSpec::f1(pm(m, "a"), 1 - pm(m, "a"), pm(m, "a") - pm(m, "b"),
                                   1 + pm(m, "b"));
         },
         "t/(t-1)", "-t",
         [](const ParamMap& m) {
             return std::vector<ThetaFactor>{{Rat(1), -pm(m, "a")}};
         }},
        {"f1q1b", "companion (1-x^2)^(-a) F1(a; 2b, 1-a; 1+b)",
         [](const ParamMap& m) {
             return AppellSpec::f1(pm(m, "a"), 2 * pm(m, "b"), 1 - pm(m, "a"), 1 + pm(m, "b"));
         },
         "t/(t+1)", "t^2/(t^2-1)",
         [](const ParamMap& m) {
             return std::vector<ThetaFactor>{{Rat(1), -pm(m, "a")}, {Rat(-1), -pm(m, "a")}};
         }},
        {"f1q2a", "companion F1(a; 2b, a-b; 2a; 1-x, 1-x^2)",
         [](const ParamMap& m) {
             return AppellSpec::f1(pm(m, "a"), 2 * pm(m, "b"), pm(m, "a") - pm(m, "b"),
                                   2 * pm(m, "a"));
         },
         "1-t", "1-t^2", [](const ParamMap&) { return std::vector<ThetaFactor>{}; }},
        {"f1q2b", "companion x^(-a) F1(a; a-b, a-b; 2a)",
         [](const ParamMap& m) {
             return AppellSpec::f1(pm(m, "a"), pm(m, "a") - pm(m, "b"), pm(m, "a") - pm(m, "b"),
                                   2 * pm(m, "a"));
         },
         "(t-1)/t", "1-t",
         [](const ParamMap& m) {
             return std::vector<ThetaFactor>{{Rat(0), -pm(m, "a")}};
         }},
        {"f1q3a", "companion x^(-a) F1(a; a-b, a-b; 1+a-2b)",
         [](const ParamMap& m) {
             return AppellSpec::f1(pm(m, "a"), pm(m, "a") - pm(m, "b"), pm(m, "a") - pm(m, "b"),
                                   1 + pm(m, "a") - 2 * pm(m, "b"));
         },
         "1/t", "t",
         [](const ParamMap& m) {
             return std::vector<ThetaFactor>{{Rat(0), -pm(m, "a")}};
         }},
        {"f1q3b", "companion (x-1)^(-a) F1(a; 1-a, a-b; 1+a-2b)",
         [](const ParamMap& m) {
             return AppellSpec::f1(pm(m, "a"), 1 - pm(m, "a"), pm(m, "a") - pm(m, "b"),
                                   1 + pm(m, "a") - 2 * pm(m, "b"));
         },
         "1/(1-t)", "t+1",
         [](const ParamMap& m) {
             return std::vector<ThetaFactor>{{Rat(1), -pm(m, "a")}};
         }},
        {"f1q4", "companion x^(-b)(1-x)^(2b-2a) F1(1-2b; a-b, a-b; 1+a-2b), linear arguments",
         [](const ParamMap& m) {
             return AppellSpec::f1(1 - 2 * pm(m, "b"), pm(m, "a") - pm(m, "b"),
                                   pm(m, "a") - pm(m, "b"), 1 + pm(m, "a") - 2 * pm(m, "b"));
         },
         "1/(1-t)", "t/(t-1)",
         [](const ParamMap& m) {
             return std::vector<ThetaFactor>{{Rat(0), -pm(m, "b")},
                                             {Rat(1), 2 * pm(m, "b") - 2 * pm(m, "a")}};
         }},
        {"f1q5", "companion x^(-b)(1-x)^(1-2a) F1(1-2b; a-b, 1-a; 1+a-2b), linear arguments",
         [](const ParamMap& m) {
             return AppellSpec::f1(1 - 2 * pm(m, "b"), pm(m, "a") - pm(m, "b"), 1 - pm(m, "a"),
                                   1 + pm(m, "a") - 2 * pm(m, "b"));
         },
         "t+1", "t",
         [](const ParamMap& m) {
             return std::vector<ThetaFactor>{{Rat(0), -pm(m, "b")},
                                             {Rat(1), 1 - 2 * pm(m, "a")}};
         }},
    };
    for (auto& q : f1qs) {
        std::string note = q.note;
        auto sysf = q.sys;
        std::string cx = q.cx, cy = q.cy;
        auto thetaf = q.theta;
        rec(q.id, f1q_params(), f1q_adm,
            [f1q0_lode, sysf, cx, cy, thetaf, note](const ParamMap& m, int) -> CheckOutcome {
                auto r = minimal_ode(sysf(m), mkcurve(cx, cy, m), 2, 2);
                if (!r.found()) return {false, note + ": no ODE found within bounds"};
                Lode shifted = pullback_transform(r.ode, RatFunc::var(), thetaf(m));
                return cmp_lodes(shifted, f1q0_lode(m), note);
            },
            note, "parameters tied to (a, b) of the y = x^2 family");
    }

    rec("f1q6", {free_rat("b1"), free_rat("b2")},
        [](const ParamMap& m) {
            Rat b1 = pm(m, "b1"), b2 = pm(m, "b2");
            return ok_lower(2 - b1 - b2) && nonint(b1) && nonint(b2) && nonint(b1 + b2);
        },
        [](const ParamMap& m, int) {
            Rat b1 = pm(m, "b1"), b2 = pm(m, "b2");
            ElimSpec e{AppellSpec::f1(1 - b2, b1, b2, 2 - b1 - b2), mkcurve("t", "t/(t+1)", m), 2,
                       2, 2};
            Lode pb = pullback_transform(euler_ode(1 - b1, rat(1, 2), 2 - b1 - b2),
                                         curve_component("-4*t/(t-1)^2", m),
                                         {{Rat(-1), pm(m, "b2")}, {Rat(1), Rat(-1)}});
            return elim_equals(e, pb, "F1 along y = x/(x+1)");
        },
        "F1 along y = x/(x+1) with tied parameters", "a = 1-b2, c = 2-b1-b2");
}

// ---------------------------------------------------------------- solves

void add_solves(std::vector<IdentityRecord>& out) {
    auto rec = [&](std::string id, std::vector<ParamSpec> ps,
                   std::function<bool(const ParamMap&)> adm,
                   std::function<CheckOutcome(const ParamMap&, int)> chk, std::string prov,
                   std::string constr) {
        IdentityRecord r;
        r.id = std::move(id);
        r.mode = VerifyMode::solves_system;
        r.params = std::move(ps);
        r.admissible = std::move(adm);
        r.checker = std::move(chk);
        r.provenance = std::move(prov);
        r.constraints = std::move(constr);
        out.push_back(std::move(r));
    };

    auto f2_params = [] {
        return std::vector<ParamSpec>{free_rat("a"), free_rat("b1"), free_rat("b2"),
                                      free_rat("c1"), free_rat("c2")};
    };

    const char* f2sol[3][2] = {
        {"f2-origin-sol-x", "x^(1-c1) * F2(1+a-c1; 1+b1-c1, b2; 2-c1, c2; x, y)"},
        {"f2-origin-sol-y", "y^(1-c2) * F2(1+a-c2; b1, 1+b2-c2; c1, 2-c2; x, y)"},
        {"f2-origin-sol-xy",
         "x^(1-c1) * y^(1-c2) * F2(2+a-c1-c2; 1+b1-c1, 1+b2-c2; 2-c1, 2-c2; x, y)"}};
    for (auto& row : f2sol) {
        std::string candidate = row[1];
        rec(row[0], f2_params(),
            [](const ParamMap& m) { return nonint(pm(m, "c1")) && nonint(pm(m, "c2")); },
            [candidate](const ParamMap& m, int N) {
                auto ops = appell_system(AppellSpec::f2(pm(m, "a"), pm(m, "b1"), pm(m, "b2"),
                                                        pm(m, "c1"), pm(m, "c2")));
                return check_solves_text(ops, candidate, ctx_of(m, {"x", "y"}), N);
            },
            "prefactored F2 local solutions at the origin", "none");
    }

    const char* f4sol[3][2] = {
        {"f4-origin-sol-x", "x^(1-c1) * F4(1+a-c1; 1+b-c1; 2-c1, c2; x, y)"},
        {"f4-origin-sol-y", "y^(1-c2) * F4(1+a-c2; 1+b-c2; c1, 2-c2; x, y)"},
        {"f4-origin-sol-xy",
         "x^(1-c1) * y^(1-c2) * F4(2+a-c1-c2; 2+b-c1-c2; 2-c1, 2-c2; x, y)"}};
    for (auto& row : f4sol) {
        std::string candidate = row[1];
        rec(row[0], {free_rat("a"), free_rat("b"), free_rat("c1"), free_rat("c2")},
            [](const ParamMap& m) { return nonint(pm(m, "c1")) && nonint(pm(m, "c2")); },
            [candidate](const ParamMap& m, int N) {
                auto ops = appell_system(
                    AppellSpec::f4(pm(m, "a"), pm(m, "b"), pm(m, "c1"), pm(m, "c2")));
                return check_solves_text(ops, candidate, ctx_of(m, {"x", "y"}), N);
            },
            "prefactored F4 local solutions at the origin", "none");
    }

    rec("app2app3-pair", f2_params(),
        [](const ParamMap& m) {
            return ok_lower(pm(m, "c1")) && ok_lower(pm(m, "c2")) &&
                   ok_lower(1 + pm(m, "b1") + pm(m, "b2") - pm(m, "a")) && nonint(pm(m, "b1")) &&
                   nonint(pm(m, "b2"));
        },
        [](const ParamMap& m, int N) -> CheckOutcome {
            auto ops = appell_system(
                AppellSpec::f2(pm(m, "a"), pm(m, "b1"), pm(m, "b2"), pm(m, "c1"), pm(m, "c2")));
            auto self =
                check_solves_text(ops, "F2(a; b1, b2; c1, c2; x, y)", ctx_of(m, {"x", "y"}), N);
            if (!self.pass) return self;
            auto moved = weyl_change_vars(ops, parse_birat("1/u"), parse_birat("1/v"));
            return check_solves_text(moved,
                                     "u^b1 * v^b2 * F3(1+b1-c1, 1+b2-c2; b1, b2; 1+b1+b2-a; u, v)",
                                     ctx_of(m, {"u", "v"}), N);
        },
        "the F2 series and its F3 companion at infinity satisfy the F2 system",
        "checked in the chart u = 1/x, v = 1/y");

    struct F1Sol {
        const char* id;
        const char* X;
        const char* Y;
        const char* cand;
    } f1sols[] = {
        {"f1-sol-1", "u", "v", "F1(a; b1, b2; c; u, v)"},
        {"f1-sol-2", "1-u", "1-v", "F1(a; b1, b2; 1+a+b1+b2-c; u, v)"},
        {"f1-sol-3", "1/u", "1/v", "u^b1 * v^b2 * F1(1+b1+b2-c; b1, b2; 1+b1+b2-a; u, v)"},
        {"f1-sol-4", "1/u", "v/u", "u^a * F1(a; 1+a-c, b2; 1+a-b1; u, v)"},
        {"f1-sol-5", "u/v", "1/v", "v^a * F1(a; b1, 1+a-c; 1+a-b2; u, v)"},
        {"f1-sol-6", "(u-v)/u", "1-v",
         "u^b1 * v^(c-a-b1-b2) * F1(c-a; b1, c-b1-b2; c-a-b2+1; u, v)"},
        {"f1-sol-7", "1-u", "(v-u)/v",
         "u^(c-a-b1-b2) * v^b2 * F1(c-a; c-b1-b2, b2; c-a-b1+1; u, v)"},
        {"f1-sol-8", "v/u", "v", "u^b1 * v^(1-c) * F1(1+b1+b2-c; b1, 1+a-c; 2+b1-c; u, v)"},
        {"f1-sol-9", "u", "u/v", "u^(1-c) * v^b2 * F1(1+b1+b2-c; 1+a-c, b2; 2+b2-c; u, v)"},
        {"f1-sol-10", "1/(1-v)", "(1-u*v)/(1-v)",
         "u^(1-b1-b2) * v^(c-a-b1-b2) * (1-v)^a * F1(1-b1; 1+a-c, c-b1-b2; 2-b1-b2; u, u*v)"},
    };
    for (auto& sol : f1sols) {
        std::string X = sol.X, Y = sol.Y, cand = sol.cand;
        rec(sol.id, {free_rat("a"), free_rat("b1"), free_rat("b2"), free_rat("c")},
            [](const ParamMap& m) {
                Rat a = pm(m, "a"), b1 = pm(m, "b1"), b2 = pm(m, "b2"), c = pm(m, "c");
                for (const Rat& low :
                     {c, Rat(1 + a + b1 + b2 - c), Rat(1 + b1 + b2 - a), Rat(1 + a - b1),
                      Rat(1 + a - b2), Rat(c - a - b2 + 1), Rat(c - a - b1 + 1), Rat(2 + b1 - c),
                      Rat(2 + b2 - c), Rat(2 - b1 - b2)})
                    if (!ok_lower(low)) return false;
                return nonint(a) && nonint(c) && nonint(b1) && nonint(b2) && nonint(b1 + b2) &&
                       nonint(a - c) && nonint(b1 + b2 - c);
            },
            [X, Y, cand](const ParamMap& m, int N) {
                auto ops = appell_system(
                    AppellSpec::f1(pm(m, "a"), pm(m, "b1"), pm(m, "b2"), pm(m, "c")));
                auto moved = (X == "u" && Y == "v")
                                 ? ops
                                 : weyl_change_vars(ops, parse_birat(X), parse_birat(Y));
                return check_solves_text(moved, cand, ctx_of(m, {"u", "v"}), N);
            },
            "one of the ten F1 local solutions", "chart x = " + X + ", y = " + Y);
    }

    rec("f1-f2-blowup", {free_rat("a"), free_rat("b1"), free_rat("b2"), free_rat("c")},
        [](const ParamMap& m) {
            return ok_lower(pm(m, "c")) && ok_lower(pm(m, "b1") + pm(m, "b2")) &&
                   nonint(pm(m, "b1"));
        },
        [](const ParamMap& m, int N) {
            auto ops =
                appell_system(AppellSpec::f1(pm(m, "a"), pm(m, "b1"), pm(m, "b2"), pm(m, "c")));
            auto moved = weyl_change_vars(ops, parse_birat("v/(1-u)"), parse_birat("v"));
            return check_solves_text(moved, "(1-u)^b1 * F2(b1+b2; b1, a; b1+b2, c; u, v)",
                                     ctx_of(m, {"u", "v"}), N);
        },
        "F1 as an F2 series on the blown-up origin satisfies the F1 system",
        "chart u = (x-y)/x, v = y");

    rec("f1-sep-elementary", {free_rat("b"), free_rat("s")},
        [](const ParamMap& m) {
            Rat s = pm(m, "s");
            return s != 0 && s != 1 && s != -1 && nonint(2 * pm(m, "b"));
        },
        [](const ParamMap& m, int N) -> CheckOutcome {
            Rat b = pm(m, "b"), s = pm(m, "s");
            auto sys = AppellSpec::f1(b + rat(1, 2), b, rat(1, 2) - b, rat(3, 2));
            Curve curve = mkcurve("(s-t)^2/(s+t)^2", "-(s-t)^2/((s^2-1)*(t^2-1))", m);
            auto r = minimal_ode(sys, curve, 3, 2);
            if (!r.found()) return {false, "no ODE found within bounds"};
            // Constant factors of the elementary solution are dropped; the
            // annihilation check is scale-free.
            auto cand = expr_expand(
                parse_expr("(1+t/s)^(2*b) * (1-t^2)^(1/2-b) * (1-t/s)^(-1)", ctx_of(m, {"t"})),
                N + r.order + 4);
            bool ok = lode_annihilates(r.ode, cand.to_univariate(), N);
            return {ok, ok ? "" : "elementary candidate not annihilated"};
        },
        "elementary solution of the separated F1 system", "a = b+1/2, b2 = 1/2-b, c = 3/2");
}

std::vector<IdentityRecord> build_catalog() {
    std::vector<IdentityRecord> out;
    add_exact(out);
    add_special(out);
    add_same_ode(out);
    add_solves(out);
    return out;
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

const std::vector<IdentityRecord>& catalog_entries() {
    static const std::vector<IdentityRecord> cat = build_catalog();
    return cat;
}

const IdentityRecord* catalog_find(const std::string& id) {
    for (const auto& r : catalog_entries())
        if (r.id == id) return &r;
    return nullptr;
}

std::vector<ParamMap> sample_parameters(const IdentityRecord& rec, uint64_t seed, int count) {
    std::mt19937_64 g(seed ^ fnv1a(rec.id));
    std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
    std::vector<ParamMap> out;
    int guard = 0;
    while ((int)out.size() < count) {
        if (++guard > 20000)
            throw std::runtime_error("sample_parameters: constraints unsatisfiable for " + rec.id);
        ParamMap m;
        for (const auto& p : rec.params) {
            switch (p.kind) {
                case ParamSpec::Kind::free_rat: {
                    long n = num(g);
                    if (n == 0) n = 1;
                    m[p.name] = rat(n, den(g));
                    break;
                }
                case ParamSpec::Kind::free_int: {
                    std::uniform_int_distribution<long> d(p.lo, p.hi);
                    m[p.name] = Rat(d(g));
                    break;
                }
                case ParamSpec::Kind::derived:
                    m[p.name] = p.derive(m);
                    break;
            }
        }
        if (rec.admissible && !rec.admissible(m)) continue;
        out.push_back(std::move(m));
    }
    return out;
}

VerificationReport verify_identity(const IdentityRecord& rec, const ParamMap& sample,
                                   int order_override) {
    VerificationReport rep;
    rep.id = rec.id;
    rep.sample = sample;
    int N = order_override > 0 ? order_override : rec.order;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (rec.checker) {
            CheckOutcome out = rec.checker(sample, N);
            rep.outcome = out.pass ? "pass" : "fail";
            rep.detail = out.detail;
        } else {
            ExpandStats stats;
            auto L = expr_expand(parse_expr(rec.lhs, ctx_of(sample, rec.lhs_vars)), N + 8, &stats);
            auto R = expr_expand(parse_expr(rec.rhs, ctx_of(sample, rec.rhs_vars)), N + 8, &stats);
            CompareResult cmp{false, ""};
            std::string extra;
            if (rec.mode == VerifyMode::proportional) {
                Rat ratio;
                cmp = genval_proportional(L, R, N, &ratio);
                extra = "ratio " + rat_str(ratio);
            } else {
                cmp = genval_equal(L, R, N);
            }
            if (rec.mode == VerifyMode::expect_fail) {
                rep.outcome = cmp.ok ? "fail" : "pass";
                rep.detail = cmp.ok ? "unexpected agreement" : "mismatch as expected: " + cmp.detail;
            } else {
                rep.outcome = cmp.ok ? "pass" : "fail";
                rep.detail = cmp.ok ? extra : cmp.detail;
            }
            if (rec.check_term_counts && rep.outcome == "pass") {
                long k = to_long(sample.at("k")), l = to_long(sample.at("l"));
                long expect = (k + 1) * (l + 1);
                for (long c : stats.terminating_terms)
                    if (c != expect) {
                        rep.outcome = "fail";
                        rep.detail = "terminating sum has " + std::to_string(c) +
                                     " terms, expected " + std::to_string(expect);
                    }
                if (rep.outcome == "pass")
                    rep.detail = "term count " + std::to_string(expect) + " per finite sum";
            }
        }
    } catch (const std::exception& e) {
        rep.outcome = "rejected";
        rep.detail = e.what();
    }
    rep.ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string catalog_list_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : catalog_entries()) {
        nlohmann::json j;
        j["id"] = r.id;
        j["mode"] = verify_mode_name(r.mode);
        j["order"] = r.order;
        j["provenance"] = r.provenance;
        j["constraints"] = r.constraints;
        if (!r.lhs.empty()) {
            j["lhs"] = r.lhs;
            j["rhs"] = r.rhs;
        }
        nlohmann::json ps = nlohmann::json::array();
        for (const auto& p : r.params) ps.push_back(p.name);
        j["parameters"] = ps;
        arr.push_back(j);
    }
    return arr.dump(2);
}

std::string report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["schema"] = "report/1";
    j["id"] = r.id;
    nlohmann::json s;
    for (const auto& [k, v] : r.sample) s[k] = rat_str(v);
    j["sample"] = s;
    j["outcome"] = r.outcome;
    j["detail"] = r.detail;
    j["ms"] = r.ms;
    return j.dump();
}

}  // namespace appell
