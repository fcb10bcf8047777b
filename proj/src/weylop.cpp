#include "appell/weylop.hpp"

#include <sstream>

namespace appell {

void WeylOp::add_term(int i, int j, const BiPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.try_emplace({i, j}, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

WeylOp WeylOp::operator+(const WeylOp& o) const {
    WeylOp r = *this;
    for (const auto& [k, c] : o.terms) r.add_term(k.first, k.second, c);
    return r;
}

WeylOp WeylOp::operator-(const WeylOp& o) const {
    WeylOp r = *this;
    for (const auto& [k, c] : o.terms) r.add_term(k.first, k.second, -c);
    return r;
}

WeylOp WeylOp::scaled(const Rat& c) const {
    WeylOp r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms) r.terms[k] = v.scaled(c);
    return r;
}

WeylOp WeylOp::mul_bipoly(const BiPoly& c) const {
    WeylOp r;
    for (const auto& [k, v] : terms) r.add_term(k.first, k.second, v * c);
    return r;
}

bool WeylOp::is_zero() const { return terms.empty(); }

std::string WeylOp::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.first > 0) os << "*Dx" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0) os << "*Dy" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    if (first) os << "0";
    return os.str();
}

WeylOp weyl_prolong(const WeylOp& op, int axis) {
    WeylOp r;
    for (const auto& [k, c] : op.terms) {
        BiPoly dc = axis == 0 ? c.dx() : c.dy();
        r.add_term(k.first, k.second, dc);
        r.add_term(k.first + (axis == 0 ? 1 : 0), k.second + (axis == 0 ? 0 : 1), c);
    }
    return r;
}

namespace {

long binom_long(int n, int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

WeylOp weyl_compose(const WeylOp& a, const WeylOp& b) {
    WeylOp r;
    for (const auto& [ka, pa] : a.terms) {
        for (const auto& [kb, qb] : b.terms) {
            // d^ka ∘ (qb d^kb): push qb through by Leibniz.
            for (int s = 0; s <= ka.first; ++s) {
                for (int t = 0; t <= ka.second; ++t) {
                    BiPoly d = qb;
                    for (int u = 0; u < s; ++u) d = d.dx();
                    for (int u = 0; u < t; ++u) d = d.dy();
                    if (d.is_zero()) continue;
                    Rat c = Rat(binom_long(ka.first, s) * binom_long(ka.second, t));
                    r.add_term(ka.first - s + kb.first, ka.second - t + kb.second,
                               (pa * d).scaled(c));
                }
            }
        }
    }
    return r;
}

GenSeries2 weyl_apply(const WeylOp& op, const GenSeries2& g) {
    std::optional<GenSeries2> acc;
    for (const auto& [k, c] : op.terms) {
        GenSeries2 d = g;
        for (int u = 0; u < k.first; ++u) d = d.partial(0);
        for (int u = 0; u < k.second; ++u) d = d.partial(1);
        d = d.mul_bipoly(c);
        acc = acc ? *acc + d : d;
    }
    if (!acc) return GenSeries2{Rat(0), Rat(0), TS2(g.body.order())};
    return *acc;
}

std::map<std::pair<int, int>, RatFunc> specialize(const WeylOp& op, const Curve& curve) {
    std::map<std::pair<int, int>, RatFunc> r;
    for (const auto& [k, c] : op.terms) {
        RatFunc f = c.eval_curve(curve.x, curve.y);
        if (!f.is_zero()) r[k] = f;
    }
    return r;
}

namespace {

BiPoly bp(const std::string& text) { return parse_bipoly(text, "x", "y"); }

}  // namespace

std::vector<WeylOp> appell_system(const AppellSpec& sys) {
    const auto& p = sys.params;
    std::vector<WeylOp> ops;
    switch (sys.kind) {
        case AppellKind::F1: {
            const Rat &a = p[0], &b1 = p[1], &b2 = p[2], &c = p[3];
            WeylOp o1, o2, o3;
            o1.add_term(2, 0, bp("x*(1-x)"));
            o1.add_term(1, 1, bp("y*(1-x)"));
            o1.add_term(1, 0, BiPoly(c) - BiPoly::x().scaled(a + b1 + 1));
            o1.add_term(0, 1, BiPoly::y().scaled(-b1));
            o1.add_term(0, 0, BiPoly(-a * b1));
            o2.add_term(0, 2, bp("y*(1-y)"));
            o2.add_term(1, 1, bp("x*(1-y)"));
            o2.add_term(0, 1, BiPoly(c) - BiPoly::y().scaled(a + b2 + 1));
            o2.add_term(1, 0, BiPoly::x().scaled(-b2));
            o2.add_term(0, 0, BiPoly(-a * b2));
            o3.add_term(1, 1, bp("y-x"));
            o3.add_term(1, 0, BiPoly(b2));
            o3.add_term(0, 1, BiPoly(-b1));
            ops = {o1, o2, o3};
            break;
        }
        case AppellKind::F2: {
            const Rat &a = p[0], &b1 = p[1], &b2 = p[2], &c1 = p[3], &c2 = p[4];
            WeylOp o1, o2;
            o1.add_term(2, 0, bp("x*(1-x)"));
            o1.add_term(1, 1, bp("-x*y"));
            o1.add_term(1, 0, BiPoly(c1) - BiPoly::x().scaled(a + b1 + 1));
            o1.add_term(0, 1, BiPoly::y().scaled(-b1));
            o1.add_term(0, 0, BiPoly(-a * b1));
            o2.add_term(0, 2, bp("y*(1-y)"));
            o2.add_term(1, 1, bp("-x*y"));
            o2.add_term(0, 1, BiPoly(c2) - BiPoly::y().scaled(a + b2 + 1));
            o2.add_term(1, 0, BiPoly::x().scaled(-b2));
            o2.add_term(0, 0, BiPoly(-a * b2));
            ops = {o1, o2};
            break;
        }
        case AppellKind::F3: {
            const Rat &a1 = p[0], &a2 = p[1], &b1 = p[2], &b2 = p[3], &c = p[4];
            WeylOp o1, o2;
            o1.add_term(2, 0, bp("x*(1-x)"));
            o1.add_term(1, 1, BiPoly::y());
            o1.add_term(1, 0, BiPoly(c) - BiPoly::x().scaled(a1 + b1 + 1));
            o1.add_term(0, 0, BiPoly(-a1 * b1));
            o2.add_term(0, 2, bp("y*(1-y)"));
            o2.add_term(1, 1, BiPoly::x());
            o2.add_term(0, 1, BiPoly(c) - BiPoly::y().scaled(a2 + b2 + 1));
            o2.add_term(0, 0, BiPoly(-a2 * b2));
            ops = {o1, o2};
            break;
        }
        case AppellKind::F4: {
            const Rat &a = p[0], &b = p[1], &c1 = p[2], &c2 = p[3];
            WeylOp o1, o2;
            o1.add_term(2, 0, bp("x*(1-x)"));
            o1.add_term(0, 2, bp("-y^2"));
            o1.add_term(1, 1, bp("-2*x*y"));
            o1.add_term(1, 0, BiPoly(c1) - BiPoly::x().scaled(a + b + 1));
            o1.add_term(0, 1, BiPoly::y().scaled(-(a + b + 1)));
            o1.add_term(0, 0, BiPoly(-a * b));
            o2.add_term(0, 2, bp("y*(1-y)"));
            o2.add_term(2, 0, bp("-x^2"));
            o2.add_term(1, 1, bp("-2*x*y"));
            o2.add_term(0, 1, BiPoly(c2) - BiPoly::y().scaled(a + b + 1));
            o2.add_term(1, 0, BiPoly::x().scaled(-(a + b + 1)));
            o2.add_term(0, 0, BiPoly(-a * b));
            ops = {o1, o2};
            break;
        }
    }
    return ops;
}

std::vector<LocusComponent> singular_locus(AppellKind kind) {
    switch (kind) {
        case AppellKind::F1:
            return {{"x=0", bp("x")},
                    {"x=1", bp("x-1")},
                    {"y=0", bp("y")},
                    {"y=1", bp("y-1")},
                    {"y=x", bp("y-x")}};
        case AppellKind::F2:
            return {{"x=0", bp("x")},
                    {"x=1", bp("x-1")},
                    {"y=0", bp("y")},
                    {"y=1", bp("y-1")},
                    {"x+y=1", bp("x+y-1")}};
        case AppellKind::F3:
            return {{"x=0", bp("x")},
                    {"x=1", bp("x-1")},
                    {"y=0", bp("y")},
                    {"y=1", bp("y-1")},
                    {"xy=x+y", bp("x*y-x-y")}};
        case AppellKind::F4:
            return {{"x=0", bp("x")},
                    {"y=0", bp("y")},
                    {"quadratic", bp("x^2+y^2+1-2*x*y-2*x-2*y")}};
    }
    throw std::logic_error("unreachable");
}

std::optional<std::string> curve_on_locus(AppellKind kind, const Curve& curve) {
    for (const auto& comp : singular_locus(kind))
        if (comp.poly.eval_curve(curve.x, curve.y).is_zero()) return comp.name;
    return std::nullopt;
}

// ------------------------------------------------- change of variables

namespace {

// Fraction with a factored denominator; all arithmetic is division-free.
struct BiPolyLess {
    bool operator()(const BiPoly& a, const BiPoly& b) const { return a.terms() < b.terms(); }
};
using FactorMap = std::map<BiPoly, int, BiPolyLess>;

struct FactRat {
    BiPoly num;
    FactorMap den;  // base -> power; bases nonconstant

    FactRat() = default;
    explicit FactRat(BiPoly n) : num(std::move(n)) {}
    bool is_zero() const { return num.is_zero(); }
};

FactRat from_birat(const BiRat& r) {
    FactRat f(r.num);
    if (r.den.total_degree() > 0)
        f.den[r.den] = 1;
    else {
        Rat c = r.den.coeff(0, 0);
        f.num = f.num.scaled(Rat(1) / c);
    }
    return f;
}

FactRat fr_mul(const FactRat& a, const FactRat& b) {
    if (a.is_zero() || b.is_zero()) return FactRat();
    FactRat r(a.num * b.num);
    r.den = a.den;
    for (const auto& [f, k] : b.den) r.den[f] += k;
    return r;
}

FactRat fr_scale(const FactRat& a, const Rat& c) {
    FactRat r = a;
    r.num = r.num.scaled(c);
    if (r.num.is_zero()) r.den.clear();
    return r;
}

FactRat fr_add(const FactRat& a, const FactRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    FactRat r;
    BiPoly na = a.num, nb = b.num;
    for (const auto& [f, k] : a.den) {
        int kb = b.den.count(f) ? b.den.at(f) : 0;
        r.den[f] = std::max(k, kb);
    }
    for (const auto& [f, k] : b.den)
        if (!r.den.count(f)) r.den[f] = k;
    for (const auto& [f, k] : r.den) {
        int ka = a.den.count(f) ? a.den.at(f) : 0;
        int kb = b.den.count(f) ? b.den.at(f) : 0;
        for (int i = ka; i < k; ++i) na = na * f;
        for (int i = kb; i < k; ++i) nb = nb * f;
    }
    r.num = na + nb;
    if (r.num.is_zero()) r.den.clear();
    return r;
}

// Derivative along one axis via the product/quotient rule on factors.
FactRat fr_deriv(const FactRat& a, int axis) {
    auto d = [&](const BiPoly& p) { return axis == 0 ? p.dx() : p.dy(); };
    if (a.is_zero()) return a;
    // (N / prod f^k)' = N'/prod f^k - N * sum k f'/f / prod f^k
    FactRat r(d(a.num));
    r.den = a.den;
    for (const auto& [f, k] : a.den) {
        FactRat term(a.num * d(f));
        term = fr_scale(term, Rat(-k));
        term.den = a.den;
        term.den[f] += 1;
        r = fr_add(r, term);
    }
    return r;
}

FactRat fr_inv(const FactRat& a) {
    if (a.is_zero()) throw std::domain_error("FactRat: inverse of zero");
    FactRat r;
    r.num = BiPoly(Rat(1));
    for (const auto& [f, k] : a.den)
        for (int i = 0; i < k; ++i) r.num = r.num * f;
    if (a.num.total_degree() > 0)
        r.den[a.num] = 1;
    else
        r.num = r.num.scaled(Rat(1) / a.num.coeff(0, 0));
    return r;
}

FactRat fr_pow(const FactRat& a, int e) {
    if (e < 0) return fr_pow(fr_inv(a), -e);
    FactRat r(BiPoly(Rat(1)));
    for (int i = 0; i < e; ++i) r = fr_mul(r, a);
    return r;
}

// First-order operator in the new variables with FactRat coefficients.
using RWeylOp = std::map<std::pair<int, int>, FactRat>;

RWeylOp rw_add(const RWeylOp& a, const RWeylOp& b) {
    RWeylOp r = a;
    for (const auto& [k, c] : b) {
        auto it = r.find(k);
        if (it == r.end())
            r[k] = c;
        else {
            it->second = fr_add(it->second, c);
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

RWeylOp rw_compose(const RWeylOp& a, const RWeylOp& b) {
    RWeylOp r;
    for (const auto& [ka, pa] : a) {
        for (const auto& [kb, qb] : b) {
            for (int s = 0; s <= ka.first; ++s) {
                for (int t = 0; t <= ka.second; ++t) {
                    FactRat d = qb;
                    for (int u = 0; u < s; ++u) d = fr_deriv(d, 0);
                    for (int u = 0; u < t; ++u) d = fr_deriv(d, 1);
                    if (d.is_zero()) continue;
                    Rat c = Rat(binom_long(ka.first, s) * binom_long(ka.second, t));
                    FactRat term = fr_scale(fr_mul(pa, d), c);
                    std::pair<int, int> key{ka.first - s + kb.first, ka.second - t + kb.second};
                    auto it = r.find(key);
                    if (it == r.end())
                        r[key] = term;
                    else {
                        it->second = fr_add(it->second, term);
                        if (it->second.is_zero()) r.erase(it);
                    }
                }
            }
        }
    }
    return r;
}

RWeylOp rw_scale(const RWeylOp& a, const FactRat& c) {
    RWeylOp r;
    for (const auto& [k, v] : a) {
        FactRat t = fr_mul(v, c);
        if (!t.is_zero()) r[k] = t;
    }
    return r;
}

}  // namespace

std::vector<WeylOp> weyl_change_vars(const std::vector<WeylOp>& ops, const BiRat& Xr,
                                     const BiRat& Yr) {
    FactRat X = from_birat(Xr), Y = from_birat(Yr);
    FactRat Xu = fr_deriv(X, 0), Xv = fr_deriv(X, 1);
    FactRat Yu = fr_deriv(Y, 0), Yv = fr_deriv(Y, 1);
    FactRat J = fr_add(fr_mul(Xu, Yv), fr_scale(fr_mul(Xv, Yu), Rat(-1)));
    if (J.is_zero()) throw std::domain_error("weyl_change_vars: singular substitution");
    FactRat Jinv = fr_inv(J);

    RWeylOp Dx, Dy;
    Dx[{1, 0}] = fr_mul(Yv, Jinv);
    Dx[{0, 1}] = fr_scale(fr_mul(Yu, Jinv), Rat(-1));
    Dy[{1, 0}] = fr_scale(fr_mul(Xv, Jinv), Rat(-1));
    Dy[{0, 1}] = fr_mul(Xu, Jinv);

    int max_i = 0, max_j = 0;
    for (const auto& op : ops)
        for (const auto& [k, c] : op.terms) {
            max_i = std::max(max_i, k.first);
            max_j = std::max(max_j, k.second);
        }
    std::vector<RWeylOp> dx_pow{{{{0, 0}, FactRat(BiPoly(Rat(1)))}}};
    std::vector<RWeylOp> dy_pow{{{{0, 0}, FactRat(BiPoly(Rat(1)))}}};
    for (int i = 1; i <= max_i; ++i) dx_pow.push_back(rw_compose(dx_pow.back(), Dx));
    for (int j = 1; j <= max_j; ++j) dy_pow.push_back(rw_compose(dy_pow.back(), Dy));

    std::vector<WeylOp> out;
    for (const auto& op : ops) {
        RWeylOp acc;
        for (const auto& [k, c] : op.terms) {
            RWeylOp dpart = rw_compose(dx_pow[k.first], dy_pow[k.second]);
            for (const auto& [mono, coef] : c.terms()) {
                FactRat m = fr_scale(fr_mul(fr_pow(X, mono.first), fr_pow(Y, mono.second)), coef);
                acc = rw_add(acc, rw_scale(dpart, m));
            }
        }
        // Clear the union of denominator factors by one left polynomial factor.
        FactorMap all;
        for (const auto& [k, c] : acc)
            for (const auto& [f, e] : c.den) all[f] = std::max(all[f], e);
        WeylOp cleared;
        for (const auto& [k, c] : acc) {
            BiPoly n = c.num;
            for (const auto& [f, e] : all) {
                int have = c.den.count(f) ? c.den.at(f) : 0;
                for (int i = have; i < e; ++i) n = n * f;
            }
            cleared.add_term(k.first, k.second, n);
        }
        out.push_back(std::move(cleared));
    }
    return out;
}

}  // namespace appell
