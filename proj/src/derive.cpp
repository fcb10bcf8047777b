#include "appell/derive.hpp"

#include <sstream>

#include "appell/linsolve.hpp"

namespace appell {

std::vector<PartialVec> full_derivative_elements(const Curve& curve, int r) {
    std::vector<PartialVec> e(r + 1);
    e[0][{0, 0}] = RatFunc(Rat(1));
    RatFunc xd = curve.dx(), yd = curve.dy();
    for (int k = 0; k < r; ++k) {
        PartialVec next;
        auto add = [&](std::pair<int, int> key, const RatFunc& v) {
            if (v.is_zero()) return;
            auto [it, fresh] = next.try_emplace(key, v);
            if (!fresh) {
                it->second = it->second + v;
                if (it->second.is_zero()) next.erase(it);
            }
        };
        for (const auto& [key, f] : e[k]) {
            add(key, f.derivative());
            add({key.first + 1, key.second}, f * xd);
            add({key.first, key.second + 1}, f * yd);
        }
        e[k + 1] = std::move(next);
    }
    return e;
}

MinimalOdeResult minimal_ode(const AppellSpec& sys, const Curve& curve, int max_order,
                             int prolong_depth) {
    if (curve.is_constant()) throw std::invalid_argument("minimal_ode: constant curve");
    std::vector<WeylOp> base = appell_system(sys);

    std::vector<std::map<std::pair<int, int>, RatFunc>> gens;
    for (size_t b = 0; b < base.size(); ++b) {
        if (specialize(base[b], curve).empty())
            throw std::invalid_argument("minimal_ode: curve zeroes a system operator");
        std::vector<WeylOp> row_ops{base[b]};
        // Monomial prolongations up to extra partial order prolong_depth.
        std::vector<WeylOp> frontier{base[b]};
        for (int d = 1; d <= prolong_depth; ++d) {
            std::vector<WeylOp> next;
            for (const auto& op : frontier) next.push_back(weyl_prolong(op, 0));
            next.push_back(weyl_prolong(frontier.back(), 1));
            frontier = std::move(next);
            row_ops.insert(row_ops.end(), frontier.begin(), frontier.end());
        }
        for (const auto& op : row_ops) {
            auto s = specialize(op, curve);
            if (!s.empty()) gens.push_back(std::move(s));
        }
    }

    std::vector<PartialVec> e = full_derivative_elements(curve, max_order);

    // Column layout: all partial indices, highest total order first.
    std::map<std::pair<int, int>, size_t> col;
    {
        std::vector<std::pair<int, int>> keys;
        for (const auto& g : gens)
            for (const auto& [k, v] : g) keys.push_back(k);
        for (const auto& ek : e)
            for (const auto& [k, v] : ek) keys.push_back(k);
        std::sort(keys.begin(), keys.end(), [](auto a, auto b) {
            int da = a.first + a.second, db = b.first + b.second;
            if (da != db) return da > db;
            return a > b;
        });
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (size_t i = 0; i < keys.size(); ++i) col[keys[i]] = i;
    }
    auto to_row = [&](const PartialVec& v) {
        std::vector<RatFunc> row(col.size());
        for (const auto& [k, f] : v) row[col.at(k)] = f;
        return row;
    };

    std::vector<std::vector<RatFunc>> gen_rows, tagged;
    for (const auto& g : gens) gen_rows.push_back(to_row(g));
    for (const auto& ek : e) tagged.push_back(to_row(ek));

    auto kernel = kernel_modulo(tagged, gen_rows);
    if (kernel.empty()) return {MinimalOdeResult::Status::not_found_within_bounds, Lode({RatFunc(Rat(1))}), -1};
    const auto& tags = kernel.front();
    int top = -1;
    for (int j = (int)tags.size() - 1; j >= 0; --j)
        if (!tags[j].is_zero()) {
            top = j;
            break;
        }
    if (top <= 0)
        throw std::domain_error("minimal_ode: degenerate relation of order 0 along " + curve.str());
    std::vector<RatFunc> coeffs;
    for (int j = 0; j <= top; ++j) coeffs.push_back(RatFunc(tags[j]));
    return {MinimalOdeResult::Status::found, Lode(std::move(coeffs)), top};
}

RatFunc order2_obstruction(AppellKind kind, const Curve& curve) {
    RatFunc x = curve.x, y = curve.y, xd = curve.dx(), yd = curve.dy();
    RatFunc one{Rat(1)};
    if (kind == AppellKind::F2)
        return y / (one - x) * xd * xd + RatFunc(Rat(2)) * xd * yd + x / (one - y) * yd * yd;
    if (kind == AppellKind::F4)
        return xd * xd + (one - x - y) / y * xd * yd + x / y * yd * yd;
    throw std::invalid_argument("order2_obstruction: defined for F2 and F4 only");
}

RatFunc f1_curve_residual(const Rat& a, const Rat& b1, const Rat& b2, const Rat& c,
                          const Curve& curve) {
    RatFunc x = curve.x, y = curve.y;
    RatFunc xd = curve.dx(), yd = curve.dy();
    if (xd.is_zero() || yd.is_zero())
        throw std::invalid_argument("f1_curve_residual: x(t), y(t) must be nonconstant");
    RatFunc xdd = xd.derivative(), ydd = yd.derivative();
    RatFunc one{Rat(1)};
    RatFunc xm1 = x - one, ym1 = y - one;
    RatFunc r = xdd / xd - ydd / yd;
    r = r - (xd / xm1 - yd / ym1) * RatFunc(a + 1);
    r = r + (xd / (x * xm1) - yd / (y * ym1)) * RatFunc(c);
    RatFunc big = x * xm1 * y * ym1 / ((y - x) * xd * yd);
    big = big * (xd / x - yd / y);
    big = big * (xd / (x * xm1) - yd / (y * ym1));
    big = big * (xd * RatFunc(b1) / xm1 + yd * RatFunc(b2) / ym1);
    return r + big;
}

ReducibilityReport f4_reducibility(const Rat& a, const Rat& b, const Rat& c1, const Rat& c2) {
    if (is_integer(c1) || is_integer(c2))
        return {ReducibilityReport::Status::hypothesis_violated,
                is_integer(c1) ? "c1 integer" : "c2 integer"};
    std::vector<std::pair<std::string, Rat>> values = {
        {"a", a},           {"b", b},           {"c1-a", c1 - a},       {"c1-b", c1 - b},
        {"c2-a", c2 - a},   {"c2-b", c2 - b},   {"c1+c2-a", c1 + c2 - a},
        {"c1+c2-b", c1 + c2 - b}};
    for (const auto& [name, v] : values)
        if (is_integer(v)) return {ReducibilityReport::Status::reducible, name};
    return {ReducibilityReport::Status::irreducible, ""};
}

SolveCheck solves_system(const std::vector<WeylOp>& ops, const GenSeries2& candidate, int N) {
    for (size_t i = 0; i < ops.size(); ++i) {
        GenSeries2 res = weyl_apply(ops[i], candidate).normalized();
        Rat bound = candidate.alpha + candidate.beta + Rat(N);
        if (res.abs_order() < bound)
            throw std::domain_error("solves_system: insufficient truncation");
        for (const auto& [k, v] : res.body.terms()) {
            if (res.alpha + res.beta + Rat(k.first + k.second) > bound) continue;
            if (v != 0) {
                std::ostringstream os;
                os << "operator " << i + 1 << " residual at x^" << rat_str(res.alpha + k.first)
                   << " y^" << rat_str(res.beta + k.second) << " = " << rat_str(v);
                return {false, os.str()};
            }
        }
    }
    return {true, ""};
}

}  // namespace appell
