#include "appell/lode.hpp"

#include <algorithm>
#include <sstream>

#include "appell/linsolve.hpp"
#include "json.hpp"

namespace appell {

Lode::Lode(std::vector<RatFunc> c) : coeffs(std::move(c)) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.empty()) throw std::domain_error("Lode: zero operator");
}

Lode Lode::canonical() const {
    RatFunc lead = coeffs.back();
    Lode r = *this;
    for (auto& c : r.coeffs) c = c / lead;
    return r;
}

std::vector<UniPoly> Lode::poly_coeffs() const {
    std::vector<RatFunc> row = coeffs;
    return clear_row(row);
}

std::string Lode::str(const std::string& var) const {
    std::ostringstream os;
    for (int k = order(); k >= 0; --k) {
        if (coeffs[k].is_zero()) continue;
        if (k < order()) os << " + ";
        os << "(" << coeffs[k].str(var) << ")";
        if (k > 0) os << "*D^" << k;
    }
    return os.str();
}

bool lode_equal(const Lode& a, const Lode& b) {
    if (a.order() != b.order()) return false;
    Lode ca = a.canonical(), cb = b.canonical();
    for (int k = 0; k <= a.order(); ++k)
        if (!(ca.coeffs[k] == cb.coeffs[k])) return false;
    return true;
}

namespace {

UniPoly up(std::vector<Rat> c) { return UniPoly(std::move(c)); }
RatFunc rf(UniPoly p) { return RatFunc(std::move(p)); }

}  // namespace

Lode euler_ode(const Rat& A, const Rat& B, const Rat& C) {
    return Lode({rf(up({-A * B})), rf(up({C, -(A + B + 1)})), rf(up({Rat(0), Rat(1), Rat(-1)}))});
}

Lode hpg32_ode(const Rat& A, const Rat& B, const Rat& C, const Rat& D, const Rat& E) {
    Rat s2 = A + B + C + 3, s1 = A * B + A * C + B * C + A + B + C + 1;
    return Lode({rf(up({-A * B * C})), rf(up({D * E, -s1})), rf(up({Rat(0), D + E + 1, -s2})),
                 rf(up({Rat(0), Rat(0), Rat(1), Rat(-1)}))});
}

Lode kato_ode(const Rat& a, const Rat& b, const Rat& c1, const Rat& c2) {
    UniPoly t = UniPoly::var();
    UniPoly tm1 = up({Rat(-1), Rat(1)});
    UniPoly t2 = t * t, tm12 = tm1 * tm1;
    UniPoly K3 = t2 * tm12;
    UniPoly K2 = (t * tm12).scaled(a + b + 2 * c1 - c2 + 1) + (t2 * tm1).scaled(a + b - c1 + 2 * c2 + 1);
    UniPoly K1 = tm12.scaled((2 * c1 - 1) * (a + b - c2 + 1)) +
                 (t * tm1).scaled(2 * (a + b - c1 - c2 + 1 + 2 * a * b + 2 * c1 * c2)) +
                 t2.scaled((2 * c2 - 1) * (a + b - c1 + 1));
    UniPoly K0 = up({-2 * c1 + 1, 2 * (c1 + c2 - 1)}).scaled(2 * a * b);
    return Lode({rf(K0), rf(K1), rf(K2), rf(K3)});
}

Lode f2_xy2_ode(const Rat& a, const Rat& b1, const Rat& b2) {
    // (1-x)F'' + (2b1/x - 2b2/(x-2) - a-b1-b2-1)F' - a(b1/x + b2/(x-2))F, cleared by x(x-2).
    UniPoly t = UniPoly::var();
    UniPoly tm2 = up({Rat(-2), Rat(1)});
    UniPoly c2p = up({Rat(1), Rat(-1)}) * t * tm2;
    UniPoly c1p = tm2.scaled(2 * b1) - t.scaled(2 * b2) - (t * tm2).scaled(a + b1 + b2 + 1);
    UniPoly c0p = (tm2.scaled(b1) + t.scaled(b2)).scaled(-a);
    return Lode({rf(c0p), rf(c1p), rf(c2p)});
}

Lode f2_sep_ode(const Rat& b1, const Rat& b2, const Rat& s) {
    UniPoly t = UniPoly::var();
    UniPoly q1 = up({Rat(-1), Rat(0), Rat(1)});        // t^2 - 1
    UniPoly q2 = up({Rat(1), 2 * s, Rat(1)});          // t^2 + 2st + 1
    UniPoly c2p = q1 * q2;
    UniPoly c1p = (t * q2).scaled(4 * b1) + (up({s, Rat(1)}) * q1).scaled(4 * b2);
    UniPoly c0p = (q2.scaled(4 * b1) + q1.scaled(4 * b2)).scaled(b1 + b2 - Rat(1, 2));
    return Lode({rf(c0p), rf(c1p), rf(c2p)});
}

Lode builtin_ode(const std::string& name, const std::vector<Rat>& p) {
    auto need = [&](size_t n) {
        if (p.size() != n)
            throw std::invalid_argument("builtin_ode " + name + ": expected " + std::to_string(n) +
                                        " parameters, got " + std::to_string(p.size()));
    };
    if (name == "euler") {
        need(3);
        return euler_ode(p[0], p[1], p[2]);
    }
    if (name == "hpg32") {
        need(5);
        return hpg32_ode(p[0], p[1], p[2], p[3], p[4]);
    }
    if (name == "kato") {
        need(4);
        return kato_ode(p[0], p[1], p[2], p[3]);
    }
    throw std::invalid_argument("builtin_ode: unknown equation '" + name + "'");
}

// ---------------------------------------------------------------- roots

namespace {

void push_divisors(const Int& n, std::vector<Int>& out) {
    // Trial division; any leftover cofactor is kept as a single factor.
    Int m = abs(n);
    std::vector<std::pair<Int, int>> fac;
    for (Int d(2); d * d <= m && d < 1000000; d += 1) {
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            fac.push_back({d, e});
        }
    }
    if (m > 1) fac.push_back({m, 1});
    out = {Int(1)};
    for (const auto& [pp, e] : fac) {
        size_t base = out.size();
        Int pw(1);
        for (int k = 1; k <= e; ++k) {
            pw *= pp;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
        }
    }
}

}  // namespace

std::vector<Rat> rational_roots(const UniPoly& p0) {
    std::vector<Rat> roots;
    if (p0.is_zero() || p0.degree() == 0) return roots;
    UniPoly p = p0.primitive_part();
    int v = p.valuation();
    if (v > 0) {
        for (int i = 0; i < v; ++i) roots.push_back(Rat(0));
        std::vector<Rat> c(p.coeffs().begin() + v, p.coeffs().end());
        p = UniPoly(std::move(c));
    }
    if (p.degree() == 0) return roots;
    std::vector<Int> nums, dens;
    push_divisors(p[0].get_num(), nums);
    push_divisors(p.leading().get_num(), dens);
    std::vector<Rat> candidates;
    for (const auto& n : nums)
        for (const auto& d : dens) {
            candidates.push_back(rat_of(n, d));
            candidates.push_back(rat_of(-n, d));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
        while (p.degree() > 0 && p.eval(r) == 0) {
            roots.push_back(r);
            // Deflate by (t - r).
            UniPoly q, rem;
            UniPoly::divrem(p, up({-r, Rat(1)}), q, rem);
            p = q;
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------- exponents

namespace {

// Falling factorial rho(rho-1)...(rho-k+1) as a polynomial.
UniPoly falling_factorial_poly(int k) {
    UniPoly acc = UniPoly::one();
    for (int i = 0; i < k; ++i) acc = acc * up({Rat(-i), Rat(1)});
    return acc;
}

Rat falling_factorial_at(const Rat& s, int k) {
    Rat acc(1);
    for (int i = 0; i < k; ++i) acc *= s - Rat(i);
    return acc;
}

Lode translate_to_origin(const Lode& L, const Rat& p) {
    if (p == 0) return L;
    UniPoly shift = up({p, Rat(1)});  // t + p
    std::vector<RatFunc> c;
    for (const auto& f : L.coeffs) c.push_back(f.compose(RatFunc(shift)));
    return Lode(std::move(c));
}

}  // namespace

ExponentReport local_exponents(const Lode& L0, const OdePoint& pt) {
    Lode L = pt.infinite ? pullback_transform(L0, RatFunc(UniPoly::one()) / RatFunc::var(), {})
                         : translate_to_origin(L0, pt.value);
    std::vector<UniPoly> a = L.poly_coeffs();
    int r = (int)a.size() - 1;
    int base = INT32_MAX, base_k = -1;
    for (int k = 0; k <= r; ++k) {
        if (a[k].is_zero()) continue;
        int w = a[k].valuation() - k;
        if (w < base) {
            base = w;
            base_k = k;
        }
    }
    if (a[r].valuation() - r > base)
        throw std::domain_error("irregular singular point at " + pt.str() +
                                ": coefficient of order " + std::to_string(base_k) +
                                " violates the Fuchsian pole bound");
    UniPoly ind;
    for (int k = 0; k <= r; ++k) {
        if (a[k].is_zero() || a[k].valuation() - k != base) continue;
        ind = ind + falling_factorial_poly(k).scaled(a[k][a[k].valuation()]);
    }
    return ExponentReport{pt, ind, rational_roots(ind)};
}

// ---------------------------------------------------------------- pullback

Lode pullback_transform(const Lode& L, const RatFunc& phi, const std::vector<ThetaFactor>& theta) {
    if (phi.is_constant()) throw std::domain_error("pullback_transform: constant phi");
    int r = L.order();
    RatFunc lambda;  // theta'/theta
    for (const auto& f : theta)
        lambda = lambda + RatFunc(UniPoly(f.exponent)) / RatFunc(up({-f.root, Rat(1)}));
    RatFunc dphi = phi.derivative();

    // Reduction of v_r = y^(r) ∘ phi via L composed with phi.
    std::vector<RatFunc> vr_red(r);
    {
        Lode cl = L.canonical();
        for (int k = 0; k < r; ++k) vr_red[k] = -cl.coeffs[k].compose(phi);
    }

    std::vector<std::vector<RatFunc>> rows;
    std::vector<RatFunc> w(r);
    w[0] = RatFunc(Rat(1));
    rows.push_back(w);
    for (int j = 0; j < r; ++j) {
        std::vector<RatFunc> nw(r);
        for (int k = 0; k < r; ++k) nw[k] = lambda * w[k] + w[k].derivative();
        for (int k = 0; k < r; ++k) {
            RatFunc carry = w[k] * dphi;  // coefficient moving to v_{k+1}
            if (k + 1 < r)
                nw[k + 1] = nw[k + 1] + carry;
            else
                for (int i = 0; i < r; ++i) nw[i] = nw[i] + carry * vr_red[i];
        }
        rows.push_back(nw);
        w = std::move(nw);
    }

    auto kernel = kernel_modulo(rows, {});
    if (kernel.empty()) throw std::domain_error("pullback_transform: no relation found");
    const auto& tags = kernel.front();  // minimal top index
    std::vector<RatFunc> coeffs;
    for (const auto& t : tags) coeffs.push_back(RatFunc(t));
    return Lode(std::move(coeffs));
}

Lode symmetric_square(const Lode& L) {
    if (L.order() != 2) throw std::invalid_argument("symmetric_square: order-2 input required");
    Lode cl = L.canonical();
    RatFunc p = cl.coeffs[1], q = cl.coeffs[0];
    // Coordinates (y^2, y y', y'^2); derivative of each closes modulo L.
    auto deriv = [&](const std::vector<RatFunc>& a) {
        std::vector<RatFunc> d(3);
        for (int k = 0; k < 3; ++k) d[k] = a[k].derivative();
        d[1] = d[1] + a[0] * RatFunc(Rat(2));
        d[0] = d[0] - a[1] * q;
        d[1] = d[1] - a[1] * p;
        d[2] = d[2] + a[1];
        d[1] = d[1] - a[2] * q * RatFunc(Rat(2));
        d[2] = d[2] - a[2] * p * RatFunc(Rat(2));
        return d;
    };
    std::vector<std::vector<RatFunc>> rows;
    std::vector<RatFunc> a = {RatFunc(Rat(1)), RatFunc(), RatFunc()};
    rows.push_back(a);
    for (int j = 0; j < 3; ++j) {
        a = deriv(a);
        rows.push_back(a);
    }
    auto kernel = kernel_modulo(rows, {});
    if (kernel.empty()) throw std::domain_error("symmetric_square: no relation found");
    std::vector<RatFunc> coeffs;
    for (const auto& t : kernel.front()) coeffs.push_back(RatFunc(t));
    return Lode(std::move(coeffs));
}

// ---------------------------------------------------------------- residuals

GenSeries1 lode_apply(const Lode& L, const GenSeries1& s) {
    std::optional<GenSeries1> acc;
    GenSeries1 deriv = s;
    for (int k = 0; k <= L.order(); ++k) {
        if (!L.coeffs[k].is_zero()) {
            GenSeries1 term = deriv.mul_ratfunc(L.coeffs[k]);
            acc = acc ? *acc + term : term;
        }
        if (k < L.order()) deriv = deriv.derivative();
    }
    return *acc;  // the leading coefficient is nonzero by the Lode invariant
}

bool lode_annihilates(const Lode& L, const GenSeries1& s, int through_order) {
    GenSeries1 res = lode_apply(L, s).normalized();
    return res.is_zero_through_abs(s.alpha + Rat(through_order));
}

std::optional<GenSeries1> frobenius_series(const Lode& L, const Rat& rho, int order) {
    std::vector<UniPoly> a = L.poly_coeffs();
    int r = (int)a.size() - 1;
    int base = INT32_MAX;
    for (int k = 0; k <= r; ++k)
        if (!a[k].is_zero()) base = std::min(base, a[k].valuation() - k);
    int max_off = 0;
    for (int k = 0; k <= r; ++k)
        if (!a[k].is_zero()) max_off = std::max(max_off, a[k].degree() - k - base);
    auto g = [&](int off, const Rat& sigma) {
        Rat acc(0);
        for (int k = 0; k <= r; ++k) {
            int i = off + k + base;
            if (i < 0 || a[k].is_zero() || i > a[k].degree()) continue;
            acc += a[k][i] * falling_factorial_at(sigma, k);
        }
        return acc;
    };
    TS1 body(order);
    body.set(0, Rat(1));
    for (int n = 1; n <= order; ++n) {
        Rat num(0);
        for (int j = 1; j <= std::min(n, max_off); ++j) num += g(j, rho + Rat(n - j)) * body[n - j];
        Rat den = g(0, rho + Rat(n));
        if (den == 0) return std::nullopt;  // resonance
        body.set(n, -num / den);
    }
    return GenSeries1{rho, body};
}

// ---------------------------------------------------------------- json

namespace {

nlohmann::json poly_to_json(const UniPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.coeffs()) a.push_back(rat_str(c));
    if (p.is_zero()) a.push_back("0");
    return a;
}

UniPoly poly_from_json(const nlohmann::json& a) {
    std::vector<Rat> c;
    for (const auto& s : a) c.push_back(parse_rat(s.get<std::string>()));
    return UniPoly(std::move(c));
}

}  // namespace

std::string lode_to_json(const Lode& L) {
    nlohmann::json j;
    j["schema"] = "lode/1";
    j["order"] = L.order();
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : L.coeffs)
        cs.push_back({{"num", poly_to_json(c.num())}, {"den", poly_to_json(c.den())}});
    j["coeffs"] = cs;
    return j.dump(2);
}

Lode lode_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.value("schema", "") != "lode/1")
        throw std::invalid_argument("lode_from_json: unknown schema");
    std::vector<RatFunc> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.emplace_back(poly_from_json(c.at("num")), poly_from_json(c.at("den")));
    Lode L(std::move(coeffs));
    if (L.order() != j.at("order").get<int>())
        throw std::invalid_argument("lode_from_json: order mismatch");
    return L;
}

}  // namespace appell
