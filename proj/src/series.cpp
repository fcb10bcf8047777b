#include "appell/series.hpp"

#include <sstream>

namespace appell {

Rat binom_rat(const Rat& e, unsigned k) {
    Rat acc(1);
    for (unsigned i = 0; i < k; ++i) acc *= (e - Rat((long)i)) / Rat((long)(i + 1));
    return acc;
}

// ---------------------------------------------------------------- TS1

TS1 TS1::constant(const Rat& v, int order) {
    TS1 s(order);
    if (order >= 0) s.c_[0] = v;
    return s;
}

TS1 TS1::variable(int order) {
    TS1 s(order);
    if (order >= 1) s.c_[1] = Rat(1);
    return s;
}

const Rat& TS1::operator[](int k) const {
    static const Rat kZero(0);
    if (k < 0 || k > order_) return kZero;
    return c_[k];
}

void TS1::set(int k, const Rat& v) {
    if (k < 0 || k > order_) throw std::out_of_range("TS1::set beyond truncation order");
    c_[k] = v;
}

TS1 TS1::truncated(int order) const {
    if (order >= order_) return *this;
    TS1 s(order);
    for (int k = 0; k <= order; ++k) s.c_[k] = c_[k];
    return s;
}

TS1 TS1::operator-() const {
    TS1 s = *this;
    for (auto& v : s.c_) v = -v;
    return s;
}

TS1 TS1::operator+(const TS1& o) const {
    int n = std::min(order_, o.order_);
    TS1 s(n);
    for (int k = 0; k <= n; ++k) s.c_[k] = c_[k] + o.c_[k];
    return s;
}

TS1 TS1::operator-(const TS1& o) const { return *this + (-o); }

TS1 TS1::operator*(const TS1& o) const {
    int n = std::min(order_, o.order_);
    TS1 s(n);
    for (int i = 0; i <= std::min(order_, n); ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j <= n - i && j <= o.order_; ++j)
            if (o.c_[j] != 0) s.c_[i + j] += c_[i] * o.c_[j];
    }
    return s;
}

TS1 TS1::scaled(const Rat& v) const {
    TS1 s = *this;
    for (auto& x : s.c_) x *= v;
    return s;
}

TS1 TS1::shifted_up(int k) const {
    TS1 s(order_ + k);
    for (int i = 0; i <= order_; ++i) s.c_[i + k] = c_[i];
    return s;
}

TS1 TS1::derivative() const {
    if (order_ < 1) return TS1(-1);
    TS1 s(order_ - 1);
    for (int k = 1; k <= order_; ++k) s.c_[k - 1] = c_[k] * Rat(k);
    return s;
}

TS1 TS1::compose(const TS1& inner) const {
    if (inner.order_ >= 0 && inner.c_[0] != 0)
        throw std::domain_error("composition point mismatch: inner constant term nonzero");
    int n = std::min(order_, inner.order_);
    TS1 acc = TS1::constant(Rat(0), n);
    TS1 in = inner.truncated(n);
    for (int k = std::min(order_, n); k >= 0; --k) acc = acc * in + TS1::constant(c_[k], n);
    return acc;
}

TS1 TS1::invert_unit() const {
    if (order_ < 0 || c_[0] == 0) throw std::domain_error("non-unit base");
    TS1 s(order_);
    Rat inv0 = Rat(1) / c_[0];
    s.c_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
        Rat acc(0);
        for (int k = 1; k <= n; ++k) acc += c_[k] * s.c_[n - k];
        s.c_[n] = -acc * inv0;
    }
    return s;
}

TS1 TS1::pow_rational(const Rat& e) const {
    if (order_ < 0 || c_[0] == 0) throw std::domain_error("non-unit base");
    if (is_integer(e)) {
        long ee = to_long(e);
        TS1 base = ee < 0 ? invert_unit() : *this;
        unsigned long n = ee < 0 ? -(unsigned long)ee : (unsigned long)ee;
        TS1 acc = TS1::constant(Rat(1), order_);
        while (n) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }
    auto c0e = rat_pow_exact(c_[0], e);
    if (!c0e) throw std::domain_error("irrational constant power in series_pow_rational");
    TS1 u = scaled(Rat(1) / c_[0]) - TS1::constant(Rat(1), order_);
    TS1 acc = TS1::constant(Rat(1), order_), up = TS1::constant(Rat(1), order_);
    for (int k = 1; k <= order_; ++k) {
        up = up * u;
        acc = acc + up.scaled(binom_rat(e, (unsigned)k));
    }
    return acc.scaled(*c0e);
}

bool TS1::is_zero_through(int k) const {
    if (k > order_) throw std::domain_error("insufficient truncation order");
    for (int i = 0; i <= k; ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<int> TS1::first_nonzero() const {
    for (int i = 0; i <= order_; ++i)
        if (c_[i] != 0) return i;
    return std::nullopt;
}

std::string TS1::str(const std::string& var) const {
    std::ostringstream os;
    bool any = false;
    for (int k = 0; k <= order_; ++k) {
        if (c_[k] == 0) continue;
        if (any) os << " + ";
        os << rat_str(c_[k]);
        if (k > 0) os << "*" << var << (k > 1 ? "^" + std::to_string(k) : "");
        any = true;
    }
    if (!any) os << "0";
    os << " + O(" << var << "^" << order_ + 1 << ")";
    return os.str();
}

// ---------------------------------------------------------------- TS2

TS2 TS2::constant(const Rat& v, int order) {
    TS2 s(order);
    if (v != 0 && order >= 0) s.c_[{0, 0}] = v;
    return s;
}

TS2 TS2::variable(int axis, int order) {
    TS2 s(order);
    if (order >= 1) s.c_[axis == 0 ? std::pair{1, 0} : std::pair{0, 1}] = Rat(1);
    return s;
}

TS2 TS2::from_ts1(const TS1& s, int axis) {
    TS2 r(s.order());
    for (int k = 0; k <= s.order(); ++k)
        if (s[k] != 0) r.c_[axis == 0 ? std::pair{k, 0} : std::pair{0, k}] = s[k];
    return r;
}

Rat TS2::coeff(int n, int m) const {
    auto it = c_.find({n, m});
    return it == c_.end() ? Rat(0) : it->second;
}

void TS2::set(int n, int m, const Rat& v) {
    if (n < 0 || m < 0 || n + m > order_) throw std::out_of_range("TS2::set beyond order");
    if (v == 0)
        c_.erase({n, m});
    else
        c_[{n, m}] = v;
}

void TS2::add_coeff(int n, int m, const Rat& v) {
    if (v == 0 || n + m > order_) return;
    auto [it, fresh] = c_.try_emplace({n, m}, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

TS2 TS2::truncated(int order) const {
    if (order >= order_) return *this;
    TS2 s(order);
    for (const auto& [k, v] : c_)
        if (k.first + k.second <= order) s.c_[k] = v;
    return s;
}

TS2 TS2::operator-() const {
    TS2 s = *this;
    for (auto& [k, v] : s.c_) v = -v;
    return s;
}

TS2 TS2::operator+(const TS2& o) const {
    int n = std::min(order_, o.order_);
    TS2 s = truncated(n);
    for (const auto& [k, v] : o.c_)
        if (k.first + k.second <= n) s.add_coeff(k.first, k.second, v);
    return s;
}

TS2 TS2::operator-(const TS2& o) const { return *this + (-o); }

TS2 TS2::operator*(const TS2& o) const {
    int n = std::min(order_, o.order_);
    TS2 s(n);
    for (const auto& [ka, va] : c_) {
        int da = ka.first + ka.second;
        if (da > n) continue;
        for (const auto& [kb, vb] : o.c_) {
            if (da + kb.first + kb.second > n) continue;
            s.add_coeff(ka.first + kb.first, ka.second + kb.second, va * vb);
        }
    }
    return s;
}

TS2 TS2::scaled(const Rat& v) const {
    if (v == 0) return TS2(order_);
    TS2 s = *this;
    for (auto& [k, x] : s.c_) x *= v;
    return s;
}

TS2 TS2::shifted_up(int i, int j) const {
    TS2 s(order_ + i + j);
    for (const auto& [k, v] : c_) s.c_[{k.first + i, k.second + j}] = v;
    return s;
}

TS2 TS2::mul_bipoly(const BiPoly& p) const {
    if (p.is_zero()) return TS2(order_);
    int val = p.total_degree();
    for (const auto& [k, v] : p.terms()) val = std::min(val, k.first + k.second);
    TS2 s(order_ + val);
    for (const auto& [kp, vp] : p.terms())
        for (const auto& [k, v] : c_) {
            int n = k.first + kp.first, m = k.second + kp.second;
            if (n + m <= s.order_) s.add_coeff(n, m, v * vp);
        }
    return s;
}

TS2 TS2::dx() const {
    TS2 s(order_ - 1);
    for (const auto& [k, v] : c_)
        if (k.first > 0) s.add_coeff(k.first - 1, k.second, v * Rat(k.first));
    return s;
}

TS2 TS2::dy() const {
    TS2 s(order_ - 1);
    for (const auto& [k, v] : c_)
        if (k.second > 0) s.add_coeff(k.first, k.second - 1, v * Rat(k.second));
    return s;
}

TS2 TS2::euler_dx() const {
    TS2 s(order_);
    for (const auto& [k, v] : c_)
        if (k.first > 0) s.c_[k] = v * Rat(k.first);
    return s;
}

TS2 TS2::euler_dy() const {
    TS2 s(order_);
    for (const auto& [k, v] : c_)
        if (k.second > 0) s.c_[k] = v * Rat(k.second);
    return s;
}

TS2 TS2::pow_rational(const Rat& e) const {
    Rat c0 = coeff(0, 0);
    if (order_ < 0 || c0 == 0) throw std::domain_error("non-unit base");
    if (is_integer(e) && e >= 0) {
        unsigned long n = (unsigned long)to_long(e);
        TS2 acc = TS2::constant(Rat(1), order_), base = *this;
        while (n) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }
    auto c0e = rat_pow_exact(c0, e);
    if (!c0e) throw std::domain_error("irrational constant power in series_pow_rational");
    TS2 u = scaled(Rat(1) / c0) - TS2::constant(Rat(1), order_);
    TS2 acc = TS2::constant(Rat(1), order_), up = TS2::constant(Rat(1), order_);
    for (int k = 1; k <= order_; ++k) {
        up = up * u;
        acc = acc + up.scaled(binom_rat(e, (unsigned)k));
    }
    return acc.scaled(*c0e);
}

TS2 TS2::compose_uni(const TS1& outer, const TS2& inner) {
    if (inner.coeff(0, 0) != 0)
        throw std::domain_error("composition point mismatch: inner constant term nonzero");
    int n = std::min(outer.order(), inner.order());
    TS2 acc = TS2::constant(Rat(0), n);
    TS2 in = inner.truncated(n);
    for (int k = std::min(outer.order(), n); k >= 0; --k)
        acc = acc * in + TS2::constant(outer[k], n);
    return acc;
}

TS2 TS2::compose_biv(const TS2& outer, const TS2& ix, const TS2& iy) {
    if (ix.coeff(0, 0) != 0 || iy.coeff(0, 0) != 0)
        throw std::domain_error("composition point mismatch: inner constant term nonzero");
    int n = std::min(outer.order(), std::min(ix.order(), iy.order()));
    std::vector<TS2> xp{TS2::constant(Rat(1), n)}, yp{TS2::constant(Rat(1), n)};
    for (int k = 1; k <= n; ++k) {
        xp.push_back(xp.back() * ix.truncated(n));
        yp.push_back(yp.back() * iy.truncated(n));
    }
    TS2 acc(n);
    for (const auto& [k, v] : outer.terms()) {
        if (k.first + k.second > n) continue;
        acc = acc + (xp[k.first] * yp[k.second]).scaled(v);
    }
    return acc;
}

bool TS2::depends_on_y() const {
    for (const auto& [k, v] : c_)
        if (k.second > 0) return true;
    return false;
}

TS1 TS2::to_ts1() const {
    if (depends_on_y()) throw std::domain_error("TS2::to_ts1: series depends on second variable");
    TS1 s(order_);
    for (const auto& [k, v] : c_) s.set(k.first, v);
    return s;
}

bool TS2::is_zero_through(int k) const {
    if (k > order_) throw std::domain_error("insufficient truncation order");
    for (const auto& [key, v] : c_)
        if (key.first + key.second <= k && v != 0) return false;
    return true;
}

std::optional<std::pair<int, int>> TS2::first_nonzero() const {
    std::optional<std::pair<int, int>> best;
    int bd = order_ + 1;
    for (const auto& [k, v] : c_) {
        int d = k.first + k.second;
        if (d < bd) {
            bd = d;
            best = k;
        }
    }
    return best;
}

std::string TS2::str(const std::string& vx, const std::string& vy) const {
    std::ostringstream os;
    bool any = false;
    for (const auto& [k, v] : c_) {
        if (any) os << " + ";
        os << rat_str(v);
        if (k.first > 0) os << "*" << vx << (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0) os << "*" << vy << (k.second > 1 ? "^" + std::to_string(k.second) : "");
        any = true;
    }
    if (!any) os << "0";
    os << " + O(deg " << order_ + 1 << ")";
    return os.str();
}

// ---------------------------------------------------------------- GenSeries1

GenSeries1 GenSeries1::normalized() const {
    auto v = body.first_nonzero();
    if (!v || *v == 0) return *this;
    TS1 b(body.order() - *v);
    for (int k = *v; k <= body.order(); ++k) b.set(k - *v, body[k]);
    return {alpha + Rat(*v), b};
}

GenSeries1 GenSeries1::derivative() const {
    // t^a B -> t^(a-1) (a B + t B'); keeps the body order.
    TS1 b(body.order());
    for (int k = 0; k <= body.order(); ++k) b.set(k, body[k] * (alpha + Rat(k)));
    return {alpha - 1, b};
}

GenSeries1 GenSeries1::mul_ratfunc(const RatFunc& f) const {
    if (f.is_zero()) return {alpha, TS1(body.order())};
    int vn = f.num().valuation(), vd = f.den().valuation();
    Rat a = alpha + Rat(vn - vd);
    // Strip the t-powers, then both factors are units expandable to any order.
    UniPoly nn(std::vector<Rat>(f.num().coeffs().begin() + vn, f.num().coeffs().end()));
    UniPoly dd(std::vector<Rat>(f.den().coeffs().begin() + vd, f.den().coeffs().end()));
    int n = body.order();
    TS1 ns(n), ds(n);
    for (int k = 0; k <= std::min(n, nn.degree()); ++k) ns.set(k, nn[k]);
    for (int k = 0; k <= std::min(n, dd.degree()); ++k) ds.set(k, dd[k]);
    return {a, body * ns * ds.invert_unit()};
}

GenSeries1 GenSeries1::scaled(const Rat& v) const { return {alpha, body.scaled(v)}; }

GenSeries1 GenSeries1::operator+(const GenSeries1& o) const {
    GenSeries1 a = normalized(), b = o.normalized();
    if (!a.body.first_nonzero()) {
        // Exact zero through a.abs_order(); clamp the other side accordingly.
        Rat cap = a.abs_order() - b.alpha;
        int n = (int)std::min<long>(rat_floor(cap), b.body.order());
        return {b.alpha, b.body.truncated(n)};
    }
    if (!b.body.first_nonzero()) return b + a;
    Rat d = a.alpha - b.alpha;
    if (!is_integer(d)) throw std::domain_error("GenSeries1: incompatible prefactor exponents");
    long off = to_long(d);
    if (off < 0) return b + a;
    // a.alpha >= b.alpha: shift a's body up.
    TS1 as = a.body.shifted_up((int)off);
    return {b.alpha, as + b.body};
}

bool GenSeries1::is_zero_through_abs(const Rat& deg) const {
    if (abs_order() < deg) throw std::domain_error("insufficient truncation order");
    for (int k = 0; k <= body.order(); ++k) {
        if (alpha + Rat(k) > deg) break;
        if (body[k] != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------- GenSeries2

GenSeries2 GenSeries2::normalized() const {
    if (body.terms().empty()) return *this;
    int vi = INT32_MAX, vj = INT32_MAX;
    for (const auto& [k, v] : body.terms()) {
        vi = std::min(vi, k.first);
        vj = std::min(vj, k.second);
    }
    if (vi == 0 && vj == 0) return *this;
    TS2 b(body.order() - vi - vj);
    for (const auto& [k, v] : body.terms()) b.set(k.first - vi, k.second - vj, v);
    return {alpha + Rat(vi), beta + Rat(vj), b};
}

GenSeries2 GenSeries2::partial(int axis) const {
    TS2 b(body.order());
    for (const auto& [k, v] : body.terms()) {
        Rat f = (axis == 0 ? alpha + Rat(k.first) : beta + Rat(k.second));
        if (f != 0) b.set(k.first, k.second, v * f);
    }
    if (axis == 0) return {alpha - 1, beta, b};
    return {alpha, beta - 1, b};
}

GenSeries2 GenSeries2::mul_monomial(const Rat& c, int i, int j) const {
    return {alpha + Rat(i), beta + Rat(j), body.scaled(c)};
}

GenSeries2 GenSeries2::mul_bipoly(const BiPoly& p) const {
    if (p.is_zero()) return {alpha, beta, TS2(body.order())};
    int vi = INT32_MAX, vj = INT32_MAX;
    for (const auto& [k, v] : p.terms()) {
        vi = std::min(vi, k.first);
        vj = std::min(vj, k.second);
    }
    BiPoly q;
    for (const auto& [k, v] : p.terms()) q.set(k.first - vi, k.second - vj, v);
    return {alpha + Rat(vi), beta + Rat(vj), body.mul_bipoly(q).truncated(body.order() + [&] {
        int val = q.total_degree();
        for (const auto& [k, v] : q.terms()) val = std::min(val, k.first + k.second);
        return val;
    }())};
}

GenSeries2 GenSeries2::scaled(const Rat& v) const { return {alpha, beta, body.scaled(v)}; }

GenSeries2 GenSeries2::operator+(const GenSeries2& o) const {
    GenSeries2 a = normalized(), b = o.normalized();
    if (!a.body.first_nonzero()) {
        Rat cap = a.abs_order() - b.alpha - b.beta;
        int n = (int)std::min<long>(rat_floor(cap), b.body.order());
        return {b.alpha, b.beta, b.body.truncated(n)};
    }
    if (!b.body.first_nonzero()) return b + a;
    Rat di = a.alpha - b.alpha, dj = a.beta - b.beta;
    if (!is_integer(di) || !is_integer(dj))
        throw std::domain_error("GenSeries2: incompatible prefactor exponents");
    long oi = to_long(di), oj = to_long(dj);
    if (oi < 0 || oj < 0) {
        if (oi <= 0 && oj <= 0) return b + a;
        // Mixed signs: lower both exponents to the componentwise minimum.
        Rat na = std::min(a.alpha, b.alpha), nb = std::min(a.beta, b.beta);
        GenSeries2 a2{na, nb, a.body.shifted_up((int)to_long(a.alpha - na), (int)to_long(a.beta - nb))};
        GenSeries2 b2{na, nb, b.body.shifted_up((int)to_long(b.alpha - na), (int)to_long(b.beta - nb))};
        return {na, nb, a2.body + b2.body};
    }
    TS2 as = a.body.shifted_up((int)oi, (int)oj);
    return {b.alpha, b.beta, as + b.body};
}

GenSeries2 GenSeries2::operator*(const GenSeries2& o) const {
    return {alpha + o.alpha, beta + o.beta, body * o.body};
}

GenSeries2 GenSeries2::pow_rational(const Rat& e) const {
    GenSeries2 a = normalized();
    Rat na = a.alpha * e, nb = a.beta * e;
    if (!a.body.first_nonzero()) {
        if (e <= 0) throw std::domain_error("pow of zero series with non-positive exponent");
        return {na, nb, a.body};
    }
    return {na, nb, a.body.pow_rational(e)};
}

bool GenSeries2::is_zero_through_abs(const Rat& deg) const {
    if (abs_order() < deg) throw std::domain_error("insufficient truncation order");
    for (const auto& [k, v] : body.terms()) {
        if (alpha + beta + Rat(k.first + k.second) > deg) continue;
        if (v != 0) return false;
    }
    return true;
}

GenSeries1 GenSeries2::to_univariate() const {
    GenSeries2 n = normalized();
    if (n.body.depends_on_y() || n.beta != 0)
        throw std::domain_error("GenSeries2: not univariate");
    return {n.alpha, n.body.to_ts1()};
}

}  // namespace appell
