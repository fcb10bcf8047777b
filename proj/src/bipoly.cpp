#include "appell/bipoly.hpp"

#include <cctype>
#include <sstream>

namespace appell {

BiPoly BiPoly::monomial(const Rat& c, int i, int j) {
    BiPoly p;
    if (c != 0) p.terms_[{i, j}] = c;
    return p;
}

Rat BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

void BiPoly::set(int i, int j, const Rat& c) {
    if (c == 0)
        terms_.erase({i, j});
    else
        terms_[{i, j}] = c;
}

void BiPoly::add_term(int i, int j, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({i, j}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BiPoly BiPoly::scaled(const Rat& c) const {
    BiPoly r;
    if (c == 0) return r;
    r = *this;
    for (auto& [k, v] : r.terms_) v *= c;
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly acc(Rat(1)), b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

BiPoly BiPoly::dx() const {
    BiPoly r;
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c * Rat(k.first));
    return r;
}

BiPoly BiPoly::dy() const {
    BiPoly r;
    for (const auto& [k, c] : terms_)
        if (k.second > 0) r.add_term(k.first, k.second - 1, c * Rat(k.second));
    return r;
}

RatFunc BiPoly::eval_curve(const RatFunc& xt, const RatFunc& yt) const {
    // Power caches keep the curve substitution cheap.
    int dx_max = 0, dy_max = 0;
    for (const auto& [k, c] : terms_) {
        dx_max = std::max(dx_max, k.first);
        dy_max = std::max(dy_max, k.second);
    }
    std::vector<RatFunc> xp(dx_max + 1, RatFunc(Rat(1))), yp(dy_max + 1, RatFunc(Rat(1)));
    for (int i = 1; i <= dx_max; ++i) xp[i] = xp[i - 1] * xt;
    for (int j = 1; j <= dy_max; ++j) yp[j] = yp[j - 1] * yt;
    RatFunc acc;
    for (const auto& [k, c] : terms_) acc = acc + xp[k.first] * yp[k.second] * RatFunc(c);
    return acc;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
    Rat acc(0);
    for (const auto& [k, c] : terms_)
        acc += c * rat_pow_int(x, k.first) * rat_pow_int(y, k.second);
    return acc;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

std::string BiPoly::str(const std::string& vx, const std::string& vy) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c0] : terms_) {
        Rat c = c0;
        if (first) {
            if (c < 0) os << "-", c = -c;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool has_var = k.first > 0 || k.second > 0;
        if (!has_var || c != 1) os << rat_str(c);
        if (k.first > 0) {
            if (c != 1) os << "*";
            os << vx;
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second > 0) {
            if (c != 1 || k.first > 0) os << "*";
            os << vy;
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

BiRat::BiRat(BiPoly n, BiPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("BiRat: zero denominator");
    if (num.is_zero()) den = BiPoly(Rat(1));
}

BiRat BiRat::operator-() const {
    BiRat r = *this;
    r.num = -r.num;
    return r;
}

BiRat BiRat::operator+(const BiRat& o) const {
    if (den == o.den) return BiRat(num + o.num, den);
    return BiRat(num * o.den + o.num * den, den * o.den);
}

BiRat BiRat::operator-(const BiRat& o) const {
    if (den == o.den) return BiRat(num - o.num, den);
    return BiRat(num * o.den - o.num * den, den * o.den);
}

BiRat BiRat::operator*(const BiRat& o) const { return BiRat(num * o.num, den * o.den); }

BiRat BiRat::operator/(const BiRat& o) const {
    if (o.is_zero()) throw std::domain_error("BiRat: division by zero");
    return BiRat(num * o.den, den * o.num);
}

BiRat BiRat::dx() const { return BiRat(num.dx() * den - num * den.dx(), den * den); }

BiRat BiRat::dy() const { return BiRat(num.dy() * den - num * den.dy(), den * den); }

BiRat BiRat::pow_int(long e) const {
    if (e >= 0) return BiRat(num.pow((unsigned)e), den.pow((unsigned)e));
    if (is_zero()) throw std::domain_error("BiRat: 0^negative");
    return BiRat(den.pow((unsigned)(-e)), num.pow((unsigned)(-e)));
}

namespace {

struct BpParser {
    const std::string& s;
    size_t i = 0;
    const std::string &vx, &vy;

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
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + what);
    }

    BiRat expr() {
        BiRat v = term();
        for (;;) {
            skip();
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }
    BiRat term() {
        BiRat v = factor();
        for (;;) {
            skip();
            if (eat('*'))
                v = v * factor();
            else if (eat('/'))
                v = v / factor();
            else
                return v;
        }
    }
    BiRat factor() {
        skip();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        BiRat base = primary();
        skip();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            size_t j = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            if (j == i) fail("integer exponent expected");
            long e = std::stol(s.substr(j, i - j));
            return base.pow_int(neg ? -e : e);
        }
        return base;
    }
    BiRat primary() {
        skip();
        if (eat('(')) {
            BiRat v = expr();
            if (!eat(')')) fail("')' expected");
            return v;
        }
        if (i < s.size() && (std::isalpha((unsigned char)s[i]) || s[i] == '_')) {
            size_t j = i;
            while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
            std::string name = s.substr(j, i - j);
            if (name == vx) return BiRat(BiPoly::x());
            if (name == vy) return BiRat(BiPoly::y());
            fail("unknown symbol '" + name + "'");
        }
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            size_t j = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            return BiRat(BiPoly(parse_rat(s.substr(j, i - j))));
        }
        fail("value expected");
    }
};

}  // namespace

BiRat parse_birat(const std::string& text, const std::string& vx, const std::string& vy) {
    BpParser p{text, 0, vx, vy};
    BiRat v = p.expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return v;
}

BiPoly parse_bipoly(const std::string& text, const std::string& vx, const std::string& vy) {
    BiRat v = parse_birat(text, vx, vy);
    if (v.den.total_degree() != 0)
        throw std::invalid_argument("parse_bipoly: expression is not polynomial");
    Rat d = v.den.coeff(0, 0);
    return v.num.scaled(Rat(1) / d);
}

}  // namespace appell
