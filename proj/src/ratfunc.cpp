#include "appell/ratfunc.hpp"

#include <cctype>
#include <sstream>

namespace appell {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::one();
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        UniPoly q, r;
        UniPoly::divrem(num_, g, q, r);
        num_ = q;
        UniPoly::divrem(den_, g, q, r);
        den_ = q;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        num_ = num_.scaled(Rat(1) / lead);
        den_ = den_.scaled(Rat(1) / lead);
    }
}

RatFunc ratfunc_normalize(const UniPoly& p, const UniPoly& q) { return RatFunc(p, q); }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::compose(const RatFunc& inner) const {
    // Horner over the inner function, numerator and denominator separately.
    RatFunc n(Rat(0)), d(Rat(0));
    for (int i = num_.degree(); i >= 0; --i) n = n * inner + RatFunc(num_[i]);
    for (int i = den_.degree(); i >= 0; --i) d = d * inner + RatFunc(den_[i]);
    return n / d;
}

RatFunc RatFunc::pow_int(long e) const {
    if (e == 0) return RatFunc(Rat(1));
    if (is_zero()) {
        if (e < 0) throw std::domain_error("RatFunc: 0^negative");
        return *this;
    }
    RatFunc b = e < 0 ? RatFunc(Rat(1)) / *this : *this;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    RatFunc acc{Rat(1)};
    while (n) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

Rat RatFunc::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw std::domain_error("RatFunc::eval: pole at evaluation point");
    return num_.eval(x) / d;
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    std::ostringstream os;
    os << "(" << num_.str(var) << ")/(" << den_.str(var) << ")";
    return os.str();
}

namespace {

// Recursive-descent parser over +,-,*,/,^, rationals, one named variable.
struct RfParser {
    const std::string& s;
    size_t i = 0;
    const std::string& var;

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

    RatFunc expr() {
        RatFunc v = term();
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
    RatFunc term() {
        RatFunc v = factor();
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
    RatFunc factor() {
        skip();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        RatFunc base = primary();
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
    RatFunc primary() {
        skip();
        if (eat('(')) {
            RatFunc v = expr();
            if (!eat(')')) fail("')' expected");
            return v;
        }
        if (i < s.size() && (std::isalpha((unsigned char)s[i]) || s[i] == '_')) {
            size_t j = i;
            while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
            std::string name = s.substr(j, i - j);
            if (name != var) fail("unknown symbol '" + name + "' (expected variable '" + var + "')");
            return RatFunc::var();
        }
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            size_t j = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            return RatFunc(parse_rat(s.substr(j, i - j)));
        }
        fail("value expected");
    }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text, const std::string& var) {
    RfParser p{text, 0, var};
    RatFunc v = p.expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace appell
