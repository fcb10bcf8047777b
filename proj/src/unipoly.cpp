#include "appell/unipoly.hpp"

#include <sstream>

namespace appell {

void UniPoly::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

UniPoly UniPoly::monomial(const Rat& c, int deg) {
    if (c == 0) return UniPoly();
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return UniPoly(std::move(v));
}

const Rat& UniPoly::operator[](int i) const {
    static const Rat kZero(0);
    if (i < 0 || i >= (int)coef_.size()) return kZero;
    return coef_[i];
}

const Rat& UniPoly::leading() const {
    if (coef_.empty()) throw std::domain_error("leading of zero polynomial");
    return coef_.back();
}

int UniPoly::valuation() const {
    for (size_t i = 0; i < coef_.size(); ++i)
        if (coef_[i] != 0) return (int)i;
    return -1;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> v(std::max(coef_.size(), o.coef_.size()), Rat(0));
    for (size_t i = 0; i < coef_.size(); ++i) v[i] += coef_[i];
    for (size_t i = 0; i < o.coef_.size(); ++i) v[i] += o.coef_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> v(coef_.size() + o.coef_.size() - 1, Rat(0));
    for (size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i] == 0) continue;
        for (size_t j = 0; j < o.coef_.size(); ++j)
            if (o.coef_[j] != 0) v[i + j] += coef_[i] * o.coef_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rat& c) const {
    if (c == 0) return UniPoly();
    UniPoly r = *this;
    for (auto& x : r.coef_) x *= c;
    return r;
}

UniPoly UniPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rat> v(coef_.size() + k, Rat(0));
    for (size_t i = 0; i < coef_.size(); ++i) v[i + k] = coef_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly acc = one(), b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coef_.size() <= 1) return UniPoly();
    std::vector<Rat> v(coef_.size() - 1);
    for (size_t i = 1; i < coef_.size(); ++i) v[i - 1] = coef_[i] * Rat((long)i);
    return UniPoly(std::move(v));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = coef_.size(); i-- > 0;) acc = acc * x + coef_[i];
    return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (size_t i = coef_.size(); i-- > 0;) acc = acc * inner + UniPoly(coef_[i]);
    return acc;
}

void UniPoly::divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    std::vector<Rat> rem = a.coef_;
    int db = b.degree();
    std::vector<Rat> quo;
    if ((int)rem.size() - 1 >= db) quo.assign(rem.size() - db, Rat(0));
    for (int i = (int)rem.size() - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        Rat f = rem[i] / b.coef_.back();
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coef_[j];
    }
    q = UniPoly(std::move(quo));
    r = UniPoly(std::move(rem));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        divrem(a, b, q, r);
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    return scaled(Rat(1) / leading());
}

Rat UniPoly::content() const {
    if (is_zero()) return Rat(0);
    Int g(0), l(1);
    for (const auto& c : coef_) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat cont = rat_of(g, l);
    if (leading() < 0) cont = -cont;
    return cont;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / content());
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i] == 0) continue;
        Rat c = coef_[i];
        if (first) {
            if (c < 0) os << "-", c = -c;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0 || c != 1) os << rat_str(c);
        if (i > 0) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace appell
