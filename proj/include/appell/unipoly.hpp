// Dense univariate polynomials over Q, lowest degree first.
#pragma once

#include <string>
#include <vector>

#include "appell/rational.hpp"

namespace appell {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rat& c) {
        if (c != 0) coef_ = {c};
    }
    explicit UniPoly(std::vector<Rat> coef) : coef_(std::move(coef)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(Rat(1)); }
    static UniPoly var() { return UniPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
    static UniPoly monomial(const Rat& c, int deg);

    bool is_zero() const { return coef_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return (int)coef_.size() - 1; }
    const Rat& operator[](int i) const;
    const std::vector<Rat>& coeffs() const { return coef_; }
    const Rat& leading() const;
    int valuation() const;  // -1 for zero

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rat& c) const;
    UniPoly shifted(int k) const;  // * t^k, k >= 0
    UniPoly pow(unsigned e) const;
    UniPoly derivative() const;
    Rat eval(const Rat& x) const;
    UniPoly compose(const UniPoly& inner) const;

    bool operator==(const UniPoly& o) const { return coef_ == o.coef_; }

    // Quotient and remainder; divisor nonzero.
    static void divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    static UniPoly gcd(UniPoly a, UniPoly b);  // monic, gcd(0,0)=0
    UniPoly monic() const;

    // Rational content (gcd of numerators over lcm of denominators, sign of leading);
    // primitive_part() = *this / content(), integer coefficients with unit content.
    Rat content() const;
    UniPoly primitive_part() const;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rat> coef_;
};

}  // namespace appell
