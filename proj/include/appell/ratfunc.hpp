// Normalized univariate rational functions: the coefficient field Q(t).
#pragma once

#include <string>

#include "appell/unipoly.hpp"

namespace appell {

// Invariant: gcd(num, den) = 1, den monic and nonzero; 0 is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(UniPoly::one()) {}
    RatFunc(const Rat& c) : num_(UniPoly(c)), den_(UniPoly::one()) {}
    RatFunc(UniPoly num, UniPoly den);
    explicit RatFunc(const UniPoly& p) : num_(p), den_(UniPoly::one()) {}

    static RatFunc var() { return RatFunc(UniPoly::var()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc derivative() const;
    RatFunc compose(const RatFunc& inner) const;
    RatFunc pow_int(long e) const;

    // Value at a point where the denominator does not vanish.
    Rat eval(const Rat& x) const;
    bool defined_at(const Rat& x) const { return den_.eval(x) != 0; }

    std::string str(const std::string& var = "t") const;

private:
    UniPoly num_, den_;
};

RatFunc ratfunc_normalize(const UniPoly& p, const UniPoly& q);

// Parses +,-,*,/,^ expressions over rational literals and one variable.
RatFunc parse_ratfunc(const std::string& text, const std::string& var = "t");

}  // namespace appell
