// Sparse bivariate polynomials over Q, and unnormalized bivariate fractions.
#pragma once

#include <map>
#include <string>
#include <utility>

#include "appell/ratfunc.hpp"

namespace appell {

// Invariant: no stored zero coefficients.
class BiPoly {
public:
    using Key = std::pair<int, int>;  // (x-degree, y-degree)

    BiPoly() = default;
    explicit BiPoly(const Rat& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    static BiPoly x() { return monomial(Rat(1), 1, 0); }
    static BiPoly y() { return monomial(Rat(1), 0, 1); }
    static BiPoly monomial(const Rat& c, int i, int j);

    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(int i, int j) const;
    void set(int i, int j, const Rat& c);
    void add_term(int i, int j, const Rat& c);

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly scaled(const Rat& c) const;
    BiPoly pow(unsigned e) const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

    BiPoly dx() const;
    BiPoly dy() const;

    // Substitutions.
    RatFunc eval_curve(const RatFunc& xt, const RatFunc& yt) const;
    Rat eval(const Rat& x, const Rat& y) const;

    int total_degree() const;
    std::string str(const std::string& vx = "x", const std::string& vy = "y") const;

private:
    std::map<Key, Rat> terms_;
};

// Unnormalized fraction of BiPolys; enough arithmetic for chain-rule work.
// No gcd reduction: zero tests happen only on cleared numerators.
struct BiRat {
    BiPoly num, den;

    BiRat() : num(), den(Rat(1)) {}
    explicit BiRat(const BiPoly& p) : num(p), den(Rat(1)) {}
    BiRat(BiPoly n, BiPoly d);

    bool is_zero() const { return num.is_zero(); }
    BiRat operator-() const;
    BiRat operator+(const BiRat& o) const;
    BiRat operator-(const BiRat& o) const;
    BiRat operator*(const BiRat& o) const;
    BiRat operator/(const BiRat& o) const;
    BiRat dx() const;
    BiRat dy() const;
    BiRat pow_int(long e) const;
};

// Parses +,-,*,/,^ expressions over rationals and two named variables.
BiPoly parse_bipoly(const std::string& text, const std::string& vx = "x",
                    const std::string& vy = "y");
BiRat parse_birat(const std::string& text, const std::string& vx = "u",
                  const std::string& vy = "v");

}  // namespace appell
