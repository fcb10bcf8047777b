// Truncated formal power series in one and two variables, plus series with
// rational monomial prefactors. Truncation order is explicit state: every
// operation yields the order through which its result is exact.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "appell/bipoly.hpp"
#include "appell/ratfunc.hpp"

namespace appell {

// Coefficients c[0..order], exact through degree `order`.
class TS1 {
public:
    TS1() : order_(-1) {}
    explicit TS1(int order) : order_(order), c_(order + 1, Rat(0)) {}
    static TS1 constant(const Rat& v, int order);
    static TS1 variable(int order);

    int order() const { return order_; }
    const Rat& operator[](int k) const;
    void set(int k, const Rat& v);

    TS1 truncated(int order) const;
    TS1 operator-() const;
    TS1 operator+(const TS1& o) const;
    TS1 operator-(const TS1& o) const;
    TS1 operator*(const TS1& o) const;
    TS1 scaled(const Rat& v) const;
    TS1 shifted_up(int k) const;  // * t^k; order grows by k
    TS1 derivative() const;       // order drops by one
    TS1 compose(const TS1& inner) const;
    TS1 invert_unit() const;
    TS1 pow_rational(const Rat& e) const;

    bool is_zero_through(int k) const;
    std::optional<int> first_nonzero() const;
    std::string str(const std::string& var = "t") const;

private:
    int order_;
    std::vector<Rat> c_;
};

// Bivariate series: coefficients for n+m <= order, exact through that total degree.
class TS2 {
public:
    TS2() : order_(-1) {}
    explicit TS2(int order) : order_(order) {}
    static TS2 constant(const Rat& v, int order);
    static TS2 variable(int axis, int order);
    static TS2 from_ts1(const TS1& s, int axis);

    int order() const { return order_; }
    const std::map<std::pair<int, int>, Rat>& terms() const { return c_; }
    Rat coeff(int n, int m) const;
    void set(int n, int m, const Rat& v);
    void add_coeff(int n, int m, const Rat& v);

    TS2 truncated(int order) const;
    TS2 operator-() const;
    TS2 operator+(const TS2& o) const;
    TS2 operator-(const TS2& o) const;
    TS2 operator*(const TS2& o) const;
    TS2 scaled(const Rat& v) const;
    TS2 shifted_up(int i, int j) const;
    TS2 mul_bipoly(const BiPoly& p) const;
    TS2 dx() const;
    TS2 dy() const;
    TS2 pow_rational(const Rat& e) const;
    // x * d/dx as a single operation: keeps the truncation order.
    TS2 euler_dx() const;
    TS2 euler_dy() const;

    // Outer composed with inner series that vanish at the origin.
    static TS2 compose_uni(const TS1& outer, const TS2& inner);
    static TS2 compose_biv(const TS2& outer, const TS2& ix, const TS2& iy);

    bool depends_on_y() const;
    TS1 to_ts1() const;  // requires no y-dependence
    bool is_zero_through(int k) const;
    std::optional<std::pair<int, int>> first_nonzero() const;
    std::string str(const std::string& vx = "x", const std::string& vy = "y") const;

private:
    int order_;
    std::map<std::pair<int, int>, Rat> c_;
};

// t^alpha * body with rational alpha; body truncation tracked as usual.
struct GenSeries1 {
    Rat alpha;
    TS1 body;

    GenSeries1() : alpha(0) {}
    GenSeries1(Rat a, TS1 b) : alpha(std::move(a)), body(std::move(b)) {}
    static GenSeries1 from_ts1(const TS1& s) { return {Rat(0), s}; }

    // Strips the monomial content of the body into alpha.
    GenSeries1 normalized() const;
    GenSeries1 derivative() const;
    GenSeries1 mul_ratfunc(const RatFunc& f) const;
    GenSeries1 scaled(const Rat& v) const;
    GenSeries1 operator+(const GenSeries1& o) const;  // alpha difference must be integer
    bool is_zero_through_abs(const Rat& deg) const;   // absolute degree alpha + k
    // Exact through absolute degree alpha + body.order().
    Rat abs_order() const { return alpha + Rat(body.order()); }
};

// x^alpha y^beta * body.
struct GenSeries2 {
    Rat alpha, beta;
    TS2 body;

    GenSeries2() : alpha(0), beta(0) {}
    GenSeries2(Rat a, Rat b, TS2 s) : alpha(std::move(a)), beta(std::move(b)), body(std::move(s)) {}
    static GenSeries2 from_ts2(const TS2& s) { return {Rat(0), Rat(0), s}; }

    GenSeries2 normalized() const;
    GenSeries2 partial(int axis) const;  // keeps body order
    GenSeries2 mul_monomial(const Rat& c, int i, int j) const;
    GenSeries2 mul_bipoly(const BiPoly& p) const;
    GenSeries2 scaled(const Rat& v) const;
    GenSeries2 operator+(const GenSeries2& o) const;
    GenSeries2 operator*(const GenSeries2& o) const;
    GenSeries2 pow_rational(const Rat& e) const;
    bool is_zero_through_abs(const Rat& deg) const;
    Rat abs_order() const { return alpha + beta + Rat(body.order()); }
    GenSeries1 to_univariate() const;  // requires no y-dependence
};

// Binomial coefficient with rational top.
Rat binom_rat(const Rat& e, unsigned k);

}  // namespace appell
