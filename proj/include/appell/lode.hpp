// Linear ODEs over Q(t): the named Fuchsian equations, local exponents,
// pullback and projective transforms, symmetric squares, series residuals.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "appell/series.hpp"

namespace appell {

// coeffs[k] multiplies d^k/dt^k; leading coefficient nonzero.
struct Lode {
    std::vector<RatFunc> coeffs;

    Lode() = default;
    explicit Lode(std::vector<RatFunc> c);

    int order() const { return (int)coeffs.size() - 1; }
    Lode canonical() const;  // leading-coefficient-monic, normalized
    // Common-denominator polynomial form spanning the same equation.
    std::vector<UniPoly> poly_coeffs() const;
    std::string str(const std::string& var = "t") const;
};

bool lode_equal(const Lode& a, const Lode& b);

// Named equations.
Lode euler_ode(const Rat& A, const Rat& B, const Rat& C);
Lode hpg32_ode(const Rat& A, const Rat& B, const Rat& C, const Rat& D, const Rat& E);
Lode kato_ode(const Rat& a, const Rat& b, const Rat& c1, const Rat& c2);
// The F2(x,2-x) equation with c1=2b1, c2=2b2 and the separated-family equation.
Lode f2_xy2_ode(const Rat& a, const Rat& b1, const Rat& b2);
Lode f2_sep_ode(const Rat& b1, const Rat& b2, const Rat& s);

Lode builtin_ode(const std::string& name, const std::vector<Rat>& params);

// A point on the projective line.
struct OdePoint {
    bool infinite = false;
    Rat value;

    static OdePoint at(const Rat& v) { return {false, v}; }
    static OdePoint infinity() { return {true, Rat(0)}; }
    std::string str() const { return infinite ? "inf" : rat_str(value); }
};

struct ExponentReport {
    OdePoint point;
    UniPoly indicial;                // polynomial in the exponent variable
    std::vector<Rat> rational_roots; // with multiplicity, sorted
};

// Regular or regular-singular points only; irregular points raise an error
// naming the offending coefficient.
ExponentReport local_exponents(const Lode& L, const OdePoint& pt);

// theta factors (root, exponent) define theta(t) = prod (t-root)^exponent.
struct ThetaFactor {
    Rat root, exponent;
};

// Equation satisfied by theta(t) * y(phi(t)) for solutions y of L.
Lode pullback_transform(const Lode& L, const RatFunc& phi, const std::vector<ThetaFactor>& theta);

// Order-3 equation annihilating products of solution pairs of an order-2 L.
Lode symmetric_square(const Lode& L);

// L applied to a prefactored series; exact through the reported order.
GenSeries1 lode_apply(const Lode& L, const GenSeries1& s);
bool lode_annihilates(const Lode& L, const GenSeries1& s, int through_order);

// Frobenius solution t^rho * (1 + ...) at the origin; nullopt on resonance.
std::optional<GenSeries1> frobenius_series(const Lode& L, const Rat& rho, int order);

// Rational roots, with multiplicity, of a rational-coefficient polynomial.
std::vector<Rat> rational_roots(const UniPoly& p);

// JSON serialization: {"schema":"lode/1","order":r,"coeffs":[{"num":[...],"den":[...]}]}
std::string lode_to_json(const Lode& L);
Lode lode_from_json(const std::string& text);

}  // namespace appell
