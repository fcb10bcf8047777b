// Partial differential operators with polynomial coefficients, the four
// Appell systems, their singular loci, specialization along rational curves,
// and operator transport under rational changes of variables.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "appell/hyperseries.hpp"
#include "appell/series.hpp"

namespace appell {

// sum over (i,j) of coeff_{ij}(x,y) * d^i/dx^i d^j/dy^j
struct WeylOp {
    std::map<std::pair<int, int>, BiPoly> terms;

    void add_term(int i, int j, const BiPoly& c);
    WeylOp operator+(const WeylOp& o) const;
    WeylOp operator-(const WeylOp& o) const;
    WeylOp scaled(const Rat& c) const;
    WeylOp mul_bipoly(const BiPoly& c) const;  // left multiplication by a function
    bool is_zero() const;
    std::string str() const;
};

// Left composition d/d(axis) ∘ op, expanded by the Leibniz rule.
WeylOp weyl_prolong(const WeylOp& op, int axis);
// Full composition A ∘ B in the Weyl algebra.
WeylOp weyl_compose(const WeylOp& a, const WeylOp& b);
// op applied to a prefactored series; exact through the body order.
GenSeries2 weyl_apply(const WeylOp& op, const GenSeries2& g);

struct Curve {
    RatFunc x, y;

    RatFunc dx() const { return x.derivative(); }
    RatFunc dy() const { return y.derivative(); }
    bool is_constant() const { return dx().is_zero() && dy().is_zero(); }
    std::string str() const { return "x=" + x.str() + "; y=" + y.str(); }
};

// Coefficients specialized along the curve; derivative indices unchanged.
std::map<std::pair<int, int>, RatFunc> specialize(const WeylOp& op, const Curve& curve);

// The classical systems: two operators for F2/F3/F4, three for F1.
std::vector<WeylOp> appell_system(const AppellSpec& sys);

struct LocusComponent {
    std::string name;
    BiPoly poly;
};

// Finite components of the singular locus; lines at infinity are implicit.
std::vector<LocusComponent> singular_locus(AppellKind kind);
std::optional<std::string> curve_on_locus(AppellKind kind, const Curve& curve);

// Transport of operators under the substitution x = X(u,v), y = Y(u,v):
// returned operators annihilate G(u,v) = F(X,Y) whenever the inputs
// annihilate F. Denominators are cleared; each output is scaled by a
// polynomial factor, which does not change its solution set.
std::vector<WeylOp> weyl_change_vars(const std::vector<WeylOp>& ops, const BiRat& X,
                                     const BiRat& Y);

}  // namespace appell
