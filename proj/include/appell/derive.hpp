// Specialization of the Appell systems along rational curves: full-derivative
// expansions, the bounded elimination search for the minimal ODE, the order-2
// obstruction forms, the F1 curve condition, and solution checks.
#pragma once

#include "appell/lode.hpp"
#include "appell/weylop.hpp"

namespace appell {

using PartialVec = std::map<std::pair<int, int>, RatFunc>;

// Expansions of d^k/dt^k in partial derivatives along the curve, k = 0..r.
std::vector<PartialVec> full_derivative_elements(const Curve& curve, int r);

struct MinimalOdeResult {
    enum class Status { found, not_found_within_bounds } status;
    Lode ode;   // valid when found
    int order = -1;

    bool found() const { return status == Status::found; }
};

// Bounded realization of "follows fully": generators are the monomial
// prolongations of the system operators up to partial order prolong_depth + 2,
// specialized along the curve; the relation search runs over ODE orders
// 1..max_order. A bound failure is a reported outcome, not an exception.
MinimalOdeResult minimal_ode(const AppellSpec& sys, const Curve& curve, int max_order = 4,
                             int prolong_depth = 2);

// Coefficient blocking an order-2 relation without prolongation:
// F2: y/(1-x) x'^2 + 2 x'y' + x/(1-y) y'^2 (to d2/dxdy)
// F4: x'^2 + (1-x-y)/y x'y' + x/y y'^2     (to d2/dx2)
RatFunc order2_obstruction(AppellKind kind, const Curve& curve);

// Left side of the F1 nonlinear curve condition; zero iff the system fully
// implies a second order equation along the curve.
RatFunc f1_curve_residual(const Rat& a, const Rat& b1, const Rat& b2, const Rat& c,
                          const Curve& curve);

struct ReducibilityReport {
    enum class Status { reducible, irreducible, hypothesis_violated } status;
    std::string witness;
};

// Arithmetic reducibility predicate for the F4 system; requires c1, c2 not
// integers, otherwise reports the violated hypothesis.
ReducibilityReport f4_reducibility(const Rat& a, const Rat& b, const Rat& c1, const Rat& c2);

struct SolveCheck {
    bool ok;
    std::string detail;  // first failing operator and coefficient when !ok
};

// Every operator annihilates the candidate through total degree N.
SolveCheck solves_system(const std::vector<WeylOp>& ops, const GenSeries2& candidate, int N);

}  // namespace appell
