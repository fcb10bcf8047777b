// Hypergeometric series engine: Pochhammer symbols, pFq and Appell F1-F4
// truncated expansions, and exact evaluation of terminating double sums.
#pragma once

#include <string>
#include <vector>

#include "appell/series.hpp"

namespace appell {

Rat pochhammer(const Rat& a, long n);

struct PfqSpec {
    std::vector<Rat> upper, lower;

    // Smallest n with all coefficients beyond n zero, or -1 if non-terminating.
    long termination_bound() const;
    void validate() const;
    std::string str() const;
};

enum class AppellKind { F1, F2, F3, F4 };

// Parameter order by kind:
//   F1: a, b1, b2, c      F2: a, b1, b2, c1, c2
//   F3: a1, a2, b1, b2, c F4: a, b, c1, c2
struct AppellSpec {
    AppellKind kind;
    std::vector<Rat> params;

    static AppellSpec f1(Rat a, Rat b1, Rat b2, Rat c);
    static AppellSpec f2(Rat a, Rat b1, Rat b2, Rat c1, Rat c2);
    static AppellSpec f3(Rat a1, Rat a2, Rat b1, Rat b2, Rat c);
    static AppellSpec f4(Rat a, Rat b, Rat c1, Rat c2);

    // Exact numerator/denominator of the (n,m) series coefficient.
    Rat coeff_num(long n, long m) const;
    Rat coeff_den(long n, long m) const;

    // Termination bounds (-1 if unbounded): separate n/m bounds plus a
    // joint n+m bound coming from (a)_{n+m}-type factors.
    void termination(long& n_bound, long& m_bound, long& sum_bound) const;
    bool is_terminating() const;
    void validate() const;
    std::string str() const;
};

TS1 pfq_series(const PfqSpec& spec, int order);
TS2 appell_series(const AppellSpec& spec, int order);

struct TerminatingValue {
    Rat value;
    long terms;
};

TerminatingValue appell_terminating_eval(const AppellSpec& spec, const Rat& x, const Rat& y);

}  // namespace appell
