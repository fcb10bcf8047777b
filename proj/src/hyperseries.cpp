#include "appell/hyperseries.hpp"

#include <sstream>

namespace appell {

Rat pochhammer(const Rat& a, long n) {
    if (n < 0) throw std::invalid_argument("pochhammer: negative index");
    Rat acc(1);
    for (long k = 0; k < n; ++k) acc *= a + Rat(k);
    return acc;
}

namespace {

// Index bound contributed by one numerator parameter: (a)_n = 0 for n > -a
// exactly when a is a non-positive integer.
long poch_bound(const Rat& a) { return is_nonpos_integer(a) ? to_long(-a) : -1; }

long min_bound(long a, long b) {
    if (a < 0) return b;
    if (b < 0) return a;
    return std::min(a, b);
}

// A lower parameter c hits a zero Pochhammer at index -c + 1; termination must
// come first: some numerator bound <= -c.
void check_lower(const Rat& c, long num_bound, const std::string& where) {
    if (!is_nonpos_integer(c)) return;
    long zero_at = to_long(-c);
    if (num_bound < 0 || num_bound > zero_at)
        throw std::domain_error("zero Pochhammer in a denominator before termination (" + where +
                                ")");
}

}  // namespace

long PfqSpec::termination_bound() const {
    long b = -1;
    for (const auto& a : upper) b = min_bound(b, poch_bound(a));
    return b;
}

void PfqSpec::validate() const {
    long nb = termination_bound();
    for (const auto& c : lower) check_lower(c, nb, "pFq lower parameter " + rat_str(c));
}

std::string PfqSpec::str() const {
    std::ostringstream os;
    os << upper.size() << "F" << lower.size() << "(";
    for (size_t i = 0; i < upper.size(); ++i) os << (i ? "," : "") << rat_str(upper[i]);
    os << ";";
    for (size_t i = 0; i < lower.size(); ++i) os << (i ? "," : "") << rat_str(lower[i]);
    os << ")";
    return os.str();
}

TS1 pfq_series(const PfqSpec& spec, int order) {
    spec.validate();
    TS1 s(order);
    Rat c(1);
    s.set(0, c);
    for (int n = 0; n < order; ++n) {
        Rat num(1), den(Rat(n + 1));
        for (const auto& a : spec.upper) num *= a + Rat(n);
        for (const auto& b : spec.lower) den *= b + Rat(n);
        if (num == 0) break;  // terminated
        if (den == 0) throw std::domain_error("zero Pochhammer in a denominator (pFq)");
        c = c * num / den;
        s.set(n + 1, c);
    }
    return s;
}

AppellSpec AppellSpec::f1(Rat a, Rat b1, Rat b2, Rat c) {
    return {AppellKind::F1, {std::move(a), std::move(b1), std::move(b2), std::move(c)}};
}
AppellSpec AppellSpec::f2(Rat a, Rat b1, Rat b2, Rat c1, Rat c2) {
    return {AppellKind::F2,
            {std::move(a), std::move(b1), std::move(b2), std::move(c1), std::move(c2)}};
}
AppellSpec AppellSpec::f3(Rat a1, Rat a2, Rat b1, Rat b2, Rat c) {
    return {AppellKind::F3,
            {std::move(a1), std::move(a2), std::move(b1), std::move(b2), std::move(c)}};
}
AppellSpec AppellSpec::f4(Rat a, Rat b, Rat c1, Rat c2) {
    return {AppellKind::F4, {std::move(a), std::move(b), std::move(c1), std::move(c2)}};
}

Rat AppellSpec::coeff_num(long n, long m) const {
    switch (kind) {
        case AppellKind::F1:
            return pochhammer(params[0], n + m) * pochhammer(params[1], n) *
                   pochhammer(params[2], m);
        case AppellKind::F2:
            return pochhammer(params[0], n + m) * pochhammer(params[1], n) *
                   pochhammer(params[2], m);
        case AppellKind::F3:
            return pochhammer(params[0], n) * pochhammer(params[1], m) *
                   pochhammer(params[2], n) * pochhammer(params[3], m);
        case AppellKind::F4:
            return pochhammer(params[0], n + m) * pochhammer(params[1], n + m);
    }
    throw std::logic_error("unreachable");
}

Rat AppellSpec::coeff_den(long n, long m) const {
    Rat fact = pochhammer(Rat(1), n) * pochhammer(Rat(1), m);
    switch (kind) {
        case AppellKind::F1:
            return pochhammer(params[3], n + m) * fact;
        case AppellKind::F2:
            return pochhammer(params[3], n) * pochhammer(params[4], m) * fact;
        case AppellKind::F3:
            return pochhammer(params[4], n + m) * fact;
        case AppellKind::F4:
            return pochhammer(params[2], n) * pochhammer(params[3], m) * fact;
    }
    throw std::logic_error("unreachable");
}

void AppellSpec::termination(long& n_bound, long& m_bound, long& sum_bound) const {
    n_bound = m_bound = sum_bound = -1;
    switch (kind) {
        case AppellKind::F1:
            sum_bound = poch_bound(params[0]);
            n_bound = poch_bound(params[1]);
            m_bound = poch_bound(params[2]);
            break;
        case AppellKind::F2:
            sum_bound = poch_bound(params[0]);
            n_bound = poch_bound(params[1]);
            m_bound = poch_bound(params[2]);
            break;
        case AppellKind::F3:
            n_bound = min_bound(poch_bound(params[0]), poch_bound(params[2]));
            m_bound = min_bound(poch_bound(params[1]), poch_bound(params[3]));
            break;
        case AppellKind::F4:
            sum_bound = min_bound(poch_bound(params[0]), poch_bound(params[1]));
            break;
    }
}

bool AppellSpec::is_terminating() const {
    long nb, mb, sb;
    termination(nb, mb, sb);
    return sb >= 0 || (nb >= 0 && mb >= 0);
}

void AppellSpec::validate() const {
    long nb, mb, sb;
    termination(nb, mb, sb);
    long n_eff = min_bound(nb, sb), m_eff = min_bound(mb, sb);
    switch (kind) {
        case AppellKind::F1:
            check_lower(params[3], min_bound(n_eff < 0 || m_eff < 0 ? -1 : n_eff + m_eff, sb),
                        "F1 c");
            break;
        case AppellKind::F2:
            check_lower(params[3], n_eff, "F2 c1");
            check_lower(params[4], m_eff, "F2 c2");
            break;
        case AppellKind::F3:
            check_lower(params[4], n_eff < 0 || m_eff < 0 ? -1 : n_eff + m_eff, "F3 c");
            break;
        case AppellKind::F4:
            check_lower(params[2], n_eff, "F4 c1");
            check_lower(params[3], m_eff, "F4 c2");
            break;
    }
}

std::string AppellSpec::str() const {
    static const char* names[] = {"F1", "F2", "F3", "F4"};
    std::ostringstream os;
    os << names[(int)kind] << "(";
    for (size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << rat_str(params[i]);
    os << ")";
    return os.str();
}

TS2 appell_series(const AppellSpec& spec, int order) {
    spec.validate();
    TS2 s(order);
    for (long n = 0; n <= order; ++n) {
        for (long m = 0; n + m <= order; ++m) {
            Rat num = spec.coeff_num(n, m);
            if (num == 0) continue;
            Rat den = spec.coeff_den(n, m);
            if (den == 0)
                throw std::domain_error("zero Pochhammer in a denominator (" + spec.str() + ")");
            s.set((int)n, (int)m, num / den);
        }
    }
    return s;
}

TerminatingValue appell_terminating_eval(const AppellSpec& spec, const Rat& x, const Rat& y) {
    if (!spec.is_terminating())
        throw std::domain_error("appell_terminating_eval: non-terminating spec " + spec.str());
    spec.validate();
    long nb, mb, sb;
    spec.termination(nb, mb, sb);
    long n_max = min_bound(nb, sb), m_max = min_bound(mb, sb);
    Rat acc(0);
    long terms = 0;
    for (long n = 0; n <= n_max; ++n) {
        long m_hi = sb >= 0 ? std::min(m_max, sb - n) : m_max;
        for (long m = 0; m <= m_hi; ++m) {
            Rat num = spec.coeff_num(n, m);
            if (num == 0) continue;
            Rat den = spec.coeff_den(n, m);
            if (den == 0) throw std::domain_error("zero denominator Pochhammer in finite sum");
            acc += num / den * rat_pow_int(x, n) * rat_pow_int(y, m);
            ++terms;
        }
    }
    return {acc, terms};
}

}  // namespace appell
