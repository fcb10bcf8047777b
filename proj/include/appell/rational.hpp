// Exact rational scalars: thin helpers around GMP's mpq_class.
#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace appell {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Rat rat_of(const Int& n, const Int& d) {
    if (d == 0) throw std::invalid_argument("rat_of: zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_nonpos_integer(const Rat& r) { return is_integer(r) && r <= 0; }

// Fits-in-long integers only; callers check is_integer first.
inline long to_long(const Rat& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw std::domain_error("to_long: not a small integer");
    return r.get_num().get_si();
}

inline Rat rat_pow_int(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow_int: 0^negative");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Exact rational q-th root of c, if one exists (q >= 1).
inline std::optional<Rat> rat_root(const Rat& c, unsigned long q) {
    if (q == 0) throw std::invalid_argument("rat_root: q = 0");
    if (q == 1) return c;
    if (c == 0) return Rat(0);
    bool neg = c < 0;
    if (neg && q % 2 == 0) return std::nullopt;
    Int nu = abs(c.get_num()), de = c.get_den();
    Int rn, rd;
    if (!mpz_root(rn.get_mpz_t(), nu.get_mpz_t(), q)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), de.get_mpz_t(), q)) return std::nullopt;
    Rat r = rat_of(neg ? Int(-rn) : rn, rd);
    return r;
}

// Exact value of c^(p/q) when it is rational.
inline std::optional<Rat> rat_pow_exact(const Rat& c, const Rat& e) {
    if (is_integer(e)) return rat_pow_int(c, to_long(e));
    if (c == 0) {
        if (e < 0) return std::nullopt;
        return Rat(0);
    }
    long p = e.get_num().get_si();
    unsigned long q = e.get_den().get_ui();
    auto root = rat_root(c, q);
    if (!root) return std::nullopt;
    return rat_pow_int(*root, p);
}

inline long rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw std::domain_error("rat_floor: out of range");
    return q.get_si();
}

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace appell
