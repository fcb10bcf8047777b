// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "appell/catalog.hpp"

using namespace appell;

namespace {

struct Sampler {
    std::mt19937_64 g;
    explicit Sampler(uint64_t seed) : g(seed) {}
    Rat rat_small(long bound = 20) {
        std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
        long n = num(g);
        if (n == 0) n = 1;
        return rat(n, den(g));
    }
};

bool run_record(const std::string& id, uint64_t seed, int count, int order, std::string& detail) {
    const auto* rec = catalog_find(id);
    if (!rec) {
        detail = "missing record " + id;
        return false;
    }
    auto samples = sample_parameters(*rec, seed, count);
    for (const auto& m : samples) {
        auto rep = verify_identity(*rec, m, order);
        if (!rep.passed()) {
            detail = id + " [" + params_str(m) + "]: " + rep.outcome + " " + rep.detail;
            return false;
        }
    }
    return true;
}

RatFunc T() { return RatFunc::var(); }
RatFunc C(const Rat& v) { return RatFunc(v); }

bool same_set(std::vector<Rat> a, std::vector<Rat> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

bool check_exponents(const Lode& L, const OdePoint& p, std::vector<Rat> expect,
                     std::string& detail) {
    auto rep = local_exponents(L, p);
    if (same_set(rep.rational_roots, expect)) return true;
    detail = "exponent table mismatch at " + p.str();
    return false;
}

}  // namespace

int main() {
    using Check = std::function<bool(std::string&)>;
    struct Criterion {
        int n;
        std::string label;
        Check run;
    };

    std::vector<Criterion> criteria;

    criteria.push_back({1, "kato equation from elimination, 20 samples", [](std::string& d) {
                            return run_record("kato-ode", 101, 20, 0, d);
                        }});

    criteria.push_back({2, "F2(x,2-x): equation and quadratic pullback, 20 samples",
                        [](std::string& d) { return run_record("f2-xy2", 102, 20, 0, d); }});

    criteria.push_back(
        {3, "necessity sampling and the order-2 obstruction", [](std::string& d) {
             if (!run_record("f2-xy2-necessity", 103, 20, 0, d)) return false;
             Sampler s(1003);
             // obstruction vanishes on the conic family x = 1-Ct^2,
             // y = 1 - C(t+1)^2/(C-1)
             for (int i = 0; i < 20; ++i) {
                 Rat Cc = s.rat_small();
                 if (Cc == 0 || Cc == 1) continue;
                 Curve curve{C(Rat(1)) - C(Cc) * RatFunc(UniPoly::var().pow(2)),
                             C(Rat(1)) - C(Cc / (Cc - 1)) *
                                             RatFunc(UniPoly(std::vector<Rat>{Rat(1), Rat(1)}).pow(2))};
                 if (!order2_obstruction(AppellKind::F2, curve).is_zero()) {
                     d = "obstruction nonzero on the conic family, C=" + rat_str(Cc);
                     return false;
                 }
             }
             // and is nonzero on random lines off {y=0, y=1, x+y=1, x+y=2}
             int done = 0;
             while (done < 10) {
                 Rat p = s.rat_small(), q = s.rat_small();
                 if (p == 0 || (p == -1 && (q == 1 || q == 2)) || (p == 0 && (q == 0 || q == 1)))
                     continue;
                 Curve line{T(), C(p) * T() + C(q)};
                 if (order2_obstruction(AppellKind::F2, line).is_zero()) {
                     d = "obstruction vanished on line y = " + rat_str(p) + " t + " + rat_str(q);
                     return false;
                 }
                 ++done;
             }
             return true;
         }});

    criteria.push_back({4, "separated F2 family equals its equation, 10 samples",
                        [](std::string& d) {
                            return run_record("f2-separated-family", 104, 10, 0, d);
                        }});

    criteria.push_back(
        {5, "singular-line F2 orders 2, 3, 3 and their equations, 10 samples each",
         [](std::string& d) {
             return run_record("f2-y0-euler", 105, 10, 0, d) &&
                    run_record("f2-y1-hpg32", 106, 10, 0, d) &&
                    run_record("f2-y1mx-hpg32", 107, 10, 0, d);
         }});

    criteria.push_back({6, "F4 order-2 cases: Bailey family and the quadratic locus, 10 each",
                        [](std::string& d) {
                            return run_record("f4-bailey-family", 108, 10, 0, d) &&
                                   run_record("f4-quadratic-euler", 109, 10, 0, d);
                        }});

    criteria.push_back({7, "symmetric squares on the quadratic locus, 10 samples",
                        [](std::string& d) {
                            return run_record("f4-symsq", 110, 10, 0, d) &&
                                   run_record("a4hpg2s", 111, 10, 0, d) &&
                                   run_record("a4hpg2s-alt1", 112, 10, 0, d) &&
                                   run_record("a4hpg2s-alt2", 113, 10, 0, d);
                        }});

    criteria.push_back({8, "3F2 cases of the kato equation, 10 samples", [](std::string& d) {
                            return run_record("a4hpg3", 114, 10, 0, d) &&
                                   run_record("a4hpg3-c32", 115, 10, 0, d) &&
                                   run_record("a4hpg3-moebius", 116, 10, 0, d);
                        }});

    criteria.push_back(
        {9, "identity suite: exact, solves-system and proportional records, 5 samples each",
         [](std::string& d) {
             for (const auto& rec : catalog_entries()) {
                 if (rec.mode != VerifyMode::exact && rec.mode != VerifyMode::solves_system &&
                     rec.mode != VerifyMode::proportional)
                     continue;
                 if (!run_record(rec.id, 117, 5, 0, d)) return false;
             }
             return true;
         }});

    criteria.push_back(
        {10, "negative control fails while the same-ODE companion passes, 20 samples",
         [](std::string& d) {
             const auto* bad = catalog_find("f2x1-wrongformula");
             const auto* good = catalog_find("f2-y1-hpg32");
             auto samples = sample_parameters(*bad, 118, 20);
             for (const auto& m : samples) {
                 auto rb = verify_identity(*bad, m);
                 if (!rb.passed()) {
                     d = "negative control did not fail at [" + params_str(m) + "]: " + rb.detail;
                     return false;
                 }
                 auto rg = verify_identity(*good, m);
                 if (!rg.passed()) {
                     d = "companion failed at [" + params_str(m) + "]: " + rg.detail;
                     return false;
                 }
             }
             return true;
         }});

    criteria.push_back({11, "F1 curve condition and the y=x^2 family", [](std::string& d) {
        Sampler s(1011);
        // residual vanishes on the quadratic family and the reducible lines
        for (int i = 0; i < 10; ++i) {
            Rat a = s.rat_small(), b = s.rat_small();
            Curve par{T(), RatFunc(UniPoly::var().pow(2))};
            if (!f1_curve_residual(a, 2 * b, a - b, 1 + b, par).is_zero()) {
                d = "residual nonzero on the y=x^2 family";
                return false;
            }
            Rat sl = s.rat_small();
            if (sl == 0 || sl == 1) continue;
            Curve line{T(), C(sl) * T()};
            if (!f1_curve_residual(a, s.rat_small(), s.rat_small(), a + 1, line).is_zero()) {
                d = "residual nonzero on the reducible family y = s x, c = a+1";
                return false;
            }
            Curve shifted{C(Rat(1)) - T(), C(Rat(1)) - C(sl) * T()};
            Rat b1 = s.rat_small(), cc = s.rat_small();
            if (!f1_curve_residual(a, b1, cc - b1, cc, shifted).is_zero()) {
                d = "residual nonzero on the reducible family 1-x, 1-sx";
                return false;
            }
        }
        // nonzero on generic lines
        int done = 0;
        while (done < 10) {
            Rat a = s.rat_small(), b1 = s.rat_small(), b2 = s.rat_small(), cc = s.rat_small();
            Rat p = s.rat_small(), q = s.rat_small();
            if (p == 0 || q == 0 || p == 1) continue;  // keep off y=x and constants
            if (cc == a + 1) continue;
            Curve line{T(), C(p) * T() + C(q)};
            if (f1_curve_residual(a, b1, b2, cc, line).is_zero()) {
                d = "residual vanished on a generic line y = " + rat_str(p) + " t + " +
                    rat_str(q);
                return false;
            }
            ++done;
        }
        if (!run_record("f1q0-ode", 119, 10, 0, d)) return false;
        // the explicit Gauss expansion solves the derived equation
        const auto* rec = catalog_find("f1q0-ode");
        for (const auto& m : sample_parameters(*rec, 120, 5)) {
            Rat a = m.at("a"), b = m.at("b");
            auto r = minimal_ode(AppellSpec::f1(a, 2 * b, a - b, 1 + b),
                                 Curve{T(), RatFunc(UniPoly::var().pow(2))}, 2, 2);
            if (!r.found() || r.order != 2) {
                d = "no order-2 equation along y=x^2 at [" + params_str(m) + "]";
                return false;
            }
            ExprContext ctx;
            ctx.params = m;
            ctx.vars = {"t"};
            auto g = expr_expand(
                parse_expr("(1-t)^(-2*a) * pFq([a, 1/2], [1+b]; -4*t/(t-1)^2)", ctx), 14);
            if (!lode_annihilates(r.ode, g.to_univariate(), 8)) {
                d = "Gauss expansion not annihilated at [" + params_str(m) + "]";
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({12, "local exponent tables, 10 samples each", [](std::string& d) {
        Sampler s(1012);
        for (int i = 0; i < 10; ++i) {
            Rat A = s.rat_small(), B = s.rat_small(), Cc = s.rat_small();
            Lode eu = euler_ode(A, B, Cc);
            if (!check_exponents(eu, OdePoint::at(Rat(0)), {Rat(0), Rat(1 - Cc)}, d) ||
                !check_exponents(eu, OdePoint::at(Rat(1)), {Rat(0), Rat(Cc - A - B)}, d) ||
                !check_exponents(eu, OdePoint::infinity(), {A, B}, d))
                return false;

            Rat D = s.rat_small(), E = s.rat_small();
            Lode h = hpg32_ode(A, B, Cc, D, E);
            if (!check_exponents(h, OdePoint::at(Rat(0)), {Rat(0), Rat(1 - D), Rat(1 - E)}, d) ||
                !check_exponents(h, OdePoint::at(Rat(1)),
                                 {Rat(0), Rat(1), Rat(D + E - A - B - Cc)}, d) ||
                !check_exponents(h, OdePoint::infinity(), {A, B, Cc}, d))
                return false;

            Rat a = s.rat_small(), b = s.rat_small(), c1 = s.rat_small(), c2 = s.rat_small();
            Lode K = kato_ode(a, b, c1, c2);
            if (!check_exponents(K, OdePoint::at(Rat(0)),
                                 {Rat(0), Rat(2 - 2 * c1), Rat(c2 - a - b)}, d) ||
                !check_exponents(K, OdePoint::at(Rat(1)),
                                 {Rat(0), Rat(2 - 2 * c2), Rat(c1 - a - b)}, d) ||
                !check_exponents(K, OdePoint::infinity(),
                                 {Rat(2 * a), Rat(2 * b), Rat(c1 + c2 - 1)}, d))
                return false;

            Rat b1 = s.rat_small(), b2 = s.rat_small();
            Lode xy2 = f2_xy2_ode(a, b1, b2);
            if (!check_exponents(xy2, OdePoint::at(Rat(0)), {Rat(0), Rat(1 - 2 * b1)}, d) ||
                !check_exponents(xy2, OdePoint::at(Rat(2)), {Rat(0), Rat(1 - 2 * b2)}, d) ||
                !check_exponents(xy2, OdePoint::at(Rat(1)), {Rat(0), Rat(b1 + b2 - a)}, d) ||
                !check_exponents(xy2, OdePoint::infinity(), {a, Rat(b1 + b2)}, d))
                return false;

            // separated-family equation with rational singular points:
            // s = (k^2+1)/(2k) factors t^2+2st+1 = (t+k)(t+1/k)
            Rat k = s.rat_small();
            if (k == 0 || k == 1 || k == -1) k = rat(2, 3);
            Rat sp = (k * k + 1) / (2 * k);
            Lode sep = f2_sep_ode(b1, b2, sp);
            if (!check_exponents(sep, OdePoint::at(Rat(1)), {Rat(0), Rat(1 - 2 * b1)}, d) ||
                !check_exponents(sep, OdePoint::at(Rat(-1)), {Rat(0), Rat(1 - 2 * b1)}, d) ||
                !check_exponents(sep, OdePoint::at(Rat(-k)), {Rat(0), Rat(1 - 2 * b2)}, d) ||
                !check_exponents(sep, OdePoint::at(Rat(-1 / k)), {Rat(0), Rat(1 - 2 * b2)}, d) ||
                !check_exponents(sep, OdePoint::infinity(),
                                 {Rat(2 * b1 + 2 * b2), Rat(2 * b1 + 2 * b2 - 1)}, d))
                return false;
        }
        return true;
    }});

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << c.n << ": " << c.label << " ("
                  << (long)ms << " ms)";
        if (!ok) std::cout << "  -- " << detail;
        std::cout << "\n";
        if (!ok) ++failures;
    }
    if (failures) std::cout << failures << " criteria failed\n";
    return failures == 0 ? 0 : 1;
}
