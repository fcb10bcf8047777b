#include "appell/catalog.hpp"
#include "doctest.h"

using namespace appell;

TEST_CASE("catalog has the expected shape") {
    const auto& cat = catalog_entries();
    CHECK(cat.size() >= 40);
    int exact = 0, prop = 0, same = 0, solves = 0, fail = 0;
    for (const auto& r : cat) {
        switch (r.mode) {
            case VerifyMode::exact: ++exact; break;
            case VerifyMode::proportional: ++prop; break;
            case VerifyMode::same_ode: ++same; break;
            case VerifyMode::solves_system: ++solves; break;
            case VerifyMode::expect_fail: ++fail; break;
        }
    }
    CHECK(exact >= 25);
    CHECK(prop == 2);
    CHECK(same >= 25);
    CHECK(solves >= 15);
    CHECK(fail == 1);
    CHECK(catalog_find("bailey-separation") != nullptr);
    CHECK(catalog_find("kato-ode") != nullptr);
    CHECK(catalog_find("no-such-id") == nullptr);
}

TEST_CASE("sampling is deterministic and respects constraints") {
    const auto* rec = catalog_find("f2-xy2");
    REQUIRE(rec);
    auto s1 = sample_parameters(*rec, 11, 5);
    auto s2 = sample_parameters(*rec, 11, 5);
    CHECK(s1.size() == 5);
    for (size_t i = 0; i < 5; ++i) CHECK(s1[i] == s2[i]);
    for (const auto& m : s1) {
        Rat c1 = m.at("c1"), c2 = m.at("c2");
        Rat twice_b1 = 2 * m.at("b1"), twice_b2 = 2 * m.at("b2");
        CHECK(c1 == twice_b1);
        CHECK(c2 == twice_b2);
    }
    const auto* red = catalog_find("f2x1-wrongformula");
    REQUIRE(red);
    for (const auto& m : sample_parameters(*red, 3, 5)) {
        CHECK(!is_nonpos_integer(m.at("c1")));
        CHECK(!is_nonpos_integer(m.at("c2")));
    }
}

TEST_CASE("every catalog record passes at two samples") {
    for (const auto& rec : catalog_entries()) {
        auto samples = sample_parameters(rec, 42, 2);
        for (const auto& m : samples) {
            auto rep = verify_identity(rec, m);
            INFO(rec.id, " [", params_str(m), "] -> ", rep.outcome, ": ", rep.detail);
            CHECK(rep.passed());
        }
    }
}

TEST_CASE("exact records remain true at a higher truncation order") {
    for (const auto& rec : catalog_entries()) {
        if (rec.mode != VerifyMode::exact) continue;
        auto samples = sample_parameters(rec, 7, 1);
        auto rep = verify_identity(rec, samples[0], rec.order + 4);
        INFO(rec.id, ": ", rep.detail);
        CHECK(rep.passed());
    }
}

TEST_CASE("same-ode comparisons are symmetric") {
    const auto* rec = catalog_find("a4hpg3");
    REQUIRE(rec);
    auto m = sample_parameters(*rec, 5, 1)[0];
    Lode lhs = kato_ode(m.at("a"), m.at("b"), m.at("c") + rat(1, 2), rat(1, 2));
    Lode rhs = hpg32_ode(2 * m.at("a"), 2 * m.at("b"), m.at("c"),
                         m.at("a") + m.at("b") + rat(1, 2), 2 * m.at("c"));
    CHECK(lode_equal(lhs, rhs));
    CHECK(lode_equal(rhs, lhs));
}

TEST_CASE("negative control fails while its same-ode companion passes") {
    const auto* bad = catalog_find("f2x1-wrongformula");
    const auto* good = catalog_find("f2-y1-hpg32");
    REQUIRE(bad);
    REQUIRE(good);
    auto samples = sample_parameters(*bad, 2024, 3);
    for (const auto& m : samples) {
        auto rep_bad = verify_identity(*bad, m);
        INFO("wrongformula: ", rep_bad.detail);
        CHECK(rep_bad.passed());  // the expect-fail record passes by failing
        auto rep_good = verify_identity(*good, m);
        INFO("companion: ", rep_good.detail);
        CHECK(rep_good.passed());
    }
}

TEST_CASE("report json is well formed") {
    const auto* rec = catalog_find("f1-singular-y0");
    REQUIRE(rec);
    auto m = sample_parameters(*rec, 1, 1)[0];
    auto rep = verify_identity(*rec, m);
    std::string js = report_to_json(rep);
    CHECK(js.find("\"outcome\":\"pass\"") != std::string::npos);
    CHECK(catalog_list_json().find("bailey-separation") != std::string::npos);
}
