#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3cone/scenario.hpp"

using namespace k3cone;

namespace {

const CheckRecord* find_check(const Report& r, const std::string& id) {
    for (const auto& c : r.checks)
        if (c.id == id) return &c;
    return nullptr;
}

} // namespace

TEST_CASE("builtin names load") {
    for (const auto& name : builtin_names()) {
        Scenario s = builtin_scenario(name);
        CHECK(s.name == name);
    }
    CHECK_THROWS_AS(builtin_scenario("nope"), DomainError);
}

TEST_CASE("p3xp3 scenario content") {
    Scenario s = builtin_scenario("p3xp3");
    REQUIRE(s.fiber_gram.has_value());
    CHECK(*s.fiber_gram == IntMat::from_rows({{4, 6}, {6, 4}}));
    CHECK(s.sqms.size() == 3);
    CHECK(s.anticanonical_vector() == IntVec{2, 2, 2});
}

TEST_CASE("rank1 has a two-ray movable cone") {
    Report r = run_builtin("rank1");
    CHECK(r.overall_pass());
    const CheckRecord* mov = find_check(r, "mov.cone");
    REQUIRE(mov != nullptr);
    CHECK(mov->status == CheckStatus::Pass);
}

TEST_CASE("p1xV:1 passes exactly with three rays") {
    Report r = run_builtin("p1xV:1");
    CHECK(r.overall_pass());
    for (const auto& c : r.checks) CHECK(c.status != CheckStatus::Flagged);
}

TEST_CASE("p1xV:3 passes with exactly one flagged upper-bound entry") {
    Report r = run_builtin("p1xV:3");
    CHECK(r.overall_pass());
    int flagged = 0;
    for (const auto& c : r.checks)
        if (c.status == CheckStatus::Flagged) ++flagged;
    CHECK(flagged == 1);
    const CheckRecord* gap = find_check(r, "mov.gap");
    REQUIRE(gap != nullptr);
    CHECK(gap->status == CheckStatus::Flagged);
    CHECK(gap->details.find("[0, 1, 1]") != std::string::npos);
}

TEST_CASE("every builtin passes overall") {
    for (const auto& name : builtin_names()) {
        Report r = run_builtin(name);
        INFO(name << "\n" << r.to_text());
        CHECK(r.overall_pass());
    }
}

TEST_CASE("reports are byte-stable across runs") {
    for (const auto& name : {"p3xp3", "p1xV:2", "quadric-cone"}) {
        Report a = run_builtin(name);
        Report b = run_builtin(name);
        CHECK(a.to_text() == b.to_text());
        CHECK(a.to_json() == b.to_json());
    }
}

TEST_CASE("section entry points split the report") {
    Scenario s = builtin_scenario("p3xp3");
    auto nef = verify_nef_duality(s);
    CHECK(nef.size() == 3);
    for (const auto& c : nef) CHECK(c.id.rfind("nef.duality.", 0) == 0);
    auto lift = verify_lifting_conditions(s);
    bool has_d = false;
    for (const auto& c : lift)
        if (c.id == "lift.d") has_d = true;
    CHECK(has_d);
    auto inf = verify_infinite_case(s);
    bool has_dirichlet = false;
    for (const auto& c : inf)
        if (c.id == "domain.dirichlet") has_dirichlet = true;
    CHECK(has_dirichlet);
    CHECK(verify_finite_case(s).empty()); // no movable-cone expectation for p3xp3
}

TEST_CASE("schema violations carry field paths") {
    CHECK_THROWS_AS(load_scenario_string(R"({"name": "x", "bogus": 1})"), SchemaError);
    try {
        load_scenario_string(R"({"name": "x", "n1": {"labels": ["A"], "curves": [
            {"name": "c", "pairing": [1, 2]}]}})");
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(e.path.find("n1.curves[0].pairing") != std::string::npos);
    }
    // mismatched quotient kernel
    CHECK_THROWS_AS(load_scenario_string(R"({"name": "x",
        "n1": {"labels": ["A", "B"], "curves": []},
        "quotient": {"matrix": [[1, 0]], "kernel_ray": [0, 1]}})"),
                    SchemaError);
    CHECK_THROWS_AS(load_scenario_string("{"), ParseError);
}

TEST_CASE("scenario files accept comments and unknown builtins are rejected") {
    Scenario s = load_scenario_string(R"({
        // a tiny lattice-only scenario
        "name": "demo",
        "fiber_lattice": {"gram": [[2, 4], [4, 2]]},
        "expected": {"disc_factors": [2, 6]}
    })");
    Report r = run_scenario(s);
    CHECK(r.overall_pass());
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].id == "lattice.disc");
}

TEST_CASE("failures are reported, not thrown") {
    Scenario s = load_scenario_string(R"({
        "name": "bad-expectation",
        "fiber_lattice": {"gram": [[2, 4], [4, 2]]},
        "expected": {"disc_factors": [2, 5]}
    })");
    Report r = run_scenario(s);
    CHECK_FALSE(r.overall_pass());
    CHECK(r.to_json().find("\"overall\": \"fail\"") != std::string::npos);
}

TEST_CASE("derived gram must agree with the stated fiber lattice") {
    Scenario s = load_scenario_string(R"({
        "name": "gram-clash",
        "chow": {"vars": ["L1", "L2"], "dim": 4, "relations": [[2,0],[0,4]],
                 "valuation": [{"monomial": [1,3], "value": 1}], "H": "L1 + 2*L2"},
        "fiber_lattice": {"gram": [[0, 4], [4, 2]]}
    })");
    Report r = run_scenario(s);
    const CheckRecord* gram = nullptr;
    for (const auto& c : r.checks)
        if (c.id == "chow.gram") gram = &c;
    REQUIRE(gram != nullptr);
    CHECK(gram->status == CheckStatus::Fail);
}
