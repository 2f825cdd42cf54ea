#include "doctest.h"
#include "test_util.hpp"

using namespace kt;

TEST_CASE("expression parser examples") {
    TowerPtr k = tower_t();
    DualSymbol s = symbol("{1 + eps*t, x}", k);
    CHECK(s.left.z0 == FieldElem(1));
    CHECK(s.left.z1 == elem("t", k));
    CHECK(s.right == DualUnit(elem("x", k), FieldElem()));

    CHECK(elem("(x^2 - 1)/(x - 1)", k) == elem("x + 1", k));
    CHECK(elem("2^-2", k) == elem("1/4", k));
    CHECK(form("d(x^2)", k) == form("2*x*d(x)", k));
}

TEST_CASE("expression parser errors") {
    TowerPtr k = tower_t();
    CHECK_THROWS_AS(eval_expression("d(x) + x", k), TypeMismatch);
    CHECK_THROWS_AS(eval_expression("eps^2", k), EpsSquared);
    CHECK_THROWS_AS(eval_expression("(eps*x)*(eps*t)", k), EpsSquared);
    CHECK_THROWS_AS(eval_expression("1/eps", k), NonUnit);
    CHECK_THROWS_AS(eval_expression("1/0", k), DivisionByZero);

    try {
        eval_expression("x + ", k);
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 4);
    }
    try {
        eval_expression("x + y", k);
        FAIL("expected UnknownSymbol");
    } catch (const UnknownSymbol& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("tower config parsing") {
    TowerPtr plain = parse_tower_text("trans: t1, t2\nvar: x\n");
    CHECK(plain->num_trans() == 2);
    CHECK_FALSE(plain->has_alg());
    CHECK(plain->var_name() == "x");

    TowerPtr alg = parse_tower_text(
        "# square root of t1\n"
        "trans: t1\n"
        "alg: a; minpoly: a^2 - t1\n"
        "var: x\n");
    CHECK(alg->num_trans() == 1);
    REQUIRE(alg->has_alg());
    CHECK(alg->alg().name == "a");
    CHECK(elem("a^2", alg) == elem("t1", alg));

    CHECK_THROWS_AS(parse_tower_text("bogus line"), Error);
    CHECK_THROWS_AS(parse_tower_text("frobnicate: 1"), Error);
    CHECK_THROWS_AS(parse_tower_text("alg: a\n"), Error);
    CHECK_THROWS_AS(parse_tower_text("trans: t\nalg: a; minpoly: 2*a^2 - t\n"),
                    NonMonicMinimalPolynomial);
}

TEST_CASE("place parsing") {
    TowerPtr k = tower_q();
    CHECK(parse_place("infinity", k).is_infinity());
    CHECK(parse_place("inf", k).is_infinity());
    Place p = parse_place("x^2 - 2", k);
    REQUIRE_FALSE(p.is_infinity());
    CHECK(p.poly() == poly("x^2 - 2", k));
    CHECK_THROWS_AS(parse_place("1/x", k), Error);
}

TEST_CASE("family file parsing") {
    TowerPtr k = tower_t();
    PrincipalParts family = parse_family_text(
        "# residue 1 at x, compensated at infinity\n"
        "x        | dx | 1 | 1\n"
        "x        | dt | 2 | t\n"
        "infinity | dx | 1 | -1\n",
        k);
    REQUIRE(family.parts.size() == 2);
    const auto& at_x = family.parts.at(Place::finite(poly("x", k)));
    CHECK(at_x.dx_polar == PolarList{{1u, XPoly(Scalar(1L))}});
    REQUIRE(at_x.dt_polar.size() == 1);
    CHECK(at_x.dt_polar[0].size() == 1);
    CHECK(at_x.dt_polar[0][0].first == 2);

    ObstructionReport r = realize_principal_parts(family, k);
    CHECK(r.realizable);
    REQUIRE(r.witness.has_value());
    CHECK(principal_parts(*r.witness) == family);

    CHECK_THROWS_AS(parse_family_text("x | dx | 1", k), Error);
    CHECK_THROWS_AS(parse_family_text("x | dy | 1 | 1", k), Error);
    CHECK_THROWS_AS(parse_family_text("x | dx | 1 | 1/x", k), Error);
}

TEST_CASE("run_command examples") {
    RunConfig cfg;
    cfg.command = "residue";
    cfg.args = {"d(x)/x", "(x)"};
    RunResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output == "1\n");

    cfg.command = "kernel";
    cfg.args = {};
    cfg.tower = tower_t1t2();
    res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output ==
          "{\"schema\":1,\"command\":\"kernel\",\"basis\":[\"dt1\",\"dt2\"],"
          "\"dimension\":2}\n");

    cfg.command = "verify-tan";
    cfg.args = {"{x + eps, x}"};
    cfg.tower = nullptr;
    cfg.format = "json";
    res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"verdict\":true") != std::string::npos);

    cfg.command = "is-exact";
    cfg.args = {"(1/x)*d(x)"};
    res = run_command(cfg);
    CHECK(res.exit_code == 1);  // simple pole: not exact
    CHECK(res.output.find("\"exact\":false") != std::string::npos);

    cfg.command = "is-exact";
    cfg.args = {"2*x*d(x)"};
    cfg.format = "text";
    res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("witness") != std::string::npos);

    cfg.command = "no-such-command";
    res = run_command(cfg);
    CHECK(res.exit_code == 2);

    cfg.command = "residue";
    cfg.args = {"d(x", "(x)"};
    res = run_command(cfg);
    CHECK(res.exit_code == 2);
    CHECK(res.error.find("syntax error") != std::string::npos);
}

TEST_CASE("json output is deterministic for a fixed seed") {
    RunConfig cfg;
    cfg.command = "selftest";
    cfg.tower = tower_t();
    cfg.format = "json";
    cfg.seed = 99;
    cfg.count = 3;
    RunResult a = run_command(cfg);
    RunResult b = run_command(cfg);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"verdict\":true") != std::string::npos);

    cfg.command = "rho";
    cfg.args = {"(1/(x^2 - t))*d(x)"};
    RunResult c = run_command(cfg);
    CHECK(c.exit_code == 0);
    CHECK(c.output == run_command(cfg).output);
}

TEST_CASE("parse of render is the identity") {
    Rng rng(79);
    for (const TowerPtr& k : {tower_q(), tower_t(), tower_sqrt_t()}) {
        int deg = k->has_alg() ? 2 : 4;
        for (int i = 0; i < 15; ++i) {
            FieldElem f = random_elem(rng, k, deg, deg);
            CHECK(elem(f.str(), k) == f);

            DualSymbol s = random_symbol(rng, k, k->has_alg() ? 1 : 2);
            CHECK(symbol(s.str(), k) == s);
        }
    }
}
