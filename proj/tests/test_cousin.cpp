#include "doctest.h"
#include "test_util.hpp"

using namespace kt;

TEST_CASE("kernel basis dimension equals the transcendence degree") {
    struct Case {
        TowerPtr tower;
        std::size_t dim;
    };
    const Case cases[] = {
        {tower_q(), 0},      {tower_t(), 1},      {tower_t1t2(), 2},
        {tower_sqrt_t(), 1}, {tower_cubic(), 2},
    };
    for (const auto& c : cases) {
        GlobalSectionBasis kernel = kernel_Rprime_basis(c.tower);
        CHECK(kernel.dimension() == c.dim);
        // On P^1 the kernel of R' is exactly the global sections.
        CHECK(global_sections_basis(c.tower).dimension() == c.dim);
        for (const auto& w : kernel.forms) {
            CHECK(kernel_membership(w));
            CHECK(principal_parts(w).empty());
            CHECK(project_Rprime(w).is_zero());
        }
    }
}

TEST_CASE("kernel membership examples") {
    TowerPtr k = tower_cubic();
    CHECK(kernel_membership(form("3*d(t1) - a*d(t2)", k)));
    CHECK_FALSE(kernel_membership(form("x*d(t1)", k)));
    CHECK_FALSE(kernel_membership(form("d(x)", k)));

    TowerPtr kt_ = tower_t();
    CHECK(kernel_membership(form("d(t)", kt_)));
    CHECK_FALSE(kernel_membership(form("(1/x)*d(t)", kt_)));
}

TEST_CASE("realize examples") {
    TowerPtr k = tower_q();

    // (1/x)dx has residue 1 at x and -1 at infinity; its own principal
    // parts realize back to it.
    AbsoluteForm w = form("(1/x)*d(x)", k);
    PrincipalParts family = principal_parts(w);
    CHECK(family.parts.size() == 2);
    ObstructionReport r = realize_principal_parts(family, k);
    CHECK(r.realizable);
    CHECK(r.total_residue.is_zero());
    REQUIRE(r.witness.has_value());
    CHECK(principal_parts(*r.witness) == family);
    CHECK(r.witness->dx_coeff == elem("1/x", k));

    // Dropping the infinity class leaves total residue 1: obstructed.
    PrincipalParts partial;
    for (const auto& [place, at] : family.parts)
        if (!place.is_infinity()) partial.insert(at);
    ObstructionReport bad = realize_principal_parts(partial, k);
    CHECK_FALSE(bad.realizable);
    CHECK(bad.total_residue == Scalar(1L));
    CHECK_FALSE(bad.witness.has_value());
}

TEST_CASE("realize a family with dt data") {
    TowerPtr k = tower_t();
    AbsoluteForm w = form("(1/x^2)*d(x) + (t/x)*d(t)", k);
    PrincipalParts family = principal_parts(w);
    ObstructionReport r = realize_principal_parts(family, k);
    CHECK(r.realizable);
    REQUIRE(r.witness.has_value());
    CHECK(principal_parts(*r.witness) == family);
}

TEST_CASE("verify_square_res example") {
    TowerPtr k = tower_t();
    DiagramReport report = verify_square_res(form("(t/(x^2-x))*d(x)", k));
    CHECK(report.verdict);
    CHECK(report.entries.size() == 1);  // squarefree denominator, regular at infinity
    DiagramReport with_inf = verify_square_res(form("x*d(x) + (t/x)*d(x)", k));
    CHECK(with_inf.verdict);
    CHECK(with_inf.entries.size() == 2);
    for (const auto& e : report.entries) CHECK(e.lhs == e.rhs);
}

TEST_CASE("verify_square_tan example") {
    TowerPtr k = tower_q();
    DiagramReport report = verify_square_tan(symbol("{x + eps, x}", k));
    CHECK(report.verdict);
    CHECK(report.entries.size() == 2);
}

TEST_CASE("realize is a one-sided inverse of rho") {
    TowerPtr k = tower_t();
    Rng rng(71);
    for (int i = 0; i < 10; ++i) {
        AbsoluteForm beta = random_beta(rng, k, 2, 2);
        PrincipalParts family = principal_parts(beta);
        ObstructionReport r = realize_principal_parts(family, k);
        // rho-images always satisfy the residue theorem.
        CHECK(r.realizable);
        REQUIRE(r.witness.has_value());
        CHECK(principal_parts(*r.witness) == family);
    }
}

TEST_CASE("random families realize iff the total residue vanishes") {
    Rng rng(73);
    for (const TowerPtr& k : {tower_q(), tower_t()}) {
        for (int i = 0; i < 15; ++i) {
            PrincipalParts family = random_family(rng, k);
            Scalar total;
            for (const auto& [place, at] : family.parts)
                total = total + res_h1x(at);
            ObstructionReport r = realize_principal_parts(family, k);
            CHECK(r.realizable == total.is_zero());
            CHECK(r.total_residue == total);
            if (r.realizable) {
                REQUIRE(r.witness.has_value());
                CHECK(principal_parts(*r.witness) == family);
            }
        }
    }
}

TEST_CASE("obstruction is additive in the family") {
    TowerPtr k = tower_q();
    // Families supported at disjoint places: total residues add.
    PrincipalPartAt at_x;
    at_x.place = Place::finite(poly("x", k));
    at_x.dx_polar = {{1u, XPoly(Scalar(2L))}};
    PrincipalPartAt at_x1;
    at_x1.place = Place::finite(poly("x-1", k));
    at_x1.dx_polar = {{1u, XPoly(Scalar(3L))}};

    PrincipalParts fa, fb, fab;
    fa.insert(at_x);
    fb.insert(at_x1);
    fab.insert(at_x);
    fab.insert(at_x1);

    Scalar ra = realize_principal_parts(fa, k).total_residue;
    Scalar rb = realize_principal_parts(fb, k).total_residue;
    Scalar rab = realize_principal_parts(fab, k).total_residue;
    CHECK(ra == Scalar(2L));
    CHECK(rb == Scalar(3L));
    CHECK(rab == ra + rb);
}
