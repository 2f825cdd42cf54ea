#include "doctest.h"
#include "test_util.hpp"

using namespace kt;

TEST_CASE("mpoly gcd and exact division") {
    MPoly t = MPoly::variable(0);
    MPoly u = MPoly::variable(1);
    MPoly a = (t + MPoly(1)) * (t - u) * (t - u);
    MPoly b = (t - u) * (u + MPoly(2));
    MPoly g = MPoly::gcd(a, b);
    CHECK(g == t - u);
    CHECK(*a.divided_by(g) == (t + MPoly(1)) * (t - u));
    CHECK(!a.divided_by(u + MPoly(3)).has_value());

    // content is pulled out and sign normalized
    MPoly c = MPoly(-6) * t;
    MPoly d = MPoly(4) * t * t;
    CHECK(MPoly::gcd(c, d) == MPoly(2) * t);
}

TEST_CASE("ratfun normal form") {
    RatFun t = RatFun::variable(0);
    RatFun half(mpq_class(1, 2));
    CHECK(half + RatFun(mpq_class(1, 3)) == RatFun(mpq_class(5, 6)));
    RatFun r = (t * t - RatFun(1L)) / (t + RatFun(1L));
    CHECK(r == t - RatFun(1L));
    CHECK((t / t) == RatFun(1L));
    CHECK_THROWS_AS(RatFun(0L).inv(), DivisionByZero);
    // normalization is idempotent: operations return normal forms
    RatFun s = -t / (t * t);
    CHECK(s == RatFun(MPoly(-1)) / t);
}

TEST_CASE("tower creation and validation") {
    CHECK(tower_q()->num_trans() == 0);
    CHECK_FALSE(tower_q()->has_alg());

    // Q(t)(sqrt t): gcd(y^2 - t, 2y) = 1
    TowerPtr k = tower_sqrt_t();
    CHECK(k->ext_degree() == 2);

    // (y-1)^2 = y^2 - 2y + 1 is inseparable
    UPoly<RatFun> bad({RatFun(1L), RatFun(-2L), RatFun(1L)});
    CHECK_THROWS_AS(
        Tower::create({}, Tower::Algebraic{"a", bad}, "x"),
        InseparableMinimalPolynomial);

    UPoly<RatFun> nonmonic({RatFun(1L), RatFun(0L), RatFun(2L)});
    CHECK_THROWS_AS(
        Tower::create({}, Tower::Algebraic{"a", nonmonic}, "x"),
        NonMonicMinimalPolynomial);

    CHECK_THROWS_AS(Tower::create({"t", "t"}, std::nullopt, "x"),
                    DuplicateSymbol);
    CHECK_THROWS_AS(Tower::create({"x"}, std::nullopt, "x"), DuplicateSymbol);
}

TEST_CASE("scalar arithmetic in the tower") {
    TowerPtr k = tower_sqrt_t();
    Scalar a = k->alpha();
    Scalar t(RatFun::variable(0));

    // inv(alpha) = alpha/t; oracle: alpha * (alpha/t) = t/t = 1
    Scalar ia = a.inv();
    CHECK(ia == a / t);
    CHECK(a * ia == Scalar(1L));

    CHECK(Scalar(mpq_class(1, 2)) + Scalar(mpq_class(1, 3)) ==
          Scalar(mpq_class(5, 6)));

    TowerPtr k2 = tower_sqrt2();
    Scalar b = k2->alpha();
    CHECK(b * b == Scalar(2L));
    CHECK_THROWS_AS(Scalar().inv(), DivisionByZero);
}

TEST_CASE("scalar field axioms on random samples") {
    TowerPtr k = tower_sqrt_t();
    Rng rng(7);
    for (int i = 0; i < 40; ++i) {
        Scalar a = random_scalar(rng, k);
        Scalar b = random_scalar(rng, k);
        Scalar c = random_scalar(rng, k);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1L));
    }
}

TEST_CASE("function field arithmetic") {
    TowerPtr k = tower_q();
    CHECK(elem("x/(x-1)", k) * elem("(x-1)/x", k) == FieldElem(1));
    CHECK(elem("1/x", k) + elem("1/(x+1)", k) == elem("(2*x+1)/(x^2+x)", k));
    CHECK(elem("(x^2-2)/x", k).inv() == elem("x/(x^2-2)", k));
    CHECK_THROWS_AS(elem("x", k) / FieldElem(), DivisionByZero);

    // canonical form: monic denominator, coprime
    FieldElem f = elem("(2*x+2)/(2*x^2-2)", k);
    CHECK(f == elem("1/(x-1)", k));
}

TEST_CASE("function field axioms on random samples") {
    TowerPtr k = tower_t();
    Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        FieldElem a = random_elem(rng, k, 3, 3);
        FieldElem b = random_elem(rng, k, 3, 3);
        FieldElem c = random_elem(rng, k, 3, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inv() == FieldElem(1));
    }
}

TEST_CASE("squarefree decomposition") {
    TowerPtr k = tower_q();
    auto d1 = squarefree_decomposition(poly("x^3+x^2", k));
    REQUIRE(d1.size() == 2);
    CHECK(d1[0].first == poly("x+1", k));
    CHECK(d1[0].second == 1);
    CHECK(d1[1].first == poly("x", k));
    CHECK(d1[1].second == 2);

    auto d2 = squarefree_decomposition(poly("x^2-2", k));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].first == poly("x^2-2", k));
    CHECK(d2[0].second == 1);

    TowerPtr kt_ = tower_t();
    auto d3 = squarefree_decomposition(poly("(x^2-t)^2*x", kt_));
    REQUIRE(d3.size() == 2);
    CHECK(d3[0].first == poly("x", kt_));
    CHECK(d3[0].second == 1);
    CHECK(d3[1].first == poly("x^2-t", kt_));
    CHECK(d3[1].second == 2);

    CHECK_THROWS_AS(squarefree_decomposition(XPoly()), ZeroPolynomial);
}

TEST_CASE("squarefree parts are squarefree and pairwise coprime") {
    TowerPtr k = tower_t();
    Rng rng(13);
    for (int i = 0; i < 20; ++i) {
        XPoly p = random_xpoly(rng, k, 3) * random_xpoly(rng, k, 2) *
                  random_xpoly(rng, k, 2);
        if (p.is_zero() || p.degree() < 1) continue;
        auto dec = squarefree_decomposition(p);
        XPoly rebuilt = XPoly::x(0);
        for (std::size_t a = 0; a < dec.size(); ++a) {
            CHECK(XPoly::gcd(dec[a].first, dec[a].first.derivative()).is_one());
            for (std::size_t b = a + 1; b < dec.size(); ++b)
                CHECK(XPoly::gcd(dec[a].first, dec[b].first).is_one());
            for (unsigned j = 0; j < dec[a].second; ++j)
                rebuilt = rebuilt * dec[a].first;
        }
        CHECK(rebuilt == p.monic());
    }
}

TEST_CASE("hermite reduction examples") {
    TowerPtr k = tower_q();
    auto check_identity = [&](const FieldElem& f, const HermiteResult& h) {
        FieldElem rhs = h.integrated.derivative_x() +
                        FieldElem(k, h.poly_part);
        if (!h.simple_num.is_zero())
            rhs = rhs + FieldElem(k, h.simple_num, h.simple_den);
        CHECK(f == rhs);
    };

    FieldElem f1 = elem("1/x^2", k);
    auto h1 = hermite_reduce(f1);
    CHECK(h1.integrated == elem("-1/x", k));
    CHECK(h1.simple_num.is_zero());
    CHECK(h1.poly_part.is_zero());
    check_identity(f1, h1);

    FieldElem f2 = elem("1/x", k);
    auto h2 = hermite_reduce(f2);
    CHECK(h2.integrated.is_zero());
    CHECK(h2.simple_num == poly("1", k));
    CHECK(h2.simple_den == poly("x", k));
    CHECK(h2.poly_part.is_zero());
    check_identity(f2, h2);

    FieldElem f3 = elem("(x^3+1)/x^2", k);
    auto h3 = hermite_reduce(f3);
    CHECK(h3.integrated == elem("-1/x", k));
    CHECK(h3.simple_num.is_zero());
    CHECK(h3.poly_part == poly("x", k));
    check_identity(f3, h3);
}

TEST_CASE("hermite reconstruction on random inputs") {
    TowerPtr k = tower_t();
    Rng rng(17);
    for (int i = 0; i < 25; ++i) {
        FieldElem f = random_elem(rng, k, 6, 6);
        auto h = hermite_reduce(f);
        FieldElem rhs = h.integrated.derivative_x() + FieldElem(k, h.poly_part);
        if (!h.simple_num.is_zero()) {
            CHECK(h.simple_den.is_monic());
            CHECK(XPoly::gcd(h.simple_den, h.simple_den.derivative()).is_one());
            CHECK(h.simple_num.degree() < h.simple_den.degree());
            rhs = rhs + FieldElem(k, h.simple_num, h.simple_den);
        }
        CHECK(f == rhs);
    }
}

TEST_CASE("partial fractions") {
    TowerPtr k = tower_q();
    auto recombine = [&](const FieldElem& f, const PartialFractions& pf) {
        FieldElem sum(k, pf.poly_part);
        for (const auto& term : pf.terms) {
            XPoly gn = XPoly::x(0);
            for (unsigned i = 0; i < term.order; ++i) gn = gn * term.place;
            sum = sum + FieldElem(k, term.numerator, gn);
        }
        CHECK(sum == f);
    };

    FieldElem f1 = elem("(2*x+1)/(x^2+x)", k);
    auto pf1 = partial_fractions(f1, squarefree_decomposition(f1.den()));
    CHECK(pf1.poly_part.is_zero());
    REQUIRE(pf1.terms.size() == 1);  // one squarefree factor x(x+1), order 1
    recombine(f1, pf1);

    FieldElem f2 = elem("1/(x^2*(x+1))", k);
    auto pf2 = partial_fractions(f2, squarefree_decomposition(f2.den()));
    recombine(f2, pf2);

    FieldElem f3 = elem("x^3/(x^2-2)", k);
    auto pf3 = partial_fractions(f3, squarefree_decomposition(f3.den()));
    CHECK(pf3.poly_part == poly("x", k));
    REQUIRE(pf3.terms.size() == 1);
    CHECK(pf3.terms[0].numerator == poly("2*x", k));
    recombine(f3, pf3);

    SquarefreeDecomposition wrong = {{poly("x+2", k), 1}};
    CHECK_THROWS_AS(partial_fractions(f1, wrong), MismatchedDecomposition);
}

namespace {

// Independent trace oracle: trace of the multiplication-by-r matrix on
// k[x]/(g) in the power basis.
Scalar trace_by_matrix(const XPoly& g, const XPoly& r) {
    std::size_t n = static_cast<std::size_t>(g.degree());
    Scalar tr;
    XPoly basis = XPoly::x(0);
    for (std::size_t i = 0; i < n; ++i) {
        XPoly image = (basis * r) % g;
        tr = tr + image.coeff(i);
        basis = (basis * XPoly::x(1)) % g;
    }
    return tr;
}

}  // namespace

TEST_CASE("trace_mod examples and oracle") {
    TowerPtr k = tower_q();
    CHECK(trace_mod(poly("x^2-2", k), poly("x", k)) == Scalar());
    CHECK(trace_mod(poly("x^2-2", k), poly("2", k)) == Scalar(4));
    // Newton power sum p2 = e1^2 - 2 e2 = 0 - 2(-1) = 2
    CHECK(trace_mod(poly("x^3-x-1", k), poly("x^2", k)) == Scalar(2));

    TowerPtr kt_ = tower_t();
    Rng rng(19);
    for (int i = 0; i < 15; ++i) {
        XPoly g = random_monic_squarefree(rng, kt_, 4);
        XPoly r1 = random_xpoly(rng, kt_, static_cast<int>(g.degree()) - 1);
        XPoly r2 = random_xpoly(rng, kt_, static_cast<int>(g.degree()) - 1);
        Scalar c = random_scalar(rng, kt_);
        CHECK(trace_mod(g, r1) == trace_by_matrix(g, r1));
        // k-linearity
        CHECK(trace_mod(g, (r1 * XPoly(c) + r2) % g) ==
              c * trace_mod(g, r1) + trace_mod(g, r2));
    }
}

TEST_CASE("trace agrees with the sum over split conjugate roots") {
    // Split x^2 - 2 over Q(sqrt 2): trace of r mod g equals r(a) + r(-a).
    TowerPtr k = tower_sqrt2();
    Scalar a = k->alpha();
    Rng rng(23);
    for (int i = 0; i < 10; ++i) {
        XPoly r = random_xpoly(rng, k, 1);
        XPoly g({Scalar(-2L), Scalar(0L), Scalar(1L)});
        Scalar lhs = trace_mod(g, r);
        Scalar rhs = r.eval(a) + r.eval(-a);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("polar expansion at a finite place") {
    TowerPtr k = tower_q();
    FieldElem f = elem("1/(x^2*(x+1))", k);
    auto polar = polar_at(f, poly("x", k));
    REQUIRE(polar.size() == 2);
    CHECK(polar[0].first == 2);
    CHECK(polar[0].second == poly("1", k));
    CHECK(polar[1].first == 1);
    CHECK(polar[1].second == poly("-1", k));
    CHECK(polar_at(f, poly("x-5", k)).empty());

    // cluster place x(x+1) with uneven pole orders
    auto cluster = polar_at(f, poly("x^2+x", k));
    FieldElem rebuilt;
    for (const auto& [n, s] : cluster) {
        XPoly gn = XPoly::x(0);
        for (unsigned i = 0; i < n; ++i) gn = gn * poly("x^2+x", k);
        rebuilt = rebuilt + FieldElem(k, s, gn);
    }
    CHECK(rebuilt == f);
}
