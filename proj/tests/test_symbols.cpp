#include "doctest.h"
#include "test_util.hpp"

using namespace kt;

TEST_CASE("tan_unit") {
    TowerPtr k = tower_q();
    CHECK(tan_unit(DualUnit(elem("3", k), elem("5", k))) == elem("5/3", k));
    CHECK(tan_unit(DualUnit(FieldElem(1), FieldElem())) == FieldElem());
    CHECK(tan_unit(DualUnit(elem("x", k), FieldElem(1))) == elem("1/x", k));
    CHECK_THROWS_AS(tan_unit(DualUnit(FieldElem(), FieldElem(1))), NonUnit);
}

TEST_CASE("dual_mul") {
    TowerPtr k = tower_q();
    FieldElem a = elem("x+1", k);
    FieldElem b = elem("x-1", k);
    CHECK(dual_mul(DualUnit(FieldElem(1), a), DualUnit(FieldElem(1), b)) ==
          DualUnit(FieldElem(1), a + b));
    CHECK(dual_mul(DualUnit(elem("x", k), FieldElem(1)),
                   DualUnit(elem("x", k), FieldElem(-1))) ==
          DualUnit(elem("x^2", k), FieldElem()));
    CHECK(dual_mul(DualUnit(FieldElem(2), FieldElem(1)),
                   DualUnit(FieldElem(3), FieldElem(1))) ==
          DualUnit(FieldElem(6), FieldElem(5)));
}

TEST_CASE("tan_unit is a homomorphism") {
    TowerPtr k = tower_t();
    Rng rng(47);
    for (int i = 0; i < 25; ++i) {
        DualUnit z(random_nonzero_elem(rng, k, 3, 3), random_elem(rng, k, 3, 3));
        DualUnit w(random_nonzero_elem(rng, k, 3, 3), random_elem(rng, k, 3, 3));
        CHECK(tan_unit(dual_mul(z, w)) == tan_unit(z) + tan_unit(w));
    }
}

TEST_CASE("tan_symbol examples") {
    TowerPtr k = tower_q();
    AbsoluteForm w = tan_symbol(symbol("{x + eps, x}", k));
    CHECK(w.dx_coeff == elem("1/x^2", k));
    for (const FieldElem& c : w.dt_coeffs) CHECK(c.is_zero());

    CHECK(tan_symbol(symbol("{x+2, x-1}", k)).is_zero());

    TowerPtr kt_ = tower_t();
    DualSymbol s = symbol("{1 + eps*t, x^2-t}", kt_);
    CHECK(tan_symbol(s) == (elem("t", kt_) * elem("x^2-t", kt_).inv()) *
                               d_abs(elem("x^2-t", kt_)));

    CHECK_THROWS_AS(tan_symbol(DualSymbol(DualUnit(FieldElem(), FieldElem(1)),
                                          DualUnit())),
                    NonUnit);
}

namespace {

kahler::AbsoluteForm scale(const kahler::FieldElem& c,
                           const kahler::AbsoluteForm& w) {
    return c * w;
}

}  // namespace

TEST_CASE("tan_symbol_rel examples") {
    TowerPtr k = tower_t();
    CHECK(tan_symbol_rel(symbol("{1 + eps*t, x}", k)) ==
          RelativeForm(elem("t/x", k)));

    // {1 + eps*x, t}: relative tangent dies, absolute one survives
    DualSymbol s = symbol("{1 + eps*x, t}", k);
    CHECK(tan_symbol_rel(s).is_zero());
    AbsoluteForm w = tan_symbol(s);
    CHECK_FALSE(w.is_zero());
    CHECK(w.dx_coeff.is_zero());
    CHECK(w.dt_coeffs[0] == elem("x/t", k));

    CHECK(tan_symbol_rel(symbol("{x+1, x-3}", k)).is_zero());
}

TEST_CASE("decompose_symbol examples") {
    TowerPtr k = tower_q();
    DualSymbol s = symbol("{x + eps, x}", k);
    auto f = decompose_symbol(s);
    CHECK(f[0] == symbol("{x, x}", k));
    CHECK(f[1] == DualSymbol(DualUnit(elem("x", k), FieldElem()), DualUnit()));
    CHECK(f[2] == DualSymbol(DualUnit(FieldElem(1), elem("1/x", k)),
                             DualUnit(elem("x", k), FieldElem())));
    CHECK(f[3] == DualSymbol(DualUnit(FieldElem(1), elem("1/x", k)),
                             DualUnit()));

    // no eps parts: the last three factors are trivial in eps
    auto g = decompose_symbol(symbol("{x+1, x+2}", k));
    CHECK(g[0] == symbol("{x+1, x+2}", k));
    CHECK(g[1].right == DualUnit());
    CHECK(g[2].left == DualUnit());
    CHECK(g[3] == DualSymbol(DualUnit(), DualUnit()));

    // pure-eps symbol: every factor has zero tangent
    auto h = decompose_symbol(symbol("{1 + eps*(x+1), 1 + eps*(x-1)}", k));
    for (const auto& fac : h) CHECK(tan_symbol(fac).is_zero());
}

TEST_CASE("decomposition multiplies back and tan is additive") {
    TowerPtr k = tower_t();
    Rng rng(53);
    for (int i = 0; i < 25; ++i) {
        DualSymbol s = random_symbol(rng, k, 3);
        auto f = decompose_symbol(s);
        CHECK(dual_mul(f[0].left, f[3].left) == s.left);
        CHECK(dual_mul(f[0].right, f[3].right) == s.right);
        AbsoluteForm sum = tan_symbol(f[0]);
        for (int j = 1; j < 4; ++j) sum = sum + tan_symbol(f[j]);
        CHECK(sum == tan_symbol(s));
    }
}

TEST_CASE("steinberg vanishing at the tangent level") {
    TowerPtr k = tower_t();
    Rng rng(59);
    int done = 0;
    while (done < 30) {
        FieldElem f = random_elem(rng, k, 4, 4);
        if (f.is_zero() || f == FieldElem(1)) continue;
        FieldElem f1 = random_elem(rng, k, 4, 4);
        DualSymbol s(DualUnit(f, f1), DualUnit(FieldElem(1) - f, -f1));
        CHECK(tan_symbol(s).is_zero());
        ++done;
    }
}

TEST_CASE("antisymmetry and bimultiplicativity") {
    TowerPtr k = tower_t();
    Rng rng(61);
    for (int i = 0; i < 20; ++i) {
        DualSymbol s = random_symbol(rng, k, 3);
        CHECK(tan_symbol(DualSymbol(s.right, s.left)) == -tan_symbol(s));

        DualUnit w1(random_nonzero_elem(rng, k, 2, 2),
                    random_elem(rng, k, 2, 2));
        DualUnit w2(random_nonzero_elem(rng, k, 2, 2),
                    random_elem(rng, k, 2, 2));
        CHECK(tan_symbol(DualSymbol(s.left, dual_mul(w1, w2))) ==
              tan_symbol(DualSymbol(s.left, w1)) +
                  tan_symbol(DualSymbol(s.left, w2)));
        CHECK(tan_symbol(DualSymbol(dual_mul(w1, w2), s.right)) ==
              tan_symbol(DualSymbol(w1, s.right)) +
                  tan_symbol(DualSymbol(w2, s.right)));
    }
}

TEST_CASE("relative tangent is the projection of the absolute one") {
    TowerPtr k = tower_sqrt_t();
    Rng rng(67);
    for (int i = 0; i < 12; ++i) {
        DualSymbol s = random_symbol(rng, k, 2);
        CHECK(tan_symbol_rel(s) == project_Rprime(tan_symbol(s)));
    }
}
