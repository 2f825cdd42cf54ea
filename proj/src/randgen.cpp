#include "kahler/randgen.hpp"

#include <algorithm>

namespace kahler {

Scalar random_scalar(Rng& rng, const TowerPtr& tower) {
    Scalar s(rng.range(-5, 5));
    std::size_t m = tower ? tower->num_trans() : 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (rng.chance(35)) {
            unsigned pow = rng.chance(25) ? 2 : 1;
            s = s + Scalar(tower, {RatFun(MPoly(rng.range(-3, 3)) *
                                          MPoly::variable(i, pow))});
        }
    }
    if (tower && tower->has_alg() && rng.chance(30))
        s = s + Scalar(rng.range(-2, 2)) * tower->alpha();
    if (rng.chance(20)) s = s / Scalar(rng.range(2, 4));
    return s;
}

Scalar random_nonzero_scalar(Rng& rng, const TowerPtr& tower) {
    for (int i = 0; i < 64; ++i) {
        Scalar s = random_scalar(rng, tower);
        if (!s.is_zero()) return s;
    }
    return Scalar(1L);
}

XPoly random_xpoly(Rng& rng, const TowerPtr& tower, int max_deg, bool monic) {
    int deg = static_cast<int>(rng.range(0, max_deg));
    std::vector<Scalar> c(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) c[i] = random_scalar(rng, tower);
    if (monic)
        c[deg] = Scalar(1L);
    else if (c[deg].is_zero())
        c[deg] = Scalar(rng.range(1, 3));
    return XPoly(std::move(c));
}

XPoly random_monic_squarefree(Rng& rng, const TowerPtr& tower, int max_deg) {
    for (int tries = 0; tries < 64; ++tries) {
        XPoly p = random_xpoly(rng, tower, std::max(1, max_deg), true);
        if (p.degree() < 1) continue;
        if (XPoly::gcd(p, p.derivative()).is_one()) return p;
    }
    // x + c is always squarefree
    return XPoly::x(1) + XPoly(random_scalar(rng, tower));
}

FieldElem random_elem(Rng& rng, const TowerPtr& tower, int num_deg, int den_deg) {
    XPoly num = random_xpoly(rng, tower, num_deg);
    if (rng.chance(15)) num = XPoly();
    XPoly den = random_xpoly(rng, tower, den_deg, true);
    return FieldElem(tower, num, den);
}

FieldElem random_nonzero_elem(Rng& rng, const TowerPtr& tower, int num_deg,
                              int den_deg) {
    for (int i = 0; i < 64; ++i) {
        FieldElem f = random_elem(rng, tower, num_deg, den_deg);
        if (!f.is_zero()) return f;
    }
    return FieldElem(1);
}

DualUnit random_unit(Rng& rng, const TowerPtr& tower, int deg) {
    return DualUnit(random_nonzero_elem(rng, tower, deg, deg),
                    random_elem(rng, tower, deg, deg));
}

DualSymbol random_symbol(Rng& rng, const TowerPtr& tower, int deg) {
    return DualSymbol(random_unit(rng, tower, deg),
                      random_unit(rng, tower, deg));
}

AbsoluteForm random_beta(Rng& rng, const TowerPtr& tower, int k_max, int l_max) {
    FieldElem h(tower, random_xpoly(rng, tower, 3));
    FieldElem g(tower, random_xpoly(rng, tower, 3));
    XPoly den = XPoly::x(0);
    int k = static_cast<int>(rng.range(0, k_max));
    for (int i = 0; i < k; ++i) {
        XPoly f = random_monic_squarefree(rng, tower, 2);
        int l = static_cast<int>(rng.range(1, l_max));
        for (int j = 0; j < l; ++j) den = den * f;
    }
    return (h / FieldElem(tower, den)) * d_abs(g, tower);
}

PrincipalParts random_family(Rng& rng, const TowerPtr& tower) {
    std::size_t m = tower ? tower->num_trans() : 0;
    // Draw a family from the image of rho (always realizable), then half the
    // time shift the order-1 coefficient at infinity, which breaks the
    // residue-theorem constraint and makes it unrealizable.
    AbsoluteForm w(tower);
    w.dt_coeffs.resize(m);
    w.dx_coeff = random_elem(rng, tower, 4, 4);
    for (std::size_t i = 0; i < m; ++i)
        if (rng.chance(40)) w.dt_coeffs[i] = random_elem(rng, tower, 3, 2);
    PrincipalParts family = principal_parts(w);
    if (rng.chance(50)) {
        Scalar shift = random_nonzero_scalar(rng, tower);
        PrincipalPartAt inf;
        auto it = family.parts.find(Place::infinity());
        if (it != family.parts.end()) {
            inf = it->second;
            family.parts.erase(it);
        } else {
            inf.place = Place::infinity();
            inf.dt_polar.resize(m);
        }
        bool bumped = false;
        for (auto& [n, c] : inf.dx_polar) {
            if (n == 1) {
                XPoly next = c + XPoly(shift);
                c = next;
                bumped = true;
            }
        }
        if (!bumped) inf.dx_polar.emplace_back(1u, XPoly(shift));
        std::erase_if(inf.dx_polar,
                      [](const auto& e) { return e.second.is_zero(); });
        family.insert(std::move(inf));
    }
    return family;
}

}  // namespace kahler
