#include "kahler/cousin.hpp"

#include <cassert>
#include <map>

#include "kahler/errors.hpp"

namespace kahler {

GlobalSectionBasis global_sections_basis(const TowerPtr& tower) {
    GlobalSectionBasis basis;
    basis.tower = tower;
    std::size_t m = tower ? tower->num_trans() : 0;
    for (std::size_t i = 0; i < m; ++i) {
        AbsoluteForm w(tower);
        w.dt_coeffs[i] = FieldElem(1);
        assert(principal_parts(w).empty());
        basis.forms.push_back(std::move(w));
    }
    return basis;
}

GlobalSectionBasis kernel_Rprime_basis(const TowerPtr& tower) {
    GlobalSectionBasis basis;
    basis.tower = tower;
    for (auto& w : global_sections_basis(tower).forms)
        if (project_Rprime(w).is_zero()) basis.forms.push_back(std::move(w));
    return basis;
}

bool kernel_membership(const AbsoluteForm& w) {
    if (!project_Rprime(w).is_zero()) return false;
    if (!principal_parts(w).empty()) return false;
    // A regular form killed by R' must be a k-combination of dt1..dtm; the
    // combination coefficients are read off directly.
    for (const auto& c : w.dt_coeffs)
        if (!c.is_zero() && !c.is_constant()) return false;
    return true;
}

ObstructionReport realize_principal_parts(const PrincipalParts& family,
                                          const TowerPtr& tower) {
    ObstructionReport report;
    for (const auto& [place, part] : family.parts)
        report.total_residue = report.total_residue + res_h1x(part);
    if (!report.total_residue.is_zero()) {
        report.realizable = false;
        return report;
    }
    report.realizable = true;

    std::size_t m = tower ? tower->num_trans() : 0;
    AbsoluteForm w(tower);
    w.dt_coeffs.resize(m);
    auto add_fraction = [&](FieldElem& slot, const XPoly& g, unsigned n,
                            const XPoly& r) {
        XPoly gn = XPoly::x(0);
        for (unsigned i = 0; i < n; ++i) gn = gn * g;
        slot = slot + FieldElem(tower, r, gn);
    };
    for (const auto& [place, part] : family.parts) {
        if (place.is_infinity()) continue;
        for (const auto& [n, r] : part.dx_polar)
            add_fraction(w.dx_coeff, place.poly(), n, r);
        for (std::size_t i = 0; i < part.dt_polar.size() && i < m; ++i)
            for (const auto& [n, r] : part.dt_polar[i])
                add_fraction(w.dt_coeffs[i], place.poly(), n, r);
    }

    // Adjust the infinity chart with polynomial terms; the order-1 dx
    // coefficient is fixed by the residue theorem and needs no adjustment.
    PrincipalPartAt target;
    target.place = Place::infinity();
    auto inf_it = family.parts.find(Place::infinity());
    if (inf_it != family.parts.end()) target = inf_it->second;
    target.dt_polar.resize(m);

    auto polar_delta = [](const PolarList& want, const PolarList& have) {
        std::map<unsigned, Scalar> delta;
        for (const auto& [n, c] : want) delta[n] = delta[n] + c.coeff(0);
        for (const auto& [n, c] : have) delta[n] = delta[n] - c.coeff(0);
        return delta;
    };
    for (const auto& [n, c] :
         polar_delta(target.dx_polar, polar_at_infinity(w.dx_coeff, true))) {
        if (c.is_zero()) continue;
        assert(n >= 2 && "order-1 mismatch contradicts the residue theorem");
        // x^(n-2) dx expands to -u^-n du
        w.dx_coeff = w.dx_coeff - FieldElem(tower, XPoly(c) * XPoly::x(n - 2));
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (const auto& [n, c] : polar_delta(
                 target.dt_polar[i], polar_at_infinity(w.dt_coeffs[i], false))) {
            if (c.is_zero()) continue;
            w.dt_coeffs[i] = w.dt_coeffs[i] + FieldElem(tower, XPoly(c) * XPoly::x(n));
        }
    }
    report.witness = std::move(w);
    return report;
}

DiagramReport verify_square_res(const AbsoluteForm& beta) {
    DiagramReport report;
    RelativeForm image = project_Rprime(beta);
    std::string var = beta.tower ? beta.tower->var_name() : "x";
    for (const auto& [place, part] : principal_parts(beta).parts) {
        DiagramEntry e;
        e.label = place.str(var);
        e.lhs = res_h1x(part);
        e.rhs = residue_at(image, place);
        e.equal = (e.lhs == e.rhs);
        report.verdict = report.verdict && e.equal;
        report.entries.push_back(std::move(e));
    }
    return report;
}

DiagramReport verify_square_tan(const DualSymbol& s) {
    DiagramReport report;
    {
        DiagramEntry e;
        e.label = "rprime-compatibility";
        e.equal = (project_Rprime(tan_symbol(s)) == tan_symbol_rel(s));
        report.verdict = report.verdict && e.equal;
        report.entries.push_back(std::move(e));
    }
    {
        DiagramEntry e;
        e.label = "decomposition-additivity";
        auto factors = decompose_symbol(s);
        AbsoluteForm sum(s.left.z0.tower() ? s.left.z0.tower()
                                           : s.right.z0.tower());
        for (const auto& f : factors) sum = sum + tan_symbol(f);
        bool additive = (sum == tan_symbol(s));
        bool slots = dual_mul(factors[0].left, factors[3].left) == s.left &&
                     dual_mul(factors[0].right, factors[3].right) == s.right;
        e.equal = additive && slots;
        report.verdict = report.verdict && e.equal;
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace kahler
