#include "kahler/symbols.hpp"

#include "kahler/errors.hpp"

namespace kahler {

std::string DualUnit::str() const {
    if (z1.is_zero()) return z0.str();
    return z0.str() + " + eps*(" + z1.str() + ")";
}

std::string DualSymbol::str() const {
    return "{" + left.str() + ", " + right.str() + "}";
}

FieldElem tan_unit(const DualUnit& z) {
    if (z.z0.is_zero()) throw NonUnit();
    return z.z1 / z.z0;
}

DualUnit dual_mul(const DualUnit& z, const DualUnit& w) {
    return DualUnit(z.z0 * w.z0, z.z0 * w.z1 + z.z1 * w.z0);
}

AbsoluteForm tan_symbol(const DualSymbol& s) {
    if (s.left.z0.is_zero() || s.right.z0.is_zero()) throw NonUnit();
    const FieldElem& f0 = s.left.z0;
    const FieldElem& f1 = s.left.z1;
    const FieldElem& g0 = s.right.z0;
    const FieldElem& g1 = s.right.z1;
    AbsoluteForm dlog_g = (FieldElem(1) / g0) * d_abs(g0);
    AbsoluteForm dlog_f = (FieldElem(1) / f0) * d_abs(f0);
    return (f1 / f0) * dlog_g - (g1 / g0) * dlog_f;
}

RelativeForm tan_symbol_rel(const DualSymbol& s) {
    if (s.left.z0.is_zero() || s.right.z0.is_zero()) throw NonUnit();
    const FieldElem& f0 = s.left.z0;
    const FieldElem& f1 = s.left.z1;
    const FieldElem& g0 = s.right.z0;
    const FieldElem& g1 = s.right.z1;
    return RelativeForm((f1 / f0) * (d_rel(g0).dx_coeff / g0) -
                        (g1 / g0) * (d_rel(f0).dx_coeff / f0));
}

std::array<DualSymbol, 4> decompose_symbol(const DualSymbol& s) {
    if (s.left.z0.is_zero() || s.right.z0.is_zero()) throw NonUnit();
    const FieldElem& f0 = s.left.z0;
    const FieldElem& g0 = s.right.z0;
    FieldElem fr = s.left.z1 / f0;
    FieldElem gr = s.right.z1 / g0;
    DualUnit base_l(f0, FieldElem());
    DualUnit base_r(g0, FieldElem());
    DualUnit unit_l(FieldElem(1), fr);
    DualUnit unit_r(FieldElem(1), gr);
    return {DualSymbol(base_l, base_r), DualSymbol(base_l, unit_r),
            DualSymbol(unit_l, base_r), DualSymbol(unit_l, unit_r)};
}

}  // namespace kahler
