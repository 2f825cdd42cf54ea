#ifndef KAHLER_SYMBOLS_HPP
#define KAHLER_SYMBOLS_HPP

#include <array>
#include <string>

#include "kahler/differentials.hpp"

namespace kahler {

/// Unit of K[eps], eps^2 = 0: z0 + eps*z1 with z0 != 0.
struct DualUnit {
    FieldElem z0, z1;

    DualUnit() : z0(1) {}
    DualUnit(FieldElem c, FieldElem e) : z0(std::move(c)), z1(std::move(e)) {}

    bool operator==(const DualUnit& o) const {
        return z0 == o.z0 && z1 == o.z1;
    }
    bool operator!=(const DualUnit& o) const { return !(*this == o); }

    std::string str() const;
};

/// Steinberg symbol {f0 + eps f1, g0 + eps g1} over the dual numbers.
struct DualSymbol {
    DualUnit left, right;

    DualSymbol() = default;
    DualSymbol(DualUnit l, DualUnit r)
        : left(std::move(l)), right(std::move(r)) {}

    bool operator==(const DualSymbol& o) const {
        return left == o.left && right == o.right;
    }
    bool operator!=(const DualSymbol& o) const { return !(*this == o); }

    std::string str() const;
};

/// tan: z0 + z1 eps -> z1/z0.  Throws NonUnit when z0 = 0.
FieldElem tan_unit(const DualUnit& z);

/// Group law of K[eps]^*.
DualUnit dual_mul(const DualUnit& z, const DualUnit& w);

/// (f1/f0) d_Q(g0)/g0 - (g1/g0) d_Q(f0)/f0.
AbsoluteForm tan_symbol(const DualSymbol& s);

/// The d_k version; equals project_Rprime(tan_symbol(s)).
RelativeForm tan_symbol_rel(const DualSymbol& s);

/// {f0,g0} {f0, 1+eps g1/g0} {1+eps f1/f0, g0} {1+eps f1/f0, 1+eps g1/g0},
/// in this order; slotwise products reproduce the symbol.
std::array<DualSymbol, 4> decompose_symbol(const DualSymbol& s);

}  // namespace kahler

#endif
