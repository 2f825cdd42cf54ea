#ifndef KAHLER_COUSIN_HPP
#define KAHLER_COUSIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "kahler/differentials.hpp"
#include "kahler/symbols.hpp"

namespace kahler {

/// k-basis of H^0(Omega^1_{X/Q}) on P^1: the forms dt1,...,dtm.
struct GlobalSectionBasis {
    TowerPtr tower;
    std::vector<AbsoluteForm> forms;

    std::size_t dimension() const { return forms.size(); }
};

/// Outcome of trying to realize a principal-part family as rho of a form.
struct ObstructionReport {
    bool realizable = false;
    Scalar total_residue;
    std::optional<AbsoluteForm> witness;
};

/// One compared pair of residues in a commutative-diagram check.
struct DiagramEntry {
    std::string label;  // a place, or a named identity for symbol checks
    Scalar lhs, rhs;
    bool equal = false;
};

struct DiagramReport {
    std::vector<DiagramEntry> entries;
    bool verdict = true;
};

/// Kernel of rho: the forms with no principal parts anywhere.
GlobalSectionBasis global_sections_basis(const TowerPtr& tower);

/// Kernel of R' among global sections; on P^1 this coincides with the
/// global sections themselves and has k-dimension m.
GlobalSectionBasis kernel_Rprime_basis(const TowerPtr& tower);

/// True iff w is a global section killed by R', i.e. a k-combination of
/// dt1,...,dtm (verified by solving for the coefficients).
bool kernel_membership(const AbsoluteForm& w);

/// Cousin realizability: the family is rho of some form iff the total
/// residue of its dx data vanishes; on success the witness reproduces the
/// family exactly.
ObstructionReport realize_principal_parts(const PrincipalParts& family,
                                          const TowerPtr& tower);

/// Commutativity of the residue square: per place, Res of the rho-image
/// against the residue of R'(beta).
DiagramReport verify_square_res(const AbsoluteForm& beta);

/// Commutativity of the symbol square: R'(tan s) = tan_rel s, and tan
/// additivity over the four-factor decomposition.
DiagramReport verify_square_tan(const DualSymbol& s);

}  // namespace kahler

#endif
