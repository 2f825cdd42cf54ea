#ifndef KAHLER_RANDGEN_HPP
#define KAHLER_RANDGEN_HPP

#include <cstdint>
#include <random>

#include "kahler/cousin.hpp"

namespace kahler {

/// Seeded deterministic generator for the property suites.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    /// Uniform in [lo, hi], inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(unsigned percent) { return next() % 100 < percent; }

private:
    std::mt19937_64 eng_;
};

/// Small random constant of k: an integer, now and then divided by a small
/// integer, with t- and alpha-terms mixed in when the tower has them.
Scalar random_scalar(Rng& rng, const TowerPtr& tower);
Scalar random_nonzero_scalar(Rng& rng, const TowerPtr& tower);

XPoly random_xpoly(Rng& rng, const TowerPtr& tower, int max_deg,
                   bool monic = false);
XPoly random_monic_squarefree(Rng& rng, const TowerPtr& tower, int max_deg);

FieldElem random_elem(Rng& rng, const TowerPtr& tower, int num_deg, int den_deg);
FieldElem random_nonzero_elem(Rng& rng, const TowerPtr& tower, int num_deg,
                              int den_deg);

DualUnit random_unit(Rng& rng, const TowerPtr& tower, int deg);
DualSymbol random_symbol(Rng& rng, const TowerPtr& tower, int deg);

/// Random form of the shape h*d(g) / (f1^l1 ... fk^lk) with up to k_max
/// denominator factors and exponents at most l_max.
AbsoluteForm random_beta(Rng& rng, const TowerPtr& tower, int k_max, int l_max);

/// Random canonical principal-part family over a handful of pairwise
/// coprime places (possibly including infinity).
PrincipalParts random_family(Rng& rng, const TowerPtr& tower);

}  // namespace kahler

#endif
