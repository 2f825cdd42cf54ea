#ifndef KAHLER_FUNCTION_FIELD_HPP
#define KAHLER_FUNCTION_FIELD_HPP

#include <string>
#include <utility>
#include <vector>

#include "kahler/tower.hpp"
#include "kahler/upoly.hpp"

namespace kahler {

using XPoly = UPoly<Scalar>;

/// Specialized to clear denominators and run the integer primitive PRS when
/// no algebraic generator is involved; monic Euclid over k(t) blows up.
template <>
UPoly<Scalar> UPoly<Scalar>::gcd(UPoly<Scalar> a, UPoly<Scalar> b);

/// Specialized to solve the modular-inverse linear system with fraction-free
/// elimination over Z[t1..tm]; the extended Euclid over k(t) suffers the same
/// coefficient swell as the gcd.
template <>
UPoly<Scalar> UPoly<Scalar>::inv_mod(const UPoly<Scalar>& m) const;

/// b * a^-1 mod m by one fraction-free linear solve; cheaper than forming the
/// inverse (whose coefficients are large) and multiplying.
XPoly solve_mod(const XPoly& a, const XPoly& b, const XPoly& m);

/// Element of K = k(x) as a reduced fraction with monic denominator; zero is
/// 0/1.
class FieldElem {
public:
    FieldElem() : den_(XPoly::x(0)) {}
    FieldElem(long n) : num_(XPoly(Scalar(n))), den_(XPoly::x(0)) {}
    FieldElem(Scalar s)
        : tower_(s.tower()), num_(XPoly(std::move(s))), den_(XPoly::x(0)) {}
    FieldElem(TowerPtr tower, XPoly num, XPoly den);
    FieldElem(TowerPtr tower, XPoly num)
        : FieldElem(std::move(tower), std::move(num), XPoly::x(0)) {}

    const XPoly& num() const { return num_; }
    const XPoly& den() const { return den_; }
    const TowerPtr& tower() const { return tower_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// Constant of k (numerator degree <= 0, denominator 1).
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
    Scalar constant_value() const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem inv() const;
    bool operator==(const FieldElem& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    /// Partial derivative in x.
    FieldElem derivative_x() const;
    /// Partial derivative in ti (coefficient-wise, chaining through alpha).
    FieldElem derivative_t(std::size_t i) const;

    static int compare(const FieldElem& a, const FieldElem& b);

    std::string str() const;

private:
    TowerPtr join(const FieldElem& o) const;
    static FieldElem make_reduced(TowerPtr tower, XPoly num, XPoly den);
    FieldElem add_sub(const FieldElem& o, bool subtract) const;
    TowerPtr tower_;
    XPoly num_, den_;
};

FieldElem operator*(const Scalar& s, const FieldElem& f);

std::string xpoly_str(const XPoly& p, const std::string& var);

/// Total order on polynomials (degree, then coefficients from the top).
int xpoly_compare(const XPoly& a, const XPoly& b);

/// Pairwise-coprime monic squarefree parts with multiplicities.
using SquarefreeDecomposition = std::vector<std::pair<XPoly, unsigned>>;

struct PartialFractionTerm {
    XPoly place;       // monic squarefree g
    unsigned order;    // n >= 1
    XPoly numerator;   // deg < n*deg g
};

struct PartialFractions {
    XPoly poly_part;
    std::vector<PartialFractionTerm> terms;
};

/// f = poly part + sum of r/g^n over the given decomposition of f's
/// denominator.  Throws MismatchedDecomposition when the decomposition does
/// not multiply back to the denominator.
PartialFractions partial_fractions(const FieldElem& f,
                                   const SquarefreeDecomposition& decomp);

struct HermiteResult {
    FieldElem integrated;  // b
    XPoly simple_num;      // c, deg c < deg d
    XPoly simple_den;      // d, monic squarefree
    XPoly poly_part;       // p
};

/// f = (d/dx)b + c/d + p, exactly.
HermiteResult hermite_reduce(const FieldElem& f);

/// Trace of multiplication by r on k[x]/(g); g monic squarefree, deg r < deg g.
Scalar trace_mod(const XPoly& g, const XPoly& r);

/// Polar expansion of f at the monic squarefree g: the list of pairs
/// (order n, digit s with deg s < deg g) such that the polar part of f along
/// g is the sum of s/g^n.  Canonical: digits nonzero, orders descending.
std::vector<std::pair<unsigned, XPoly>> polar_at(const FieldElem& f,
                                                 const XPoly& g);

}  // namespace kahler

#endif
