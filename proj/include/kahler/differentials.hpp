#ifndef KAHLER_DIFFERENTIALS_HPP
#define KAHLER_DIFFERENTIALS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kahler/function_field.hpp"

namespace kahler {

/// Element of Omega^1_{K/Q} in the normal form a*dx + sum bi*dti (d(alpha)
/// is always eliminated through the minimal polynomial).
struct AbsoluteForm {
    TowerPtr tower;
    FieldElem dx_coeff;
    std::vector<FieldElem> dt_coeffs;

    AbsoluteForm() = default;
    explicit AbsoluteForm(TowerPtr t)
        : tower(std::move(t)),
          dt_coeffs(tower ? tower->num_trans() : 0) {}

    bool is_zero() const;
    AbsoluteForm operator-() const;
    AbsoluteForm operator+(const AbsoluteForm& o) const;
    AbsoluteForm operator-(const AbsoluteForm& o) const;
    bool operator==(const AbsoluteForm& o) const;
    bool operator!=(const AbsoluteForm& o) const { return !(*this == o); }

    std::string str() const;
};

AbsoluteForm operator*(const FieldElem& f, const AbsoluteForm& w);

/// Element of Omega^1_{K/k}: a*dx.
struct RelativeForm {
    FieldElem dx_coeff;

    RelativeForm() = default;
    explicit RelativeForm(FieldElem a) : dx_coeff(std::move(a)) {}

    bool is_zero() const { return dx_coeff.is_zero(); }
    RelativeForm operator-() const { return RelativeForm(-dx_coeff); }
    RelativeForm operator+(const RelativeForm& o) const {
        return RelativeForm(dx_coeff + o.dx_coeff);
    }
    RelativeForm operator-(const RelativeForm& o) const {
        return RelativeForm(dx_coeff - o.dx_coeff);
    }
    bool operator==(const RelativeForm& o) const {
        return dx_coeff == o.dx_coeff;
    }
    bool operator!=(const RelativeForm& o) const { return !(*this == o); }

    std::string str() const;
};

/// Element of Omega^1_{k/Q}: constant coefficients of dt1,...,dtm.
struct ConstantForm {
    TowerPtr tower;
    std::vector<Scalar> coeffs;
};

/// Closed point of P^1 over k: a monic squarefree polynomial, or infinity.
class Place {
public:
    static Place infinity() { return Place(); }
    static Place finite(XPoly g);

    bool is_infinity() const { return infinite_; }
    const XPoly& poly() const { return g_; }

    bool operator==(const Place& o) const;
    bool operator<(const Place& o) const;  // finite by (deg, coeffs), then infinity

    std::string str(const std::string& var = "x") const;

private:
    Place() : infinite_(true) {}
    bool infinite_ = false;
    XPoly g_;
};

/// Polar expansion entries (order n >= 1, digit).  At a finite place g the
/// digit is a polynomial of degree < deg g standing for digit/g^n; at
/// infinity the digit is constant and stands for digit * u^-n (du for the
/// dx component, with the dx = -du/u^2 substitution already applied).
using PolarList = std::vector<std::pair<unsigned, XPoly>>;

/// Class in H^1_x(Omega^1_{X/Q}) at one place.
struct PrincipalPartAt {
    Place place = Place::infinity();
    PolarList dx_polar;
    std::vector<PolarList> dt_polar;

    bool is_zero() const;
    bool operator==(const PrincipalPartAt& o) const;
};

/// Finitely supported family over the places; zero classes are pruned.
struct PrincipalParts {
    std::map<Place, PrincipalPartAt> parts;

    bool empty() const { return parts.empty(); }
    void insert(PrincipalPartAt p);  // drops zero classes
    bool operator==(const PrincipalParts& o) const { return parts == o.parts; }
    bool operator!=(const PrincipalParts& o) const { return !(*this == o); }
};

/// Universal derivation over Q; differentiates t and alpha as well as x.
AbsoluteForm d_abs(const FieldElem& f);
AbsoluteForm d_abs(const FieldElem& f, const TowerPtr& tower);

/// Derivation over the constant field k.
RelativeForm d_rel(const FieldElem& f);

/// R': drop the dt components, sending d_Q f to d_k f.
RelativeForm project_Rprime(const AbsoluteForm& w);

/// Polar expansion of the component f at infinity in the u = 1/x chart;
/// dx_component applies the dx = -du/u^2 Jacobian.
PolarList polar_at_infinity(const FieldElem& f, bool dx_component);

Scalar residue_at(const RelativeForm& w, const Place& p);
Scalar residue_at(const AbsoluteForm& w, const Place& p);

/// The map rho of the Cousin resolution: all polar data of w.
PrincipalParts principal_parts(const AbsoluteForm& w);

/// Residue of an H^1_x class: dt data is dropped, the dx polar fraction is
/// reconstructed and its residue at the place returned.
Scalar res_h1x(const PrincipalPartAt& c);

/// Decides eta = d_rel(h); returns the witness h when exact.
std::optional<FieldElem> is_exact(const RelativeForm& eta);

/// Equality in H^1 = relative forms modulo exact forms.
bool h1_class_equal(const RelativeForm& a, const RelativeForm& b);

}  // namespace kahler

#endif
