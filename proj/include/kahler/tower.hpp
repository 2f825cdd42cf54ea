#ifndef KAHLER_TOWER_HPP
#define KAHLER_TOWER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kahler/ratfun.hpp"
#include "kahler/upoly.hpp"

namespace kahler {

class Tower;
class Scalar;
using TowerPtr = std::shared_ptr<const Tower>;

/// The constant field k = Q(t1,...,tm)(alpha): an ordered list of
/// transcendental generators, at most one algebraic generator with a monic
/// separable minimal polynomial over Q(t1,...,tm), and the name of the
/// function-field variable x.
class Tower : public std::enable_shared_from_this<Tower> {
public:
    struct Algebraic {
        std::string name;
        UPoly<RatFun> minpoly;  // monic in the algebraic generator, deg >= 2
    };

    /// Validates names and the minimal polynomial (monic, separable).
    static TowerPtr create(std::vector<std::string> transcendentals,
                           std::optional<Algebraic> algebraic,
                           std::string variable = "x");

    std::size_t num_trans() const { return trans_.size(); }
    const std::vector<std::string>& trans_names() const { return trans_; }
    const std::string& var_name() const { return var_; }
    bool has_alg() const { return alg_.has_value(); }
    const Algebraic& alg() const { return *alg_; }
    /// Degree of k over Q(t1,...,tm); 1 when there is no algebraic generator.
    unsigned ext_degree() const {
        return alg_ ? static_cast<unsigned>(alg_->minpoly.degree()) : 1u;
    }

    Scalar alpha() const;
    /// d(alpha)/d(ti), from implicit differentiation of the minimal polynomial.
    const Scalar& dalpha_dt(std::size_t i) const;

    std::optional<std::size_t> trans_index(const std::string& name) const;

private:
    Tower() = default;
    std::vector<std::string> trans_;
    std::optional<Algebraic> alg_;
    std::string var_;
    std::vector<Scalar> dalpha_;  // one per transcendental (empty if no alg)
};

/// Element of k in canonical form: a polynomial in alpha of degree below
/// [k : Q(t)] with reduced Q(t)-fraction coefficients.  Plain rational
/// constants carry no tower pointer and mix with any tower.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n);
    Scalar(const mpq_class& q);
    Scalar(RatFun r);
    Scalar(TowerPtr tower, std::vector<RatFun> alpha_coeffs);

    const TowerPtr& tower() const { return tower_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const;  // lies in Q(t) (alpha-degree 0)
    const std::vector<RatFun>& coeffs() const { return coeffs_; }
    /// The Q(t)-part; scalar must have alpha-degree 0.
    const RatFun& rat_part() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inv() const;
    bool operator==(const Scalar& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Derivative with respect to ti, chaining through alpha.
    Scalar derivative_t(std::size_t i) const;

    static int compare(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    friend class Tower;
    void normalize();
    TowerPtr join(const Scalar& o) const;
    TowerPtr tower_;            // may be null for plain rationals
    std::vector<RatFun> coeffs_;  // ascending in alpha, trimmed
};

}  // namespace kahler

#endif
