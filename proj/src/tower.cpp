#include "kahler/tower.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "kahler/errors.hpp"

namespace kahler {

TowerPtr Tower::create(std::vector<std::string> transcendentals,
                       std::optional<Algebraic> algebraic, std::string variable) {
    std::set<std::string> seen;
    auto check_name = [&seen](const std::string& n) {
        if (n.empty()) throw Error("empty symbol name");
        if (!seen.insert(n).second) throw DuplicateSymbol(n);
    };
    for (const auto& t : transcendentals) check_name(t);
    if (algebraic) check_name(algebraic->name);
    check_name(variable);
    if (seen.count("eps")) throw DuplicateSymbol("eps");

    if (algebraic) {
        const auto& mu = algebraic->minpoly;
        if (mu.degree() < 2 || !mu.is_monic()) throw NonMonicMinimalPolynomial();
        for (const auto& c : mu.coeffs()) {
            if (std::max(c.num().num_vars(), c.den().num_vars()) >
                transcendentals.size())
                throw Error("minimal polynomial uses symbols beyond t1..tm");
        }
        if (!UPoly<RatFun>::gcd(mu, mu.derivative()).is_one())
            throw InseparableMinimalPolynomial();
    }

    auto tower = std::shared_ptr<Tower>(new Tower());
    tower->trans_ = std::move(transcendentals);
    tower->alg_ = std::move(algebraic);
    tower->var_ = std::move(variable);

    if (tower->alg_) {
        // mu'(alpha) is invertible by separability; implicit differentiation
        // gives d(alpha)/dti = -(dmu/dti)(alpha) / mu'(alpha).
        TowerPtr self = tower;
        Scalar a = self->alpha();
        const auto& mu = tower->alg_->minpoly;
        auto eval_at_alpha = [&](const UPoly<RatFun>& p) {
            Scalar r;
            for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
                r = r * a + Scalar(*it);
            return r;
        };
        Scalar mu_prime = eval_at_alpha(mu.derivative());
        for (std::size_t i = 0; i < tower->trans_.size(); ++i) {
            std::vector<RatFun> dc;
            for (const auto& c : mu.coeffs()) dc.push_back(c.derivative(i));
            Scalar mu_ti = eval_at_alpha(UPoly<RatFun>(std::move(dc)));
            tower->dalpha_.push_back(-mu_ti / mu_prime);
        }
    }
    return tower;
}

Scalar Tower::alpha() const {
    assert(alg_);
    return Scalar(shared_from_this(), {RatFun(0L), RatFun(1L)});
}

const Scalar& Tower::dalpha_dt(std::size_t i) const {
    assert(alg_ && i < dalpha_.size());
    return dalpha_[i];
}

std::optional<std::size_t> Tower::trans_index(const std::string& name) const {
    auto it = std::find(trans_.begin(), trans_.end(), name);
    if (it == trans_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - trans_.begin());
}

Scalar::Scalar(long n) {
    if (n != 0) coeffs_.push_back(RatFun(n));
}

Scalar::Scalar(const mpq_class& q) {
    RatFun r(q);
    if (!r.is_zero()) coeffs_.push_back(std::move(r));
}

Scalar::Scalar(RatFun r) {
    if (!r.is_zero()) coeffs_.push_back(std::move(r));
}

Scalar::Scalar(TowerPtr tower, std::vector<RatFun> alpha_coeffs)
    : tower_(std::move(tower)), coeffs_(std::move(alpha_coeffs)) {
    normalize();
}

void Scalar::normalize() {
    if (tower_ && tower_->has_alg() &&
        coeffs_.size() > tower_->ext_degree()) {
        UPoly<RatFun> reduced =
            UPoly<RatFun>(std::move(coeffs_)) % tower_->alg().minpoly;
        coeffs_ = reduced.coeffs();
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Scalar::is_rational() const { return coeffs_.size() <= 1; }

const RatFun& Scalar::rat_part() const {
    static const RatFun zero;
    assert(is_rational());
    return coeffs_.empty() ? zero : coeffs_[0];
}

TowerPtr Scalar::join(const Scalar& o) const {
    if (tower_ && o.tower_) {
        assert(tower_ == o.tower_ && "scalars from different towers");
        return tower_;
    }
    return tower_ ? tower_ : o.tower_;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r;
    r.tower_ = join(o);
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        r.coeffs_[i] = r.coeffs_[i] + o.coeffs_[i];
    r.normalize();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    UPoly<RatFun> prod = UPoly<RatFun>(coeffs_) * UPoly<RatFun>(o.coeffs_);
    Scalar r;
    r.tower_ = join(o);
    r.coeffs_ = prod.coeffs();
    r.normalize();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) {
        Scalar r = *this;
        r.coeffs_[0] = r.coeffs_[0].inv();
        return r;
    }
    assert(tower_ && tower_->has_alg());
    UPoly<RatFun> a(coeffs_);
    Scalar r;
    r.tower_ = tower_;
    r.coeffs_ = a.inv_mod(tower_->alg().minpoly).coeffs();
    r.normalize();
    return r;
}

Scalar Scalar::derivative_t(std::size_t i) const {
    Scalar r;
    r.tower_ = tower_;
    r.coeffs_.resize(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        r.coeffs_[j] = coeffs_[j].derivative(i);
    r.normalize();
    if (coeffs_.size() > 1) {
        // chain rule through alpha
        std::vector<RatFun> dpow(coeffs_.size() - 1);
        for (std::size_t j = 1; j < coeffs_.size(); ++j)
            dpow[j - 1] = coeffs_[j] * RatFun(static_cast<long>(j));
        Scalar chain(tower_, std::move(dpow));
        r = r + chain * tower_->dalpha_dt(i);
    }
    return r;
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
    if (a.coeffs_.size() != b.coeffs_.size())
        return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
    for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
        int c = RatFun::compare(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Scalar::str() const {
    if (coeffs_.empty()) return "0";
    std::vector<std::string> names = tower_ ? tower_->trans_names()
                                            : std::vector<std::string>{};
    // Untracked variables can appear on scalars that never met a tower.
    for (const RatFun& c : coeffs_) {
        std::size_t used = std::max(c.num().num_vars(), c.den().num_vars());
        while (names.size() < used)
            names.push_back("t" + std::to_string(names.size() + 1));
    }
    if (coeffs_.size() == 1) return coeffs_[0].str(names);
    const std::string& aname = tower_->alg().name;
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
        const RatFun& c = coeffs_[j];
        if (c.is_zero()) continue;
        std::string cs = c.str(names);
        bool neg = cs.size() > 0 && cs[0] == '-';
        if (!first) out << (neg ? " - " : " + ");
        else if (neg) out << "-";
        first = false;
        if (j == 0) {
            // Printed flat, so only the head sign is absorbed by the " - ".
            out << (neg ? cs.substr(1) : cs);
            continue;
        }
        // Parenthesized below, so the whole coefficient must be negated.
        if (neg) cs = (-c).str(names);
        bool composite = cs.find_first_of("+-") != std::string::npos ||
                         (cs.find('/') != std::string::npos);
        if (cs == "1") {
            // coefficient 1 omitted
        } else if (composite) {
            out << "(" << cs << ")*";
        } else {
            out << cs << "*";
        }
        out << aname;
        if (j > 1) out << "^" << j;
    }
    return out.str();
}

}  // namespace kahler
