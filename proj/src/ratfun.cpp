#include "kahler/ratfun.hpp"

#include <cassert>

#include "kahler/errors.hpp"

namespace kahler {

RatFun::RatFun(const mpq_class& q)
    : num_(mpz_class(q.get_num())), den_(mpz_class(q.get_den())) {}

RatFun::RatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly(1);
        return;
    }
    MPoly g = MPoly::gcd(num_, den_);
    num_ = *num_.divided_by(g);
    den_ = *den_.divided_by(g);
    if (den_.leading_sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inv(); }

RatFun RatFun::inv() const {
    if (is_zero()) throw DivisionByZero();
    return RatFun(den_, num_);
}

RatFun RatFun::derivative(std::size_t var) const {
    // (n/d)' = (n'd - nd')/d^2
    return RatFun(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                  den_ * den_);
}

int RatFun::compare(const RatFun& a, const RatFun& b) {
    int c = MPoly::compare(a.num_, b.num_);
    if (c != 0) return c;
    return MPoly::compare(a.den_, b.den_);
}

std::string RatFun::str(const std::vector<std::string>& names) const {
    if (den_ == MPoly(1)) return num_.str(names);
    std::string n = num_.str(names);
    if (num_.terms().size() > 1) n = "(" + n + ")";
    return n + "/(" + den_.str(names) + ")";
}

}  // namespace kahler
