#ifndef KAHLER_RATFUN_HPP
#define KAHLER_RATFUN_HPP

#include <string>
#include <vector>

#include "kahler/mpoly.hpp"

namespace kahler {

/// Element of Q(t1,...,tm): a reduced fraction of integer polynomials with a
/// positive lex-leading denominator.
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(long n) : num_(n), den_(1) {}
    RatFun(const mpz_class& n) : num_(n), den_(1) {}
    RatFun(const mpq_class& q);
    RatFun(MPoly num, MPoly den);
    explicit RatFun(MPoly num) : num_(std::move(num)), den_(1) {}

    static RatFun variable(std::size_t var) {
        return RatFun(MPoly::variable(var));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == MPoly(1) && den_ == MPoly(1); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun inv() const;
    bool operator==(const RatFun& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun derivative(std::size_t var) const;

    static int compare(const RatFun& a, const RatFun& b);

    std::string str(const std::vector<std::string>& names) const;

private:
    void normalize();
    MPoly num_, den_;
};

}  // namespace kahler

#endif
