#ifndef KAHLER_UPOLY_HPP
#define KAHLER_UPOLY_HPP

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "kahler/errors.hpp"

namespace kahler {

/// Dense univariate polynomial over a field F.  F must be default
/// constructible to zero, constructible from long, and support the usual
/// field operators plus is_zero().
template <class F>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(F c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit UPoly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UPoly x(unsigned power = 1) {
        std::vector<F> c(power + 1);
        c[power] = F(1);
        return UPoly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const F& lc() const { assert(!coeffs_.empty()); return coeffs_.back(); }
    const std::vector<F>& coeffs() const { return coeffs_; }
    F coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : F();
    }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_[0] == F(1);
    }
    bool is_monic() const { return !coeffs_.empty() && lc() == F(1); }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    UPoly operator+(const UPoly& o) const {
        std::vector<F> c(std::max(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] + o.coeffs_[i];
        return UPoly(std::move(c));
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }
    UPoly operator*(const UPoly& o) const {
        if (is_zero() || o.is_zero()) return UPoly();
        std::vector<F> c(coeffs_.size() + o.coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
        return UPoly(std::move(c));
    }
    UPoly operator*(const F& s) const {
        UPoly r = *this;
        for (auto& c : r.coeffs_) c = c * s;
        r.trim();
        return r;
    }
    bool operator==(const UPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UPoly, UPoly> divrem(const UPoly& d) const {
        if (d.is_zero()) throw DivisionByZero();
        UPoly rem = *this;
        std::vector<F> quot;
        if (rem.degree() >= d.degree())
            quot.resize(rem.degree() - d.degree() + 1);
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            std::size_t shift = rem.degree() - d.degree();
            F q = rem.lc() / d.lc();
            quot[shift] = q;
            for (std::size_t i = 0; i < d.coeffs_.size(); ++i)
                rem.coeffs_[i + shift] = rem.coeffs_[i + shift] - q * d.coeffs_[i];
            rem.trim();
        }
        return {UPoly(std::move(quot)), rem};
    }
    UPoly operator/(const UPoly& d) const { return divrem(d).first; }
    UPoly operator%(const UPoly& d) const { return divrem(d).second; }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * (F(1) / lc());
    }

    UPoly derivative() const {
        if (coeffs_.size() <= 1) return UPoly();
        std::vector<F> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            c[i - 1] = coeffs_[i] * F(static_cast<long>(i));
        return UPoly(std::move(c));
    }

    /// Antiderivative with zero constant term (characteristic 0).
    UPoly antiderivative() const {
        if (is_zero()) return UPoly();
        std::vector<F> c(coeffs_.size() + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            c[i + 1] = coeffs_[i] / F(static_cast<long>(i + 1));
        return UPoly(std::move(c));
    }

    F eval(const F& v) const {
        F r;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            r = r * v + *it;
        return r;
    }

    template <class G, class Map>
    auto map_eval(const G& v, Map&& map) const {
        G r;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            r = r * v + map(*it);
        return r;
    }

    /// x^deg * p(1/x).
    UPoly reversed() const {
        std::vector<F> c(coeffs_.rbegin(), coeffs_.rend());
        return UPoly(std::move(c));
    }

    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// (g, s, t) with s*a + t*b = g, g monic (or zero).
    static std::tuple<UPoly, UPoly, UPoly> ext_gcd(const UPoly& a, const UPoly& b) {
        UPoly r0 = a, r1 = b;
        UPoly s0(F(1)), s1;
        UPoly t0, t1(F(1));
        while (!r1.is_zero()) {
            auto [q, r2] = r0.divrem(r1);
            UPoly s2 = s0 - q * s1;
            UPoly t2 = t0 - q * t1;
            r0 = std::move(r1); r1 = std::move(r2);
            s0 = std::move(s1); s1 = std::move(s2);
            t0 = std::move(t1); t1 = std::move(t2);
        }
        if (r0.is_zero()) return {r0, s0, t0};
        F u = F(1) / r0.lc();
        return {r0 * u, s0 * u, t0 * u};
    }

    /// Inverse of *this modulo m; gcd(*this, m) must be 1.
    UPoly inv_mod(const UPoly& m) const {
        auto [g, s, t] = ext_gcd(*this % m, m);
        if (!g.is_one()) throw DivisionByZero();
        return s % m;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<F> coeffs_;
};

template <class F>
UPoly<F> operator*(const F& s, const UPoly<F>& p) { return p * s; }

/// Yun squarefree decomposition of a nonzero polynomial: pairwise coprime
/// monic squarefree parts with multiplicities whose product reconstructs the
/// input up to its leading coefficient.
template <class F>
std::vector<std::pair<UPoly<F>, unsigned>> squarefree_decomposition(const UPoly<F>& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<std::pair<UPoly<F>, unsigned>> out;
    UPoly<F> q = p.monic();
    if (q.degree() == 0) return out;
    UPoly<F> g = UPoly<F>::gcd(q, q.derivative());
    UPoly<F> b = q / g;
    UPoly<F> c = q.derivative() / g;
    UPoly<F> d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        UPoly<F> a = UPoly<F>::gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

}  // namespace kahler

#endif
