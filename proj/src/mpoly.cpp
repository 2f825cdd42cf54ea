#include "kahler/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace kahler {

namespace {

void trim(MPoly::Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

MPoly::Exponents exp_add(const MPoly::Exponents& a, const MPoly::Exponents& b) {
    MPoly::Exponents r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

// a - b when a >= b componentwise; nullopt otherwise.
std::optional<MPoly::Exponents> exp_sub(const MPoly::Exponents& a,
                                        const MPoly::Exponents& b) {
    if (b.size() > a.size()) {
        for (std::size_t i = a.size(); i < b.size(); ++i)
            if (b[i] != 0) return std::nullopt;
    }
    MPoly::Exponents r = a;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] < b[i]) return std::nullopt;
        r[i] = a[i] - b[i];
    }
    trim(r);
    return r;
}

}  // namespace

MPoly::MPoly(const mpz_class& c) {
    if (c != 0) terms_[{}] = c;
}

MPoly::MPoly(long c) {
    if (c != 0) terms_[{}] = mpz_class(c);
}

MPoly MPoly::variable(std::size_t var, unsigned power) {
    MPoly p;
    if (power == 0) return MPoly(1);
    Exponents e(var + 1, 0);
    e[var] = power;
    p.terms_[e] = 1;
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

const mpz_class& MPoly::constant_term() const {
    static const mpz_class zero(0);
    auto it = terms_.find({});
    return it == terms_.end() ? zero : it->second;
}

std::size_t MPoly::num_vars() const {
    std::size_t n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, e.size());
    return n;
}

long MPoly::degree(std::size_t var) const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long de = var < e.size() ? static_cast<long>(e[var]) : 0;
        d = std::max(d, de);
    }
    return terms_.empty() ? -1 : d;
}

void MPoly::add_term(const Exponents& e, const mpz_class& c) {
    if (c == 0) return;
    Exponents key = e;
    trim(key);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

MPoly MPoly::derivative(std::size_t var) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        if (var >= e.size() || e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * static_cast<long>(e[var]));
    }
    return r;
}

const std::pair<const MPoly::Exponents, mpz_class>& MPoly::leading() const {
    assert(!terms_.empty());
    return *terms_.rbegin();
}

int MPoly::leading_sign() const {
    if (terms_.empty()) return 0;
    return sgn(terms_.rbegin()->second);
}

std::optional<MPoly> MPoly::divided_by(const MPoly& o) const {
    if (o.is_zero()) return std::nullopt;
    MPoly rem = *this;
    MPoly quot;
    const auto& lead = o.leading();
    while (!rem.is_zero()) {
        const auto& rl = rem.leading();
        auto de = exp_sub(rl.first, lead.first);
        if (!de) return std::nullopt;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rl.second.get_mpz_t(),
                    lead.second.get_mpz_t());
        if (r != 0) return std::nullopt;
        MPoly term;
        term.terms_[*de] = q;
        quot = quot + term;
        rem = rem - term * o;
    }
    return quot;
}

namespace {

// Univariate view in variable `var`: coefficient i is an MPoly free of `var`.
std::vector<MPoly> to_univar(const MPoly& p, std::size_t var) {
    std::vector<MPoly> coeffs;
    for (const auto& [e, c] : p.terms()) {
        std::size_t d = var < e.size() ? e[var] : 0;
        if (coeffs.size() <= d) coeffs.resize(d + 1);
        MPoly::Exponents rest = e;
        if (var < rest.size()) rest[var] = 0;
        coeffs[d].add_term(rest, c);
    }
    return coeffs;
}

MPoly from_univar(const std::vector<MPoly>& coeffs, std::size_t var) {
    MPoly p;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        MPoly shifted = coeffs[d] * MPoly::variable(var, static_cast<unsigned>(d));
        p = p + shifted;
    }
    return p;
}

void univar_trim(std::vector<MPoly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Content of p with respect to `var` (gcd of the univariate coefficients).
MPoly content_wrt(const std::vector<MPoly>& coeffs) {
    MPoly g;
    for (const auto& c : coeffs) g = MPoly::gcd(g, c);
    return g;
}

// Pseudo-remainder of a by b in variable `var` (dense coefficient vectors);
// scaled by exactly lc(b)^(deg a - deg b + 1) as the subresultant PRS needs.
std::vector<MPoly> pseudo_rem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
    univar_trim(a);
    const MPoly& lb = b.back();
    std::size_t need = a.size() >= b.size() ? a.size() - b.size() + 1 : 0;
    std::size_t steps = 0;
    while (a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        const MPoly la = a.back();
        for (auto& c : a) c = c * lb;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] = a[i + shift] - la * b[i];
        univar_trim(a);
        ++steps;
        if (a.empty()) break;
    }
    for (; steps < need && !a.empty(); ++steps)
        for (auto& c : a) c = c * lb;
    return a;
}

}  // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    auto normalized = [](MPoly p) {
        if (p.leading_sign() < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    if (a.is_constant() && b.is_constant()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.constant_term().get_mpz_t(),
                b.constant_term().get_mpz_t());
        return MPoly(g);
    }
    std::size_t var = std::max(a.num_vars(), b.num_vars()) - 1;

    auto ua = to_univar(a, var);
    auto ub = to_univar(b, var);
    MPoly ca = content_wrt(ua);
    MPoly cb = content_wrt(ub);
    MPoly gc = gcd(ca, cb);
    auto divexact_all = [](std::vector<MPoly>& v, const MPoly& d) {
        for (auto& c : v) {
            auto q = c.divided_by(d);
            assert(q);
            c = *q;
        }
    };
    divexact_all(ua, ca);
    divexact_all(ub, cb);

    // Evaluation shortcut: specialize the coefficient variables at integers
    // keeping both leading coefficients nonzero.  The specialized gcd degree
    // bounds the true degree, so degree 0 certifies coprime primitive parts.
    if (var > 0 && ua.size() > 1 && ub.size() > 1) {
        auto eval = [](const MPoly& p, long base) {
            mpz_class r = 0;
            for (const auto& [e, c] : p.terms()) {
                mpz_class t = c;
                for (std::size_t i = 0; i < e.size(); ++i)
                    for (unsigned j = 0; j < e[i]; ++j)
                        t *= base + static_cast<long>(i);
                r += t;
            }
            return r;
        };
        for (long base = 1; base <= 3; ++base) {
            if (eval(ua.back(), base) == 0 || eval(ub.back(), base) == 0)
                continue;
            MPoly sa, sb;
            for (std::size_t i = 0; i < ua.size(); ++i)
                sa = sa + MPoly(eval(ua[i], base)) *
                              MPoly::variable(0, static_cast<unsigned>(i));
            for (std::size_t i = 0; i < ub.size(); ++i)
                sb = sb + MPoly(eval(ub[i], base)) *
                              MPoly::variable(0, static_cast<unsigned>(i));
            if (gcd(sa, sb).degree(0) == 0) return normalized(gc);
            break;
        }
    }

    // Subresultant PRS on the primitive parts; the known exact divisors
    // bound growth without a content gcd at every step.
    if (ua.size() < ub.size()) std::swap(ua, ub);
    MPoly sg(1), sh(1);
    while (true) {
        std::size_t delta = ua.size() - ub.size();
        auto r = pseudo_rem(ua, ub);
        if (r.empty()) break;
        if (r.size() == 1) return normalized(gc);  // coprime primitive parts
        MPoly divisor = sg;
        for (std::size_t i = 0; i < delta; ++i) divisor = divisor * sh;
        divexact_all(r, divisor);
        ua = std::move(ub);
        ub = std::move(r);
        sg = ua.back();
        MPoly hn(1);
        for (std::size_t i = 0; i < delta; ++i) hn = hn * sg;
        if (delta == 0) {
            hn = hn * sh;
        } else {
            for (std::size_t i = 1; i < delta; ++i) {
                auto q = hn.divided_by(sh);
                assert(q);
                hn = *q;
            }
        }
        sh = std::move(hn);
    }
    MPoly cu = content_wrt(ub);
    divexact_all(ub, cu);
    return normalized(gc * from_univar(ub, var));
}

int MPoly::compare(const MPoly& a, const MPoly& b) {
    auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (ia != a.terms_.rend()) return 1;
    if (ib != b.terms_.rend()) return -1;
    return 0;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class abs_c = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool printed_coeff = false;
        if (abs_c != 1 || e.empty()) {
            out << abs_c.get_str();
            printed_coeff = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed_coeff) out << "*";
            out << names.at(i);
            if (e[i] > 1) out << "^" << e[i];
            printed_coeff = true;
        }
    }
    return out.str();
}

}  // namespace kahler
