#include "kahler/function_field.hpp"

#include <cassert>
#include <sstream>

#include "kahler/errors.hpp"

namespace kahler {

namespace {

bool has_alpha(const XPoly& p) {
    for (long i = 0; i <= p.degree(); ++i)
        if (p.coeff(static_cast<std::size_t>(i)).coeffs().size() > 1)
            return true;
    return false;
}

// Clear rational-function denominators, mapping into Z[t1..tm, x] with x as
// the top lex variable.
MPoly clear_denominators(const XPoly& p, std::size_t xvar) {
    MPoly l(1);
    for (long i = 0; i <= p.degree(); ++i) {
        Scalar s = p.coeff(static_cast<std::size_t>(i));
        MPoly d = s.rat_part().den();
        l = *(l * d).divided_by(MPoly::gcd(l, d));
    }
    MPoly out;
    for (long i = 0; i <= p.degree(); ++i) {
        Scalar s = p.coeff(static_cast<std::size_t>(i));
        RatFun r = s.rat_part();
        if (r.is_zero()) continue;
        MPoly scale = *l.divided_by(r.den());
        out = out + r.num() * scale *
                        MPoly::variable(xvar, static_cast<unsigned>(i));
    }
    return out;
}

XPoly from_mpoly(const MPoly& p, std::size_t xvar, const TowerPtr& tower) {
    std::vector<MPoly> coeffs;
    for (const auto& [exps, c] : p.terms()) {
        unsigned xp = exps.size() > xvar ? exps[xvar] : 0;
        MPoly::Exponents rest = exps;
        if (rest.size() > xvar) {
            rest[xvar] = 0;
            while (!rest.empty() && rest.back() == 0) rest.pop_back();
        }
        MPoly term(c);
        for (std::size_t v = 0; v < rest.size(); ++v)
            if (rest[v]) term = term * MPoly::variable(v, rest[v]);
        if (coeffs.size() <= xp) coeffs.resize(xp + 1);
        coeffs[xp] = coeffs[xp] + term;
    }
    std::vector<Scalar> out(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out[i] = tower ? Scalar(tower, {RatFun(coeffs[i])})
                       : Scalar(RatFun(coeffs[i]));
    return XPoly(std::move(out));
}

}  // namespace

template <>
XPoly XPoly::gcd(XPoly a, XPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    if (has_alpha(a) || has_alpha(b)) {
        if (a.degree() == 0 || b.degree() == 0) return XPoly::x(0);
        // Coprimality shortcut: gcd(a, b) divides gcd(N(a), N(b)) where N is
        // the norm down to k(t)[x], so coprime norms (the generic case) avoid
        // any arithmetic over the extension.
        TowerPtr tw;
        for (const XPoly* p : {&a, &b})
            for (long i = 0; !tw && i <= p->degree(); ++i)
                tw = p->coeff(static_cast<std::size_t>(i)).tower();
        if (tw && tw->has_alg()) {
            const UPoly<RatFun>& mu = tw->alg().minpoly;
            std::size_t d = static_cast<std::size_t>(mu.degree());
            std::vector<UPoly<RatFun>> zpow(2 * d - 1);
            for (std::size_t e = 0; e < zpow.size(); ++e)
                zpow[e] = UPoly<RatFun>::x(static_cast<unsigned>(e)) % mu;
            auto norm = [&](const XPoly& p) {
                std::vector<std::vector<RatFun>> al(
                    d, std::vector<RatFun>(
                           static_cast<std::size_t>(p.degree()) + 1));
                for (long i = 0; i <= p.degree(); ++i) {
                    Scalar s = p.coeff(static_cast<std::size_t>(i));
                    for (std::size_t l = 0; l < s.coeffs().size(); ++l)
                        al[l][static_cast<std::size_t>(i)] = s.coeffs()[l];
                }
                std::vector<UPoly<RatFun>> A(d);
                for (std::size_t l = 0; l < d; ++l)
                    A[l] = UPoly<RatFun>(al[l]);
                std::vector<std::vector<UPoly<RatFun>>> M(
                    d, std::vector<UPoly<RatFun>>(d));
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        for (std::size_t l = 0; l < d; ++l) {
                            RatFun c = zpow[l + j].coeff(i);
                            if (!c.is_zero()) M[i][j] = M[i][j] + A[l] * c;
                        }
                auto det = [](auto&& self,
                              const std::vector<std::vector<UPoly<RatFun>>>& m,
                              std::vector<std::size_t> cols)
                    -> UPoly<RatFun> {
                    std::size_t row = m.size() - cols.size();
                    if (cols.size() == 1) return m[row][cols[0]];
                    UPoly<RatFun> acc;
                    for (std::size_t c = 0; c < cols.size(); ++c) {
                        if (m[row][cols[c]].is_zero()) continue;
                        std::vector<std::size_t> rest = cols;
                        rest.erase(rest.begin() +
                                   static_cast<std::ptrdiff_t>(c));
                        UPoly<RatFun> minor = self(self, m, rest);
                        UPoly<RatFun> term = m[row][cols[c]] * minor;
                        acc = (c % 2 == 0) ? acc + term : acc - term;
                    }
                    return acc;
                };
                std::vector<std::size_t> cols(d);
                for (std::size_t i = 0; i < d; ++i) cols[i] = i;
                return det(det, M, cols);
            };
            UPoly<RatFun> na = norm(a);
            UPoly<RatFun> nb = norm(b);
            auto lift = [](const UPoly<RatFun>& p) {
                std::vector<Scalar> c(
                    static_cast<std::size_t>(p.degree()) + 1);
                for (long i = 0; i <= p.degree(); ++i)
                    c[static_cast<std::size_t>(i)] =
                        Scalar(p.coeff(static_cast<std::size_t>(i)));
                return XPoly(std::move(c));
            };
            if (!na.is_zero() && !nb.is_zero() &&
                XPoly::gcd(lift(na), lift(nb)).is_one())
                return XPoly::x(0);
        }
        // Pseudo-remainder sequence over k[alpha][x] with k-content removal;
        // a fraction-field Euclid here would need one inversion per step.
        auto normalize = [](const XPoly& p) {
            MPoly den(1);
            MPoly num;
            for (long i = 0; i <= p.degree(); ++i) {
                Scalar s = p.coeff(static_cast<std::size_t>(i));
                for (const RatFun& r : s.coeffs()) {
                    if (r.is_zero()) continue;
                    den = *(den * r.den()).divided_by(
                        MPoly::gcd(den, r.den()));
                    num = num.is_zero() ? r.num() : MPoly::gcd(num, r.num());
                }
            }
            if (num.is_zero()) return p;
            return p * XPoly(Scalar(RatFun(den, num)));
        };
        // Subresultant PRS; the beta divisions keep coefficient growth
        // polynomial where a plain fraction-field Euclid explodes.
        auto pseudo_rem = [](XPoly r, const XPoly& b, unsigned delta) {
            Scalar lb = b.lc();
            unsigned steps = 0;
            while (!r.is_zero() && r.degree() >= b.degree()) {
                unsigned d = static_cast<unsigned>(r.degree() - b.degree());
                r = r * XPoly(lb) - XPoly(r.lc()) * XPoly::x(d) * b;
                ++steps;
            }
            for (; steps < delta + 1; ++steps) r = r * XPoly(lb);
            return r;
        };
        a = normalize(a);
        b = normalize(b);
        if (a.degree() < b.degree()) std::swap(a, b);
        Scalar g(1L), h(1L);
        while (!b.is_zero()) {
            unsigned delta = static_cast<unsigned>(a.degree() - b.degree());
            XPoly r = pseudo_rem(a, b, delta);
            a = std::move(b);
            if (!r.is_zero()) {
                Scalar beta = g;
                for (unsigned i = 0; i < delta; ++i) beta = beta * h;
                r = r * beta.inv();
                g = a.lc();
                Scalar hn(1L);
                for (unsigned i = 0; i < delta; ++i) hn = hn * g;
                if (delta == 0)
                    hn = hn * h;
                else
                    for (unsigned i = 1; i < delta; ++i) hn = hn * h.inv();
                h = hn;
            }
            b = std::move(r);
        }
        return normalize(a).monic();
    }
    std::size_t m = 0;
    TowerPtr tower;
    for (const XPoly* p : {&a, &b})
        for (long i = 0; i <= p->degree(); ++i) {
            Scalar s = p->coeff(static_cast<std::size_t>(i));
            if (!tower && s.tower()) tower = s.tower();
            m = std::max({m, s.rat_part().num().num_vars(),
                          s.rat_part().den().num_vars()});
        }
    MPoly ga = clear_denominators(a, m);
    MPoly gb = clear_denominators(b, m);
    return from_mpoly(MPoly::gcd(ga, gb), m, tower).monic();
}

XPoly solve_mod(const XPoly& a0, const XPoly& b0, const XPoly& m) {
    XPoly a = a0 % m;
    XPoly b = b0 % m;
    if (a.is_zero()) throw DivisionByZero();
    if (b.is_zero()) return b;
    long d = m.degree();
    if (d <= 1 || has_alpha(a) || has_alpha(m) || has_alpha(b)) {
        auto [g, s, t] = XPoly::ext_gcd(a, m);
        if (!g.is_one()) throw DivisionByZero();
        return (b * (s % m)) % m;
    }

    TowerPtr tower;
    for (const XPoly* p : {const_cast<const XPoly*>(&a), &m,
                           const_cast<const XPoly*>(&b)})
        for (long i = 0; !tower && i <= p->degree(); ++i)
            tower = p->coeff(static_cast<std::size_t>(i)).tower();
    std::size_t n = static_cast<std::size_t>(d);

    // Column j of the system is (a * x^j) mod m; the unknown coefficients of
    // the solution satisfy  sum_j s_j * col_j = b.
    std::vector<XPoly> cols(n);
    cols[0] = a;
    for (std::size_t j = 1; j < n; ++j) cols[j] = (cols[j - 1] * XPoly::x(1)) % m;

    // Clear every column (and the right-hand side) to Z[t]-entries,
    // remembering the scales.
    auto col_lcm = [n](const XPoly& col) {
        MPoly l(1);
        for (std::size_t i = 0; i < n; ++i) {
            Scalar s = col.coeff(i);
            MPoly den = s.rat_part().den();
            l = *(l * den).divided_by(MPoly::gcd(l, den));
        }
        return l;
    };
    std::vector<std::vector<MPoly>> M(n, std::vector<MPoly>(n));
    std::vector<MPoly> scale(n), rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
        MPoly l = col_lcm(cols[j]);
        for (std::size_t i = 0; i < n; ++i) {
            Scalar s = cols[j].coeff(i);
            RatFun r = s.rat_part();
            if (!r.is_zero()) M[i][j] = r.num() * *l.divided_by(r.den());
        }
        scale[j] = std::move(l);
    }
    MPoly bscale = col_lcm(b);
    for (std::size_t i = 0; i < n; ++i) {
        Scalar s = b.coeff(i);
        RatFun r = s.rat_part();
        if (!r.is_zero()) rhs[i] = r.num() * *bscale.divided_by(r.den());
    }

    // Bareiss fraction-free elimination with row pivoting; every entry stays
    // an exact minor of the cleared matrix.
    auto exact_div = [](const MPoly& p, const MPoly& q) {
        auto r = p.divided_by(q);
        assert(r);
        return *r;
    };
    MPoly prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && M[piv][k].is_zero()) ++piv;
        if (piv == n) throw DivisionByZero();  // gcd(a, m) != 1
        if (piv != k) {
            std::swap(M[piv], M[k]);
            std::swap(rhs[piv], rhs[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = exact_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
            rhs[i] = exact_div(rhs[i] * M[k][k] - M[i][k] * rhs[k], prev);
            M[i][k] = MPoly();
        }
        prev = M[k][k];
    }

    std::vector<RatFun> y(n);
    for (std::size_t k = n; k-- > 0;) {
        RatFun acc(rhs[k]);
        for (std::size_t j = k + 1; j < n; ++j)
            acc = acc - RatFun(M[k][j]) * y[j];
        y[k] = acc / RatFun(M[k][k]);
    }

    RatFun binv = RatFun(1L) / RatFun(bscale);
    std::vector<Scalar> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        RatFun v = y[j] * RatFun(scale[j]) * binv;
        out[j] = tower ? Scalar(tower, {std::move(v)}) : Scalar(std::move(v));
    }
    return XPoly(std::move(out));
}

template <>
XPoly XPoly::inv_mod(const XPoly& m) const {
    return solve_mod(*this, XPoly::x(0), m);
}

FieldElem::FieldElem(TowerPtr tower, XPoly num, XPoly den)
    : tower_(std::move(tower)), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = XPoly::x(0);
        return;
    }
    XPoly g = XPoly::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
    Scalar unit = Scalar(1L) / den_.lc();
    num_ = num_ * unit;
    den_ = den_.monic();
}

Scalar FieldElem::constant_value() const {
    assert(is_constant());
    return num_.coeff(0);
}

TowerPtr FieldElem::join(const FieldElem& o) const {
    if (tower_ && o.tower_) {
        assert(tower_ == o.tower_);
        return tower_;
    }
    return tower_ ? tower_ : o.tower_;
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

// Both operands are reduced, so the needed gcds involve only the small
// cross factors instead of the full products.
FieldElem FieldElem::make_reduced(TowerPtr tower, XPoly num, XPoly den) {
    FieldElem r;
    r.tower_ = std::move(tower);
    if (num.is_zero()) return r;
    Scalar unit = Scalar(1L) / den.lc();
    r.num_ = num * unit;
    r.den_ = den.monic();
    return r;
}

FieldElem FieldElem::add_sub(const FieldElem& o, bool subtract) const {
    if (is_zero()) {
        FieldElem r = subtract ? -o : o;
        r.tower_ = join(o);
        return r;
    }
    if (o.is_zero()) {
        FieldElem r = *this;
        r.tower_ = join(o);
        return r;
    }
    XPoly g = (den_.is_one() || o.den_.is_one())
                  ? XPoly::x(0)
                  : XPoly::gcd(den_, o.den_);
    XPoly u1 = g.is_one() ? den_ : den_ / g;
    XPoly u2 = g.is_one() ? o.den_ : o.den_ / g;
    XPoly t = subtract ? num_ * u2 - o.num_ * u1 : num_ * u2 + o.num_ * u1;
    XPoly den = den_ * u2;
    if (!g.is_one() && !t.is_zero()) {
        XPoly h = XPoly::gcd(t, g);
        if (!h.is_one()) {
            t = t / h;
            den = den / h;
        }
    }
    return make_reduced(join(o), std::move(t), std::move(den));
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    return add_sub(o, false);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    return add_sub(o, true);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (is_zero() || o.is_zero()) {
        FieldElem r;
        r.tower_ = join(o);
        return r;
    }
    XPoly g1 = (num_.degree() < 1 || o.den_.is_one())
                   ? XPoly::x(0)
                   : XPoly::gcd(num_, o.den_);
    XPoly g2 = (o.num_.degree() < 1 || den_.is_one())
                   ? XPoly::x(0)
                   : XPoly::gcd(o.num_, den_);
    XPoly n = (g1.is_one() ? num_ : num_ / g1) *
              (g2.is_one() ? o.num_ : o.num_ / g2);
    XPoly d = (g2.is_one() ? den_ : den_ / g2) *
              (g1.is_one() ? o.den_ : o.den_ / g1);
    return make_reduced(join(o), std::move(n), std::move(d));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    return *this * o.inv();
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw DivisionByZero();
    return make_reduced(tower_, den_, num_);
}

FieldElem FieldElem::derivative_x() const {
    if (is_zero()) return *this;
    if (den_.is_one())
        return make_reduced(tower_, num_.derivative(), XPoly::x(0));
    XPoly dd = den_.derivative();
    XPoly g = dd.is_zero() ? den_ : XPoly::gcd(den_, dd);
    XPoly u = den_ / g;
    XPoly w = dd.is_zero() ? XPoly() : dd / g;
    XPoly n = num_.derivative() * u - num_ * w;
    if (n.is_zero()) return FieldElem(tower_, XPoly());
    XPoly den = den_ * u;
    if (!g.is_one()) {
        XPoly h = XPoly::gcd(n, g);
        if (!h.is_one()) {
            n = n / h;
            den = den / h;
        }
    }
    return make_reduced(tower_, std::move(n), std::move(den));
}

namespace {

XPoly coeffwise_dt(const XPoly& p, std::size_t i) {
    std::vector<Scalar> c;
    c.reserve(p.coeffs().size());
    for (const auto& s : p.coeffs()) c.push_back(s.derivative_t(i));
    return XPoly(std::move(c));
}

}  // namespace

FieldElem FieldElem::derivative_t(std::size_t i) const {
    if (is_zero()) return *this;
    if (den_.is_one())
        return make_reduced(tower_, coeffwise_dt(num_, i), XPoly::x(0));
    XPoly dd = coeffwise_dt(den_, i);
    XPoly g = dd.is_zero() ? den_ : XPoly::gcd(den_, dd);
    XPoly u = den_ / g;
    XPoly w = dd.is_zero() ? XPoly() : dd / g;
    XPoly n = coeffwise_dt(num_, i) * u - num_ * w;
    if (n.is_zero()) return FieldElem(tower_, XPoly());
    XPoly den = den_ * u;
    if (!g.is_one()) {
        XPoly h = XPoly::gcd(n, g);
        if (!h.is_one()) {
            n = n / h;
            den = den / h;
        }
    }
    return make_reduced(tower_, std::move(n), std::move(den));
}

int xpoly_compare(const XPoly& p, const XPoly& q) {
    if (p.degree() != q.degree()) return p.degree() < q.degree() ? -1 : 1;
    for (long i = p.degree(); i >= 0; --i) {
        int c = Scalar::compare(p.coeff(i), q.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

int FieldElem::compare(const FieldElem& a, const FieldElem& b) {
    int c = xpoly_compare(a.den_, b.den_);
    if (c != 0) return c;
    return xpoly_compare(a.num_, b.num_);
}

std::string xpoly_str(const XPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long j = p.degree(); j >= 0; --j) {
        Scalar c = p.coeff(j);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (!first) out << (neg ? " - " : " + ");
        else if (neg) out << "-";
        if (neg) cs = (-c).str();  // negating term-by-term, not just the head
        first = false;
        if (j == 0) {
            bool composite = cs.find(' ') != std::string::npos;
            out << (composite ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs != "1") {
            bool composite = cs.find(' ') != std::string::npos ||
                             cs.find('/') != std::string::npos;
            out << (composite ? "(" + cs + ")" : cs) << "*";
        }
        out << var;
        if (j > 1) out << "^" << j;
    }
    return out.str();
}

std::string FieldElem::str() const {
    std::string var = tower_ ? tower_->var_name() : "x";
    if (is_polynomial()) return xpoly_str(num_, var);
    return "(" + xpoly_str(num_, var) + ")/(" + xpoly_str(den_, var) + ")";
}

FieldElem operator*(const Scalar& s, const FieldElem& f) {
    return FieldElem(s) * f;
}

PartialFractions partial_fractions(const FieldElem& f,
                                   const SquarefreeDecomposition& decomp) {
    XPoly den_check = XPoly::x(0);
    for (const auto& [g, n] : decomp) {
        XPoly gn = XPoly::x(0);
        for (unsigned i = 0; i < n; ++i) gn = gn * g;
        den_check = den_check * gn;
    }
    if (den_check != f.den()) throw MismatchedDecomposition();

    PartialFractions out;
    auto [q, rem] = f.num().divrem(f.den());
    out.poly_part = q;
    for (const auto& [g, n] : decomp) {
        XPoly gn = XPoly::x(0);
        for (unsigned i = 0; i < n; ++i) gn = gn * g;
        XPoly cofactor = f.den() / gn;
        XPoly r = solve_mod(cofactor, rem % gn, gn);
        if (!r.is_zero()) out.terms.push_back({g, n, r});
    }
    return out;
}

HermiteResult hermite_reduce(const FieldElem& f) {
    HermiteResult out;
    auto [q, rem] = f.num().divrem(f.den());
    out.poly_part = q;
    out.integrated = FieldElem();
    FieldElem simple;
    if (!rem.is_zero()) {
        FieldElem proper(f.tower(), rem, f.den());
        auto sqf = squarefree_decomposition(f.den());
        PartialFractions pf = partial_fractions(proper, sqf);
        for (const auto& term : pf.terms) {
            const XPoly& g = term.place;
            XPoly gp = g.derivative();
            XPoly N = term.numerator;
            unsigned i = term.order;
            XPoly gpow = XPoly::x(0);  // g^(i-1)
            for (unsigned j = 1; j < i; ++j) gpow = gpow * g;
            while (i >= 2) {
                // N = B*g' + C*g with deg B < deg g
                XPoly B = solve_mod(gp, N % g, g);
                XPoly C = (N - B * gp) / g;
                Scalar inv_im1 = Scalar(1L) / Scalar(static_cast<long>(i - 1));
                out.integrated = out.integrated -
                    FieldElem(f.tower(), B * inv_im1, gpow);
                N = C + B.derivative() * inv_im1;
                gpow = gpow / g;
                --i;
            }
            if (!N.is_zero()) simple = simple + FieldElem(f.tower(), N, g);
        }
    }
    out.simple_num = simple.num();
    out.simple_den = simple.den();
    if (simple.is_zero()) out.simple_num = XPoly();
    return out;
}

Scalar trace_mod(const XPoly& g, const XPoly& r) {
    assert(g.is_monic() && g.degree() >= 1);
    XPoly rr = r % g;
    std::size_t n = static_cast<std::size_t>(g.degree());
    // Newton's identities give the power sums of the roots of g.
    std::vector<Scalar> p(n);
    p[0] = Scalar(static_cast<long>(n));
    for (std::size_t k = 1; k < n; ++k) {
        Scalar s = Scalar(static_cast<long>(k)) * g.coeff(n - k);
        for (std::size_t i = 1; i < k; ++i)
            s = s + g.coeff(n - i) * p[k - i];
        p[k] = -s;
    }
    Scalar tr;
    for (std::size_t k = 0; k < n; ++k) tr = tr + rr.coeff(k) * p[k];
    return tr;
}

std::vector<std::pair<unsigned, XPoly>> polar_at(const FieldElem& f,
                                                 const XPoly& g) {
    assert(g.is_monic() && g.degree() >= 1);
    std::vector<std::pair<unsigned, XPoly>> out;
    if (f.is_zero()) return out;
    XPoly cofree = f.den();  // den with all g-related factors stripped
    unsigned n = 0;
    while (true) {
        XPoly h = XPoly::gcd(cofree, g);
        if (h.degree() == 0) break;
        cofree = cofree / h;
        ++n;
    }
    if (n == 0) return out;
    XPoly gn = XPoly::x(0);
    for (unsigned i = 0; i < n; ++i) gn = gn * g;
    XPoly gpart = f.den() / cofree;  // divides g^n
    XPoly T = gn / gpart;
    XPoly R = ((f.num() % (gn * cofree)) * T) % gn;
    R = solve_mod(cofree, R, gn);
    // g-adic digits of R: R = sum s_j g^j, polar term s_j / g^(n-j)
    for (unsigned j = 0; j < n && !R.is_zero(); ++j) {
        auto [q, s] = R.divrem(g);
        if (!s.is_zero()) out.emplace_back(n - j, s);
        R = q;
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

}  // namespace kahler
