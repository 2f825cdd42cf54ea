#include "kahler/differentials.hpp"

#include <cassert>
#include <sstream>

#include "kahler/errors.hpp"

namespace kahler {

namespace {

TowerPtr join_towers(const TowerPtr& a, const TowerPtr& b) {
    if (a && b) {
        assert(a == b);
        return a;
    }
    return a ? a : b;
}

std::size_t form_arity(const TowerPtr& t, std::size_t fallback) {
    return t ? t->num_trans() : fallback;
}

}  // namespace

bool AbsoluteForm::is_zero() const {
    if (!dx_coeff.is_zero()) return false;
    for (const auto& c : dt_coeffs)
        if (!c.is_zero()) return false;
    return true;
}

AbsoluteForm AbsoluteForm::operator-() const {
    AbsoluteForm r = *this;
    r.dx_coeff = -r.dx_coeff;
    for (auto& c : r.dt_coeffs) c = -c;
    return r;
}

AbsoluteForm AbsoluteForm::operator+(const AbsoluteForm& o) const {
    AbsoluteForm r;
    r.tower = join_towers(tower, o.tower);
    r.dx_coeff = dx_coeff + o.dx_coeff;
    r.dt_coeffs.resize(std::max(dt_coeffs.size(), o.dt_coeffs.size()));
    for (std::size_t i = 0; i < dt_coeffs.size(); ++i)
        r.dt_coeffs[i] = dt_coeffs[i];
    for (std::size_t i = 0; i < o.dt_coeffs.size(); ++i)
        r.dt_coeffs[i] = r.dt_coeffs[i] + o.dt_coeffs[i];
    return r;
}

AbsoluteForm AbsoluteForm::operator-(const AbsoluteForm& o) const {
    return *this + (-o);
}

bool AbsoluteForm::operator==(const AbsoluteForm& o) const {
    return (*this - o).is_zero();
}

AbsoluteForm operator*(const FieldElem& f, const AbsoluteForm& w) {
    AbsoluteForm r = w;
    r.tower = join_towers(w.tower, f.tower());
    r.dx_coeff = f * w.dx_coeff;
    for (auto& c : r.dt_coeffs) c = f * c;
    return r;
}

std::string AbsoluteForm::str() const {
    std::string var = tower ? tower->var_name() : "x";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const FieldElem& c, const std::string& sym) {
        if (c.is_zero()) return;
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")*d(" << sym << ")";
    };
    emit(dx_coeff, var);
    for (std::size_t i = 0; i < dt_coeffs.size(); ++i)
        emit(dt_coeffs[i], tower ? tower->trans_names()[i]
                                 : "t" + std::to_string(i + 1));
    if (first) return "0";
    return out.str();
}

std::string RelativeForm::str() const {
    if (dx_coeff.is_zero()) return "0";
    std::string var = dx_coeff.tower() ? dx_coeff.tower()->var_name() : "x";
    return "(" + dx_coeff.str() + ")*d(" + var + ")";
}

Place Place::finite(XPoly g) {
    if (g.degree() < 1) throw Error("place polynomial must have degree >= 1");
    g = g.monic();
    if (!UPoly<Scalar>::gcd(g, g.derivative()).is_one())
        throw Error("place polynomial must be squarefree");
    Place p;
    p.infinite_ = false;
    p.g_ = std::move(g);
    return p;
}

bool Place::operator==(const Place& o) const {
    if (infinite_ != o.infinite_) return false;
    return infinite_ || g_ == o.g_;
}

bool Place::operator<(const Place& o) const {
    if (infinite_ != o.infinite_) return !infinite_;  // finite before infinity
    if (infinite_) return false;
    return xpoly_compare(g_, o.g_) < 0;
}

std::string Place::str(const std::string& var) const {
    if (infinite_) return "infinity";
    return "(" + xpoly_str(g_, var) + ")";
}

bool PrincipalPartAt::is_zero() const {
    if (!dx_polar.empty()) return false;
    for (const auto& l : dt_polar)
        if (!l.empty()) return false;
    return true;
}

bool PrincipalPartAt::operator==(const PrincipalPartAt& o) const {
    if (!(place == o.place) || dx_polar != o.dx_polar) return false;
    std::size_t n = std::max(dt_polar.size(), o.dt_polar.size());
    for (std::size_t i = 0; i < n; ++i) {
        const PolarList* a = i < dt_polar.size() ? &dt_polar[i] : nullptr;
        const PolarList* b = i < o.dt_polar.size() ? &o.dt_polar[i] : nullptr;
        if ((a && !a->empty()) != (b && !b->empty())) return false;
        if (a && b && *a != *b) return false;
    }
    return true;
}

void PrincipalParts::insert(PrincipalPartAt p) {
    if (p.is_zero()) return;
    parts.emplace(p.place, std::move(p));
}

AbsoluteForm d_abs(const FieldElem& f) { return d_abs(f, f.tower()); }

AbsoluteForm d_abs(const FieldElem& f, const TowerPtr& tower) {
    AbsoluteForm w;
    w.tower = join_towers(tower, f.tower());
    w.dx_coeff = f.derivative_x();
    w.dt_coeffs.resize(form_arity(w.tower, 0));
    for (std::size_t i = 0; i < w.dt_coeffs.size(); ++i)
        w.dt_coeffs[i] = f.derivative_t(i);
    return w;
}

RelativeForm d_rel(const FieldElem& f) { return RelativeForm(f.derivative_x()); }

RelativeForm project_Rprime(const AbsoluteForm& w) {
    return RelativeForm(w.dx_coeff);
}

PolarList polar_at_infinity(const FieldElem& f, bool dx_component) {
    PolarList out;
    if (f.is_zero()) return out;
    long da = f.num().degree();
    long db = f.den().degree();
    long e = da - db + (dx_component ? 2 : 0);
    if (e <= 0) return out;
    // f(1/u) = u^(db-da) * rev(num)(u)/rev(den)(u); the reversed denominator
    // has constant term 1 since den is monic.
    XPoly ra = f.num().reversed();
    XPoly rb = f.den().reversed();
    std::vector<Scalar> s(static_cast<std::size_t>(e));
    for (long k = 0; k < e; ++k) {
        Scalar v = ra.coeff(static_cast<std::size_t>(k));
        for (long i = 0; i < k; ++i)
            v = v - s[static_cast<std::size_t>(i)] *
                    rb.coeff(static_cast<std::size_t>(k - i));
        s[static_cast<std::size_t>(k)] = v;
    }
    for (long n = e; n >= 1; --n) {
        Scalar c = s[static_cast<std::size_t>(e - n)];
        if (dx_component) c = -c;
        if (!c.is_zero())
            out.emplace_back(static_cast<unsigned>(n), XPoly(c));
    }
    return out;
}

Scalar residue_at(const RelativeForm& w, const Place& p) {
    const FieldElem& f = w.dx_coeff;
    if (f.is_zero()) return Scalar();
    if (p.is_infinity()) {
        for (const auto& [n, c] : polar_at_infinity(f, true))
            if (n == 1) return c.coeff(0);
        return Scalar();
    }
    if (f.den().degree() == 0) return Scalar();
    XPoly common = XPoly::gcd(f.den(), p.poly());
    if (common.degree() == 0) return Scalar();
    // Only the order-1 polar digit contributes: the cluster residue of
    // s/common^n vanishes for n >= 2 (no pole at infinity, no other poles).
    for (const auto& [n, s] : polar_at(f, common))
        if (n == 1)
            return trace_mod(common, solve_mod(common.derivative(), s, common));
    return Scalar();
}

Scalar residue_at(const AbsoluteForm& w, const Place& p) {
    return residue_at(project_Rprime(w), p);
}

PrincipalParts principal_parts(const AbsoluteForm& w) {
    PrincipalParts out;
    // One compatible clustering for all components: the squarefree parts of
    // the lcm of the denominators.
    XPoly den = w.dx_coeff.den();
    for (const auto& c : w.dt_coeffs) {
        XPoly g = XPoly::gcd(den, c.den());
        den = den * (c.den() / g);
    }
    if (den.degree() > 0) {
        for (const auto& [g, mult] : squarefree_decomposition(den)) {
            PrincipalPartAt at;
            at.place = Place::finite(g);
            at.dx_polar = polar_at(w.dx_coeff, g);
            at.dt_polar.resize(w.dt_coeffs.size());
            for (std::size_t i = 0; i < w.dt_coeffs.size(); ++i)
                at.dt_polar[i] = polar_at(w.dt_coeffs[i], g);
            out.insert(std::move(at));
        }
    }
    PrincipalPartAt inf;
    inf.place = Place::infinity();
    inf.dx_polar = polar_at_infinity(w.dx_coeff, true);
    inf.dt_polar.resize(w.dt_coeffs.size());
    for (std::size_t i = 0; i < w.dt_coeffs.size(); ++i)
        inf.dt_polar[i] = polar_at_infinity(w.dt_coeffs[i], false);
    out.insert(std::move(inf));
    return out;
}

Scalar res_h1x(const PrincipalPartAt& c) {
    if (c.place.is_infinity()) {
        for (const auto& [n, v] : c.dx_polar)
            if (n == 1) return v.coeff(0);
        return Scalar();
    }
    const XPoly& g = c.place.poly();
    for (const auto& [n, r] : c.dx_polar)
        if (n == 1) return trace_mod(g, solve_mod(g.derivative(), r, g));
    return Scalar();
}

std::optional<FieldElem> is_exact(const RelativeForm& eta) {
    HermiteResult h = hermite_reduce(eta.dx_coeff);
    if (!h.simple_num.is_zero()) return std::nullopt;
    FieldElem witness = h.integrated +
        FieldElem(eta.dx_coeff.tower(), h.poly_part.antiderivative());
    return witness;
}

bool h1_class_equal(const RelativeForm& a, const RelativeForm& b) {
    return is_exact(a - b).has_value();
}

}  // namespace kahler
