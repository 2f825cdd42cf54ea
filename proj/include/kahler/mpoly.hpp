#ifndef KAHLER_MPOLY_HPP
#define KAHLER_MPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kahler {

/// Sparse multivariate polynomial over Z in the transcendental generators
/// t1, t2, ...  Exponent vectors are stored with trailing zeros trimmed, so
/// the number of variables is implicit and constants mix freely with
/// polynomials in any number of variables.  Term order is lex with t1 most
/// significant.
class MPoly {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, mpz_class>;

    MPoly() = default;
    explicit MPoly(const mpz_class& c);
    explicit MPoly(long c);

    /// The monomial t_{var+1}^power (var is 0-based).
    static MPoly variable(std::size_t var, unsigned power = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the coefficient of the empty monomial).
    const mpz_class& constant_term() const;

    /// Number of variables actually present (1 + highest index used).
    std::size_t num_vars() const;
    long degree(std::size_t var) const;  // -1 for the zero polynomial

    const TermMap& terms() const { return terms_; }

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly derivative(std::size_t var) const;

    /// Leading term in lex order; polynomial must be nonzero.
    const std::pair<const Exponents, mpz_class>& leading() const;
    /// Sign of the lex-leading coefficient (0 for the zero polynomial).
    int leading_sign() const;

    /// Exact division; nullopt when o does not divide *this over Z.
    std::optional<MPoly> divided_by(const MPoly& o) const;

    /// gcd with lex-leading coefficient positive; gcd(0, b) = |b| normalized.
    static MPoly gcd(const MPoly& a, const MPoly& b);

    /// Total order for canonical sorting (not a mathematical order).
    static int compare(const MPoly& a, const MPoly& b);

    /// Render with the given variable names, lex-leading term first.
    std::string str(const std::vector<std::string>& names) const;

    void add_term(const Exponents& e, const mpz_class& c);

private:
    TermMap terms_;  // invariant: no zero coefficients, keys trimmed
};

}  // namespace kahler

#endif
