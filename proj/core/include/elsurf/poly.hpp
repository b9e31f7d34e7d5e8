#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elsurf/rational.hpp"

namespace elsurf {

/// One root of a polynomial. Rational roots are exact; irrational roots are
/// reported as an enclosing interval [lo, hi] together with a rational
/// approximation, and flagged exact = false.
struct PolyRoot {
    Rational value;
    bool exact = true;
    Rational lo;
    Rational hi;
};

/// Dense univariate polynomial with exact rational coefficients.
/// Degree stays tiny here (walls are roots of linears and quadratics),
/// so no attempt at sparse or asymptotically clever arithmetic.
class Poly {
public:
    Poly() = default;
    Poly(Rational constant);  // NOLINT: implicit by design
    Poly(int constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs);

    /// b + a*x.
    static Poly linear(Rational b, Rational a);
    static Poly variable() { return linear(0, 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of x^i (zero beyond the degree).
    Rational coeff(int i) const;
    Rational constant_value() const;  // throws unless is_constant()

    Rational eval(const Rational& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// All real roots, ascending. Exact for degree <= 2 with rational roots;
    /// irrational quadratic roots come back as flagged enclosures. Throws
    /// InputError for degree > 2 (never needed here) and for the zero
    /// polynomial.
    std::vector<PolyRoot> roots() const;

    /// Roots lying in the open interval (lo, hi).
    std::vector<PolyRoot> roots_in(const Rational& lo, const Rational& hi) const;

    /// Expanded form, e.g. "15/2*a^2 - 4*a + 1/2".
    std::string str(const std::string& var = "a") const;

    /// Factored form when the polynomial splits over Q, e.g.
    /// "1/2*(3*a - 1)*(5*a - 1)"; falls back to the expanded form.
    std::string factored_str(const std::string& var = "a") const;

private:
    std::vector<Rational> coeffs_;  // coeffs_[i] is the coefficient of x^i

    void trim();
};

}  // namespace elsurf
