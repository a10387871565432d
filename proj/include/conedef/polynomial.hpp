#pragma once

#include "conedef/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace conedef {

/// Exponent vector of a monomial. Negative entries are allowed (Laurent monomials).
using Exponents = std::vector<int>;

/// Sparse Laurent polynomial in a fixed number of variables with rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t i);
    static Polynomial monomial(const Exponents& e, const Rational& c = 1);

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// True when every exponent is nonnegative.
    bool is_polynomial() const;
    bool is_homogeneous() const;
    /// Total degree of a homogeneous nonzero polynomial; throws otherwise.
    int degree() const;
    Rational coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial derivative(std::size_t var) const;

    /// Replaces variable i by images[i]; all images share one variable count.
    /// Only nonnegative exponents may be substituted.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    /// Terms printed in descending degrevlex order with x_0 < x_1 < ... < x_{n-1},
    /// e.g. "z0*z2 - z1^2" style, "0" for the zero polynomial.
    std::string to_string(const std::vector<std::string>& names) const;
    std::string to_string(const std::string& prefix) const;

private:
    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;
};

/// Degrevlex comparison (a > b) with variable 0 the smallest.
bool degrevlex_greater(const Exponents& a, const Exponents& b);

/// Quotient of two polynomials; denominator never zero. Equality is tested by cross-multiplication.
class RationalFunction {
public:
    RationalFunction(Polynomial numerator, Polynomial denominator);
    explicit RationalFunction(Polynomial numerator);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    RationalFunction derivative(std::size_t var) const;
    /// d/dvar log(f) = f' / f.
    RationalFunction log_derivative(std::size_t var) const;

private:
    Polynomial num_;
    Polynomial den_;
};

}  // namespace conedef
