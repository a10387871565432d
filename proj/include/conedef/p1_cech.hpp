#pragma once

#include "conedef/linalg.hpp"
#include "conedef/polynomial.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

// Two-chart Cech model of line bundles on P^1 with homogeneous coordinates x0, x1.
// H^0(O(k)) has basis x0^a x1^b with a, b >= 0; H^1(O(k)) has basis x0^a x1^b with a, b <= -1.
namespace conedef::cech {

struct LaurentMonomial {
    int a = 0;
    int b = 0;

    int degree() const { return a + b; }
    friend auto operator<=>(const LaurentMonomial&, const LaurentMonomial&) = default;
};

/// True when x0^a x1^b is a basis element of H^i(O(a+b)).
bool in_basis(int i, const LaurentMonomial& mono);

/// A cohomology class written in the monomial basis of H^i(O(k)).
class CechClass {
public:
    CechClass(int degree, int index);

    int degree() const { return degree_; }
    int index() const { return index_; }
    const std::map<LaurentMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * mono; throws unless mono is a basis element for (degree, index).
    void add(const LaurentMonomial& mono, const Rational& c);

    /// Coefficients in the order of basis(index, degree).
    std::vector<Rational> coordinates() const;
    static CechClass from_coordinates(int degree, int index, const std::vector<Rational>& coords);

    friend bool operator==(const CechClass&, const CechClass&) = default;

private:
    int degree_;
    int index_;
    std::map<LaurentMonomial, Rational> terms_;
};

/// h^i(P^1, O(k)): max(0, k+1) for i = 0 and max(0, -k-1) for i = 1.
std::int64_t h_dim(int i, std::int64_t k);

/// Basis of H^i(O(k)), descending in the exponent of x0.
std::vector<LaurentMonomial> basis(int i, int k);

/// Product of a homogeneous polynomial in x0, x1 with a class. Product monomials that leave
/// the basis of the target group are coboundaries and are dropped.
CechClass multiply(const Polynomial& p, const CechClass& c);

/// Matrix of multiplication by homogeneous p: H^i(O(k)) -> H^i(O(k + deg p)), in basis() order.
/// Rows index the target basis, columns the source basis.
linalg::RationalMatrix mult_matrix(const Polynomial& p, int i, int k);

/// The degree-d coordinate monomials x0^(d-j) x1^j, j = 0..d.
std::vector<Polynomial> rnc_coordinates(int d);

/// H^i(O(dm)) -> H^i(O(d+dm))^(d+1), the stacked multiplications by the coordinate monomials.
/// This is the cohomology map induced by the first arrow of the restricted Euler sequence
/// 0 -> O(dm) -> O(d+dm)^(d+1) -> T|_Y(dm) -> 0 on the degree-d rational normal curve Y.
linalg::RationalMatrix euler_map(int d, int m, int i);

/// h^0(T_{P^d}|_Y (dm)) = (d+1) h^0(O(d+dm)) - rank(euler_map on H^0) + dim ker(euler_map on H^1).
std::int64_t euler_restricted_h0(int d, int m);

/// h^1(T_{P^d}|_Y (dm)) = dim coker(euler_map on H^1).
std::int64_t euler_restricted_h1(int d, int m);

}  // namespace conedef::cech
