#pragma once

#include "conedef/linalg.hpp"
#include "conedef/polynomial.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace conedef::proj {

/// Binomial coefficient C(n, k), 0 when k < 0 or k > n; n >= 0.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// h^q(P^n, O(k)) by the closed form.
std::int64_t hq_pn_line(int n, int k, int q);

/// Monomial basis of H^q(P^n, O(k)): exponent vectors of length n+1, nonnegative for q = 0,
/// all <= -1 for q = n, empty otherwise. Ordered lexicographically descending.
std::vector<Exponents> pn_basis(int n, int k, int q);

/// Matrix of multiplication by a homogeneous polynomial in X_0..X_n on H^q(P^n, O(k)),
/// truncating products that leave the target basis.
linalg::RationalMatrix pn_mult_matrix(const Polynomial& p, int n, int k, int q);

/// H^q(O(k)) -> H^q(O(k+1))^(n+1), stacked multiplication by X_0..X_n.
linalg::RationalMatrix pn_euler_map(int n, int k, int q);

/// h^q(P^n, Omega^1(k)) from 0 -> Omega^1(k) -> O(k-1)^(n+1) -> O(k) -> 0 with every
/// connecting rank computed. n = 1 uses the two-chart model on P^1.
std::int64_t hq_pn_omega1(int n, int k, int q);

/// h^q(P^n, T(k)) from 0 -> O(k) -> O(k+1)^(n+1) -> T(k) -> 0 with computed ranks.
std::int64_t hq_tangent_pn_twist(int n, int k, int q);
std::int64_t h1_tangent_pn_twist(int n, int k);

/// h^q(P^1 x P^1, O(a, b)) by the Kunneth formula.
std::int64_t hq_bidegree(int a, int b, int q);
std::int64_t h1_bidegree(int a, int b);

/// Divisor h H - sum e_i E_i on the blow-up of P^2 in r points.
struct SurfaceDivisor {
    std::int64_t h = 0;
    std::vector<std::int64_t> e;

    std::size_t r() const { return e.size(); }
    static SurfaceDivisor hyperplane(std::size_t r);
    static SurfaceDivisor canonical(std::size_t r);
    static SurfaceDivisor exceptional(std::size_t r, std::size_t i);

    friend SurfaceDivisor operator+(const SurfaceDivisor& a, const SurfaceDivisor& b);
    friend SurfaceDivisor operator*(std::int64_t c, const SurfaceDivisor& d);
    SurfaceDivisor operator-() const { return -1 * (*this); }
    friend bool operator==(const SurfaceDivisor&, const SurfaceDivisor&) = default;
};

/// H^2 = 1, E_i^2 = -1, H.E_i = 0, E_i.E_j = 0 for i != j.
std::int64_t intersection(const SurfaceDivisor& d1, const SurfaceDivisor& d2);

/// Degree of O(D) restricted to E_i (1-based i), i.e. D.E_i.
std::int64_t restrict_to_exceptional(const SurfaceDivisor& d, std::size_t i);

std::string to_string(const SurfaceDivisor& d);

struct AtiyahReport {
    int n = 0;
    std::vector<std::array<int, 3>> triples;
    std::size_t identities_checked = 0;
    bool multiplicative_ok = false;
    bool additive_ok = false;
    bool diagonal_ok = false;
    bool pass = false;
};

/// Checks that g_ij = X_i/X_j is a multiplicative cocycle and that its logarithmic
/// derivatives form an additive cocycle, in the affine coordinates of every chart, on every
/// triple of charts of P^n.
AtiyahReport atiyah_cocycle_check(int n);

}  // namespace conedef::proj
