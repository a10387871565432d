#pragma once

#include "conedef/linalg.hpp"
#include "conedef/polynomial.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

// Presentation of the cone over the degree-d rational normal curve: A = Q[z_0..z_d], I generated by
// the 2x2 minors of the Hankel matrix with rows (z_0..z_{d-1}) and (z_1..z_d), S = A/I realized
// inside Q[x0, x1] by z_i -> x0^(d-i) x1^i. Grade k of S is the binary forms of degree dk.
namespace conedef::rnc {

struct HankelPresentation {
    int d = 0;
    /// (i, j) with q_{i,j} = z_i z_{j+1} - z_{i+1} z_j, 0 <= i < j <= d-1, lexicographic.
    std::vector<std::pair<int, int>> labels;
    /// Polynomials in d+1 variables z_0..z_d.
    std::vector<Polynomial> generators;

    std::size_t nvars() const { return static_cast<std::size_t>(d + 1); }
};

HankelPresentation build_presentation(int d);

/// Matrix with polynomial entries, row-major.
struct PolyMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Polynomial> entries;

    const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Entry (k, i) = d q_k / d z_i.
PolyMatrix jacobian_matrix(const HankelPresentation& p);

struct GradedSBasis {
    int d = 0;
    int k = 0;
    /// Exponents (dk - t, t) in x0, x1 for t = 0..dk; empty when k < 0.
    std::vector<Exponents> monomials;
};

GradedSBasis s_basis(int d, int k);

/// Image of a z-monomial or polynomial in Q[x0, x1].
Polynomial to_binary(int d, const Polynomial& p);

/// Coefficients of a binary form of degree deg in the basis x0^(deg-t) x1^t, t = 0..deg.
std::vector<Rational> binary_coordinates(const Polynomial& form, int deg);

/// Normal form split by grade: for every grade k occurring among the terms of p, the coordinates
/// over s_basis(d, k) of the image of the grade-k part.
std::map<int, std::vector<Rational>> normal_form(int d, const Polynomial& p);

/// Map from derivations sum_i s_i d/dz_i, s_i in S_{m+1}, to the free module sum_k S_{m+2}:
/// column (i, s) has block k equal to the normal form of (d q_k / d z_i) * s.
/// Columns are ordered by i then by s_basis(d, m+1); rows by k then by s_basis(d, m+2).
linalg::RationalMatrix graded_jacobian_map(int d, int m);

/// (d-1) h^0(O(d+2+dm)) from the splitting N = O(d+2)^(d-1).
std::int64_t normal_bundle_h0(int d, int m);

struct NormalRoute {
    std::int64_t t1 = 0;
    std::int64_t normal_h0 = 0;
    std::int64_t euler_h0 = 0;
    std::int64_t tangent_h0 = 0;
    std::int64_t euler_h1 = 0;
    /// True when h^1(T_{P^d}|_Y (m)) = 0, so the four-term sequence computes h^1(T_Y (m)).
    bool exact = false;
};

/// normal_h0 - euler_h0 + h^0(T_Y (m)); only meaningful when exact is set.
NormalRoute t1_via_normal(int d, int m);

/// Relations sum_k L_k q_k = 0 with linear L_k, as a (generators x (d+1)) coefficient matrix each:
/// entry (k, i) is the coefficient of z_i in L_k.
std::vector<linalg::RationalMatrix> linear_syzygies(const HankelPresentation& p);

/// Basis of Hom_S(I/I^2, S)_m = { (phi_k) in S_{m+2}^C : sum_k L_k phi_k = 0 for every linear syzygy },
/// as columns in the row coordinates of graded_jacobian_map.
linalg::RationalMatrix hom_basis(int d, int m);

/// The map H^0(T_{P^d}|_Y (m)) -> H^0(N (m)) written in explicit bases. Source columns: polynomial
/// derivations from a complement of the Euler image, then one lift per class in the kernel of the
/// H^1-level Euler map. Target: the basis hom_basis(d, m).
struct AssembledMap {
    int d = 0;
    int m = 0;
    linalg::RationalMatrix matrix;
    std::int64_t polynomial_columns = 0;
    std::int64_t lifted_columns = 0;
    std::int64_t linear_syzygy_count = 0;
    std::int64_t source_h0 = 0;
    std::int64_t target_h0 = 0;
    std::int64_t rank = 0;
    std::int64_t cokernel = 0;
    std::int64_t kernel = 0;
    /// Rank of the polynomial derivations sum_i S_{m+1} d/dz_i alone, mapped into the same target.
    std::int64_t derivation_rank = 0;
};

AssembledMap assembled_jacobian_map(int d, int m);

}  // namespace conedef::rnc
