#include "conedef/projective_cohomology.hpp"

#include "conedef/p1_cech.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace conedef::proj {

namespace {

void check_n(int n) {
    if (n < 1) throw std::invalid_argument("projective dimension must be at least 1, got " + std::to_string(n));
}

void check_q(int n, int q) {
    if (q < 0 || q > n)
        throw std::invalid_argument("cohomological index " + std::to_string(q) + " outside [0, " + std::to_string(n) + "]");
}

std::int64_t as_count(std::size_t v) { return static_cast<std::int64_t>(v); }

// Exponent vectors of length len with entries in [lo, hi] summing to total, in descending lex order.
void enumerate(int len, int total, int lo, int hi, Exponents& prefix, std::vector<Exponents>& out) {
    if (len == 0) {
        if (total == 0) out.push_back(prefix);
        return;
    }
    const int rest = len - 1;
    const int top = std::min(hi, total - rest * lo);
    const int bottom = std::max(lo, total - rest * hi);
    for (int v = top; v >= bottom; --v) {
        prefix.push_back(v);
        enumerate(rest, total - v, lo, hi, prefix, out);
        prefix.pop_back();
    }
}

bool in_pn_basis(int n, int q, const Exponents& e) {
    if (q == 0) return std::all_of(e.begin(), e.end(), [](int x) { return x >= 0; });
    if (q == n) return std::all_of(e.begin(), e.end(), [](int x) { return x <= -1; });
    return false;
}

// h^q of the middle term of 0 -> A -> B -> C -> 0 style chases, for a map f_q : H^q(A) -> H^q(B).
// Returns dim coker f_q + dim ker f_{q+1} (cohomology of C) given the two maps.
std::int64_t quotient_term(const linalg::RationalMatrix& f_q, const linalg::RationalMatrix& f_q1) {
    return as_count(linalg::cokernel_dim(f_q)) + as_count(linalg::kernel_dim(f_q1));
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial with negative n");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t hq_pn_line(int n, int k, int q) {
    check_n(n);
    check_q(n, q);
    if (q == 0) return k >= 0 ? binomial(n + k, n) : 0;
    if (q == n) return k <= -n - 1 ? binomial(-k - 1, n) : 0;
    return 0;
}

std::vector<Exponents> pn_basis(int n, int k, int q) {
    check_n(n);
    check_q(n, q);
    std::vector<Exponents> out;
    Exponents prefix;
    if (q == 0 && k >= 0) enumerate(n + 1, k, 0, k, prefix, out);
    if (q == n && k <= -n - 1) enumerate(n + 1, k, k + n, -1, prefix, out);
    return out;
}

linalg::RationalMatrix pn_mult_matrix(const Polynomial& p, int n, int k, int q) {
    check_n(n);
    if (p.nvars() != static_cast<std::size_t>(n + 1) || p.is_zero() || !p.is_homogeneous() || !p.is_polynomial())
        throw std::invalid_argument("multiplier must be a nonzero homogeneous polynomial in X_0..X_n");
    const auto source = pn_basis(n, k, q);
    const auto target = pn_basis(n, k + p.degree(), q);
    linalg::RationalMatrix m(target.size(), source.size());
    for (std::size_t c = 0; c < source.size(); ++c)
        for (const auto& [e, coeff] : p.terms()) {
            Exponents prod = source[c];
            for (std::size_t v = 0; v < prod.size(); ++v) prod[v] += e[v];
            if (!in_pn_basis(n, q, prod)) continue;
            // target is sorted descending, so search with the reversed comparator
            auto it = std::lower_bound(target.begin(), target.end(), prod, std::greater<>());
            m(static_cast<std::size_t>(it - target.begin()), c) += coeff;
        }
    return m;
}

linalg::RationalMatrix pn_euler_map(int n, int k, int q) {
    check_n(n);
    check_q(n, q);
    linalg::RationalMatrix stacked(0, pn_basis(n, k, q).size());
    for (int j = 0; j <= n; ++j) {
        const Polynomial x = Polynomial::variable(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(j));
        stacked = stacked.stack(n == 1 ? cech::mult_matrix(x, q, k) : pn_mult_matrix(x, n, k, q));
    }
    return stacked;
}

std::int64_t hq_pn_omega1(int n, int k, int q) {
    check_n(n);
    check_q(n, q);
    // pn_euler_map stacks X_j : H(O(k-1)) -> H(O(k)) vertically; the row map needs them side by side.
    auto row_map = [n, k](int deg_q) {
        const std::size_t src = pn_basis(n, k - 1, deg_q).size();
        const std::size_t tgt = pn_basis(n, k, deg_q).size();
        linalg::RationalMatrix m(tgt, src * static_cast<std::size_t>(n + 1));
        for (int j = 0; j <= n; ++j) {
            const Polynomial x = Polynomial::variable(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(j));
            const auto block = n == 1 ? cech::mult_matrix(x, deg_q, k - 1) : pn_mult_matrix(x, n, k - 1, deg_q);
            for (std::size_t r = 0; r < tgt; ++r)
                for (std::size_t c = 0; c < src; ++c) m(r, static_cast<std::size_t>(j) * src + c) = block(r, c);
        }
        return m;
    };
    // h^q(Omega^1(k)) = dim ker phi_q + dim coker phi_{q-1}, phi_q : H^q(O(k-1))^(n+1) -> H^q(O(k)).
    std::int64_t value = as_count(linalg::kernel_dim(row_map(q)));
    if (q >= 1) value += as_count(linalg::cokernel_dim(row_map(q - 1)));
    return value;
}

std::int64_t hq_tangent_pn_twist(int n, int k, int q) {
    check_n(n);
    check_q(n, q);
    const auto psi_q = pn_euler_map(n, k, q);
    const linalg::RationalMatrix psi_next = q + 1 <= n ? pn_euler_map(n, k, q + 1) : linalg::RationalMatrix();
    return quotient_term(psi_q, psi_next);
}

std::int64_t h1_tangent_pn_twist(int n, int k) { return hq_tangent_pn_twist(n, k, 1); }

std::int64_t hq_bidegree(int a, int b, int q) {
    if (q < 0 || q > 2) throw std::invalid_argument("cohomological index outside [0, 2] on P1xP1");
    std::int64_t total = 0;
    for (int i = 0; i <= 1; ++i) {
        const int j = q - i;
        if (j < 0 || j > 1) continue;
        total += cech::h_dim(i, a) * cech::h_dim(j, b);
    }
    return total;
}

std::int64_t h1_bidegree(int a, int b) { return hq_bidegree(a, b, 1); }

SurfaceDivisor SurfaceDivisor::hyperplane(std::size_t r) { return {1, std::vector<std::int64_t>(r, 0)}; }

SurfaceDivisor SurfaceDivisor::canonical(std::size_t r) { return {-3, std::vector<std::int64_t>(r, -1)}; }

SurfaceDivisor SurfaceDivisor::exceptional(std::size_t r, std::size_t i) {
    if (i < 1 || i > r) throw std::out_of_range("exceptional curve index out of range");
    SurfaceDivisor d{0, std::vector<std::int64_t>(r, 0)};
    d.e[i - 1] = -1;
    return d;
}

SurfaceDivisor operator+(const SurfaceDivisor& a, const SurfaceDivisor& b) {
    if (a.r() != b.r()) throw std::invalid_argument("divisors on different blow-ups");
    SurfaceDivisor s{a.h + b.h, a.e};
    for (std::size_t i = 0; i < s.e.size(); ++i) s.e[i] += b.e[i];
    return s;
}

SurfaceDivisor operator*(std::int64_t c, const SurfaceDivisor& d) {
    SurfaceDivisor s{c * d.h, d.e};
    for (auto& x : s.e) x *= c;
    return s;
}

std::int64_t intersection(const SurfaceDivisor& d1, const SurfaceDivisor& d2) {
    if (d1.r() != d2.r()) throw std::invalid_argument("intersection of divisors on different blow-ups");
    std::int64_t v = d1.h * d2.h;
    for (std::size_t i = 0; i < d1.e.size(); ++i) v -= d1.e[i] * d2.e[i];
    return v;
}

std::int64_t restrict_to_exceptional(const SurfaceDivisor& d, std::size_t i) {
    return intersection(d, SurfaceDivisor::exceptional(d.r(), i));
}

std::string to_string(const SurfaceDivisor& d) {
    std::ostringstream out;
    out << d.h << "H";
    for (std::size_t i = 0; i < d.e.size(); ++i) {
        if (d.e[i] == 0) continue;
        const std::int64_t c = -d.e[i];
        out << (c < 0 ? " - " : " + ");
        if (c != 1 && c != -1) out << (c < 0 ? -c : c);
        out << "E" << i + 1;
    }
    return out.str();
}

AtiyahReport atiyah_cocycle_check(int n) {
    if (n < 2) throw std::invalid_argument("Atiyah cocycle check needs n >= 2");
    const std::size_t nv = static_cast<std::size_t>(n + 1);
    AtiyahReport report;
    report.n = n;
    report.multiplicative_ok = report.additive_ok = report.diagonal_ok = true;

    auto g = [nv](int i, int j) {
        return RationalFunction(Polynomial::variable(nv, static_cast<std::size_t>(i)),
                                Polynomial::variable(nv, static_cast<std::size_t>(j)));
    };
    // Restriction to chart U_l: set X_l = 1; the remaining X_j are the affine coordinates x_{l,j}.
    auto on_chart = [nv](const RationalFunction& f, int l) {
        std::vector<Polynomial> images;
        for (std::size_t v = 0; v < nv; ++v)
            images.push_back(v == static_cast<std::size_t>(l) ? Polynomial::constant(nv, 1) : Polynomial::variable(nv, v));
        return RationalFunction(f.numerator().substitute(images), f.denominator().substitute(images));
    };
    // Coefficients of d log f in the chart coordinates of U_l.
    auto dlog = [&](const RationalFunction& f, int l) {
        const RationalFunction local = on_chart(f, l);
        std::vector<RationalFunction> coeffs;
        for (int v = 0; v <= n; ++v)
            if (v != l) coeffs.push_back(local.log_derivative(static_cast<std::size_t>(v)));
        return coeffs;
    };

    for (int i = 0; i <= n; ++i)
        for (int l = 0; l <= n; ++l)
            for (const auto& c : dlog(g(i, i), l)) {
                ++report.identities_checked;
                report.diagonal_ok = report.diagonal_ok && c.is_zero();
            }

    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                report.triples.push_back({i, j, k});
                ++report.identities_checked;
                report.multiplicative_ok = report.multiplicative_ok && (g(i, j) * g(j, k) == g(i, k));
                for (int l : {i, j, k}) {
                    const auto a_ij = dlog(g(i, j), l), a_jk = dlog(g(j, k), l), a_ik = dlog(g(i, k), l);
                    for (std::size_t v = 0; v < a_ij.size(); ++v) {
                        ++report.identities_checked;
                        report.additive_ok = report.additive_ok && (a_ij[v] + a_jk[v] == a_ik[v]);
                    }
                }
            }
    report.pass = report.multiplicative_ok && report.additive_ok && report.diagonal_ok;
    return report;
}

}  // namespace conedef::proj
