#include "conedef/p1_cech.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace conedef::cech {

namespace {

void check_index(int i) {
    if (i != 0 && i != 1) throw std::invalid_argument("cohomological index must be 0 or 1, got " + std::to_string(i));
}

void check_degree(int d) {
    if (d < 1) throw std::invalid_argument("embedding degree must be at least 1, got " + std::to_string(d));
}

}  // namespace

bool in_basis(int i, const LaurentMonomial& mono) {
    check_index(i);
    return i == 0 ? (mono.a >= 0 && mono.b >= 0) : (mono.a <= -1 && mono.b <= -1);
}

CechClass::CechClass(int degree, int index) : degree_(degree), index_(index) { check_index(index); }

void CechClass::add(const LaurentMonomial& mono, const Rational& c) {
    if (mono.degree() != degree_ || !in_basis(index_, mono))
        throw std::invalid_argument("monomial is not a basis element of this cohomology group");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::vector<Rational> CechClass::coordinates() const {
    const auto b = basis(index_, degree_);
    std::vector<Rational> v(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        auto it = terms_.find(b[j]);
        if (it != terms_.end()) v[j] = it->second;
    }
    return v;
}

CechClass CechClass::from_coordinates(int degree, int index, const std::vector<Rational>& coords) {
    const auto b = basis(index, degree);
    if (coords.size() != b.size()) throw std::invalid_argument("coordinate vector has wrong length");
    CechClass c(degree, index);
    for (std::size_t j = 0; j < b.size(); ++j) c.add(b[j], coords[j]);
    return c;
}

std::int64_t h_dim(int i, std::int64_t k) {
    check_index(i);
    return i == 0 ? std::max<std::int64_t>(0, k + 1) : std::max<std::int64_t>(0, -k - 1);
}

std::vector<LaurentMonomial> basis(int i, int k) {
    check_index(i);
    std::vector<LaurentMonomial> out;
    if (i == 0) {
        for (int a = k; a >= 0; --a) out.push_back({a, k - a});
    } else {
        for (int a = -1; a >= k + 1; --a) out.push_back({a, k - a});
    }
    return out;
}

CechClass multiply(const Polynomial& p, const CechClass& c) {
    if (p.nvars() != 2) throw std::invalid_argument("multiplier must be a polynomial in x0, x1");
    if (!p.is_polynomial() || !p.is_homogeneous() || p.is_zero())
        throw std::invalid_argument("multiplier must be a nonzero homogeneous polynomial");
    CechClass out(c.degree() + p.degree(), c.index());
    for (const auto& [e, coeff] : p.terms())
        for (const auto& [mono, value] : c.terms()) {
            const LaurentMonomial prod{mono.a + e[0], mono.b + e[1]};
            if (in_basis(c.index(), prod)) out.add(prod, coeff * value);
        }
    return out;
}

linalg::RationalMatrix mult_matrix(const Polynomial& p, int i, int k) {
    if (p.nvars() != 2 || p.is_zero() || !p.is_homogeneous())
        throw std::invalid_argument("mult_matrix needs a nonzero homogeneous polynomial in x0, x1");
    const auto source = basis(i, k);
    const int target_degree = k + p.degree();
    std::vector<std::vector<Rational>> columns;
    for (const auto& mono : source) {
        CechClass unit(k, i);
        unit.add(mono, 1);
        columns.push_back(multiply(p, unit).coordinates());
    }
    return linalg::RationalMatrix::from_columns(static_cast<std::size_t>(h_dim(i, target_degree)), columns);
}

std::vector<Polynomial> rnc_coordinates(int d) {
    check_degree(d);
    std::vector<Polynomial> out;
    for (int j = 0; j <= d; ++j) out.push_back(Polynomial::monomial({d - j, j}));
    return out;
}

linalg::RationalMatrix euler_map(int d, int m, int i) {
    check_degree(d);
    linalg::RationalMatrix stacked(0, static_cast<std::size_t>(h_dim(i, d * m)));
    for (const auto& z : rnc_coordinates(d)) stacked = stacked.stack(mult_matrix(z, i, d * m));
    return stacked;
}

std::int64_t euler_restricted_h0(int d, int m) {
    check_degree(d);
    const auto a0 = euler_map(d, m, 0);
    const auto a1 = euler_map(d, m, 1);
    return (d + 1) * h_dim(0, d + d * m) - static_cast<std::int64_t>(linalg::rank(a0)) +
           static_cast<std::int64_t>(linalg::kernel_dim(a1));
}

std::int64_t euler_restricted_h1(int d, int m) {
    check_degree(d);
    return static_cast<std::int64_t>(linalg::cokernel_dim(euler_map(d, m, 1)));
}

}  // namespace conedef::cech
