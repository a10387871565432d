#include "conedef/linalg.hpp"

#include <boost/integer/common_factor.hpp>

#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

namespace conedef::linalg {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : row) entries_.emplace_back(v);
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns) {
    RationalMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
    std::vector<Rational> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::stack(const RationalMatrix& below) const {
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (below.cols_ != cols_) throw std::invalid_argument("stack: column count mismatch");
    RationalMatrix s(rows_ + below.rows_, cols_);
    std::copy(entries_.begin(), entries_.end(), s.entries_.begin());
    std::copy(below.entries_.begin(), below.entries_.end(), s.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
    return s;
}

bool RationalMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimensions differ");
    RationalMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    std::vector<Rational> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
    return out;
}

namespace {

// Gauss-Jordan on [m | T]; T starts as the identity when tracked.
EchelonFactors gauss_jordan(const RationalMatrix& m, bool track) {
    RationalMatrix a = m;
    RationalMatrix t = track ? RationalMatrix::identity(m.rows()) : RationalMatrix();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != row) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
            if (track)
                for (std::size_t c = 0; c < t.cols(); ++c) std::swap(t(p, c), t(row, c));
        }
        const Rational inv = 1 / a(row, col);
        for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) *= inv;
        if (track)
            for (std::size_t c = 0; c < t.cols(); ++c) t(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            const Rational f = a(r, col);
            for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
            if (track)
                for (std::size_t c = 0; c < t.cols(); ++c) t(r, c) -= f * t(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(t), std::move(a), std::move(pivots)};
}

}  // namespace

RationalMatrix row_reduce(const RationalMatrix& m) { return gauss_jordan(m, false).rref; }

EchelonFactors echelon_factors(const RationalMatrix& m) { return gauss_jordan(m, true); }

std::size_t sparse_rank(const RationalMatrix& m) {
    using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
    // Incremental echelon form keyed by leading column; rows stay short for monomial-type maps.
    std::map<std::size_t, SparseRow> pivots;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        SparseRow row;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) row.emplace_back(c, m(r, c));
        while (!row.empty()) {
            const auto it = pivots.find(row.front().first);
            if (it == pivots.end()) break;
            const SparseRow& piv = it->second;
            const Rational f = row.front().second / piv.front().second;
            SparseRow next;
            next.reserve(row.size() + piv.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    next.push_back(row[i++]);
                } else if (i == row.size() || piv[j].first < row[i].first) {
                    next.emplace_back(piv[j].first, -f * piv[j].second);
                    ++j;
                } else {
                    Rational v = row[i].second - f * piv[j].second;
                    if (!v.is_zero()) next.emplace_back(row[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            row = std::move(next);
        }
        if (!row.empty()) pivots.emplace(row.front().first, std::move(row));
    }
    return pivots.size();
}

std::size_t rank(const RationalMatrix& m) {
    if (m.empty()) return 0;
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) ++nonzero;
    if (nonzero * 8 < m.rows() * m.cols()) return sparse_rank(m);
    // Clear denominators row by row, then run Bareiss on integers.
    std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            l = boost::integer::lcm(l, Integer(boost::multiprecision::denominator(m(r, c))));
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = boost::multiprecision::numerator(m(r, c)) * (l / boost::multiprecision::denominator(m(r, c)));
    }
    Integer prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && a[p][col] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[row]);
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            for (std::size_t c = col + 1; c < m.cols(); ++c) {
                a[r][c] = (a[row][col] * a[r][c] - a[r][col] * a[row][c]);
                a[r][c] /= prev;  // exact by Sylvester's identity
            }
            a[r][col] = 0;
        }
        prev = a[row][col];
        ++row;
    }
    return row;
}

std::size_t kernel_dim(const RationalMatrix& m) {
    const std::size_t k = m.cols() - rank(m);
#ifndef NDEBUG
    assert(kernel_basis(m).size() == k && "rank-nullity violated");
#endif
    return k;
}

std::size_t cokernel_dim(const RationalMatrix& m) { return m.rows() - rank(m); }

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    const auto f = gauss_jordan(m, false);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : f.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < f.pivot_columns.size(); ++i) v[f.pivot_columns[i]] = -f.rref(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> coordinates_in(const RationalMatrix& basis, const std::vector<Rational>& v) {
    if (v.size() != basis.rows()) throw std::invalid_argument("coordinates_in: dimension mismatch");
    RationalMatrix aug(basis.rows(), basis.cols() + 1);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        for (std::size_t c = 0; c < basis.cols(); ++c) aug(r, c) = basis(r, c);
        aug(r, basis.cols()) = v[r];
    }
    const auto f = gauss_jordan(aug, false);
    const bool v_is_pivot = !f.pivot_columns.empty() && f.pivot_columns.back() == basis.cols();
    if (f.pivot_columns.size() - (v_is_pivot ? 1 : 0) != basis.cols())
        throw std::invalid_argument("coordinates_in: basis columns are dependent");
    if (v_is_pivot) return std::nullopt;
    std::vector<Rational> y(basis.cols());
    for (std::size_t i = 0; i < f.pivot_columns.size(); ++i) y[f.pivot_columns[i]] = f.rref(i, basis.cols());
    return y;
}

std::optional<RationalMatrix> solve_in_basis(const RationalMatrix& basis, const RationalMatrix& targets) {
    if (targets.rows() != basis.rows()) throw std::invalid_argument("solve_in_basis: dimension mismatch");
    const std::size_t n = basis.cols();
    RationalMatrix aug(basis.rows(), n + targets.cols());
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = basis(r, c);
        for (std::size_t c = 0; c < targets.cols(); ++c) aug(r, n + c) = targets(r, c);
    }
    const auto f = gauss_jordan(aug, false);
    std::size_t basis_pivots = 0;
    while (basis_pivots < f.pivot_columns.size() && f.pivot_columns[basis_pivots] < n) ++basis_pivots;
    if (basis_pivots != n) throw std::invalid_argument("solve_in_basis: basis columns are dependent");
    if (basis_pivots != f.pivot_columns.size()) return std::nullopt;
    RationalMatrix x(n, targets.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < targets.cols(); ++c) x(i, c) = f.rref(i, n + c);
    return x;
}

}  // namespace conedef::linalg
