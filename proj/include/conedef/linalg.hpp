#pragma once

#include "conedef/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace conedef::linalg {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<Rational> column(std::size_t c) const;
    RationalMatrix transpose() const;

    /// Stacks `below` under this matrix; column counts must agree.
    RationalMatrix stack(const RationalMatrix& below) const;

    bool is_zero() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> operator*(const RationalMatrix& a, const std::vector<Rational>& v);

/// Reduced row-echelon form. Pivots are the first nonzero entry in column order.
RationalMatrix row_reduce(const RationalMatrix& m);

/// Reduced row-echelon form together with an invertible T such that T * m == rref.
struct EchelonFactors {
    RationalMatrix transform;
    RationalMatrix rref;
    std::vector<std::size_t> pivot_columns;
};
EchelonFactors echelon_factors(const RationalMatrix& m);

/// Row-by-row sparse elimination; rank() switches to it for matrices with few nonzeros.
std::size_t sparse_rank(const RationalMatrix& m);

/// Exact rank; dense matrices use fraction-free (Bareiss) elimination on an integer-scaled copy.
std::size_t rank(const RationalMatrix& m);

/// cols - rank.
std::size_t kernel_dim(const RationalMatrix& m);

/// rows - rank; the target space of a map is the row space of its matrix.
std::size_t cokernel_dim(const RationalMatrix& m);

/// Basis of the null space, one vector per free column of the RREF, in column order.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Coordinates y with basis * y == v, or nullopt if v is outside the column span.
/// Requires the columns of `basis` to be linearly independent.
std::optional<std::vector<Rational>> coordinates_in(const RationalMatrix& basis, const std::vector<Rational>& v);

/// Batched form of coordinates_in: X with basis * X == targets, or nullopt if some column of
/// targets is outside the column span. One elimination for all columns.
std::optional<RationalMatrix> solve_in_basis(const RationalMatrix& basis, const RationalMatrix& targets);

}  // namespace conedef::linalg
