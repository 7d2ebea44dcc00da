#pragma once

#include "apolar/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace apolar {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);
    /// All rows must share one length; an empty list gives a 0 x cols matrix.
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] RationalVector row(std::size_t i) const;
    [[nodiscard]] RationalVector column(std::size_t j) const;
    [[nodiscard]] RationalMatrix transpose() const;
    [[nodiscard]] RationalVector operator*(const RationalVector& v) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    RationalVector data_;
};

/// Reduced row echelon form together with the pivot columns.
struct EchelonForm {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};

EchelonForm reduced_echelon(RationalMatrix m);

/// Linear subspace of Q^n, stored as the nonzero rows of its reduced echelon
/// form so that equal subspaces compare equal.
class SubspaceBasis {
public:
    explicit SubspaceBasis(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

    /// Span of arbitrary vectors.
    static SubspaceBasis span(std::size_t ambient_dim, const std::vector<RationalVector>& vectors);
    /// Like span, but throws InvalidInput if the vectors are dependent.
    static SubspaceBasis from_independent(std::size_t ambient_dim, const std::vector<RationalVector>& vectors);
    static SubspaceBasis full(std::size_t ambient_dim);

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
    [[nodiscard]] std::size_t dim() const { return vectors_.size(); }
    [[nodiscard]] bool is_zero() const { return vectors_.empty(); }
    [[nodiscard]] const std::vector<RationalVector>& vectors() const { return vectors_; }
    [[nodiscard]] bool contains(const RationalVector& v) const;
    /// Linear combination sum_i w_i * basis_i.
    [[nodiscard]] RationalVector combine(const RationalVector& weights) const;

    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

private:
    std::size_t ambient_dim_;
    std::vector<RationalVector> vectors_;
};

/// {v : M v = 0}
SubspaceBasis kernel(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Set intersection of subspaces sharing one ambient dimension.
SubspaceBasis intersect_subspaces(std::span<const SubspaceBasis> spaces);

/// Solution of A x = b with free variables set to zero, or nullopt when the
/// system is inconsistent.
std::optional<RationalVector> solve_linear(const RationalMatrix& a, const RationalVector& b);

/// Independent fraction-free (Bareiss) elimination over the integers, used as
/// an oracle for the Gaussian routines above.
namespace bareiss {

struct IntegerEchelon {
    std::vector<std::vector<Integer>> rows;  // upper echelon, fraction-free
    std::vector<std::size_t> pivots;
};

IntegerEchelon eliminate(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
/// Kernel basis as primitive integer vectors (not echelonized).
std::vector<RationalVector> kernel_vectors(const RationalMatrix& m);

}  // namespace bareiss

}  // namespace apolar
