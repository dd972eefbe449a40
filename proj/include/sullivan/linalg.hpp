#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace sullivan {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;
    RationalMatrix transpose() const;
    Vector apply(const Vector& v) const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Linearly independent vectors in Q^ambient_dim. Independence is checked on construction.
class SubspaceBasis {
public:
    explicit SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> vectors = {});

    static SubspaceBasis full(std::size_t ambient_dim);

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    std::size_t dim() const noexcept { return vectors_.size(); }
    const std::vector<Vector>& vectors() const noexcept { return vectors_; }
    const Vector& operator[](std::size_t i) const { return vectors_[i]; }

private:
    struct Unchecked {};
    SubspaceBasis(Unchecked, std::size_t ambient_dim, std::vector<Vector> vectors);

    std::size_t ambient_dim_;
    std::vector<Vector> vectors_;

    friend SubspaceBasis kernel_basis(const RationalMatrix& m);
    friend SubspaceBasis image_basis(const RationalMatrix& m);
    friend SubspaceBasis quotient_basis(const SubspaceBasis& sub, const SubspaceBasis& ambient);
};

struct Membership {
    bool member = false;
    Vector coefficients;  // empty unless member
};

std::size_t rank(const RationalMatrix& m);

/// Basis of {v : m v = 0}. One vector per free column, with a 1 in that column.
SubspaceBasis kernel_basis(const RationalMatrix& m);

/// The columns of m at pivot positions; they span the column space.
SubspaceBasis image_basis(const RationalMatrix& m);

Membership image_membership(const SubspaceBasis& basis, const Vector& v);

/// Ambient vectors, taken greedily in order, that complete sub to a basis of span(ambient).
SubspaceBasis quotient_basis(const SubspaceBasis& sub, const SubspaceBasis& ambient);

/// Fraction-free (Bareiss) row echelon form of an integer matrix.
struct IntegerEchelon {
    std::vector<std::vector<Integer>> rows;  // nonzero rows only
    std::vector<std::size_t> pivot_columns;
};

IntegerEchelon bareiss_echelon(std::vector<std::vector<Integer>> a, std::size_t cols);

/// Clears denominators row by row.
std::vector<std::vector<Integer>> to_integer_rows(const RationalMatrix& m);

}  // namespace sullivan
