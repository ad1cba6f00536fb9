#pragma once

#include "blueprint/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace blueprint {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    /// Columns must share a length; `rows` is used when the list is empty.
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;
    std::vector<Vector> columns() const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix scaled(const Rational& factor) const;
    bool is_zero() const;

    bool operator==(const Matrix& rhs) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// [a | b]; row counts must agree.
Matrix hconcat(const Matrix& a, const Matrix& b);
/// a stacked over b; column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);

/// A subspace of Q^m kept in reduced row echelon form. Pivots are taken at the
/// first nonzero coordinate of each inserted vector, so the stored basis only
/// depends on the sequence of inserted vectors.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient = 0) : ambient_(ambient) {}

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<Vector>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Returns true when v enlarged the span.
    bool insert(Vector v);
    /// Coordinates of v after clearing every pivot position.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;

    bool is_pivot(std::size_t coordinate) const;

private:
    std::size_t ambient_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::optional<std::size_t>> row_of_pivot_;
};

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination; pivot in each column is the first remaining row with a
/// nonzero entry there.
RowEchelon reduced_row_echelon(Matrix m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);
/// Independent columns spanning the column space, taken from m's own columns.
Matrix column_space_basis(const Matrix& m);
bool column_space_contains(const Matrix& space, const Matrix& vectors);
bool same_column_space(const Matrix& a, const Matrix& b);
/// dim(col a ∩ col b).
std::size_t intersection_dimension(const Matrix& a, const Matrix& b);
/// Basis (as columns) of col a ∩ col b.
Matrix intersection_basis(const Matrix& a, const Matrix& b);

}  // namespace blueprint
