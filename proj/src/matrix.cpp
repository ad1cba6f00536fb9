#include "blueprint/matrix.hpp"

#include "blueprint/error.hpp"

#include <string>

namespace blueprint {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::ShapeMismatch, what);
}

// v -= factor * row, visiting only nonzero entries of row.
void subtract_multiple(Vector& v, const Rational& factor, const Vector& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (sgn(row[j]) != 0) v[j] -= factor * row[j];
    }
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        require(columns[c].size() == rows, "column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Vector> Matrix::columns() const {
    std::vector<Vector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require(cols_ == rhs.rows_, "product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs(k, j);
                if (sgn(b) != 0) out(i, j) += a * b;
            }
        }
    }
    return out;
}

Vector Matrix::operator*(const Vector& v) const {
    require(cols_ == v.size(), "matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            if (sgn(v[k]) != 0 && sgn((*this)(i, k)) != 0) out[i] += (*this)(i, k) * v[k];
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "sum shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

Matrix Matrix::scaled(const Rational& factor) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= factor;
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), "hconcat row mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require(a.cols() == b.cols(), "vstack column mismatch");
    Matrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t r = 0; r < a.rows(); ++r) out(r, c) = a(r, c);
        for (std::size_t r = 0; r < b.rows(); ++r) out(a.rows() + r, c) = b(r, c);
    }
    return out;
}

bool EchelonBasis::insert(Vector v) {
    require(v.size() == ambient_, "vector length does not match ambient dimension");
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < v.size() && sgn(v[p]) == 0) ++p;
    if (p == v.size()) return false;
    const Rational inv = 1 / v[p];
    for (auto& x : v) {
        if (sgn(x) != 0) x *= inv;
    }
    for (auto& row : rows_) {
        if (sgn(row[p]) != 0) {
            const Rational factor = row[p];
            subtract_multiple(row, factor, v);
        }
    }
    if (row_of_pivot_.size() != ambient_) row_of_pivot_.assign(ambient_, std::nullopt);
    row_of_pivot_[p] = rows_.size();
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

Vector EchelonBasis::reduce(Vector v) const {
    require(v.size() == ambient_, "vector length does not match ambient dimension");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (sgn(v[p]) != 0) {
            const Rational factor = v[p];
            subtract_multiple(v, factor, rows_[i]);
        }
    }
    return v;
}

bool EchelonBasis::contains(const Vector& v) const {
    return blueprint::is_zero(reduce(v));
}

bool EchelonBasis::is_pivot(std::size_t coordinate) const {
    return coordinate < row_of_pivot_.size() && row_of_pivot_[coordinate].has_value();
}

RowEchelon reduced_row_echelon(Matrix m) {
    RowEchelon out;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        std::size_t pivot = next_row;
        while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != next_row) {
            for (std::size_t j = 0; j < m.cols(); ++j) swap(m(pivot, j), m(next_row, j));
        }
        const Rational inv = 1 / m(next_row, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
            if (sgn(m(next_row, j)) != 0) m(next_row, j) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == next_row || sgn(m(r, c)) == 0) continue;
            const Rational factor = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (sgn(m(next_row, j)) != 0) m(r, j) -= factor * m(next_row, j);
            }
        }
        out.pivot_columns.push_back(c);
        ++next_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) {
    // Forward elimination on sparse rows; the pivot for each column is the
    // candidate row with the fewest nonzeros (ties by index), which limits fill-in.
    const Matrix& a = m.rows() <= m.cols() ? m : m.transpose();
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (sgn(a(r, c)) != 0) rows[r].emplace_back(c, a(r, c));
        }
    }
    std::vector<bool> used(rows.size(), false);
    std::size_t result = 0;
    for (std::size_t c = 0; c < a.cols() && result < rows.size(); ++c) {
        std::optional<std::size_t> pivot;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty() || rows[r].front().first != c) continue;
            if (!pivot || rows[r].size() < rows[*pivot].size()) pivot = r;
        }
        if (!pivot) continue;
        used[*pivot] = true;
        ++result;
        const auto& prow = rows[*pivot];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r].empty() || rows[r].front().first != c) continue;
            const Rational factor = rows[r].front().second / prow.front().second;
            std::vector<std::pair<std::size_t, Rational>> merged;
            merged.reserve(rows[r].size() + prow.size());
            auto i = rows[r].begin() + 1;
            auto j = prow.begin() + 1;
            while (i != rows[r].end() || j != prow.end()) {
                if (j == prow.end() || (i != rows[r].end() && i->first < j->first)) {
                    merged.push_back(std::move(*i++));
                } else if (i == rows[r].end() || j->first < i->first) {
                    merged.emplace_back(j->first, -factor * j->second);
                    ++j;
                } else {
                    Rational v = i->second - factor * j->second;
                    if (sgn(v) != 0) merged.emplace_back(i->first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            rows[r] = std::move(merged);
        }
    }
    return result;
}

Matrix kernel_basis(const Matrix& m) {
    const RowEchelon e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector x(m.cols());
        x[f] = 1;
        for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) x[e.pivot_columns[i]] = -e.reduced(i, f);
        basis.push_back(std::move(x));
    }
    return Matrix::from_columns(basis, m.cols());
}

Matrix column_space_basis(const Matrix& m) {
    const RowEchelon e = reduced_row_echelon(m);
    std::vector<Vector> cols;
    for (auto c : e.pivot_columns) cols.push_back(m.column(c));
    return Matrix::from_columns(cols, m.rows());
}

bool column_space_contains(const Matrix& space, const Matrix& vectors) {
    return rank(hconcat(space, vectors)) == rank(space);
}

bool same_column_space(const Matrix& a, const Matrix& b) {
    const std::size_t ra = rank(a);
    return ra == rank(b) && rank(hconcat(a, b)) == ra;
}

std::size_t intersection_dimension(const Matrix& a, const Matrix& b) {
    return rank(a) + rank(b) - rank(hconcat(a, b));
}

Matrix intersection_basis(const Matrix& a, const Matrix& b) {
    const Matrix ker = kernel_basis(hconcat(a, b.scaled(-1)));
    Matrix xs(a.cols(), ker.cols());
    for (std::size_t c = 0; c < ker.cols(); ++c)
        for (std::size_t r = 0; r < a.cols(); ++r) xs(r, c) = ker(r, c);
    return column_space_basis(a * xs);
}

}  // namespace blueprint
