#include "doctest.h"
#include "oracles.hpp"

#include "blueprint/error.hpp"
#include "blueprint/matrix.hpp"
#include "blueprint/rational.hpp"

using namespace blueprint;

namespace {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
    Matrix a(rows, inner), b(inner, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < inner; ++j) a(i, j) = Rational(static_cast<long>(rng.integer(-5, 5)), static_cast<unsigned long>(rng.integer(1, 4)));
    for (std::size_t i = 0; i < inner; ++i)
        for (std::size_t j = 0; j < cols; ++j) b(i, j) = Rational(static_cast<long>(rng.integer(-5, 5)));
    return a * b;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("parse and format rationals") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(format_rational(Rational(-4, 6)) == "-2/3");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("rng is deterministic and substreams differ") {
    Rng a(42), b(42);
    CHECK(a.integer_vector(5, 100) == b.integer_vector(5, 100));
    Rng c = Rng(42).split(1), d = Rng(42).split(2);
    CHECK(c.integer_vector(8, 1000000) != d.integer_vector(8, 1000000));
    for (int i = 0; i < 100; ++i) CHECK(a.nonzero_integer(3) != 0);
}

TEST_CASE("rank agrees with the Bareiss oracle") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        const auto rows = static_cast<std::size_t>(rng.integer(1, 9));
        const auto cols = static_cast<std::size_t>(rng.integer(1, 9));
        const auto inner = static_cast<std::size_t>(rng.integer(0, 6));
        const Matrix m = random_matrix(rng, rows, cols, inner);
        CHECK(rank(m) == oracle::bareiss_rank(m));
        CHECK(reduced_row_echelon(m).rank() == rank(m));
        CHECK(rank(m.transpose()) == rank(m));
    }
}

TEST_CASE("kernel basis is a basis of the kernel") {
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        const auto rows = static_cast<std::size_t>(rng.integer(1, 7));
        const auto cols = static_cast<std::size_t>(rng.integer(1, 7));
        const Matrix m = random_matrix(rng, rows, cols, static_cast<std::size_t>(rng.integer(0, 5)));
        const Matrix k = kernel_basis(m);
        CHECK(k.rows() == cols);
        CHECK(k.cols() == cols - oracle::bareiss_rank(m));
        CHECK((m * k).is_zero());
        CHECK(oracle::bareiss_rank(k) == k.cols());
    }
}

TEST_CASE("echelon basis tracks the span") {
    Rng rng(3);
    EchelonBasis basis(6);
    std::vector<Vector> inserted;
    for (int t = 0; t < 12; ++t) {
        Vector v = rng.integer_vector(6, 3);
        if (t % 3 == 2 && inserted.size() >= 2) {
            for (std::size_t i = 0; i < 6; ++i) v[i] = inserted[0][i] - 2 * inserted[1][i];
        }
        const std::size_t before = oracle::bareiss_rank(inserted);
        inserted.push_back(v);
        const bool grew = basis.insert(v);
        CHECK(grew == (oracle::bareiss_rank(inserted) > before));
        CHECK(basis.rank() == oracle::bareiss_rank(inserted));
        CHECK(basis.contains(v));
        CHECK(is_zero(basis.reduce(v)));
    }
    for (std::size_t i = 0; i < basis.rows().size(); ++i) {
        const auto p = basis.pivots()[i];
        CHECK(basis.rows()[i][p] == 1);
        for (std::size_t j = 0; j < basis.rows().size(); ++j)
            if (j != i) CHECK(sgn(basis.rows()[j][p]) == 0);
    }
}

TEST_CASE("column space relations") {
    Matrix a = Matrix::from_columns({{1, 0, 0}, {0, 1, 0}}, 3);
    Matrix b = Matrix::from_columns({{1, 1, 0}, {0, 1, 1}}, 3);
    CHECK(intersection_dimension(a, b) == 1);
    const Matrix meet = intersection_basis(a, b);
    REQUIRE(meet.cols() == 1);
    CHECK(column_space_contains(a, meet));
    CHECK(column_space_contains(b, meet));
    CHECK(same_column_space(a, Matrix::from_columns({{1, 1, 0}, {1, -1, 0}}, 3)));
    CHECK_FALSE(same_column_space(a, b));
    CHECK(column_space_basis(hconcat(a, a)).cols() == 2);
    CHECK(vstack(a, a).rows() == 6);
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), Error);
    CHECK_THROWS_AS(hconcat(Matrix(2, 1), Matrix(3, 1)), Error);
}

}
