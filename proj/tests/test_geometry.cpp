#include "doctest.h"
#include "oracles.hpp"

#include "blueprint/error.hpp"
#include "blueprint/examples.hpp"
#include "blueprint/geometry.hpp"

using namespace blueprint;

TEST_SUITE("geometry") {

TEST_CASE("realization dimension checks") {
    CHECK_THROWS_AS(Realization(3, {{1, 2, 3}, {1, 2}}), Error);
    const Realization r(3, {{1, 0, 0}});
    CHECK_THROWS_AS(r.require_covers(SimplicialComplex(2, {Face{0, 1}})), Error);
}

TEST_CASE("hyperplane normals are canonical") {
    CHECK(HyperplaneNormal({0, 0, Rational(-3, 7)}).normal() == Vector{0, 0, 1});
    CHECK(HyperplaneNormal({Rational(-2), Rational(4), Rational(6)}).normal() == Vector{1, -2, -3});
    CHECK(HyperplaneNormal({Rational(1, 2), Rational(1, 3), 0}).normal() == Vector{3, 2, 0});
    CHECK(HyperplaneNormal({2, 2, 0}) == HyperplaneNormal({-5, -5, 0}));
    CHECK_THROWS_AS(HyperplaneNormal({0, 0, 0}), Error);
}

TEST_CASE("span rank agrees with minors") {
    Rng rng(17);
    for (int t = 0; t < 300; ++t) {
        const auto count = static_cast<std::size_t>(rng.integer(1, 5));
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < count; ++i) vs.push_back(rng.integer_vector(3, 2));
        if (t % 4 == 0 && vs.size() >= 3) {
            for (std::size_t j = 0; j < 3; ++j) vs[2][j] = vs[0][j] + vs[1][j];
        }
        CHECK(span_rank(vs) == oracle::minor_rank(vs));
    }
}

TEST_CASE("properness on the octahedron") {
    ExampleSpec spec;
    spec.name = ExampleName::Octahedron;
    const Instance in = build(spec);
    CHECK(is_proper(in.complex, in.realization).proper);
    // Antipodal vertices on a common edge would be a degenerate edge.
    const SimplicialComplex bad(6, {Face{0, 1, 2}});
    const auto check = is_proper(bad, in.realization);
    CHECK_FALSE(check.proper);
    REQUIRE(check.witness);
    CHECK(*check.witness == Face{0, 1});
    // Faces of dimension d are not constrained.
    const Realization zero_free(1, {{1}, {2}});
    CHECK(is_proper(SimplicialComplex(2, {Face{0, 1}}), zero_free).proper);
    const Realization with_zero(3, {{0, 0, 0}, {1, 0, 0}});
    CHECK(*is_proper(SimplicialComplex(2, {Face{0, 1}}), with_zero).witness == Face{0});
}

TEST_CASE("hyperplane incidence") {
    const Realization r(3, {{1, 2, 0}, {1, 2, 3}});
    const HyperplaneNormal e3({0, 0, 1});
    CHECK(on_hyperplane(r, e3, 0));
    CHECK_FALSE(on_hyperplane(r, e3, 1));
}

TEST_CASE("link projection is orthogonal to the face") {
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        std::vector<Vector> coords;
        for (int i = 0; i < 5; ++i) coords.push_back(rng.integer_vector(3, 9));
        const Realization r(3, coords);
        if (span_rank({coords[0], coords[1]}) < 2) continue;
        const Realization p = project_link(r, Face{0});
        CHECK(p.dimension() == 3);
        for (int v = 0; v < 5; ++v) {
            CHECK(sgn(dot(p[v], coords[0])) == 0);
            // v - π(v) is parallel to the face vector.
            Vector diff = coords[static_cast<std::size_t>(v)];
            for (std::size_t i = 0; i < 3; ++i) diff[i] -= p[v][i];
            CHECK(span_rank({diff, coords[0]}) <= 1);
        }
        const Realization p2 = project_link(r, Face{0, 1});
        for (int v = 0; v < 5; ++v) {
            CHECK(sgn(dot(p2[v], coords[0])) == 0);
            CHECK(sgn(dot(p2[v], coords[1])) == 0);
        }
        const auto comp = complement_basis(r, Face{0});
        REQUIRE(comp.size() == 2);
        CHECK(sgn(dot(comp[0], comp[1])) == 0);
        CHECK(sgn(dot(comp[0], coords[0])) == 0);
    }
    const Realization r(3, {{1, 0, 0}, {2, 0, 0}});
    CHECK_THROWS_AS(project_link(r, Face{0, 1}), Error);
}

TEST_CASE("cross product") {
    CHECK(cross({1, 0, 0}, {0, 1, 0}) == Vector{0, 0, 1});
    CHECK_THROWS_AS(cross({1, 0}, {0, 1}), Error);
}

}
