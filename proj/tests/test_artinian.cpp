#include "doctest.h"
#include "oracles.hpp"

#include "blueprint/artinian.hpp"
#include "blueprint/error.hpp"
#include "blueprint/examples.hpp"

using namespace blueprint;

namespace {

Instance example(ExampleName name, std::uint64_t seed = 1, int subdivisions = 6) {
    ExampleSpec spec;
    spec.name = name;
    spec.seed = seed;
    spec.subdivisions = subdivisions;
    return build(spec);
}

std::vector<std::size_t> sizes(std::initializer_list<std::size_t> xs) { return xs; }

}  // namespace

TEST_SUITE("artinian") {

TEST_CASE("monomials") {
    const Monomial m({3, 0, 0});
    CHECK(m.to_string() == "x0^2*x3");
    CHECK(m.degree() == 3);
    CHECK(m.support() == Face{0, 3});
    CHECK(m.exponent(0) == 2);
    CHECK(m.times(1).to_string() == "x0^2*x1*x3");
    CHECK(Monomial().to_string() == "1");
}

TEST_CASE("monomial basis of the tetrahedron boundary") {
    const SimplicialComplex t = SimplicialComplex::simplex_boundary(4, Face{0, 1, 2, 3});
    CHECK(monomial_basis(t, std::nullopt, 0).size() == 1);
    CHECK(monomial_basis(t, std::nullopt, 1).size() == 4);
    // x_i^2 and x_i x_j for all 6 edges.
    CHECK(monomial_basis(t, std::nullopt, 2).size() == 10);
    const auto basis = monomial_basis(t, std::nullopt, 2);
    CHECK(basis.front().to_string() == "x0^2");
    CHECK(std::is_sorted(basis.begin(), basis.end()));
    // Relative to the star of 0 nothing through 0 survives.
    const SimplicialComplex st = star(t, Face{0});
    for (const Monomial& m : monomial_basis(t, st, 2)) CHECK(m.exponent(0) == 0);
    CHECK_THROWS_AS(monomial_basis(st, t, 1), Error);
}

TEST_CASE("fixed examples have the expected Hilbert functions") {
    CHECK(hilbert_function(example(ExampleName::Tetrahedron).complex, example(ExampleName::Tetrahedron).realization) ==
          sizes({1, 1, 1, 1}));
    const Instance oct = example(ExampleName::Octahedron);
    CHECK(hilbert_function(oct.complex, oct.realization) == sizes({1, 3, 3, 1}));
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const Instance ahl = example(ExampleName::AhlBadSphere, seed);
        CHECK(hilbert_function(ahl.complex, ahl.realization) == sizes({1, 5, 5, 1}));
        const SimplicialComplex delta = ahl_subcomplex(ahl.complex);
        CHECK(dim_A(delta, std::nullopt, ahl.realization, 1) == 2);
        CHECK(dim_A(delta, std::nullopt, ahl.realization, 2) == 3);
    }
}

TEST_CASE("dimensions agree with the naive oracle on the small corpus") {
    for (const auto& item : oracle::small_corpus()) {
        CAPTURE(item.name);
        REQUIRE(item.delta.groundset_size() <= 8);
        for (int k = 0; k <= item.r.dimension(); ++k) {
            CAPTURE(k);
            CHECK(dim_A(item.delta, item.gamma, item.r, k) == oracle::naive_dim(item.delta, item.gamma, item.r, k));
        }
    }
}

TEST_CASE("spheres have h-vector dimensions") {
    for (const auto& item : oracle::small_corpus()) {
        if (!item.sphere || item.gamma) continue;
        CAPTURE(item.name);
        const int d = item.r.dimension();
        const auto h = oracle::h_vector(item.delta, d);
        const auto dims = hilbert_function(item.delta, item.r);
        for (int k = 0; k <= d; ++k) CHECK(static_cast<long>(dims[static_cast<std::size_t>(k)]) == h[static_cast<std::size_t>(k)]);
    }
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const Instance in = example(ExampleName::RandomSphere, seed, 10);
        const auto h = oracle::h_vector(in.complex, 3);
        const auto dims = hilbert_function(in.complex, in.realization);
        for (int k = 0; k <= 3; ++k) CHECK(static_cast<long>(dims[static_cast<std::size_t>(k)]) == h[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("presentation bookkeeping") {
    const Instance in = example(ExampleName::RandomSphere, 4, 5);
    for (int k = 0; k <= 3; ++k) {
        const Presentation p(in.complex, std::nullopt, in.realization, k);
        CHECK(p.standard_monomials().size() == p.dim());
        CHECK(p.quotient_matrix() * p.section_matrix() == Matrix::identity(p.dim()));
        CHECK((p.quotient_matrix() * p.relations()).is_zero());
        CHECK(p.relation_rank() == oracle::bareiss_rank(p.relations()));
        for (std::size_t i = 0; i < p.basis().size(); ++i) CHECK(p.index_of(p.basis()[i]) == i);
        CHECK_FALSE(p.index_of(Monomial({0, 0, 0, 0, 0})).has_value());
    }
}

TEST_CASE("presentation errors") {
    const Instance oct = example(ExampleName::Octahedron);
    const SimplicialComplex bad(6, {Face{0, 1, 2}});
    try {
        Presentation(bad, std::nullopt, oct.realization, 1);
        FAIL("expected ImproperRealization");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ImproperRealization);
        CHECK(std::string(e.what()).find("{0,1}") != std::string::npos);
    }
    CHECK_THROWS_AS(Presentation(deletion(oct.complex, Face{0}), oct.complex, oct.realization, 1), Error);
    const Presentation p1(oct.complex, std::nullopt, oct.realization, 1);
    const Presentation p3(oct.complex, std::nullopt, oct.realization, 3);
    try {
        mult_map(p1, p3, LinearForm::variable(6, 0));
        FAIL("expected DegreeMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeMismatch);
    }
}

TEST_CASE("multiplication maps: two rank routes agree") {
    Rng rng(99);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const Instance in = example(ExampleName::RandomSphere, seed, 6);
        const GradedModule module(in.complex, std::nullopt, in.realization);
        for (int t = 0; t < 5; ++t) {
            const LinearForm ell(rng.integer_vector(static_cast<std::size_t>(in.complex.groundset_size()), 50));
            for (int k = 0; k < 3; ++k) {
                const Matrix m = multiplication_matrix(module[k], module[k + 1], ell);
                CHECK(respects_relations(module[k], module[k + 1], m));
                const std::size_t literal = induced_rank(module[k + 1], m);
                CHECK(literal == rank(induced_matrix(module[k], module[k + 1], m)));
                const MultiplicationMap mm = mult_map(module[k], module[k + 1], ell);
                CHECK(mm.rank == literal);
                CHECK(mm.kernel.cols() == module[k].dim() - literal);
                // Kernel vectors map into the relations of the target.
                const Matrix image = m * mm.kernel;
                CHECK(rank(hconcat(module[k + 1].relations(), image)) == module[k + 1].relation_rank());
            }
            CHECK(power_mult_rank(module, ell, 0) ==
                  induced_rank(module[3], multiplication_matrix(module[2], module[3], ell) *
                                              multiplication_matrix(module[1], module[2], ell) *
                                              multiplication_matrix(module[0], module[1], ell)));
        }
    }
}

TEST_CASE("restriction onto the subcomplex: surjective and commutes with multiplication") {
    Rng rng(5);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const Instance ahl = example(ExampleName::AhlBadSphere, seed);
        const SimplicialComplex delta = ahl_subcomplex(ahl.complex);
        const GradedModule big(ahl.complex, std::nullopt, ahl.realization);
        const GradedModule small(delta, std::nullopt, ahl.realization);
        const RestrictionMap r1 = restriction_map(big[1], small[1]);
        const RestrictionMap r2 = restriction_map(big[2], small[2]);
        CHECK(r1.surjective);
        CHECK(r2.surjective);
        CHECK(r1.matrix.rows() == small[1].basis().size());
        for (int t = 0; t < 5; ++t) {
            const LinearForm ell(rng.integer_vector(8, 1000));
            const Matrix down_then_times = multiplication_matrix(small[1], small[2], ell) * r1.matrix;
            const Matrix times_then_down = r2.matrix * multiplication_matrix(big[1], big[2], ell);
            CHECK(induced_matrix(big[1], small[2], down_then_times) == induced_matrix(big[1], small[2], times_then_down));
        }
        CHECK_THROWS_AS(restriction_map(small[1], big[1]), Error);
    }
}

TEST_CASE("Poincare pairing is perfect on spheres") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const Instance in = example(ExampleName::RandomSphere, seed, 5);
        const GradedModule module(in.complex, std::nullopt, in.realization);
        for (int k = 0; k <= 3; ++k) {
            const Matrix pairing = pairing_matrix(module, k);
            CHECK(pairing.rows() == module[k].dim());
            CHECK(pairing.cols() == module[3 - k].dim());
            CHECK(oracle::bareiss_rank(pairing) == module[k].dim());
        }
    }
    const Instance in = example(ExampleName::RandomSphere, 1, 4);
    CHECK_THROWS_AS(pairing_matrix(deletion(in.complex, Face{0}), in.realization, 1), Error);
}

TEST_CASE("star and link modules are isomorphic") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const Instance in = example(ExampleName::RandomSphere, seed, 6);
        for (Vertex v : in.complex.vertices()) {
            for (int k = 0; k <= 1; ++k) {
                const StarLinkIso iso = verify_star_link_iso(in.complex, in.realization, v, k);
                CHECK(iso.holds);
                CHECK(iso.dim_link == iso.dim_star);
                CHECK(iso.rank == iso.dim_star);
            }
        }
    }
}

}
