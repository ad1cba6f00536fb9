#include "doctest.h"
#include "oracles.hpp"

#include "blueprint/equator.hpp"
#include "blueprint/error.hpp"
#include "blueprint/examples.hpp"

using namespace blueprint;

namespace {

Instance example(ExampleName name, std::uint64_t seed = 1, int subdivisions = 6, bool planar = false,
                 Placement placement = Placement::OffPlane) {
    ExampleSpec spec;
    spec.name = name;
    spec.seed = seed;
    spec.subdivisions = subdivisions;
    spec.planar_link = planar;
    spec.placement = placement;
    return build(spec);
}

}  // namespace

TEST_SUITE("equator") {

TEST_CASE("equator of the subdivided tetrahedron lies in z = 0") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Instance in = example(ExampleName::AhlBadSphere, seed);
        const auto eq = find_equator(in.complex, in.realization);
        REQUIRE(eq.has_value());
        CHECK(eq->cycle == std::vector<Vertex>{0, 1, 2});
        CHECK(eq->hyperplane.normal() == Vector{0, 0, 1});
        CHECK(validate_equator(in.complex, in.realization, *eq).empty());
    }
}

TEST_CASE("octahedron equator") {
    const Instance in = example(ExampleName::Octahedron);
    const auto eq = find_equator(in.complex, in.realization);
    REQUIRE(eq.has_value());
    CHECK(eq->cycle == std::vector<Vertex>{0, 2, 1, 3});
    CHECK(eq->hyperplane.normal() == Vector{0, 0, 1});
    const auto shortest = find_equator(in.complex, in.realization, true);
    REQUIRE(shortest.has_value());
    CHECK(shortest->cycle.size() == 4);
    CHECK(validate_equator(in.complex, in.realization, *shortest).empty());
}

TEST_CASE("generic octahedron has no equator") {
    Rng rng(8);
    const Instance oct = example(ExampleName::Octahedron);
    for (int t = 0; t < 10; ++t) {
        const Realization r = oracle::random_proper_realization(oct.complex, 3, rng, 1000);
        CHECK_FALSE(find_equator(oct.complex, r).has_value());
        CHECK(oracle::coplanar_cycles(oct.complex, r, 8).empty());
    }
}

TEST_CASE("validation rejects broken certificates") {
    const Instance in = example(ExampleName::Octahedron);
    const HyperplaneNormal e3({0, 0, 1});
    CHECK(validate_equator(in.complex, in.realization, {{0, 2, 1, 3}, e3}).empty());
    CHECK_FALSE(validate_equator(in.complex, in.realization, {{0, 1, 2}, e3}).empty());     // 0-1 not an edge
    CHECK_FALSE(validate_equator(in.complex, in.realization, {{0, 2, 4}, e3}).empty());     // 4 off the plane
    CHECK_FALSE(validate_equator(in.complex, in.realization, {{0, 2, 0, 3}, e3}).empty());  // repeats
    CHECK_FALSE(validate_equator(in.complex, in.realization, {{0, 2}, e3}).empty());
}

TEST_CASE("search is complete against brute-force cycle enumeration") {
    int with = 0, without = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const bool planar = seed % 3 == 0;
        // On the bare tetrahedron every vertex link is a face, so it cannot be flattened.
        const int subdivisions = static_cast<int>(seed % 7) + (planar ? 1 : 0);
        const Placement placement = seed % 2 == 0 ? Placement::InSpan : Placement::OffPlane;
        ExampleSpec spec;
        spec.name = ExampleName::RandomSphere;
        spec.seed = seed;
        spec.subdivisions = subdivisions;
        spec.planar_link = planar;
        spec.placement = placement;
        spec.coordinate_bound = 100;
        const Instance in = build(spec);
        REQUIRE(in.complex.groundset_size() <= 11);
        const auto eq = find_equator(in.complex, in.realization);
        const auto brute = oracle::coplanar_cycles(in.complex, in.realization, 8);
        CAPTURE(seed);
        CHECK(eq.has_value() == !brute.empty());
        if (eq) {
            CHECK(validate_equator(in.complex, in.realization, *eq).empty());
            const auto shortest = find_equator(in.complex, in.realization, true);
            REQUIRE(shortest.has_value());
            std::size_t best = 99;
            for (const auto& c : brute) best = std::min(best, c.size());
            CHECK(shortest->cycle.size() == best);
            ++with;
        } else {
            ++without;
        }
        CHECK(candidate_normals(in.complex, in.realization).size() == oracle::naive_plane_count(in.complex, in.realization));
    }
    CHECK(with > 0);
    CHECK(without > 0);
}

TEST_CASE("candidate normals are sorted and distinct") {
    const Instance in = example(ExampleName::RandomSphere, 4, 6);
    const auto normals = candidate_normals(in.complex, in.realization);
    CHECK(std::adjacent_find(normals.begin(), normals.end(),
                             [](const auto& a, const auto& b) { return !(a < b); }) == normals.end());
    const Realization flat(2, std::vector<Vector>(10, Vector{1, 1}));
    CHECK_THROWS_AS(find_equator(in.complex, flat), Error);
}

TEST_CASE("main theorem harness") {
    const Instance ahl = example(ExampleName::AhlBadSphere, 1);
    const auto a = verify_main_theorem(ahl.complex, ahl.realization, 1, 50);
    CHECK(a.implication_ok);
    CHECK(a.equator.has_value());
    CHECK_FALSE(a.search.found);
    CHECK_FALSE(a.lefschetz_holds);
    CHECK_FALSE(a.non_sufficiency_witness);

    const Instance oct = example(ExampleName::Octahedron);
    const auto o = verify_main_theorem(oct.complex, oct.realization, 1, 50);
    CHECK(o.implication_ok);
    CHECK(o.equator.has_value());
    CHECK(o.lefschetz_holds);
    CHECK(o.non_sufficiency_witness);

    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const Instance in = example(ExampleName::RandomSphere, seed, 8);
        const auto g = verify_main_theorem(in.complex, in.realization, seed, 50);
        CHECK(g.implication_ok);
        CHECK_FALSE(g.equator.has_value());
        CHECK(g.construction.holds());
    }
}

}
