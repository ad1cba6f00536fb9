#include "doctest.h"

#include "blueprint/artinian.hpp"
#include "blueprint/error.hpp"
#include "blueprint/examples.hpp"

using namespace blueprint;

TEST_SUITE("examples") {

TEST_CASE("names and placements parse") {
    CHECK(parse_example_name("ahl") == ExampleName::AhlBadSphere);
    CHECK(parse_example_name("random-sphere") == ExampleName::RandomSphere);
    CHECK(to_string(ExampleName::Octahedron) == "octahedron");
    CHECK(parse_placement("in-span") == Placement::InSpan);
    CHECK_THROWS_AS(parse_example_name("cube"), Error);
    CHECK_THROWS_AS(parse_placement("sideways"), Error);
}

TEST_CASE("fixed examples") {
    ExampleSpec spec;
    spec.name = ExampleName::Tetrahedron;
    const Instance t = build(spec);
    CHECK(t.complex.f_vector() == std::vector<std::size_t>{4, 6, 4});
    CHECK(is_proper(t.complex, t.realization).proper);
    spec.name = ExampleName::Octahedron;
    const Instance o = build(spec);
    CHECK(o.complex.f_vector() == std::vector<std::size_t>{6, 12, 8});
    CHECK(o.label(0) == "+e1");
    CHECK(o.label(5) == "-e3");
    CHECK(classify_surface(o.complex).tag == SurfaceTag::Sphere2);
}

TEST_CASE("subdivided tetrahedron placement") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        ExampleSpec spec;
        spec.name = ExampleName::AhlBadSphere;
        spec.seed = seed;
        const Instance in = build(spec);
        CHECK(in.complex.f_vector() == std::vector<std::size_t>{8, 18, 12});
        CHECK(classify_surface(in.complex).tag == SurfaceTag::Sphere2);
        CHECK(is_proper(in.complex, in.realization).proper);
        for (Vertex v = 0; v < 4; ++v) CHECK(sgn(in.realization[v][2]) == 0);
        for (Vertex v = 4; v < 8; ++v) CHECK(sgn(in.realization[v][2]) != 0);
        CHECK(in.label(4) == "1'");
        // Same spec, same instance.
        const Instance again = build(spec);
        CHECK(again.realization == in.realization);
    }
    ExampleSpec span;
    span.name = ExampleName::AhlBadSphere;
    span.placement = Placement::InSpan;
    try {
        build(span);
        FAIL("expected PropernessFailedAfterRetries");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PropernessFailedAfterRetries);
    }
}

TEST_CASE("random spheres") {
    for (int s = 0; s <= 10; s += 2) {
        for (auto placement : {Placement::OffPlane, Placement::InSpan}) {
            ExampleSpec spec;
            spec.name = ExampleName::RandomSphere;
            spec.seed = static_cast<std::uint64_t>(s + 1);
            spec.subdivisions = s;
            spec.placement = placement;
            const Instance in = build(spec);
            CHECK(in.complex.groundset_size() == 4 + s);
            CHECK(in.complex.euler_characteristic() == 2);
            CHECK(classify_surface(in.complex).tag == SurfaceTag::Sphere2);
            CHECK(is_proper(in.complex, in.realization).proper);
        }
    }
    ExampleSpec a, b;
    a.name = b.name = ExampleName::RandomSphere;
    a.seed = b.seed = 5;
    CHECK(build(a).complex == build(b).complex);
    CHECK(build(a).realization == build(b).realization);
    b.seed = 6;
    CHECK_FALSE(build(a).realization == build(b).realization);
}

TEST_CASE("planar link option produces a flat vertex link") {
    ExampleSpec spec;
    spec.name = ExampleName::RandomSphere;
    spec.seed = 3;
    spec.subdivisions = 8;
    spec.planar_link = true;
    const Instance in = build(spec);
    CHECK(is_proper(in.complex, in.realization).proper);
    bool flat = false;
    for (Vertex v : in.complex.vertices()) {
        bool all = true;
        for (Vertex u : neighbours(in.complex, v)) all = all && sgn(in.realization[u][2]) == 0;
        flat = flat || all;
    }
    CHECK(flat);
}

}
