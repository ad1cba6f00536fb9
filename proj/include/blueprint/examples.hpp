#pragma once

#include "blueprint/complex.hpp"
#include "blueprint/geometry.hpp"
#include "blueprint/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace blueprint {

/// A complex with coordinates and user-facing vertex labels (side table indexed
/// by vertex id).
struct Instance {
    SimplicialComplex complex;
    Realization realization;
    std::vector<std::string> labels;

    std::string label(Vertex v) const;
};

enum class ExampleName { Tetrahedron, Octahedron, AhlBadSphere, RandomSphere };

/// Where subdivision vertices go: a generic point off the coordinate plane, or
/// a generic positive combination inside the linear span of the subdivided face.
enum class Placement { OffPlane, InSpan };

struct ExampleSpec {
    ExampleName name = ExampleName::Tetrahedron;
    std::uint64_t seed = 0;
    int subdivisions = 6;                       // RandomSphere
    Placement placement = Placement::OffPlane;  // AhlBadSphere, RandomSphere
    bool planar_link = false;                   // RandomSphere: flatten one vertex link into z = 0
    std::int64_t coordinate_bound = kDefaultCoefficientBound;
};

ExampleName parse_example_name(std::string_view name);
std::string_view to_string(ExampleName name);
Placement parse_placement(std::string_view name);

/// Deterministic in the spec. Throws Error{PropernessFailedAfterRetries} if no
/// proper placement is found.
Instance build(const ExampleSpec& spec);

/// Σ ∩ Σ' for the subdivided tetrahedron Σ' built by AhlBadSphere: the complete
/// graph on the four original vertices. Throws Error{WrongInput} for other input.
SimplicialComplex ahl_subcomplex(const SimplicialComplex& sigma_prime);

/// Σ' itself: the tetrahedron boundary on {0,1,2,3} subdivided at every triangle
/// in lexicographic order, new vertices 4..7.
SimplicialComplex subdivided_tetrahedron();

}  // namespace blueprint
