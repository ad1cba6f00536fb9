#include "blueprint/examples.hpp"

#include "blueprint/error.hpp"

#include <string>

namespace blueprint {

namespace {

constexpr int kPlacementAttempts = 64;

Vector random_point(Rng& rng, std::int64_t bound) {
    return rng.integer_vector(3, bound);
}

Vector positive_combination(Rng& rng, const Realization& r, const Face& f, std::int64_t bound) {
    Vector out(3);
    for (Vertex v : f) {
        const Rational weight(static_cast<long>(rng.integer(1, bound)));
        for (std::size_t i = 0; i < 3; ++i) out[i] += weight * r[v][i];
    }
    return out;
}

std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

Instance tetrahedron() {
    const auto c = SimplicialComplex::simplex_boundary(4, Face{0, 1, 2, 3});
    Realization r(3, {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
    return {c, r, numbered_labels(4)};
}

Instance octahedron() {
    // +e1, -e1, +e2, -e2, +e3, -e3; antipodal pairs are the non-edges.
    std::vector<Face> facets;
    for (Vertex a : {0, 1})
        for (Vertex b : {2, 3})
            for (Vertex c : {4, 5}) facets.push_back(Face{a, b, c});
    std::vector<Vector> coords;
    for (std::size_t axis = 0; axis < 3; ++axis) {
        for (int sign : {1, -1}) {
            Vector v(3);
            v[axis] = sign;
            coords.push_back(v);
        }
    }
    return {SimplicialComplex(6, facets), Realization(3, coords), {"+e1", "-e1", "+e2", "-e2", "+e3", "-e3"}};
}

Instance ahl_bad_sphere(const ExampleSpec& spec) {
    const SimplicialComplex sigma_prime = subdivided_tetrahedron();
    const std::vector<Face> triangles = SimplicialComplex::simplex_boundary(4, Face{0, 1, 2, 3}).facets();
    Rng rng(spec.seed);
    for (int attempt = 0; attempt < kPlacementAttempts; ++attempt) {
        std::vector<Vector> coords;
        for (int i = 0; i < 4; ++i) {
            Vector v = rng.integer_vector(2, spec.coordinate_bound);
            v.emplace_back(0);
            coords.push_back(std::move(v));
        }
        Realization planar(3, coords);
        for (const Face& t : triangles) {
            if (spec.placement == Placement::InSpan) {
                coords.push_back(positive_combination(rng, planar, t, spec.coordinate_bound));
            } else {
                Vector p = random_point(rng, spec.coordinate_bound);
                if (sgn(p[2]) == 0) p[2] = 1;
                coords.push_back(std::move(p));
            }
        }
        Realization r(3, std::move(coords));
        if (is_proper(sigma_prime, r).proper) {
            return {sigma_prime, r, {"1", "2", "3", "4", "1'", "2'", "3'", "4'"}};
        }
    }
    throw Error(ErrorCode::PropernessFailedAfterRetries,
                "no proper placement of the subdivided tetrahedron with the requested placement");
}

// Flatten the link of some vertex into the plane z = 0 so that the link cycle is
// an equator; tries vertices in order until the result is proper.
bool flatten_some_link(const SimplicialComplex& c, std::vector<Vector>& coords, Rng& rng, std::int64_t bound) {
    for (Vertex v : c.vertices()) {
        std::vector<Vector> trial = coords;
        const SimplicialComplex lk = link(c, Face{v});
        for (const Face& f : lk.faces(0)) {
            Vector p = rng.integer_vector(2, bound);
            p.emplace_back(0);
            trial[static_cast<std::size_t>(f[0])] = std::move(p);
        }
        if (is_proper(c, Realization(3, trial)).proper) {
            coords = std::move(trial);
            return true;
        }
    }
    return false;
}

Instance random_sphere(const ExampleSpec& spec) {
    const Rng root(spec.seed);
    for (int attempt = 0; attempt < kPlacementAttempts; ++attempt) {
        Rng rng = root.split(static_cast<std::uint64_t>(attempt));
        SimplicialComplex c = SimplicialComplex::simplex_boundary(4, Face{0, 1, 2, 3});
        std::vector<Vector> coords;
        for (int i = 0; i < 4; ++i) coords.push_back(random_point(rng, spec.coordinate_bound));
        for (int s = 0; s < spec.subdivisions; ++s) {
            std::vector<Face> candidates = c.faces(1);
            candidates.insert(candidates.end(), c.faces(2).begin(), c.faces(2).end());
            const Face& f = candidates[static_cast<std::size_t>(
                rng.integer(0, static_cast<std::int64_t>(candidates.size()) - 1))];
            const Realization current(3, coords);
            coords.push_back(spec.placement == Placement::InSpan
                                 ? positive_combination(rng, current, f, spec.coordinate_bound)
                                 : random_point(rng, spec.coordinate_bound));
            c = stellar_subdivide(c, f, c.groundset_size());
        }
        if (spec.planar_link && !flatten_some_link(c, coords, rng, spec.coordinate_bound)) continue;
        Realization r(3, std::move(coords));
        if (is_proper(c, r).proper) return {c, r, numbered_labels(c.groundset_size())};
    }
    throw Error(ErrorCode::PropernessFailedAfterRetries, "no proper random sphere for seed " + std::to_string(spec.seed));
}

}  // namespace

std::string Instance::label(Vertex v) const {
    const auto i = static_cast<std::size_t>(v);
    return i < labels.size() ? labels[i] : std::to_string(v);
}

ExampleName parse_example_name(std::string_view name) {
    if (name == "tetrahedron") return ExampleName::Tetrahedron;
    if (name == "octahedron") return ExampleName::Octahedron;
    if (name == "ahl-bad-sphere" || name == "ahl") return ExampleName::AhlBadSphere;
    if (name == "random-sphere" || name == "random") return ExampleName::RandomSphere;
    throw Error(ErrorCode::WrongInput, "unknown example '" + std::string(name) + "'");
}

std::string_view to_string(ExampleName name) {
    switch (name) {
    case ExampleName::Tetrahedron: return "tetrahedron";
    case ExampleName::Octahedron: return "octahedron";
    case ExampleName::AhlBadSphere: return "ahl-bad-sphere";
    case ExampleName::RandomSphere: return "random-sphere";
    }
    return "unknown";
}

Placement parse_placement(std::string_view name) {
    if (name == "off-plane") return Placement::OffPlane;
    if (name == "in-span") return Placement::InSpan;
    throw Error(ErrorCode::WrongInput, "unknown placement '" + std::string(name) + "'");
}

Instance build(const ExampleSpec& spec) {
    switch (spec.name) {
    case ExampleName::Tetrahedron: return tetrahedron();
    case ExampleName::Octahedron: return octahedron();
    case ExampleName::AhlBadSphere: return ahl_bad_sphere(spec);
    case ExampleName::RandomSphere: return random_sphere(spec);
    }
    throw Error(ErrorCode::WrongInput, "unknown example");
}

SimplicialComplex subdivided_tetrahedron() {
    const SimplicialComplex sigma = SimplicialComplex::simplex_boundary(4, Face{0, 1, 2, 3});
    SimplicialComplex c = sigma;
    for (const Face& t : sigma.facets()) {
        c = stellar_subdivide(c, t, c.groundset_size());
    }
    return c;
}

SimplicialComplex ahl_subcomplex(const SimplicialComplex& sigma_prime) {
    if (!(sigma_prime == subdivided_tetrahedron())) {
        throw Error(ErrorCode::WrongInput, "expected the tetrahedron boundary subdivided at every triangle");
    }
    const SimplicialComplex sigma(8, SimplicialComplex::simplex_boundary(4, Face{0, 1, 2, 3}).facets());
    return intersection(sigma, sigma_prime);
}

}  // namespace blueprint
