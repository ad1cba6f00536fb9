#pragma once

#include "blueprint/complex.hpp"
#include "blueprint/matrix.hpp"
#include "blueprint/rational.hpp"

#include <optional>
#include <vector>

namespace blueprint {

/// Coordinates for the vertices 0..n-1 in Q^d.
class Realization {
public:
    Realization() = default;
    /// Throws Error{DimensionMismatch} if some vector does not have length d.
    Realization(int d, std::vector<Vector> coords);

    int dimension() const noexcept { return d_; }
    std::size_t size() const noexcept { return coords_.size(); }
    const Vector& operator[](Vertex v) const { return coords_.at(static_cast<std::size_t>(v)); }
    const std::vector<Vector>& coordinates() const noexcept { return coords_; }
    /// Throws Error{DimensionMismatch} unless every vertex of c has coordinates.
    void require_covers(const SimplicialComplex& c) const;

    bool operator==(const Realization&) const = default;

private:
    int d_ = 0;
    std::vector<Vector> coords_;
};

/// Normal of a linear hyperplane: integer entries, gcd 1, first nonzero positive.
class HyperplaneNormal {
public:
    /// Rescales any nonzero rational vector to canonical form.
    explicit HyperplaneNormal(const Vector& direction);

    const Vector& normal() const noexcept { return normal_; }
    auto operator<=>(const HyperplaneNormal&) const = default;

private:
    Vector normal_;
};

struct ProperCheck {
    bool proper = true;
    std::optional<Face> witness;  // first face (by dimension, then lex) spanning too little
};

ProperCheck is_proper(const SimplicialComplex& c, const Realization& r);
std::size_t span_rank(const std::vector<Vector>& vectors);
bool on_hyperplane(const Realization& r, const HyperplaneNormal& h, Vertex v);

/// Orthogonal projection of every vertex onto span(sigma)^⊥, expressed in the
/// ambient coordinates. Throws Error{DegenerateFace} if sigma's vectors are dependent.
Realization project_link(const Realization& r, const Face& sigma);
/// Orthogonal (not normalised) rational basis of span(sigma)^⊥.
std::vector<Vector> complement_basis(const Realization& r, const Face& sigma);

Vector cross(const Vector& a, const Vector& b);

/// Rational orthogonal projection of v onto the orthogonal complement of the
/// span of an orthogonal family.
Vector project_away(const Vector& v, const std::vector<Vector>& orthogonal_family);

}  // namespace blueprint
