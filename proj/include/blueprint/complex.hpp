#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <vector>

namespace blueprint {

using Vertex = int;

/// A simplex on the groundset, stored as a strictly increasing vertex list.
class Face {
public:
    Face() = default;
    /// Sorts the input; throws Error{InvalidFace} on duplicates or negative ids.
    explicit Face(std::vector<Vertex> vertices);
    Face(std::initializer_list<Vertex> vertices) : Face(std::vector<Vertex>(vertices)) {}

    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    bool contains(Vertex v) const;
    bool is_subset_of(const Face& other) const;
    Face without(Vertex v) const;
    Face with(Vertex v) const;
    Face minus(const Face& other) const;
    Face join(const Face& other) const;

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    auto begin() const noexcept { return vertices_.begin(); }
    auto end() const noexcept { return vertices_.end(); }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }

    auto operator<=>(const Face&) const = default;

private:
    std::vector<Vertex> vertices_;
};

/// Abstract simplicial complex on the groundset {0, ..., n-1}, stored by its
/// inclusion-maximal faces. A complex without facets is the void complex (it
/// does not even contain the empty face).
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Non-maximal inputs are absorbed into the facets that contain them.
    SimplicialComplex(int n, std::vector<Face> facets);

    static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
    /// Boundary of the simplex on the given vertices.
    static SimplicialComplex simplex_boundary(int n, const Face& simplex);

    int groundset_size() const noexcept { return n_; }
    const std::vector<Face>& facets() const noexcept { return facets_; }
    bool is_void() const noexcept { return facets_.empty(); }
    /// -1 for {∅}; -2 for the void complex.
    int dimension() const noexcept { return dimension_; }
    bool is_pure() const;

    bool contains(const Face& face) const { return all_faces_.count(face) != 0; }
    /// All k-faces, lexicographically sorted; k = -1 yields the empty face.
    const std::vector<Face>& faces(int k) const;
    std::vector<Vertex> vertices() const;
    /// (f_0, f_1, ..., f_dim).
    std::vector<std::size_t> f_vector() const;
    long euler_characteristic() const;
    bool is_subcomplex_of(const SimplicialComplex& other) const;

    bool operator==(const SimplicialComplex& other) const {
        return n_ == other.n_ && facets_ == other.facets_;
    }

private:
    int n_ = 0;
    int dimension_ = -2;
    std::vector<Face> facets_;
    std::vector<std::vector<Face>> faces_by_dim_;  // index k+1
    std::set<Face> all_faces_;
};

SimplicialComplex star(const SimplicialComplex& c, const Face& s);
SimplicialComplex link(const SimplicialComplex& c, const Face& s);
/// Maximal subcomplex whose faces avoid containing s.
SimplicialComplex deletion(const SimplicialComplex& c, const Face& s);
/// Deletes each vertex of the list in turn.
SimplicialComplex delete_vertices(const SimplicialComplex& c, const std::vector<Vertex>& vertices);
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);
/// Subcomplex generated by the codimension-one faces lying in exactly one facet.
SimplicialComplex boundary(const SimplicialComplex& c);
/// (c - s) ∪ v * (st_s c - s); the new vertex must be the next groundset id.
SimplicialComplex stellar_subdivide(const SimplicialComplex& c, const Face& s, Vertex new_vertex);

enum class SurfaceTag { Sphere2, Disk2, Empty, Other };

struct SurfaceKind {
    SurfaceTag tag = SurfaceTag::Other;
    /// Present iff tag == Disk2. Starts at the least vertex and continues
    /// towards its smaller boundary neighbour.
    std::optional<std::vector<Vertex>> boundary_cycle;
};

SurfaceKind classify_surface(const SimplicialComplex& c);
/// Edge-connected pieces of a pure 2-dimensional complex, ordered by least vertex.
/// Throws Error{NotDisklike} if a piece is not a 2-disk.
std::vector<SimplicialComplex> split_into_disks(const SimplicialComplex& c);

/// Neighbours of v along the 1-skeleton of c.
std::vector<Vertex> neighbours(const SimplicialComplex& c, Vertex v);

}  // namespace blueprint
