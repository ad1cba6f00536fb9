#include "blueprint/complex.hpp"

#include "blueprint/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace blueprint {

namespace {

std::string describe(const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + "}";
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

enum class GraphShape { Cycle, Path, Other };

// Shape of a graph given by an edge list (used for vertex links of surfaces).
GraphShape graph_shape(const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (edges.empty()) return GraphShape::Other;
    std::map<Vertex, int> degree;
    std::map<Vertex, std::size_t> index;
    for (auto [a, b] : edges) {
        ++degree[a];
        ++degree[b];
    }
    for (auto& [v, d] : degree) index.emplace(v, index.size());
    UnionFind uf(index.size());
    for (auto [a, b] : edges) uf.unite(index[a], index[b]);
    for (auto& [v, i] : index) {
        if (uf.find(i) != 0) return GraphShape::Other;
    }
    int ones = 0;
    for (auto& [v, d] : degree) {
        if (d == 1) ++ones;
        else if (d != 2) return GraphShape::Other;
    }
    if (ones == 0) return edges.size() >= 3 ? GraphShape::Cycle : GraphShape::Other;
    return ones == 2 ? GraphShape::Path : GraphShape::Other;
}

struct SurfaceData {
    std::vector<Vertex> vertices;
    std::map<Face, int> edge_triangles;  // edge -> number of triangles containing it
    std::map<Vertex, std::vector<std::pair<Vertex, Vertex>>> vertex_links;
    bool connected = true;
};

SurfaceData analyse_surface(const SimplicialComplex& c) {
    SurfaceData data;
    data.vertices = c.vertices();
    for (const Face& t : c.facets()) {
        for (std::size_t i = 0; i < 3; ++i) {
            ++data.edge_triangles[t.without(t[i])];
            const Face rest = t.without(t[i]);
            data.vertex_links[t[i]].emplace_back(rest[0], rest[1]);
        }
    }
    std::map<Vertex, std::size_t> index;
    for (Vertex v : data.vertices) index.emplace(v, index.size());
    UnionFind uf(index.size());
    for (auto& [e, count] : data.edge_triangles) uf.unite(index[e[0]], index[e[1]]);
    for (auto& [v, i] : index) {
        if (uf.find(i) != 0) data.connected = false;
    }
    return data;
}

void require_pure_2d(const SimplicialComplex& c) {
    for (const Face& f : c.facets()) {
        if (f.dimension() != 2) {
            throw Error(ErrorCode::NotPure2Dimensional, "facet " + describe(f) + " is not a triangle");
        }
    }
}

bool is_empty_surface(const SimplicialComplex& c) {
    return c.is_void() || (c.facets().size() == 1 && c.facets().front().empty());
}

}  // namespace

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw Error(ErrorCode::InvalidFace, "repeated vertex in face");
    }
    if (!vertices_.empty() && vertices_.front() < 0) {
        throw Error(ErrorCode::InvalidFace, "negative vertex identifier");
    }
}

bool Face::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

Face Face::without(Vertex v) const {
    Face f;
    for (Vertex u : vertices_) {
        if (u != v) f.vertices_.push_back(u);
    }
    return f;
}

Face Face::with(Vertex v) const {
    if (contains(v)) return *this;
    Face f = *this;
    f.vertices_.insert(std::lower_bound(f.vertices_.begin(), f.vertices_.end(), v), v);
    return f;
}

Face Face::minus(const Face& other) const {
    Face f;
    std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                        std::back_inserter(f.vertices_));
    return f;
}

Face Face::join(const Face& other) const {
    Face f;
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                   std::back_inserter(f.vertices_));
    return f;
}

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> facets) : n_(n) {
    for (const Face& f : facets) {
        if (!f.empty() && f.vertices().back() >= n) {
            throw Error(ErrorCode::InvalidFace,
                        "facet " + describe(f) + " uses a vertex outside the groundset of size " + std::to_string(n));
        }
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < facets.size() && maximal; ++j) {
            if (i != j && facets[i].size() < facets[j].size() && facets[i].is_subset_of(facets[j])) maximal = false;
        }
        if (maximal) facets_.push_back(facets[i]);
    }

    for (const Face& f : facets_) {
        dimension_ = std::max(dimension_, f.dimension());
        const std::size_t k = f.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            std::vector<Vertex> sub;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (std::size_t{1} << i)) sub.push_back(f[i]);
            }
            all_faces_.insert(Face(std::move(sub)));
        }
    }
    faces_by_dim_.assign(static_cast<std::size_t>(dimension_ + 2 > 0 ? dimension_ + 2 : 0), {});
    for (const Face& f : all_faces_) faces_by_dim_[static_cast<std::size_t>(f.dimension() + 1)].push_back(f);
}

SimplicialComplex SimplicialComplex::simplex_boundary(int n, const Face& simplex) {
    std::vector<Face> facets;
    for (Vertex v : simplex) facets.push_back(simplex.without(v));
    return SimplicialComplex(n, std::move(facets));
}

bool SimplicialComplex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Face& f) { return f.dimension() == dimension_; });
}

const std::vector<Face>& SimplicialComplex::faces(int k) const {
    static const std::vector<Face> none;
    if (k < -1 || k + 1 >= static_cast<int>(faces_by_dim_.size())) return none;
    return faces_by_dim_[static_cast<std::size_t>(k + 1)];
}

std::vector<Vertex> SimplicialComplex::vertices() const {
    std::vector<Vertex> out;
    for (const Face& f : faces(0)) out.push_back(f[0]);
    return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (int k = 0; k <= dimension_; ++k) f.push_back(faces(k).size());
    return f;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    long sign = 1;
    for (std::size_t count : f_vector()) {
        chi += sign * static_cast<long>(count);
        sign = -sign;
    }
    return chi;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Face& f) { return other.contains(f); });
}

SimplicialComplex star(const SimplicialComplex& c, const Face& s) {
    if (!c.contains(s)) throw Error(ErrorCode::FaceNotInComplex, "star of " + describe(s));
    std::vector<Face> facets;
    for (const Face& f : c.facets()) {
        if (s.is_subset_of(f)) facets.push_back(f);
    }
    return SimplicialComplex(c.groundset_size(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& c, const Face& s) {
    if (!c.contains(s)) throw Error(ErrorCode::FaceNotInComplex, "link of " + describe(s));
    std::vector<Face> facets;
    for (const Face& f : c.facets()) {
        if (s.is_subset_of(f)) facets.push_back(f.minus(s));
    }
    return SimplicialComplex(c.groundset_size(), std::move(facets));
}

SimplicialComplex deletion(const SimplicialComplex& c, const Face& s) {
    if (!c.contains(s)) return c;
    if (s.empty()) return SimplicialComplex::void_complex(c.groundset_size());
    std::vector<Face> facets;
    for (const Face& f : c.facets()) {
        if (!s.is_subset_of(f)) {
            facets.push_back(f);
            continue;
        }
        for (Vertex v : s) facets.push_back(f.without(v));
    }
    return SimplicialComplex(c.groundset_size(), std::move(facets));
}

SimplicialComplex delete_vertices(const SimplicialComplex& c, const std::vector<Vertex>& vertices) {
    SimplicialComplex out = c;
    for (Vertex v : vertices) out = deletion(out, Face{v});
    return out;
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Face> facets = a.facets();
    facets.insert(facets.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex(std::max(a.groundset_size(), b.groundset_size()), std::move(facets));
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Face> facets;
    for (int k = 0; k <= a.dimension(); ++k) {
        for (const Face& f : a.faces(k)) {
            if (b.contains(f)) facets.push_back(f);
        }
    }
    if (facets.empty() && !a.is_void() && !b.is_void()) facets.push_back(Face{});
    return SimplicialComplex(std::min(a.groundset_size(), b.groundset_size()), std::move(facets));
}

SimplicialComplex boundary(const SimplicialComplex& c) {
    std::map<Face, int> count;
    for (const Face& f : c.facets()) {
        if (f.empty()) continue;
        for (Vertex v : f) ++count[f.without(v)];
    }
    std::vector<Face> facets;
    for (auto& [ridge, k] : count) {
        if (k == 1) facets.push_back(ridge);
    }
    return SimplicialComplex(c.groundset_size(), std::move(facets));
}

SimplicialComplex stellar_subdivide(const SimplicialComplex& c, const Face& s, Vertex new_vertex) {
    if (!c.contains(s)) throw Error(ErrorCode::FaceNotInComplex, "cannot subdivide " + describe(s));
    if (s.dimension() < 1) throw Error(ErrorCode::InvalidFace, "stellar subdivision needs a face of dimension >= 1");
    if (new_vertex != c.groundset_size()) {
        throw Error(ErrorCode::VertexClash,
                    "new vertex " + std::to_string(new_vertex) + " must be the next identifier " +
                        std::to_string(c.groundset_size()));
    }
    const SimplicialComplex rim = deletion(star(c, s), s);
    std::vector<Face> facets = deletion(c, s).facets();
    for (const Face& f : rim.facets()) facets.push_back(f.with(new_vertex));
    return SimplicialComplex(c.groundset_size() + 1, std::move(facets));
}

SurfaceKind classify_surface(const SimplicialComplex& c) {
    if (is_empty_surface(c)) return {SurfaceTag::Empty, std::nullopt};
    require_pure_2d(c);
    const SurfaceData data = analyse_surface(c);
    if (!data.connected) return {};

    bool closed = true;
    for (auto& [e, count] : data.edge_triangles) {
        if (count > 2) return {};
        if (count != 2) closed = false;
    }
    const long chi = c.euler_characteristic();
    if (closed) {
        for (auto& [v, edges] : data.vertex_links) {
            if (graph_shape(edges) != GraphShape::Cycle) return {};
        }
        return {chi == 2 ? SurfaceTag::Sphere2 : SurfaceTag::Other, std::nullopt};
    }
    if (chi != 1) return {};

    std::map<Vertex, std::vector<Vertex>> rim;
    for (auto& [e, count] : data.edge_triangles) {
        if (count == 1) {
            rim[e[0]].push_back(e[1]);
            rim[e[1]].push_back(e[0]);
        }
    }
    for (auto& [v, nbrs] : rim) {
        if (nbrs.size() != 2) return {};
        std::sort(nbrs.begin(), nbrs.end());
    }
    for (auto& [v, edges] : data.vertex_links) {
        const GraphShape expected = rim.count(v) ? GraphShape::Path : GraphShape::Cycle;
        if (graph_shape(edges) != expected) return {};
    }
    std::vector<Vertex> cycle{rim.begin()->first};
    Vertex prev = cycle.front();
    Vertex cur = rim.begin()->second.front();
    while (cur != cycle.front()) {
        cycle.push_back(cur);
        const auto& nb = rim[cur];
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        if (cycle.size() > rim.size()) return {};
    }
    if (cycle.size() != rim.size() || cycle.size() < 3) return {};
    return {SurfaceTag::Disk2, std::move(cycle)};
}

std::vector<SimplicialComplex> split_into_disks(const SimplicialComplex& c) {
    if (is_empty_surface(c)) return {};
    require_pure_2d(c);
    const auto& tris = c.facets();
    std::map<Face, std::vector<std::size_t>> by_edge;
    for (std::size_t i = 0; i < tris.size(); ++i) {
        for (Vertex v : tris[i]) by_edge[tris[i].without(v)].push_back(i);
    }
    UnionFind uf(tris.size());
    for (auto& [e, owners] : by_edge) {
        if (owners.size() > 2) throw Error(ErrorCode::NotDisklike, "edge " + describe(e) + " lies in more than two triangles");
        for (std::size_t j = 1; j < owners.size(); ++j) uf.unite(owners[0], owners[j]);
    }
    std::map<std::size_t, std::vector<Face>> groups;
    for (std::size_t i = 0; i < tris.size(); ++i) groups[uf.find(i)].push_back(tris[i]);
    std::vector<SimplicialComplex> pieces;
    for (auto& [root, facets] : groups) {
        SimplicialComplex piece(c.groundset_size(), std::move(facets));
        if (classify_surface(piece).tag != SurfaceTag::Disk2) {
            throw Error(ErrorCode::NotDisklike, "piece containing triangle " + describe(piece.facets().front()) +
                                                    " is not a 2-disk");
        }
        pieces.push_back(std::move(piece));
    }
    std::sort(pieces.begin(), pieces.end(), [](const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.facets() < b.facets();
    });
    return pieces;
}

std::vector<Vertex> neighbours(const SimplicialComplex& c, Vertex v) {
    std::vector<Vertex> out;
    for (const Face& e : c.faces(1)) {
        if (e[0] == v) out.push_back(e[1]);
        else if (e[1] == v) out.push_back(e[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace blueprint
