#include "blueprint/geometry.hpp"

#include "blueprint/error.hpp"

#include <string>

namespace blueprint {

namespace {

// Gram-Schmidt without normalisation; zero residues are dropped.
std::vector<Vector> orthogonalise(const std::vector<Vector>& vectors) {
    std::vector<Vector> family;
    for (const Vector& v : vectors) {
        Vector w = project_away(v, family);
        if (!is_zero(w)) family.push_back(std::move(w));
    }
    return family;
}

}  // namespace

Realization::Realization(int d, std::vector<Vector> coords) : d_(d), coords_(std::move(coords)) {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].size() != static_cast<std::size_t>(d)) {
            throw Error(ErrorCode::DimensionMismatch, "vertex " + std::to_string(i) + " has " +
                                                          std::to_string(coords_[i].size()) + " coordinates, expected " +
                                                          std::to_string(d));
        }
    }
}

void Realization::require_covers(const SimplicialComplex& c) const {
    for (Vertex v : c.vertices()) {
        if (static_cast<std::size_t>(v) >= coords_.size()) {
            throw Error(ErrorCode::DimensionMismatch, "vertex " + std::to_string(v) + " has no coordinates");
        }
    }
}

HyperplaneNormal::HyperplaneNormal(const Vector& direction) {
    if (is_zero(direction)) throw Error(ErrorCode::DegenerateFace, "hyperplane normal must be nonzero");
    mpz_class lcm = 1;
    for (const auto& x : direction) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (const auto& x : direction) {
        mpz_class v = x.get_num() * (lcm / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    int sign = 0;
    for (const auto& v : ints) {
        if (sgn(v) != 0) {
            sign = sgn(v);
            break;
        }
    }
    for (const auto& v : ints) normal_.emplace_back(mpz_class(v / g * sign));
}

ProperCheck is_proper(const SimplicialComplex& c, const Realization& r) {
    r.require_covers(c);
    for (int k = 0; k <= c.dimension() && k < r.dimension(); ++k) {
        for (const Face& f : c.faces(k)) {
            std::vector<Vector> vs;
            for (Vertex v : f) vs.push_back(r[v]);
            if (span_rank(vs) != f.size()) return {false, f};
        }
    }
    return {};
}

std::size_t span_rank(const std::vector<Vector>& vectors) {
    if (vectors.empty()) return 0;
    EchelonBasis basis(vectors.front().size());
    for (const Vector& v : vectors) basis.insert(v);
    return basis.rank();
}

bool on_hyperplane(const Realization& r, const HyperplaneNormal& h, Vertex v) {
    return sgn(dot(r[v], h.normal())) == 0;
}

Vector project_away(const Vector& v, const std::vector<Vector>& orthogonal_family) {
    Vector w = v;
    for (const Vector& b : orthogonal_family) {
        const Rational coefficient = dot(w, b) / dot(b, b);
        if (sgn(coefficient) == 0) continue;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= coefficient * b[i];
    }
    return w;
}

Realization project_link(const Realization& r, const Face& sigma) {
    std::vector<Vector> span;
    for (Vertex v : sigma) span.push_back(r[v]);
    const std::vector<Vector> family = orthogonalise(span);
    if (family.size() != sigma.size()) {
        throw Error(ErrorCode::DegenerateFace, "face vectors are linearly dependent");
    }
    std::vector<Vector> projected;
    projected.reserve(r.size());
    for (const Vector& v : r.coordinates()) projected.push_back(project_away(v, family));
    return Realization(r.dimension(), std::move(projected));
}

std::vector<Vector> complement_basis(const Realization& r, const Face& sigma) {
    std::vector<Vector> span;
    for (Vertex v : sigma) span.push_back(r[v]);
    const std::vector<Vector> family = orthogonalise(span);
    if (family.size() != sigma.size()) {
        throw Error(ErrorCode::DegenerateFace, "face vectors are linearly dependent");
    }
    std::vector<Vector> all = family;
    const std::size_t d = static_cast<std::size_t>(r.dimension());
    for (std::size_t i = 0; i < d; ++i) {
        Vector e(d);
        e[i] = 1;
        Vector w = project_away(e, all);
        if (!is_zero(w)) all.push_back(std::move(w));
    }
    return std::vector<Vector>(all.begin() + static_cast<std::ptrdiff_t>(family.size()), all.end());
}

Vector cross(const Vector& a, const Vector& b) {
    if (a.size() != 3 || b.size() != 3) throw Error(ErrorCode::DimensionNotThree, "cross product needs 3-vectors");
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace blueprint
