#pragma once

#include "blueprint/complex.hpp"
#include "blueprint/geometry.hpp"
#include "blueprint/matrix.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace blueprint {

/// Monomial in the face ring, stored as the sorted multiset of its variables
/// (x0^2 x3 is {0, 0, 3}); the empty multiset is 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<Vertex> factors);

    int degree() const noexcept { return static_cast<int>(factors_.size()); }
    Face support() const;
    int exponent(Vertex v) const;
    Monomial times(Vertex v) const;
    Monomial times(const Monomial& other) const;
    const std::vector<Vertex>& factors() const noexcept { return factors_; }
    std::string to_string() const;

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<Vertex> factors_;
};

/// ℓ = Σ c_v x_v, dense over the groundset.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(Vector coefficients) : coefficients_(std::move(coefficients)) {}
    static LinearForm zero(int n) { return LinearForm(Vector(static_cast<std::size_t>(n))); }
    static LinearForm variable(int n, Vertex v);

    const Vector& coefficients() const noexcept { return coefficients_; }
    Rational operator[](Vertex v) const;
    int groundset_size() const noexcept { return static_cast<int>(coefficients_.size()); }
    bool is_zero() const { return blueprint::is_zero(coefficients_); }
    LinearForm scaled(const Rational& factor) const;
    LinearForm operator+(const LinearForm& other) const;

    bool operator==(const LinearForm&) const = default;

private:
    Vector coefficients_;
};

/// Degree-k monomials whose support is a face of delta but not of gamma, in
/// lexicographic order of their factor lists.
std::vector<Monomial> monomial_basis(const SimplicialComplex& delta, const std::optional<SimplicialComplex>& gamma,
                                     int k);

/// Degree-k piece of the Artinian reduction A(Δ, Γ) = I_Γ/(I_Δ + Θ·I_Γ), given as
/// Q^{basis} modulo the column span of `relations()`.
///
/// Relation columns are θ_j · m for each degree-(k-1) basis monomial m of the same
/// relative module and each coordinate j, with products whose support leaves Δ
/// dropped. The relation span is kept in reduced echelon form; basis monomials
/// that are not pivots of it are the standard monomials, whose classes form a
/// basis of A^k.
class Presentation {
public:
    /// Throws Error{NotSubcomplex} if gamma ⊄ delta and Error{ImproperRealization}
    /// if r is not proper for delta.
    Presentation(SimplicialComplex delta, std::optional<SimplicialComplex> gamma, Realization r, int k);

    const SimplicialComplex& complex() const noexcept { return delta_; }
    const std::optional<SimplicialComplex>& subcomplex() const noexcept { return gamma_; }
    const Realization& realization() const noexcept { return realization_; }
    int degree() const noexcept { return degree_; }

    const std::vector<Monomial>& basis() const noexcept { return basis_; }
    std::optional<std::size_t> index_of(const Monomial& m) const;
    const Matrix& relations() const noexcept { return relations_; }
    const EchelonBasis& relation_space() const noexcept { return relation_space_; }
    std::size_t relation_rank() const noexcept { return relation_space_.rank(); }
    std::size_t dim() const noexcept { return basis_.size() - relation_space_.rank(); }

    /// Indices (into basis()) of the standard monomials.
    const std::vector<std::size_t>& standard_monomials() const noexcept { return standard_; }
    /// Coordinates of the class of a basis-coordinate vector, length dim().
    Vector coordinates(const Vector& v) const;
    /// Basis-coordinate vector of the combination of standard monomials.
    Vector lift(const Vector& coordinates) const;
    /// dim() x |basis| matrix of the quotient map.
    Matrix quotient_matrix() const;
    /// |basis| x dim() matrix sending coordinates to standard monomials.
    Matrix section_matrix() const;
    bool same_module(const Presentation& other) const;

private:
    SimplicialComplex delta_;
    std::optional<SimplicialComplex> gamma_;
    Realization realization_;
    int degree_;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t> index_;
    Matrix relations_;
    EchelonBasis relation_space_;
    std::vector<std::size_t> standard_;
};

/// Monomial-level matrix (|target basis| x |source basis|) of m ↦ ℓ·m, dropping
/// products that are not target basis monomials.
Matrix multiplication_matrix(const Presentation& source, const Presentation& target, const LinearForm& ell);
/// Same for an arbitrary monomial multiplier (e.g. x_w or 1).
Matrix monomial_multiplication_matrix(const Presentation& source, const Presentation& target, const Monomial& factor);
/// Coordinate matrix (target.dim() x source.dim()) of the map induced by a
/// monomial-level matrix.
Matrix induced_matrix(const Presentation& source, const Presentation& target, const Matrix& monomial_level);
/// rank([R_target | M]) - rank(R_target).
std::size_t induced_rank(const Presentation& target, const Matrix& monomial_level);
/// True iff every source relation column is sent into the target relation span.
bool respects_relations(const Presentation& source, const Presentation& target, const Matrix& monomial_level);

struct MultiplicationMap {
    std::size_t rank = 0;
    /// Columns: degree-k basis coordinates of a basis of the kernel of A^k → A^{k+1}.
    Matrix kernel;
};

/// ·ℓ : A^k → A^{k+1} for consecutive presentations of the same module.
/// Throws Error{DegreeMismatch} otherwise.
MultiplicationMap mult_map(const Presentation& pk, const Presentation& pk1, const LinearForm& ell);

std::size_t dim_A(const SimplicialComplex& delta, const std::optional<SimplicialComplex>& gamma, const Realization& r,
                  int k);
/// (dim A^0, ..., dim A^d) for d the ambient dimension of r.
std::vector<std::size_t> hilbert_function(const SimplicialComplex& delta, const Realization& r);

/// Presentations of degrees 0..d of one module, built once and shared by the
/// multi-degree operations below.
class GradedModule {
public:
    GradedModule(const SimplicialComplex& delta, const std::optional<SimplicialComplex>& gamma, const Realization& r);

    int top_degree() const noexcept { return static_cast<int>(pieces_.size()) - 1; }
    const Presentation& operator[](int k) const { return pieces_.at(static_cast<std::size_t>(k)); }

private:
    std::vector<Presentation> pieces_;
};

/// Rank of ·ℓ^{d-2k}: A^k → A^{d-k}, by composing induced single-step maps.
std::size_t power_mult_rank(const GradedModule& module, const LinearForm& ell, int k);
std::size_t power_mult_rank(const SimplicialComplex& delta, const Realization& r, const LinearForm& ell, int k);

struct RestrictionMap {
    Matrix matrix;  // |target basis| x |source basis|
    bool surjective = false;
};

/// Quotient map from the module on a complex to the module on one of its
/// subcomplexes (same degree and realization). Throws Error{NotSubcomplex}.
RestrictionMap restriction_map(const Presentation& source, const Presentation& target);

/// Matrix of A^k x A^{d-k} → A^d ≅ Q in standard-monomial coordinates. Throws
/// Error{TopDegreeNotOneDimensional} unless dim A^d = 1.
Matrix pairing_matrix(const GradedModule& module, int k);
Matrix pairing_matrix(const SimplicialComplex& delta, const Realization& r, int k);

struct StarLinkIso {
    std::size_t dim_link = 0;
    std::size_t dim_star = 0;
    std::size_t dim_relative_star = 0;  // A^{k+1}(St_v, St_v - v)
    std::size_t rank = 0;               // of ·x_v
    bool holds = false;
};

/// A^k(Lk_v) ≅ A^k(St_v) and ·x_v : A^k(St_v) → A^{k+1}(St_v, St_v - v) bijective.
StarLinkIso verify_star_link_iso(const SimplicialComplex& delta, const Realization& r, Vertex v, int k);

}  // namespace blueprint
