#pragma once

#include "blueprint/artinian.hpp"
#include "blueprint/complex.hpp"
#include "blueprint/geometry.hpp"
#include "blueprint/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace blueprint {

inline constexpr int kGenericRetries = 8;
inline constexpr std::size_t kDefaultTrials = 200;

enum class Verdict { Holds, FailsForThisEll };

struct DegreeCheck {
    int k = 0;
    std::size_t rank = 0;
    std::size_t dim_k = 0;
    std::size_t dim_dual = 0;  // dim A^{d-k}
};

struct LefschetzCertificate {
    LinearForm ell;
    std::vector<DegreeCheck> degree_checks;
    Verdict verdict = Verdict::FailsForThisEll;

    std::size_t total_rank() const;
};

/// Exact check of ·ℓ^{d-2k}: A^k → A^{d-k} for every k <= d/2. Ranks come from
/// rank([R_{d-k} | L]) - rank(R_{d-k}) with L the monomial-level power map, which
/// does not go through the standard-monomial coordinates used elsewhere.
LefschetzCertificate check_lefschetz(const GradedModule& module, const LinearForm& ell);
/// Throws Error{ImproperRealization} when r is not proper for sigma.
LefschetzCertificate check_lefschetz(const SimplicialComplex& sigma, const Realization& r, const LinearForm& ell);

struct SearchResult {
    /// First certificate that holds; otherwise the failing one of largest total rank.
    LefschetzCertificate best;
    std::size_t trials_run = 0;
    bool found = false;
};

/// Tries ℓ with coefficients uniform in [-B, B] until one holds.
SearchResult random_search(const GradedModule& module, std::size_t trials, std::uint64_t seed,
                           std::int64_t bound = kDefaultCoefficientBound);
SearchResult random_search(const SimplicialComplex& sigma, const Realization& r, std::size_t trials,
                           std::uint64_t seed);

struct HypothesisReport {
    bool holds = false;
    /// Nonzero vector of B(ker A) ∩ im A when the hypothesis fails.
    std::optional<Vector> witness;
};

struct GenericCombination {
    HypothesisReport hypothesis;
    Rational lambda = 0;
    Rational mu = 0;
    Matrix combined;  // λA + μB
    Matrix kernel;    // columns: basis of ker(λA + μB)
    bool kernel_is_intersection = false;
    int attempts = 0;
};

/// Checks B(ker A) ∩ im A = 0 and, when it holds, samples λ, μ until
/// ker(λA + μB) = ker A ∩ ker B (at most kGenericRetries draws). Throws
/// Error{ShapeMismatch} for unequal shapes.
GenericCombination generic_combine(const Matrix& a, const Matrix& b, std::uint64_t seed,
                                   std::int64_t bound = kDefaultCoefficientBound);

struct TransversalPrimeReport {
    bool holds = false;
    LinearForm ell;                    // the generic combination of the x_v, v ∈ W
    std::size_t kernel_dim = 0;        // ker ℓ'
    std::size_t intersection_dim = 0;  // ∩ ker x_v
    std::size_t predicted_dim = 0;     // image of A^k(Δ, ∂Δ), Δ = Σ - W
    /// Coordinates (standard monomials of A^k(Σ)) of a vector separating two of
    /// the three subspaces.
    std::optional<Vector> witness;
};

TransversalPrimeReport transversal_prime_check(const GradedModule& sphere, const std::vector<Vertex>& w, int k,
                                               std::uint64_t seed);
TransversalPrimeReport transversal_prime_check(const SimplicialComplex& sigma, const Realization& r,
                                               const std::vector<Vertex>& w, int k, std::uint64_t seed);

struct PeelStepReport {
    // A^k(st_w Δ, st_w ∂Δ) --x_w--> A^{k+1}(Δ, Δ - w) --> A^{k+1}(∂Δ, ∂Δ - w) --> 0
    bool maps_well_defined = false;
    bool composite_zero = false;
    bool kernel_in_image = false;
    bool surjective = false;
    bool exact = false;
    std::size_t link_dim = 0;               // dim A^k(Lk_w ∂Δ), link projected along w
    std::size_t relative_boundary_dim = 0;  // dim A^{k+1}(∂Δ, ∂Δ - w)
    bool link_vanishes = false;
    /// Δ - w is a union of 2-disks meeting in vertices (no dangling edges).
    bool deletion_disklike = false;
    /// ker(x_w on A^k(Δ, ∂Δ)) equals the span of A^k(Δ - w, ∂(Δ - w)). Expected
    /// when link_vanishes and deletion_disklike both hold.
    bool kernel_matches = false;
};

/// Throws Error{NotDisklike} unless delta is a 2-disk and Error{NotBoundaryVertex}
/// unless w lies on its boundary cycle.
PeelStepReport verify_peel_step(const SimplicialComplex& delta, const Realization& r, Vertex w, int k);

struct LinkLefschetzReport {
    bool link_vanishes = false;  // A^k(Lk_w ∂Δ) = 0
    bool projected_iso = false;  // ·θ : A^{k-1}(π Lk) → A^k(π Lk) bijective
    bool agree = false;
    Vector direction;            // the collapsed direction inside span(w)^⊥
};

LinkLefschetzReport link_lefschetz_equivalence(const SimplicialComplex& delta, const Realization& r, Vertex w, int k);

struct PeelStep {
    Vertex vertex = 0;
    std::vector<Vertex> star;  // w followed by its neighbours on the current boundary
    std::size_t star_rank = 0;
    Rational lambda = 1;       // new ℓ = λ·(old ℓ) + μ·x_w
    Rational mu = 1;
    std::size_t kernel_dim_before = 0;
    std::size_t kernel_dim_after = 0;
    std::size_t predicted_kernel_dim = 0;
};

struct Rejection {
    Vertex vertex = 0;
    std::string reason;
};

struct PeelState {
    std::vector<Vertex> removed;
    SimplicialComplex current;  // Σ minus the removed vertices: disks joined at vertices, or empty
    LinearForm accumulated_ell;
    std::vector<PeelStep> trace;
};

struct FailureTrace {
    std::string reason;
    /// Boundary cycle of a remaining disk lying in a linear plane, when one exists;
    /// otherwise the boundary vertices whose stars were coplanar.
    std::vector<Vertex> coplanar_witness;
    bool witness_is_cycle = false;
    std::optional<HyperplaneNormal> hyperplane;
    std::vector<Rejection> rejections;
};

struct Construction {
    PeelState state;
    std::optional<LefschetzCertificate> certificate;  // verdict Holds when present
    std::optional<FailureTrace> failure;
    int attempts = 0;

    bool holds() const { return certificate.has_value(); }
};

/// Builds ℓ by peeling boundary vertices off Σ one at a time: each accepted
/// vertex leaves disks (or nothing), has a non-coplanar boundary star, and is
/// merged into ℓ by a verified generic combination whose kernel equals the
/// predicted relative module. Throws Error{ImproperRealization}.
Construction construct_lefschetz(const GradedModule& sphere, std::uint64_t seed);
Construction construct_lefschetz(const SimplicialComplex& sigma, const Realization& r, std::uint64_t seed);

}  // namespace blueprint
