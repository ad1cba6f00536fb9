#pragma once

#include "blueprint/complex.hpp"
#include "blueprint/geometry.hpp"
#include "blueprint/lefschetz.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blueprint {

struct EquatorCertificate {
    std::vector<Vertex> cycle;  // closed: the last vertex is adjacent to the first
    HyperplaneNormal hyperplane;
};

/// Empty string if the certificate is valid for (sigma, r), else what is wrong with it.
std::string validate_equator(const SimplicialComplex& sigma, const Realization& r, const EquatorCertificate& cert);

/// Distinct primitive normals of the planes spanned by non-parallel vertex pairs, ascending.
std::vector<HyperplaneNormal> candidate_normals(const SimplicialComplex& sigma, const Realization& r);

/// Simple cycle in the 1-skeleton whose vertices lie in one linear plane.
/// Default: first normal (ascending) with a cycle, cycle found by DFS from the
/// least vertex. `shortest` picks a shortest such cycle over all normals.
std::optional<EquatorCertificate> find_equator(const SimplicialComplex& sigma, const Realization& r,
                                               bool shortest = false);

struct MainTheoremReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    SearchResult search;
    Construction construction;
    std::optional<EquatorCertificate> equator;
    bool lefschetz_holds = false;  // search or construction produced a Holds certificate
    bool implication_ok = false;
    bool non_sufficiency_witness = false;  // equator present and Lefschetz holds anyway
    std::vector<std::string> violations;
};

MainTheoremReport verify_main_theorem(const SimplicialComplex& sigma, const Realization& r, std::uint64_t seed,
                                      std::size_t trials = kDefaultTrials);

}  // namespace blueprint
