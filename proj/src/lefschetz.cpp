#include "blueprint/lefschetz.hpp"

#include "blueprint/error.hpp"

#include <algorithm>
#include <set>

namespace blueprint {

namespace {

Matrix variable_map(const Presentation& source, const Presentation& target, Vertex v) {
    return induced_matrix(source, target, monomial_multiplication_matrix(source, target, Monomial({v})));
}

// Coordinates in `ambient` of the classes of the given monomials, as columns.
// Returns nullopt if some monomial is not a basis monomial of `ambient`.
std::optional<Matrix> monomial_span(const Presentation& ambient, const std::vector<Monomial>& monomials) {
    std::vector<Vector> cols;
    for (const Monomial& m : monomials) {
        auto idx = ambient.index_of(m);
        if (!idx) return std::nullopt;
        Vector e(ambient.basis().size());
        e[*idx] = 1;
        cols.push_back(ambient.coordinates(e));
    }
    return Matrix::from_columns(cols, ambient.dim());
}

// Image of A^k(Δ, ∂Δ) inside A^k(Σ) for Δ = Σ - W.
Matrix predicted_kernel(const Presentation& piece, const std::vector<Vertex>& removed) {
    const SimplicialComplex rest = delete_vertices(piece.complex(), removed);
    if (rest.vertices().empty()) return Matrix(piece.dim(), 0);
    return *monomial_span(piece, monomial_basis(rest, boundary(rest), piece.degree()));
}

std::optional<Vector> column_outside(const Matrix& candidates, const Matrix& space) {
    const std::size_t base = rank(space);
    for (std::size_t c = 0; c < candidates.cols(); ++c) {
        Matrix col = Matrix::from_columns({candidates.column(c)}, candidates.rows());
        if (rank(hconcat(space, col)) > base) return candidates.column(c);
    }
    return std::nullopt;
}

std::vector<Vertex> require_disk_boundary(const SimplicialComplex& delta, Vertex w) {
    const SurfaceKind kind = classify_surface(delta);
    if (kind.tag != SurfaceTag::Disk2) throw Error(ErrorCode::NotDisklike, "peel step needs a 2-disk");
    const auto& cycle = *kind.boundary_cycle;
    if (std::find(cycle.begin(), cycle.end(), w) == cycle.end()) {
        throw Error(ErrorCode::NotBoundaryVertex, "vertex " + std::to_string(w) + " is not on the boundary");
    }
    return cycle;
}

std::vector<Vector> coordinates_of(const Realization& r, const std::vector<Vertex>& vertices) {
    std::vector<Vector> out;
    for (Vertex v : vertices) out.push_back(r[v]);
    return out;
}

std::optional<HyperplaneNormal> plane_through(const Realization& r, const std::vector<Vertex>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            const Vector n = cross(r[vertices[i]], r[vertices[j]]);
            if (!is_zero(n)) return HyperplaneNormal(n);
        }
    }
    return std::nullopt;
}

}  // namespace

std::size_t LefschetzCertificate::total_rank() const {
    std::size_t total = 0;
    for (const auto& c : degree_checks) total += c.rank;
    return total;
}

LefschetzCertificate check_lefschetz(const GradedModule& module, const LinearForm& ell) {
    const int d = module.top_degree();
    LefschetzCertificate cert;
    cert.ell = ell;
    bool holds = true;
    for (int k = 0; 2 * k <= d; ++k) {
        Matrix power = Matrix::identity(module[k].basis().size());
        for (int j = k; j < d - k; ++j) power = multiplication_matrix(module[j], module[j + 1], ell) * power;
        DegreeCheck check{k, induced_rank(module[d - k], power), module[k].dim(), module[d - k].dim()};
        holds = holds && check.rank == check.dim_k && check.rank == check.dim_dual;
        cert.degree_checks.push_back(check);
    }
    cert.verdict = holds ? Verdict::Holds : Verdict::FailsForThisEll;
    return cert;
}

LefschetzCertificate check_lefschetz(const SimplicialComplex& sigma, const Realization& r, const LinearForm& ell) {
    return check_lefschetz(GradedModule(sigma, std::nullopt, r), ell);
}

SearchResult random_search(const GradedModule& module, std::size_t trials, std::uint64_t seed, std::int64_t bound) {
    const int d = module.top_degree();
    const int n = module[0].complex().groundset_size();
    // Per-degree coordinate matrices of every x_v; ℓ's maps are their combinations.
    std::vector<std::vector<Matrix>> variables(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        for (Vertex v = 0; v < n; ++v) variables[static_cast<std::size_t>(j)].push_back(variable_map(module[j], module[j + 1], v));
    }
    const Rng root(seed);
    SearchResult result;
    std::optional<LinearForm> best_ell;
    std::size_t best_score = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = root.split(t);
        const LinearForm ell(rng.integer_vector(static_cast<std::size_t>(n), bound));
        ++result.trials_run;
        std::vector<Matrix> step;
        for (int j = 0; j < d; ++j) {
            Matrix m(module[j + 1].dim(), module[j].dim());
            for (Vertex v = 0; v < n; ++v) {
                const Rational& c = ell.coefficients()[static_cast<std::size_t>(v)];
                if (sgn(c) != 0) m = m + variables[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)].scaled(c);
            }
            step.push_back(std::move(m));
        }
        bool holds = true;
        std::size_t score = 0;
        for (int k = 0; 2 * k <= d; ++k) {
            Matrix power = Matrix::identity(module[k].dim());
            for (int j = k; j < d - k; ++j) power = step[static_cast<std::size_t>(j)] * power;
            const std::size_t r = rank(power);
            score += r;
            holds = holds && r == module[k].dim() && r == module[d - k].dim();
        }
        if (holds) {
            result.best = check_lefschetz(module, ell);
            result.found = result.best.verdict == Verdict::Holds;
            if (result.found) return result;
        }
        if (!best_ell || score > best_score) {
            best_ell = ell;
            best_score = score;
        }
    }
    if (best_ell) result.best = check_lefschetz(module, *best_ell);
    return result;
}

SearchResult random_search(const SimplicialComplex& sigma, const Realization& r, std::size_t trials,
                           std::uint64_t seed) {
    return random_search(GradedModule(sigma, std::nullopt, r), trials, seed);
}

GenericCombination generic_combine(const Matrix& a, const Matrix& b, std::uint64_t seed, std::int64_t bound) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::ShapeMismatch, "generic combination needs maps of equal shape");
    }
    GenericCombination out;
    const Matrix b_on_kernel = b * kernel_basis(a);
    const Matrix meet = intersection_basis(b_on_kernel, a);
    out.hypothesis.holds = meet.cols() == 0;
    if (!out.hypothesis.holds) out.hypothesis.witness = meet.column(0);

    const Matrix common = kernel_basis(vstack(a, b));
    Rng rng(seed);
    for (int attempt = 0; attempt < kGenericRetries; ++attempt) {
        out.attempts = attempt + 1;
        out.lambda = Rational(static_cast<long>(rng.nonzero_integer(bound)));
        out.mu = Rational(static_cast<long>(rng.nonzero_integer(bound)));
        out.combined = a.scaled(out.lambda) + b.scaled(out.mu);
        out.kernel = kernel_basis(out.combined);
        out.kernel_is_intersection = (a * out.kernel).is_zero() && (b * out.kernel).is_zero() &&
                                     out.kernel.cols() == common.cols();
        // Without the hypothesis there is nothing to wait for: report the first draw.
        if (out.kernel_is_intersection || !out.hypothesis.holds) break;
    }
    return out;
}

TransversalPrimeReport transversal_prime_check(const GradedModule& sphere, const std::vector<Vertex>& w, int k,
                                               std::uint64_t seed) {
    if (w.empty()) throw Error(ErrorCode::WrongInput, "transversal prime check needs a nonempty vertex set");
    const Presentation& pk = sphere[k];
    const Presentation& pk1 = sphere[k + 1];
    const int n = pk.complex().groundset_size();

    TransversalPrimeReport report;
    Matrix combined = variable_map(pk, pk1, w.front());
    Matrix stacked = combined;
    report.ell = LinearForm::variable(n, w.front());
    const Rng root(seed);
    for (std::size_t i = 1; i < w.size(); ++i) {
        const Matrix xv = variable_map(pk, pk1, w[i]);
        const GenericCombination g = generic_combine(combined, xv, root.split(i).seed());
        combined = g.combined;
        report.ell = report.ell.scaled(g.lambda) + LinearForm::variable(n, w[i]).scaled(g.mu);
        stacked = vstack(stacked, xv);
    }
    const Matrix kernel = kernel_basis(combined);
    const Matrix meet = kernel_basis(stacked);
    const Matrix predicted = predicted_kernel(pk, w);
    report.kernel_dim = kernel.cols();
    report.intersection_dim = meet.cols();
    report.predicted_dim = rank(predicted);

    if (!same_column_space(kernel, meet)) {
        report.witness = column_outside(kernel, meet);
    } else if (!same_column_space(meet, predicted)) {
        report.witness = column_outside(meet, predicted);
        if (!report.witness) report.witness = column_outside(predicted, meet);
    } else {
        report.holds = true;
    }
    return report;
}

TransversalPrimeReport transversal_prime_check(const SimplicialComplex& sigma, const Realization& r,
                                               const std::vector<Vertex>& w, int k, std::uint64_t seed) {
    return transversal_prime_check(GradedModule(sigma, std::nullopt, r), w, k, seed);
}

PeelStepReport verify_peel_step(const SimplicialComplex& delta, const Realization& r, Vertex w, int k) {
    require_disk_boundary(delta, w);
    const Face apex{w};
    const SimplicialComplex rim = boundary(delta);

    const Presentation source(star(delta, apex), star(rim, apex), r, k);
    const Presentation middle(delta, deletion(delta, apex), r, k + 1);
    const Presentation target(rim, deletion(rim, apex), r, k + 1);
    const Matrix times_w = monomial_multiplication_matrix(source, middle, Monomial({w}));
    Matrix restrict(target.basis().size(), middle.basis().size());
    for (std::size_t j = 0; j < middle.basis().size(); ++j) {
        if (auto idx = target.index_of(middle.basis()[j])) restrict(*idx, j) = 1;
    }
    const Matrix f = induced_matrix(source, middle, times_w);
    const Matrix g = induced_matrix(middle, target, restrict);

    PeelStepReport report;
    report.maps_well_defined = respects_relations(source, middle, times_w) && respects_relations(middle, target, restrict);
    report.composite_zero = (g * f).is_zero();
    report.kernel_in_image = column_space_contains(f, kernel_basis(g));
    report.surjective = rank(g) == target.dim();
    report.exact = report.maps_well_defined && report.composite_zero && report.kernel_in_image && report.surjective;

    report.link_dim = Presentation(link(rim, apex), std::nullopt, project_link(r, apex), k).dim();
    report.relative_boundary_dim = target.dim();
    report.link_vanishes = report.link_dim == 0;

    const Presentation interior(delta, rim, r, k);
    const Presentation interior_next(delta, rim, r, k + 1);
    const Matrix kernel =
        kernel_basis(induced_matrix(interior, interior_next, monomial_multiplication_matrix(interior, interior_next, Monomial({w}))));
    const SimplicialComplex smaller = deletion(delta, apex);
    try {
        split_into_disks(smaller);
        report.deletion_disklike = true;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotDisklike && e.code() != ErrorCode::NotPure2Dimensional) throw;
    }
    const auto expected = monomial_span(interior, monomial_basis(smaller, boundary(smaller), k));
    report.kernel_matches = expected && same_column_space(kernel, *expected);
    return report;
}

LinkLefschetzReport link_lefschetz_equivalence(const SimplicialComplex& delta, const Realization& r, Vertex w, int k) {
    require_disk_boundary(delta, w);
    const Face apex{w};
    const SimplicialComplex lk = link(boundary(delta), apex);
    const Realization projected = project_link(r, apex);

    LinkLefschetzReport report;
    report.link_vanishes = Presentation(lk, std::nullopt, projected, k).dim() == 0;

    // Collapse one more direction u inside span(w)^⊥; θ records each vertex's
    // coordinate along u. Pick the first u (from a fixed list) that keeps π·Lk proper.
    const std::vector<Vector> plane = complement_basis(r, apex);
    std::vector<Vector> directions;
    if (plane.size() == 1) {
        directions.push_back(plane[0]);
    } else if (plane.size() >= 2) {
        for (int t = 0; t <= 16; ++t) {
            for (int sign : {1, -1}) {
                Vector u = plane[0];
                for (std::size_t i = 0; i < u.size(); ++i) u[i] += Rational(sign * t) * plane[1][i];
                directions.push_back(std::move(u));
                if (t == 0) break;
            }
        }
        directions.push_back(plane[1]);
    }
    for (const Vector& u : directions) {
        std::vector<Vector> flattened;
        Vector heights;
        for (const Vector& p : projected.coordinates()) {
            flattened.push_back(project_away(p, {u}));
            heights.push_back(dot(p, u) / dot(u, u));
        }
        const Realization line(r.dimension(), std::move(flattened));
        if (!is_proper(lk, line).proper) continue;
        const Presentation lower(lk, std::nullopt, line, k - 1);
        const Presentation upper(lk, std::nullopt, line, k);
        const std::size_t rk = induced_rank(upper, multiplication_matrix(lower, upper, LinearForm(heights)));
        report.projected_iso = rk == lower.dim() && rk == upper.dim();
        report.direction = u;
        report.agree = report.projected_iso == report.link_vanishes;
        return report;
    }
    throw Error(ErrorCode::ImproperRealization, "no direction keeps the projected link proper");
}

Construction construct_lefschetz(const GradedModule& sphere, std::uint64_t seed) {
    const SimplicialComplex& sigma = sphere[0].complex();
    const Realization& r = sphere[0].realization();
    if (r.dimension() != 3) throw Error(ErrorCode::DimensionNotThree, "peeling construction works in R^3");
    if (classify_surface(sigma).tag != SurfaceTag::Sphere2) {
        throw Error(ErrorCode::WrongInput, "peeling construction needs a 2-sphere");
    }
    const Presentation& p1 = sphere[1];
    const Presentation& p2 = sphere[2];
    const int n = sigma.groundset_size();
    const std::vector<Vertex> vertices = sigma.vertices();
    std::vector<Matrix> times(static_cast<std::size_t>(n));
    for (Vertex v : vertices) times[static_cast<std::size_t>(v)] = variable_map(p1, p2, v);
    const std::size_t step_budget = sigma.facets().size();

    Construction result;
    const Rng root(seed);
    for (int attempt = 0; attempt < kGenericRetries; ++attempt) {
        result = Construction{};
        result.attempts = attempt + 1;
        Rng rng = root.split(static_cast<std::uint64_t>(attempt));
        FailureTrace failure;
        bool weight_dependent = false;
        PeelState& state = result.state;
        Matrix current_map;

        for (Vertex v : vertices) {
            const Rational weight(static_cast<long>(rng.nonzero_integer(kDefaultCoefficientBound)));
            const Matrix map = times[static_cast<std::size_t>(v)].scaled(weight);
            const Matrix kernel = kernel_basis(map);
            if (!same_column_space(kernel, predicted_kernel(p1, {v}))) {
                failure.rejections.push_back({v, "kernel of x_v differs from the predicted relative module"});
                continue;
            }
            PeelStep step;
            step.vertex = v;
            step.star = {v};
            for (Vertex u : neighbours(sigma, v)) step.star.push_back(u);
            step.star_rank = span_rank(coordinates_of(r, step.star));
            step.lambda = 0;
            step.mu = weight;
            step.kernel_dim_before = p1.dim();
            step.kernel_dim_after = kernel.cols();
            step.predicted_kernel_dim = kernel.cols();
            state.removed.push_back(v);
            state.accumulated_ell = LinearForm::variable(n, v).scaled(weight);
            state.trace.push_back(std::move(step));
            current_map = map;
            break;
        }
        bool stuck = state.removed.empty();
        if (stuck) failure.reason = "no vertex has the predicted kernel";

        for (std::size_t iteration = 0; !stuck && iteration < step_budget; ++iteration) {
            state.current = delete_vertices(sigma, state.removed);
            const std::size_t kernel_dim = kernel_basis(current_map).cols();
            if (kernel_dim == 0) break;
            failure.rejections.clear();

            const std::vector<SimplicialComplex> pieces = split_into_disks(state.current);
            const SimplicialComplex rim = boundary(state.current);
            std::set<Vertex> seen;
            std::set<Vertex> coplanar;
            bool accepted = false;
            for (const SimplicialComplex& piece : pieces) {
                std::vector<Vertex> cycle = *classify_surface(piece).boundary_cycle;
                std::sort(cycle.begin(), cycle.end());
                for (Vertex w : cycle) {
                    if (!seen.insert(w).second) continue;
                    std::vector<Vertex> star{w};
                    for (Vertex u : neighbours(rim, w)) star.push_back(u);
                    const std::size_t star_rank = span_rank(coordinates_of(r, star));
                    if (star_rank < 3) {
                        coplanar.insert(w);
                        failure.rejections.push_back({w, "boundary star lies in a linear plane"});
                        continue;
                    }
                    try {
                        split_into_disks(deletion(state.current, Face{w}));
                    } catch (const Error& e) {
                        if (e.code() != ErrorCode::NotDisklike && e.code() != ErrorCode::NotPure2Dimensional) throw;
                        failure.rejections.push_back({w, "deletion does not leave disks"});
                        continue;
                    }
                    const GenericCombination g = generic_combine(
                        current_map, times[static_cast<std::size_t>(w)],
                        rng.split(iteration * 7919u + static_cast<std::uint64_t>(w)).seed());
                    if (!g.hypothesis.holds || !g.kernel_is_intersection) {
                        weight_dependent = true;
                        failure.rejections.push_back(
                            {w, g.hypothesis.holds ? "generic combination kept extra kernel"
                                                   : "x_w(ker ℓ) meets im ℓ"});
                        continue;
                    }
                    std::vector<Vertex> removed = state.removed;
                    removed.push_back(w);
                    const Matrix predicted = predicted_kernel(p1, removed);
                    if (!same_column_space(g.kernel, predicted)) {
                        weight_dependent = true;
                        failure.rejections.push_back({w, "kernel differs from the predicted relative module"});
                        continue;
                    }
                    PeelStep step;
                    step.vertex = w;
                    step.star = std::move(star);
                    step.star_rank = star_rank;
                    step.lambda = g.lambda;
                    step.mu = g.mu;
                    step.kernel_dim_before = kernel_dim;
                    step.kernel_dim_after = g.kernel.cols();
                    step.predicted_kernel_dim = rank(predicted);
                    state.removed = std::move(removed);
                    state.accumulated_ell = state.accumulated_ell.scaled(g.lambda) + LinearForm::variable(n, w).scaled(g.mu);
                    state.trace.push_back(std::move(step));
                    current_map = g.combined;
                    accepted = true;
                    break;
                }
                if (accepted) break;
            }
            if (accepted) continue;

            stuck = true;
            for (const SimplicialComplex& piece : pieces) {
                const std::vector<Vertex> cycle = *classify_surface(piece).boundary_cycle;
                if (span_rank(coordinates_of(r, cycle)) <= 2) {
                    failure.reason = "a remaining disk has its boundary cycle in a linear plane";
                    failure.coplanar_witness = cycle;
                    failure.witness_is_cycle = true;
                    failure.hyperplane = plane_through(r, cycle);
                    break;
                }
            }
            if (!failure.witness_is_cycle) {
                failure.reason = "no boundary vertex satisfies the peeling conditions";
                failure.coplanar_witness.assign(coplanar.begin(), coplanar.end());
                if (!coplanar.empty()) {
                    std::vector<Vertex> w(coplanar.begin(), coplanar.end());
                    if (span_rank(coordinates_of(r, w)) <= 2) failure.hyperplane = plane_through(r, w);
                }
            }
        }
        state.current = delete_vertices(sigma, state.removed);

        if (!stuck && kernel_basis(current_map).cols() != 0) {
            stuck = true;
            failure.reason = "step budget exhausted";
        }
        if (!stuck) {
            LefschetzCertificate cert = check_lefschetz(sphere, state.accumulated_ell);
            if (cert.verdict == Verdict::Holds) {
                result.certificate = std::move(cert);
                return result;
            }
            failure.reason = "peeled form fails the independent Lefschetz check";
            weight_dependent = true;
        }
        result.failure = std::move(failure);
        if (!weight_dependent) break;
    }
    return result;
}

Construction construct_lefschetz(const SimplicialComplex& sigma, const Realization& r, std::uint64_t seed) {
    return construct_lefschetz(GradedModule(sigma, std::nullopt, r), seed);
}

}  // namespace blueprint
