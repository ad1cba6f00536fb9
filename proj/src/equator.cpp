#include "blueprint/equator.hpp"

#include "blueprint/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace blueprint {

namespace {

using Graph = std::map<Vertex, std::vector<Vertex>>;

Graph induced_graph(const SimplicialComplex& sigma, const std::vector<Vertex>& keep) {
    const std::set<Vertex> inside(keep.begin(), keep.end());
    Graph g;
    for (Vertex v : keep) g[v];
    for (const Face& e : sigma.faces(1)) {
        if (inside.count(e[0]) && inside.count(e[1])) {
            g[e[0]].push_back(e[1]);
            g[e[1]].push_back(e[0]);
        }
    }
    for (auto& [v, adj] : g) std::sort(adj.begin(), adj.end());
    return g;
}

// First back edge met by an iterative DFS, components taken from the least vertex.
std::optional<std::vector<Vertex>> dfs_cycle(const Graph& g) {
    std::map<Vertex, Vertex> parent;
    std::map<Vertex, int> state;  // 1 on stack, 2 finished
    for (const auto& [root, unused] : g) {
        if (state[root] != 0) continue;
        std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
        parent[root] = root;
        state[root] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            const auto& adj = g.at(v);
            if (next == adj.size()) {
                state[v] = 2;
                stack.pop_back();
                continue;
            }
            const Vertex u = adj[next++];
            if (u == parent[v]) continue;
            if (state[u] == 1) {
                std::vector<Vertex> cycle;
                for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                    cycle.push_back(it->first);
                    if (it->first == u) break;
                }
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (state[u] == 0) {
                parent[u] = v;
                state[u] = 1;
                stack.push_back({u, 0});
            }
        }
    }
    return std::nullopt;
}

// Shortest cycle by BFS from every vertex; ties go to the lexicographically least cycle.
std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g) {
    std::optional<std::vector<Vertex>> best;
    for (const auto& [root, unused] : g) {
        std::map<Vertex, Vertex> parent{{root, root}};
        std::map<Vertex, int> depth{{root, 0}};
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (Vertex u : g.at(v)) {
                if (!depth.count(u)) {
                    depth[u] = depth[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                    continue;
                }
                if (u == parent[v] || depth[u] < depth[v]) continue;
                // Non-tree edge: join the two tree paths if they only meet at the root.
                std::vector<Vertex> left{v}, right{u};
                while (left.back() != root) left.push_back(parent[left.back()]);
                while (right.back() != root) right.push_back(parent[right.back()]);
                if (left.size() > 1 && right.size() > 1 && left[left.size() - 2] == right[right.size() - 2]) continue;
                std::vector<Vertex> cycle(left.rbegin(), left.rend());
                for (std::size_t i = 0; i + 1 < right.size(); ++i) cycle.push_back(right[i]);
                if (!best || cycle.size() < best->size() || (cycle.size() == best->size() && cycle < *best)) best = cycle;
            }
        }
    }
    return best;
}

}  // namespace

std::string validate_equator(const SimplicialComplex& sigma, const Realization& r, const EquatorCertificate& cert) {
    const auto& c = cert.cycle;
    if (c.size() < 3) return "cycle has fewer than 3 vertices";
    if (std::set<Vertex>(c.begin(), c.end()).size() != c.size()) return "cycle repeats a vertex";
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Vertex a = c[i];
        const Vertex b = c[(i + 1) % c.size()];
        if (a < 0 || a >= sigma.groundset_size() || b < 0 || b >= sigma.groundset_size()) {
            return "cycle vertex outside the ground set";
        }
        if (!sigma.contains(Face{a, b})) {
            return "{" + std::to_string(a) + "," + std::to_string(b) + "} is not an edge";
        }
    }
    for (Vertex v : c) {
        if (!on_hyperplane(r, cert.hyperplane, v)) return "vertex " + std::to_string(v) + " is off the hyperplane";
    }
    return {};
}

std::vector<HyperplaneNormal> candidate_normals(const SimplicialComplex& sigma, const Realization& r) {
    if (r.dimension() != 3) throw Error(ErrorCode::DimensionNotThree, "equators are searched in R^3");
    r.require_covers(sigma);
    const std::vector<Vertex> vs = sigma.vertices();
    std::set<HyperplaneNormal> normals;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const Vector n = cross(r[vs[i]], r[vs[j]]);
            if (!is_zero(n)) normals.insert(HyperplaneNormal(n));
        }
    }
    return {normals.begin(), normals.end()};
}

std::optional<EquatorCertificate> find_equator(const SimplicialComplex& sigma, const Realization& r, bool shortest) {
    std::optional<EquatorCertificate> best;
    for (const HyperplaneNormal& h : candidate_normals(sigma, r)) {
        std::vector<Vertex> plane;
        for (Vertex v : sigma.vertices()) {
            if (on_hyperplane(r, h, v)) plane.push_back(v);
        }
        if (plane.size() < 3) continue;
        const Graph g = induced_graph(sigma, plane);
        auto cycle = shortest ? shortest_cycle(g) : dfs_cycle(g);
        if (!cycle) continue;
        if (!shortest) return EquatorCertificate{std::move(*cycle), h};
        if (!best || cycle->size() < best->cycle.size()) best = EquatorCertificate{std::move(*cycle), h};
        if (best->cycle.size() == 3) break;
    }
    return best;
}

MainTheoremReport verify_main_theorem(const SimplicialComplex& sigma, const Realization& r, std::uint64_t seed,
                                      std::size_t trials) {
    MainTheoremReport report;
    report.seed = seed;
    report.trials = trials;
    const GradedModule module(sigma, std::nullopt, r);
    report.equator = find_equator(sigma, r);
    if (report.equator) {
        const std::string problem = validate_equator(sigma, r, *report.equator);
        if (!problem.empty()) report.violations.push_back("equator certificate invalid: " + problem);
    }
    report.search = random_search(module, trials, seed);
    report.construction = construct_lefschetz(module, seed);
    report.lefschetz_holds = report.search.found || report.construction.holds();

    if (!report.equator && !report.construction.holds()) {
        report.violations.push_back("no equator, yet the peeling construction failed");
    }
    if (!report.search.found && !report.equator) {
        report.violations.push_back("every sampled form fails, yet there is no equator");
    }
    report.implication_ok = report.violations.empty();
    report.non_sufficiency_witness = report.equator.has_value() && report.lefschetz_holds;
    return report;
}

}  // namespace blueprint
