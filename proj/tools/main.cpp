#include "blueprint/equator.hpp"
#include "blueprint/error.hpp"
#include "blueprint/examples.hpp"
#include "blueprint/io.hpp"
#include "blueprint/lefschetz.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace blueprint;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitViolation = 3;

struct Config {
    std::string input;
    std::uint64_t seed = 0;
    std::size_t trials = kDefaultTrials;
    std::string out;
    std::string format = "json";
    bool lenient = false;
    // example
    std::string example;
    std::string placement = "off-plane";
    int subdivisions = 6;
    bool planar_link = false;
    // equator
    bool shortest = false;
};

void emit(const Config& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(cfg.out);
    if (!file) throw Error(ErrorCode::Validation, "cannot write " + cfg.out);
    file << text;
}

Instance load(const Config& cfg) {
    Loaded loaded = load_instance(cfg.input, LoadOptions{!cfg.lenient});
    for (const auto& w : loaded.warnings) std::cerr << "warning: " << cfg.input << w << "\n";
    return std::move(loaded.instance);
}

std::string labels_of(const Instance& in, const std::vector<Vertex>& vs) {
    std::string s;
    for (Vertex v : vs) s += (s.empty() ? "" : " ") + in.label(v);
    return s;
}

std::string text_certificate(const LefschetzCertificate& cert) {
    std::ostringstream out;
    out << (cert.verdict == Verdict::Holds ? "Holds" : "FailsForThisEll") << "\n";
    for (const DegreeCheck& c : cert.degree_checks) {
        out << "  k=" << c.k << " rank " << c.rank << " of dims " << c.dim_k << ", " << c.dim_dual << "\n";
    }
    return out.str();
}

std::string text_equator(const Instance& in, const std::optional<EquatorCertificate>& eq) {
    if (!eq) return "equator: none\n";
    std::string normal;
    for (const Rational& x : eq->hyperplane.normal()) normal += (normal.empty() ? "" : " ") + format_rational(x);
    return "equator: " + labels_of(in, eq->cycle) + " (normal " + normal + ")\n";
}

std::string text_construction(const Instance& in, const Construction& c) {
    std::ostringstream out;
    for (const PeelStep& s : c.state.trace) {
        out << "peel " << in.label(s.vertex) << ": star rank " << s.star_rank << ", kernel " << s.kernel_dim_before
            << " -> " << s.kernel_dim_after << "\n";
    }
    if (c.certificate) out << "construction: " << text_certificate(*c.certificate);
    if (c.failure) {
        out << "construction failed: " << c.failure->reason << "\n  witness: " << labels_of(in, c.failure->coplanar_witness)
            << "\n";
        for (const Rejection& r : c.failure->rejections) out << "  rejected " << in.label(r.vertex) << ": " << r.reason << "\n";
    }
    return out.str();
}

int run_example(const Config& cfg) {
    ExampleSpec spec;
    spec.name = parse_example_name(cfg.example);
    spec.seed = cfg.seed;
    spec.subdivisions = cfg.subdivisions;
    spec.placement = parse_placement(cfg.placement);
    spec.planar_link = cfg.planar_link;
    const Instance in = build(spec);
    if (cfg.format == "json") {
        emit(cfg, dump(to_json(in)));
    } else {
        std::ostringstream out;
        const auto f = in.complex.f_vector();
        out << to_string(spec.name) << " seed " << cfg.seed << ": f-vector";
        for (auto x : f) out << " " << x;
        out << "\n";
        for (Vertex v : in.complex.vertices()) {
            out << "  " << in.label(v) << ":";
            for (const Rational& x : in.realization[v]) out << " " << format_rational(x);
            out << "\n";
        }
        emit(cfg, out.str());
    }
    return kExitOk;
}

int run_check(const Config& cfg) {
    const Instance in = load(cfg);
    const SearchResult result = random_search(in.complex, in.realization, cfg.trials, cfg.seed);
    if (cfg.format == "json") {
        emit(cfg, dump(report("check", cfg.seed, cfg.trials, in, to_json(result, in))));
    } else {
        emit(cfg, "trials run: " + std::to_string(result.trials_run) + "\n" + text_certificate(result.best));
    }
    return kExitOk;
}

int run_equator(const Config& cfg) {
    const Instance in = load(cfg);
    const auto eq = find_equator(in.complex, in.realization, cfg.shortest);
    if (cfg.format == "json") {
        Json result;
        result["equator"] = eq ? to_json(*eq, in) : Json(nullptr);
        emit(cfg, dump(report("equator", cfg.seed, cfg.trials, in, result)));
    } else {
        emit(cfg, text_equator(in, eq));
    }
    return kExitOk;
}

int run_verify(const Config& cfg) {
    const Instance in = load(cfg);
    const MainTheoremReport r = verify_main_theorem(in.complex, in.realization, cfg.seed, cfg.trials);
    if (cfg.format == "json") {
        emit(cfg, dump(report("verify", cfg.seed, cfg.trials, in, to_json(r, in))));
    } else {
        std::ostringstream out;
        out << "lefschetz: " << (r.lefschetz_holds ? "holds" : "no element found") << "\n" << text_equator(in, r.equator);
        out << "implication_ok: " << (r.implication_ok ? "true" : "false") << "\n";
        out << "non_sufficiency_witness: " << (r.non_sufficiency_witness ? "true" : "false") << "\n";
        for (const auto& v : r.violations) out << "violation: " << v << "\n";
        emit(cfg, out.str());
    }
    for (const auto& v : r.violations) std::cerr << "harness violation: " << v << "\n";
    return r.implication_ok ? kExitOk : kExitViolation;
}

int run_hilbert(const Config& cfg) {
    const Instance in = load(cfg);
    const GradedModule module(in.complex, std::nullopt, in.realization);
    Json h = Json::array();
    Json pieces = Json::array();
    std::string text = "h:";
    for (int k = 0; k <= module.top_degree(); ++k) {
        h.push_back(module[k].dim());
        pieces.push_back(to_json(module[k]));
        text += " " + std::to_string(module[k].dim());
    }
    if (cfg.format == "json") {
        emit(cfg, dump(report("hilbert", cfg.seed, cfg.trials, in, {{"hilbert", h}, {"presentations", pieces}})));
    } else {
        emit(cfg, text + "\n");
    }
    return kExitOk;
}

int run_peel(const Config& cfg) {
    const Instance in = load(cfg);
    const Construction c = construct_lefschetz(in.complex, in.realization, cfg.seed);
    if (cfg.format == "json") {
        emit(cfg, dump(report("peel", cfg.seed, cfg.trials, in, to_json(c, in))));
    } else {
        emit(cfg, text_construction(in, c));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Artinian reductions, Lefschetz elements and equators of triangulated 2-spheres"};
    app.require_subcommand(1);
    Config cfg;

    auto common = [&cfg](CLI::App* sub, bool takes_input) {
        if (takes_input) sub->add_option("input", cfg.input, "complex JSON file")->required();
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--trials", cfg.trials, "number of random forms to try");
        sub->add_option("--out", cfg.out, "write output to this file");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
        if (takes_input) sub->add_flag("--lenient", cfg.lenient, "drop non-maximal facets with a warning");
    };

    auto* example = app.add_subcommand("example", "build a named example");
    common(example, false);
    example->add_option("name", cfg.example, "tetrahedron | octahedron | ahl-bad-sphere | random-sphere")->required();
    example->add_option("--placement", cfg.placement, "subdivision vertex placement")
        ->check(CLI::IsMember({"off-plane", "in-span"}));
    example->add_option("--subdivisions", cfg.subdivisions, "stellar subdivisions (random-sphere)");
    example->add_flag("--planar-link", cfg.planar_link, "flatten one vertex link into z = 0 (random-sphere)");

    auto* check = app.add_subcommand("check", "search for a Lefschetz element");
    common(check, true);
    auto* equator = app.add_subcommand("equator", "find a cycle of the 1-skeleton in a linear plane");
    common(equator, true);
    equator->add_flag("--shortest", cfg.shortest, "report a shortest such cycle");
    auto* verify = app.add_subcommand("verify", "run the equator/Lefschetz dichotomy harness");
    common(verify, true);
    auto* hilbert = app.add_subcommand("hilbert", "dimensions of the Artinian reduction");
    common(hilbert, true);
    auto* peel = app.add_subcommand("peel", "construct a Lefschetz element by vertex peeling");
    common(peel, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (example->parsed()) return run_example(cfg);
        if (check->parsed()) return run_check(cfg);
        if (equator->parsed()) return run_equator(cfg);
        if (verify->parsed()) return run_verify(cfg);
        if (hilbert->parsed()) return run_hilbert(cfg);
        if (peel->parsed()) return run_peel(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
