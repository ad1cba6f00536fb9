#include "blueprint/io.hpp"

#include "blueprint/error.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace blueprint {

namespace {

[[noreturn]] void invalid(const std::string& pointer, const std::string& what) {
    throw Error(ErrorCode::Validation, "at " + pointer + ": " + what);
}

std::string line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Json vertex_labels(const std::vector<Vertex>& vs, const Instance& instance) {
    Json out = Json::array();
    for (Vertex v : vs) out.push_back(instance.label(v));
    return out;
}

Json vector_json(const Vector& v) {
    Json out = Json::array();
    for (const Rational& x : v) out.push_back(format_rational(x));
    return out;
}

Json degree_checks_json(const LefschetzCertificate& cert) {
    Json out = Json::array();
    for (const DegreeCheck& c : cert.degree_checks) {
        out.push_back({{"k", c.k}, {"rank", c.rank}, {"dim_k", c.dim_k}, {"dim_dual", c.dim_dual}});
    }
    return out;
}

}  // namespace

Loaded instance_from_json(const Json& j, const LoadOptions& options) {
    Loaded out;
    if (!j.is_object()) invalid("/", "expected an object");
    if (!j.contains("n") || !j["n"].is_number_integer()) invalid("/n", "expected an integer");
    const long long n = j["n"].get<long long>();
    if (n < 0) invalid("/n", "must be non-negative");

    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || j["labels"].size() != static_cast<std::size_t>(n)) {
            invalid("/labels", "expected " + std::to_string(n) + " strings");
        }
        for (std::size_t i = 0; i < j["labels"].size(); ++i) {
            if (!j["labels"][i].is_string()) invalid("/labels/" + std::to_string(i), "expected a string");
            labels.push_back(j["labels"][i].get<std::string>());
        }
    } else {
        for (long long i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    }
    std::map<std::string, Vertex> by_label;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!by_label.emplace(labels[i], static_cast<Vertex>(i)).second) {
            invalid("/labels/" + std::to_string(i), "duplicate label \"" + labels[i] + "\"");
        }
    }

    if (!j.contains("facets") || !j["facets"].is_array()) invalid("/facets", "expected an array of facets");
    std::vector<Face> facets;
    for (std::size_t i = 0; i < j["facets"].size(); ++i) {
        const std::string at = "/facets/" + std::to_string(i);
        const Json& f = j["facets"][i];
        if (!f.is_array()) invalid(at, "expected an array of vertex ids");
        std::vector<Vertex> vs;
        for (std::size_t t = 0; t < f.size(); ++t) {
            if (!f[t].is_number_integer()) invalid(at + "/" + std::to_string(t), "expected an integer");
            const long long v = f[t].get<long long>();
            if (v < 0 || v >= n) invalid(at + "/" + std::to_string(t), "vertex id out of range");
            if (!vs.empty() && v <= vs.back()) invalid(at, "facet is not strictly increasing");
            vs.push_back(static_cast<Vertex>(v));
        }
        facets.emplace_back(std::move(vs));
    }
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (std::size_t t = 0; t < facets.size(); ++t) {
            if (i == t || !facets[i].is_subset_of(facets[t])) continue;
            if (facets[i] == facets[t] && i > t) continue;  // reported once, for the first copy
            const std::string what = "facet is contained in facet " + std::to_string(t);
            if (options.strict_maximal) invalid("/facets/" + std::to_string(i), what);
            out.warnings.push_back("/facets/" + std::to_string(i) + ": " + what + " (dropped)");
            break;
        }
    }
    SimplicialComplex complex(static_cast<int>(n), facets);

    if (!j.contains("coordinates") || !j["coordinates"].is_object()) {
        invalid("/coordinates", "expected an object mapping labels to coordinate lists");
    }
    const Json& cj = j["coordinates"];
    std::vector<std::optional<Vector>> coords(static_cast<std::size_t>(n));
    int d = -1;
    for (const auto& [label, value] : cj.items()) {
        const std::string at = "/coordinates/" + label;
        auto it = by_label.find(label);
        if (it == by_label.end()) invalid(at, "unknown label");
        if (!value.is_array()) invalid(at, "expected an array of rationals");
        if (d < 0) d = static_cast<int>(value.size());
        if (static_cast<int>(value.size()) != d) invalid(at, "expected " + std::to_string(d) + " coordinates");
        Vector p;
        for (std::size_t t = 0; t < value.size(); ++t) {
            const Json& x = value[t];
            try {
                if (x.is_number_integer()) {
                    p.push_back(parse_rational(std::to_string(x.get<long long>())));
                } else if (x.is_string()) {
                    p.push_back(parse_rational(x.get<std::string>()));
                } else {
                    invalid(at + "/" + std::to_string(t), "expected a rational string \"p/q\"");
                }
            } catch (const Error& e) {
                if (e.code() != ErrorCode::Parse) throw;
                invalid(at + "/" + std::to_string(t), e.what());
            }
        }
        coords[static_cast<std::size_t>(it->second)] = std::move(p);
    }
    if (d < 0) d = 3;
    std::vector<Vector> dense;
    for (std::size_t v = 0; v < coords.size(); ++v) {
        if (!coords[v]) {
            if (complex.contains(Face{static_cast<Vertex>(v)})) {
                invalid("/coordinates", "missing coordinates for \"" + labels[v] + "\"");
            }
            dense.emplace_back(static_cast<std::size_t>(d));
        } else {
            dense.push_back(std::move(*coords[v]));
        }
    }
    out.instance = Instance{std::move(complex), Realization(d, std::move(dense)), std::move(labels)};
    return out;
}

Loaded parse_instance(const std::string& text, const LoadOptions& options) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann's message already carries "line L, column C"; drop its exception tag.
        std::string what = e.what();
        const auto tag = what.find("] ");
        if (tag != std::string::npos) what = what.substr(tag + 2);
        if (what.find("line ") == std::string::npos) what = line_column(text, e.byte) + ": " + what;
        throw Error(ErrorCode::Parse, what);
    }
    return instance_from_json(j, options);
}

Loaded load_instance(const std::string& path, const LoadOptions& options) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_instance(buffer.str(), options);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + std::string(e.what()).substr(to_string(e.code()).size() + 2));
    }
}

Json to_json(const Instance& instance) {
    const SimplicialComplex& c = instance.complex;
    Json j;
    j["n"] = c.groundset_size();
    Json labels = Json::array();
    for (Vertex v = 0; v < c.groundset_size(); ++v) labels.push_back(instance.label(v));
    j["labels"] = labels;
    Json facets = Json::array();
    for (const Face& f : c.facets()) facets.push_back(f.vertices());
    j["facets"] = facets;
    Json coords = Json::object();
    for (Vertex v = 0; v < c.groundset_size() && static_cast<std::size_t>(v) < instance.realization.size(); ++v) {
        coords[instance.label(v)] = vector_json(instance.realization[v]);
    }
    j["coordinates"] = coords;
    return j;
}

Json to_json(const LinearForm& ell, const Instance& instance) {
    Json j = Json::object();
    for (Vertex v = 0; v < ell.groundset_size(); ++v) j[instance.label(v)] = format_rational(ell[v]);
    return j;
}

LinearForm linear_form_from_json(const Json& j, const Instance& instance) {
    if (!j.is_object()) invalid("/ell", "expected an object mapping labels to rationals");
    Vector coefficients(static_cast<std::size_t>(instance.complex.groundset_size()));
    for (const auto& [label, value] : j.items()) {
        const auto it = std::find(instance.labels.begin(), instance.labels.end(), label);
        if (it == instance.labels.end()) invalid("/ell/" + label, "unknown label");
        if (!value.is_string()) invalid("/ell/" + label, "expected a rational string");
        coefficients[static_cast<std::size_t>(it - instance.labels.begin())] = parse_rational(value.get<std::string>());
    }
    return LinearForm(std::move(coefficients));
}

Json to_json(const Presentation& p) {
    Json basis = Json::array();
    for (const Monomial& m : p.basis()) basis.push_back(m.to_string());
    return {{"degree", p.degree()}, {"basis", basis}, {"relation_rank", p.relation_rank()}, {"dim", p.dim()}};
}

Json multiplication_json(const Presentation& source, const Presentation& target, const LinearForm& ell,
                         const Instance& instance) {
    Json j = to_json(target);
    j["ell"] = to_json(ell, instance);
    j["rank"] = induced_rank(target, multiplication_matrix(source, target, ell));
    return j;
}

Json to_json(const LefschetzCertificate& cert, const Instance& instance) {
    return {{"ell", to_json(cert.ell, instance)},
            {"degree_checks", degree_checks_json(cert)},
            {"verdict", cert.verdict == Verdict::Holds ? "Holds" : "FailsForThisEll"}};
}

Json to_json(const SearchResult& result, const Instance& instance) {
    return {{"found", result.found}, {"trials_run", result.trials_run}, {"certificate", to_json(result.best, instance)}};
}

Json to_json(const EquatorCertificate& cert, const Instance& instance) {
    return {{"cycle", vertex_labels(cert.cycle, instance)},
            {"cycle_ids", cert.cycle},
            {"hyperplane", vector_json(cert.hyperplane.normal())}};
}

Json to_json(const Construction& c, const Instance& instance) {
    Json steps = Json::array();
    for (const PeelStep& s : c.state.trace) {
        steps.push_back({{"vertex", instance.label(s.vertex)},
                         {"star", vertex_labels(s.star, instance)},
                         {"star_rank", s.star_rank},
                         {"lambda", format_rational(s.lambda)},
                         {"mu", format_rational(s.mu)},
                         {"kernel_dim_before", s.kernel_dim_before},
                         {"kernel_dim_after", s.kernel_dim_after},
                         {"predicted_kernel_dim", s.predicted_kernel_dim}});
    }
    Json j;
    j["holds"] = c.holds();
    j["attempts"] = c.attempts;
    j["removed"] = vertex_labels(c.state.removed, instance);
    j["trace"] = steps;
    j["certificate"] = c.certificate ? to_json(*c.certificate, instance) : Json(nullptr);
    if (c.failure) {
        const FailureTrace& f = *c.failure;
        Json rejections = Json::array();
        for (const Rejection& r : f.rejections) rejections.push_back({{"vertex", instance.label(r.vertex)}, {"reason", r.reason}});
        j["failure"] = {{"reason", f.reason},
                        {"coplanar_witness", vertex_labels(f.coplanar_witness, instance)},
                        {"witness_is_cycle", f.witness_is_cycle},
                        {"hyperplane", f.hyperplane ? vector_json(f.hyperplane->normal()) : Json(nullptr)},
                        {"rejections", rejections}};
    } else {
        j["failure"] = nullptr;
    }
    return j;
}

Json to_json(const MainTheoremReport& report, const Instance& instance) {
    Json lefschetz;
    lefschetz["holds"] = report.lefschetz_holds;
    lefschetz["search"] = to_json(report.search, instance);
    lefschetz["construction"] = to_json(report.construction, instance);
    Json j;
    j["lefschetz"] = lefschetz;
    j["equator"] = report.equator ? to_json(*report.equator, instance) : Json(nullptr);
    j["implication_ok"] = report.implication_ok;
    j["non_sufficiency_witness"] = report.non_sufficiency_witness;
    j["violations"] = report.violations;
    return j;
}

Json report(const std::string& command, std::uint64_t seed, std::size_t trials, const Instance& instance,
            Json result) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["seed"] = seed;
    j["trials"] = trials;
    j["instance"] = to_json(instance);
    j["result"] = std::move(result);
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace blueprint
