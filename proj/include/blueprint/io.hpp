#pragma once

#include "blueprint/equator.hpp"
#include "blueprint/examples.hpp"
#include "blueprint/lefschetz.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace blueprint {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Non-maximal facets are an error when strict, otherwise dropped with a warning.
struct LoadOptions {
    bool strict_maximal = true;
};

struct Loaded {
    Instance instance;
    std::vector<std::string> warnings;
};

/// Throws Error{Parse} (with line/column) on malformed JSON, Error{Validation}
/// (with a JSON pointer) on content problems, and the geometry errors otherwise.
Loaded parse_instance(const std::string& text, const LoadOptions& options = {});
Loaded load_instance(const std::string& path, const LoadOptions& options = {});
Loaded instance_from_json(const Json& j, const LoadOptions& options = {});

Json to_json(const Instance& instance);
Json to_json(const LinearForm& ell, const Instance& instance);
LinearForm linear_form_from_json(const Json& j, const Instance& instance);

Json to_json(const Presentation& p);
/// Presentation certificate of the target degree plus ℓ and rank of ·ℓ.
Json multiplication_json(const Presentation& source, const Presentation& target, const LinearForm& ell,
                         const Instance& instance);
Json to_json(const LefschetzCertificate& cert, const Instance& instance);
Json to_json(const SearchResult& result, const Instance& instance);
Json to_json(const EquatorCertificate& cert, const Instance& instance);
Json to_json(const Construction& c, const Instance& instance);
Json to_json(const MainTheoremReport& report, const Instance& instance);

/// Envelope shared by all reports: schema version, command, seed, trials and the
/// full instance (with coordinates), followed by `result`.
Json report(const std::string& command, std::uint64_t seed, std::size_t trials, const Instance& instance,
            Json result);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace blueprint
