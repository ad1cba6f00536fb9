#include "doctest.h"

#include "blueprint/error.hpp"
#include "blueprint/io.hpp"

using namespace blueprint;

namespace {

ErrorCode code_of(const std::string& text, const LoadOptions& options = {}) {
    try {
        parse_instance(text, options);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::WrongInput;
}

std::string message_of(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

const char* kTriangle = R"({"n": 3, "labels": ["a", "b", "c"], "facets": [[0, 1, 2]],
  "coordinates": {"a": ["1", "0", "0"], "b": ["0", "1/2", "0"], "c": [0, 0, 3]}})";

}  // namespace

TEST_SUITE("io") {

TEST_CASE("instances round-trip") {
    for (auto name : {ExampleName::Tetrahedron, ExampleName::Octahedron, ExampleName::AhlBadSphere,
                      ExampleName::RandomSphere}) {
        ExampleSpec spec;
        spec.name = name;
        spec.seed = 9;
        const Instance in = build(spec);
        const std::string text = dump(to_json(in));
        const Loaded back = parse_instance(text);
        CHECK(back.warnings.empty());
        CHECK(back.instance.complex == in.complex);
        CHECK(back.instance.realization == in.realization);
        CHECK(back.instance.labels == in.labels);
        CHECK(dump(to_json(back.instance)) == text);
    }
}

TEST_CASE("loader accepts rationals as strings or integers") {
    const Loaded l = parse_instance(kTriangle);
    CHECK(l.instance.realization[1][1] == Rational(1, 2));
    CHECK(l.instance.realization[2][2] == 3);
    CHECK(l.instance.label(0) == "a");
}

TEST_CASE("loader reports locations") {
    CHECK(code_of("{\"n\": 3,\n \"facets\": [[0, 1]") == ErrorCode::Parse);
    CHECK(message_of("{\"n\": 3,\n \"facets\": [[0, 1]").find("line 2") != std::string::npos);
    CHECK(code_of(R"({"facets": []})") == ErrorCode::Validation);
    CHECK(message_of(R"({"n": 3, "facets": [[1, 0]], "coordinates": {}})").find("/facets/0") != std::string::npos);
    CHECK(message_of(R"({"n": 3, "facets": [[0, 5]], "coordinates": {}})").find("/facets/0/1") != std::string::npos);
    CHECK(code_of(R"({"n": 2, "labels": ["a", "a"], "facets": [], "coordinates": {}})") == ErrorCode::Validation);
    CHECK(code_of(R"({"n": 2, "facets": [[0, 1]], "coordinates": {"1": ["1", "0"]}})") == ErrorCode::Validation);
    CHECK(code_of(R"({"n": 2, "facets": [[0, 1]], "coordinates": {"1": ["1", "0"], "2": ["x", "1"]}})") ==
          ErrorCode::Validation);
    CHECK(code_of(R"({"n": 2, "facets": [[0, 1]], "coordinates": {"1": ["1", "0"], "2": ["1"]}})") ==
          ErrorCode::Validation);
    CHECK(code_of(R"({"n": 2, "facets": [[0, 1]], "coordinates": {"1": ["1", "0"], "3": ["0", "1"]}})") ==
          ErrorCode::Validation);
}

TEST_CASE("non-maximal facets: error or warning") {
    const std::string text = R"({"n": 3, "facets": [[0, 1, 2], [0, 1]],
      "coordinates": {"1": [1, 0, 0], "2": [0, 1, 0], "3": [0, 0, 1]}})";
    CHECK(code_of(text) == ErrorCode::Validation);
    const Loaded lenient = parse_instance(text, LoadOptions{false});
    CHECK(lenient.warnings.size() == 1);
    CHECK(lenient.instance.complex.facets().size() == 1);
}

TEST_CASE("linear forms round-trip through labels") {
    const Loaded l = parse_instance(kTriangle);
    const LinearForm ell(Vector{Rational(1, 3), 0, -2});
    const Json j = to_json(ell, l.instance);
    CHECK(j["a"] == "1/3");
    CHECK(linear_form_from_json(j, l.instance) == ell);
}

TEST_CASE("reports carry schema, seed, trials and coordinates") {
    ExampleSpec spec;
    spec.name = ExampleName::Octahedron;
    const Instance in = build(spec);
    const SearchResult result = random_search(in.complex, in.realization, 5, 3);
    const Json r = report("check", 3, 5, in, to_json(result, in));
    CHECK(r["schema_version"] == kSchemaVersion);
    CHECK(r["seed"] == 3);
    CHECK(r["trials"] == 5);
    CHECK(r["instance"]["coordinates"]["+e1"][0] == "1");
    CHECK(r["result"]["certificate"]["verdict"] == "Holds");
    const GradedModule module(in.complex, std::nullopt, in.realization);
    const Json p = to_json(module[1]);
    CHECK(p["degree"] == 1);
    CHECK(p["dim"] == 3);
    CHECK(p["basis"].size() == 6);
    const Json m = multiplication_json(module[1], module[2], result.best.ell, in);
    CHECK(m["rank"] == 3);
    CHECK(m.contains("ell"));
}

TEST_CASE("reports are byte-identical across runs") {
    ExampleSpec spec;
    spec.name = ExampleName::AhlBadSphere;
    spec.seed = 4;
    const Instance in = build(spec);
    auto run = [&] {
        const auto r = verify_main_theorem(in.complex, in.realization, 7, 20);
        return dump(report("verify", 7, 20, in, to_json(r, in)));
    };
    CHECK(run() == run());
}

}
