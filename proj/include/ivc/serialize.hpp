#pragma once

#include <ivc/forbidden.hpp>
#include <ivc/harness.hpp>
#include <ivc/interval.hpp>
#include <ivc/labeling.hpp>
#include <ivc/recognition.hpp>

#include <json.hpp>

#include <optional>

namespace ivc {

using nlohmann::json;

inline constexpr int json_schema_version = 1;

/// Permutation array: element v - 1 is the label of vertex v.
auto to_json(const Labeling & l) -> json;
/// Array of ["p/q", "p/q"] pairs.
auto to_json(const IntervalSystem & r) -> json;
auto to_json(VertexSet s) -> json;
auto to_json(const PatternWitness & w) -> json;
auto to_json(const RecognitionResult & r) -> json;
auto to_json(const SuiteParams & p) -> json;
/// {schema, suite, params, instances, failures, notes, passed, elapsed_ms}
auto to_json(const SuiteReport & r) -> json;

auto labeling_from_json(const json & j) -> Labeling;
auto interval_system_from_json(const json & j) -> IntervalSystem;

/// What a recognition report certifies.
struct Certificate {
    std::optional<std::string> graph_class;
    std::optional<Labeling> labeling;
    std::optional<IntervalSystem> representation;
};

/// Reads "labeling", "representation" and "class" from a recognize report
/// (or any object with those keys). Throws InputError on malformed data.
auto certificate_from_json(const json & j) -> Certificate;

} // namespace ivc
