#include <ivc/error.hpp>
#include <ivc/serialize.hpp>

namespace ivc {

auto to_json(const Labeling & l) -> json
{
    return json(l.images());
}

auto to_json(const IntervalSystem & r) -> json
{
    json out = json::array();
    for (const auto & iv : r.intervals())
        out.push_back({format_rational(iv.left), format_rational(iv.right)});
    return out;
}

auto to_json(VertexSet s) -> json
{
    return json(s.to_vector());
}

auto to_json(const PatternWitness & w) -> json
{
    json out{{"kind", pattern_kind_name(w.kind)}, {"vertices", to_json(w.vertices)}};
    if (w.kind == PatternKind::claw) {
        out["center"] = w.center;
        out["parts"] = json::array();
        for (auto p : w.parts)
            out["parts"].push_back(to_json(p));
    }
    return out;
}

auto to_json(const RecognitionResult & r) -> json
{
    json out{{"found", r.found}, {"nodes_explored", r.nodes_explored}, {"search_exhaustive", r.search_exhaustive}};
    if (r.labeling)
        out["labeling"] = to_json(*r.labeling);
    if (r.representation)
        out["representation"] = to_json(*r.representation);
    return out;
}

auto to_json(const SuiteParams & p) -> json
{
    return {{"n_min", p.n_min}, {"n_max", p.n_max}, {"d_min", p.d_min}, {"d_max", p.d_max},
        {"iso_reduced", p.iso_reduced}, {"labeled_max_n", p.labeled_max_n}, {"jobs", p.jobs}, {"seed", p.seed},
        {"mutate", p.mutate}, {"samples", p.samples}};
}

auto to_json(const SuiteReport & r) -> json
{
    json failures = json::array();
    for (const auto & f : r.failures)
        failures.push_back({{"instance", f.instance}, {"expected", f.expected}, {"actual", f.actual}});
    return {{"schema", json_schema_version}, {"suite", suite_name(r.suite)}, {"params", to_json(r.params)},
        {"instances", r.instances}, {"failures", failures}, {"notes", r.notes}, {"passed", r.passed()},
        {"elapsed_ms", r.elapsed_ms}};
}

auto labeling_from_json(const json & j) -> Labeling
{
    if (! j.is_array())
        throw InputError("labeling must be an array of labels");
    std::vector<int> images;
    for (const auto & x : j) {
        if (! x.is_number_integer())
            throw InputError("labeling entries must be integers");
        images.push_back(x.get<int>());
    }
    return Labeling(images);
}

auto interval_system_from_json(const json & j) -> IntervalSystem
{
    if (! j.is_array())
        throw InputError("representation must be an array of [left, right] pairs");
    auto endpoint = [](const json & x) {
        if (x.is_string())
            return parse_rational(x.get<std::string>());
        if (x.is_number_integer())
            return Rational(x.get<std::int64_t>());
        throw InputError("interval endpoints must be \"p/q\" strings or integers");
    };
    std::vector<Interval> intervals;
    for (const auto & pair : j) {
        if (! pair.is_array() || pair.size() != 2)
            throw InputError("each interval must be a [left, right] pair");
        intervals.push_back(Interval{endpoint(pair[0]), endpoint(pair[1])});
    }
    return IntervalSystem(std::move(intervals));
}

auto certificate_from_json(const json & j) -> Certificate
{
    if (! j.is_object())
        throw InputError("certificate must be a JSON object");
    Certificate c;
    if (j.contains("class") && j["class"].is_string())
        c.graph_class = j["class"].get<std::string>();
    if (j.contains("labeling"))
        c.labeling = labeling_from_json(j["labeling"]);
    if (j.contains("representation"))
        c.representation = interval_system_from_json(j["representation"]);
    if (! c.labeling && ! c.representation)
        throw InputError("certificate holds neither a labeling nor a representation");
    return c;
}

} // namespace ivc
