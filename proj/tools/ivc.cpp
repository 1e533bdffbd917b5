// ivc: command-line front end.
//
// Exit codes: 0 main answer true / pass / pattern absent, 1 false / fail /
// pattern present, 2 input error, 3 guard refusal, 4 theorem violation.

#include <ivc/complex.hpp>
#include <ivc/error.hpp>
#include <ivc/forbidden.hpp>
#include <ivc/harness.hpp>
#include <ivc/labeling.hpp>
#include <ivc/predicates.hpp>
#include <ivc/recognition.hpp>
#include <ivc/serialize.hpp>
#include <ivc/sortability.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ivc;

namespace {

struct RunConfig {
    std::string input;
    int d = 0;
    bool json = false;
    std::string labeling;
    std::string predicate;
    std::string certificate;
    std::string graph_class = "unit_interval";
    std::string target = "delta";
    int t = -1;
    std::string kind = "all";
    int length = 0;
    bool search = false;
    SearchGuards guards;
    std::string suite;
    SuiteParams params;
    bool seed_given = false;
    bool iso = false;
    int n_min = 0, n_max = 0, d_min = 0, d_max = 0, samples = -1;
};

auto code(ExitCode c) -> int
{
    return static_cast<int>(c);
}

auto verdict(bool positive) -> int
{
    return positive ? code(ExitCode::ok) : code(ExitCode::negative);
}

void emit(const RunConfig & cfg, json j, const std::string & text)
{
    if (cfg.json) {
        j["schema"] = json_schema_version;
        std::cout << j.dump(2) << "\n";
    }
    else
        std::cout << text;
}

auto faces_json(const std::vector<VertexSet> & faces) -> json
{
    json out = json::array();
    for (auto f : faces)
        out.push_back(to_json(f));
    return out;
}

auto cmd_build(const RunConfig & cfg) -> int
{
    auto g = read_graph_file(cfg.input);
    json j{{"command", "build"}, {"target", cfg.target}, {"n", g.order()}, {"d", cfg.d}};
    if (cfg.target == "delta") {
        auto c = delta_d(g, cfg.d);
        j["facets"] = faces_json(c.facets());
        emit(cfg, j, format_complex(c));
    }
    else if (cfg.target == "ind-facets") {
        auto facets = ind_facets(g, cfg.d);
        j["facets"] = faces_json(facets);
        emit(cfg, j, format_face_list(g.order(), facets));
    }
    else if (cfg.target == "ind-faces") {
        if (cfg.t < 0 || cfg.t > g.order())
            throw InputError("ind-faces needs --t between 0 and " + std::to_string(g.order()));
        auto faces = ind_faces(g, cfg.d, cfg.t);
        j["t"] = cfg.t;
        j["faces"] = faces_json(faces.faces);
        emit(cfg, j, format_face_set(g.order(), faces));
    }
    else
        throw InputError("unknown build target '" + cfg.target + "' (expected delta, ind-facets or ind-faces)");
    return code(ExitCode::ok);
}

auto load_complex(const RunConfig & cfg) -> PureComplex
{
    if (cfg.d > 0)
        return delta_d(read_graph_file(cfg.input), cfg.d);
    return read_complex_file(cfg.input);
}

auto predicate_for_class(const std::string & cls) -> std::optional<LabelingPredicate>
{
    switch (parse_graph_class(cls)) {
    case GraphClass::under_closed: return LabelingPredicate::under_closed_local;
    case GraphClass::unit_interval: return LabelingPredicate::unit_interval;
    case GraphClass::condition_star: return LabelingPredicate::condition_star;
    default: return std::nullopt;
    }
}

auto cmd_check(const RunConfig & cfg) -> int
{
    auto c = load_complex(cfg);
    Certificate cert;
    if (! cfg.certificate.empty()) {
        std::ifstream in(cfg.certificate);
        if (! in)
            throw InputError("cannot open certificate file '" + cfg.certificate + "'");
        json j;
        try {
            in >> j;
        }
        catch (const json::exception & e) {
            throw InputError("certificate is not valid JSON: " + std::string(e.what()));
        }
        cert = certificate_from_json(j);
    }
    if (! cfg.labeling.empty())
        cert.labeling = parse_labeling(cfg.labeling);
    const auto labeling = cert.labeling.value_or(Labeling::identity(c.order()));
    if (labeling.size() != c.order())
        throw InputError("labeling has " + std::to_string(labeling.size()) + " entries for " + std::to_string(c.order())
            + " vertices");
    const auto relabeled = relabel(c, labeling);

    std::optional<LabelingPredicate> pred;
    if (! cfg.predicate.empty())
        pred = parse_predicate(cfg.predicate);
    else if (cert.graph_class)
        pred = predicate_for_class(*cert.graph_class);
    if (! pred && ! cert.representation)
        throw InputError("nothing to check: give --predicate or a certificate");

    bool ok = true;
    std::ostringstream text;
    json j{{"command", "check"}, {"labeling", to_json(labeling)}};
    if (pred) {
        auto v = find_violation(relabeled, *pred);
        ok = ok && ! v;
        j["predicate"] = predicate_name(*pred);
        j["holds"] = ! v;
        text << predicate_name(*pred) << ": " << (v ? "false" : "true") << "\n";
        if (v) {
            j["violation"] = {{"facet", to_json(v->facet)}, {"missing", to_json(v->missing)}, {"outsider", v->outsider},
                {"other", to_json(v->other)}, {"description", describe(*v, *pred)}};
            text << "  " << describe(*v, *pred) << "\n";
        }
    }
    if (cert.representation) {
        if (cert.representation->size() != c.order())
            throw InputError("representation has " + std::to_string(cert.representation->size())
                + " intervals for " + std::to_string(c.order()) + " vertices");
        auto mismatch = interval_representation_mismatch(relabeled, *cert.representation);
        auto flags = representation_flags(*cert.representation);
        ok = ok && ! mismatch;
        j["representation_valid"] = ! mismatch;
        j["unit"] = flags.unit;
        j["proper"] = flags.proper;
        text << "interval representation: " << (mismatch ? "false" : "true") << " (unit " << std::boolalpha
             << flags.unit << ", proper " << flags.proper << ")\n";
        if (mismatch) {
            j["mismatch"] = to_json(*mismatch);
            text << "  labels " << mismatch->to_string() << " break the facet/interval biconditional\n";
        }
        if (cert.graph_class) {
            auto cls = parse_graph_class(*cert.graph_class);
            bool flag_ok = cls == GraphClass::strong_unit ? flags.unit
                : cls == GraphClass::strong_proper        ? flags.proper
                                                          : true;
            ok = ok && flag_ok;
        }
    }
    j["result"] = ok;
    emit(cfg, j, text.str());
    return verdict(ok);
}

auto cmd_recognize(const RunConfig & cfg) -> int
{
    auto g = read_graph_file(cfg.input);
    auto cls = parse_graph_class(cfg.graph_class);
    auto r = recognize_graph_class(g, cfg.d, cls, cfg.guards);
    json j = to_json(r);
    j["command"] = "recognize";
    j["class"] = graph_class_name(cls);
    j["d"] = cfg.d;
    std::ostringstream text;
    text << graph_class_name(cls) << " (d = " << cfg.d << "): " << (r.found ? "found" : "not found") << "\n";
    if (r.labeling)
        text << "labeling: " << format_labeling(*r.labeling) << "\n";
    if (r.representation)
        text << "representation: " << format_interval_system(*r.representation) << "\n";
    text << "nodes explored: " << r.nodes_explored << (r.search_exhaustive ? "" : " (search not exhaustive)") << "\n";
    emit(cfg, j, text.str());
    return verdict(r.found);
}

auto cmd_forbidden(const RunConfig & cfg) -> int
{
    auto g = read_graph_file(cfg.input);
    const bool all = cfg.kind == "all";
    if (! all && cfg.kind != "cycle" && cfg.kind != "claw" && cfg.kind != "paw")
        throw InputError("unknown pattern kind '" + cfg.kind + "' (expected cycle, claw, paw or all)");
    const int length = cfg.length ? cfg.length : cfg.d + 3;

    json j{{"command", "forbidden"}, {"d", cfg.d}, {"witnesses", json::array()}};
    std::ostringstream text;
    bool present = false;
    auto report = [&](const std::string & name, const std::optional<PatternWitness> & w) {
        if (w && ! validate_witness(g, cfg.d, *w))
            throw TheoremViolation(name + " witness does not re-validate");
        present = present || w.has_value();
        if (w)
            j["witnesses"].push_back(to_json(*w));
        text << name << ": ";
        if (! w)
            text << "absent\n";
        else if (w->kind == PatternKind::claw)
            text << "center " << w->center << ", parts " << w->parts[0].to_string() << " " << w->parts[1].to_string()
                 << " " << w->parts[2].to_string() << "\n";
        else
            text << w->vertices.to_string() << "\n";
    };
    if (all || cfg.kind == "cycle") {
        j["cycle_length"] = length;
        report("induced cycle >= " + std::to_string(length), find_induced_cycle_geq(g, length));
    }
    if (all || cfg.kind == "claw")
        report(std::to_string(cfg.d) + "-claw", find_d_claw(g, cfg.d));
    if (all || cfg.kind == "paw")
        report(std::to_string(cfg.d) + "-paw", find_d_paw(g, cfg.d));
    j["present"] = present;
    emit(cfg, j, text.str());
    return verdict(! present);
}

auto cmd_sortable(const RunConfig & cfg) -> int
{
    auto g = read_graph_file(cfg.input);
    json j{{"command", "sortable"}, {"d", cfg.d}};
    std::ostringstream text;
    bool sortable = false;
    if (cfg.search) {
        auto l = find_sortable_labeling(g, cfg.d, cfg.guards.labeling_max_n);
        sortable = l.has_value();
        j["search"] = true;
        if (l)
            j["labeling"] = to_json(*l);
        text << "Ind_" << cfg.d << " sortable under some labeling: " << std::boolalpha << sortable << "\n";
        if (l)
            text << "labeling: " << format_labeling(*l) << "\n";
    }
    else {
        auto l = cfg.labeling.empty() ? Labeling::identity(g.order()) : parse_labeling(cfg.labeling);
        if (l.size() != g.order())
            throw InputError("labeling size does not match the graph");
        auto relabeled = relabel(g, l);
        j["labeling"] = to_json(l);
        sortable = true;
        for (const auto & faces : ind_face_sets(relabeled, cfg.d))
            if (auto f = find_sort_failure(faces.faces, faces.t)) {
                sortable = false;
                j["failure"] = {{"t", faces.t}, {"u", to_json(f->u)}, {"v", to_json(f->v)},
                    {"sorted", {to_json(f->sorted_u), to_json(f->sorted_v)}}};
                text << "t = " << faces.t << ": sort(" << f->u.to_string() << ", " << f->v.to_string() << ") = ("
                     << f->sorted_u.to_string() << ", " << f->sorted_v.to_string() << ") leaves the face set\n";
                break;
            }
        text << "Ind_" << cfg.d << " sortable: " << std::boolalpha << sortable << "\n";
    }
    j["sortable"] = sortable;
    emit(cfg, j, text.str());
    return verdict(sortable);
}

auto cmd_verify(RunConfig cfg) -> int
{
    std::vector<SuiteId> suites;
    if (cfg.suite == "all" || cfg.suite == "ALL")
        suites = all_suites();
    else
        suites.push_back(parse_suite_id(cfg.suite));
    if (! cfg.seed_given && std::find(suites.begin(), suites.end(), SuiteId::corona) != suites.end())
        throw InputError("CORONA samples randomly: --seed is required");

    bool all_passed = true;
    json reports = json::array();
    std::ostringstream text;
    for (auto id : suites) {
        auto p = default_params(id);
        p.jobs = cfg.params.jobs;
        p.seed = cfg.params.seed;
        p.mutate = cfg.params.mutate;
        p.iso_reduced = p.iso_reduced || cfg.iso;
        if (cfg.n_min)
            p.n_min = cfg.n_min;
        if (cfg.n_max)
            p.n_max = cfg.n_max;
        if (cfg.d_min)
            p.d_min = cfg.d_min;
        if (cfg.d_max)
            p.d_max = cfg.d_max;
        if (cfg.samples >= 0)
            p.samples = cfg.samples;
        auto r = run_suite(id, p);
        all_passed = all_passed && r.passed();
        reports.push_back(to_json(r));
        text << suite_name(id) << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.instances << " instances, "
             << r.failures.size() << " failures)\n";
        for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i)
            text << "  expected " << r.failures[i].expected << ", got " << r.failures[i].actual << "\n"
                 << r.failures[i].instance;
        for (const auto & note : r.notes)
            text << "  note: " << note << "\n";
    }
    if (cfg.json) {
        json j = suites.size() == 1 ? reports.front() : json{{"command", "verify"}, {"reports", reports}};
        emit(cfg, j, {});
    }
    else
        std::cout << text.str();
    return verdict(all_passed);
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Interval-type simplicial complexes of graphs: build, check, recognise, verify"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto add_d = [&](CLI::App * sub, bool required) {
        auto opt = sub->add_option("--d,-d", cfg.d, "Dimension d (facets have d + 1 vertices)")->check(
            CLI::PositiveNumber);
        if (required)
            opt->required();
    };
    auto add_guards = [&](CLI::App * sub) {
        sub->add_option("--max-n", cfg.guards.labeling_max_n, "Vertex limit for labeling searches")
            ->check(CLI::PositiveNumber);
        sub->add_option("--strong-max-n", cfg.guards.strong_max_n, "Vertex limit for interval-system searches")
            ->check(CLI::PositiveNumber);
    };

    auto build = app.add_subcommand("build", "Build Delta_d(G) or Ind_d(G) faces from a graph file");
    build->add_option("graph", cfg.input, "Graph file")->required();
    add_d(build, true);
    build->add_option("--target", cfg.target, "delta, ind-facets or ind-faces");
    build->add_option("--t", cfg.t, "Face cardinality for ind-faces");

    auto check = app.add_subcommand("check", "Evaluate a predicate or certificate on a labeled complex");
    check->add_option("complex", cfg.input, "Complex file (or graph file with --d)")->required();
    add_d(check, false);
    check->add_option("--predicate", cfg.predicate,
        "under-closed-def, under-closed, unit-interval, cond2, cond3, condition-star, chordal-complex");
    check->add_option("--labeling", cfg.labeling, "Labels of vertices 1..n, e.g. \"2 1 3 4\"");
    check->add_option("--certificate", cfg.certificate, "JSON report from `recognize`");

    auto recognize = app.add_subcommand("recognize", "Search for a labeling or interval representation");
    recognize->add_option("graph", cfg.input, "Graph file")->required();
    add_d(recognize, true);
    recognize->add_option("--class", cfg.graph_class,
        "under_closed, unit_interval, strong_interval, strong_unit, strong_proper, condition_star");
    add_guards(recognize);

    auto forbidden = app.add_subcommand("forbidden", "Scan for long induced cycles, d-claws and d-paws");
    forbidden->add_option("graph", cfg.input, "Graph file")->required();
    add_d(forbidden, true);
    forbidden->add_option("--kind", cfg.kind, "cycle, claw, paw or all");
    forbidden->add_option("--length", cfg.length, "Minimum cycle length (default d + 3)");

    auto sortable = app.add_subcommand("sortable", "Sortability of Ind_d(G)");
    sortable->add_option("graph", cfg.input, "Graph file")->required();
    add_d(sortable, true);
    sortable->add_option("--labeling", cfg.labeling, "Labels of vertices 1..n (default identity)");
    sortable->add_flag("--search", cfg.search, "Try every labeling");
    add_guards(sortable);

    auto verify = app.add_subcommand("verify", "Run a verification suite (or all)");
    verify->add_option("suite", cfg.suite, "Suite id or 'all'")->required();
    verify->add_option("--n-min", cfg.n_min)->check(CLI::PositiveNumber);
    verify->add_option("--n-max", cfg.n_max)->check(CLI::PositiveNumber);
    verify->add_option("--d-min", cfg.d_min)->check(CLI::PositiveNumber);
    verify->add_option("--d-max", cfg.d_max)->check(CLI::PositiveNumber);
    verify->add_option("--jobs", cfg.params.jobs, "Worker threads")->check(CLI::PositiveNumber);
    auto seed = verify->add_option("--seed", cfg.params.seed, "Seed for sampled suites");
    verify->add_option("--samples", cfg.samples, "Sample count for CORONA")->check(CLI::NonNegativeNumber);
    verify->add_flag("--iso", cfg.iso, "One graph per isomorphism class");
    verify->add_flag("--mutate", cfg.params.mutate, "Use a deliberately broken unit-interval rule");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : code(ExitCode::input_error);
    }
    cfg.json = format == "json";
    cfg.seed_given = seed->count() > 0;

    try {
        if (*build)
            return cmd_build(cfg);
        if (*check)
            return cmd_check(cfg);
        if (*recognize)
            return cmd_recognize(cfg);
        if (*forbidden)
            return cmd_forbidden(cfg);
        if (*sortable)
            return cmd_sortable(cfg);
        return cmd_verify(cfg);
    }
    catch (const Error & e) {
        std::cerr << e.what() << "\n";
        return code(e.code());
    }
    catch (const std::exception & e) {
        std::cerr << "input error: " << e.what() << "\n";
        return code(ExitCode::input_error);
    }
}
