// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <ivc/complex.hpp>
#include <ivc/harness.hpp>
#include <ivc/interval.hpp>
#include <ivc/recognition.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <thread>

using namespace ivc;

namespace {

using Clock = std::chrono::steady_clock;

int failed = 0;

void report(int id, const std::string & title, bool ok, const std::string & detail)
{
    failed += ! ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << title << ": " << detail << std::endl;
}

auto seconds_since(Clock::time_point start) -> double
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

auto jobs() -> int
{
    return std::max(1u, std::thread::hardware_concurrency());
}

auto summary(const SuiteReport & r) -> std::string
{
    std::ostringstream s;
    s << suite_name(r.suite) << " " << r.instances << " instances, " << r.failures.size() << " failures, "
      << static_cast<long>(r.elapsed_ms) << " ms";
    if (! r.failures.empty()) {
        auto first = r.failures.front().instance;
        std::replace(first.begin(), first.end(), '\n', ' ');
        s << "; first: " << first << "expected " << r.failures.front().expected << ", got "
          << r.failures.front().actual;
    }
    return s.str();
}

/// Run a suite at its documented scope and require zero failures within
/// the time budget.
void suite_criterion(int id, const std::string & title, SuiteId suite, double budget_s)
{
    auto p = default_params(suite);
    p.jobs = jobs();
    auto start = Clock::now();
    try {
        auto r = run_suite(suite, p);
        bool in_time = seconds_since(start) < budget_s;
        report(id, title, r.passed() && in_time, summary(r) + (in_time ? "" : " (over time budget)"));
    }
    catch (const std::exception & e) {
        report(id, title, false, e.what());
    }
}

void worked_example()
{
    auto start = Clock::now();
    Graph g(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}});
    std::vector<std::string> problems;
    auto c = delta_d(g, 2);
    if (c.facets() != std::vector<VertexSet>{{1, 2, 3}, {1, 2, 4}, {2, 3, 4}})
        problems.push_back("delta_d facets " + format_complex(c));
    auto ind = ind_facets(g, 2);
    std::sort(ind.begin(), ind.end());
    if (ind != std::vector<VertexSet>{{1, 2}, {1, 3, 4}, {2, 3}, {2, 4}})
        problems.push_back("ind_facets mismatch");
    IntervalSystem r({{0, 1}, {1, 2}, {2, 3}, {2, 3}});
    auto flags = representation_flags(r);
    if (! validate_interval_representation(c, r) || ! flags.unit || ! flags.proper)
        problems.push_back("interval representation rejected");
    auto unit = find_unit_interval_labeling(c);
    if (! unit.found)
        problems.push_back("find_unit_interval_labeling: not found after " + std::to_string(unit.nodes_explored)
            + " nodes (exhaustive)");
    if (seconds_since(start) >= 1.0)
        problems.push_back("over 1 s");
    std::string detail;
    for (const auto & p : problems)
        detail += (detail.empty() ? "" : "; ") + p;
    report(1, "worked example", problems.empty(), problems.empty() ? "all four values match" : detail);
}

void forbidden_patterns()
{
    auto start = Clock::now();
    std::string detail;
    bool ok = true;
    for (auto suite : {SuiteId::forbidden, SuiteId::unit_implies_chordal_complex}) {
        auto p = default_params(suite);
        p.jobs = jobs();
        try {
            auto r = run_suite(suite, p);
            ok = ok && r.passed();
            detail += (detail.empty() ? "" : "; ") + summary(r);
        }
        catch (const std::exception & e) {
            ok = false;
            detail += e.what();
        }
    }
    bool in_time = seconds_since(start) < 3600;
    report(10, "forbidden-pattern implications", ok && in_time, detail + (in_time ? "" : " (over time budget)"));
}

void self_test()
{
    auto start = Clock::now();
    auto p = default_params(SuiteId::cycles);
    p.mutate = true;
    p.jobs = jobs();
    auto r = run_suite(SuiteId::cycles, p);
    bool in_time = seconds_since(start) < 60;
    report(11, "harness self-test (mutated rule)", ! r.passed() && in_time,
        summary(r) + (r.passed() ? " (mutation went undetected)" : ""));
}

} // namespace

int main()
{
    worked_example();
    suite_criterion(2, "cycle characterization", SuiteId::cycles, 300);
    suite_criterion(3, "forest characterization", SuiteId::forests, 600);
    suite_criterion(4, "under-closed equivalence", SuiteId::under_closed_equiv, 3600);
    suite_criterion(5, "condition-* theorem", SuiteId::star_theorem, 1800);
    suite_criterion(6, "strong implies under-closed", SuiteId::strong_implies_uc, 3600);
    suite_criterion(7, "monotonicity", SuiteId::monotone, 3600);
    suite_criterion(8, "sortability equivalence", SuiteId::sortable_equiv, 3600);
    suite_criterion(9, "interval-graph theorem", SuiteId::interval_theorem_a, 3600);
    forbidden_patterns();
    self_test();
    std::cout << (11 - failed) << "/11 criteria passed" << std::endl;
    return failed ? 1 : 0;
}
