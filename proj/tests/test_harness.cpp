#include <ivc/error.hpp>
#include <ivc/graph.hpp>
#include <ivc/harness.hpp>
#include <ivc/serialize.hpp>

#include <doctest.h>

using namespace ivc;

namespace {

auto small(SuiteId id, int n_max) -> SuiteParams
{
    auto p = default_params(id);
    p.n_max = std::min(p.n_max, n_max);
    return p;
}

auto without_timing(const SuiteReport & r) -> json
{
    auto j = to_json(r);
    j.erase("elapsed_ms");
    return j;
}

} // namespace

TEST_CASE("suite names")
{
    CHECK(all_suites().size() == 14);
    for (auto id : all_suites())
        CHECK(parse_suite_id(suite_name(id)) == id);
    CHECK(parse_suite_id("cycles") == SuiteId::cycles);
    CHECK_THROWS_AS(parse_suite_id("CYCLE"), InputError);
}

TEST_CASE("suites pass on small instances")
{
    const SuiteId passing[] = {SuiteId::unit_equiv_123, SuiteId::star_theorem, SuiteId::closed_is_proper,
        SuiteId::strong_implies_uc, SuiteId::monotone, SuiteId::interval_theorem_a, SuiteId::forbidden,
        SuiteId::unit_implies_chordal_complex, SuiteId::cycles, SuiteId::forests};
    for (auto id : passing) {
        CAPTURE(suite_name(id));
        auto r = run_suite(id, small(id, 5));
        CHECK(r.instances > 0);
        CHECK(r.passed());
    }
    auto p = default_params(SuiteId::corona);
    p.samples = 20;
    auto corona = run_suite(SuiteId::corona, p);
    CHECK(corona.instances == 20);
    CHECK(corona.passed());
}

TEST_CASE("reports are reproducible and independent of the worker count")
{
    auto p = small(SuiteId::star_theorem, 5);
    auto a = run_suite(SuiteId::star_theorem, p);
    p.jobs = 3;
    auto b = run_suite(SuiteId::star_theorem, p);
    b.params.jobs = 1;
    CHECK(without_timing(a) == without_timing(b));

    auto q = default_params(SuiteId::corona);
    q.samples = 15;
    q.seed = 42;
    CHECK(without_timing(run_suite(SuiteId::corona, q)) == without_timing(run_suite(SuiteId::corona, q)));
}

TEST_CASE("the mutated rule is caught")
{
    auto p = default_params(SuiteId::cycles);
    p.mutate = true;
    auto r = run_suite(SuiteId::cycles, p);
    CHECK_FALSE(r.passed());
    p.mutate = false;
    CHECK(run_suite(SuiteId::cycles, p).passed());
}

TEST_CASE("failures carry a replayable instance")
{
    // Definition and local under-closed forms already differ at n = 4.
    auto r = run_suite(SuiteId::under_closed_equiv, small(SuiteId::under_closed_equiv, 4));
    REQUIRE_FALSE(r.passed());
    const auto & f = r.failures.front();
    CHECK(f.instance.rfind("# suite UNDER_CLOSED_EQUIV\n", 0) == 0);
    auto g = parse_graph(f.instance);
    CHECK(g.order() <= 4);
    CHECK(f.expected != f.actual);
    CHECK(std::is_sorted(r.failures.begin(), r.failures.end(),
        [](const auto & a, const auto & b) { return a.instance < b.instance; }));
}

TEST_CASE("parameter validation")
{
    auto p = default_params(SuiteId::cycles);
    p.n_max = 9;
    CHECK_THROWS_AS(run_suite(SuiteId::cycles, p), InputError);
    p = default_params(SuiteId::cycles);
    p.d_min = 0;
    CHECK_THROWS_AS(run_suite(SuiteId::cycles, p), InputError);
    p = default_params(SuiteId::cycles);
    p.jobs = 0;
    CHECK_THROWS_AS(run_suite(SuiteId::cycles, p), InputError);
    p = default_params(SuiteId::star_theorem);
    p.n_max = 8;
    CHECK_THROWS_AS(run_suite(SuiteId::star_theorem, p), GuardRefusal);
}

TEST_CASE("report JSON")
{
    auto r = run_suite(SuiteId::forests, small(SuiteId::forests, 4));
    auto j = to_json(r);
    CHECK(j["schema"] == 1);
    CHECK(j["suite"] == "FORESTS");
    CHECK(j["passed"] == true);
    CHECK(j["instances"] == r.instances);
    CHECK(j["params"]["n_max"] == 4);
}
