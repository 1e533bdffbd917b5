#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ivc {

enum class SuiteId {
    under_closed_equiv,
    unit_equiv_123,
    star_theorem,
    closed_is_proper,
    strong_implies_uc,
    monotone,
    sortable_equiv,
    interval_theorem_a,
    forbidden,
    unit_implies_chordal_complex,
    cycles,
    forests,
    corona,
    sortable_forbidden,
};

auto all_suites() -> std::vector<SuiteId>;
/// Upper-case identifier, e.g. "UNDER_CLOSED_EQUIV".
auto suite_name(SuiteId id) -> std::string_view;
/// Case-insensitive; throws InputError on unknown names.
auto parse_suite_id(std::string_view name) -> SuiteId;

struct SuiteParams {
    int n_min = 1;
    int n_max = 5;
    int d_min = 1;
    int d_max = 3;
    /// Enumerate one graph per isomorphism class at every order. Every suite
    /// property quantifies over all labelings (or is labeling-free), so the
    /// reduction never changes a verdict; it only shrinks the instance list.
    bool iso_reduced = false;
    /// Orders above this are isomorphism-reduced even when iso_reduced is
    /// false (labeled enumeration at n = 7 is 2^21 graphs).
    int labeled_max_n = 6;
    int jobs = 1;
    std::uint64_t seed = 1;
    /// Replace the unit-interval rule with a variant that skips span subsets
    /// missing either endpoint, to prove the suites can fail.
    bool mutate = false;
    /// CORONA only: number of sampled instances.
    int samples = 200;
};

/// Parameters matching the documented scope of each suite.
auto default_params(SuiteId id) -> SuiteParams;

struct SuiteFailure {
    /// Replayable text: '#' comment lines (suite, d, labeling, context)
    /// followed by the graph in the graph file format.
    std::string instance;
    std::string expected;
    std::string actual;

    auto operator==(const SuiteFailure &) const -> bool = default;
};

struct SuiteReport {
    SuiteId suite = SuiteId::cycles;
    SuiteParams params;
    std::uint64_t instances = 0;
    /// Sorted by instance text.
    std::vector<SuiteFailure> failures;
    /// Observations recorded without being asserted.
    std::vector<std::string> notes;
    double elapsed_ms = 0;

    auto passed() const -> bool { return failures.empty(); }
};

/// Throws InputError for parameters outside the enumeration guard
/// (n_max <= 8, 1 <= d_min <= d_max, jobs >= 1).
auto run_suite(SuiteId id, const SuiteParams & params) -> SuiteReport;

} // namespace ivc
