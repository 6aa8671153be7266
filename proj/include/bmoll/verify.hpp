#ifndef BMOLL_VERIFY_HPP
#define BMOLL_VERIFY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bmoll/numeric.hpp"

namespace bmoll {

struct CheckResult {
    std::string name;
    std::string range;
    bool pass = true;
    bool advisory = false; // advisory failures are reported but don't gate the exit status
    std::string counterexample;
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string to_text() const;
};

/// Per-check range caps for the O(m^2)-per-row checks, so a large max_m
/// scales only the linear ones. Defaults match the stated verification
/// ranges; effective range is min(max_m, cap).
struct SuiteOptions {
    bool strict_gamma = false;
    bool quadrature = false;
    unsigned long d_closed_max = 200;
    unsigned long gamma_routes_max = 300;
    unsigned long reconstruct_max = 200;
    unsigned long identity_max = 50;
    unsigned long jacobi_max = 50;
    unsigned long quadrature_m_max = 5;
};

/// Runs the whole identity/property suite for m = 0..max_m in one streaming
/// sweep (rows are advanced, not materialized). Deterministic: identical
/// inputs produce identical Reports. Failures are data, not exceptions.
Report run_suite(unsigned long max_m, const SuiteOptions& options = {});

/// Embedded sequence prefix: values[i] is the term at index start + i.
struct OeisFixture {
    long start = 0;
    std::vector<std::string> values;
};

/// Fixtures ship with the binary (regenerate by feeding fresh b-files to the
/// oeis-check CLI); nothing here ever touches the network.
const std::map<std::string, OeisFixture>& oeis_fixtures();

/// values[i] must equal the fixture term at index offset + i.
/// Throws unknown_sequence / length_exceeds_fixture.
bool oeis_compare(const std::string& sequence_id, const std::vector<Int>& values, long offset);

/// Parses OEIS b-file text: one "index value" pair per line, '#' comments
/// and blank lines allowed, indices strictly increasing.
/// Throws malformed_line / non_monotone_index with the offending line number.
std::vector<std::pair<long, Int>> bfile_parse(const std::string& text);

} // namespace bmoll

#endif
