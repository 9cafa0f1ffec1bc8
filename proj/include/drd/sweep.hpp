#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drd/family.hpp"
#include "drd/graph.hpp"

namespace drd {

enum class SweepMode { Exact, Construct, Both };

struct SweepConfig {
    int n_min = 3;
    int n_max = 7;
    int min_degree = 2;
    bool connected_only = true;
    std::vector<FamilySpec> exclude;  // skip graphs isomorphic to these
    SweepMode mode = SweepMode::Exact;
    std::string report_path;          // empty = no report file
    int jobs = 1;
    std::uint64_t seed = 0;
    int fallback_n = 12;
};

struct ReportRow {
    long long instance = 0;
    int n = 0;
    int m = 0;
    long long gamma = 0;          // exact value or constructed weight
    long long construct_weight = -1; // only in Both mode
    long long threshold_num = 0;  // 12n
    int threshold_den = 11;
    bool satisfied = false;
    std::vector<std::string> tags;
    std::string rules;            // construct rule summary
    long long millis = 0;
    bool excluded = false;
};

struct SweepSummary {
    long long instances = 0;
    long long satisfied = 0;
    long long violations = 0;
    long long excluded = 0;
    std::vector<ReportRow> violation_rows;
};

std::string format_report_row(const ReportRow& row);

/// Runs the exhaustive sweep over enumerate_small(n) for n in the configured
/// range and writes one record per instance plus a summary table. Bound
/// violations are dumped next to the report as edge-list certificates.
SweepSummary run_sweep(const SweepConfig& config);

} // namespace drd
