#pragma once

#include <chrono>
#include <optional>

#include "drd/graph.hpp"
#include "drd/labeling.hpp"

namespace drd {

struct SolveOptions {
    bool allow_ones = false;                  // search {0,1,2,3} instead of {0,2,3}
    std::chrono::milliseconds timeout{0};     // 0 = unlimited
    std::optional<Labeling> initial;          // warm-start witness (must be valid)
};

enum class SolveStatus { Optimal, Timeout };

struct SolveResult {
    long long value = 0;       // best weight found; gamma_dr when optimal
    Labeling witness;          // valid DRDF of that weight
    long long nodes_expanded = 0;
    std::chrono::milliseconds elapsed{0};
    SolveStatus status = SolveStatus::Optimal;
    long long lower = 0;
    long long upper = 0;
};

/// Exact gamma_dr by depth-first branch and bound over vertex values.
/// Branches high-degree vertices first with value order 3, 2, 0; prunes with
/// partial weight plus a coverage-deficit bound. On timeout the result
/// carries the best bounds and the best labeling found.
SolveResult gamma_dr(const Graph& g, const SolveOptions& opts = {});

/// Independent oracle: full enumeration of domain^n validating every
/// candidate. Hard-capped at n <= 12.
long long gamma_dr_naive(const Graph& g, bool allow_ones = false);

} // namespace drd
