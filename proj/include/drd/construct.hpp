#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drd/graph.hpp"
#include "drd/labeling.hpp"

namespace drd {

/// One reduction event: which rule fired, on which original vertex ids, how
/// many vertices it removed from the working graph, and the labeling weight
/// it contributed. Terminal leaves (closed forms, base solves, patterns,
/// bailout) are recorded as steps that remove the whole remaining subgraph.
struct TraceStep {
    std::string rule;
    std::vector<int> vertices;
    int removed = 0;
    long long weight_added = 0;
};

struct ReductionTrace {
    std::vector<TraceStep> steps;
    bool fallback_used = false;
    std::string final_base; // description of the last terminal subproblem

    int total_removed() const
    {
        int t = 0;
        for (const auto& s : steps)
            t += s.removed;
        return t;
    }
    long long total_weight() const
    {
        long long t = 0;
        for (const auto& s : steps)
            t += s.weight_added;
        return t;
    }
};

/// Reduction rules in priority order; bit i of ConstructOptions::rule_mask
/// enables rule i. The bailout cannot be disabled.
enum class Rule : int {
    ComponentSplit = 0,  // disjoint components handled independently
    ClosedForm = 1,      // paths, cycles, and single-hub tadpole shapes
    ExactBase = 2,       // exact solve once n <= fallback_n
    PendantCycle = 3,    // detach a cycle hanging by one edge (m not 5 or 7)
    PendantTadpole = 4,  // detach a tadpole hanging by its tail end
    CycleCluster = 5,    // detach a hub with >= 2 attached cycles/tadpoles
    OddPathContract = 6, // contract odd maximal path to its midpoint
    TwoHubPattern = 7,   // |A| = 2: label hubs 3 and re-solve each path
    PathRewrite = 8,     // local rewrites for short-path configurations
    TriplePathRemoval = 9, // three 4-paths (or two plus a bridge vertex) at a hub
    PendantFiveSeven = 10, // pendant C5/C7 case analysis
    HubEdgeDeletion = 11,  // drop edges between degree->=3 vertices
};

struct ConstructOptions {
    int fallback_n = 12;                  // exact-solve threshold
    std::uint32_t rule_mask = 0xffffffffu;

    bool rule_enabled(Rule r) const
    {
        return (rule_mask >> static_cast<int>(r)) & 1u;
    }
};

struct ConstructResult {
    Labeling labeling;
    ReductionTrace trace;
};

/// Builds a DRDF of g by repeatedly matching a local configuration, reducing
/// the graph, and extending the recursive labeling. The output always
/// validates; the achieved weight is certified by the trace and compared to
/// 12n/11 by check_bound, never asserted here.
ConstructResult construct_drdf(const Graph& g, const ConstructOptions& opts = {});

struct BoundReport {
    int n = 0;
    long long achieved_weight = 0;
    long long threshold_num = 0; // 12n
    int threshold_den = 11;
    bool satisfied = false;      // 11 * weight <= 12 * n, exact integers
    std::vector<std::string> tags;
};

/// Exact rational comparison of a valid labeling's weight against 12n/11,
/// with exclusion tags (C5/C7 components; induced Q up to n <= 60).
BoundReport check_bound(const Graph& g, const Labeling& f);

enum class EMembership { InFamily, Excluded, Unknown };

struct MembershipResult {
    EMembership status = EMembership::Unknown;
    std::string reason;
};

/// Decides membership in the bound's hypothesis family: order >= 5, minimum
/// degree >= 2, no C5/C7 component, no induced Q. The induced-Q search is
/// capped at n <= 60; larger graphs come back Unknown.
MembershipResult membership_e(const Graph& g);

/// Induced-subgraph search for Q (two 5-cycles joined by one edge).
bool has_induced_q(const Graph& g);

/// True when the component is a chordless cycle of the given length.
bool is_cycle_component(const Graph& g, const std::vector<int>& component, int length);

} // namespace drd
