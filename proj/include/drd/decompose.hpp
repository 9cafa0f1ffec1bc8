#pragma once

#include <map>
#include <vector>

#include "drd/graph.hpp"

namespace drd {

/// A path of degree-<=2 vertices. For maximal paths both end-vertices attach
/// to A-vertices; pendant paths attach on one side only (the far end has
/// degree 1 in the host graph).
struct BPath {
    std::vector<int> vertices;   // in path order, lexicographically smaller end first
    std::vector<int> attachments; // X_P: adjacent A-vertices (size 1 or 2)
};

/// Split of a graph into A = {deg >= 3}, the maximal paths between A-vertices,
/// pendant paths (one dead end), and components containing no A-vertex.
struct Decomposition {
    std::vector<int> a_vertices;             // ascending
    std::vector<BPath> maximal_paths;
    std::vector<BPath> pendant_paths;
    std::vector<std::vector<int>> floating_components;
    std::map<int, int> path_counts;          // maximal path length -> count
};

Decomposition decompose(const Graph& g);

} // namespace drd
