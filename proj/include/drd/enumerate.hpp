#pragma once

#include <cstdint>
#include <functional>

#include "drd/graph.hpp"

namespace drd {

struct EnumerateOptions {
    int min_degree = 0;
    bool connected_only = false;
    bool dedup = false; // canonical-form dedup, only for n <= dedup ceiling
    int ceiling = 8;    // hard enumeration ceiling
};

/// Streams every labeled simple graph on n vertices matching the filters to
/// the callback; return false from the callback to stop early. With dedup
/// enabled, exactly one representative per isomorphism class is emitted.
/// Throws if n exceeds the ceiling.
void enumerate_small(int n, const EnumerateOptions& opts,
                     const std::function<bool(const Graph&)>& emit);

/// Convenience count of enumerate_small emissions.
long long count_small(int n, const EnumerateOptions& opts);

/// Minimum upper-triangle bitstring over all vertex permutations; usable as
/// an isomorphism key for n <= 8.
std::uint64_t canonical_code(const Graph& g);

} // namespace drd
