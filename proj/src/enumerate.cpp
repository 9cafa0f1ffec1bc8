#include "drd/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace drd {

namespace {

struct EdgeSlot {
    int u, v;
};

std::vector<EdgeSlot> edge_slots(int n)
{
    std::vector<EdgeSlot> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.push_back({u, v});
    return slots;
}

std::uint64_t code_for_permutation(int n, const std::vector<std::uint16_t>& rows,
                                   const std::vector<int>& perm)
{
    // bit i of the code corresponds to slot i of the relabeled graph
    std::uint64_t code = 0;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (rows[perm[u]] >> perm[v] & 1)
                code |= std::uint64_t(1) << bit;
    return code;
}

} // namespace

std::uint64_t canonical_code(const Graph& g)
{
    const int n = g.order();
    if (n > 8)
        throw std::invalid_argument("canonical_code supports n <= 8 only");
    std::vector<std::uint16_t> rows(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            rows[v] |= std::uint16_t(1) << u;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t(0);
    do {
        best = std::min(best, code_for_permutation(n, rows, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

void enumerate_small(int n, const EnumerateOptions& opts,
                     const std::function<bool(const Graph&)>& emit)
{
    if (n < 0 || n > opts.ceiling)
        throw std::invalid_argument("enumerate_small: n exceeds ceiling " +
                                    std::to_string(opts.ceiling));
    if (n > 8)
        throw std::invalid_argument("enumerate_small: ceiling above 8 unsupported");
    if (n == 0) {
        emit(Graph(0, {}));
        return;
    }

    const auto slots = edge_slots(n);
    const int nslots = static_cast<int>(slots.size());
    std::unordered_set<std::uint64_t> seen;

    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << nslots); ++mask) {
        std::uint16_t rows[8] = {};
        for (int i = 0; i < nslots; ++i)
            if (mask >> i & 1) {
                rows[slots[i].u] |= std::uint16_t(1) << slots[i].v;
                rows[slots[i].v] |= std::uint16_t(1) << slots[i].u;
            }

        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (__builtin_popcount(rows[v]) < opts.min_degree)
                ok = false;
        if (!ok)
            continue;

        if (opts.connected_only) {
            std::uint16_t reached = 1, frontier = 1;
            while (frontier) {
                std::uint16_t next = 0;
                for (int v = 0; v < n; ++v)
                    if (frontier >> v & 1)
                        next |= rows[v];
                frontier = next & ~reached;
                reached |= next;
            }
            if (reached != (std::uint16_t(1) << n) - 1)
                continue;
        }

        std::vector<Edge> edges;
        for (int i = 0; i < nslots; ++i)
            if (mask >> i & 1)
                edges.emplace_back(slots[i].u, slots[i].v);
        Graph g(n, edges);

        if (opts.dedup && !seen.insert(canonical_code(g)).second)
            continue;
        if (!emit(g))
            return;
    }
}

long long count_small(int n, const EnumerateOptions& opts)
{
    long long count = 0;
    enumerate_small(n, opts, [&](const Graph&) {
        ++count;
        return true;
    });
    return count;
}

} // namespace drd
