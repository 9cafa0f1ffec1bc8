#include "drd/random_models.hpp"

#include <algorithm>
#include <stdexcept>

#include "drd/family.hpp"
#include "drd/labeling.hpp"

namespace drd {

namespace {

std::uint64_t splitmix64(std::uint64_t& state)
{
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

Rng Rng::split(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = a ^ (index * 0x9e3779b97f4a7c15ull + 0x243f6a8885a308d3ull);
    return Rng(s);
}

std::uint64_t Rng::next_u64()
{
    return splitmix64(state_);
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit && limit != 0);
    return x % bound;
}

int Rng::range(int lo, int hi)
{
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

double Rng::unit()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

RandomModel parse_random_model(const std::string& name)
{
    if (name == "uniform-min-deg-2")
        return RandomModel::UniformMinDeg2;
    if (name == "cycle-union")
        return RandomModel::CycleUnion;
    if (name == "spider")
        return RandomModel::Spider;
    throw std::invalid_argument("unknown random model: " + name);
}

std::string random_model_name(RandomModel m)
{
    switch (m) {
    case RandomModel::UniformMinDeg2: return "uniform-min-deg-2";
    case RandomModel::CycleUnion: return "cycle-union";
    case RandomModel::Spider: return "spider";
    }
    return "unknown";
}

Graph random_graph(RandomModel model, int n, std::uint64_t seed, std::uint64_t index)
{
    Rng rng = Rng::split(seed, index);
    switch (model) {
    case RandomModel::UniformMinDeg2: {
        if (n < 3)
            throw std::invalid_argument("uniform-min-deg-2 requires n >= 3");
        const double p = std::min(1.0, 2.5 / (n - 1));
        for (;;) {
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.unit() < p)
                        edges.emplace_back(u, v);
            Graph g(n, edges);
            if (g.min_degree() >= 2)
                return g;
        }
    }
    case RandomModel::CycleUnion: {
        if (n < 3)
            throw std::invalid_argument("cycle-union requires n >= 3");
        std::vector<int> parts;
        int left = n;
        while (left > 0) {
            if (left < 6) {
                if (left < 3)
                    throw std::logic_error("cycle-union composition failed");
                parts.push_back(left);
                left = 0;
            } else {
                int take = rng.range(3, left - 3 >= 3 ? left - 3 : left);
                if (left - take < 3 && left - take != 0)
                    take = left;
                parts.push_back(take);
                left -= take;
            }
        }
        std::vector<Edge> edges;
        int base = 0;
        for (int len : parts) {
            for (int i = 0; i < len; ++i)
                edges.emplace_back(base + i, base + (i + 1) % len);
            base += len;
        }
        return Graph(n, edges);
    }
    case RandomModel::Spider: {
        if (n < 4)
            throw std::invalid_argument("spider requires n >= 4");
        const int legs = 3 + (n - 1 > 3 ? static_cast<int>(rng.below(n - 3)) % (n - 3) : 0);
        const int chosen = std::min(legs, n - 1);
        std::vector<int> lens(chosen, 1);
        int extra = (n - 1) - chosen;
        while (extra > 0) {
            ++lens[static_cast<size_t>(rng.below(lens.size()))];
            --extra;
        }
        return spider(lens);
    }
    }
    throw std::invalid_argument("unknown random model");
}

Labeling random_valid_labeling(const Graph& g, Rng& rng)
{
    const int n = g.order();
    Labeling f(n, 0);
    for (int v = 0; v < n; ++v)
        f[v] = rng.range(0, 3);
    // repair: raise a neighbor to 3 (or the vertex itself when isolated)
    for (;;) {
        auto violations = validate(g, f);
        if (violations.empty())
            return f;
        for (const auto& viol : violations) {
            const auto& nbrs = g.neighbors(viol.vertex);
            if (nbrs.empty()) {
                f[viol.vertex] = 2;
            } else {
                int pick = nbrs[static_cast<size_t>(rng.below(nbrs.size()))];
                f[pick] = 3;
            }
        }
    }
}

} // namespace drd
