#pragma once

#include <cstdint>
#include <string>

#include "drd/graph.hpp"
#include "drd/labeling.hpp"

namespace drd {

/// Deterministic splittable generator (splitmix64 core), so runs reproduce
/// across platforms from a single 64-bit seed. Per-instance streams come from
/// split(seed, instance_index).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng split(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();

    /// Uniform integer in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    int range(int lo, int hi); // inclusive
    double unit();             // [0, 1)

private:
    std::uint64_t state_;
};

enum class RandomModel {
    UniformMinDeg2, // G(n, p) with p = min(1, 2.5/(n-1)), rejection-sampled to delta >= 2
    CycleUnion,     // disjoint cycles from a random composition of n (parts >= 3)
    Spider,         // random leg composition of n-1 into >= 3 legs
};

RandomModel parse_random_model(const std::string& name);
std::string random_model_name(RandomModel m);

/// Instance `index` of the model's seeded stream; reproducible per
/// (model, n, seed, index).
Graph random_graph(RandomModel model, int n, std::uint64_t seed, std::uint64_t index = 0);

/// Random valid DRDF: random values repaired to validity (used by property
/// tests and the harness; may contain 1s).
Labeling random_valid_labeling(const Graph& g, Rng& rng);

} // namespace drd
