#pragma once

#include <utility>
#include <vector>

#include "drd/graph.hpp"

namespace drd {

/// Per-vertex values in {0,1,2,3}, indexed by vertex id.
struct Labeling {
    std::vector<int> values;

    Labeling() = default;
    explicit Labeling(std::vector<int> v) : values(std::move(v)) {}
    Labeling(int n, int fill) : values(n, fill) {}

    int size() const { return static_cast<int>(values.size()); }
    int operator[](int v) const { return values[v]; }
    int& operator[](int v) { return values[v]; }

    bool operator==(const Labeling& other) const { return values == other.values; }
};

/// Sum of all values.
long long weight(const Labeling& f);

struct Violation {
    enum class Kind {
        ZeroUncovered, // a 0-vertex lacking two V2 neighbors and any V3 neighbor
        OneUnsupported, // a 1-vertex with no neighbor in V2 or V3
    };
    int vertex;
    Kind kind;
};

/// Checks double Roman domination conditions (a)/(b); lists every violating
/// vertex once. Empty result means f is a DRDF of g. Throws on a size
/// mismatch or out-of-range values.
std::vector<Violation> validate(const Graph& g, const Labeling& f);

bool is_valid_drdf(const Graph& g, const Labeling& f);

/// Rewrites a valid labeling into one with no value-1 vertices without
/// increasing the weight. 1-vertices are processed in ascending id; a vertex
/// with a V3 neighbor drops to 0, otherwise its smallest V2 neighbor is
/// raised to 3 first. Throws if the input is not a valid DRDF.
Labeling eliminate_ones(const Graph& g, const Labeling& f);

/// Assembles per-piece labelings into one labeling of the assembled graph.
/// embeddings[i][v] is the assembled id of piece i's vertex v. The images
/// must be injective and partition the assembled vertex set.
Labeling union_labeling(const std::vector<std::pair<const Graph*, const Labeling*>>& pieces,
                        const Graph& assembled,
                        const std::vector<std::vector<int>>& embeddings);

/// Canonical minimum-weight DRDF of the path 0-1-...-n-1. Weight is n when
/// n = 0 mod 3 and n+1 otherwise: (0,3,0) blocks with the remainder patched
/// at the tail ((2) for r=1, (0,3) for r=2).
std::pair<long long, Labeling> closed_form_path(int n);

/// Canonical minimum-weight DRDF of the cycle 0-1-...-n-1-0. Weight is n
/// when n = 0,2,3,4 mod 6 and n+1 when n = 1,5 mod 6.
std::pair<long long, Labeling> closed_form_cycle(int n);

} // namespace drd
