#pragma once

#include <string>
#include <vector>

#include "drd/graph.hpp"

namespace drd {

/// Parameters of one tadpole piece C_{m,k}: a cycle of length m with a
/// k-vertex path attached by one edge.
struct TadpoleParams {
    int m = 0;
    int k = 0;
};

/// Family selector for generate(). Vertex numbering per family:
///  - Cycle(n):    0..n-1 in cyclic order
///  - Path(n):     0..n-1 in path order
///  - Complete(n): 0..n-1
///  - Tadpole(m,k): cycle 0..m-1 cyclic (attachment vertex 0), path m..m+k-1,
///                  bridge (0, m); the cycle-path attachment vertex is id 0
///  - Spider:      center 0, then legs consecutively, each from the center out
///  - QGraph:      C5 = 0..4, C5' = 5..9, bridge (0, 5)
///  - GQ(base):    base keeps ids 0..nb-1; copy i identifies Q's vertex 0 with
///                 base vertex i and adds 9 vertices nb+9i .. nb+9i+8 for
///                 Q's vertices 1..9
///  - GH(base):    base keeps ids (hubs); copy i adds 10 vertices
///                 nb+10i .. nb+10i+9 (two C5s, first vertex of each joined
///                 to hub i)
///  - StarOfTadpoles: hub z = 0; then each tadpole (z joined to the far path
///                 end), each attached cycle (z joined to its first vertex),
///                 each identified cycle (z replaces one cycle vertex)
struct FamilySpec {
    enum class Kind {
        Cycle,
        Path,
        Complete,
        Tadpole,
        Spider,
        QGraph,
        GQ,
        GH,
        StarOfTadpoles,
    };

    Kind kind = Kind::Cycle;
    int n = 0;                              // Cycle/Path/Complete order
    TadpoleParams tadpole;                  // Tadpole
    std::vector<int> leg_lengths;           // Spider
    Graph base;                             // GQ/GH
    std::vector<TadpoleParams> tadpoles;    // StarOfTadpoles
    std::vector<int> attached_cycles;       // StarOfTadpoles
    std::vector<int> identified_cycles;     // StarOfTadpoles
};

Graph generate(const FamilySpec& spec);

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph tadpole(int m, int k);
Graph spider(const std::vector<int>& leg_lengths);
Graph q_graph();
Graph g_q(const Graph& base);
Graph g_h(const Graph& base);
Graph star_of_tadpoles(const std::vector<TadpoleParams>& tadpoles,
                       const std::vector<int>& attached_cycles,
                       const std::vector<int>& identified_cycles);

std::string family_name(FamilySpec::Kind kind);

} // namespace drd
