#ifndef PARHOM_STRUCTURE_HPP
#define PARHOM_STRUCTURE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "parhom/graph.hpp"

namespace parhom {

// Blocks are biconnected components (bridge edges count as blocks). Blocks are
// sorted internally and ordered by smallest contained vertex; ties broken
// lexicographically.
struct BlockCutTree {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cut_vertices;                // sorted
    std::vector<std::vector<int>> block_cut_ids;  // per block: indices into cut_vertices
    std::vector<std::vector<int>> cut_block_ids;  // per cut vertex: block indices

    bool is_cut(int v) const {
        return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
    }
    int cut_index(int v) const;  // -1 when v is not a cut vertex
    std::vector<int> blocks_containing(int v) const;
    int block_count() const { return static_cast<int>(blocks.size()); }
};

BlockCutTree block_cut_tree(const Graph& h);

// Elimination test for treewidth <= 2: repeatedly delete degree-<=1 vertices
// and contract degree-2 vertices; true iff everything vanishes.
bool is_k4_minor_free(const Graph& h);

// Vertex sequence (w_0,...,w_{q-1}) read cyclically.
struct ClosedWalk {
    std::vector<int> seq;
    int length() const { return static_cast<int>(seq.size()); }
    bool operator==(const ClosedWalk&) const = default;
    bool operator<(const ClosedWalk& other) const { return seq < other.seq; }
};

bool is_closed_walk(const ClosedWalk& w, const Graph& h);
bool is_cycle(const ClosedWalk& w, const Graph& h);  // distinct vertices

// Canonical form of a cycle: smallest vertex first, smaller second neighbour.
ClosedWalk canonical_cycle(const ClosedWalk& w);

inline constexpr int kDefaultCycleVertexBound = 24;
inline constexpr long kDefaultCycleCap = 1000000;

// All induced (chordless) cycles whose length satisfies the predicate, each
// once in canonical form, ordered lexicographically. Throws bound_error past
// the enumeration cap.
std::vector<ClosedWalk> induced_cycles(const Graph& h,
                                       const std::function<bool(int)>& length_ok,
                                       int vertex_bound = kDefaultCycleVertexBound,
                                       long cap = kDefaultCycleCap);

bool is_chordal_bipartite(const Graph& h, int vertex_bound = kDefaultCycleVertexBound);

// Walk-neighbour-sets: entry i is the common neighbourhood of w_{i-1}, w_{i+1}
// (indices mod q).
std::vector<std::vector<int>> walk_neighbour_sets(const ClosedWalk& w, const Graph& h);

// Lexicographically least shortest path from a to b; (a) when a = b.
std::vector<int> canonical_shortest_path(const Graph& h, int a, int b);

// Every edge and every length-2 path of h between embedded j-vertices must be
// present in j. The embedding maps j-vertices to h-vertices and must be an
// injective homomorphism.
bool is_12_supergraph(const Graph& h, const Graph& j, const std::vector<int>& embedding);

struct Separation {
    std::vector<int> a, b;  // sorted
};

bool is_separation(const Graph& g, const Separation& s);

// True iff a closed walk (d_0,...,d_{q-1},d_0) exists with
// d_i in N(C_i) \ (C_{i-1} u C_{i+1}); N is the common neighbourhood.
bool exists_d_walk(const Graph& h, const std::vector<std::vector<int>>& c_sets);

}  // namespace parhom

#endif
