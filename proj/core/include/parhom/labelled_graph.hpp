#ifndef PARHOM_LABELLED_GRAPH_HPP
#define PARHOM_LABELLED_GRAPH_HPP

#include <map>
#include <vector>

#include "parhom/graph.hpp"

namespace parhom {

// Partially H-labelled graph (G, tau) with up to two distinguished vertices.
// Pin targets are vertex ids of the target graph; distinguished vertices are
// unpinned and get their targets at evaluation time.
struct PartiallyLabelledGraph {
    Graph underlying;
    std::map<int, int> pinning;      // G-vertex -> H-vertex
    std::vector<int> distinguished;  // length 0-2, disjoint from pinning domain

    PartiallyLabelledGraph() = default;
    PartiallyLabelledGraph(Graph g, std::map<int, int> pins,
                           std::vector<int> dist = {});

    int y() const { return distinguished.at(0); }
    int z() const { return distinguished.back(); }

    void validate_against(const Graph& h) const;
    bool operator==(const PartiallyLabelledGraph&) const = default;
};

// Disjoint union of parts with the listed vertex identifications applied
// (merging is transitive). Pinnings merge; a conflict between two pins on an
// identified class is an error. The distinguished list of the result is given
// by the caller as (part, vertex) pairs.
struct GraftIdentification {
    int part_a, vertex_a, part_b, vertex_b;
};

PartiallyLabelledGraph graft(const std::vector<PartiallyLabelledGraph>& parts,
                             const std::vector<GraftIdentification>& ids,
                             const std::vector<std::pair<int, int>>& distinguished = {});

// Vertex of the grafted result that (part, vertex) was mapped to. Same
// numbering rule as graft: classes ordered by their smallest (part, vertex).
std::vector<std::vector<int>> graft_vertex_map(
    const std::vector<PartiallyLabelledGraph>& parts,
    const std::vector<GraftIdentification>& ids);

}  // namespace parhom

#endif
