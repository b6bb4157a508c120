#ifndef PARHOM_FAMILIES_HPP
#define PARHOM_FAMILIES_HPP

#include <optional>
#include <string>

#include "parhom/structure.hpp"

namespace parhom {

struct TypeVStatus {
    enum class Verdict { TypeVLeft, TypeVRight, NotTypeV };
    std::vector<int> g15, g35, g24, g26;  // common neighbours off the F copy
    Verdict verdict;
};

// f maps the roles v1..v6 of the template F to host vertices; it must be an
// injective edge-preserving embedding (not necessarily induced).
TypeVStatus type_v_status(const Graph& h, const std::vector<int>& f);

struct DiamondWitness {
    int s, t;                  // poles
    std::vector<int> middles;  // sorted, size >= 2
};

// Host-vertex ids of an embedded S_{k,l}; the connector classes are
// {v1, y_1..y_k} and {v3, z_1..z_l}, all of block-degree 2.
struct ImpasseWitness {
    int v1, v2, v3, v4, v5, v6;
    std::vector<int> ys, zs;  // the template's y and z classes (odd sizes)
    std::vector<int> left_class() const;
    std::vector<int> right_class() const;
    // Rewrites the witness so that (a, b) become the (v1, v3) positions.
    ImpasseWitness oriented_at(int a, int b) const;
};

struct ComponentKind {
    enum class Tag { Edge, Diamond, Impasse, Obstruction, Other };
    Tag tag;
    std::optional<DiamondWitness> diamond;
    std::optional<ImpasseWitness> impasse;
    std::vector<ClosedWalk> cycles;  // Cy(B) in host coordinates, canonical + sorted
    std::string other_reason;        // local-rule hint when tag == Other
};

// Classification of one biconnected component per the K4-minor-free component
// case split. `block` must be a block of block_cut_tree(h) and h must be
// K4-minor-free.
ComponentKind classify_biconnected(const Graph& h, const std::vector<int>& block);

// As above but trusted (no block/bc revalidation); used by the synthesis loop.
ComponentKind classify_block_unchecked(const Graph& h, const std::vector<int>& block);

struct SuitableConnector {
    int block_id;
    std::vector<int> a;  // sorted articulation points
    std::optional<ClosedWalk> chosen_cycle;  // C(B,A), obstructions only
};

std::vector<SuitableConnector> suitable_connectors(const Graph& h, const BlockCutTree& bc,
                                                   int block_id, const ComponentKind& kind);
std::vector<SuitableConnector> suitable_connectors(const Graph& h,
                                                   const std::vector<int>& block);

// Block-cut subtree with one suitable connector per block; Gamma_T(B) equals
// the connector's articulation set.
struct SuitableSubtree {
    std::vector<int> block_ids;
    std::map<int, SuitableConnector> connectors;  // key: block id
    std::map<int, ComponentKind> kinds;           // key: block id
    int root_block = -1;

    bool contains_block(int b) const { return connectors.count(b) > 0; }
    std::vector<int> cut_vertices() const;        // union of connector sets
    std::vector<int> blocks_at(int cut) const;    // tree neighbours of a cut vertex
};

struct Exit {
    int at;          // the exit cut vertex
    int dest_vertex; // b of the destination
    int dest_block;  // block id of the destination obstruction
};

struct ExitReport {
    std::vector<Exit> exits;
    std::vector<int> attachments;
};

// Classifies the tree neighbours of an obstruction block of T by following
// their maximal proper obstruction-free paths.
ExitReport exits_and_attachments(const Graph& h, const BlockCutTree& bc,
                                 const SuitableSubtree& tree, int block_id);

// Maximal proper obstruction-free path of T starting at cut vertex `a` headed
// away from `from_block`; returns the alternating sequence of cut vertices and
// block ids (b0, B1, b1, ..., Bq, bq) with b0 = a as (cuts, blocks).
struct TreePath {
    std::vector<int> cuts;    // q+1 cut vertices
    std::vector<int> blocks;  // q block ids
};
TreePath obstruction_free_path(const BlockCutTree& bc, const SuitableSubtree& tree,
                               int a, int from_block);

// True iff cut vertex a has exactly one descendant under the tree order rooted
// at block r, and that descendant is a block that is a single edge.
bool is_r_closed(const BlockCutTree& bc, int a, int r);

// Name of the first local hardness rule whose witness search succeeds on h;
// empty when none applies. Defined with the gadget rules.
std::string local_rule_hint(const Graph& h);

}  // namespace parhom

#endif
