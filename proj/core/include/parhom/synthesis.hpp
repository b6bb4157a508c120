#ifndef PARHOM_SYNTHESIS_HPP
#define PARHOM_SYNTHESIS_HPP

#include <variant>

#include "parhom/gadgets.hpp"
#include "parhom/symmetry.hpp"

namespace parhom {

// One block of a chain (b_0, B_1, b_1, ..., B_q, b_q); entry b_prev and exit
// b_next are distinct vertices of the block.
struct ChainStep {
    enum class Kind { Edge, Diamond, Impasse };
    Kind kind;
    int b_prev, b_next;
    std::vector<int> block;                   // full block vertex set, sorted
    std::optional<OrientedDiamond> diamond;   // oriented at (b_prev, b_next)
    std::optional<ImpasseWitness> impasse;    // oriented so v1 = b_prev, v3 = b_next
    int impasse_mid() const { return impasse->v2; }
};

struct ChainSpec {
    int b0 = -1;
    std::vector<ChainStep> steps;
    int cut(int i) const { return i == 0 ? b0 : steps[i - 1].b_next; }
};

// Good start (L, b) in a block, realised by a gadget (J, z) whose omega set is
// exactly L u R with R the outside neighbourhood of the anchor.
struct GoodStartCertificate {
    PartiallyLabelledGraph gadget;
    std::vector<int> l_set, r_set;  // sorted
    int anchor = -1;
    bool is_stop() const { return r_set.size() % 2 == 1; }
};

using StepResult = std::variant<GoodStartCertificate, HardnessGadget>;

// Certificate for the degenerate block B_0 induced by L_0 = N(b0) \ V(B_1).
GoodStartCertificate start_certificate(const Graph& h, int b0,
                                       const std::vector<int>& first_block);

// One good-start extension along the chain. Stops at diamonds and impasses
// turn into hardness gadgets via their stop constructions; an edge stop is
// returned as a certificate with is_stop() for the sequence engine to resolve.
// The FD-odd case needs chain context and is rejected here.
StepResult good_start_step(const Graph& h, const GoodStartCertificate& prev,
                           const ChainStep& step);

// Full case analysis of the chordal-bipartite sequence: either a verified
// hardness gadget or a non-stop good start at the last block.
StepResult chordal_bipartite_sequence(const Graph& h, const ChainSpec& chain);

struct SubtreeResult {
    BlockCutTree bc;
    SuitableSubtree tree;
};

// Algorithm: grow/restart a suitable subtree until every leaf cut vertex is
// R-closed. Requires every block to classify as edge/diamond/impasse/
// obstruction.
SubtreeResult find_closed_suitable_subtree(const Graph& h);

struct WalkSegment {
    bool cycle_part;       // Q segment inside an obstruction (else a P path)
    std::vector<int> seq;  // contributed vertices, endpoints included
    int block_id = -1;     // Q: the obstruction
    int exit = -1, dest_vertex = -1, dest_block = -1;  // P metadata
};

struct WalkDecomposition {
    ClosedWalk walk;
    std::vector<WalkSegment> segments;
};

ClosedWalk sub_walk(const Graph& h, const BlockCutTree& bc, const SuitableSubtree& tree,
                    int a_star, int block_id, int ell, int a0,
                    std::vector<WalkSegment>* segments = nullptr);

WalkDecomposition walk(const Graph& h, const BlockCutTree& bc, const SuitableSubtree& tree,
                       int block_id);

struct AttachmentOutcome {
    std::optional<PartiallyLabelledGraph> gadget;  // (J-hat, z-hat)
    std::vector<int> omega_set;
    std::optional<HardnessGadget> full_gadget;  // sequence found hardness instead
};

// Gadget for attachment index i (even walk-neighbour-set W_i) per the
// with-obstruction construction.
AttachmentOutcome attachment_gadget(const Graph& h, const BlockCutTree& bc,
                                    const SuitableSubtree& tree,
                                    const WalkDecomposition& dec, int i);

struct SynthesisResult {
    enum class Kind { Tractable, Hard, Unsupported };
    Kind kind;
    ReductionTrace trace;  // involution-free reduction of the input
    // Hard outcomes: gadget verified against `host`, the chosen involution-free
    // component (host_vertices are its ids inside the reduced graph).
    std::optional<HardnessGadget> gadget;
    Graph host;
    std::vector<int> host_vertices;
    std::string reason;  // Unsupported diagnostics
};

SynthesisResult synthesize_hardness_gadget(const Graph& h,
                                           int bound = kDefaultSymmetryBound);

}  // namespace parhom

#endif
