#ifndef PARHOM_GADGETS_HPP
#define PARHOM_GADGETS_HPP

#include <optional>
#include <string>

#include "parhom/counting.hpp"
#include "parhom/families.hpp"
#include "parhom/labelled_graph.hpp"

namespace parhom {

// The quintuple (I, S, (J1,y), (J2,z), (J3,y,z)).
struct HardnessGadget {
    std::vector<int> i_set, s_set;  // sorted vertex sets of the host
    PartiallyLabelledGraph j1;      // one distinguished vertex y
    PartiallyLabelledGraph j2;      // one distinguished vertex z
    PartiallyLabelledGraph j3;      // distinguished pair (y, z)
    std::string rule;               // name of the constructing rule
};

struct GadgetViolation {
    std::string condition;
    std::vector<int> witness;
};

struct GadgetVerdict {
    bool verified = false;
    std::vector<int> omega_y, omega_z;
    std::vector<GadgetViolation> violations;
};

// Exhaustive check of the hardness-gadget conditions by exact counting; the
// arbiter for every construction in this module.
GadgetVerdict verify_hardness_gadget(const Graph& h, const HardnessGadget& g);

// Caterpillar on (y, u_1..u_{q-1}, z) with pendant pins to the path interior.
PartiallyLabelledGraph path_gadget(const std::vector<int>& p);

// Ring v_0..v_{q-1} (vertex i of the result) with pendants pinned to the c
// sets; no distinguished vertices.
PartiallyLabelledGraph cycle_gadget(const std::vector<std::vector<int>>& c_sets);

struct GeneralizedCycleGadget {
    PartiallyLabelledGraph plg;
    std::vector<int> ring;  // image of v_0..v_{q-1} after grafting
};

// Cycle gadget with subgadget i's distinguished vertex identified with v_i.
GeneralizedCycleGadget generalized_cycle_gadget(
    const std::vector<std::vector<int>>& c_sets,
    const std::vector<PartiallyLabelledGraph>& subgadgets);

struct CycleGadgetOutcome {
    std::optional<HardnessGadget> gadget;
    GadgetVerdict verdict;
};

// Hardness gadget from a cycle of vertex sets and subgadgets at index k; all
// hypotheses are confirmed by brute force and failures show up as verdict
// violations instead of a gadget.
CycleGadgetOutcome cycle_hardness_gadget(const Graph& h,
                                         const std::vector<std::vector<int>>& c_sets,
                                         const std::vector<PartiallyLabelledGraph>& subgadgets,
                                         int k);

// Diamond block with entry a and exit b. Forward means a is a pole (the z_i
// class hangs between the poles a and c); backward means b is a pole.
struct OrientedDiamond {
    bool forward;
    int a, b, c, d;
    std::vector<int> rest;  // remaining middles (the y_i / z_i)
    int k() const { return static_cast<int>(rest.size()); }
};

// BD/FD orientation of a diamond block relative to the chain edge (entry, exit);
// squares orient as FD_0.
OrientedDiamond orient_diamond(const DiamondWitness& w, int entry, int exit);

struct LocalRule {
    enum class Tag {
        TypeVHard,
        EvenDiamond,
        GoodTriangle,
        AdjOddNeighbours,
        DiamondSquare,
        ThreeByOne,
        Zigzag,
        CycleOfSquares,
        HardImpasse,
        SquarefreePath,
        OddFDEvenVertex,
        BDFDJoint,
        Deg3Square,
    };
    Tag tag;
    std::vector<int> vertices;                // role-ordered witness vertices
    std::optional<ImpasseWitness> impasse;    // HardImpasse
    std::vector<int> path;                    // SquarefreePath
    std::optional<OrientedDiamond> bd_block;  // SquarefreePath start / BDFDJoint
    std::optional<OrientedDiamond> fd_block;  // SquarefreePath end / OddFD / BDFDJoint
};

std::string rule_name(LocalRule::Tag tag);

// Builds the gadget per the rule's defining construction and verifies it;
// throws verification_error when the hypotheses or the verifier reject.
HardnessGadget apply_local_rule(const Graph& h, const LocalRule& rule);

// First rule of the block-local cascade with a verified witness on h.
std::optional<LocalRule> find_local_rule(const Graph& h);

// Three-pin gadget for BD/FD blocks; its omega set is the outside
// neighbourhood of b (BD) or a (FD), which is confirmed before returning.
PartiallyLabelledGraph bd_fd_list_gadget(const Graph& h, const OrientedDiamond& block);

// Small builders shared with the synthesis engine.
PartiallyLabelledGraph pin_star(const std::vector<int>& targets);  // z adjacent to pins
PartiallyLabelledGraph edge_j3();                                   // edge {y,z}
PartiallyLabelledGraph two_path_j3();                               // path y - m - z

}  // namespace parhom

#endif
