#ifndef PARHOM_SYMMETRY_HPP
#define PARHOM_SYMMETRY_HPP

#include <vector>

#include "parhom/graph.hpp"

namespace parhom {

using VertexPermutation = std::vector<int>;

inline constexpr int kDefaultSymmetryBound = 32;

bool is_automorphism(const Graph& h, const VertexPermutation& sigma);
bool is_involution(const Graph& h, const VertexPermutation& sigma);

// All automorphisms, in lexicographic order of their image arrays.
std::vector<VertexPermutation> automorphisms(const Graph& h,
                                             int bound = kDefaultSymmetryBound);

// All involutions other than the identity, lexicographic order.
std::vector<VertexPermutation> nontrivial_involutions(const Graph& h,
                                                      int bound = kDefaultSymmetryBound);

struct FixedSubgraph {
    Graph graph;
    std::vector<int> old_of_new;  // result vertex i was this vertex of the input
};

// Induced subgraph on the fixed points of an involution sigma.
FixedSubgraph fixed_subgraph(const Graph& h, const VertexPermutation& sigma);

struct ReductionStep {
    Graph before;
    VertexPermutation involution;
    std::vector<int> fixed_old_ids;
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    Graph result;
};

// Repeatedly applies the lexicographically least non-trivial involution until
// none remains. The result is involution-free (unique up to isomorphism).
ReductionTrace involution_free_reduction(const Graph& h,
                                         int bound = kDefaultSymmetryBound);

bool is_involution_free(const Graph& h, int bound = kDefaultSymmetryBound);

bool is_isomorphic(const Graph& g, const Graph& h, int bound = kDefaultSymmetryBound);

}  // namespace parhom

#endif
