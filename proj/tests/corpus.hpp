#ifndef PARHOM_TEST_CORPUS_HPP
#define PARHOM_TEST_CORPUS_HPP

// Host generators for the rule soundness sweeps and the multi-obstruction walk
// corpus. Every generator returns hosts satisfying the respective hypotheses.

#include <optional>
#include <random>

#include "parhom/gadgets.hpp"

namespace parhom::testcorpus {

struct RuleHost {
    Graph host;
    LocalRule rule;
};

// `count` hosts satisfying the hypotheses of the rule, deterministic per seed.
std::vector<RuleHost> rule_hosts(LocalRule::Tag tag, int count, unsigned seed);

// Connected involution-free K4-minor-free host whose suitable subtree contains
// >= `obstructions` obstruction blocks (C5/C6/C7 cycles with parallel bumps,
// joined through edge/diamond/impasse chains). Returns nullopt if the retry
// budget runs out.
std::optional<Graph> obstruction_chain_host(std::mt19937& rng, int obstructions);

// Pendant-tree decoration: adds `extra` vertices, each attached to a uniformly
// random vertex among `allowed` (or any existing vertex when empty). Tree
// growth never adds common neighbours, so local-rule hypotheses survive.
Graph decorate_with_trees(const Graph& base, int extra, std::mt19937& rng,
                          const std::vector<int>& allowed = {});

}  // namespace parhom::testcorpus

#endif
