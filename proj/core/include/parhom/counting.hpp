#ifndef PARHOM_COUNTING_HPP
#define PARHOM_COUNTING_HPP

#include <string>
#include <vector>

#include "parhom/labelled_graph.hpp"

namespace parhom {

enum class Parity : unsigned char { even = 0, odd = 1 };

constexpr Parity operator^(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<unsigned char>(a) ^ static_cast<unsigned char>(b));
}
constexpr Parity operator&(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<unsigned char>(a) & static_cast<unsigned char>(b));
}
constexpr bool is_odd(Parity p) { return p == Parity::odd; }
constexpr Parity parity_of(unsigned long long n) {
    return static_cast<Parity>(n & 1ull);
}
inline std::string to_string(Parity p) { return is_odd(p) ? "odd" : "even"; }

// One list per vertex of G; entries are target-vertex ids.
using ListAssignment = std::vector<std::vector<int>>;

enum class CountStrategy { Auto, TreeDp, Enumerate };

// Exact number of homomorphisms from G to H. Counts are dynamic programming
// over a tree decomposition of G when min-degree elimination yields width <= 3,
// exhaustive assignment enumeration otherwise. Throws std::overflow_error when
// the count does not fit 64 bits.
unsigned long long count_hom(const Graph& g, const Graph& h,
                             CountStrategy strategy = CountStrategy::Auto);

// Exact retraction count: homomorphisms respecting j's pinning.
unsigned long long count_hom(const PartiallyLabelledGraph& j, const Graph& h,
                             CountStrategy strategy = CountStrategy::Auto);

// Parity of the number of retractions (pin-respecting homomorphisms). The
// distinguished vertices of j, if any, must have been given targets through
// the pinning by the caller.
Parity count_hom_mod2(const PartiallyLabelledGraph& j, const Graph& h,
                      CountStrategy strategy = CountStrategy::Auto);

// Omega set of a gadget (J, z): all a in V(H) for which pinning the single
// distinguished vertex to a gives an odd retraction count.
std::vector<int> omega(const PartiallyLabelledGraph& j, const Graph& h);

// Parity of |hom((J3,y,z)) -> (H,a,b)|.
Parity sigma_parity(const PartiallyLabelledGraph& j3, const Graph& h, int a, int b);

// Parity of the number of list homomorphisms; every vertex needs a nonempty list.
Parity count_list_hom_mod2(const Graph& g, const ListAssignment& lists, const Graph& h,
                           CountStrategy strategy = CountStrategy::Auto);

// Parity of the number of independent sets (the empty set included).
Parity count_is_mod2(const Graph& g, CountStrategy strategy = CountStrategy::Auto);

// Polynomial-time parity of list homomorphisms for targets in the tractable
// class: every component of H a loop-free complete bipartite graph or a
// reflexive complete graph. Throws verification_error outside that class.
Parity tractable_listhom_mod2(const Graph& g, const ListAssignment& lists, const Graph& h);

// True iff every component of H is a loop-free complete bipartite graph or a
// reflexive complete graph.
bool is_dyer_greenhill_tractable(const Graph& h);

// Width of the min-degree elimination order of G (treewidth upper bound);
// exposed for tests and benchmarks.
int elimination_width(const Graph& g);

}  // namespace parhom

#endif
