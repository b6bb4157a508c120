#ifndef PARHOM_GENERATORS_HPP
#define PARHOM_GENERATORS_HPP

#include <map>
#include <optional>
#include <string>

#include "parhom/graph.hpp"

namespace parhom {

// Named graph families with fixed vertex numbering. Role tables give the
// published role -> id mapping per family so callers can reference v1..v6 etc.
//
//   Path(n)               vertices 0..n-1 along the path (n = vertex count)
//   Cycle(n)              vertices 0..n-1 cyclically
//   Complete(n)
//   CompleteBipartite(a,b) sides 0..a-1 and a..a+b-1
//   ReflexiveComplete(n)  complete with a loop on every vertex
//   F                     v1..v6 = 0..5; two squares sharing the edge {v2,v5}
//   Skl(k,l)              F plus y1..yk adjacent to v2,v4 (ids 6..5+k) and
//                         z1..zl adjacent to v2,v6 (ids 6+k..5+k+l)
//   Diamond(k)            poles s=0, t=1, middles x1..xk = 2..k+1 (k >= 2)
//   BD(k)                 a=0 b=1 c=2 d=3, y1..yk = 4..3+k; poles d,b
//   FD(k)                 a=0 b=1 c=2 d=3, z1..zk = 4..3+k; poles a,c
//   ExampleH1             s=0 t=1 l=2 ru=3 sl=4
//   ExampleH2             o,s,i,x,y,z = 0..5
struct GraphFamily {
    enum class Tag {
        Path,
        Cycle,
        Complete,
        CompleteBipartite,
        ReflexiveComplete,
        F,
        Skl,
        Diamond,
        BD,
        FD,
        ExampleH1,
        ExampleH2,
    };
    Tag tag;
    int p1 = 0;
    int p2 = 0;

    static GraphFamily path(int n) { return {Tag::Path, n}; }
    static GraphFamily cycle(int n) { return {Tag::Cycle, n}; }
    static GraphFamily complete(int n) { return {Tag::Complete, n}; }
    static GraphFamily complete_bipartite(int a, int b) {
        return {Tag::CompleteBipartite, a, b};
    }
    static GraphFamily reflexive_complete(int n) { return {Tag::ReflexiveComplete, n}; }
    static GraphFamily f() { return {Tag::F}; }
    static GraphFamily skl(int k, int l) { return {Tag::Skl, k, l}; }
    static GraphFamily diamond(int k) { return {Tag::Diamond, k}; }
    static GraphFamily bd(int k) { return {Tag::BD, k}; }
    static GraphFamily fd(int k) { return {Tag::FD, k}; }
    static GraphFamily h1() { return {Tag::ExampleH1}; }
    static GraphFamily h2() { return {Tag::ExampleH2}; }
};

Graph generate(const GraphFamily& family);
std::map<std::string, int> family_roles(const GraphFamily& family);

// CLI-facing name, e.g. "skl 1 3". Returns nullopt for unknown names.
std::optional<GraphFamily> parse_family(const std::string& name,
                                        const std::vector<int>& params);

}  // namespace parhom

#endif
