#include "parhom/symmetry.hpp"

#include <algorithm>
#include <functional>

namespace parhom {

namespace {

void check_bound(const Graph& h, int bound, const char* what) {
    if (h.vertex_count() > bound)
        throw bound_error(std::string(what) + ": graph exceeds the vertex bound");
}

// Invariant used to prune candidate images: degree, loop flag, sorted
// neighbour degrees.
std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
    std::vector<std::vector<int>> sig(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        sig[v].push_back(g.degree(v));
        sig[v].push_back(g.has_loop(v) ? 1 : 0);
        std::vector<int> nd;
        for (int w : g.neighbours(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        sig[v].insert(sig[v].end(), nd.begin(), nd.end());
    }
    return sig;
}

// Backtracking over edge-preserving bijections g -> h, emitting image arrays
// in lexicographic order. The callback returns true to stop the search.
void search_bijections(const Graph& g, const Graph& h,
                       const std::function<bool(const VertexPermutation&)>& emit) {
    int n = g.vertex_count();
    auto sig_g = vertex_signatures(g);
    auto sig_h = vertex_signatures(h);
    VertexPermutation image(n, -1);
    std::vector<bool> used(n, false);

    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) return emit(image);
        for (int a = 0; a < n; ++a) {
            if (used[a] || sig_g[v] != sig_h[a]) continue;
            bool ok = g.has_loop(v) == h.has_loop(a);
            for (int u = 0; ok && u < v; ++u)
                if (g.has_edge(v, u) != h.has_edge(a, image[u])) ok = false;
            if (!ok) continue;
            image[v] = a;
            used[a] = true;
            bool stop = rec(v + 1);
            used[a] = false;
            image[v] = -1;
            if (stop) return true;
        }
        return false;
    };
    rec(0);
}

}  // namespace

bool is_automorphism(const Graph& h, const VertexPermutation& sigma) {
    int n = h.vertex_count();
    if (static_cast<int>(sigma.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v)
            if (h.has_edge(u, v) != h.has_edge(sigma[u], sigma[v])) return false;
    return true;
}

bool is_involution(const Graph& h, const VertexPermutation& sigma) {
    if (!is_automorphism(h, sigma)) return false;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (sigma[sigma[v]] != v) return false;
    return true;
}

std::vector<VertexPermutation> automorphisms(const Graph& h, int bound) {
    check_bound(h, bound, "automorphisms");
    std::vector<VertexPermutation> out;
    search_bijections(h, h, [&](const VertexPermutation& p) {
        out.push_back(p);
        return false;
    });
    return out;
}

std::vector<VertexPermutation> nontrivial_involutions(const Graph& h, int bound) {
    check_bound(h, bound, "nontrivial_involutions");
    std::vector<VertexPermutation> out;
    for (const auto& p : automorphisms(h, bound)) {
        bool identity = true, involution = true;
        for (int v = 0; v < h.vertex_count(); ++v) {
            if (p[v] != v) identity = false;
            if (p[p[v]] != v) involution = false;
        }
        if (!identity && involution) out.push_back(p);
    }
    return out;
}

FixedSubgraph fixed_subgraph(const Graph& h, const VertexPermutation& sigma) {
    if (!is_involution(h, sigma))
        throw std::invalid_argument("fixed_subgraph: not an involution of the graph");
    std::vector<int> fixed;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (sigma[v] == v) fixed.push_back(v);
    return FixedSubgraph{h.induced(fixed), fixed};
}

ReductionTrace involution_free_reduction(const Graph& h, int bound) {
    check_bound(h, bound, "involution_free_reduction");
    ReductionTrace trace;
    Graph current = h;
    for (;;) {
        auto invs = nontrivial_involutions(current, bound);
        if (invs.empty()) break;
        const VertexPermutation& sigma = invs.front();  // lexicographically least
        FixedSubgraph fs = fixed_subgraph(current, sigma);
        trace.steps.push_back(ReductionStep{current, sigma, fs.old_of_new});
        current = std::move(fs.graph);
    }
    trace.result = std::move(current);
    return trace;
}

bool is_involution_free(const Graph& h, int bound) {
    return nontrivial_involutions(h, bound).empty();
}

bool is_isomorphic(const Graph& g, const Graph& h, int bound) {
    check_bound(g, bound, "is_isomorphic");
    check_bound(h, bound, "is_isomorphic");
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return false;
    {
        auto sg = vertex_signatures(g);
        auto sh = vertex_signatures(h);
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return false;
    }
    bool found = false;
    search_bijections(g, h, [&](const VertexPermutation&) { return found = true; });
    return found;
}

}  // namespace parhom
