#include <functional>
#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace parhom::oracle {

unsigned long long brute_count_hom(const Graph& g, const Graph& h,
                                   const std::map<int, int>& pins) {
    int n = g.vertex_count(), m = h.vertex_count();
    if (n == 0) return 1;
    if (m == 0) return 0;
    std::vector<int> assign(n, 0);
    unsigned long long total = 0;
    for (;;) {
        bool ok = true;
        for (const auto& [v, a] : pins)
            if (assign[v] != a) {
                ok = false;
                break;
            }
        if (ok)
            for (auto [u, v] : g.edges())
                if (!h.has_edge(assign[u], assign[v])) {
                    ok = false;
                    break;
                }
        if (ok) ++total;
        int i = n - 1;
        while (i >= 0 && assign[i] == m - 1) assign[i--] = 0;
        if (i < 0) break;
        ++assign[i];
    }
    return total;
}

unsigned long long brute_count_list_hom(const Graph& g, const ListAssignment& lists,
                                        const Graph& h) {
    int n = g.vertex_count();
    if (n == 0) return 1;
    std::vector<std::size_t> idx(n, 0);
    unsigned long long total = 0;
    for (;;) {
        bool ok = true;
        std::vector<int> assign(n);
        for (int v = 0; v < n && ok; ++v) {
            if (lists[v].empty()) ok = false;
            else assign[v] = lists[v][idx[v]];
        }
        if (ok)
            for (auto [u, v] : g.edges())
                if (!h.has_edge(assign[u], assign[v])) {
                    ok = false;
                    break;
                }
        if (ok) ++total;
        int i = n - 1;
        while (i >= 0 && (lists[i].empty() || idx[i] + 1 == lists[i].size())) idx[i--] = 0;
        if (i < 0) break;
        ++idx[i];
    }
    return total;
}

unsigned long long brute_count_independent_sets(const Graph& g) {
    int n = g.vertex_count();
    auto edges = g.edges();
    unsigned long long total = 0;
    for (std::uint64_t mask = 0;; ++mask) {
        bool ok = true;
        for (auto [u, v] : edges)
            if ((mask >> u & 1) && (mask >> v & 1)) {
                ok = false;
                break;
            }
        if (ok) ++total;
        if (mask + 1 == (std::uint64_t{1} << n)) break;
    }
    return total;
}

namespace {

bool connected_after_deletion(const Graph& g, int removed) {
    int n = g.vertex_count();
    int start = -1, live = 0;
    for (int v = 0; v < n; ++v)
        if (v != removed) {
            ++live;
            if (start == -1) start = v;
        }
    if (live <= 1) return true;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{start};
    seen[start] = true;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbours(v))
            if (w != removed && !seen[w]) {
                seen[w] = true;
                ++visited;
                stack.push_back(w);
            }
    }
    return visited == live;
}

bool subset_connected(const Graph& g, const std::vector<int>& vs) {
    if (vs.empty()) return false;
    std::set<int> in(vs.begin(), vs.end());
    std::set<int> seen{vs[0]};
    std::vector<int> stack{vs[0]};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbours(v))
            if (in.count(w) && !seen.count(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return seen.size() == in.size();
}

}  // namespace

std::vector<int> brute_articulation_points(const Graph& g) {
    int base = static_cast<int>(g.connected_components().size());
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        // Components after deleting v, ignoring v itself.
        std::vector<int> rest;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (u != v) rest.push_back(u);
        Graph sub = g.induced(rest);
        int after = static_cast<int>(sub.connected_components().size());
        int own = g.degree(v) == 0 ? 1 : 0;  // isolated v was its own component
        if (after > base - own) out.push_back(v);
    }
    return out;
}

std::vector<std::vector<int>> brute_blocks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> candidates;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        if (vs.size() < 2) continue;
        Graph sub = g.induced(vs);
        if (!sub.is_connected()) continue;
        if (vs.size() == 2 && !g.has_edge(vs[0], vs[1])) continue;
        bool biconnected = true;
        if (vs.size() > 2)
            for (int v = 0; v < sub.vertex_count() && biconnected; ++v)
                if (!connected_after_deletion(sub, v)) biconnected = false;
        if (biconnected) candidates.push_back(vs);
    }
    std::vector<std::vector<int>> maximal;
    for (const auto& c : candidates) {
        bool dominated = false;
        for (const auto& d : candidates)
            if (c != d && std::includes(d.begin(), d.end(), c.begin(), c.end()))
                dominated = true;
        if (!dominated) maximal.push_back(c);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

bool brute_has_k4_minor(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4) return false;
    if (n > 20) throw std::invalid_argument("brute_has_k4_minor: graph too large");
    std::vector<std::uint32_t> row(n, 0);
    for (auto [u, v] : g.edges())
        if (u != v) {
            row[u] |= 1u << v;
            row[v] |= 1u << u;
        }
    std::map<std::uint32_t, bool> conn;
    auto connected = [&](std::uint32_t s) {
        auto it = conn.find(s);
        if (it != conn.end()) return it->second;
        std::uint32_t start = s & (~s + 1), seen = start, frontier = start;
        while (frontier) {
            std::uint32_t next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1) next |= row[v] & s;
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        return conn[s] = seen == s;
    };
    auto reach = [&](std::uint32_t s) {
        std::uint32_t r = 0;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) r |= row[v];
        return r;
    };
    // Odometer over assignments of vertices to {none, 1..4}.
    std::vector<int> label(n, 0);
    for (;;) {
        std::uint32_t sets[5] = {0, 0, 0, 0, 0};
        for (int v = 0; v < n; ++v) sets[label[v]] |= 1u << v;
        bool ok = true;
        for (int i = 1; i <= 4 && ok; ++i) ok = sets[i] != 0 && connected(sets[i]);
        if (ok) {
            for (int i = 1; i <= 4 && ok; ++i)
                for (int j = i + 1; j <= 4 && ok; ++j)
                    if (!(reach(sets[i]) & sets[j])) ok = false;
            if (ok) return true;
        }
        int v = n - 1;
        while (v >= 0 && label[v] == 4) label[v--] = 0;
        if (v < 0) return false;
        ++label[v];
    }
}

std::vector<std::vector<int>> brute_automorphisms(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u; v < n && ok; ++v)
                if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) ok = false;
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool brute_is_isomorphic(const Graph& g, const Graph& h) {
    int n = g.vertex_count();
    if (n != h.vertex_count()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u; v < n && ok; ++v)
                if (g.has_edge(u, v) != h.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<std::vector<int>> brute_induced_cycle_sets(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        if (vs.size() < 3) continue;
        Graph sub = g.induced(vs);
        bool cycle = sub.is_connected();
        for (int v = 0; v < sub.vertex_count() && cycle; ++v)
            if (sub.degree(v) != 2) cycle = false;
        if (cycle) out.push_back(vs);
    }
    return out;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_bipartite(int left, int right, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(left + right);
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v)
            if (coin(rng)) g.add_edge(u, left + v);
    return g;
}

Graph random_k4_minor_free(int n, std::mt19937& rng) {
    // Series-parallel growth: start from an edge, repeatedly either subdivide
    // an edge, duplicate an edge in parallel via a fresh middle vertex, or
    // hang a pendant vertex.
    if (n < 2) {
        return Graph(std::max(n, 0));
    }
    std::vector<std::pair<int, int>> edges{{0, 1}};
    int next = 2;
    std::uniform_int_distribution<int> move(0, 2);
    while (next < n) {
        std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
        auto [u, v] = edges[pick(rng)];
        int w = next++;
        switch (move(rng)) {
            case 0:  // subdivide
                edges.erase(std::find(edges.begin(), edges.end(), std::make_pair(u, v)));
                edges.emplace_back(u, w);
                edges.emplace_back(w, v);
                break;
            case 1:  // parallel path of length 2
                edges.emplace_back(u, w);
                edges.emplace_back(w, v);
                break;
            default:  // pendant
                edges.emplace_back(u, w);
                break;
        }
    }
    Graph g(n);
    for (auto [u, v] : edges)
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

}  // namespace parhom::oracle
