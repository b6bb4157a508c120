#include "parhom/structure.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace parhom {

int BlockCutTree::cut_index(int v) const {
    auto it = std::lower_bound(cut_vertices.begin(), cut_vertices.end(), v);
    if (it == cut_vertices.end() || *it != v) return -1;
    return static_cast<int>(it - cut_vertices.begin());
}

std::vector<int> BlockCutTree::blocks_containing(int v) const {
    std::vector<int> out;
    for (int b = 0; b < block_count(); ++b)
        if (std::binary_search(blocks[b].begin(), blocks[b].end(), v)) out.push_back(b);
    return out;
}

BlockCutTree block_cut_tree(const Graph& h) {
    if (!h.is_connected()) throw std::invalid_argument("block_cut_tree: disconnected graph");
    int n = h.vertex_count();

    // Iterative lowpoint DFS with an edge stack.
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::vector<int>> raw_blocks;
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    struct Frame {
        int v;
        std::size_t next = 0;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            int v = f.v;
            if (f.next < h.neighbours(v).size()) {
                int w = h.neighbours(v)[f.next++];
                if (w == v) continue;
                if (disc[w] == -1) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    edge_stack.emplace_back(v, w);
                    stack.push_back({w});
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    edge_stack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) continue;
                int p = stack.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) {
                    // The tree edge (p, v) closes a block: its edges are those
                    // on the stack above and including (p, v).
                    std::set<int> verts;
                    std::pair<int, int> e;
                    do {
                        e = edge_stack.back();
                        edge_stack.pop_back();
                        verts.insert(e.first);
                        verts.insert(e.second);
                    } while (e != std::make_pair(p, v));
                    raw_blocks.emplace_back(verts.begin(), verts.end());
                }
            }
        }
    }

    BlockCutTree bc;
    std::sort(raw_blocks.begin(), raw_blocks.end());
    bc.blocks = std::move(raw_blocks);

    std::vector<int> containing(n, 0);
    for (const auto& blk : bc.blocks)
        for (int v : blk) ++containing[v];
    for (int v = 0; v < n; ++v)
        if (containing[v] >= 2) bc.cut_vertices.push_back(v);

    bc.block_cut_ids.resize(bc.blocks.size());
    bc.cut_block_ids.resize(bc.cut_vertices.size());
    for (int b = 0; b < bc.block_count(); ++b)
        for (int v : bc.blocks[b])
            if (int c = bc.cut_index(v); c != -1) {
                bc.block_cut_ids[b].push_back(c);
                bc.cut_block_ids[c].push_back(b);
            }
    return bc;
}

bool is_k4_minor_free(const Graph& h) {
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.has_loop(v)) throw std::invalid_argument("is_k4_minor_free: loop-free input required");
    int n = h.vertex_count();
    std::vector<std::set<int>> nb(n);
    for (auto [u, v] : h.edges()) {
        nb[u].insert(v);
        nb[v].insert(u);
    }
    std::vector<bool> gone(n, false);
    int remaining = n;
    bool progress = true;
    while (remaining > 0 && progress) {
        progress = false;
        for (int v = 0; v < n; ++v) {
            if (gone[v] || nb[v].size() > 2) continue;
            if (nb[v].size() == 2) {
                auto it = nb[v].begin();
                int a = *it++;
                int b = *it;
                nb[a].insert(b);
                nb[b].insert(a);
            }
            for (int u : nb[v]) nb[u].erase(v);
            nb[v].clear();
            gone[v] = true;
            --remaining;
            progress = true;
        }
    }
    return remaining == 0;
}

bool is_closed_walk(const ClosedWalk& w, const Graph& h) {
    int q = w.length();
    if (q < 1) return false;
    for (int i = 0; i < q; ++i) {
        int u = w.seq[i], v = w.seq[(i + 1) % q];
        if (u < 0 || u >= h.vertex_count()) return false;
        if (!h.has_edge(u, v)) return false;
    }
    return true;
}

bool is_cycle(const ClosedWalk& w, const Graph& h) {
    if (w.length() < 3 || !is_closed_walk(w, h)) return false;
    std::set<int> distinct(w.seq.begin(), w.seq.end());
    return static_cast<int>(distinct.size()) == w.length();
}

ClosedWalk canonical_cycle(const ClosedWalk& w) {
    int q = w.length();
    if (q == 0) return w;
    int pos = 0;
    for (int i = 1; i < q; ++i)
        if (w.seq[i] < w.seq[pos]) pos = i;
    std::vector<int> fwd(q), rev(q);
    for (int i = 0; i < q; ++i) {
        fwd[i] = w.seq[(pos + i) % q];
        rev[i] = w.seq[((pos - i) % q + q) % q];
    }
    return ClosedWalk{std::min(fwd, rev)};
}

std::vector<ClosedWalk> induced_cycles(const Graph& h,
                                       const std::function<bool(int)>& length_ok,
                                       int vertex_bound, long cap) {
    if (h.vertex_count() > vertex_bound)
        throw bound_error("induced_cycles: graph exceeds the vertex bound");
    std::vector<ClosedWalk> out;
    long seen = 0;
    int n = h.vertex_count();
    std::vector<int> path;
    std::vector<bool> on_path(n, false);

    // Chordless paths from s over vertices > s; a cycle is emitted when the
    // last vertex closes to s and s has no chord into the interior. The
    // direction is fixed by path[1] < path.back().
    std::function<void(int)> extend = [&](int s) {
        int last = path.back();
        if (path.size() >= 3 && h.has_edge(last, s)) {
            // s may only touch its two cycle neighbours path[1] and last.
            bool chordless = true;
            for (std::size_t i = 2; i + 1 < path.size() && chordless; ++i)
                if (h.has_edge(path[i], s)) chordless = false;
            if (chordless && path[1] < last) {
                if (++seen > cap) throw bound_error("induced_cycles: enumeration cap hit");
                if (length_ok(static_cast<int>(path.size())))
                    out.push_back(ClosedWalk{path});
            }
        }
        for (int y : h.neighbours(last)) {
            if (y <= s || on_path[y]) continue;
            bool ok = true;
            for (std::size_t i = 0; i + 1 < path.size() && ok; ++i)
                if (path[i] != s && h.has_edge(path[i], y)) ok = false;
            if (!ok) continue;
            // y may touch s (that closes a cycle at the next level).
            path.push_back(y);
            on_path[y] = true;
            extend(s);
            on_path[y] = false;
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        path = {s};
        on_path.assign(n, false);
        on_path[s] = true;
        extend(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_chordal_bipartite(const Graph& h, int vertex_bound) {
    return induced_cycles(h, [](int len) { return len != 4; }, vertex_bound).empty();
}

std::vector<std::vector<int>> walk_neighbour_sets(const ClosedWalk& w, const Graph& h) {
    if (!is_closed_walk(w, h))
        throw std::invalid_argument("walk_neighbour_sets: not a closed walk in the graph");
    int q = w.length();
    std::vector<std::vector<int>> out(q);
    for (int i = 0; i < q; ++i) {
        int prev = w.seq[(i - 1 + q) % q], next = w.seq[(i + 1) % q];
        out[i] = common_neighbourhood(h, {prev, next});
    }
    return out;
}

std::vector<int> canonical_shortest_path(const Graph& h, int a, int b) {
    h.check_vertex(a);
    h.check_vertex(b);
    if (a == b) return {a};
    std::vector<int> dist(h.vertex_count(), -1);
    std::queue<int> q;
    dist[b] = 0;
    q.push(b);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : h.neighbours(v))
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    if (dist[a] == -1)
        throw std::invalid_argument("canonical_shortest_path: vertices are disconnected");
    std::vector<int> path{a};
    int cur = a;
    while (cur != b) {
        for (int w : h.neighbours(cur))
            if (dist[w] == dist[cur] - 1) {  // smallest such w: neighbours are sorted
                path.push_back(w);
                cur = w;
                break;
            }
    }
    return path;
}

bool is_12_supergraph(const Graph& h, const Graph& j, const std::vector<int>& embedding) {
    if (static_cast<int>(embedding.size()) != j.vertex_count())
        throw std::invalid_argument("is_12_supergraph: embedding size mismatch");
    std::vector<int> back(h.vertex_count(), -1);
    for (int v = 0; v < j.vertex_count(); ++v) {
        h.check_vertex(embedding[v]);
        if (back[embedding[v]] != -1)
            throw std::invalid_argument("is_12_supergraph: embedding not injective");
        back[embedding[v]] = v;
    }
    for (auto [u, v] : j.edges())
        if (!h.has_edge(embedding[u], embedding[v]))
            throw std::invalid_argument("is_12_supergraph: embedding not edge-preserving");

    for (int u = 0; u < j.vertex_count(); ++u)
        for (int v = u + 1; v < j.vertex_count(); ++v) {
            if (h.has_edge(embedding[u], embedding[v]) && !j.has_edge(u, v)) return false;
            for (int w : common_neighbourhood(h, {embedding[u], embedding[v]})) {
                if (w == embedding[u] || w == embedding[v]) continue;
                int jw = back[w];
                if (jw == -1 || !j.has_edge(u, jw) || !j.has_edge(jw, v)) return false;
            }
        }
    return true;
}

bool is_separation(const Graph& g, const Separation& s) {
    std::vector<bool> in_a(g.vertex_count(), false), in_b(g.vertex_count(), false);
    for (int v : s.a) in_a[v] = true;
    for (int v : s.b) in_b[v] = true;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_a[v] && !in_b[v]) return false;
    for (auto [u, v] : g.edges())
        if ((in_a[u] && !in_b[u] && in_b[v] && !in_a[v]) ||
            (in_a[v] && !in_b[v] && in_b[u] && !in_a[u]))
            return false;
    return true;
}

bool exists_d_walk(const Graph& h, const std::vector<std::vector<int>>& c_sets) {
    int q = static_cast<int>(c_sets.size());
    if (q == 0) return false;
    std::vector<std::vector<int>> allowed(q);
    for (int i = 0; i < q; ++i) {
        std::set<int> forbidden(c_sets[(i - 1 + q) % q].begin(), c_sets[(i - 1 + q) % q].end());
        forbidden.insert(c_sets[(i + 1) % q].begin(), c_sets[(i + 1) % q].end());
        for (int v : common_neighbourhood(h, c_sets[i]))
            if (!forbidden.count(v)) allowed[i].push_back(v);
        if (allowed[i].empty()) return false;
    }
    // Fix d_0, propagate reachable sets through allowed_1..allowed_{q-1}, close.
    for (int start : allowed[0]) {
        std::vector<char> reach(h.vertex_count(), 0);
        reach[start] = 1;
        for (int i = 1; i < q; ++i) {
            std::vector<char> next(h.vertex_count(), 0);
            bool any = false;
            for (int v : allowed[i])
                for (int u : h.neighbours(v))
                    if (reach[u]) {
                        next[v] = 1;
                        any = true;
                        break;
                    }
            reach = std::move(next);
            if (!any) break;
        }
        for (int v : h.neighbours(start))
            if (v < h.vertex_count() && reach[v]) return true;
    }
    return false;
}

}  // namespace parhom
