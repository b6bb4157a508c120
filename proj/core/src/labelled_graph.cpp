#include "parhom/labelled_graph.hpp"

#include <numeric>

namespace parhom {

PartiallyLabelledGraph::PartiallyLabelledGraph(Graph g, std::map<int, int> pins,
                                               std::vector<int> dist)
    : underlying(std::move(g)), pinning(std::move(pins)), distinguished(std::move(dist)) {
    for (const auto& [v, a] : pinning) {
        underlying.check_vertex(v);
        if (a < 0) throw std::invalid_argument("negative pin target");
    }
    if (distinguished.size() > 2)
        throw std::invalid_argument("at most two distinguished vertices");
    for (int v : distinguished) {
        underlying.check_vertex(v);
        if (pinning.count(v))
            throw std::invalid_argument("distinguished vertex is pinned");
    }
}

void PartiallyLabelledGraph::validate_against(const Graph& h) const {
    for (const auto& [v, a] : pinning) {
        (void)v;
        h.check_vertex(a);
    }
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> graft_vertex_map(
    const std::vector<PartiallyLabelledGraph>& parts,
    const std::vector<GraftIdentification>& ids) {
    std::vector<int> offset(parts.size() + 1, 0);
    for (std::size_t p = 0; p < parts.size(); ++p)
        offset[p + 1] = offset[p] + parts[p].underlying.vertex_count();
    UnionFind uf(offset.back());
    for (const auto& id : ids) {
        if (id.part_a < 0 || id.part_a >= static_cast<int>(parts.size()) ||
            id.part_b < 0 || id.part_b >= static_cast<int>(parts.size()))
            throw std::invalid_argument("graft: part index out of range");
        parts[id.part_a].underlying.check_vertex(id.vertex_a);
        parts[id.part_b].underlying.check_vertex(id.vertex_b);
        uf.unite(offset[id.part_a] + id.vertex_a, offset[id.part_b] + id.vertex_b);
    }
    // Dense renumbering of classes, ordered by smallest member.
    std::vector<int> klass(offset.back(), -1);
    int next = 0;
    for (int v = 0; v < offset.back(); ++v) {
        int r = uf.find(v);
        if (klass[r] == -1) klass[r] = next++;
        klass[v] = klass[r];
    }
    std::vector<std::vector<int>> out(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        out[p].resize(parts[p].underlying.vertex_count());
        for (int v = 0; v < parts[p].underlying.vertex_count(); ++v)
            out[p][v] = klass[offset[p] + v];
    }
    return out;
}

PartiallyLabelledGraph graft(const std::vector<PartiallyLabelledGraph>& parts,
                             const std::vector<GraftIdentification>& ids,
                             const std::vector<std::pair<int, int>>& distinguished) {
    auto vmap = graft_vertex_map(parts, ids);
    int n = 0;
    for (const auto& pm : vmap)
        for (int v : pm) n = std::max(n, v + 1);

    bool loops = false;
    for (const auto& part : parts) loops = loops || part.underlying.loops_allowed();
    Graph g(n, loops);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (auto [u, v] : parts[p].underlying.edges()) {
            int a = vmap[p][u], b = vmap[p][v];
            if (!g.has_edge(a, b)) g.add_edge(a, b);
        }

    std::map<int, int> pins;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (const auto& [v, a] : parts[p].pinning) {
            auto [it, fresh] = pins.emplace(vmap[p][v], a);
            if (!fresh && it->second != a)
                throw std::invalid_argument("graft: conflicting pins on identified vertices");
        }

    std::vector<int> dist;
    for (auto [p, v] : distinguished) dist.push_back(vmap.at(p).at(v));
    return PartiallyLabelledGraph(std::move(g), std::move(pins), std::move(dist));
}

}  // namespace parhom
