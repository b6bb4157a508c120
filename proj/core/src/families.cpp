#include "parhom/families.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace parhom {

namespace {

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> minus_set(const std::vector<int>& xs, const std::vector<int>& remove) {
    std::vector<int> out;
    for (int x : xs)
        if (!std::count(remove.begin(), remove.end(), x)) out.push_back(x);
    return out;
}

}  // namespace

TypeVStatus type_v_status(const Graph& h, const std::vector<int>& f) {
    if (f.size() != 6) throw std::invalid_argument("type_v_status: embedding needs 6 vertices");
    std::set<int> image(f.begin(), f.end());
    if (image.size() != 6) throw std::invalid_argument("type_v_status: embedding not injective");
    static const int f_edges[7][2] = {{0, 1}, {1, 2}, {1, 4}, {0, 3}, {3, 4}, {4, 5}, {2, 5}};
    for (auto [u, v] : f_edges)
        if (!h.has_edge(f[u], f[v]))
            throw std::invalid_argument("type_v_status: embedding not edge-preserving");

    std::vector<int> fv(image.begin(), image.end());
    auto off_f = [&](int i, int j) {
        return minus_set(common_neighbourhood(h, {f[i - 1], f[j - 1]}), fv);
    };
    TypeVStatus st;
    st.g15 = off_f(1, 5);
    st.g35 = off_f(3, 5);
    st.g24 = off_f(2, 4);
    st.g26 = off_f(2, 6);
    if (!st.g15.empty() && !st.g35.empty() && st.g24.empty() && st.g26.empty())
        st.verdict = TypeVStatus::Verdict::TypeVLeft;
    else if (!st.g24.empty() && !st.g26.empty() && st.g15.empty() && st.g35.empty())
        st.verdict = TypeVStatus::Verdict::TypeVRight;
    else
        st.verdict = TypeVStatus::Verdict::NotTypeV;
    return st;
}

std::vector<int> ImpasseWitness::left_class() const {
    std::vector<int> out = ys;
    out.push_back(v1);
    return sorted(out);
}

std::vector<int> ImpasseWitness::right_class() const {
    std::vector<int> out = zs;
    out.push_back(v3);
    return sorted(out);
}

ImpasseWitness ImpasseWitness::oriented_at(int a, int b) const {
    auto left = left_class();
    auto right = right_class();
    if (!std::count(left.begin(), left.end(), a) ||
        !std::count(right.begin(), right.end(), b))
        throw std::invalid_argument("impasse witness: not a pair of connectors");
    ImpasseWitness out = *this;
    out.v1 = a;
    out.v3 = b;
    out.ys = minus_set(left, {a});
    out.zs = minus_set(right, {b});
    return out;
}

namespace {

std::optional<DiamondWitness> match_diamond(const Graph& b) {
    int n = b.vertex_count();
    if (n < 4) return std::nullopt;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (b.has_edge(s, t)) continue;
            bool ok = true;
            std::vector<int> middles;
            for (int x = 0; x < n && ok; ++x) {
                if (x == s || x == t) continue;
                if (b.degree(x) != 2 || !b.has_edge(s, x) || !b.has_edge(t, x)) ok = false;
                middles.push_back(x);
            }
            if (ok && b.degree(s) == n - 2 && b.degree(t) == n - 2)
                return DiamondWitness{s, t, middles};
        }
    return std::nullopt;
}

// Induced embedding of some S_{k,l} (k, l odd) covering all common neighbours
// of the two diagonals, connector classes of block-degree 2, and the block a
// (1,2)-supergraph of the image.
std::optional<ImpasseWitness> match_impasse(const Graph& b) {
    int n = b.vertex_count();
    if (n < 8) return std::nullopt;
    for (int v2 = 0; v2 < n; ++v2)
        for (int v5 : b.neighbours(v2))
            for (int v4 : b.neighbours(v5)) {
                if (v4 == v2 || b.has_edge(v4, v2)) continue;
                for (int v6 : b.neighbours(v5)) {
                    if (v6 == v2 || v6 == v4 || b.has_edge(v6, v2)) continue;
                    if (b.has_edge(v4, v6)) continue;
                    // v5 sits in both diagonal neighbourhoods; the connector
                    // classes are what remains.
                    auto ally = minus_set(common_neighbourhood(b, {v2, v4}), {v5});
                    auto allz = minus_set(common_neighbourhood(b, {v2, v6}), {v5});
                    int k = static_cast<int>(ally.size());   // connector class size
                    int l = static_cast<int>(allz.size());   // connector class size
                    if (k < 2 || l < 2 || k % 2 != 0 || l % 2 != 0) continue;
                    std::vector<int> core{v2, v5, v4, v6};
                    bool clash = false;
                    for (int y : ally)
                        if (std::count(core.begin(), core.end(), y)) clash = true;
                    for (int z : allz)
                        if (std::count(core.begin(), core.end(), z) ||
                            std::count(ally.begin(), ally.end(), z))
                            clash = true;
                    if (clash) continue;
                    bool deg_ok = true;
                    for (int y : ally)
                        if (b.degree(y) != 2) deg_ok = false;
                    for (int z : allz)
                        if (b.degree(z) != 2) deg_ok = false;
                    if (!deg_ok) continue;

                    ImpasseWitness w;
                    w.v1 = ally.front();
                    w.v2 = v2;
                    w.v3 = allz.front();
                    w.v4 = v4;
                    w.v5 = v5;
                    w.v6 = v6;
                    w.ys = minus_set(ally, {w.v1});
                    w.zs = minus_set(allz, {w.v3});

                    // Template S_{k-1, l-1} in role order v1..v6, y*, z*.
                    std::vector<int> emb{w.v1, w.v2, w.v3, w.v4, w.v5, w.v6};
                    emb.insert(emb.end(), w.ys.begin(), w.ys.end());
                    emb.insert(emb.end(), w.zs.begin(), w.zs.end());
                    Graph tmpl(static_cast<int>(emb.size()));
                    tmpl.add_edge(0, 1);
                    tmpl.add_edge(1, 2);
                    tmpl.add_edge(1, 4);
                    tmpl.add_edge(0, 3);
                    tmpl.add_edge(3, 4);
                    tmpl.add_edge(4, 5);
                    tmpl.add_edge(2, 5);
                    for (std::size_t i = 0; i < w.ys.size(); ++i) {
                        tmpl.add_edge(1, static_cast<int>(6 + i));
                        tmpl.add_edge(3, static_cast<int>(6 + i));
                    }
                    for (std::size_t i = 0; i < w.zs.size(); ++i) {
                        tmpl.add_edge(1, static_cast<int>(6 + w.ys.size() + i));
                        tmpl.add_edge(5, static_cast<int>(6 + w.ys.size() + i));
                    }
                    bool induced = true;
                    for (std::size_t i = 0; i < emb.size() && induced; ++i)
                        for (std::size_t jj = i + 1; jj < emb.size() && induced; ++jj)
                            if (b.has_edge(emb[i], emb[jj]) !=
                                tmpl.has_edge(static_cast<int>(i), static_cast<int>(jj)))
                                induced = false;
                    if (!induced) continue;
                    if (!is_12_supergraph(b, tmpl, emb)) continue;
                    return w;
                }
            }
    return std::nullopt;
}

std::vector<ClosedWalk> obstruction_cycles(const Graph& b) {
    std::vector<ClosedWalk> cy;
    for (const auto& c : induced_cycles(b, [](int l) { return l != 4; })) {
        auto sets = walk_neighbour_sets(c, b);
        bool ok = true;
        for (const auto& s : sets) {
            if (s.size() % 2 != 0) continue;
            for (int v : s)
                if (b.degree(v) != 2) ok = false;
        }
        if (ok) cy.push_back(c);
    }
    return cy;
}

}  // namespace

ComponentKind classify_block_unchecked(const Graph& h, const std::vector<int>& block) {
    ComponentKind kind;
    if (block.size() == 2) {
        kind.tag = ComponentKind::Tag::Edge;
        return kind;
    }
    Graph b = h.induced(block);
    if (auto dw = match_diamond(b)) {
        kind.tag = ComponentKind::Tag::Diamond;
        DiamondWitness w{block[dw->s], block[dw->t], {}};
        for (int m : dw->middles) w.middles.push_back(block[m]);
        std::sort(w.middles.begin(), w.middles.end());
        kind.diamond = w;
        return kind;
    }
    if (auto iw = match_impasse(b)) {
        kind.tag = ComponentKind::Tag::Impasse;
        ImpasseWitness w;
        w.v1 = block[iw->v1];
        w.v2 = block[iw->v2];
        w.v3 = block[iw->v3];
        w.v4 = block[iw->v4];
        w.v5 = block[iw->v5];
        w.v6 = block[iw->v6];
        for (int y : iw->ys) w.ys.push_back(block[y]);
        for (int z : iw->zs) w.zs.push_back(block[z]);
        kind.impasse = w;
        return kind;
    }
    auto cy_local = obstruction_cycles(b);
    if (!cy_local.empty()) {
        kind.tag = ComponentKind::Tag::Obstruction;
        for (const auto& c : cy_local) {
            ClosedWalk host_c;
            for (int v : c.seq) host_c.seq.push_back(block[v]);
            kind.cycles.push_back(canonical_cycle(host_c));
        }
        std::sort(kind.cycles.begin(), kind.cycles.end());
        return kind;
    }
    kind.tag = ComponentKind::Tag::Other;
    kind.other_reason = local_rule_hint(h);
    return kind;
}

ComponentKind classify_biconnected(const Graph& h, const std::vector<int>& block) {
    if (!is_k4_minor_free(h))
        throw std::invalid_argument("classify_biconnected: host must be K4-minor-free");
    auto bc = block_cut_tree(h);
    auto key = sorted(block);
    if (!std::count(bc.blocks.begin(), bc.blocks.end(), key))
        throw std::invalid_argument("classify_biconnected: not a block of the host");
    return classify_block_unchecked(h, key);
}

std::vector<SuitableConnector> suitable_connectors(const Graph& h, const BlockCutTree& bc,
                                                   int block_id, const ComponentKind& kind) {
    const std::vector<int>& block = bc.blocks.at(block_id);
    std::vector<SuitableConnector> out;
    auto artic = [&](int v) { return bc.is_cut(v); };

    switch (kind.tag) {
        case ComponentKind::Tag::Edge: {
            if (artic(block[0]) && artic(block[1]))
                out.push_back({block_id, block, std::nullopt});
            break;
        }
        case ComponentKind::Tag::Diamond: {
            const auto& w = *kind.diamond;
            for (int pole : {std::min(w.s, w.t), std::max(w.s, w.t)})
                for (int mid : w.middles)
                    if (artic(pole) && artic(mid))
                        out.push_back({block_id, sorted({pole, mid}), std::nullopt});
            std::sort(out.begin(), out.end(),
                      [](const SuitableConnector& x, const SuitableConnector& y) {
                          return x.a < y.a;
                      });
            out.erase(std::unique(out.begin(), out.end(),
                                  [](const SuitableConnector& x, const SuitableConnector& y) {
                                      return x.a == y.a;
                                  }),
                      out.end());
            break;
        }
        case ComponentKind::Tag::Impasse: {
            const auto& w = *kind.impasse;
            for (int a : w.left_class())
                for (int b : w.right_class())
                    if (artic(a) && artic(b))
                        out.push_back({block_id, sorted({a, b}), std::nullopt});
            std::sort(out.begin(), out.end(),
                      [](const SuitableConnector& x, const SuitableConnector& y) {
                          return x.a < y.a;
                      });
            break;
        }
        case ComponentKind::Tag::Obstruction: {
            std::map<std::vector<int>, ClosedWalk> best;
            for (const auto& c : kind.cycles) {
                auto sets = walk_neighbour_sets(c, h);
                std::vector<int> a;
                for (int i = 0; i < c.length(); ++i)
                    if (sets[i].size() % 2 == 0) a.push_back(c.seq[i]);
                std::sort(a.begin(), a.end());
                a.erase(std::unique(a.begin(), a.end()), a.end());
                bool all_artic = true;
                for (int v : a)
                    if (!artic(v)) all_artic = false;
                if (!all_artic) continue;
                auto [it, fresh] = best.emplace(a, c);
                if (!fresh && c < it->second) it->second = c;
            }
            for (const auto& [a, c] : best) out.push_back({block_id, a, c});
            break;
        }
        case ComponentKind::Tag::Other:
            throw std::invalid_argument("suitable_connectors: block classified Other");
    }
    return out;
}

std::vector<SuitableConnector> suitable_connectors(const Graph& h,
                                                   const std::vector<int>& block) {
    auto bc = block_cut_tree(h);
    auto key = sorted(block);
    auto it = std::find(bc.blocks.begin(), bc.blocks.end(), key);
    if (it == bc.blocks.end())
        throw std::invalid_argument("suitable_connectors: not a block of the host");
    int id = static_cast<int>(it - bc.blocks.begin());
    return suitable_connectors(h, bc, id, classify_block_unchecked(h, key));
}

std::vector<int> SuitableSubtree::cut_vertices() const {
    std::set<int> cuts;
    for (const auto& [b, conn] : connectors) cuts.insert(conn.a.begin(), conn.a.end());
    return {cuts.begin(), cuts.end()};
}

std::vector<int> SuitableSubtree::blocks_at(int cut) const {
    std::vector<int> out;
    for (const auto& [b, conn] : connectors)
        if (std::count(conn.a.begin(), conn.a.end(), cut)) out.push_back(b);
    return out;
}

TreePath obstruction_free_path(const BlockCutTree& bc, const SuitableSubtree& tree,
                               int a, int from_block) {
    (void)bc;
    TreePath path;
    path.cuts.push_back(a);
    int prev_block = from_block;
    int cur = a;
    for (;;) {
        std::vector<int> next_blocks;
        for (int b : tree.blocks_at(cur))
            if (b != prev_block) next_blocks.push_back(b);
        if (next_blocks.empty()) break;  // leaf cut vertex of T
        if (next_blocks.size() > 1)
            throw verification_error("suitable subtree has a cut vertex of degree > 2");
        int b = next_blocks[0];
        if (tree.kinds.at(b).tag == ComponentKind::Tag::Obstruction) break;
        const auto& conn = tree.connectors.at(b);
        if (conn.a.size() != 2)
            throw verification_error("non-obstruction block without two connectors");
        int other = conn.a[0] == cur ? conn.a[1] : conn.a[0];
        path.blocks.push_back(b);
        path.cuts.push_back(other);
        prev_block = b;
        cur = other;
    }
    return path;
}

ExitReport exits_and_attachments(const Graph& h, const BlockCutTree& bc,
                                 const SuitableSubtree& tree, int block_id) {
    (void)h;
    if (tree.kinds.at(block_id).tag != ComponentKind::Tag::Obstruction)
        throw std::invalid_argument("exits_and_attachments: block is not an obstruction");
    ExitReport report;
    for (int a : tree.connectors.at(block_id).a) {
        TreePath p = obstruction_free_path(bc, tree, a, block_id);
        int b = p.cuts.back();
        int last_block = p.blocks.empty() ? block_id : p.blocks.back();
        std::vector<int> beyond;
        for (int blk : tree.blocks_at(b))
            if (blk != last_block && blk != block_id) beyond.push_back(blk);
        if (beyond.empty()) {
            report.attachments.push_back(a);
        } else {
            int dest = beyond[0];
            if (tree.kinds.at(dest).tag != ComponentKind::Tag::Obstruction)
                throw verification_error("obstruction-free path ended at a non-obstruction");
            report.exits.push_back(Exit{a, b, dest});
        }
    }
    return report;
}

bool is_r_closed(const BlockCutTree& bc, int a, int r) {
    int ci = bc.cut_index(a);
    if (ci == -1) throw std::invalid_argument("is_r_closed: not a cut vertex");
    if (r < 0 || r >= bc.block_count()) throw std::invalid_argument("is_r_closed: bad block");
    int nb = bc.block_count(), nc = static_cast<int>(bc.cut_vertices.size());
    auto adj = [&](int node) {
        std::vector<int> out;
        if (node < nb)
            for (int c : bc.block_cut_ids[node]) out.push_back(nb + c);
        else
            for (int b : bc.cut_block_ids[node - nb]) out.push_back(b);
        return out;
    };
    std::vector<int> parent(nb + nc, -2);
    std::queue<int> q;
    parent[r] = -1;
    q.push(r);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj(v))
            if (parent[w] == -2) {
                parent[w] = v;
                q.push(w);
            }
    }
    int anode = nb + ci;
    if (parent[anode] == -2) throw std::invalid_argument("is_r_closed: unreachable cut vertex");
    std::vector<int> desc;
    std::queue<int> q2;
    for (int w : adj(anode))
        if (w != parent[anode]) q2.push(w);
    while (!q2.empty()) {
        int v = q2.front();
        q2.pop();
        desc.push_back(v);
        for (int w : adj(v))
            if (parent[w] == v) q2.push(w);
    }
    if (desc.size() != 1) return false;
    int d = desc[0];
    return d < nb && bc.blocks[d].size() == 2;
}

}  // namespace parhom
