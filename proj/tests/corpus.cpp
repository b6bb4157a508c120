#include "corpus.hpp"

#include <algorithm>

#include "parhom/generators.hpp"
#include "parhom/symmetry.hpp"

namespace parhom::testcorpus {

namespace {

Graph grow(const Graph& base, int extra) {
    Graph g(base.vertex_count() + extra, base.loops_allowed());
    for (auto [u, v] : base.edges()) g.add_edge(u, v);
    return g;
}

// Adds a pendant at `at` and returns the new vertex id.
int add_pendant(Graph& g, int at) {
    Graph bigger(g.vertex_count() + 1, g.loops_allowed());
    for (auto [u, v] : g.edges()) bigger.add_edge(u, v);
    bigger.add_edge(at, g.vertex_count());
    int id = g.vertex_count();
    g = std::move(bigger);
    return id;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace

Graph decorate_with_trees(const Graph& base, int extra, std::mt19937& rng,
                          const std::vector<int>& allowed) {
    Graph g = base;
    std::vector<int> sites = allowed;
    if (sites.empty())
        for (int v = 0; v < base.vertex_count(); ++v) sites.push_back(v);
    for (int i = 0; i < extra; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
        sites.push_back(add_pendant(g, sites[pick(rng)]));
    }
    return g;
}

namespace {

RuleHost make_type_v_host(std::mt19937& rng) {
    Graph f = generate(GraphFamily::f());
    std::uniform_int_distribution<int> extra(0, 6);
    RuleHost out{decorate_with_trees(f, extra(rng), rng),
                 LocalRule{LocalRule::Tag::TypeVHard, {0, 1, 2, 3, 4, 5}}};
    return out;
}

RuleHost make_even_diamond_host(std::mt19937& rng) {
    std::uniform_int_distribution<int> kk(1, 2), ll(1, 3), extra(0, 5);
    int k = 2 * kk(rng);   // even y class on (v2, v4)
    int l = ll(rng);
    Graph base = generate(GraphFamily::skl(k, l));
    RuleHost out{decorate_with_trees(base, extra(rng), rng, {0, 1, 2, 3, 4, 5}),
                 LocalRule{LocalRule::Tag::EvenDiamond, {0, 1, 2, 3, 4, 5}}};
    return out;
}

RuleHost make_good_triangle_host(std::mt19937& rng) {
    // roles (i, x, s, v, u) = 0..4
    Graph base = from_edges(5, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}, {2, 4}, {4, 1}});
    std::uniform_int_distribution<int> extra(0, 6);
    return {decorate_with_trees(base, extra(rng), rng),
            LocalRule{LocalRule::Tag::GoodTriangle, {0, 1, 2, 3, 4}}};
}

RuleHost make_adj_odd_host(std::mt19937& rng) {
    std::uniform_int_distribution<int> pages(1, 2), extra(0, 5);
    int j = 2 * pages(rng) + 1;  // odd >= 3
    Graph base(2 + j);
    base.add_edge(0, 1);
    for (int i = 0; i < j; ++i) {
        base.add_edge(0, 2 + i);
        base.add_edge(1, 2 + i);
    }
    return {decorate_with_trees(base, extra(rng), rng),
            LocalRule{LocalRule::Tag::AdjOddNeighbours, {0, 1}}};
}

RuleHost make_diamond_square_host(std::mt19937& rng) {
    Graph base = generate(GraphFamily::f());
    Graph with_diag = grow(base, 0);
    with_diag.add_edge(0, 4);  // the {v1, v5} diagonal
    std::uniform_int_distribution<int> flavour(0, 1), extra(0, 5), kk(0, 1);
    if (flavour(rng) == 1) {
        // Type-V flavour: odd class of extra common neighbours of (v1, v5).
        int k = 2 * kk(rng) + 1;
        Graph g = grow(with_diag, k);
        for (int i = 0; i < k; ++i) {
            g.add_edge(0, 6 + i);
            g.add_edge(4, 6 + i);
        }
        with_diag = g;
    }
    return {decorate_with_trees(with_diag, extra(rng), rng, {0, 1, 2, 3, 4, 5}),
            LocalRule{LocalRule::Tag::DiamondSquare, {0, 1, 2, 3, 4, 5}}};
}

RuleHost make_three_by_one_host(std::mt19937& rng) {
    Graph base = from_edges(8, {{1, 5}, {0, 1}, {1, 2}, {0, 4}, {4, 5},
                                {5, 6}, {2, 6}, {2, 3}, {3, 7}, {6, 7}});
    std::uniform_int_distribution<int> flavour(0, 1), extra(0, 4);
    Graph host = base;
    if (flavour(rng) == 1) {
        // Full case: odd diagonal classes on (v2,v5), (v2,v7), (v4,v7).
        host = grow(base, 3);
        host.add_edge(1, 8);
        host.add_edge(4, 8);
        host.add_edge(1, 9);
        host.add_edge(6, 9);
        host.add_edge(3, 10);
        host.add_edge(6, 10);
    }
    return {decorate_with_trees(host, extra(rng), rng, {0, 1, 2, 3, 4, 5, 6, 7}),
            LocalRule{LocalRule::Tag::ThreeByOne, {0, 1, 2, 3, 4, 5, 6, 7}}};
}

RuleHost make_zigzag_host(std::mt19937& rng) {
    // roles (s, i, o, u, v, x, w1, w2, d) = 0..8
    Graph base = from_edges(9, {{0, 1}, {0, 2}, {0, 4}, {2, 3}, {3, 1}, {5, 1},
                                {4, 5}, {1, 6}, {6, 7}, {7, 5}, {8, 2}, {8, 1}});
    std::uniform_int_distribution<int> flavour(0, 2), extra(0, 4);
    Graph host = base;
    int f = flavour(rng);
    if (f >= 1) {
        // Both F copies of type V: add common neighbours on (v, i) and (i, w2).
        host = grow(base, 2);
        host.add_edge(4, 9);
        host.add_edge(1, 9);
        host.add_edge(1, 10);
        host.add_edge(7, 10);
        if (f == 2) add_pendant(host, 1);  // flips deg(i) to even: case I
    }
    return {decorate_with_trees(host, extra(rng), rng, {0, 2, 4, 5}),
            LocalRule{LocalRule::Tag::Zigzag, {0, 1, 2, 3, 4, 5, 6, 7, 8}}};
}

RuleHost make_cycle_of_squares_host(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 3), extra(0, 6);
    int q = std::vector<int>{3, 5, 6, 7}[len(rng)];
    Graph base = generate(GraphFamily::cycle(q));
    std::vector<int> cycle(q);
    std::iota(cycle.begin(), cycle.end(), 0);
    return {decorate_with_trees(base, extra(rng), rng),
            LocalRule{LocalRule::Tag::CycleOfSquares, cycle}};
}

RuleHost make_hard_impasse_host(std::mt19937& rng) {
    std::uniform_int_distribution<int> kk(0, 1), ll(0, 1), extra(0, 3);
    int k = 2 * kk(rng) + 1, l = 2 * ll(rng) + 1;
    Graph base = generate(GraphFamily::skl(k, l));
    // deg(v2) = 3 + k + l is odd; one pendant makes it even.
    Graph host = base;
    add_pendant(host, 1);
    host = decorate_with_trees(host, 2 * extra(rng), rng, {3, 4, 5});
    ImpasseWitness w;
    w.v1 = 0;
    w.v2 = 1;
    w.v3 = 2;
    w.v4 = 3;
    w.v5 = 4;
    w.v6 = 5;
    for (int i = 0; i < k; ++i) w.ys.push_back(6 + i);
    for (int i = 0; i < l; ++i) w.zs.push_back(6 + k + i);
    LocalRule rule{LocalRule::Tag::HardImpasse};
    rule.impasse = w;
    return {host, rule};
}

RuleHost make_squarefree_path_host(std::mt19937& rng) {
    std::uniform_int_distribution<int> qq(1, 4), flavour(0, 3), kk(0, 1);
    int q = qq(rng);
    int f = flavour(rng);
    bool bd_start = f == 1 || f == 3;
    bool fd_end = f == 2 || f == 3;

    Graph g(0);
    std::vector<int> path;
    LocalRule rule{LocalRule::Tag::SquarefreePath};

    auto append_vertex = [&](int attach) {
        Graph bigger(g.vertex_count() + 1);
        for (auto [u, v] : g.edges()) bigger.add_edge(u, v);
        if (attach >= 0) bigger.add_edge(attach, g.vertex_count());
        int id = g.vertex_count();
        g = std::move(bigger);
        return id;
    };

    if (bd_start) {
        int bd_k = 2 * kk(rng) + 1;  // odd
        // poles b(=v0) and d; middles a, c, y's.
        int b = append_vertex(-1);
        int d = append_vertex(-1);
        int a = append_vertex(-1);
        int c = append_vertex(-1);
        OrientedDiamond bd;
        bd.forward = false;
        bd.a = a;
        bd.b = b;
        bd.c = c;
        bd.d = d;
        for (int v : {a, c}) {
            g.add_edge(v, b);
            g.add_edge(v, d);
        }
        for (int i = 0; i < bd_k; ++i) {
            int y = append_vertex(-1);
            g.add_edge(y, b);
            g.add_edge(y, d);
            bd.rest.push_back(y);
        }
        add_pendant(g, a);  // entry-side decoration keeps things asymmetric
        path.push_back(b);
        rule.bd_block = bd;
    } else {
        path.push_back(append_vertex(-1));
    }
    for (int i = 0; i < q; ++i) path.push_back(append_vertex(path.back()));

    if (fd_end) {
        int fd_k = 2 * kk(rng) + 1;
        int a = path.back();  // pole
        int c = append_vertex(-1);
        int b = append_vertex(-1);
        int d = append_vertex(-1);
        OrientedDiamond fd;
        fd.forward = true;
        fd.a = a;
        fd.b = b;
        fd.c = c;
        fd.d = d;
        for (int v : {b, d}) {
            g.add_edge(a, v);
            g.add_edge(c, v);
        }
        for (int i = 0; i < fd_k; ++i) {
            int z = append_vertex(-1);
            g.add_edge(a, z);
            g.add_edge(c, z);
            fd.rest.push_back(z);
        }
        add_pendant(g, b);
        rule.fd_block = fd;
    }

    // Fix parities: ends even (or odd when a diamond witness sits there),
    // interior odd. Pendants never create squares here.
    auto fix_parity = [&](int v, bool want_odd) {
        if ((g.degree(v) % 2 == 1) != want_odd) add_pendant(g, v);
    };
    fix_parity(path.front(), bd_start);
    fix_parity(path.back(), fd_end);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) fix_parity(path[i], true);
    rule.path = path;
    return {g, rule};
}

RuleHost make_odd_fd_host(std::mt19937& rng) {
    std::uniform_int_distribution<int> kk(0, 1), extra(0, 3);
    int k = 2 * kk(rng) + 1;
    // FD_k: poles a, c; middles b, d, z's.
    Graph g(4 + k);
    int a = 0, b = 1, c = 2, d = 3;
    for (int m = 0; m < 2 + k; ++m) {
        int mid = m == 0 ? b : m == 1 ? d : 4 + (m - 2);
        g.add_edge(a, mid);
        g.add_edge(c, mid);
    }
    OrientedDiamond fd;
    fd.forward = true;
    fd.a = a;
    fd.b = b;
    fd.c = c;
    fd.d = d;
    for (int i = 0; i < k; ++i) fd.rest.push_back(4 + i);
    // deg(a) = k + 2 is odd; one outside pendant makes it even.
    add_pendant(g, a);
    g = decorate_with_trees(g, extra(rng), rng, {b});
    // Parity repair in case decoration touched a... it cannot (allowed = {b}).
    LocalRule rule{LocalRule::Tag::OddFDEvenVertex};
    rule.fd_block = fd;
    return {g, rule};
}

RuleHost make_bd_fd_joint_host(std::mt19937& rng) {
    std::uniform_int_distribution<int> kk(0, 1), ll(0, 1);
    int k = 2 * kk(rng) + 1, l = 2 * ll(rng) + 1;
    Graph g(0);
    auto fresh = [&](int n) {
        Graph bigger(g.vertex_count() + n);
        for (auto [u, v] : g.edges()) bigger.add_edge(u, v);
        int first = g.vertex_count();
        g = std::move(bigger);
        return first;
    };
    // BD_k: poles w, d; middles a, c, y's. Entry a, exit w.
    int w = fresh(1);
    int bd_d = fresh(1), bd_a = fresh(1), bd_c = fresh(1);
    OrientedDiamond bd;
    bd.forward = false;
    bd.a = bd_a;
    bd.b = w;
    bd.c = bd_c;
    bd.d = bd_d;
    for (int v : {bd_a, bd_c}) {
        g.add_edge(v, w);
        g.add_edge(v, bd_d);
    }
    for (int i = 0; i < k; ++i) {
        int y = fresh(1);
        g.add_edge(y, w);
        g.add_edge(y, bd_d);
        bd.rest.push_back(y);
    }
    // FD_l: poles w, c'; middles b', d', z's. Entry w, exit b'.
    int fd_c = fresh(1), fd_b = fresh(1), fd_d = fresh(1);
    OrientedDiamond fd;
    fd.forward = true;
    fd.a = w;
    fd.b = fd_b;
    fd.c = fd_c;
    fd.d = fd_d;
    for (int v : {fd_b, fd_d}) {
        g.add_edge(w, v);
        g.add_edge(fd_c, v);
    }
    for (int i = 0; i < l; ++i) {
        int z = fresh(1);
        g.add_edge(w, z);
        g.add_edge(fd_c, z);
        fd.rest.push_back(z);
    }
    add_pendant(g, bd_a);
    add_pendant(g, fd_b);
    // deg(w) = (k+1) + (l+1) is even; one pendant makes it odd.
    add_pendant(g, w);
    LocalRule rule{LocalRule::Tag::BDFDJoint};
    rule.bd_block = bd;
    rule.fd_block = fd;
    return {g, rule};
}

RuleHost make_deg3_square_host(std::mt19937& rng) {
    // Square (0,1,2,3) + third neighbours of two adjacent corners; tails of
    // different lengths keep the host involution-free and the degree at 3.
    for (int attempt = 0; attempt < 200; ++attempt) {
        Graph g = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        std::uniform_int_distribution<int> coin(0, 1), tail(1, 3);
        bool joined = coin(rng) == 1;  // case II: v and v' adjacent
        int v = add_pendant(g, 0);
        int vp = add_pendant(g, 1);
        if (joined) g.add_edge(v, vp);
        int t1 = tail(rng), t2 = tail(rng);
        int cur = v;
        for (int i = 0; i < t1; ++i) cur = add_pendant(g, cur);
        cur = vp;
        for (int i = 0; i < t2; ++i) cur = add_pendant(g, cur);
        if (coin(rng)) add_pendant(g, 2);
        if (g.max_degree() > 3) continue;
        if (!is_involution_free(g)) continue;
        LocalRule rule{LocalRule::Tag::Deg3Square, {0, 1, 2, 3}};
        return {g, rule};
    }
    throw std::runtime_error("deg3 host generator exhausted its attempts");
}

}  // namespace

std::vector<RuleHost> rule_hosts(LocalRule::Tag tag, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<RuleHost> out;
    while (static_cast<int>(out.size()) < count) {
        switch (tag) {
            case LocalRule::Tag::TypeVHard: out.push_back(make_type_v_host(rng)); break;
            case LocalRule::Tag::EvenDiamond: out.push_back(make_even_diamond_host(rng)); break;
            case LocalRule::Tag::GoodTriangle: out.push_back(make_good_triangle_host(rng)); break;
            case LocalRule::Tag::AdjOddNeighbours: out.push_back(make_adj_odd_host(rng)); break;
            case LocalRule::Tag::DiamondSquare: out.push_back(make_diamond_square_host(rng)); break;
            case LocalRule::Tag::ThreeByOne: out.push_back(make_three_by_one_host(rng)); break;
            case LocalRule::Tag::Zigzag: out.push_back(make_zigzag_host(rng)); break;
            case LocalRule::Tag::CycleOfSquares:
                out.push_back(make_cycle_of_squares_host(rng));
                break;
            case LocalRule::Tag::HardImpasse: out.push_back(make_hard_impasse_host(rng)); break;
            case LocalRule::Tag::SquarefreePath:
                out.push_back(make_squarefree_path_host(rng));
                break;
            case LocalRule::Tag::OddFDEvenVertex: out.push_back(make_odd_fd_host(rng)); break;
            case LocalRule::Tag::BDFDJoint: out.push_back(make_bd_fd_joint_host(rng)); break;
            case LocalRule::Tag::Deg3Square: out.push_back(make_deg3_square_host(rng)); break;
        }
    }
    return out;
}

namespace {

// Cycle of length q with parallel "bumps" at the given positions; bump i adds
// a twin of c_i adjacent to c_{i-1} and c_{i+1}.
Graph bumped_cycle(int q, const std::vector<int>& bumps) {
    Graph g(q + static_cast<int>(bumps.size()));
    for (int i = 0; i < q; ++i) g.add_edge(i, (i + 1) % q);
    int next = q;
    for (int b : bumps) {
        g.add_edge((b - 1 + q) % q, next);
        g.add_edge((b + 1) % q, next);
        ++next;
    }
    return g;
}

}  // namespace

std::optional<Graph> obstruction_chain_host(std::mt19937& rng, int obstructions) {
    std::uniform_int_distribution<int> qpick(0, 2), link_len(1, 2), coin(0, 1), tail(1, 3);
    for (int attempt = 0; attempt < 300; ++attempt) {
        Graph g(0);
        auto merge = [&](const Graph& part) {
            int off = g.vertex_count();
            Graph bigger(off + part.vertex_count());
            for (auto [u, v] : g.edges()) bigger.add_edge(u, v);
            for (auto [u, v] : part.edges()) bigger.add_edge(off + u, off + v);
            g = std::move(bigger);
            return off;
        };
        std::vector<std::pair<int, int>> anchors;  // (entry A-vertex, exit A-vertex)
        for (int i = 0; i < obstructions; ++i) {
            int q = std::vector<int>{5, 6, 7}[qpick(rng)];
            bool two = obstructions > 1;
            std::vector<int> bumps = two ? std::vector<int>{1, 3} : std::vector<int>{1};
            int off = merge(bumped_cycle(q, bumps));
            anchors.emplace_back(off + 1, two ? off + 3 : off + 1);
        }
        // Join consecutive obstructions by paths of edges.
        for (int i = 0; i + 1 < obstructions; ++i) {
            int len = link_len(rng);
            int cur = anchors[i].second;
            for (int step = 0; step < len - 1; ++step) cur = add_pendant(g, cur);
            g.add_edge(cur, anchors[i + 1].first);
        }
        // Closure pendants at the outer attachment vertices.
        add_pendant(g, anchors.front().first);
        if (obstructions > 1) add_pendant(g, anchors.back().second);
        // Symmetry breakers: pendant tails of random lengths at cycle vertices
        // away from the attachment points.
        int breakers = 1 + coin(rng);
        for (int i = 0; i < breakers; ++i) {
            std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
            int at = pick(rng);
            bool clash = false;
            for (auto [a, b] : anchors) clash = clash || at == a || at == b;
            if (clash || g.degree(at) < 2) continue;
            int cur = at;
            for (int s = tail(rng); s > 0; --s) cur = add_pendant(g, cur);
        }
        if (!g.is_connected() || !is_k4_minor_free(g)) continue;
        if (g.vertex_count() > 30) continue;
        if (!is_involution_free(g)) continue;
        // All blocks must classify, with >= `obstructions` obstruction blocks.
        try {
            auto bc = block_cut_tree(g);
            int found = 0;
            bool ok = true;
            for (int b = 0; b < bc.block_count(); ++b) {
                auto kind = classify_block_unchecked(g, bc.blocks[b]);
                if (kind.tag == ComponentKind::Tag::Other) ok = false;
                if (kind.tag == ComponentKind::Tag::Obstruction) ++found;
            }
            if (ok && found >= obstructions) return g;
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

}  // namespace parhom::testcorpus
