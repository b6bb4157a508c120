#include "parhom/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace parhom {

namespace {

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> set_minus(const std::vector<int>& xs, const std::vector<int>& rm) {
    std::vector<int> out;
    for (int x : xs)
        if (!std::count(rm.begin(), rm.end(), x)) out.push_back(x);
    return out;
}

std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    for (int x : a)
        if (std::count(b.begin(), b.end(), x)) out.push_back(x);
    return out;
}

PartiallyLabelledGraph with_distinguished(const PartiallyLabelledGraph& plg,
                                          std::vector<int> dist) {
    return PartiallyLabelledGraph(plg.underlying, plg.pinning, std::move(dist));
}

PartiallyLabelledGraph trivial_gadget() { return PartiallyLabelledGraph(Graph(1), {}, {0}); }

// y - pin_a on one side, y - pin_b on the other: a 3-vertex path with the
// distinguished middle.
PartiallyLabelledGraph path3(int pin_a, int pin_b) {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return PartiallyLabelledGraph(g, {{0, pin_a}, {2, pin_b}}, {1});
}

// 4-vertex path (first-pin, y, t, last-pin).
PartiallyLabelledGraph path4(int pin_first, int pin_last) {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return PartiallyLabelledGraph(g, {{0, pin_first}, {3, pin_last}}, {1});
}

}  // namespace

PartiallyLabelledGraph pin_star(const std::vector<int>& targets) {
    Graph g(1 + static_cast<int>(targets.size()));
    std::map<int, int> pins;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        g.add_edge(0, static_cast<int>(1 + i));
        pins[static_cast<int>(1 + i)] = targets[i];
    }
    return PartiallyLabelledGraph(std::move(g), std::move(pins), {0});
}

PartiallyLabelledGraph edge_j3() {
    Graph g(2);
    g.add_edge(0, 1);
    return PartiallyLabelledGraph(g, {}, {0, 1});
}

PartiallyLabelledGraph two_path_j3() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return PartiallyLabelledGraph(g, {}, {0, 2});
}

PartiallyLabelledGraph path_gadget(const std::vector<int>& p) {
    int q = static_cast<int>(p.size()) - 1;
    if (q < 1) throw std::invalid_argument("path_gadget: path of length >= 1 required");
    // y = 0, u_j = j, z = q, pendant w_j = q + j.
    Graph g(2 * q);
    for (int j = 0; j < q; ++j) g.add_edge(j, j + 1);
    std::map<int, int> pins;
    for (int j = 1; j <= q - 1; ++j) {
        g.add_edge(j, q + j);
        pins[q + j] = p[j];
    }
    return PartiallyLabelledGraph(std::move(g), std::move(pins), {0, q});
}

PartiallyLabelledGraph cycle_gadget(const std::vector<std::vector<int>>& c_sets) {
    int q = static_cast<int>(c_sets.size());
    if (q < 3) throw std::invalid_argument("cycle_gadget: q >= 3 required");
    int pendants = 0;
    for (const auto& c : c_sets) {
        if (c.empty()) throw std::invalid_argument("cycle_gadget: empty pin set");
        pendants += static_cast<int>(c.size());
    }
    Graph g(q + pendants);
    std::map<int, int> pins;
    for (int i = 0; i < q; ++i) g.add_edge(i, (i + 1) % q);
    int next = q;
    for (int i = 0; i < q; ++i)
        for (int target : c_sets[i]) {
            g.add_edge(i, next);
            pins[next] = target;
            ++next;
        }
    return PartiallyLabelledGraph(std::move(g), std::move(pins), {});
}

GeneralizedCycleGadget generalized_cycle_gadget(
    const std::vector<std::vector<int>>& c_sets,
    const std::vector<PartiallyLabelledGraph>& subgadgets) {
    int q = static_cast<int>(c_sets.size());
    if (static_cast<int>(subgadgets.size()) != q)
        throw std::invalid_argument("generalized_cycle_gadget: one subgadget per ring vertex");
    std::vector<PartiallyLabelledGraph> parts{cycle_gadget(c_sets)};
    std::vector<GraftIdentification> ids;
    for (int i = 0; i < q; ++i) {
        if (subgadgets[i].distinguished.size() != 1)
            throw std::invalid_argument("generalized_cycle_gadget: subgadget needs one z");
        parts.push_back(subgadgets[i]);
        ids.push_back({0, i, i + 1, subgadgets[i].distinguished[0]});
    }
    auto vmap = graft_vertex_map(parts, ids);
    GeneralizedCycleGadget out;
    out.plg = graft(parts, ids);
    for (int i = 0; i < q; ++i) out.ring.push_back(vmap[0][i]);
    return out;
}

GadgetVerdict verify_hardness_gadget(const Graph& h, const HardnessGadget& g) {
    g.j1.validate_against(h);
    g.j2.validate_against(h);
    g.j3.validate_against(h);
    for (int v : g.i_set) h.check_vertex(v);
    for (int v : g.s_set) h.check_vertex(v);
    if (g.j1.distinguished.size() != 1 || g.j2.distinguished.size() != 1 ||
        g.j3.distinguished.size() != 2)
        throw std::invalid_argument("verify_hardness_gadget: malformed distinguished lists");

    GadgetVerdict verdict;
    auto violate = [&](std::string cond, std::vector<int> witness = {}) {
        verdict.violations.push_back({std::move(cond), std::move(witness)});
    };

    if (g.i_set.empty() || g.i_set.size() % 2 == 0) violate("i_set_odd_cardinality");
    if (g.s_set.empty() || g.s_set.size() % 2 == 0) violate("s_set_odd_cardinality");
    if (!g.j1.underlying.is_connected()) violate("j1_connected");
    if (!g.j2.underlying.is_connected()) violate("j2_connected");
    if (!g.j3.underlying.is_connected()) violate("j3_connected");

    verdict.omega_y = omega(g.j1, h);
    verdict.omega_z = omega(g.j2, h);
    if (verdict.omega_y.size() % 2 != 0) violate("omega_y_even", verdict.omega_y);
    if (verdict.omega_z.size() % 2 != 0) violate("omega_z_even", verdict.omega_z);

    auto strict_subset = [](const std::vector<int>& inner, const std::vector<int>& outer) {
        return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()) &&
               inner.size() < outer.size();
    };
    if (!strict_subset(g.i_set, verdict.omega_y)) violate("i_proper_subset_of_omega_y");
    if (!strict_subset(g.s_set, verdict.omega_z)) violate("s_proper_subset_of_omega_z");

    if (!verdict.violations.empty()) return verdict;

    std::vector<int> outer_o = set_minus(verdict.omega_y, g.i_set);
    std::vector<int> outer_x = set_minus(verdict.omega_z, g.s_set);
    for (int o : outer_o)
        for (int x : outer_x)
            if (is_odd(sigma_parity(g.j3, h, o, x))) violate("sigma_ox_even", {o, x});
    for (int i : g.i_set)
        for (int s : g.s_set)
            if (!is_odd(sigma_parity(g.j3, h, i, s))) violate("sigma_is_odd", {i, s});
    for (int o : outer_o)
        for (int s : g.s_set)
            if (!is_odd(sigma_parity(g.j3, h, o, s))) violate("sigma_os_odd", {o, s});
    for (int i : g.i_set)
        for (int x : outer_x)
            if (!is_odd(sigma_parity(g.j3, h, i, x))) violate("sigma_ix_odd", {i, x});

    verdict.verified = verdict.violations.empty();
    return verdict;
}

CycleGadgetOutcome cycle_hardness_gadget(const Graph& h,
                                         const std::vector<std::vector<int>>& c_raw,
                                         const std::vector<PartiallyLabelledGraph>& subgadgets,
                                         int k) {
    int q = static_cast<int>(c_raw.size());
    if (q < 3) throw std::invalid_argument("cycle_hardness_gadget: q >= 3 required");
    if (k < 0 || k >= q) throw std::invalid_argument("cycle_hardness_gadget: bad index k");
    std::vector<std::vector<int>> c(q);
    for (int i = 0; i < q; ++i) c[i] = sorted(c_raw[i]);

    CycleGadgetOutcome out;
    auto violate = [&](std::string cond, std::vector<int> witness = {}) {
        out.verdict.violations.push_back({std::move(cond), std::move(witness)});
    };

    std::vector<std::vector<int>> omegas(q);
    for (int i = 0; i < q; ++i) omegas[i] = omega(subgadgets[i], h);

    auto mod = [&](int i) { return ((i % q) + q) % q; };
    for (int i = 0; i < q; ++i) {
        if (set_intersect(c[mod(i - 1)], omegas[i]).size() % 2 != 1)
            violate("cycle_odd_intersection_prev", {i});
        if (set_intersect(c[mod(i + 1)], omegas[i]).size() % 2 != 1)
            violate("cycle_odd_intersection_next", {i});
        for (int w : c[mod(i - 1)]) {
            auto lhs = set_intersect(h.neighbours(w), common_neighbourhood(h, c[mod(i + 1)]));
            if (sorted(lhs) != c[i]) violate("cycle_common_left", {i, w});
        }
        for (int w : c[mod(i + 1)]) {
            auto lhs = set_intersect(common_neighbourhood(h, c[mod(i - 1)]), h.neighbours(w));
            if (sorted(lhs) != c[i]) violate("cycle_common_right", {i, w});
        }
    }
    if (exists_d_walk(h, c)) violate("cycle_no_d_walk");
    for (int u : c[k])
        for (int v : c[mod(k + 3)])
            if (h.has_edge(u, v)) violate("cycle_no_edges_k_k3", {u, v});
    std::vector<int> oy = sorted(set_intersect(c[k], omegas[mod(k + 1)]));
    for (int v : set_intersect(c[mod(k + 2)], omegas[mod(k + 1)])) oy.push_back(v);
    oy = sorted(oy);
    std::vector<int> oz = sorted(set_intersect(c[mod(k + 1)], omegas[mod(k + 2)]));
    for (int v : set_intersect(c[mod(k + 3)], omegas[mod(k + 2)])) oz.push_back(v);
    oz = sorted(oz);
    if (oy.size() % 2 != 0) violate("cycle_even_omega_y", oy);
    if (oz.size() % 2 != 0) violate("cycle_even_omega_z", oz);
    if (!out.verdict.violations.empty()) return out;

    auto gen = generalized_cycle_gadget(c, subgadgets);
    HardnessGadget g;
    g.rule = "cycle_hardness";
    g.i_set = sorted(set_intersect(c[mod(k + 2)], omegas[mod(k + 1)]));
    g.s_set = sorted(set_intersect(c[mod(k + 1)], omegas[mod(k + 2)]));
    g.j1 = with_distinguished(gen.plg, {gen.ring[mod(k + 1)]});
    g.j2 = with_distinguished(gen.plg, {gen.ring[mod(k + 2)]});
    g.j3 = edge_j3();
    out.verdict = verify_hardness_gadget(h, g);
    if (out.verdict.verified) out.gadget = std::move(g);
    return out;
}

OrientedDiamond orient_diamond(const DiamondWitness& w, int entry, int exit) {
    std::vector<int> poles{w.s, w.t};
    const std::vector<int>& mids = w.middles;
    bool entry_pole = std::count(poles.begin(), poles.end(), entry);
    bool exit_pole = std::count(poles.begin(), poles.end(), exit);
    bool entry_mid = std::count(mids.begin(), mids.end(), entry);
    bool exit_mid = std::count(mids.begin(), mids.end(), exit);
    OrientedDiamond d;
    d.a = entry;
    d.b = exit;
    if (entry_pole && exit_mid) {
        d.forward = true;
        d.c = poles[0] == entry ? poles[1] : poles[0];
        auto others = set_minus(mids, {exit});
        d.d = others.front();
        d.rest = set_minus(others, {d.d});
        return d;
    }
    if (entry_mid && exit_pole) {
        d.forward = false;
        d.d = poles[0] == exit ? poles[1] : poles[0];
        auto others = set_minus(mids, {entry});
        d.c = others.front();
        d.rest = set_minus(others, {d.c});
        return d;
    }
    throw std::invalid_argument("orient_diamond: (entry, exit) is not an edge of the diamond");
}

PartiallyLabelledGraph bd_fd_list_gadget(const Graph& h, const OrientedDiamond& block) {
    // z = 0; adjacent pin = 1; two pin pendants at distance 2 via 2 and 4.
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(0, 4);
    g.add_edge(4, 5);
    std::map<int, int> pins;
    std::vector<int> block_vertices{block.a, block.b, block.c, block.d};
    block_vertices.insert(block_vertices.end(), block.rest.begin(), block.rest.end());
    int anchor;
    if (block.forward) {
        pins[1] = block.a;
        pins[3] = block.b;
        pins[5] = block.d;
        anchor = block.a;
    } else {
        pins[1] = block.b;
        pins[3] = block.a;
        pins[5] = block.c;
        anchor = block.b;
    }
    PartiallyLabelledGraph j(std::move(g), std::move(pins), {0});
    // The block form forces omega = outside neighbourhood of the anchor.
    std::vector<int> expect = set_minus(h.neighbours(anchor), block_vertices);
    if (omega(j, h) != expect)
        throw verification_error("bd_fd_list_gadget: omega mismatch against the block form");
    return j;
}

std::string rule_name(LocalRule::Tag tag) {
    switch (tag) {
        case LocalRule::Tag::TypeVHard: return "type_v_hard";
        case LocalRule::Tag::EvenDiamond: return "even_diamond";
        case LocalRule::Tag::GoodTriangle: return "good_triangle";
        case LocalRule::Tag::AdjOddNeighbours: return "adj_odd_neighbours";
        case LocalRule::Tag::DiamondSquare: return "diamond_square";
        case LocalRule::Tag::ThreeByOne: return "three_by_one";
        case LocalRule::Tag::Zigzag: return "zigzag";
        case LocalRule::Tag::CycleOfSquares: return "cycle_of_squares";
        case LocalRule::Tag::HardImpasse: return "hard_impasse";
        case LocalRule::Tag::SquarefreePath: return "squarefree_path";
        case LocalRule::Tag::OddFDEvenVertex: return "odd_fd_even_vertex";
        case LocalRule::Tag::BDFDJoint: return "bd_fd_joint";
        case LocalRule::Tag::Deg3Square: return "deg3_square";
    }
    return "?";
}

namespace {

std::vector<int> flip_f(const std::vector<int>& f) {
    return {f[3], f[4], f[5], f[0], f[1], f[2]};
}

HardnessGadget finish(const Graph& h, HardnessGadget g) {
    auto verdict = verify_hardness_gadget(h, g);
    if (!verdict.verified) {
        std::string what = "gadget verification failed (" + g.rule + "):";
        for (const auto& v : verdict.violations) what += " " + v.condition;
        throw verification_error(what);
    }
    return g;
}

HardnessGadget build_type_v(const Graph& h, const std::vector<int>& f0) {
    for (const auto& f : {f0, flip_f(f0)}) {
        if (h.has_edge(f[0], f[5]) || h.has_edge(f[2], f[3])) continue;
        if (common_neighbourhood(h, {f[0], f[4]}) != sorted({f[1], f[3]})) continue;
        if (common_neighbourhood(h, {f[1], f[5]}) != sorted({f[2], f[4]})) continue;
        HardnessGadget g;
        g.rule = "type_v_hard";
        g.i_set = {f[1]};
        g.s_set = {f[4]};
        g.j1 = pin_star({f[0], f[4]});
        g.j2 = pin_star({f[1], f[5]});
        g.j3 = edge_j3();
        return finish(h, g);
    }
    throw verification_error("type_v_hard: hypotheses fail on both orientations");
}

HardnessGadget build_even_diamond(const Graph& h, const std::vector<int>& f0) {
    for (const auto& f : {f0, flip_f(f0)}) {
        TypeVStatus st = type_v_status(h, f);
        if (st.verdict != TypeVStatus::Verdict::TypeVRight) continue;
        if (st.g24.size() % 2 != 0) continue;  // k must be even
        if (common_neighbourhood(h, {f[2], f[4]}) != sorted({f[1], f[5]})) continue;
        bool v6_clean = !h.has_edge(f[5], f[0]);
        for (int y : st.g24)
            if (h.has_edge(f[5], y)) v6_clean = false;
        if (!v6_clean) continue;
        HardnessGadget g;
        g.rule = "even_diamond";
        g.i_set = {f[4]};
        g.s_set = {f[1]};
        g.j1 = pin_star({f[1], f[3]});
        g.j2 = pin_star({f[2], f[4]});
        g.j3 = edge_j3();
        return finish(h, g);
    }
    throw verification_error("even_diamond: hypotheses fail on both orientations");
}

HardnessGadget build_good_triangle(const Graph& h, const std::vector<int>& w) {
    if (w.size() != 5) throw std::invalid_argument("good_triangle: witness (i,x,s,v,u)");
    int i = w[0], x = w[1], s = w[2], v = w[3], u = w[4];
    for (auto [p, q2] : std::vector<std::pair<int, int>>{
             {i, x}, {i, s}, {s, x}, {i, v}, {v, x}, {s, u}, {u, x}})
        if (!h.has_edge(p, q2))
            throw verification_error("good_triangle: witness edges missing");
    HardnessGadget g;
    g.rule = "good_triangle";
    // Omega_y = {x, s} and Omega_z = {x, i}; the contained singletons are the
    // definition's I and S.
    g.i_set = {s};
    g.s_set = {i};
    g.j1 = pin_star({u, i});
    g.j2 = pin_star({v, s});
    g.j3 = edge_j3();
    return finish(h, g);
}

HardnessGadget build_adj_odd(const Graph& h, int a, int b) {
    auto n = common_neighbourhood(h, {a, b});
    if (!h.has_edge(a, b) || n.size() < 3 || n.size() % 2 == 0)
        throw verification_error("adj_odd_neighbours: hypotheses fail");
    // Shared-triangle escapes come before the cycle route.
    for (int c : n) {
        for (int w : set_minus(common_neighbourhood(h, {a, c}), {b}))
            for (int cand : set_minus(n, {c, w}))
                try {
                    auto g = build_good_triangle(h, {c, a, b, w, cand});
                    g.rule = "adj_odd_neighbours";
                    return g;
                } catch (const verification_error&) {
                }
        for (int w : set_minus(common_neighbourhood(h, {b, c}), {a}))
            for (int cand : set_minus(n, {c, w}))
                try {
                    auto g = build_good_triangle(h, {c, b, a, w, cand});
                    g.rule = "adj_odd_neighbours";
                    return g;
                } catch (const verification_error&) {
                }
    }
    auto outcome = cycle_hardness_gadget(
        h, {{a}, {b}, n}, {trivial_gadget(), trivial_gadget(), trivial_gadget()}, 0);
    if (!outcome.gadget)
        throw verification_error("adj_odd_neighbours: cycle route failed");
    outcome.gadget->rule = "adj_odd_neighbours";
    return *outcome.gadget;
}

HardnessGadget build_diamond_square(const Graph& h, const std::vector<int>& f) {
    if (!h.has_edge(f[0], f[4]))
        throw verification_error("diamond_square: diagonal {v1,v5} missing");
    try {
        auto g = build_type_v(h, f);
        g.rule = "diamond_square";
        return g;
    } catch (const verification_error&) {
    }
    try {
        auto g = build_even_diamond(h, f);
        g.rule = "diamond_square";
        return g;
    } catch (const verification_error&) {
    }
    auto g = build_adj_odd(h, std::min(f[0], f[4]), std::max(f[0], f[4]));
    g.rule = "diamond_square";
    return g;
}

HardnessGadget build_three_by_one(const Graph& h, const std::vector<int>& w) {
    if (w.size() != 8) throw std::invalid_argument("three_by_one: witness v1..v8");
    static const int pattern_edges[10][2] = {{1, 5}, {0, 1}, {1, 2}, {0, 4}, {4, 5},
                                             {5, 6}, {2, 6}, {2, 3}, {3, 7}, {6, 7}};
    for (auto [p, q2] : pattern_edges)
        if (!h.has_edge(w[p], w[q2]))
            throw verification_error("three_by_one: witness edges missing");
    std::vector<int> fa{w[0], w[1], w[2], w[4], w[5], w[6]};
    std::vector<int> fb{w[1], w[2], w[3], w[5], w[6], w[7]};
    for (const auto& f : {fa, fb}) {
        try {
            auto g = build_type_v(h, f);
            g.rule = "three_by_one";
            return g;
        } catch (const verification_error&) {
        }
        try {
            auto g = build_even_diamond(h, f);
            g.rule = "three_by_one";
            return g;
        } catch (const verification_error&) {
        }
    }
    HardnessGadget g;
    g.rule = "three_by_one";
    // Omega_y = {v2, v5} and Omega_z = {v4, v7}.
    g.i_set = {w[1]};
    g.s_set = {w[6]};
    g.j1 = pin_star({w[0], w[5]});
    g.j2 = pin_star({w[2], w[7]});
    g.j3 = two_path_j3();
    return finish(h, g);
}

HardnessGadget build_zigzag(const Graph& h, const std::vector<int>& w) {
    if (w.size() != 9) throw std::invalid_argument("zigzag: witness (s,i,o,u,v,x,w1,w2,d)");
    static const int pattern_edges[12][2] = {{0, 1}, {0, 2}, {0, 4}, {2, 3},
                                             {3, 1}, {5, 1}, {4, 5}, {1, 6},
                                             {6, 7}, {7, 5}, {8, 2}, {8, 1}};
    for (auto [p, q2] : pattern_edges)
        if (!h.has_edge(w[p], w[q2]))
            throw verification_error("zigzag: witness edges missing");
    int s = w[0], i = w[1], o = w[2], u = w[3], v = w[4], x = w[5];
    int w1 = w[6], w2 = w[7], d = w[8];
    std::vector<int> fa{o, s, v, u, i, x};
    std::vector<int> fb{s, i, w1, v, x, w2};
    for (const auto& f : {fa, fb}) {
        try {
            auto g = build_type_v(h, f);
            g.rule = "zigzag";
            return g;
        } catch (const verification_error&) {
        }
        try {
            auto g = build_even_diamond(h, f);
            g.rule = "zigzag";
            return g;
        } catch (const verification_error&) {
        }
    }
    // S_{k,l} labels around the centre i: v5 = s, v4 = o, v6 = v, v1 in {u, d},
    // v3 = x, alpha = w1, beta = w2.
    for (int v1 : {u, d}) {
        if (h.degree(i) % 2 == 0) {
            HardnessGadget g;
            g.rule = "zigzag";
            g.i_set = {o};
            g.s_set = {v};
            g.j1 = pin_star({v1, s});
            g.j2 = pin_star({s, x});
            g.j3 = two_path_j3();
            try {
                return finish(h, g);
            } catch (const verification_error&) {
            }
        } else {
            HardnessGadget g;
            g.rule = "zigzag";
            g.i_set = {i};
            g.s_set = {i};
            g.j1 = pin_star({v1, s});
            g.j2 = pin_star({w1, x});
            g.j3 = two_path_j3();
            try {
                return finish(h, g);
            } catch (const verification_error&) {
            }
        }
    }
    throw verification_error("zigzag: no candidate construction verified");
}

HardnessGadget build_cycle_of_squares(const Graph& h, const std::vector<int>& cycle) {
    ClosedWalk c{cycle};
    int q = c.length();
    if (q < 3 || q == 4 || !is_cycle(c, h))
        throw verification_error("cycle_of_squares: not a cycle of length 3 or >= 5");
    auto sets = walk_neighbour_sets(c, h);
    std::vector<std::vector<int>> singles;
    for (int idx = 0; idx < q; ++idx) {
        if (sets[idx].size() != 1)
            throw verification_error("cycle_of_squares: walk-neighbour-set not a singleton");
        singles.push_back(sets[idx]);
    }
    std::vector<PartiallyLabelledGraph> subs(q, trivial_gadget());
    auto outcome = cycle_hardness_gadget(h, singles, subs, 0);
    if (!outcome.gadget)
        throw verification_error("cycle_of_squares: cycle route failed");
    outcome.gadget->rule = "cycle_of_squares";
    return *outcome.gadget;
}

HardnessGadget build_hard_impasse(const Graph& h, const ImpasseWitness& w) {
    // Revalidate against the host block.
    auto bc = block_cut_tree(h);
    std::vector<int> block;
    for (const auto& blk : bc.blocks)
        if (std::binary_search(blk.begin(), blk.end(), w.v2)) {
            bool all = true;
            for (int v : {w.v1, w.v3, w.v4, w.v5, w.v6})
                if (!std::binary_search(blk.begin(), blk.end(), v)) all = false;
            if (all) block = blk;
        }
    if (block.empty())
        throw verification_error("hard_impasse: witness not inside one block");
    Graph b = h.induced(block);
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(block.begin(), block.end(), v) -
                                block.begin());
    };
    for (int v : w.left_class())
        if (b.degree(local(v)) != 2)
            throw verification_error("hard_impasse: connector class degree not 2");
    for (int v : w.right_class())
        if (b.degree(local(v)) != 2)
            throw verification_error("hard_impasse: connector class degree not 2");
    if (w.left_class().size() % 2 != 0 || w.right_class().size() % 2 != 0)
        throw verification_error("hard_impasse: k, l must be odd");
    if (h.degree(w.v2) % 2 != 0)
        throw verification_error("hard_impasse: deg(v2) must be even");
    HardnessGadget g;
    g.rule = "hard_impasse";
    g.i_set = {w.v4};
    g.s_set = {w.v6};
    g.j1 = pin_star({w.v1, w.v5});
    g.j2 = pin_star({w.v5, w.v3});
    g.j3 = two_path_j3();
    return finish(h, g);
}

bool edge_in_square(const Graph& h, int u, int v) {
    for (int x : h.neighbours(u)) {
        if (x == v) continue;
        for (int w : h.neighbours(v)) {
            if (w == u || w == x) continue;
            if (h.has_edge(x, w)) return true;
        }
    }
    return false;
}

HardnessGadget build_squarefree_path(const Graph& h, const LocalRule& rule) {
    const auto& p = rule.path;
    int q = static_cast<int>(p.size()) - 1;
    if (q < 1) throw std::invalid_argument("squarefree_path: path of length >= 1 required");
    for (int j = 0; j < q; ++j) {
        if (!h.has_edge(p[j], p[j + 1]))
            throw verification_error("squarefree_path: not a path in the host");
        if (edge_in_square(h, p[j], p[j + 1]))
            throw verification_error("squarefree_path: a path edge lies in a square");
    }
    for (int j = 1; j <= q - 1; ++j)
        if (h.degree(p[j]) % 2 == 0)
            throw verification_error("squarefree_path: interior degree must be odd");
    HardnessGadget g;
    g.rule = "squarefree_path";
    g.i_set = {p[1]};
    g.s_set = {p[q - 1]};
    if (rule.bd_block) {
        if (rule.bd_block->forward || rule.bd_block->k() % 2 == 0 ||
            rule.bd_block->b != p[0] || h.degree(p[0]) % 2 == 0)
            throw verification_error("squarefree_path: BD start witness invalid");
        g.j1 = bd_fd_list_gadget(h, *rule.bd_block);
    } else {
        if (h.degree(p[0]) % 2 != 0)
            throw verification_error("squarefree_path: deg(v0) must be even");
        g.j1 = pin_star({p[0]});
    }
    if (rule.fd_block) {
        if (!rule.fd_block->forward || rule.fd_block->k() % 2 == 0 ||
            rule.fd_block->a != p[q] || h.degree(p[q]) % 2 == 0)
            throw verification_error("squarefree_path: FD end witness invalid");
        g.j2 = bd_fd_list_gadget(h, *rule.fd_block);
    } else {
        if (h.degree(p[q]) % 2 != 0)
            throw verification_error("squarefree_path: deg(vq) must be even");
        g.j2 = pin_star({p[q]});
    }
    g.j3 = path_gadget(p);
    return finish(h, g);
}

HardnessGadget build_odd_fd(const Graph& h, const OrientedDiamond& fd) {
    if (!fd.forward || fd.k() % 2 == 0)
        throw verification_error("odd_fd_even_vertex: FD_k with odd k required");
    if (h.degree(fd.a) % 2 != 0)
        throw verification_error("odd_fd_even_vertex: deg(a) must be even");
    HardnessGadget g;
    g.rule = "odd_fd_even_vertex";
    g.i_set = {fd.a};
    g.s_set = sorted([&] {
        std::vector<int> s{fd.b, fd.d};
        s.insert(s.end(), fd.rest.begin(), fd.rest.end());
        return s;
    }());
    g.j1 = pin_star({fd.b, fd.d});
    g.j2 = pin_star({fd.a});
    g.j3 = edge_j3();
    return finish(h, g);
}

HardnessGadget build_bd_fd_joint(const Graph& h, const OrientedDiamond& bd,
                                 const OrientedDiamond& fd) {
    if (bd.forward || !fd.forward || bd.k() % 2 == 0 || fd.k() % 2 == 0)
        throw verification_error("bd_fd_joint: BD_k and FD_l with odd k, l required");
    if (bd.b != fd.a) throw verification_error("bd_fd_joint: blocks must share w");
    if (h.degree(bd.b) % 2 == 0)
        throw verification_error("bd_fd_joint: deg(w) must be odd");
    HardnessGadget g;
    g.rule = "bd_fd_joint";
    g.i_set = {bd.b};
    g.s_set = {bd.b};
    g.j1 = pin_star({bd.a, bd.c});
    g.j2 = pin_star({fd.b, fd.d});
    g.j3 = two_path_j3();
    return finish(h, g);
}

HardnessGadget build_deg3_square(const Graph& h, const std::vector<int>& sq) {
    if (sq.size() != 4) throw std::invalid_argument("deg3_square: witness (a,b,c,d)");
    if (h.max_degree() > 3)
        throw verification_error("deg3_square: host must have maximum degree 3");
    ClosedWalk c{sq};
    if (!is_cycle(c, h)) throw verification_error("deg3_square: witness is not a square");

    auto third_neighbour = [&](int v, int n1, int n2) -> int {
        for (int u : h.neighbours(v))
            if (u != n1 && u != n2) return u;
        return -1;
    };
    for (int rot = 0; rot < 4; ++rot)
        for (int refl = 0; refl < 2; ++refl) {
            int a = sq[(rot + 0) % 4], b = sq[(rot + (refl ? 3 : 1)) % 4];
            int cc = sq[(rot + 2) % 4], d = sq[(rot + (refl ? 1 : 3)) % 4];
            if (h.degree(a) != 3 || h.degree(b) != 3) continue;
            int v = third_neighbour(a, b, d), vp = third_neighbour(b, a, cc);
            if (v == -1 || vp == -1) continue;
            HardnessGadget g;
            g.rule = "deg3_square";
            g.i_set = {a};
            g.s_set = {b};
            g.j3 = edge_j3();
            if (v != vp && h.has_edge(v, vp)) {
                g.j1 = path3(v, b);
                g.j2 = path3(a, cc);
            } else {
                g.j1 = path4(b, a);
                g.j2 = path3(a, cc);
            }
            try {
                return finish(h, g);
            } catch (const verification_error&) {
            }
        }
    throw verification_error("deg3_square: no orientation verified");
}

// Injective subgraph (not induced) embeddings of pattern into host; callback
// returns true to stop.
void enumerate_embeddings(const Graph& host, const Graph& pattern,
                          const std::function<bool(const std::vector<int>&)>& cb) {
    int np = pattern.vertex_count(), nh = host.vertex_count();
    std::vector<int> order(np);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (pattern.degree(x) != pattern.degree(y))
            return pattern.degree(x) > pattern.degree(y);
        return x < y;
    });
    std::vector<int> image(np, -1);
    std::vector<bool> used(nh, false);
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == np) return cb(image);
        int pv = order[idx];
        for (int hv = 0; hv < nh; ++hv) {
            if (used[hv] || host.degree(hv) < pattern.degree(pv)) continue;
            bool ok = true;
            for (int pu : pattern.neighbours(pv)) {
                if (image[pu] != -1 && !host.has_edge(hv, image[pu])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[pv] = hv;
            used[hv] = true;
            if (rec(idx + 1)) return true;
            used[hv] = false;
            image[pv] = -1;
        }
        return false;
    };
    rec(0);
}

Graph pattern_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

const Graph& f_pattern() {
    static const Graph f = pattern_from_edges(
        6, {{0, 1}, {1, 2}, {1, 4}, {0, 3}, {3, 4}, {4, 5}, {2, 5}});
    return f;
}

const Graph& three_by_one_pattern() {
    static const Graph p = pattern_from_edges(8, {{1, 5}, {0, 1}, {1, 2}, {0, 4}, {4, 5},
                                                  {5, 6}, {2, 6}, {2, 3}, {3, 7}, {6, 7}});
    return p;
}

const Graph& zigzag_pattern() {
    static const Graph p = pattern_from_edges(9, {{0, 1}, {0, 2}, {0, 4}, {2, 3},
                                                  {3, 1}, {5, 1}, {4, 5}, {1, 6},
                                                  {6, 7}, {7, 5}, {8, 2}, {8, 1}});
    return p;
}

}  // namespace

HardnessGadget apply_local_rule(const Graph& h, const LocalRule& rule) {
    switch (rule.tag) {
        case LocalRule::Tag::TypeVHard:
            return build_type_v(h, rule.vertices);
        case LocalRule::Tag::EvenDiamond:
            return build_even_diamond(h, rule.vertices);
        case LocalRule::Tag::GoodTriangle:
            return build_good_triangle(h, rule.vertices);
        case LocalRule::Tag::AdjOddNeighbours:
            return build_adj_odd(h, rule.vertices.at(0), rule.vertices.at(1));
        case LocalRule::Tag::DiamondSquare:
            return build_diamond_square(h, rule.vertices);
        case LocalRule::Tag::ThreeByOne:
            return build_three_by_one(h, rule.vertices);
        case LocalRule::Tag::Zigzag:
            return build_zigzag(h, rule.vertices);
        case LocalRule::Tag::CycleOfSquares:
            return build_cycle_of_squares(h, rule.vertices);
        case LocalRule::Tag::HardImpasse:
            return build_hard_impasse(h, rule.impasse.value());
        case LocalRule::Tag::SquarefreePath:
            return build_squarefree_path(h, rule);
        case LocalRule::Tag::OddFDEvenVertex:
            return build_odd_fd(h, rule.fd_block.value());
        case LocalRule::Tag::BDFDJoint:
            return build_bd_fd_joint(h, rule.bd_block.value(), rule.fd_block.value());
        case LocalRule::Tag::Deg3Square:
            return build_deg3_square(h, rule.vertices);
    }
    throw std::logic_error("unreachable rule tag");
}

std::optional<LocalRule> find_local_rule(const Graph& h) {
    std::optional<LocalRule> found;
    auto attempt = [&](LocalRule rule) {
        try {
            apply_local_rule(h, rule);
            found = std::move(rule);
            return true;
        } catch (const verification_error&) {
            return false;
        }
    };

    // F-based rules over all embeddings of F.
    for (auto tag : {LocalRule::Tag::TypeVHard, LocalRule::Tag::EvenDiamond}) {
        enumerate_embeddings(h, f_pattern(), [&](const std::vector<int>& emb) {
            return attempt(LocalRule{tag, emb});
        });
        if (found) return found;
    }

    // Two triangles on a shared edge plus the side square.
    for (auto [i, x] : h.edges()) {
        auto commons = common_neighbourhood(h, {i, x});
        if (commons.size() < 2) continue;
        for (int s : commons)
            for (int v : commons) {
                if (s == v) continue;
                for (int u : set_minus(common_neighbourhood(h, {s, x}), {i, v}))
                    if (attempt(LocalRule{LocalRule::Tag::GoodTriangle, {i, x, s, v, u}}))
                        return found;
            }
        // Both orientations of the shared edge.
        for (int s : commons)
            for (int v : commons) {
                if (s == v) continue;
                for (int u : set_minus(common_neighbourhood(h, {s, i}), {x, v}))
                    if (attempt(LocalRule{LocalRule::Tag::GoodTriangle, {x, i, s, v, u}}))
                        return found;
            }
    }

    for (auto [a, b] : h.edges()) {
        auto n = common_neighbourhood(h, {a, b});
        if (n.size() >= 3 && n.size() % 2 == 1)
            if (attempt(LocalRule{LocalRule::Tag::AdjOddNeighbours, {a, b}})) return found;
    }

    enumerate_embeddings(h, f_pattern(), [&](const std::vector<int>& emb) {
        if (!h.has_edge(emb[0], emb[4])) return false;
        return attempt(LocalRule{LocalRule::Tag::DiamondSquare, emb});
    });
    if (found) return found;

    enumerate_embeddings(h, three_by_one_pattern(), [&](const std::vector<int>& emb) {
        return attempt(LocalRule{LocalRule::Tag::ThreeByOne, emb});
    });
    if (found) return found;

    enumerate_embeddings(h, zigzag_pattern(), [&](const std::vector<int>& emb) {
        return attempt(LocalRule{LocalRule::Tag::Zigzag, emb});
    });
    if (found) return found;

    for (const auto& c : induced_cycles(h, [](int l) { return l != 4; }))
        if (attempt(LocalRule{LocalRule::Tag::CycleOfSquares, c.seq})) return found;

    return std::nullopt;
}

std::string local_rule_hint(const Graph& h) {
    if (auto rule = find_local_rule(h)) return rule_name(rule->tag);
    return "";
}

}  // namespace parhom
