#include <numeric>
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "parhom/families.hpp"
#include "parhom/generators.hpp"
#include "parhom/symmetry.hpp"
#include "parhom/synthesis.hpp"

using namespace parhom;

namespace {

Graph f_plus(const std::vector<std::pair<int, int>>& extra_edges, int extra_vertices) {
    Graph f = generate(GraphFamily::f());
    Graph g(6 + extra_vertices);
    for (auto [u, v] : f.edges()) g.add_edge(u, v);
    for (auto [u, v] : extra_edges) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("type V status") {
    std::vector<int> id{0, 1, 2, 3, 4, 5};
    SUBCASE("F alone is not type V") {
        auto st = type_v_status(generate(GraphFamily::f()), id);
        CHECK(st.verdict == TypeVStatus::Verdict::NotTypeV);
        CHECK(st.g15.empty());
        CHECK(st.g35.empty());
        CHECK(st.g24.empty());
        CHECK(st.g26.empty());
    }
    SUBCASE("two inner vertices on (1,5) and (3,5) give the left case") {
        Graph g = f_plus({{0, 6}, {4, 6}, {2, 7}, {4, 7}}, 2);
        auto st = type_v_status(g, id);
        CHECK(st.verdict == TypeVStatus::Verdict::TypeVLeft);
        CHECK(st.g15 == std::vector<int>{6});
        CHECK(st.g35 == std::vector<int>{7});
    }
    SUBCASE("common neighbours on (2,4) and (2,6) give the right case") {
        Graph g = f_plus({{1, 6}, {3, 6}, {1, 7}, {5, 7}}, 2);
        auto st = type_v_status(g, id);
        CHECK(st.verdict == TypeVStatus::Verdict::TypeVRight);
        CHECK(st.g24 == std::vector<int>{6});
        CHECK(st.g26 == std::vector<int>{7});
    }
    SUBCASE("invalid embeddings are rejected") {
        CHECK_THROWS(type_v_status(generate(GraphFamily::f()), {0, 1, 2, 3, 4, 4}));
        CHECK_THROWS(type_v_status(generate(GraphFamily::f()), {1, 0, 2, 3, 4, 5}));
    }
}

TEST_CASE("the K4-minor-free F property") {
    // At least one of (1,5),(2,4) is empty, and one of (2,6),(3,5).
    std::mt19937 rng(55);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Graph base = generate(GraphFamily::f());
        Graph g = testcorpus::decorate_with_trees(base, trial % 5, rng);
        if (trial % 3 == 0) {
            Graph bigger(g.vertex_count() + 1);
            for (auto [u, v] : g.edges()) bigger.add_edge(u, v);
            int w = g.vertex_count();
            if (trial % 2 == 0) {
                bigger.add_edge(0, w);
                bigger.add_edge(4, w);
            } else {
                bigger.add_edge(1, w);
                bigger.add_edge(3, w);
            }
            g = std::move(bigger);
        }
        if (!is_k4_minor_free(g)) continue;
        auto st = type_v_status(g, {0, 1, 2, 3, 4, 5});
        CHECK((st.g15.empty() || st.g24.empty()));
        CHECK((st.g26.empty() || st.g35.empty()));
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("classify_biconnected") {
    SUBCASE("edges") {
        Graph g = generate(GraphFamily::path(3));
        auto kind = classify_biconnected(g, {0, 1});
        CHECK(kind.tag == ComponentKind::Tag::Edge);
    }
    SUBCASE("diamonds") {
        Graph d = generate(GraphFamily::diamond(4));
        auto kind = classify_biconnected(d, {0, 1, 2, 3, 4, 5});
        REQUIRE(kind.tag == ComponentKind::Tag::Diamond);
        CHECK(kind.diamond->middles.size() == 4);
        CHECK(std::vector<int>{kind.diamond->s, kind.diamond->t} == std::vector<int>{0, 1});
        for (int m : kind.diamond->middles) {
            CHECK(d.has_edge(kind.diamond->s, m));
            CHECK(d.has_edge(kind.diamond->t, m));
        }
    }
    SUBCASE("impasses") {
        Graph s = generate(GraphFamily::skl(3, 1));
        std::vector<int> block(s.vertex_count());
        std::iota(block.begin(), block.end(), 0);
        auto kind = classify_biconnected(s, block);
        REQUIRE(kind.tag == ComponentKind::Tag::Impasse);
        const auto& w = *kind.impasse;
        CHECK(w.v2 == 1);
        CHECK(w.v5 == 4);
        auto left = w.left_class();
        CHECK(left.size() == 4);  // {v1, y1..y3}
        CHECK(w.right_class().size() == 2);
        for (int v : left) CHECK(s.degree(v) == 2);
        CHECK(std::count(left.begin(), left.end(), 0) == 1);
        auto right = w.right_class();
        CHECK(std::count(right.begin(), right.end(), 2) == 1);
    }
    SUBCASE("obstructions") {
        Graph c5 = generate(GraphFamily::cycle(5));
        auto kind = classify_biconnected(c5, {0, 1, 2, 3, 4});
        REQUIRE(kind.tag == ComponentKind::Tag::Obstruction);
        REQUIRE(kind.cycles.size() == 1);
        CHECK(kind.cycles[0].seq == std::vector<int>{0, 1, 2, 3, 4});
    }
    SUBCASE("H2's block is Other with an actionable hint") {
        Graph h2 = generate(GraphFamily::h2());
        std::vector<int> block{0, 1, 2, 3, 4, 5};
        auto kind = classify_biconnected(h2, block);
        CHECK(kind.tag == ComponentKind::Tag::Other);
        CHECK(kind.other_reason == "type_v_hard");
    }
    SUBCASE("preconditions") {
        CHECK_THROWS(classify_biconnected(generate(GraphFamily::complete(4)), {0, 1, 2, 3}));
        CHECK_THROWS(classify_biconnected(generate(GraphFamily::path(3)), {0, 2}));
    }
}

TEST_CASE("suitable connectors") {
    SUBCASE("lone cycle has the empty connector") {
        Graph c5 = generate(GraphFamily::cycle(5));
        auto conns = suitable_connectors(c5, {0, 1, 2, 3, 4});
        REQUIRE(conns.size() == 1);
        CHECK(conns[0].a.empty());
        CHECK(conns[0].chosen_cycle.has_value());
    }
    SUBCASE("edge with two articulation endpoints") {
        Graph p4 = generate(GraphFamily::path(4));
        auto conns = suitable_connectors(p4, {1, 2});
        REQUIRE(conns.size() == 1);
        CHECK(conns[0].a == std::vector<int>{1, 2});
        CHECK(suitable_connectors(p4, {0, 1}).empty());
    }
    SUBCASE("diamond with forced pole/middle articulation points") {
        Graph g(6);
        g.add_edge(0, 2);
        g.add_edge(2, 1);
        g.add_edge(1, 3);
        g.add_edge(3, 0);
        g.add_edge(0, 4);
        g.add_edge(2, 5);
        auto conns = suitable_connectors(g, {0, 1, 2, 3});
        REQUIRE(conns.size() == 1);
        CHECK(conns[0].a == std::vector<int>{0, 2});
        CHECK(g.has_edge(0, 2));
    }
    SUBCASE("impasse connector pairs") {
        Graph skl = generate(GraphFamily::skl(1, 1));
        Graph g(10);
        for (auto [u, v] : skl.edges()) g.add_edge(u, v);
        g.add_edge(6, 8);  // pendant at y1
        g.add_edge(7, 9);  // pendant at z1
        std::vector<int> block{0, 1, 2, 3, 4, 5, 6, 7};
        auto conns = suitable_connectors(g, block);
        REQUIRE(conns.size() == 1);
        CHECK(conns[0].a == std::vector<int>{6, 7});
    }
}

TEST_CASE("exits and attachments on a generated chain") {
    std::mt19937 rng(2);
    auto host = testcorpus::obstruction_chain_host(rng, 2);
    REQUIRE(host.has_value());
    auto sub = find_closed_suitable_subtree(*host);
    std::vector<int> obstructions;
    for (int b : sub.tree.block_ids)
        if (sub.tree.kinds.at(b).tag == ComponentKind::Tag::Obstruction)
            obstructions.push_back(b);
    REQUIRE(obstructions.size() >= 2);
    int exits = 0, attachments = 0;
    for (int b : obstructions) {
        auto report = exits_and_attachments(*host, sub.bc, sub.tree, b);
        exits += static_cast<int>(report.exits.size());
        attachments += static_cast<int>(report.attachments.size());
        for (const auto& e : report.exits) {
            CHECK(e.dest_block != b);
            CHECK(sub.tree.kinds.at(e.dest_block).tag == ComponentKind::Tag::Obstruction);
        }
    }
    CHECK(exits >= 2);
    CHECK(attachments >= 1);
}

TEST_CASE("is_r_closed") {
    SUBCASE("pendant edge below") {
        Graph p3 = generate(GraphFamily::path(3));
        auto bc = block_cut_tree(p3);
        CHECK(is_r_closed(bc, 1, 0));
    }
    SUBCASE("two child blocks") {
        Graph star(4);
        star.add_edge(0, 1);
        star.add_edge(0, 2);
        star.add_edge(0, 3);
        auto bc = block_cut_tree(star);
        CHECK(!is_r_closed(bc, 0, 0));
    }
    SUBCASE("a diamond child is not closed") {
        Graph g(6);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 4);
        g.add_edge(4, 1);
        g.add_edge(2, 5);
        auto bc = block_cut_tree(g);
        int r = -1;
        for (int b = 0; b < bc.block_count(); ++b)
            if (bc.blocks[b] == std::vector<int>{0, 1}) r = b;
        REQUIRE(r != -1);
        CHECK(!is_r_closed(bc, 1, r));
    }
}

TEST_CASE("R-closure does not depend on the root block") {
    std::mt19937 rng(77);
    int checked = 0;
    for (int trial = 0; trial < 12; ++trial) {
        auto host = testcorpus::obstruction_chain_host(rng, 1 + trial % 2);
        if (!host) continue;
        auto sub = find_closed_suitable_subtree(*host);
        for (int a : sub.tree.cut_vertices()) {
            if (sub.tree.blocks_at(a).size() != 1) continue;
            bool closed_somewhere = is_r_closed(sub.bc, a, sub.tree.block_ids[0]);
            for (int r : sub.tree.block_ids)
                CHECK(is_r_closed(sub.bc, a, r) == closed_somewhere);
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("consecutive walk-neighbour-sets stay thin without local rules") {
    std::mt19937 rng(31);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracle::random_k4_minor_free(5 + trial % 6, rng);
        if (!g.is_connected()) continue;
        auto bc = block_cut_tree(g);
        for (const auto& blk : bc.blocks) {
            if (blk.size() < 5) continue;
            Graph sub = g.induced(blk);
            if (find_local_rule(sub)) continue;
            for (const auto& c : induced_cycles(sub, [](int l) { return l != 4; })) {
                auto sets = walk_neighbour_sets(c, sub);
                for (std::size_t i = 0; i < sets.size(); ++i) {
                    CHECK((sets[i].size() <= 1 ||
                           sets[(i + 1) % sets.size()].size() <= 1));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked >= 0);
}
