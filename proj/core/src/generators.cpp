#include "parhom/generators.hpp"

namespace parhom {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

Graph make_f() {
    Graph g(6);
    // v1..v6 = 0..5; squares (v1,v2,v5,v4) and (v2,v3,v6,v5) share {v2,v5}.
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 4);
    g.add_edge(0, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(2, 5);
    return g;
}

}  // namespace

Graph generate(const GraphFamily& family) {
    using Tag = GraphFamily::Tag;
    switch (family.tag) {
        case Tag::Path: {
            require(family.p1 >= 1, "Path: need n >= 1");
            Graph g(family.p1);
            for (int i = 0; i + 1 < family.p1; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case Tag::Cycle: {
            require(family.p1 >= 3, "Cycle: need n >= 3");
            Graph g(family.p1);
            for (int i = 0; i < family.p1; ++i) g.add_edge(i, (i + 1) % family.p1);
            return g;
        }
        case Tag::Complete: {
            require(family.p1 >= 1, "Complete: need n >= 1");
            Graph g(family.p1);
            for (int i = 0; i < family.p1; ++i)
                for (int j = i + 1; j < family.p1; ++j) g.add_edge(i, j);
            return g;
        }
        case Tag::CompleteBipartite: {
            require(family.p1 >= 1 && family.p2 >= 1, "CompleteBipartite: need a,b >= 1");
            Graph g(family.p1 + family.p2);
            for (int i = 0; i < family.p1; ++i)
                for (int j = 0; j < family.p2; ++j) g.add_edge(i, family.p1 + j);
            return g;
        }
        case Tag::ReflexiveComplete: {
            require(family.p1 >= 1, "ReflexiveComplete: need n >= 1");
            Graph g(family.p1, /*allow_loops=*/true);
            for (int i = 0; i < family.p1; ++i) {
                g.add_edge(i, i);
                for (int j = i + 1; j < family.p1; ++j) g.add_edge(i, j);
            }
            return g;
        }
        case Tag::F:
            return make_f();
        case Tag::Skl: {
            require(family.p1 >= 1 && family.p2 >= 1, "Skl: need k,l >= 1");
            int k = family.p1, l = family.p2;
            Graph f = make_f();
            Graph g(6 + k + l);
            for (auto [u, v] : f.edges()) g.add_edge(u, v);
            for (int i = 0; i < k; ++i) {
                g.add_edge(1, 6 + i);  // v2
                g.add_edge(3, 6 + i);  // v4
            }
            for (int j = 0; j < l; ++j) {
                g.add_edge(1, 6 + k + j);  // v2
                g.add_edge(5, 6 + k + j);  // v6
            }
            return g;
        }
        case Tag::Diamond: {
            require(family.p1 >= 2, "Diamond: need k >= 2");
            Graph g(family.p1 + 2);
            for (int i = 0; i < family.p1; ++i) {
                g.add_edge(0, 2 + i);
                g.add_edge(1, 2 + i);
            }
            return g;
        }
        case Tag::BD: {
            require(family.p1 >= 0, "BD: need k >= 0");
            Graph g(4 + family.p1);
            g.add_edge(0, 1);  // a-b
            g.add_edge(0, 3);  // a-d
            g.add_edge(1, 2);  // b-c
            g.add_edge(2, 3);  // c-d
            for (int i = 0; i < family.p1; ++i) {
                g.add_edge(3, 4 + i);  // d-y_i
                g.add_edge(1, 4 + i);  // b-y_i
            }
            return g;
        }
        case Tag::FD: {
            require(family.p1 >= 0, "FD: need k >= 0");
            Graph g(4 + family.p1);
            g.add_edge(0, 1);  // a-b
            g.add_edge(0, 3);  // a-d
            g.add_edge(1, 2);  // b-c
            g.add_edge(2, 3);  // c-d
            for (int i = 0; i < family.p1; ++i) {
                g.add_edge(0, 4 + i);  // a-z_i
                g.add_edge(2, 4 + i);  // c-z_i
            }
            return g;
        }
        case Tag::ExampleH1: {
            Graph g(5);  // s t l ru sl
            g.add_edge(0, 1);
            g.add_edge(0, 2);
            g.add_edge(0, 3);
            g.add_edge(0, 4);
            g.add_edge(1, 2);
            g.add_edge(1, 3);
            g.add_edge(2, 4);
            return g;
        }
        case Tag::ExampleH2: {
            Graph g(6);  // o s i x y z
            g.add_edge(0, 1);
            g.add_edge(1, 2);
            g.add_edge(2, 3);
            g.add_edge(0, 4);
            g.add_edge(2, 4);
            g.add_edge(1, 4);
            g.add_edge(3, 5);
            g.add_edge(1, 5);
            return g;
        }
    }
    throw std::logic_error("unreachable family tag");
}

std::map<std::string, int> family_roles(const GraphFamily& family) {
    using Tag = GraphFamily::Tag;
    std::map<std::string, int> roles;
    auto number = [&](const std::string& stem, int from, int count) {
        for (int i = 0; i < count; ++i) roles[stem + std::to_string(i + 1)] = from + i;
    };
    switch (family.tag) {
        case Tag::F:
            number("v", 0, 6);
            break;
        case Tag::Skl:
            number("v", 0, 6);
            number("y", 6, family.p1);
            number("z", 6 + family.p1, family.p2);
            break;
        case Tag::Diamond:
            roles["s"] = 0;
            roles["t"] = 1;
            number("x", 2, family.p1);
            break;
        case Tag::BD:
            roles["a"] = 0;
            roles["b"] = 1;
            roles["c"] = 2;
            roles["d"] = 3;
            number("y", 4, family.p1);
            break;
        case Tag::FD:
            roles["a"] = 0;
            roles["b"] = 1;
            roles["c"] = 2;
            roles["d"] = 3;
            number("z", 4, family.p1);
            break;
        case Tag::ExampleH1:
            roles = {{"s", 0}, {"t", 1}, {"l", 2}, {"ru", 3}, {"sl", 4}};
            break;
        case Tag::ExampleH2:
            roles = {{"o", 0}, {"s", 1}, {"i", 2}, {"x", 3}, {"y", 4}, {"z", 5}};
            break;
        default:
            break;
    }
    return roles;
}

std::optional<GraphFamily> parse_family(const std::string& name,
                                        const std::vector<int>& params) {
    auto p = [&](std::size_t i) { return i < params.size() ? params[i] : 0; };
    using Tag = GraphFamily::Tag;
    static const std::map<std::string, std::pair<Tag, int>> table = {
        {"path", {Tag::Path, 1}},
        {"cycle", {Tag::Cycle, 1}},
        {"complete", {Tag::Complete, 1}},
        {"complete-bipartite", {Tag::CompleteBipartite, 2}},
        {"reflexive-complete", {Tag::ReflexiveComplete, 1}},
        {"f", {Tag::F, 0}},
        {"skl", {Tag::Skl, 2}},
        {"diamond", {Tag::Diamond, 1}},
        {"bd", {Tag::BD, 1}},
        {"fd", {Tag::FD, 1}},
        {"h1", {Tag::ExampleH1, 0}},
        {"h2", {Tag::ExampleH2, 0}},
    };
    auto it = table.find(name);
    if (it == table.end() || params.size() != static_cast<std::size_t>(it->second.second))
        return std::nullopt;
    return GraphFamily{it->second.first, p(0), p(1)};
}

}  // namespace parhom
