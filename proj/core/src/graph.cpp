#include "parhom/graph.hpp"

#include <queue>
#include <sstream>

namespace parhom {

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v && !loops_) throw std::invalid_argument("loop on loop-free graph");
    if (has_edge(u, v)) throw std::invalid_argument("parallel edge");
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    if (u != v)
        adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u <= v) es.emplace_back(u, v);
    return es;
}

int Graph::edge_count() const { return static_cast<int>(edges().size()); }

Graph Graph::induced(const std::vector<int>& vs) const {
    std::map<int, int> idx;
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
        check_vertex(vs[i]);
        if (!idx.emplace(vs[i], i).second)
            throw std::invalid_argument("duplicate vertex in induced set");
    }
    Graph g(static_cast<int>(vs.size()), loops_);
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int w : adj_[vs[i]]) {
            auto it = idx.find(w);
            if (it != idx.end() && it->second >= i) g.add_edge(i, it->second);
        }
    return g;
}

std::vector<std::vector<int>> Graph::connected_components() const {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(n_, false);
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected() const { return connected_components().size() <= 1; }

bool Graph::is_bipartite(std::vector<int>* side) const {
    std::vector<int> colour(n_, -1);
    for (int s = 0; s < n_; ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj_[v]) {
                if (w == v) return false;  // loop
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    q.push(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    if (side) *side = colour;
    return true;
}

std::vector<int> common_neighbourhood(const Graph& h, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("common_neighbourhood: empty set");
    std::vector<int> acc = h.neighbours(s[0]);
    for (std::size_t i = 1; i < s.size() && !acc.empty(); ++i) {
        const auto& nb = h.neighbours(s[i]);
        std::vector<int> next;
        std::set_intersection(acc.begin(), acc.end(), nb.begin(), nb.end(),
                              std::back_inserter(next));
        acc = std::move(next);
    }
    return acc;
}

namespace {

std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

int parse_int(const std::string& t, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw parse_error(std::string("bad ") + what + ": '" + t + "'");
    }
}

}  // namespace

Graph parse_graph(const std::string& text, bool allow_loops) {
    auto lines = tokenize_lines(text);
    if (lines.empty() || lines[0][0] != "n" || lines[0].size() != 2)
        throw parse_error("expected header line 'n <count>'");
    int n = parse_int(lines[0][1], "vertex count");
    if (n < 0) throw parse_error("negative vertex count");
    Graph g(n, allow_loops);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& toks = lines[i];
        if (toks[0] != "e" || toks.size() != 3)
            throw parse_error("expected edge line 'e <u> <v>'");
        int u = parse_int(toks[1], "endpoint");
        int v = parse_int(toks[2], "endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("endpoint out of range: e " + toks[1] + " " + toks[2]);
        if (u == v && !allow_loops)
            throw parse_error("loop 'e " + toks[1] + " " + toks[2] + "' but loops are disabled");
        if (g.has_edge(u, v))
            throw parse_error("duplicate edge: e " + toks[1] + " " + toks[2]);
        g.add_edge(u, v);
    }
    return g;
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

std::map<int, int> parse_pinning(const std::string& text, const Graph& g) {
    std::map<int, int> pins;
    for (const auto& toks : tokenize_lines(text)) {
        if (toks[0] != "p" || toks.size() != 3)
            throw parse_error("expected pin line 'p <g-vertex> <h-vertex>'");
        int u = parse_int(toks[1], "pinned vertex");
        int a = parse_int(toks[2], "pin target");
        if (u < 0 || u >= g.vertex_count()) throw parse_error("pinned vertex out of range");
        if (!pins.emplace(u, a).second) throw parse_error("vertex pinned twice");
    }
    return pins;
}

std::map<std::string, int> parse_roles(const std::string& text) {
    std::map<std::string, int> roles;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string hash, kw, name;
        int id;
        if (ls >> hash >> kw >> name >> id && hash == "#" && kw == "role")
            roles[name] = id;
    }
    return roles;
}

std::string to_dot(const Graph& g, const std::map<std::string, int>& roles) {
    std::map<int, std::string> label;
    for (const auto& [name, id] : roles) label[id] = name;
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (auto it = label.find(v); it != label.end())
            out << " [label=\"" << it->second << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace parhom
