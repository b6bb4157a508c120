#ifndef PARHOM_GRAPH_HPP
#define PARHOM_GRAPH_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace parhom {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on dense 0-based vertex ids. Self-loops are
// representable only when allow_loops is set (list-homomorphism targets).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, bool allow_loops = false)
        : n_(n), loops_(allow_loops), adj_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int vertex_count() const { return n_; }
    bool loops_allowed() const { return loops_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    bool has_loop(int v) const { return has_edge(v, v); }

    // Sorted, loop included at most once.
    const std::vector<int>& neighbours(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const;

    // Edges as sorted (u,v) pairs with u <= v.
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && loops_ == other.loops_ && adj_ == other.adj_;
    }

    // Induced subgraph on `vs` (need not be sorted); vertex i of the result is
    // vs[i] of this graph.
    Graph induced(const std::vector<int>& vs) const;

    std::vector<std::vector<int>> connected_components() const;
    bool is_connected() const;  // empty graph counts as connected
    bool is_bipartite(std::vector<int>* side = nullptr) const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    }

private:
    int n_ = 0;
    bool loops_ = false;
    std::vector<std::vector<int>> adj_;
};

// Intersection of the neighbourhoods of all vertices in s; s must be nonempty.
std::vector<int> common_neighbourhood(const Graph& h, const std::vector<int>& s);

// Edge-list text format: "n <count>", lines "e <u> <v>", "#" comments.
Graph parse_graph(const std::string& text, bool allow_loops = false);
std::string write_graph(const Graph& g);

// Pinning file: lines "p <g-vertex> <h-vertex>".
std::map<int, int> parse_pinning(const std::string& text, const Graph& g);

// Role annotations ("# role <name> <id>") as written by the generators.
std::map<std::string, int> parse_roles(const std::string& text);
std::string to_dot(const Graph& g, const std::map<std::string, int>& roles = {});

}  // namespace parhom

#endif
