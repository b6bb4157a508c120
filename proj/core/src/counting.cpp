#include "parhom/counting.hpp"

#include <cstdint>
#include <numeric>
#include <set>

namespace parhom {

namespace {

struct ExactRing {
    using Value = unsigned long long;
    static Value zero() { return 0; }
    static Value one() { return 1; }
    static Value add(Value a, Value b) {
        Value r;
        if (__builtin_add_overflow(a, b, &r))
            throw std::overflow_error("homomorphism count exceeds 64 bits");
        return r;
    }
    static Value mul(Value a, Value b) {
        Value r;
        if (__builtin_mul_overflow(a, b, &r))
            throw std::overflow_error("homomorphism count exceeds 64 bits");
        return r;
    }
    static Value from_count(unsigned long long n) { return n; }
};

struct ParityRing {
    using Value = unsigned char;
    static Value zero() { return 0; }
    static Value one() { return 1; }
    static Value add(Value a, Value b) { return a ^ b; }
    static Value mul(Value a, Value b) { return a & b; }
    static Value from_count(unsigned long long n) { return n & 1ull; }
};

// Constraint network: one variable per G-vertex with an explicit domain of
// H-vertices, binary adjacency constraints on G-edges.
struct Instance {
    const Graph* h;
    std::vector<std::vector<int>> domains;
    std::vector<std::pair<int, int>> edges;  // no duplicates, u < v or loop (u,u)
    int var_count() const { return static_cast<int>(domains.size()); }
};

Instance build_instance(const Graph& g, const Graph& h,
                        const std::map<int, int>& pins, const ListAssignment* lists) {
    Instance inst;
    inst.h = &h;
    inst.domains.resize(g.vertex_count());
    std::vector<int> full(h.vertex_count());
    std::iota(full.begin(), full.end(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (auto it = pins.find(v); it != pins.end()) {
            h.check_vertex(it->second);
            inst.domains[v] = {it->second};
        } else if (lists) {
            inst.domains[v] = (*lists)[v];
            std::sort(inst.domains[v].begin(), inst.domains[v].end());
            inst.domains[v].erase(
                std::unique(inst.domains[v].begin(), inst.domains[v].end()),
                inst.domains[v].end());
            for (int a : inst.domains[v]) h.check_vertex(a);
        } else {
            inst.domains[v] = full;
        }
    }
    inst.edges = g.edges();
    return inst;
}

// Elimination order by repeated minimum degree (ties: smallest id) on the
// fill-in graph; returns (order, width).
std::pair<std::vector<int>, int> min_degree_order(int n,
                                                  const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::set<int>> nb(n);
    for (auto [u, v] : edges)
        if (u != v) {
            nb[u].insert(v);
            nb[v].insert(u);
        }
    std::vector<int> order;
    std::vector<bool> gone(n, false);
    int width = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best == -1 || nb[v].size() < nb[best].size())) best = v;
        order.push_back(best);
        gone[best] = true;
        width = std::max(width, static_cast<int>(nb[best].size()));
        std::vector<int> around(nb[best].begin(), nb[best].end());
        for (int u : around) nb[u].erase(best);
        for (std::size_t i = 0; i < around.size(); ++i)
            for (std::size_t j = i + 1; j < around.size(); ++j) {
                nb[around[i]].insert(around[j]);
                nb[around[j]].insert(around[i]);
            }
    }
    return {order, width};
}

int instance_width(const Instance& inst) {
    return min_degree_order(inst.var_count(), inst.edges).second;
}

template <class Ring>
struct Factor {
    std::vector<int> scope;  // sorted variable ids
    std::vector<typename Ring::Value> table;
};

// Flat index of an assignment to `scope` given per-variable positions.
inline std::size_t flat_index(const std::vector<int>& scope,
                              const std::vector<int>& pos,
                              const std::vector<std::size_t>& dom_size) {
    std::size_t idx = 0;
    for (int v : scope) idx = idx * dom_size[v] + pos[v];
    return idx;
}

// Variable elimination over the given order. Table sizes stay below
// max_table_entries or the call throws bound_error (callers fall back to
// enumeration).
template <class Ring>
typename Ring::Value eliminate(const Instance& inst, const std::vector<int>& order,
                               std::size_t max_table_entries) {
    using Value = typename Ring::Value;
    const Graph& h = *inst.h;
    std::vector<std::size_t> dom_size(inst.var_count());
    for (int v = 0; v < inst.var_count(); ++v) dom_size[v] = inst.domains[v].size();

    std::vector<Factor<Ring>> factors;
    for (auto [u, v] : inst.edges) {
        if (u == v) {
            Factor<Ring> f;
            f.scope = {u};
            f.table.resize(dom_size[u]);
            for (std::size_t i = 0; i < dom_size[u]; ++i)
                f.table[i] = h.has_loop(inst.domains[u][i]) ? Ring::one() : Ring::zero();
            factors.push_back(std::move(f));
            continue;
        }
        Factor<Ring> f;
        f.scope = {std::min(u, v), std::max(u, v)};
        f.table.resize(dom_size[f.scope[0]] * dom_size[f.scope[1]]);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < dom_size[f.scope[0]]; ++i)
            for (std::size_t j = 0; j < dom_size[f.scope[1]]; ++j, ++idx)
                f.table[idx] = h.has_edge(inst.domains[f.scope[0]][i],
                                          inst.domains[f.scope[1]][j])
                                   ? Ring::one()
                                   : Ring::zero();
        factors.push_back(std::move(f));
    }

    Value result = Ring::one();
    for (int v : order) {
        // Collect factors mentioning v.
        std::vector<Factor<Ring>> involved;
        for (auto it = factors.begin(); it != factors.end();) {
            if (std::binary_search(it->scope.begin(), it->scope.end(), v)) {
                involved.push_back(std::move(*it));
                it = factors.erase(it);
            } else {
                ++it;
            }
        }
        // Union scope without v.
        std::set<int> scope_set;
        for (const auto& f : involved)
            for (int u : f.scope)
                if (u != v) scope_set.insert(u);
        std::vector<int> out_scope(scope_set.begin(), scope_set.end());

        std::size_t entries = 1;
        for (int u : out_scope) {
            entries *= dom_size[u];
            if (entries > max_table_entries)
                throw bound_error("elimination table too large");
        }
        Factor<Ring> out;
        out.scope = out_scope;
        out.table.assign(entries, Ring::zero());

        // Enumerate assignments to out_scope, sum over v.
        std::vector<int> pos(inst.var_count(), 0);
        std::vector<std::size_t> counter(out_scope.size(), 0);
        for (std::size_t idx = 0; idx < entries; ++idx) {
            for (std::size_t i = 0; i < out_scope.size(); ++i) pos[out_scope[i]] = counter[i];
            Value sum = Ring::zero();
            for (std::size_t dv = 0; dv < dom_size[v]; ++dv) {
                pos[v] = static_cast<int>(dv);
                Value prod = Ring::one();
                for (const auto& f : involved)
                    prod = Ring::mul(prod, f.table[flat_index(f.scope, pos, dom_size)]);
                sum = Ring::add(sum, prod);
            }
            out.table[idx] = sum;
            for (std::size_t i = out_scope.size(); i-- > 0;) {
                if (++counter[i] < dom_size[out_scope[i]]) break;
                counter[i] = 0;
            }
        }

        if (out.scope.empty())
            result = Ring::mul(result, out.table[0]);
        else
            factors.push_back(std::move(out));
    }
    return result;
}

// Exhaustive backtracking enumeration; variables ordered by degree for early
// pruning.
template <class Ring>
typename Ring::Value enumerate(const Instance& inst) {
    using Value = typename Ring::Value;
    const Graph& h = *inst.h;
    int n = inst.var_count();

    std::vector<std::vector<int>> adj(n);
    std::vector<bool> selfloop(n, false);
    for (auto [u, v] : inst.edges) {
        if (u == v) {
            selfloop[u] = true;
            continue;
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
        return a < b;
    });
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    std::vector<int> assigned(n, -1);
    Value total = Ring::zero();
    // Iterative DFS over assignment prefixes.
    std::vector<std::size_t> choice(n + 1, 0);
    int depth = 0;
    while (depth >= 0) {
        if (depth == n) {
            total = Ring::add(total, Ring::one());
            --depth;
            continue;
        }
        int v = order[depth];
        bool advanced = false;
        for (std::size_t& c = choice[depth]; c < inst.domains[v].size(); ++c) {
            int a = inst.domains[v][static_cast<int>(c)];
            if (selfloop[v] && !h.has_loop(a)) continue;
            bool ok = true;
            for (int u : adj[v])
                if (assigned[u] != -1 && !h.has_edge(a, assigned[u])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            assigned[v] = a;
            ++c;
            ++depth;
            choice[depth] = 0;
            advanced = true;
            break;
        }
        if (!advanced) {
            assigned[v] = -1;
            --depth;
            if (depth >= 0) assigned[order[depth]] = -1;
        }
    }
    return total;
}

template <class Ring>
typename Ring::Value count(const Instance& inst, CountStrategy strategy, int width_cap,
                           std::size_t max_table_entries) {
    if (strategy == CountStrategy::Enumerate) return enumerate<Ring>(inst);
    auto [order, width] = min_degree_order(inst.var_count(), inst.edges);
    if (strategy == CountStrategy::Auto && width > width_cap) return enumerate<Ring>(inst);
    try {
        return eliminate<Ring>(inst, order, max_table_entries);
    } catch (const bound_error&) {
        if (strategy == CountStrategy::TreeDp) throw;
        return enumerate<Ring>(inst);
    }
}

constexpr std::size_t kExactTableCap = std::size_t{1} << 22;
constexpr std::size_t kParityTableCap = std::size_t{1} << 26;

void check_simple(const Graph& g, const char* what) {
    if (!g.loops_allowed()) return;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.has_loop(v)) throw std::invalid_argument(std::string(what) + " must be loop-free");
}

}  // namespace

int elimination_width(const Graph& g) {
    return min_degree_order(g.vertex_count(), g.edges()).second;
}

unsigned long long count_hom(const Graph& g, const Graph& h, CountStrategy strategy) {
    check_simple(g, "count_hom: input graph");
    Instance inst = build_instance(g, h, {}, nullptr);
    return count<ExactRing>(inst, strategy, /*width_cap=*/3, kExactTableCap);
}

unsigned long long count_hom(const PartiallyLabelledGraph& j, const Graph& h,
                             CountStrategy strategy) {
    check_simple(j.underlying, "count_hom: input graph");
    j.validate_against(h);
    Instance inst = build_instance(j.underlying, h, j.pinning, nullptr);
    return count<ExactRing>(inst, strategy, /*width_cap=*/3, kExactTableCap);
}

Parity count_hom_mod2(const PartiallyLabelledGraph& j, const Graph& h,
                      CountStrategy strategy) {
    j.validate_against(h);
    Instance inst = build_instance(j.underlying, h, j.pinning, nullptr);
    // Parity tables never overflow; any elimination width is fine.
    return static_cast<Parity>(
        count<ParityRing>(inst, strategy, /*width_cap=*/64, kParityTableCap));
}

std::vector<int> omega(const PartiallyLabelledGraph& j, const Graph& h) {
    if (j.distinguished.size() != 1)
        throw std::invalid_argument("omega: exactly one distinguished vertex required");
    std::vector<int> out;
    for (int a = 0; a < h.vertex_count(); ++a) {
        PartiallyLabelledGraph pinned = j;
        pinned.pinning[j.distinguished[0]] = a;
        pinned.distinguished.clear();
        if (is_odd(count_hom_mod2(pinned, h))) out.push_back(a);
    }
    return out;
}

Parity sigma_parity(const PartiallyLabelledGraph& j3, const Graph& h, int a, int b) {
    if (j3.distinguished.size() != 2)
        throw std::invalid_argument("sigma_parity: two distinguished vertices required");
    h.check_vertex(a);
    h.check_vertex(b);
    PartiallyLabelledGraph pinned = j3;
    pinned.pinning[j3.distinguished[0]] = a;
    pinned.pinning[j3.distinguished[1]] = b;
    pinned.distinguished.clear();
    return count_hom_mod2(pinned, h);
}

Parity count_list_hom_mod2(const Graph& g, const ListAssignment& lists, const Graph& h,
                           CountStrategy strategy) {
    if (static_cast<int>(lists.size()) != g.vertex_count())
        throw std::invalid_argument("count_list_hom_mod2: one list per vertex required");
    for (const auto& l : lists)
        if (l.empty())
            throw std::invalid_argument("count_list_hom_mod2: empty list");
    Instance inst = build_instance(g, h, {}, &lists);
    return static_cast<Parity>(count<ParityRing>(inst, strategy, 64, kParityTableCap));
}

Parity count_is_mod2(const Graph& g, CountStrategy strategy) {
    check_simple(g, "count_is_mod2: input graph");
    // Independent sets of G are exactly the homomorphisms to the two-vertex
    // graph {out, in} with a loop on `out` and the edge {out, in}.
    Graph target(2, /*allow_loops=*/true);
    target.add_edge(0, 0);
    target.add_edge(0, 1);
    Instance inst = build_instance(g, target, {}, nullptr);
    return static_cast<Parity>(count<ParityRing>(inst, strategy, 64, kParityTableCap));
}

namespace {

struct TargetComponent {
    std::vector<int> vertices;
    bool reflexive_complete = false;
    std::vector<int> side_x, side_y;  // bipartition when complete bipartite
};

bool analyse_component(const Graph& h, const std::vector<int>& comp, TargetComponent* out) {
    out->vertices = comp;
    bool any_loop = false, all_loops = true;
    for (int v : comp) {
        if (h.has_loop(v))
            any_loop = true;
        else
            all_loops = false;
    }
    if (any_loop != all_loops) return false;  // mixed loops
    if (all_loops) {
        for (int u : comp)
            for (int v : comp)
                if (u != v && !h.has_edge(u, v)) return false;
        out->reflexive_complete = true;
        return true;
    }
    // Loop-free: must be complete bipartite.
    Graph sub = h.induced(comp);
    std::vector<int> side;
    if (!sub.is_bipartite(&side)) return false;
    for (int i = 0; i < sub.vertex_count(); ++i)
        for (int j = 0; j < sub.vertex_count(); ++j)
            if (side[i] == 0 && side[j] == 1 && !sub.has_edge(i, j)) return false;
    for (int i = 0; i < sub.vertex_count(); ++i)
        (side[i] == 0 ? out->side_x : out->side_y).push_back(comp[i]);
    return true;
}

}  // namespace

bool is_dyer_greenhill_tractable(const Graph& h) {
    for (const auto& comp : h.connected_components()) {
        TargetComponent tc;
        if (!analyse_component(h, comp, &tc)) return false;
    }
    return true;
}

Parity tractable_listhom_mod2(const Graph& g, const ListAssignment& lists, const Graph& h) {
    if (static_cast<int>(lists.size()) != g.vertex_count())
        throw std::invalid_argument("tractable_listhom_mod2: one list per vertex required");
    for (const auto& l : lists)
        if (l.empty()) throw std::invalid_argument("tractable_listhom_mod2: empty list");

    std::vector<TargetComponent> tcs;
    for (const auto& comp : h.connected_components()) {
        TargetComponent tc;
        if (!analyse_component(h, comp, &tc))
            throw verification_error(
                "tractable_listhom_mod2: target outside the tractable class");
        tcs.push_back(std::move(tc));
    }

    auto list_count_in = [&](int v, const std::vector<int>& allowed) -> unsigned {
        unsigned c = 0;
        for (int a : lists[v])
            if (std::binary_search(allowed.begin(), allowed.end(), a)) ++c;
        return c;
    };

    Parity total = Parity::odd;
    for (const auto& gc : g.connected_components()) {
        Graph sub = g.induced(gc);
        std::vector<int> side;
        bool bip = sub.is_bipartite(&side);
        Parity comp_total = Parity::even;  // sum over target components
        for (const auto& tc : tcs) {
            std::vector<int> sorted_all = tc.vertices;
            std::sort(sorted_all.begin(), sorted_all.end());
            if (tc.reflexive_complete) {
                Parity prod = Parity::odd;
                for (int v : gc) prod = prod & parity_of(list_count_in(v, sorted_all));
                comp_total = comp_total ^ prod;
            } else {
                if (!bip) continue;  // no homomorphism into a loop-free bipartite target
                std::vector<int> xs = tc.side_x, ys = tc.side_y;
                std::sort(xs.begin(), xs.end());
                std::sort(ys.begin(), ys.end());
                Parity o1 = Parity::odd, o2 = Parity::odd;
                for (int i = 0; i < sub.vertex_count(); ++i) {
                    int v = gc[i];
                    if (side[i] == 0) {
                        o1 = o1 & parity_of(list_count_in(v, xs));
                        o2 = o2 & parity_of(list_count_in(v, ys));
                    } else {
                        o1 = o1 & parity_of(list_count_in(v, ys));
                        o2 = o2 & parity_of(list_count_in(v, xs));
                    }
                }
                // The two side assignments are disjoint classes of
                // homomorphisms (single-vertex components included).
                comp_total = comp_total ^ o1 ^ o2;
            }
        }
        total = total & comp_total;
    }
    return total;
}

}  // namespace parhom
