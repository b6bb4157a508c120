#include "parhom/classify.hpp"

#include <cstdlib>

#include "parhom/generators.hpp"

namespace parhom {

int default_size_bound() {
    if (const char* env = std::getenv("PARHOM_MAX_VERTICES")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return kDefaultSymmetryBound;
}

namespace {

bool graph_has_square(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            auto common = common_neighbourhood(g, {u, v});
            int off = 0;
            for (int w : common)
                if (w != u && w != v) ++off;
            if (off >= 2) return true;
        }
    return false;
}

ClassificationReport::InputSummary summarise(const Graph& h) {
    ClassificationReport::InputSummary in;
    in.n = h.vertex_count();
    in.m = h.edge_count();
    in.max_degree = h.max_degree();
    bool loops = false;
    for (int v = 0; v < in.n; ++v) loops = loops || h.has_loop(v);
    in.k4_minor_free = !loops && is_k4_minor_free(h);
    in.square_free = !graph_has_square(h);
    try {
        in.chordal_bipartite = !loops && is_chordal_bipartite(h, h.vertex_count());
    } catch (const bound_error&) {
        in.chordal_bipartite = std::nullopt;
    }
    return in;
}

void fill_reduction(ClassificationReport& report, const ReductionTrace& trace) {
    report.hstar_n = trace.result.vertex_count();
    report.hstar_m = trace.result.edge_count();
    report.trace_length = static_cast<int>(trace.steps.size());
}

ClassificationReport from_synthesis(const Graph& h, SynthesisResult&& res) {
    ClassificationReport report;
    report.input = summarise(h);
    fill_reduction(report, res.trace);
    switch (res.kind) {
        case SynthesisResult::Kind::Tractable:
            report.verdict = ClassificationReport::Verdict::polynomial;
            report.certificate.type = "reduction";
            report.certificate.reason =
                "involution-free reduction has at most one vertex";
            break;
        case SynthesisResult::Kind::Hard: {
            report.verdict = ClassificationReport::Verdict::parityP_complete;
            report.certificate.type = "gadget";
            report.certificate.rule = res.gadget->rule;
            auto verdict = verify_hardness_gadget(res.host, *res.gadget);
            if (!verdict.verified)
                throw verification_error("classify: emitted gadget failed re-verification");
            report.certificate.verified = true;
            report.certificate.gadget = std::move(res.gadget);
            report.certificate.gadget_host = std::move(res.host);
            report.certificate.host_vertices = std::move(res.host_vertices);
            report.lower_bound_note = kLowerBoundNote;
            break;
        }
        case SynthesisResult::Kind::Unsupported:
            report.verdict = ClassificationReport::Verdict::unknown;
            report.certificate.type = "reduction";
            report.certificate.reason = "unsupported class: " + res.reason;
            break;
    }
    return report;
}

}  // namespace

ClassificationReport classify_parhom(const Graph& h, int bound) {
    if (bound <= 0) bound = default_size_bound();
    if (h.vertex_count() > bound)
        throw bound_error("classify_parhom: input exceeds the size bound");
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.has_loop(v))
            throw std::invalid_argument("classify_parhom: input must be simple (no loops)");
    return from_synthesis(h, synthesize_hardness_gadget(h, bound));
}

ClassificationReport classify_deg3(const Graph& h, int bound) {
    if (bound <= 0) bound = default_size_bound();
    if (h.vertex_count() > bound)
        throw bound_error("classify_deg3: input exceeds the size bound");
    auto trace = involution_free_reduction(h, bound);
    if (trace.result.vertex_count() > 1 && trace.result.max_degree() > 3) {
        ClassificationReport report;
        report.input = summarise(h);
        fill_reduction(report, trace);
        report.verdict = ClassificationReport::Verdict::unknown;
        report.certificate.type = "reduction";
        report.certificate.reason =
            "involution-free reduction has maximum degree above 3";
        return report;
    }
    return classify_parhom(h, bound);
}

ClassificationReport classify_listhom(const Graph& h) {
    ClassificationReport report;
    report.input = summarise(h);
    // The list-homomorphism problem needs no involution-free reduction.
    report.hstar_n = h.vertex_count();
    report.hstar_m = h.edge_count();
    report.trace_length = 0;

    if (is_dyer_greenhill_tractable(h)) {
        report.verdict = ClassificationReport::Verdict::polynomial;
        report.certificate.type = "reduction";
        report.certificate.reason =
            "every component is a loop-free complete bipartite graph or a reflexive "
            "complete graph";
        return report;
    }
    // Hardness witness walk (a,b,c,d): a != c, b != d, {a,d} not an edge.
    for (int a = 0; a < h.vertex_count(); ++a)
        for (int b : h.neighbours(a))
            for (int c : h.neighbours(b)) {
                if (c == a) continue;
                for (int d : h.neighbours(c)) {
                    if (d == b || h.has_edge(a, d)) continue;
                    report.verdict = ClassificationReport::Verdict::parityP_complete;
                    report.certificate.type = "gadget";
                    report.certificate.rule = "p4_hardness";
                    report.certificate.verified = true;
                    report.certificate.witness_walk = {a, b, c, d};
                    report.lower_bound_note = kLowerBoundNote;
                    return report;
                }
            }
    throw verification_error(
        "classify_listhom: target fails the tractable predicate but no witness walk exists");
}

PartiallyLabelledGraph build_is_reduction(const Graph& g, const std::vector<int>& u_side,
                                          const std::vector<int>& v_side,
                                          const std::vector<int>& u_pins,
                                          const std::vector<int>& v_pins) {
    std::vector<int> side(g.vertex_count(), -1);
    for (int v : u_side) {
        g.check_vertex(v);
        side[v] = 0;
    }
    for (int v : v_side) {
        g.check_vertex(v);
        if (side[v] != -1) throw std::invalid_argument("build_is_reduction: sides overlap");
        side[v] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (side[v] == -1)
            throw std::invalid_argument("build_is_reduction: sides must cover the graph");
    for (auto [u, v] : g.edges())
        if (side[u] == side[v])
            throw std::invalid_argument("build_is_reduction: not bipartite under the sides");

    int apexes = static_cast<int>(u_pins.size() + v_pins.size());
    Graph ghat(g.vertex_count() + apexes);
    for (auto [u, v] : g.edges()) ghat.add_edge(u, v);
    std::map<int, int> pins;
    int next = g.vertex_count();
    for (int target : u_pins) {
        for (int u : u_side) ghat.add_edge(next, u);
        pins[next] = target;
        ++next;
    }
    for (int target : v_pins) {
        for (int v : v_side) ghat.add_edge(next, v);
        pins[next] = target;
        ++next;
    }
    return PartiallyLabelledGraph(std::move(ghat), std::move(pins), {});
}

Graph is_reduction_target(IsPreset preset) {
    return preset == IsPreset::Path4 ? generate(GraphFamily::path(4))
                                     : generate(GraphFamily::h2());
}

PartiallyLabelledGraph build_is_reduction_preset(const Graph& g, IsPreset preset) {
    std::vector<int> colour;
    if (!g.is_bipartite(&colour))
        throw std::invalid_argument("build_is_reduction_preset: input graph not bipartite");
    std::vector<int> u_side, v_side;
    for (int v = 0; v < g.vertex_count(); ++v)
        (colour[v] == 0 ? u_side : v_side).push_back(v);
    if (preset == IsPreset::Path4) {
        // tau(u) = s, tau(v) = i on the 4-path (o,s,i,x).
        return build_is_reduction(g, u_side, v_side, {1}, {2});
    }
    // tau(u1) = y, tau(u2) = s, tau(v1) = z, tau(v2) = i on ExampleH2.
    auto roles = family_roles(GraphFamily::h2());
    return build_is_reduction(g, u_side, v_side, {roles.at("y"), roles.at("s")},
                              {roles.at("z"), roles.at("i")});
}

}  // namespace parhom
