#include "parhom/json_io.hpp"

#include "json.hpp"

namespace parhom {

namespace {

using nlohmann::json;

json graph_to_obj(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    json obj{{"n", g.vertex_count()}, {"edges", edges}};
    if (g.loops_allowed()) obj["loops"] = true;
    return obj;
}

Graph graph_from_obj(const json& obj) {
    bool loops = obj.value("loops", false);
    Graph g(obj.at("n").get<int>(), loops);
    for (const auto& e : obj.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

json plg_to_obj(const PartiallyLabelledGraph& plg) {
    json pins = json::object();
    for (const auto& [v, target] : plg.pinning) pins[std::to_string(v)] = target;
    json obj = graph_to_obj(plg.underlying);
    obj["pins"] = pins;
    obj["distinguished"] = plg.distinguished;
    return obj;
}

PartiallyLabelledGraph plg_from_obj(const json& obj) {
    Graph g = graph_from_obj(obj);
    std::map<int, int> pins;
    for (const auto& [key, target] : obj.at("pins").items())
        pins[std::stoi(key)] = target.get<int>();
    std::vector<int> dist = obj.value("distinguished", std::vector<int>{});
    return PartiallyLabelledGraph(std::move(g), std::move(pins), std::move(dist));
}

json gadget_to_obj(const HardnessGadget& g, const Graph& host) {
    return json{{"rule", g.rule},          {"I", g.i_set},
                {"S", g.s_set},            {"J1", plg_to_obj(g.j1)},
                {"J2", plg_to_obj(g.j2)},  {"J3", plg_to_obj(g.j3)},
                {"host", graph_to_obj(host)}};
}

}  // namespace

std::string gadget_to_json(const HardnessGadget& g, const Graph& host) {
    return gadget_to_obj(g, host).dump(2) + "\n";
}

LoadedGadget gadget_from_json(const std::string& text) {
    json obj = json::parse(text);
    LoadedGadget out;
    out.gadget.rule = obj.value("rule", "");
    out.gadget.i_set = obj.at("I").get<std::vector<int>>();
    out.gadget.s_set = obj.at("S").get<std::vector<int>>();
    out.gadget.j1 = plg_from_obj(obj.at("J1"));
    out.gadget.j2 = plg_from_obj(obj.at("J2"));
    out.gadget.j3 = plg_from_obj(obj.at("J3"));
    if (obj.contains("host")) out.host = graph_from_obj(obj.at("host"));
    return out;
}

std::string report_to_json(const ClassificationReport& report) {
    json input{{"n", report.input.n},
               {"m", report.input.m},
               {"max_degree", report.input.max_degree},
               {"k4_minor_free", report.input.k4_minor_free},
               {"square_free", report.input.square_free}};
    if (report.input.chordal_bipartite)
        input["chordal_bipartite"] = *report.input.chordal_bipartite;
    else
        input["chordal_bipartite"] = nullptr;

    json cert{{"type", report.certificate.type}};
    if (!report.certificate.reason.empty()) cert["reason"] = report.certificate.reason;
    if (report.certificate.type == "gadget") {
        cert["rule"] = report.certificate.rule;
        cert["verified"] = report.certificate.verified;
        if (report.certificate.gadget)
            cert["gadget"] =
                gadget_to_obj(*report.certificate.gadget, report.certificate.gadget_host);
        if (!report.certificate.host_vertices.empty())
            cert["host_vertices"] = report.certificate.host_vertices;
        if (!report.certificate.witness_walk.empty())
            cert["witness_walk"] = report.certificate.witness_walk;
    }

    const char* verdict =
        report.verdict == ClassificationReport::Verdict::polynomial ? "polynomial"
        : report.verdict == ClassificationReport::Verdict::parityP_complete
            ? "parityP_complete"
            : "unknown";

    json obj{{"input", input},
             {"reduction",
              {{"hstar_n", report.hstar_n},
               {"hstar_m", report.hstar_m},
               {"trace_length", report.trace_length}}},
             {"verdict", verdict},
             {"certificate", cert}};
    if (!report.lower_bound_note.empty()) obj["lower_bound_note"] = report.lower_bound_note;
    return obj.dump(2) + "\n";
}

}  // namespace parhom
