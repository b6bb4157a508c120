#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "parhom/classify.hpp"
#include "parhom/generators.hpp"
#include "parhom/json_io.hpp"

using namespace parhom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitVerification = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw parse_error("cannot write file: " + out_path);
    out << text;
}

std::string permutation_cycles(const VertexPermutation& sigma) {
    std::ostringstream out;
    std::vector<bool> seen(sigma.size(), false);
    for (std::size_t v = 0; v < sigma.size(); ++v) {
        if (seen[v] || sigma[v] == static_cast<int>(v)) continue;
        out << "(";
        std::size_t cur = v;
        bool first = true;
        while (!seen[cur]) {
            seen[cur] = true;
            out << (first ? "" : " ") << cur;
            first = false;
            cur = static_cast<std::size_t>(sigma[cur]);
        }
        out << ")";
    }
    return out.str();
}

const char* verdict_name(ClassificationReport::Verdict v) {
    switch (v) {
        case ClassificationReport::Verdict::polynomial: return "polynomial";
        case ClassificationReport::Verdict::parityP_complete: return "parityP_complete";
        case ClassificationReport::Verdict::unknown: return "unknown";
    }
    return "?";
}

int run_classify(const std::string& path, const std::string& mode, bool as_json) {
    Graph h = parse_graph(slurp(path), /*allow_loops=*/mode == "listhom");
    ClassificationReport report;
    if (mode == "parhom")
        report = classify_parhom(h);
    else if (mode == "deg3")
        report = classify_deg3(h);
    else
        report = classify_listhom(h);
    if (as_json) {
        std::cout << report_to_json(report);
    } else {
        std::cout << "verdict: " << verdict_name(report.verdict) << "\n";
        if (report.certificate.type == "gadget") {
            std::cout << "rule: " << report.certificate.rule << "\n";
            if (!report.certificate.witness_walk.empty()) {
                std::cout << "witness walk:";
                for (int v : report.certificate.witness_walk) std::cout << " " << v;
                std::cout << "\n";
            }
            std::cout << "verified: " << (report.certificate.verified ? "true" : "false")
                      << "\n";
        } else if (!report.certificate.reason.empty()) {
            std::cout << "reason: " << report.certificate.reason << "\n";
        }
        if (!report.lower_bound_note.empty())
            std::cout << "lower bound: " << report.lower_bound_note << "\n";
    }
    return report.verdict == ClassificationReport::Verdict::unknown ? kExitUnsupported
                                                                    : kExitOk;
}

int run_reduce(const std::string& path) {
    Graph h = parse_graph(slurp(path));
    auto trace = involution_free_reduction(h, default_size_bound());
    std::cout << "trace length: " << trace.steps.size() << "\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& step = trace.steps[i];
        std::cout << "step " << i + 1 << ": n=" << step.before.vertex_count()
                  << " involution " << permutation_cycles(step.involution) << " fixes "
                  << step.fixed_old_ids.size() << " vertices\n";
    }
    std::cout << "H*:\n" << write_graph(trace.result);
    return kExitOk;
}

int run_count(const std::string& g_path, const std::string& h_path, bool mod2,
              const std::string& pins_path) {
    Graph g = parse_graph(slurp(g_path));
    Graph h = parse_graph(slurp(h_path));
    std::map<int, int> pins;
    if (!pins_path.empty()) pins = parse_pinning(slurp(pins_path), g);
    for (const auto& [v, a] : pins) h.check_vertex(a);
    PartiallyLabelledGraph j(g, pins, {});
    if (mod2) {
        std::cout << to_string(count_hom_mod2(j, h)) << "\n";
        return kExitOk;
    }
    try {
        std::cout << count_hom(j, h) << "\n";
    } catch (const std::overflow_error&) {
        std::cerr << "count exceeds 64 bits; use --mod2\n";
        return kExitUnsupported;
    }
    return kExitOk;
}

int run_gadget(const std::string& path, const std::string& out_path) {
    Graph h = parse_graph(slurp(path));
    auto res = synthesize_hardness_gadget(h, default_size_bound());
    switch (res.kind) {
        case SynthesisResult::Kind::Tractable:
            std::cerr << "tractable: involution-free reduction has at most one vertex; "
                         "no hardness gadget exists\n";
            return kExitUnsupported;
        case SynthesisResult::Kind::Unsupported:
            std::cerr << "unsupported: " << res.reason << "\n";
            return kExitUnsupported;
        case SynthesisResult::Kind::Hard:
            break;
    }
    emit(gadget_to_json(*res.gadget, res.host), out_path);
    if (!out_path.empty())
        std::cout << "rule " << res.gadget->rule << ", gadget written to " << out_path
                  << "\n";
    return kExitOk;
}

int run_verify_gadget(const std::string& gadget_path, const std::string& h_path) {
    auto loaded = gadget_from_json(slurp(gadget_path));
    Graph h = parse_graph(slurp(h_path));
    if (loaded.host && !(*loaded.host == h))
        std::cerr << "note: the embedded host differs from " << h_path << "\n";
    auto verdict = verify_hardness_gadget(h, loaded.gadget);
    std::cout << "verified: " << (verdict.verified ? "true" : "false") << "\n";
    for (const auto& v : verdict.violations) {
        std::cout << "violation: " << v.condition;
        for (int w : v.witness) std::cout << " " << w;
        std::cout << "\n";
    }
    return verdict.verified ? kExitOk : kExitVerification;
}

int run_reduce_is(const std::string& g_path, const std::string& h_path,
                  const std::string& preset_name) {
    Graph g = parse_graph(slurp(g_path));
    Graph h = parse_graph(slurp(h_path));
    IsPreset preset = preset_name == "path4" ? IsPreset::Path4 : IsPreset::H2;
    if (!(h == is_reduction_target(preset))) {
        std::cerr << "target graph does not match preset '" << preset_name << "'\n";
        return kExitUnsupported;
    }
    auto j = build_is_reduction_preset(g, preset);
    std::cout << write_graph(j.underlying);
    for (const auto& [v, a] : j.pinning) std::cout << "p " << v << " " << a << "\n";
    return kExitOk;
}

int run_gen(const std::string& family, const std::vector<int>& params,
            const std::string& out_path) {
    auto fam = parse_family(family, params);
    if (!fam) {
        std::cerr << "unknown family or wrong parameter count: " << family << "\n";
        return kExitParse;
    }
    Graph g = generate(*fam);
    std::ostringstream out;
    for (const auto& [name, id] : family_roles(*fam))
        out << "# role " << name << " " << id << "\n";
    out << write_graph(g);
    emit(out.str(), out_path);
    return kExitOk;
}

int run_dot(const std::string& path) {
    std::string text = slurp(path);
    Graph g = parse_graph(text, /*allow_loops=*/true);
    std::cout << to_dot(g, parse_roles(text));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parity homomorphism dichotomy toolkit"};
    app.require_subcommand(1);

    std::string path, second, mode = "parhom", pins, out, preset = "h2", family;
    std::vector<int> params;
    bool as_json = false, mod2 = false;

    auto* classify = app.add_subcommand("classify", "classify #Hom mod 2 for a target graph");
    classify->add_option("graph", path)->required();
    classify->add_option("--mode", mode)->check(CLI::IsMember({"parhom", "listhom", "deg3"}));
    classify->add_flag("--json", as_json);

    auto* reduce = app.add_subcommand("reduce", "print the involution-free reduction");
    reduce->add_option("graph", path)->required();

    auto* count = app.add_subcommand("count", "count homomorphisms from G to H");
    count->add_option("input", path)->required();
    count->add_option("target", second)->required();
    count->add_flag("--mod2", mod2);
    count->add_option("--pins", pins);

    auto* gadget = app.add_subcommand("gadget", "synthesize a hardness gadget");
    gadget->add_option("graph", path)->required();
    gadget->add_option("-o,--output", out);

    auto* verify = app.add_subcommand("verify-gadget", "re-verify a gadget file");
    verify->add_option("gadget", path)->required();
    verify->add_option("graph", second)->required();

    auto* reduce_is = app.add_subcommand("reduce-is", "independent-set parity reduction");
    reduce_is->add_option("input", path)->required();
    reduce_is->add_option("target", second)->required();
    reduce_is->add_option("--preset", preset)->required()->check(
        CLI::IsMember({"h2", "path4"}));

    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    gen->add_option("family", family)->required();
    gen->add_option("params", params);
    gen->add_option("-o,--output", out);

    auto* dot = app.add_subcommand("dot", "DOT export of a graph file");
    dot->add_option("graph", path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return run_classify(path, mode, as_json);
        if (reduce->parsed()) return run_reduce(path);
        if (count->parsed()) return run_count(path, second, mod2, pins);
        if (gadget->parsed()) return run_gadget(path, out);
        if (verify->parsed()) return run_verify_gadget(path, second);
        if (reduce_is->parsed()) return run_reduce_is(path, second, preset);
        if (gen->parsed()) return run_gen(family, params, out);
        if (dot->parsed()) return run_dot(path);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const bound_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const verification_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitOk;
}
