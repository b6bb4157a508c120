#ifndef PARHOM_CLASSIFY_HPP
#define PARHOM_CLASSIFY_HPP

#include "parhom/synthesis.hpp"

namespace parhom {

struct ClassificationReport {
    enum class Verdict { polynomial, parityP_complete, unknown };

    struct InputSummary {
        int n = 0, m = 0, max_degree = 0;
        bool k4_minor_free = false, square_free = false;
        std::optional<bool> chordal_bipartite;  // absent when enumeration capped out
    };

    struct Certificate {
        std::string type;  // "reduction" or "gadget"
        std::string reason;
        std::string rule;
        bool verified = false;
        std::optional<HardnessGadget> gadget;
        Graph gadget_host;                // graph the gadget verifies against
        std::vector<int> host_vertices;   // its vertex ids inside H*
        std::vector<int> witness_walk;    // list-homomorphism hardness witness
    };

    InputSummary input;
    int hstar_n = 0, hstar_m = 0, trace_length = 0;
    Verdict verdict = Verdict::unknown;
    Certificate certificate;
    std::string lower_bound_note;  // fixed rETH note on hard verdicts
};

inline constexpr const char* kLowerBoundNote = "no exp(o(|G|)) algorithm under rETH";

// Size bound for classification inputs: PARHOM_MAX_VERTICES or 32.
int default_size_bound();

ClassificationReport classify_parhom(const Graph& h, int bound = -1);

// Degree-<=3 driver: polynomial iff H* has at most one vertex; unknown when H*
// has maximum degree above 3.
ClassificationReport classify_deg3(const Graph& h, int bound = -1);

// List-homomorphism dichotomy; h may carry loops.
ClassificationReport classify_listhom(const Graph& h);

// The warm-up reduction: G bipartite with the given sides, one fresh apex per
// pin target wired to the whole side, apexes pinned as listed.
PartiallyLabelledGraph build_is_reduction(const Graph& g, const std::vector<int>& u_side,
                                          const std::vector<int>& v_side,
                                          const std::vector<int>& u_pins,
                                          const std::vector<int>& v_pins);

enum class IsPreset { Path4, H2 };

// Preset wirings for the 4-path (pins s, i) and ExampleH2 (pins {y,s}, {z,i});
// g's bipartition is computed and must exist.
PartiallyLabelledGraph build_is_reduction_preset(const Graph& g, IsPreset preset);

// Target graph matching the preset (Path(4) resp. ExampleH2).
Graph is_reduction_target(IsPreset preset);

}  // namespace parhom

#endif
