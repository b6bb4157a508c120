#ifndef PARHOM_JSON_IO_HPP
#define PARHOM_JSON_IO_HPP

#include <string>

#include "parhom/classify.hpp"

namespace parhom {

// Gadget persistence: pins and vertex sets refer to the host graph, which is
// embedded under "host" so third parties can re-verify in isolation.
std::string gadget_to_json(const HardnessGadget& g, const Graph& host);

struct LoadedGadget {
    HardnessGadget gadget;
    std::optional<Graph> host;
};

LoadedGadget gadget_from_json(const std::string& text);

std::string report_to_json(const ClassificationReport& report);

}  // namespace parhom

#endif
