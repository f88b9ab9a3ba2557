#pragma once

#include <string>

#include "shannon/scenario.hpp"

namespace shannon {

/// Deterministic JSON rendering of a run; no timestamps or host data.
std::string render_machine(const RunReport& report);
std::string render_text(const RunReport& report);

std::string render_trace_machine(const Trace& trace, std::size_t dimension);
std::string render_trace_text(const Trace& trace, std::size_t dimension);

std::string certificate_json(const Certificate& cert);

}  // namespace shannon
