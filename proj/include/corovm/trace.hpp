#ifndef COROVM_TRACE_HPP
#define COROVM_TRACE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "corovm/bisim.hpp"
#include "corovm/machines.hpp"

namespace corovm {

// Keys: step, machine, rule, head, stack_depth, mu_count. Serialized with
// sorted keys so lines compare byte for byte.
nlohmann::json to_json(const TraceEvent& e);
TraceEvent trace_event_from_json(const nlohmann::json& j);
std::string to_json_line(const TraceEvent& e);
std::string to_text_line(const TraceEvent& e);

nlohmann::json to_json(const LockstepReport& r, SimulationPair pair);

// Runs a machine from its initial state and returns the trace as JSON lines,
// one event per line, each terminated by '\n'.
std::string json_trace(const TermCTPtr& t, std::size_t max_steps);
std::string json_trace(const TermGSPtr& t, Machine machine, std::size_t max_steps);

}  // namespace corovm

#endif
