#include "corovm/trace.hpp"

#include <stdexcept>

namespace corovm {

namespace {

Machine machine_from(const std::string& name) {
  if (name == "ct") return Machine::ct;
  if (name == "gs") return Machine::gs;
  if (name == "it") return Machine::it;
  throw std::invalid_argument("unknown machine '" + name + "'");
}

}  // namespace

nlohmann::json to_json(const TraceEvent& e) {
  return {{"step", e.step},   {"machine", to_string(e.machine)}, {"rule", e.rule},
          {"head", e.head},   {"stack_depth", e.stack_depth},    {"mu_count", e.mu_count}};
}

TraceEvent trace_event_from_json(const nlohmann::json& j) {
  TraceEvent e;
  e.step = j.at("step").get<std::size_t>();
  e.machine = machine_from(j.at("machine").get<std::string>());
  e.rule = j.at("rule").get<std::string>();
  e.head = j.at("head").get<std::string>();
  e.stack_depth = j.at("stack_depth").get<std::size_t>();
  e.mu_count = j.at("mu_count").get<std::size_t>();
  return e;
}

std::string to_json_line(const TraceEvent& e) { return to_json(e).dump(); }

std::string to_text_line(const TraceEvent& e) {
  return std::to_string(e.step) + "\t" + e.rule + "\tS=" + std::to_string(e.stack_depth) +
         "\tmu=" + std::to_string(e.mu_count) + "\t" + e.head;
}

nlohmann::json to_json(const LockstepReport& r, SimulationPair pair) {
  nlohmann::json j{{"pair", to_string(pair)},
                   {"outcome", to_string(r.kind)},
                   {"steps_checked", r.steps_checked},
                   {"step", r.step},
                   {"related", r.related()},
                   {"rule_violations", r.rule_violations}};
  if (r.kind == LockstepReport::Kind::diverged) {
    j["left"] = r.left;
    j["right"] = r.right;
    j["detail"] = r.detail;
  }
  return j;
}

namespace {

template <class State>
std::string collect(const State& start, std::size_t max_steps) {
  std::string out;
  run(start, max_steps, [&](const TraceEvent& e) {
    out += to_json_line(e);
    out += '\n';
  });
  return out;
}

}  // namespace

std::string json_trace(const TermCTPtr& t, std::size_t max_steps) { return collect(initial_ct(t), max_steps); }

std::string json_trace(const TermGSPtr& t, Machine machine, std::size_t max_steps) {
  switch (machine) {
    case Machine::gs: return collect(initial_gs(t), max_steps);
    case Machine::it: return collect(initial_it(t), max_steps);
    case Machine::ct: return collect(initial_ct(down(t)), max_steps);
  }
  return {};
}

}  // namespace corovm
