// String-in, plain-data-out bindings: terms cross the boundary in their
// printed form, results come back as dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "corovm/bisim.hpp"
#include "corovm/generate.hpp"
#include "corovm/safety.hpp"
#include "corovm/trace.hpp"
#include "corovm/translate.hpp"

namespace py = pybind11;
using namespace corovm;

namespace {

Calculus calculus_from(const std::string& name) {
  if (name == "ct") return Calculus::ct;
  if (name == "gs") return Calculus::gs;
  throw py::value_error("calculus must be 'ct' or 'gs', got '" + name + "'");
}

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

// Named or indexed source, whichever it is written in. The indexed form is
// recognised by its '#' variables or binder-less '\.'.
bool looks_indexed(const std::string& src) {
  return src.find('#') != std::string::npos || src.find("\\.") != std::string::npos;
}

TermCTPtr ct_term(const std::string& src) {
  return looks_indexed(src) ? parse_indexed<Calculus::ct>(src) : to_debruijn_ct(parse<Calculus::ct>(src));
}

TermGSPtr gs_term(const std::string& src) {
  return looks_indexed(src) ? parse_indexed<Calculus::gs>(src) : to_debruijn_gs(parse<Calculus::gs>(src));
}

std::string normalize(const std::string& src, const std::string& calculus) {
  if (calculus_from(calculus) == Calculus::ct) return print<Calculus::ct>(parse<Calculus::ct>(src));
  return print<Calculus::gs>(parse<Calculus::gs>(src));
}

std::string to_indexed(const std::string& src, const std::string& calculus) {
  if (calculus_from(calculus) == Calculus::ct) return print<Calculus::ct>(to_debruijn_ct(parse<Calculus::ct>(src)));
  return print<Calculus::gs>(to_debruijn_gs(parse<Calculus::gs>(src)));
}

py::dict check(const std::string& src) {
  auto t = parse<Calculus::ct>(src);
  auto indexed = to_debruijn_ct(t);
  py::dict d;
  d["use_sets"] = is_safe(t);
  d["visible_vars"] = safe_named(t);
  d["indexed"] = safe_db(indexed);
  d["term"] = print<Calculus::ct>(indexed);
  return d;
}

template <class State>
py::dict run_state(const State& start, Machine m, std::size_t max_steps, bool trace) {
  std::vector<TraceEvent> events;
  TraceSink sink;
  if (trace) sink = [&](const TraceEvent& e) { events.push_back(e); };
  auto r = run(start, max_steps, sink);
  py::dict d;
  d["machine"] = to_string(m);
  d["outcome"] = to_string(r.outcome);
  d["steps"] = r.steps;
  d["head"] = head_term(r.state);
  if (r.reason) d["reason"] = to_string(*r.reason);
  if (trace) {
    py::list out;
    for (const auto& e : events) out.append(to_py(to_json(e)));
    d["trace"] = out;
  }
  return d;
}

py::dict run_term(const std::string& src, const std::string& calculus, const std::string& machine,
                  std::size_t max_steps, bool trace) {
  Calculus c = calculus_from(calculus);
  if (machine == "ct") {
    auto t = c == Calculus::ct ? ct_term(src) : down(gs_term(src));
    return run_state(initial_ct(t), Machine::ct, max_steps, trace);
  }
  if (machine != "gs" && machine != "it") throw py::value_error("machine must be 'ct', 'gs' or 'it'");
  auto t = c == Calculus::gs ? gs_term(src) : lift(ct_term(src));
  if (machine == "gs") return run_state(initial_gs(t), Machine::gs, max_steps, trace);
  return run_state(initial_it(t), Machine::it, max_steps, trace);
}

py::object bisim(const std::string& src, const std::string& pair, std::size_t max_steps) {
  SimulationPair p;
  if (pair == "star")
    p = SimulationPair::star;
  else if (pair == "diamond")
    p = SimulationPair::diamond;
  else if (pair == "composed")
    p = SimulationPair::composed;
  else
    throw py::value_error("pair must be 'star', 'diamond' or 'composed'");
  return to_py(to_json(lockstep(gs_term(src), p, max_steps), p));
}

std::vector<std::string> generate(std::uint64_t seed, std::size_t size, std::size_t count,
                                  const std::string& calculus, std::size_t args) {
  if (size == 0) throw py::value_error("size must be positive");
  Calculus c = calculus_from(calculus);
  TermGenerator gen(seed);
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count; ++k) {
    auto t = args ? gen.applied_gs(size, args) : gen.well_scoped_gs(size);
    out.push_back(c == Calculus::gs ? print<Calculus::gs>(t) : print<Calculus::ct>(as_ct(t)));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_corovm, m) {
  m.doc() = "Safe catch/throw terms, coroutine machines and their lock-step simulations";

  py::register_exception<SyntaxError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ScopeError>(m, "ScopeError", PyExc_ValueError);
  py::register_exception<TranslationError>(m, "TranslationError", PyExc_ValueError);

  m.def("parse", &normalize, py::arg("src"), py::arg("calculus") = "ct", "Parse a named term and print it back.");
  m.def("to_indexed", &to_indexed, py::arg("src"), py::arg("calculus") = "ct",
        "Named term to its de Bruijn form (local indices for gs).");
  m.def("check", &check, py::arg("src"), "The three safety judgments on a named ct term.");
  m.def(
      "compile", [](const std::string& src) { return print<Calculus::ct>(down(gs_term(src))); }, py::arg("src"),
      "Compile a gs term to an indexed ct term.");
  m.def(
      "lift", [](const std::string& src) { return print<Calculus::gs>(lift(ct_term(src))); }, py::arg("src"),
      "Recover the gs term of a safe ct term.");
  m.def("run", &run_term, py::arg("src"), py::arg("calculus") = "gs", py::arg("machine") = "gs",
        py::arg("max_steps") = default_max_steps, py::arg("trace") = false, "Run a closed term on one machine.");
  m.def("bisim", &bisim, py::arg("src"), py::arg("pair") = "composed", py::arg("max_steps") = 500,
        "Lock-step check of the it machine against ct (star), gs (diamond) or both.");
  m.def("generate", &generate, py::arg("seed"), py::arg("size") = 12, py::arg("count") = 1,
        py::arg("calculus") = "gs", py::arg("args") = 0, "Random closed well-scoped terms, printed.");
}
