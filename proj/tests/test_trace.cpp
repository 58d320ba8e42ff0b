#include <doctest.h>

#include <sstream>

#include "corovm/trace.hpp"

using namespace corovm;
using C = Calculus;

TEST_SUITE("trace") {
  TEST_CASE("json lines have sorted keys and round trip") {
    TraceEvent e{4, Machine::it, "get", "get. set 0 \\. #0", 2, 1};
    auto line = to_json_line(e);
    CHECK(line ==
          R"({"head":"get. set 0 \\. #0","machine":"it","mu_count":1,"rule":"get","stack_depth":2,"step":4})");
    CHECK(trace_event_from_json(nlohmann::json::parse(line)) == e);
  }

  TEST_CASE("text lines") {
    TraceEvent e{0, Machine::ct, "app", "#0 #1", 0, 3};
    CHECK(to_text_line(e) == "0\tapp\tS=0\tmu=3\t#0 #1");
  }

  TEST_CASE("demo traces") {
    auto gs_trace = json_trace(parse_indexed<C::gs>("get. set 0 (\\. #0)"), Machine::gs, 100);
    std::istringstream in(gs_trace);
    std::string line;
    std::vector<std::string> rules;
    while (std::getline(in, line)) rules.push_back(nlohmann::json::parse(line).at("rule"));
    CHECK(rules == std::vector<std::string>{"get", "set", "final"});

    // ct run of the compiled term names the ct rules
    auto ct_trace = json_trace(parse_indexed<C::gs>("get. set 0 (\\. #0)"), Machine::ct, 100);
    CHECK(ct_trace.find("\"rule\":\"catch\"") != std::string::npos);
    CHECK(ct_trace == json_trace(parse_indexed<C::ct>("catch. throw 0 (\\. #0)"), 100));
  }

  TEST_CASE("lockstep reports serialize") {
    auto r = lockstep(parse_indexed<C::gs>("\\. #0"), SimulationPair::star, 10);
    auto j = to_json(r, SimulationPair::star);
    CHECK(j.at("outcome") == "both_halted");
    CHECK(j.at("related") == true);
    CHECK(j.at("pair") == "star");
    CHECK_FALSE(j.contains("left"));
  }
}
