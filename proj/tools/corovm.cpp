// corovm: command-line front end for the coroutine calculi and machines.
//
// Exit codes: 0 success / safe / related, 1 parse error or unsafe term,
// 2 stuck machine or diverged simulation, 3 fuel exhausted.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corovm/bisim.hpp"
#include "corovm/generate.hpp"
#include "corovm/machines.hpp"
#include "corovm/safety.hpp"
#include "corovm/syntax.hpp"
#include "corovm/trace.hpp"
#include "corovm/translate.hpp"

namespace fs = std::filesystem;
using namespace corovm;

namespace {

enum Exit : int { ok = 0, rejected = 1, broken = 2, out_of_fuel = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Calculus calculus_for(const std::string& path, const std::string& flag) {
  if (flag == "ct") return Calculus::ct;
  if (flag == "gs") return Calculus::gs;
  auto ext = fs::path(path).extension().string();
  if (ext == ".ct") return Calculus::ct;
  if (ext == ".gs") return Calculus::gs;
  throw InputError(path + ": cannot tell the calculus; use a .ct/.gs extension or --calculus");
}

std::size_t default_fuel() {
  if (const char* env = std::getenv("COROUTINE_VM_MAX_STEPS")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring COROUTINE_VM_MAX_STEPS=" << env << "\n";
    }
  }
  return default_max_steps;
}

// A source file brought to the form a machine needs. gs sources compile to
// ct with down; ct sources lift to gs when they are safe.
struct Program {
  Calculus calculus;
  std::optional<TermCTPtr> ct;
  std::optional<TermGSPtr> gs;
};

Program load(const std::string& path, const std::string& calculus_flag) {
  Program p{calculus_for(path, calculus_flag), {}, {}};
  std::string src = read_file(path);
  if (p.calculus == Calculus::ct) {
    p.ct = to_debruijn_ct(parse<Calculus::ct>(src));
  } else {
    p.gs = to_debruijn_gs(parse<Calculus::gs>(src));
  }
  return p;
}

TermGSPtr need_gs(Program& p) {
  if (!p.gs) p.gs = lift(*p.ct);
  return *p.gs;
}

TermCTPtr need_ct(Program& p) {
  if (!p.ct) p.ct = down(*p.gs);
  return *p.ct;
}

// ---------------------------------------------------------------------------

int cmd_parse(const std::string& file, const std::string& calculus) {
  Calculus c = calculus_for(file, calculus);
  std::string src = read_file(file);
  if (c == Calculus::ct) {
    auto t = parse<Calculus::ct>(src);
    std::cout << print<Calculus::ct>(t) << "\n";
  } else {
    auto t = parse<Calculus::gs>(src);
    std::cout << print<Calculus::gs>(t) << "\n";
  }
  return ok;
}

int cmd_check(const std::string& file, const std::string& calculus, bool do_lift) {
  Calculus c = calculus_for(file, calculus);
  std::string src = read_file(file);
  if (c == Calculus::gs) {
    auto t = to_debruijn_gs(parse<Calculus::gs>(src));
    std::cout << "well-scoped: " << print<Calculus::gs>(t) << "\n";
    return ok;
  }
  auto named = parse<Calculus::ct>(src);
  auto indexed = to_debruijn_ct(named);
  bool by_use_sets = is_safe(named);
  bool by_visibility = safe_named(named);
  bool by_indices = safe_db(indexed);
  if (by_use_sets != by_visibility || by_visibility != by_indices) {
    std::cout << "inconsistent: use-sets=" << by_use_sets << " visible-vars=" << by_visibility
              << " indexed=" << by_indices << "\n";
    return broken;
  }
  std::cout << (by_use_sets ? "safe" : "unsafe") << " (use-sets=visible-vars=indexed: " << std::boolalpha
            << by_use_sets << ")\n";
  std::cout << "indexed: " << print<Calculus::ct>(indexed) << "\n";
  if (do_lift) {
    try {
      auto lifted = print<Calculus::gs>(lift(indexed));
      std::cout << "lifted: " << lifted << "\n";
    } catch (const TranslationError& e) {
      std::cout << "not liftable: " << e.what() << "\n";
    }
  }
  return by_use_sets ? ok : rejected;
}

int cmd_compile(const std::string& file) {
  auto t = to_debruijn_gs(parse<Calculus::gs>(read_file(file)));
  auto out = down(t);
  if (!safe_db(out)) {
    std::cerr << "internal error: compiled term is not safe: " << print<Calculus::ct>(out) << "\n";
    return broken;
  }
  std::cout << print<Calculus::ct>(out) << "\n";
  return ok;
}

template <class State>
int report_run(const State& start, Machine m, std::size_t fuel, bool trace, bool json) {
  TraceSink sink;
  if (trace) {
    sink = [json](const TraceEvent& e) { std::cout << (json ? to_json_line(e) : to_text_line(e)) << "\n"; };
  }
  auto result = run(start, fuel, sink);
  if (json) {
    nlohmann::json j{{"machine", to_string(m)},
                     {"outcome", to_string(result.outcome)},
                     {"steps", result.steps},
                     {"head", head_term(result.state)}};
    if (result.reason) j["reason"] = to_string(*result.reason);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << to_string(result.outcome) << " after " << result.steps << " steps";
    if (result.reason) std::cout << " (" << to_string(*result.reason) << ")";
    std::cout << ": " << head_term(result.state) << "\n";
  }
  switch (result.outcome) {
    case RunOutcome::final: return ok;
    case RunOutcome::stuck: return broken;
    case RunOutcome::fuel_exhausted: return out_of_fuel;
  }
  return broken;
}

int cmd_run(const std::string& file, const std::string& calculus, std::string machine, std::size_t fuel, bool trace,
            const std::string& format) {
  Program p = load(file, calculus);
  if (machine.empty()) machine = p.calculus == Calculus::ct ? "ct" : "gs";
  bool json = format == "json";
  if (machine == "ct") return report_run(initial_ct(need_ct(p)), Machine::ct, fuel, trace, json);
  if (machine == "gs") return report_run(initial_gs(need_gs(p)), Machine::gs, fuel, trace, json);
  return report_run(initial_it(need_gs(p)), Machine::it, fuel, trace, json);
}

SimulationPair pair_from(const std::string& name) {
  if (name == "star") return SimulationPair::star;
  if (name == "diamond") return SimulationPair::diamond;
  return SimulationPair::composed;
}

std::string report_text(const LockstepReport& r) {
  std::string out = to_string(r.kind);
  out += " at step " + std::to_string(r.step) + ", " + std::to_string(r.steps_checked) + " steps checked";
  out += r.related() ? ", all related" : ", NOT related";
  if (r.rule_violations) out += ", " + std::to_string(r.rule_violations) + " rule violations";
  if (r.kind == LockstepReport::Kind::diverged) {
    out += "\n  " + r.detail + "\n  image:  " + r.left + "\n  actual: " + r.right;
  }
  return out;
}

int bisim_one(const std::string& file, const std::string& calculus, SimulationPair pair, std::size_t fuel, bool json,
              std::ostream& out) {
  Program p = load(file, calculus);
  auto report = lockstep(need_gs(p), pair, fuel);
  if (json)
    out << to_json(report, pair).dump() << "\n";
  else
    out << report_text(report) << "\n";
  return report.related() ? ok : broken;
}

int guarded(const std::function<int()>& body, std::ostream& err = std::cerr) {
  try {
    return body();
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
  } catch (const ScopeError& e) {
    err << "scope error: " << e.what() << "\n";
  } catch (const TranslationError& e) {
    err << "translation error: " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return rejected;
}

int cmd_bisim_all(const std::string& dir, const std::string& calculus, SimulationPair pair, std::size_t fuel,
                  bool json) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    auto ext = entry.path().extension().string();
    if (entry.is_regular_file() && ext == ".gs") files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());

  struct Outcome {
    int code;
    std::string text;
  };
  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files) {
    jobs.push_back(std::async(std::launch::async, [=] {
      std::ostringstream out;
      int code = guarded([&] { return bisim_one(f, calculus, pair, fuel, json, out); }, out);
      return Outcome{code, out.str()};
    }));
  }
  int worst = ok;
  for (std::size_t k = 0; k < files.size(); ++k) {
    Outcome o = jobs[k].get();
    std::cout << files[k] << ": " << o.text;
    worst = std::max(worst, o.code);
  }
  return worst;
}

int cmd_gen(std::uint64_t seed, std::size_t size, std::size_t count, const std::string& calculus, bool unsafe_ok,
            std::size_t args, const std::string& out_dir) {
  TermGenerator gen(seed);
  std::size_t unsafe = 0;
  for (std::size_t k = 0; k < count; ++k) {
    std::string text;
    if (calculus == "ct" && unsafe_ok) {
      auto t = gen.closed_ct(size);
      if (!is_safe(t)) ++unsafe;
      text = print<Calculus::ct>(t);
    } else {
      auto t = args ? gen.applied_gs(size, args) : gen.well_scoped_gs(size);
      text = calculus == "gs" ? print<Calculus::gs>(t) : print<Calculus::ct>(as_ct(t));
    }
    if (out_dir.empty()) {
      std::cout << text << "\n";
    } else {
      fs::create_directories(out_dir);
      char name[64];
      std::snprintf(name, sizeof name, "gen_%llu_%03zu.%s", static_cast<unsigned long long>(seed), k,
                    calculus.c_str());
      std::ofstream(fs::path(out_dir) / name) << text << "\n";
    }
  }
  if (calculus == "ct" && unsafe_ok) std::cerr << "unsafe: " << unsafe << "/" << count << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corovm: safe catch/throw terms, coroutine machines and their lock-step simulations"};
  app.require_subcommand(1);

  std::string file;
  std::string calculus;
  std::size_t fuel = default_fuel();

  auto* parse_cmd = app.add_subcommand("parse", "Parse a term and print it back");
  parse_cmd->add_option("file", file, "Input .ct or .gs file")->required();
  parse_cmd->add_option("--calculus", calculus, "Override the calculus")->check(CLI::IsMember({"ct", "gs"}));

  bool do_lift = false;
  auto* check_cmd = app.add_subcommand("check", "Check safety (ct) or visibility (gs)");
  check_cmd->add_option("file", file, "Input .ct or .gs file")->required();
  check_cmd->add_option("--calculus", calculus, "Override the calculus")->check(CLI::IsMember({"ct", "gs"}));
  check_cmd->add_flag("--lift", do_lift, "Also translate a safe ct term to gs");

  auto* compile_cmd = app.add_subcommand("compile", "Compile a gs term to a safe ct term");
  compile_cmd->add_option("file", file, "Input .gs file")->required();

  std::string machine;
  bool trace = false;
  std::string format = "text";
  auto* run_cmd = app.add_subcommand("run", "Run a term on one of the machines");
  run_cmd->add_option("file", file, "Input .ct or .gs file")->required();
  run_cmd->add_option("--calculus", calculus, "Override the calculus")->check(CLI::IsMember({"ct", "gs"}));
  run_cmd->add_option("--machine", machine, "ct, gs or it (default: the file's calculus)")
      ->check(CLI::IsMember({"ct", "gs", "it"}));
  run_cmd->add_option("--max-steps", fuel, "Transition budget");
  run_cmd->add_flag("--trace", trace, "Print one event per transition");
  run_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string pair = "composed";
  std::string all_dir;
  auto* bisim_cmd = app.add_subcommand("bisim", "Check the lock-step simulations on a term");
  bisim_cmd->add_option("file", file, "Input .gs (or safe .ct) file");
  bisim_cmd->add_option("--all", all_dir, "Check every .gs file in a directory");
  bisim_cmd->add_option("--calculus", calculus, "Override the calculus")->check(CLI::IsMember({"ct", "gs"}));
  bisim_cmd->add_option("--pair", pair, "star, diamond or composed")
      ->check(CLI::IsMember({"star", "diamond", "composed"}));
  bisim_cmd->add_option("--max-steps", fuel, "Transition budget");
  bisim_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::uint64_t seed = 1;
  std::size_t size = 10;
  std::size_t count = 1;
  std::string gen_calculus = "gs";
  bool unsafe_ok = false;
  std::string out_dir;
  auto* gen_cmd = app.add_subcommand("gen", "Generate random closed terms");
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--size", size, "Target number of term constructors")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--count", count, "Number of terms");
  gen_cmd->add_option("--calculus", gen_calculus, "ct or gs")->check(CLI::IsMember({"ct", "gs"}));
  gen_cmd->add_flag("--unsafe-ok", unsafe_ok, "ct only: allow unsafe terms");
  std::size_t gen_args = 0;
  gen_cmd->add_option("--args", gen_args, "Apply each safe term to this many generated arguments");
  gen_cmd->add_option("--out", out_dir, "Write one file per term into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : Exit::rejected;
  }

  if (*parse_cmd) return guarded([&] { return cmd_parse(file, calculus); });
  if (*check_cmd) return guarded([&] { return cmd_check(file, calculus, do_lift); });
  if (*compile_cmd) return guarded([&] { return cmd_compile(file); });
  if (*run_cmd) return guarded([&] { return cmd_run(file, calculus, machine, fuel, trace, format); });
  if (*bisim_cmd) {
    bool json = format == "json";
    if (!all_dir.empty()) return guarded([&] { return cmd_bisim_all(all_dir, calculus, pair_from(pair), fuel, json); });
    if (file.empty()) {
      std::cerr << "bisim: give a file or --all <dir>\n";
      return Exit::rejected;
    }
    return guarded([&] { return bisim_one(file, calculus, pair_from(pair), fuel, json, std::cout); });
  }
  if (*gen_cmd) return guarded([&] { return cmd_gen(seed, size, count, gen_calculus, unsafe_ok, gen_args, out_dir); });
  return Exit::rejected;
}
