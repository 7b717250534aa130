// arfc: Arf closure of an algebroid curve from a parametrization file.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arfc/errors.hpp"
#include "arfc/io/curve_file.hpp"
#include "arfc/io/pipeline.hpp"
#include "arfc/io/report.hpp"

namespace {

using namespace arfc;
using nlohmann::json;

enum class Command { tree, closure, bound, check };

struct Settings {
  std::string file;
  std::string format = "json";
  bool no_truncate = false;
  bool trace = false;
  std::size_t max_steps = 512;
};

json checks_json(const io::PipelineResult& r, bool& passed) {
  json out;
  const auto diag = validate_tree(r.tree);
  out["valid_tree"] = diag.valid;
  if (!diag.valid) out["invalid_axiom"] = diag.axiom + ": " + diag.detail;
  out["arf"] = r.arf;
  out["small_matches_scan"] = small_elements_by_scan(r.tree) == r.small;

  bool ram_ok = true;
  for (std::size_t i = 0; i < r.tree.n(); ++i) {
    for (std::size_t j = i + 1; j < r.tree.n(); ++j) {
      const auto k = k_E(r.tree.sequences[i], r.tree.sequences[j]);
      ram_ok = ram_ok && (!k || r.tree.ram[i][j] <= *k);
    }
  }
  out["ram_below_k_E"] = ram_ok;
  passed = diag.valid && r.arf && out["small_matches_scan"].get<bool>() && ram_ok;

  if (r.bound) {
    bool above = true;
    for (std::size_t i = 0; i < r.conductor.size(); ++i) above = above && r.bound->bound[i] >= r.conductor[i] + 1;
    const auto full = lipman_sequence(r.input);
    const bool same = build_tree(full) == r.tree;
    out["bound_above_conductor"] = above;
    out["truncation_invariant"] = same;
    passed = passed && above && same;
  }
  out["passed"] = passed;
  return out;
}

std::string checks_text(const json& c) {
  std::string s;
  for (auto it = c.begin(); it != c.end(); ++it) {
    s += it.key() + ": " + (it->is_boolean() ? (it->get<bool>() ? "yes" : "no") : it->get<std::string>()) + "\n";
  }
  return s;
}

int run(Command cmd, const Settings& s) {
  const auto in = io::parse_curve_file(s.file);
  io::PipelineOptions opts;
  opts.truncate = !s.no_truncate;
  opts.max_steps = s.max_steps;
  const auto r = io::run_pipeline(in.curve, opts);
  const auto& vars = in.vars;

  if (s.format == "dot") {
    if (cmd != Command::tree && cmd != Command::closure) {
      std::cerr << "arfc: dot output is only available for tree and closure\n";
      return 1;
    }
    std::cout << io::tree_dot(r.tree, cmd == Command::closure ? &r.minimal : nullptr, vars);
    return 0;
  }

  bool passed = true;
  json doc;
  std::string text;
  switch (cmd) {
    case Command::tree:
      doc = io::tree_json(r);
      text = io::tree_text(r);
      break;
    case Command::closure:
      doc = io::closure_json(r, vars);
      text = io::closure_text(r, vars);
      break;
    case Command::bound:
      if (!r.bound) {
        std::cerr << "arfc: bound is not computed with --no-truncate\n";
        return 1;
      }
      doc = {{"bound", io::bound_json(*r.bound, r.used, vars)}};
      text = io::bound_text(*r.bound, r.used, vars);
      break;
    case Command::check:
      doc = {{"checks", checks_json(r, passed)}};
      text = checks_text(doc["checks"]);
      break;
  }
  if (s.trace) {
    doc["trace"] = io::trace_json(r.lipman, vars);
    text += "trace:\n" + io::trace_text(r.lipman, vars);
  }
  if (s.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arf closure of an algebroid curve"};
  app.require_subcommand(1);
  Settings s;

  struct Sub {
    const char* name;
    const char* help;
    Command cmd;
  };
  const Sub subs[] = {
      {"tree", "multiplicity tree, conductor and small elements", Command::tree},
      {"closure", "full result including the presentation of the closure", Command::closure},
      {"bound", "truncation bound and the truncated parametrization", Command::bound},
      {"check", "consistency checks on the computed tree", Command::check},
  };
  Command chosen = Command::tree;
  for (const auto& sub : subs) {
    auto* sc = app.add_subcommand(sub.name, sub.help);
    sc->add_option("file", s.file, "curve file (JSON)")->required();
    sc->add_flag("--no-truncate", s.no_truncate, "skip the bound and truncation stage");
    sc->add_option("--max-steps", s.max_steps, "cap on blow-up levels")->check(CLI::PositiveNumber);
    sc->add_option("--format", s.format, "output format")->check(CLI::IsMember({"json", "text", "dot"}));
    sc->add_flag("--trace", s.trace, "include every blow-up record");
    const Command c = sub.cmd;
    sc->callback([&chosen, c] { chosen = c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run(chosen, s);
  } catch (const Error& e) {
    std::cerr << "arfc: " << e.what() << "\n";
    return is_input_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "arfc: " << e.what() << "\n";
    return 2;
  }
}
