#include "arfc/io/report.hpp"

#include <sstream>

#include "arfc/io/poly_io.hpp"

namespace arfc::io {

using nlohmann::json;

namespace {

std::string element_string(const CurveElement& e, const Vars& vars) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.arity(); ++i) {
    if (i) s += ", ";
    s += serialize_fraction(e[i], vars[i]);
  }
  return s + ")";
}

// Coordinates of a block element use the variables of the block's branches.
Vars block_vars(const Block& b, const Vars& vars) {
  Vars out;
  for (auto i : b) out.push_back(vars[i]);
  return out;
}

json ram_json(const MultiplicityTree& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < t.n(); ++j) row.push_back(j > i ? t.ram[i][j] : 0);
    rows.push_back(row);
  }
  return rows;
}

json opt_json(const std::optional<Exponent>& v) { return v ? json(*v) : json(nullptr); }

std::string vec(const std::vector<Exponent>& v) { return to_string(v); }

}  // namespace

json element_json(const CurveElement& e, const Vars& vars) {
  json out = json::array();
  for (std::size_t i = 0; i < e.arity(); ++i) out.push_back(serialize_fraction(e[i], vars[i]));
  return out;
}

json curve_json(const Parametrization& p, const Vars& vars) {
  json gens = json::array();
  for (const auto& g : p.generators) gens.push_back(element_json(g, vars));
  return {{"branches", p.n}, {"vars", vars}, {"generators", gens}};
}

json tree_json(const PipelineResult& r) {
  return {{"sequences", r.tree.sequences},
          {"ram", ram_json(r.tree)},
          {"conductor", r.conductor},
          {"small_elements", r.small},
          {"arf_check", r.arf}};
}

json presentation_json(const ClosurePresentation& pres, const Vars& vars) {
  json basis = json::array();
  for (const auto& b : pres.basis) {
    json coords = json::array();
    for (std::size_t i = 0; i < b.coords.size(); ++i) coords.push_back(serialize_poly(b.coords[i], vars[i]));
    basis.push_back({{"valuation", b.valuation}, {"coords", coords}});
  }
  json term = json::array();
  for (std::size_t i = 0; i < pres.conductor.size(); ++i) {
    term.push_back(serialize_poly(Polynomial::monomial(1, pres.conductor[i]), vars[i]));
  }
  return {{"basis", basis}, {"conductor_term", term}};
}

json bound_json(const BoundReport& b, const Parametrization& truncated, const Vars& vars) {
  json branches = json::array();
  for (const auto& s : b.branches) {
    branches.push_back({{"sequence", s.sequence}, {"length", s.length}, {"conductor", s.conductor}});
  }
  json pairs = json::array();
  for (const auto& p : b.pairs) {
    pairs.push_back({{"branches", {p.i + 1, p.j + 1}},
                     {"case", to_string(p.kind)},
                     {"k_E", p.kE ? json(*p.kE) : json("inf")},
                     {"D", opt_json(p.D)},
                     {"generated_D", opt_json(p.generated)},
                     {"iterations", p.iterations},
                     {"b", {p.bi, p.bj}}});
  }
  return {{"bound", b.bound},
          {"branches", branches},
          {"pairs", pairs},
          {"truncated_generators", curve_json(truncated, vars)["generators"]}};
}

json trace_json(const LipmanSequence& seq, const Vars& vars) {
  json levels = json::array();
  for (const auto& rec : seq.records) {
    json blocks = json::array();
    for (const auto& b : rec.blocks) {
      json block = json::array();
      for (auto i : b.block) block.push_back(i + 1);
      json gens = json::array();
      const Vars bv = block_vars(b.block, vars);
      for (const auto& g : b.generators.generators) gens.push_back(element_json(g, bv));
      blocks.push_back({{"block", block},
                        {"mult", b.mult.vec},
                        {"minimal", element_json(b.minimal, bv)},
                        {"minimal_embedded", element_json(b.embedded, vars)},
                        {"generators", gens},
                        {"finished", b.finished}});
    }
    levels.push_back({{"level", rec.level}, {"blocks", blocks}});
  }
  return levels;
}

json closure_json(const PipelineResult& r, const Vars& vars) {
  json out = tree_json(r);
  out["presentation"] = presentation_json(r.presentation, vars);
  out["bound"] = r.bound ? bound_json(*r.bound, r.used, vars) : json(nullptr);
  return out;
}

std::string tree_text(const PipelineResult& r) {
  std::ostringstream os;
  os << "branches: " << r.tree.n() << "\n";
  for (std::size_t i = 0; i < r.tree.n(); ++i) os << "M_" << i + 1 << " = " << vec(r.tree.sequences[i]) << "\n";
  os << "ramification:\n";
  for (std::size_t i = 0; i < r.tree.n(); ++i) {
    os << " ";
    for (std::size_t j = 0; j < r.tree.n(); ++j) os << " " << (j > i ? r.tree.ram[i][j] : 0);
    os << "\n";
  }
  os << "conductor: " << vec(r.conductor) << "\n";
  os << "small elements:";
  for (const auto& v : r.small) os << " " << vec(v);
  os << "\narf: " << (r.arf ? "yes" : "no") << "\n";
  return os.str();
}

std::string closure_text(const PipelineResult& r, const Vars& vars) {
  std::ostringstream os;
  os << tree_text(r);
  os << "presentation:\n  K" << element_string(CurveElement::ones(r.tree.n()), vars) << "\n";
  for (const auto& b : r.presentation.basis) {
    os << "  K(";
    for (std::size_t i = 0; i < b.coords.size(); ++i) os << (i ? ", " : "") << serialize_poly(b.coords[i], vars[i]);
    os << ")    valuation " << vec(b.valuation) << "\n";
  }
  os << "  + (";
  for (std::size_t i = 0; i < r.conductor.size(); ++i) {
    os << (i ? ", " : "") << serialize_poly(Polynomial::monomial(1, r.conductor[i]), vars[i]);
  }
  os << ") * regular ring\n";
  if (r.bound) os << bound_text(*r.bound, r.used, vars);
  return os.str();
}

std::string bound_text(const BoundReport& b, const Parametrization& truncated, const Vars& vars) {
  std::ostringstream os;
  os << "bound: " << vec(b.bound) << "\n";
  for (std::size_t i = 0; i < b.branches.size(); ++i) {
    os << "  branch " << i + 1 << ": M = " << vec(b.branches[i].sequence) << ", c_r = " << b.branches[i].conductor
       << "\n";
  }
  for (const auto& p : b.pairs) {
    os << "  pair (" << p.i + 1 << "," << p.j + 1 << "): " << to_string(p.kind)
       << ", k_E = " << (p.kE ? std::to_string(*p.kE) : std::string("inf"));
    if (p.D) os << ", D = " << *p.D;
    if (p.generated) os << ", generated D = " << *p.generated;
    os << ", b = (" << p.bi << "," << p.bj << ")\n";
  }
  os << "truncated generators:\n";
  for (const auto& g : truncated.generators) os << "  " << element_string(g, vars) << "\n";
  return os.str();
}

std::string trace_text(const LipmanSequence& seq, const Vars& vars) {
  std::ostringstream os;
  for (const auto& rec : seq.records) {
    os << "level " << rec.level << "\n";
    for (const auto& b : rec.blocks) {
      const Vars bv = block_vars(b.block, vars);
      os << "  block {";
      for (std::size_t k = 0; k < b.block.size(); ++k) os << (k ? "," : "") << b.block[k] + 1;
      os << "} mult " << vec(b.mult.vec) << (b.finished ? " (regular)" : "") << "\n";
      os << "    minimal " << element_string(b.embedded, vars) << "\n";
      for (const auto& g : b.generators.generators) os << "    gen " << element_string(g, bv) << "\n";
    }
  }
  return os.str();
}

std::string tree_dot(const MultiplicityTree& t, const MinimalTree* mt, const Vars& vars) {
  std::ostringstream os;
  os << "digraph multiplicity_tree {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  const std::size_t depth = std::max<std::size_t>(t.depth() + 1, mt ? mt->levels.size() : 0);
  auto id = [](const Block& b, std::size_t m) {
    std::string s = "n" + std::to_string(m);
    for (auto i : b) s += "_" + std::to_string(i + 1);
    return s;
  };
  for (std::size_t m = 1; m <= depth; ++m) {
    for (const auto& b : t.blocks_at(m)) {
      std::string label = vec(t.node(b, m));
      if (mt) label += "\\n" + element_string(mt->at(b, m), vars);
      os << "  " << id(b, m) << " [label=\"" << label << "\"];\n";
      if (m > 1) {
        for (const auto& parent : t.blocks_at(m - 1)) {
          if (std::find(parent.begin(), parent.end(), b.front()) != parent.end()) {
            os << "  " << id(parent, m - 1) << " -> " << id(b, m) << ";\n";
          }
        }
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace arfc::io
