#include <doctest.h>

#include "arfc/bounds.hpp"
#include "arfc/lipman.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace arfc;

namespace {

// Two-branch fixtures: the two-branch inputs and every pair of the others.
std::vector<std::pair<std::string, Parametrization>> two_branch_fixtures() {
  std::vector<std::pair<std::string, Parametrization>> out;
  for (const auto& [name, p] : fixtures::all()) {
    if (p.n == 2) {
      out.emplace_back(name, p);
      continue;
    }
    for (std::size_t i = 0; i < p.n; ++i) {
      for (std::size_t j = i + 1; j < p.n; ++j) {
        out.emplace_back(name + " pair " + std::to_string(i + 1) + std::to_string(j + 1),
                         normalize(restrict(p, {i, j})));
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("two-branch engine matches the direct transliteration") {
    for (const auto& [name, p] : two_branch_fixtures()) {
      CAPTURE(name);
      const auto engine = lipman_sequence(p);
      const auto ref = oracle::algorithm1(p);
      CHECK(oracle::first_mismatch(engine, ref) == "");
    }
  }

  TEST_CASE("one-branch engine reproduces the Arslan-Sahin sequences") {
    for (const auto& [name, p] : fixtures::all()) {
      for (std::size_t i = 0; i < p.n; ++i) {
        CAPTURE(name);
        CAPTURE(i);
        std::vector<SeriesFraction> gens;
        for (const auto& g : p.generators) gens.push_back(g[i]);
        CHECK(branch_multiplicity_sequence(gens).sequence == oracle::branch_sequence(gens));
      }
    }
  }
}
