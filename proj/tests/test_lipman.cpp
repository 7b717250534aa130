#include <doctest.h>

#include "arfc/errors.hpp"
#include "arfc/lipman.hpp"
#include "support/fixtures.hpp"

using namespace arfc;
using fixtures::curve;
using fixtures::frac;

namespace {

using Mults = std::vector<std::vector<Exponent>>;

Mults mults_at(const BlowupRecord& r) {
  Mults out;
  for (const auto& b : r.blocks) out.push_back(b.mult.vec);
  return out;
}

bool refines(const Partition& fine, const Partition& coarse) {
  for (const auto& b : fine) {
    bool inside = false;
    for (const auto& c : coarse) {
      inside = inside || std::includes(c.begin(), c.end(), b.begin(), b.end());
    }
    if (!inside) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("lipman") {
  TEST_CASE("blowup_local on the two-branch example") {
    const Parametrization p = fixtures::e1();
    const Parametrization b = blowup_local(p, p.generators[0]);
    REQUIRE(b.generators.size() == 2);
    CHECK(b.generators[0] == p.generators[0]);
    CHECK(b.generators[1][0] == frac("t^3", "1 + t^5"));
    CHECK(b.generators[1][1] == SeriesFraction(fixtures::poly("u^4 + u^6", "u")));
  }

  TEST_CASE("blowup_local drops g/g") {
    const Parametrization p = curve({{"t^2", "u^3"}});
    CHECK(blowup_local(p, p.generators[0]) == p);
  }

  TEST_CASE("blowup_local on the four-branch example") {
    const Parametrization p = fixtures::e2();
    const Parametrization b = blowup_local(p, minimal_element(p));
    const CurveElement want({frac("t", "1 - t^3"), frac("1 + u^5 + u^8", "1 + u^4", "u"),
                             SeriesFraction(fixtures::poly("v^4 - v^6", "v")), frac("1 + w^5", "1 + w^7", "w")});
    const bool found = std::find(b.generators.begin(), b.generators.end(), want) != b.generators.end();
    CHECK(found);
  }

  TEST_CASE("two-branch chain") {
    const auto seq = lipman_sequence(fixtures::e1());
    REQUIRE(seq.records.size() == 6);
    const Mults chain = {{5, 7}, {3, 4}, {2, 3}, {1, 1}, {1, 1}};
    for (std::size_t k = 0; k < chain.size(); ++k) {
      CAPTURE(k);
      CHECK(mults_at(seq.records[k]) == Mults{chain[k]});
      CHECK(seq.records[k].partition == Partition{{0, 1}});
    }
    CHECK(mults_at(seq.records[5]) == Mults{{1, 0}, {0, 1}});
    CHECK(seq.records[0].blocks[0].minimal == fixtures::e1().generators[0]);
  }

  TEST_CASE("four-branch levels") {
    const auto seq = lipman_sequence(fixtures::e2());
    REQUIRE(seq.records.size() == 4);
    CHECK(mults_at(seq.records[0]) == Mults{{5, 2, 3, 2}});
    CHECK(mults_at(seq.records[1]) == Mults{{1, 0, 3, 0}, {0, 2, 0, 2}});
    CHECK(mults_at(seq.records[2]) == Mults{{1, 0, 0, 0}, {0, 2, 0, 2}, {0, 0, 1, 0}});
    CHECK(mults_at(seq.records[3]) == Mults{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    for (std::size_t k = 1; k < seq.records.size(); ++k) {
      CHECK(refines(seq.records[k].partition, seq.records[k - 1].partition));
    }
  }

  TEST_CASE("already regular product") {
    const auto seq = lipman_sequence(curve({{"t", "1"}, {"1", "u"}}));
    REQUIRE(seq.records.size() == 1);
    CHECK(mults_at(seq.records[0]) == Mults{{1, 0}, {0, 1}});
    for (const auto& b : seq.records[0].blocks) CHECK(b.finished);
  }

  TEST_CASE("step cap") {
    LipmanOptions opts;
    opts.max_steps = 1;
    try {
      (void)lipman_sequence(fixtures::e1(), opts);
      FAIL("expected MaxStepsExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MaxStepsExceeded);
    }
  }

  TEST_CASE("serial and parallel runs agree") {
    for (const auto& [name, p] : fixtures::all()) {
      CAPTURE(name);
      const auto a = lipman_sequence(p, {512, ExecutionPolicy::serial});
      const auto b = lipman_sequence(p, {512, ExecutionPolicy::parallel});
      REQUIRE(a.records.size() == b.records.size());
      for (std::size_t k = 0; k < a.records.size(); ++k) {
        CHECK(a.records[k].partition == b.records[k].partition);
        CHECK(mults_at(a.records[k]) == mults_at(b.records[k]));
      }
    }
  }
}
