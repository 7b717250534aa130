#include <doctest.h>

#include "arfc/curve.hpp"
#include "arfc/errors.hpp"
#include "support/fixtures.hpp"

using namespace arfc;
using fixtures::curve;
using fixtures::poly;

namespace {

std::vector<Exponent> vec(std::initializer_list<Exponent> v) { return v; }

ValVector ords(std::initializer_list<int> v) {
  ValVector out;
  for (int x : v) out.push_back(x < 0 ? Ord::infinity() : Ord(Exponent(x)));
  return out;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::SchemaError;
}

}  // namespace

TEST_SUITE("curve") {
  TEST_CASE("normalize") {
    CHECK(normalize(curve({{"1 + t^2", "1 + u^4"}})) == curve({{"t^2", "u^4"}}));
    CHECK(normalize(curve({{"t", "u"}})) == curve({{"t", "u"}}));
    CHECK(code_of([] { (void)normalize(curve({{"2", "2"}})); }) == ErrorCode::EmptyRing);
    // Different constants are not a shared unit and stay untouched.
    CHECK(normalize(curve({{"1 + t", "2 + u"}})) == curve({{"1 + t", "2 + u"}}));
    // Zero generators are dropped.
    CHECK(normalize(curve({{"t", "u"}, {"0", "0"}})) == curve({{"t", "u"}}));
  }

  TEST_CASE("valuation") {
    CHECK(valuation(fixtures::e2().generators[0]) == ords({5, 2, 3, 2}));
    CHECK(valuation(curve({{"0", "u"}}).generators[0]) == ords({-1, 1}));
    CHECK(valuation(fixtures::e1().generators[0]) == ords({5, 7}));
  }

  TEST_CASE("multiplicity_vector") {
    CHECK(multiplicity_vector(fixtures::e1()) == vec({5, 7}));
    CHECK(multiplicity_vector(curve({{"t", "u"}})) == vec({1, 1}));
    CHECK(multiplicity_vector(curve({{"t^3", "u^7"}, {"t^5", "u^4"}})) == vec({3, 4}));
    CHECK(code_of([] { (void)multiplicity_vector(curve({{"t", "0"}})); }) == ErrorCode::InfiniteComponent);
  }

  TEST_CASE("minimal_element") {
    CHECK(minimal_element(fixtures::e1()) == fixtures::e1().generators[0]);
    const CurveElement x = minimal_element(curve({{"t^3", "u^7"}, {"t^5", "u^4"}}));
    CHECK(x == curve({{"t^3 + t^5", "u^4 + u^7"}}).generators[0]);
    // Independent check of the order on each coordinate.
    CHECK(x[0].num().terms().front().exp == 3);
    CHECK(x[1].num().terms().front().exp == 4);
    CHECK(minimal_element(curve({{"t^2 + t^3", "u^5"}})) == curve({{"t^2 + t^3", "u^5"}}).generators[0]);
  }

  TEST_CASE("minimal_element avoids cancellation of leading terms") {
    // Pair sums cancel on a branch; the greedy path has to pick coefficients.
    const Parametrization p = curve({{"t", "u^2", "v^3"}, {"-t", "u", "v^5"}, {"t^4", "u^3", "v"}});
    const CurveElement x = minimal_element(p);
    CHECK(valuation(x) == ords({1, 1, 1}));
    const Parametrization q = curve({{"t", "u^3"}, {"-t^2", "u"}});
    CHECK(valuation(minimal_element(q)) == ords({1, 1}));
    const Parametrization r = curve({{"t", "u", "v^2"}, {"-t", "-u", "v"}});
    CHECK(valuation(minimal_element(r)) == ords({1, 1, 1}));
  }

  TEST_CASE("mult_star") {
    // Split into {1,3} and {2,4} with mults (1,3) and (2,2).
    const Parametrization p = curve({{"t", "1", "v^3", "1"}, {"1", "u^2", "1", "w^2"}});
    const auto ms = mult_star(p, {{0, 2}, {1, 3}});
    REQUIRE(ms.size() == 2);
    CHECK(ms[0].vec == vec({1, 0, 3, 0}));
    CHECK(ms[1].vec == vec({0, 2, 0, 2}));

    const auto split = mult_star(curve({{"t", "1"}, {"1", "u"}}), {{0}, {1}});
    CHECK(split[0].vec == vec({1, 0}));
    CHECK(split[1].vec == vec({0, 1}));

    const auto local = mult_star(fixtures::e1(), {{0, 1}});
    REQUIRE(local.size() == 1);
    CHECK(local[0].vec == multiplicity_vector(fixtures::e1()));
  }

  TEST_CASE("embed and restrict") {
    const Parametrization p = fixtures::e2();
    const Parametrization r = restrict(p, {1, 3});
    CHECK(r.n == 2);
    CHECK(r.generators[0][1] == p.generators[0][3]);
    const CurveElement e = embed(r.generators[0], {1, 3}, 4);
    CHECK(e[0] == SeriesFraction::constant(1));
    CHECK(e[3] == p.generators[0][3]);
  }
}
