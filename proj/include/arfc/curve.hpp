#pragma once

// Multi-branch ring elements and parametrizations.

#include <cstddef>
#include <string>
#include <vector>

#include "arfc/algebra.hpp"

namespace arfc {

using ValVector = std::vector<Ord>;
using Block = std::vector<std::size_t>;  // sorted 0-based branch indices

/// One element of K[[t_1]] x ... x K[[t_n]]; coordinate i lives in t_i.
class CurveElement {
 public:
  CurveElement() = default;
  explicit CurveElement(std::vector<SeriesFraction> coords) : coords_(std::move(coords)) {}

  static CurveElement ones(std::size_t n);
  static CurveElement zero(std::size_t n);

  std::size_t arity() const { return coords_.size(); }
  const SeriesFraction& operator[](std::size_t i) const { return coords_[i]; }
  SeriesFraction& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<SeriesFraction>& coords() const { return coords_; }

  bool is_zero() const;

  friend CurveElement operator+(const CurveElement& a, const CurveElement& b);
  friend CurveElement operator-(const CurveElement& a, const CurveElement& b);
  friend CurveElement operator*(const CurveElement& a, const CurveElement& b);
  friend CurveElement operator/(const CurveElement& a, const CurveElement& b);
  friend CurveElement operator*(const Rational& c, const CurveElement& a);
  friend bool operator==(const CurveElement& a, const CurveElement& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<SeriesFraction> coords_;
};

CurveElement pow(const CurveElement& e, unsigned k);

struct Parametrization {
  std::size_t n = 0;
  std::vector<CurveElement> generators;

  friend bool operator==(const Parametrization&, const Parametrization&) = default;
};

/// Mult vector of one local block, padded with zeros off the block.
struct LabeledMult {
  Block support;
  std::vector<Exponent> vec;

  friend bool operator==(const LabeledMult&, const LabeledMult&) = default;
};

/// Subtract the shared constant from generators whose coordinates are all
/// units with one common constant term, and drop zero generators.
Parametrization normalize(const Parametrization& p);

ValVector valuation(const CurveElement& e);

/// Componentwise minimum of the generator valuations. Throws
/// InfiniteComponent if a branch only ever sees zero.
std::vector<Exponent> multiplicity_vector(const Parametrization& p);

/// Project every generator to the coordinates in `block` (not normalized).
Parametrization restrict(const Parametrization& p, const Block& block);

/// Element of the ring with valuation equal to multiplicity_vector(p).
CurveElement minimal_element(const Parametrization& p);

/// Put a block element into n coordinates, 1 off the block.
CurveElement embed(const CurveElement& x, const Block& block, std::size_t n);

std::vector<LabeledMult> mult_star(const Parametrization& p, const std::vector<Block>& parts);

std::string to_string(const ValVector& v);

}  // namespace arfc
