#pragma once

// Exact arithmetic over the rationals: sparse univariate polynomials and
// fractions of polynomials whose denominator is a unit of K[[t]].

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace arfc {

using Rational = mpq_class;
using Exponent = std::uint32_t;

/// Order of vanishing of a series; +infinity only for zero.
class Ord {
 public:
  constexpr Ord() = default;  // +infinity
  constexpr explicit Ord(Exponent k) : value_(k) {}

  static constexpr Ord infinity() { return Ord(); }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr Exponent value() const { return *value_; }

  friend constexpr bool operator==(const Ord&, const Ord&) = default;
  friend constexpr std::strong_ordering operator<=>(const Ord& a, const Ord& b) {
    if (a.is_finite() && b.is_finite()) return *a.value_ <=> *b.value_;
    if (a.is_finite()) return std::strong_ordering::less;
    if (b.is_finite()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend constexpr Ord operator+(const Ord& a, const Ord& b) {
    if (!a.is_finite() || !b.is_finite()) return Ord::infinity();
    return Ord(*a.value_ + *b.value_);
  }

  std::string to_string() const;

 private:
  std::optional<Exponent> value_;
};

struct Term {
  Exponent exp;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in one variable. Terms are kept sorted by exponent,
/// exponents are distinct and no stored coefficient is zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term> terms);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, Exponent e);

  bool is_zero() const { return terms_.empty(); }
  Ord ord() const;
  Exponent degree() const;  // 0 for the zero polynomial
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Rational coeff(Exponent e) const;
  Rational constant_term() const { return coeff(0); }
  Rational leading_coeff() const;   // coefficient of the highest-degree term
  Rational lowest_coeff() const;    // coefficient of t^ord

  /// Divide by t^m; requires ord() >= m.
  Polynomial shifted_down(Exponent m) const;
  /// Keep only exponents < cap.
  Polynomial truncated_below(Exponent cap) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

/// Euclidean division over Q; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd over Q (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Settings for fraction reduction. A full polynomial gcd is only attempted
/// once a numerator or denominator passes gcd_threshold in degree.
struct FractionPolicy {
  Exponent gcd_threshold = 256;
};

class SeriesFraction;

/// Remove the common power of t, scale to den(0) == 1 and, past the policy
/// threshold, divide out the polynomial gcd. Throws NotASeries when the
/// quotient has negative order.
SeriesFraction cancel(Polynomial num, Polynomial den, const FractionPolicy& policy = {});

/// num/den with den(0) != 0, so the quotient is a power series. The stored
/// form is canonical up to a common polynomial factor: den(0) == 1 and no
/// common factor t^m.
class SeriesFraction {
 public:
  SeriesFraction() : den_(Polynomial::constant(1)) {}
  SeriesFraction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}  // NOLINT

  static SeriesFraction constant(const Rational& c) { return SeriesFraction(Polynomial::constant(c)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  Ord ord() const { return num_.ord(); }
  /// Value at t = 0.
  Rational constant_term() const { return num_.constant_term() / den_.constant_term(); }
  /// Coefficient of t^ord (zero for the zero series).
  Rational leading_coeff() const;
  bool is_polynomial() const { return den_.size() == 1 && den_.degree() == 0; }
  Exponent max_degree() const { return std::max(num_.degree(), den_.degree()); }

  SeriesFraction operator-() const;

  /// Equality as power series (cross-multiplied).
  friend bool operator==(const SeriesFraction& a, const SeriesFraction& b);

 private:
  friend SeriesFraction cancel(Polynomial num, Polynomial den, const FractionPolicy& policy);
  SeriesFraction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

enum class ArithOp { add, sub, mul, div };

/// Field arithmetic in K(t). div throws DivisionNotRepresentable when the
/// quotient would not be a power series, and on division by zero.
SeriesFraction arith(ArithOp op, const SeriesFraction& a, const SeriesFraction& b,
                     const FractionPolicy& policy = {});

inline SeriesFraction operator+(const SeriesFraction& a, const SeriesFraction& b) { return arith(ArithOp::add, a, b); }
inline SeriesFraction operator-(const SeriesFraction& a, const SeriesFraction& b) { return arith(ArithOp::sub, a, b); }
inline SeriesFraction operator*(const SeriesFraction& a, const SeriesFraction& b) { return arith(ArithOp::mul, a, b); }
inline SeriesFraction operator/(const SeriesFraction& a, const SeriesFraction& b) { return arith(ArithOp::div, a, b); }
SeriesFraction operator*(const Rational& c, const SeriesFraction& f);
SeriesFraction pow(const SeriesFraction& f, unsigned k);

/// Truncated inverse of a unit: the polynomial u with u * p == 1 mod t^cap.
Polynomial inverse_to_cap(const Polynomial& p, Exponent cap);

/// The unique polynomial agreeing with the series expansion of f on every
/// exponent < cap.
Polynomial expand_to_cap(const SeriesFraction& f, Exponent cap);

}  // namespace arfc
