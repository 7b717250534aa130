#include "arfc/algebra.hpp"

#include <cassert>

#include "arfc/errors.hpp"

namespace arfc {

std::string Ord::to_string() const {
  return is_finite() ? std::to_string(value()) : std::string("inf");
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

// Sort by exponent, merge equal exponents, drop zeros.
std::vector<Term> canonical(std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(raw.size());
  for (auto& t : raw) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<Term> terms) : terms_(canonical(std::move(terms))) {}

Polynomial Polynomial::constant(const Rational& c) { return monomial(c, 0); }

Polynomial Polynomial::monomial(const Rational& c, Exponent e) {
  Polynomial p;
  if (sgn(c) != 0) p.terms_.push_back({e, c});
  return p;
}

Ord Polynomial::ord() const { return is_zero() ? Ord::infinity() : Ord(terms_.front().exp); }

Exponent Polynomial::degree() const { return is_zero() ? 0 : terms_.back().exp; }

Rational Polynomial::coeff(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

Rational Polynomial::leading_coeff() const { return is_zero() ? Rational(0) : terms_.back().coeff; }
Rational Polynomial::lowest_coeff() const { return is_zero() ? Rational(0) : terms_.front().coeff; }

Polynomial Polynomial::shifted_down(Exponent m) const {
  assert(is_zero() || terms_.front().exp >= m);
  Polynomial p = *this;
  for (auto& t : p.terms_) t.exp -= m;
  return p;
}

Polynomial Polynomial::truncated_below(Exponent cap) const {
  Polynomial p;
  for (const auto& t : terms_) {
    if (t.exp >= cap) break;
    p.terms_.push_back(t);
  }
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (sgn(c) != 0) merged.push_back({a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() > b.size()) return b * a;
  if (a.size() == 1) {
    Polynomial p = b;
    const Term& m = a.terms_.front();
    for (auto& t : p.terms_) {
      t.exp += m.exp;
      t.coeff *= m.coeff;
    }
    return p;
  }

  const Exponent lo = a.terms_.front().exp + b.terms_.front().exp;
  const Exponent hi = a.degree() + b.degree();
  const std::size_t span = std::size_t(hi - lo) + 1;
  const std::size_t pairs = a.size() * b.size();

  Polynomial p;
  if (span <= 4 * pairs + 64) {
    // Dense accumulation over the exponent window.
    std::vector<Rational> acc(span);
    Rational tmp;
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        mpq_mul(tmp.get_mpq_t(), ta.coeff.get_mpq_t(), tb.coeff.get_mpq_t());
        auto& slot = acc[ta.exp + tb.exp - lo];
        mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp.get_mpq_t());
      }
    }
    for (std::size_t i = 0; i < span; ++i) {
      if (sgn(acc[i]) != 0) p.terms_.push_back({Exponent(lo + i), std::move(acc[i])});
    }
  } else {
    std::vector<Term> raw;
    raw.reserve(pairs);
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) raw.push_back({ta.exp + tb.exp, ta.coeff * tb.coeff});
    }
    p.terms_ = canonical(std::move(raw));
  }
  return p;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  assert(!b.is_zero());
  const Exponent db = b.degree();
  const Rational lb = b.leading_coeff();
  std::vector<Term> quotient;
  Polynomial rem = a;
  while (!rem.is_zero() && rem.degree() >= db) {
    const Exponent shift = rem.degree() - db;
    Rational c = rem.leading_coeff() / lb;
    rem -= Polynomial::monomial(c, shift) * b;
    quotient.push_back({shift, std::move(c)});
  }
  return {Polynomial(std::move(quotient)), std::move(rem)};
}

namespace {

using Integer = mpz_class;
using Dense = std::vector<Integer>;  // coefficient of t^k at index k

// Scale by the lcm of the denominators and store densely.
Dense integral(const Polynomial& p) {
  Integer l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  Dense out(p.degree() + 1);
  for (const auto& t : p.terms()) out[t.exp] = t.coeff.get_num() * (l / t.coeff.get_den());
  return out;
}

void make_primitive(Dense& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

using Residues = std::vector<std::uint64_t>;

std::uint64_t inverse_mod(std::uint64_t v, std::uint64_t q) {
  std::uint64_t r = 1;
  for (std::uint64_t e = q - 2; e; e >>= 1, v = v * v % q) {
    if (e & 1) r = r * v % q;
  }
  return r;
}

// Monic gcd of a and b modulo the prime q < 2^32; nullopt if q divides a
// leading coefficient.
std::optional<Residues> modular_gcd(const Dense& a, const Dense& b, std::uint64_t q) {
  auto reduce = [q](const Dense& x) {
    Residues out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = mpz_fdiv_ui(x[k].get_mpz_t(), q);
    return out;
  };
  auto strip = [](Residues& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  Residues x = reduce(a);
  Residues y = reduce(b);
  if (x.back() == 0 || y.back() == 0) return std::nullopt;
  while (!y.empty()) {
    const std::uint64_t inv = inverse_mod(y.back(), q);
    while (x.size() >= y.size()) {
      const std::uint64_t c = x.back() * inv % q;
      const std::size_t shift = x.size() - y.size();
      for (std::size_t k = 0; k < y.size(); ++k) x[shift + k] = (x[shift + k] + (q - c) * y[k]) % q;
      strip(x);
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  const std::uint64_t inv = inverse_mod(x.back(), q);
  for (auto& c : x) c = c * inv % q;
  return x;
}

bool divides(const Dense& d, const Dense& x) {
  auto to_poly = [](const Dense& v) {
    std::vector<Term> t;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (sgn(v[k]) != 0) t.push_back({Exponent(k), Rational(v[k])});
    }
    return Polynomial(std::move(t));
  };
  return divmod(to_poly(x), to_poly(d)).second.is_zero();
}

// Modular gcd over Z: images modulo word-size primes scaled to the gcd of
// the leading coefficients, combined by CRT until the primitive candidate
// stops changing and divides both inputs.
Dense integer_gcd(const Dense& x, const Dense& y) {
  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), x.back().get_mpz_t(), y.back().get_mpz_t());

  Integer q = Integer(1) << 31;
  Dense acc;  // residues in [0, modulus)
  Integer modulus = 1;
  long degree = -1;
  Dense candidate;
  for (;;) {
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    const std::uint64_t qq = q.get_ui();
    const auto image = modular_gcd(x, y, qq);
    if (!image) continue;
    const long d = long(image->size()) - 1;
    if (d == 0) return {Integer(1)};
    if (degree >= 0 && d > degree) continue;  // unlucky prime
    const std::uint64_t g = mpz_fdiv_ui(gamma.get_mpz_t(), qq);
    if (degree < 0 || d < degree) {
      degree = d;
      modulus = q;
      acc.assign(image->size(), 0);
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = Integer(static_cast<unsigned long>((*image)[k] * g % qq));
      candidate.clear();
    } else {
      const std::uint64_t inv = inverse_mod(mpz_fdiv_ui(modulus.get_mpz_t(), qq), qq);
      for (std::size_t k = 0; k < acc.size(); ++k) {
        const std::uint64_t r = mpz_fdiv_ui(acc[k].get_mpz_t(), qq);
        const std::uint64_t s = (*image)[k] * g % qq;
        const std::uint64_t t = (s + qq - r) % qq * inv % qq;
        acc[k] += modulus * static_cast<unsigned long>(t);
      }
      modulus *= q;
    }
    Dense next = acc;
    const Integer half = modulus / 2;
    for (auto& c : next) {
      if (c > half) c -= modulus;
    }
    make_primitive(next);
    if (next == candidate && divides(next, x) && divides(next, y)) return next;
    candidate = std::move(next);
  }
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b * (Rational(1) / b.leading_coeff());
  if (b.is_zero()) return a * (Rational(1) / a.leading_coeff());
  if (a.degree() == 0 || b.degree() == 0) return Polynomial::constant(1);

  const Dense g = integer_gcd(integral(a), integral(b));
  std::vector<Term> terms;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (sgn(g[k]) == 0) continue;
    Rational c(g[k], g.back());
    c.canonicalize();
    terms.push_back({Exponent(k), std::move(c)});
  }
  return Polynomial(std::move(terms));
}

// ---------------------------------------------------------------------------
// SeriesFraction

SeriesFraction cancel(Polynomial num, Polynomial den, const FractionPolicy& policy) {
  if (den.is_zero()) throw Error(ErrorCode::NotASeries, "zero denominator");
  if (num.is_zero()) return SeriesFraction();

  const Exponent common = std::min(num.ord().value(), den.ord().value());
  if (common > 0) {
    num = num.shifted_down(common);
    den = den.shifted_down(common);
  }
  if (den.ord().value() > 0) {
    throw Error(ErrorCode::NotASeries,
                "denominator keeps a factor t^" + den.ord().to_string() + " after cancellation");
  }
  if (std::max(num.degree(), den.degree()) > policy.gcd_threshold) {
    Polynomial g = gcd(num, den);
    if (g.degree() > 0) {
      num = divmod(num, g).first;
      den = divmod(den, g).first;
    }
  }
  const Rational c = den.constant_term();
  if (c != 1) {
    const Rational inv = 1 / c;
    num *= inv;
    den *= inv;
  }
  return SeriesFraction(std::move(num), std::move(den));
}

Rational SeriesFraction::leading_coeff() const { return num_.lowest_coeff(); }

SeriesFraction SeriesFraction::operator-() const { return SeriesFraction(-num_, den_); }

bool operator==(const SeriesFraction& a, const SeriesFraction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

SeriesFraction arith(ArithOp op, const SeriesFraction& a, const SeriesFraction& b,
                     const FractionPolicy& policy) {
  switch (op) {
    case ArithOp::add:
    case ArithOp::sub: {
      const Polynomial bn = op == ArithOp::add ? b.num() : -b.num();
      if (a.den() == b.den()) return cancel(a.num() + bn, a.den(), policy);
      return cancel(a.num() * b.den() + bn * a.den(), a.den() * b.den(), policy);
    }
    case ArithOp::mul:
      if (a.is_zero() || b.is_zero()) return SeriesFraction();
      return cancel(a.num() * b.num(), a.den() * b.den(), policy);
    case ArithOp::div:
      if (b.is_zero()) throw Error(ErrorCode::DivisionNotRepresentable, "division by zero");
      if (a.is_zero()) return SeriesFraction();
      if (b.ord() > a.ord()) {
        throw Error(ErrorCode::DivisionNotRepresentable,
                    "quotient of orders " + a.ord().to_string() + " and " + b.ord().to_string() +
                        " is not a power series");
      }
      return cancel(a.num() * b.den(), a.den() * b.num(), policy);
  }
  return {};
}

SeriesFraction operator*(const Rational& c, const SeriesFraction& f) {
  if (sgn(c) == 0 || f.is_zero()) return SeriesFraction();
  return cancel(f.num() * c, f.den());
}

SeriesFraction pow(const SeriesFraction& f, unsigned k) {
  if (k == 0) return SeriesFraction::constant(1);
  return cancel(pow(f.num(), k), pow(f.den(), k));
}

Polynomial inverse_to_cap(const Polynomial& p, Exponent cap) {
  assert(sgn(p.constant_term()) != 0);
  if (cap == 0) return {};
  const Rational inv0 = 1 / p.constant_term();
  std::vector<Rational> inv(cap);
  inv[0] = inv0;
  Rational s;
  Rational tmp;
  for (Exponent k = 1; k < cap; ++k) {
    s = 0;
    for (const auto& t : p.terms()) {
      if (t.exp == 0) continue;
      if (t.exp > k) break;
      mpq_mul(tmp.get_mpq_t(), t.coeff.get_mpq_t(), inv[k - t.exp].get_mpq_t());
      s += tmp;
    }
    inv[k] = -s * inv0;
  }
  std::vector<Term> terms;
  for (Exponent k = 0; k < cap; ++k) {
    if (sgn(inv[k]) != 0) terms.push_back({k, std::move(inv[k])});
  }
  return Polynomial(std::move(terms));
}

Polynomial expand_to_cap(const SeriesFraction& f, Exponent cap) {
  if (cap == 0 || f.is_zero()) return {};
  const Polynomial num = f.num().truncated_below(cap);
  if (f.is_polynomial()) return num * (Rational(1) / f.den().constant_term());
  const Polynomial inv = inverse_to_cap(f.den(), cap);

  std::vector<Rational> acc(cap);
  Rational tmp;
  for (const auto& a : num.terms()) {
    for (const auto& b : inv.terms()) {
      if (a.exp + b.exp >= cap) break;
      mpq_mul(tmp.get_mpq_t(), a.coeff.get_mpq_t(), b.coeff.get_mpq_t());
      acc[a.exp + b.exp] += tmp;
    }
  }
  std::vector<Term> terms;
  for (Exponent k = 0; k < cap; ++k) {
    if (sgn(acc[k]) != 0) terms.push_back({k, std::move(acc[k])});
  }
  return Polynomial(std::move(terms));
}

}  // namespace arfc
