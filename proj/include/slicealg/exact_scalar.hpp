#pragma once

#include <compare>
#include <map>
#include <string>

#include <gmpxx.h>

#include <nlohmann/json_fwd.hpp>

namespace slicealg {

using Int = mpz_class;
using Rational = mpq_class;

Rational rational_from_string(const std::string& s);

/// n/d in canonical form (mpq_class's two-argument constructor does not
/// canonicalize on its own).
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline Rational frac(const Int& n, const Int& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Key of one term q * sqrt(sq) * c^(c2/2) * pi^(pi2/2).  Exponents are
/// stored doubled so half-integer powers stay integral; `sq` is a positive
/// squarefree integer absorbing square roots of rationals that arise from
/// half-integer powers of the Gaussian rate.
struct TermKey {
  long c2 = 0;
  long pi2 = 0;
  long sq = 1;
  auto operator<=>(const TermKey&) const = default;
};

/// Element of the exact value ring spanned over the rationals by
/// sqrt(d) * c^p * pi^s with p, s half-integers and d squarefree.
/// Immutable in spirit: all operations return new values.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : ExactScalar(Rational(v)) {}
  ExactScalar(const Rational& q);

  static ExactScalar term(const Rational& q, long c2, long pi2, long sq = 1);
  static ExactScalar c_pow(long c2) { return term(1, c2, 0); }
  static ExactScalar pi_pow(long pi2) { return term(1, 0, pi2); }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational to_rational() const;  // throws unless a pure rational

  ExactScalar operator-() const;
  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const;
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  bool operator==(const ExactScalar& o) const { return terms_ == o.terms_; }

  /// Multiplicative inverse, defined for single-term values only.
  ExactScalar inverse() const;

  double eval(double c_val) const;

  /// Substitutes a positive rational value for c; half powers of c become
  /// rational multiples of square roots, kept exact via the radicand.
  ExactScalar subst_c(const Rational& c_val) const;

  std::string str() const;
  nlohmann::json to_json() const;
  static ExactScalar from_json(const nlohmann::json& j);

  const std::map<TermKey, Rational>& terms() const { return terms_; }

 private:
  std::map<TermKey, Rational> terms_;  // no zero values stored
};

inline ExactScalar operator*(const Rational& q, const ExactScalar& x) {
  return ExactScalar(q) * x;
}

/// Gamma(z) for positive half-integer z, exact: rational for integral z,
/// rational * pi^(1/2) for half-odd z.
ExactScalar gamma_half(const Rational& z);

/// Integral over x0 in R, r in (0,inf) of x0^a r^b exp(-rho (x0^2+r^2)/c).
/// Zero when a is odd; rejects rho <= 0.
ExactScalar gaussian_moment(long a, long b, const Rational& rho);

}  // namespace slicealg
