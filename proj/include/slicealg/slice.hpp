#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slicealg/clifford.hpp"
#include "slicealg/exact_scalar.hpp"

namespace slicealg {

/// Element of the 4-dimensional coefficient algebra S spanned by
/// (1, e0, w, w e0) with e0^2 = w^2 = -1 and e0 w = -w e0.  w stands for
/// the variable unit vector x_/r.
class SliceCoeff {
 public:
  enum Basis { kOne = 0, kE0 = 1, kW = 2, kWE0 = 3 };

  SliceCoeff() = default;
  explicit SliceCoeff(const ExactScalar& scalar) { comps_[kOne] = scalar; }
  static SliceCoeff basis(Basis b);

  const ExactScalar& operator[](int i) const { return comps_[i]; }
  ExactScalar& operator[](int i) { return comps_[i]; }
  bool is_zero() const;

  SliceCoeff operator-() const;
  SliceCoeff operator+(const SliceCoeff& o) const;
  SliceCoeff operator-(const SliceCoeff& o) const;
  SliceCoeff operator*(const SliceCoeff& o) const;  // the S product
  SliceCoeff operator*(const ExactScalar& s) const;
  bool operator==(const SliceCoeff& o) const { return comps_ == o.comps_; }

  SliceCoeff conj() const;  // 1 -> 1, e0 -> -e0, w -> -w, we0 -> -we0

  std::string str() const;

 private:
  std::array<ExactScalar, 4> comps_;
};

SliceCoeff s_mul(const SliceCoeff& s, const SliceCoeff& t);

/// Polynomial sum x0^a r^b s_{a,b} with s_{a,b} in S.  Multiplication is
/// noncommutative through the coefficients.
class SlicePoly {
 public:
  using Monomial = std::pair<long, long>;  // (x0 exponent, r exponent)

  SlicePoly() = default;
  explicit SlicePoly(const SliceCoeff& constant) { add_term(0, 0, constant); }
  static SlicePoly monomial(long a, long b, const SliceCoeff& s);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, SliceCoeff>& terms() const { return terms_; }
  void add_term(long a, long b, const SliceCoeff& s);
  long degree() const;  // max total degree, -1 for the zero polynomial

  SlicePoly operator-() const;
  SlicePoly operator+(const SlicePoly& o) const;
  SlicePoly operator-(const SlicePoly& o) const;
  SlicePoly operator*(const SlicePoly& o) const;  // poly_mul
  SlicePoly operator*(const ExactScalar& s) const;
  bool operator==(const SlicePoly& o) const { return terms_ == o.terms_; }

  SlicePoly left_mul(const SliceCoeff& s) const;   // s * p
  SlicePoly mul_monomial(long a, long b) const;    // x0^a r^b * p
  SlicePoly d_dx0() const;
  SlicePoly d_dr() const;
  SlicePoly conj() const;  // termwise conjugation of the coefficients

  std::string str() const;

 private:
  std::map<Monomial, SliceCoeff> terms_;  // no zero coefficients
};

SlicePoly poly_mul(const SlicePoly& p, const SlicePoly& q);

/// poly * exp(-rate (x0^2 + r^2) / c); rate 0 means a bare polynomial.
struct DressedFunction {
  SlicePoly poly;
  Rational rate = 0;

  bool operator==(const DressedFunction& o) const {
    return rate == o.rate && poly == o.poly;
  }
  std::string str() const;
};

/// Exact embedding of an S element into Cl_{m+1} at a rational unit
/// direction: w maps to sum omega_i e_{i+1}.
Multivector embed_coeff(const SliceCoeff& s, const std::vector<Rational>& omega,
                        int m);

/// Exact evaluation of a bare polynomial (rate must be 0) at rational
/// (x0, r) and a rational unit direction, with c substituted by c_val.
/// Dressed functions are evaluated numerically by the oracle instead.
Multivector embed_at(const DressedFunction& f, const Rational& x0,
                     const Rational& r, const std::vector<Rational>& omega,
                     const Rational& c_val);

/// The 1-vector x = x0 e0 + r w as a slice polynomial.
SlicePoly x_poly();

}  // namespace slicealg
