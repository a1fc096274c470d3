#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "slicealg/exact_scalar.hpp"
#include "slicealg/report.hpp"

#include <nlohmann/json_fwd.hpp>

namespace slicealg {

/// Basis blade of Cl_n as a bit set: bit i set means e_i is a factor,
/// factors in ascending index order.  Mask 0 is the scalar blade.
using BladeMask = std::uint32_t;

std::string blade_str(BladeMask m);
int blade_grade(BladeMask m);

/// Product of two basis blades in Cl_n with all generators squaring to -1.
/// Returns the resulting mask; `sign` receives +1/-1 from transposition
/// counting and the e_i^2 = -1 contractions.
BladeMask blade_product(BladeMask a, BladeMask b, int& sign);

/// Sparse multivector of Cl_n over ExactScalar.  All generators square
/// to -1; dimension is a runtime value.
class Multivector {
 public:
  explicit Multivector(int dim) : dim_(dim) {}
  Multivector(int dim, const ExactScalar& scalar);

  static Multivector generator(int dim, int i);  // e_i
  static Multivector blade(int dim, BladeMask m, const ExactScalar& coeff);

  int dim() const { return dim_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<BladeMask, ExactScalar>& coeffs() const { return coeffs_; }
  ExactScalar coeff(BladeMask m) const;

  Multivector operator-() const;
  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator*(const Multivector& o) const;  // geometric product
  Multivector operator*(const ExactScalar& s) const;
  bool operator==(const Multivector& o) const;

  void add_term(BladeMask m, const ExactScalar& coeff);

  std::string str() const;
  nlohmann::json to_json() const;
  static Multivector from_json(const nlohmann::json& j);

 private:
  int dim_;
  std::map<BladeMask, ExactScalar> coeffs_;  // no zero entries
};

Multivector geometric_product(const Multivector& u, const Multivector& v);

/// Clifford conjugation: anti-automorphism with conj(e_i) = -e_i; acts on a
/// grade-g blade as (-1)^(g(g+1)/2).
Multivector conjugate(const Multivector& u);

ExactScalar scalar_part(const Multivector& u);

/// Checks that the bivectors b_i = E0*Ei of Cl_{m+1} behave as Clifford
/// generators, anticommute with E0, and that left multiplication by E0 maps
/// the paravector x0 + sum x_i Ei to the 1-vector x0 E0 + sum x_i b_i.
Report verify_tilde_embedding(int m);

}  // namespace slicealg
