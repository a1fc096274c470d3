#pragma once

#include <map>
#include <vector>

#include "slicealg/clifford.hpp"
#include "slicealg/hermite.hpp"
#include "slicealg/report.hpp"
#include "slicealg/slice.hpp"

namespace slicealg {

/// Result of integrating an S element over the unit sphere S^{m-1}: the w
/// and w e0 components vanish by parity, the surviving components pick up
/// the sphere area 2 pi^{m/2} / Gamma(m/2).
struct SphereProjection {
  ExactScalar scalar_part;
  ExactScalar e0_part;
  ExactScalar area_factor;
};

ExactScalar sphere_area(int m);
SphereProjection sphere_integral(const SliceCoeff& s, int m);

/// <f, g> = integral of conj(f) g dx0 dr dw over x0 in R, r > 0 and the
/// sphere, with right constants a and b: returns conj(a) M b in Cl_{m+1}.
/// Requires a positive combined Gaussian rate.
Multivector inner(const DressedFunction& f, const DressedFunction& g, int m,
                  const Multivector& a, const Multivector& b);

Report check_selfadjoint(int max_j, int max_k, int m);

struct BetaScanRow {
  Rational lambda;     // beta = lambda c
  Multivector value;   // <psi^beta_{0,0}, psi^beta_{2,0}>
  ExactScalar closed_form;
  bool is_zero;
  bool matches_closed_form;
};

std::vector<BetaScanRow> beta_scan(const std::vector<Rational>& lambdas,
                                   int m);
Report check_beta_scan(const std::vector<Rational>& lambdas, int m);

struct GramReport {
  struct Key {
    int j1, k1, j2, k2;
    auto operator<=>(const Key&) const = default;
  };
  int m;
  Multivector a1, a2;
  std::map<Key, Multivector> entries;
  Report verification;  // off-diagonals zero, diagonals equal A(j,k)

  std::string csv() const;
  nlohmann::json to_json() const;
};

GramReport gram_matrix(int j_max, int k_max, int m, const Multivector& a1,
                       const Multivector& a2);

}  // namespace slicealg
