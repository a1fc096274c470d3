#pragma once

#include <cstdint>
#include <vector>

#include "slicealg/clifford.hpp"
#include "slicealg/report.hpp"
#include "slicealg/slice.hpp"

namespace slicealg {

/// Dense floating-point multivector used by the numeric cross-checks.  The
/// product is implemented from scratch (bit-by-bit transposition counting)
/// so it does not share code with the exact kernel.
struct NumericMultivector {
  int dim = 0;
  std::vector<double> comp;  // indexed by blade mask

  explicit NumericMultivector(int d) : dim(d), comp(std::size_t{1} << d, 0.0) {}

  double max_abs() const;
};

NumericMultivector num_product(const NumericMultivector& a,
                               const NumericMultivector& b);
NumericMultivector num_conjugate(const NumericMultivector& a);

/// Numeric evaluation of a dressed function in Cl_{m+1} at the point
/// x0 + r * sum omega_i e_{i+1}, with e0 = e_0 and c = c_val.
NumericMultivector eval_at_numeric(const DressedFunction& f, double c_val,
                                   double x0, double r,
                                   const std::vector<double>& omega, int m);

/// Distance between an exact multivector (evaluated at c_val) and a numeric
/// one, as a max-norm difference.
double num_distance(const Multivector& exact, const NumericMultivector& num,
                    double c_val);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Quadrature evaluation of the scalar and e0 components of <f, g> at
/// c = c_val (unit right constants).  The integrand is evaluated through
/// the numeric path; only the angular kill rule is shared with the exact
/// computation.  Nodes are doubled until the result stabilizes below
/// rel_tol.
void quad_inner(const DressedFunction& f, const DressedFunction& g, int m,
                double c_val, double& scalar_out, double& e0_out,
                double rel_tol = 1e-10);

/// Central-difference check of the slice Dirac operator against the exact
/// implementation at a spread of sample points.
Report fd_check_d0(int max_j, int max_k, int m, double c_val);

/// Full oracle suite: quadrature vs exact inner products over the psi
/// functions with j, k <= max_j, max_k, plus the finite-difference Dirac
/// checks.
Report oracle_compare(int max_j, int max_k, int m, double c_val);

}  // namespace slicealg
