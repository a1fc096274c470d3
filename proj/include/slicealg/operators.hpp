#pragma once

#include <vector>

#include "slicealg/report.hpp"
#include "slicealg/slice.hpp"

namespace slicealg {

// The operator calculus on dressed slice functions.  Weight chain-rule
// terms are applied whenever the rate is nonzero; all outputs stay exactly
// representable with the same rate.

/// Left multiplication by x = x0 e0 + r w.
DressedFunction apply_X(const DressedFunction& f);

/// Slice Dirac operator e0 d/dx0 + w d/dr, including the weight term
/// -(2 rate / c) x for dressed inputs.
DressedFunction apply_D0(const DressedFunction& f);

/// Euler operator x0 d/dx0 + r d/dr.  Dressed inputs are rejected unless
/// `dressed` opts into the weight chain rule.
DressedFunction apply_euler(const DressedFunction& f, bool dressed = false);

/// Slice Laplacian d^2/dx0^2 + d^2/dr^2, same dressing policy as the Euler
/// operator.
DressedFunction apply_slice_laplacian(const DressedFunction& f,
                                      bool dressed = false);

/// Multiplication by |x|^2 = x0^2 + r^2.
DressedFunction apply_normsq(const DressedFunction& f);

/// Verifies the ten superalgebra relations on every dressed basis monomial
/// x0^a r^b s with a+b <= max_degree and s one of the four S basis
/// elements.  Relations involving the Euler operator or the slice
/// Laplacian run at rate 0 only unless `dressed_euler` enables the chain
/// rule for them.
Report check_osp_relations(int max_degree, const std::vector<Rational>& rates,
                           bool dressed_euler = false);

/// Verifies the operator identities for D0 x^s and E x^s (even and odd
/// powers) on all bare basis monomials up to max_degree, for s <= s_max.
Report check_power_identities(int s_max, int max_degree);

/// Exact basis of ker(D0) restricted to homogeneous degree-k slice
/// polynomials, via fraction-free elimination over the rationals.
std::vector<SlicePoly> kernel_basis(int k);

/// Checks that the kernel has dimension 4 and that every kernel vector is
/// m_k * s for some s in S.
Report check_kernel(int k_max);

/// Verifies [E + x D0, (x - c D0)^2] = 0 on bare monomials up to
/// max_degree.
Report check_commutant(int max_degree);

}  // namespace slicealg
