#pragma once

#include "slicealg/report.hpp"
#include "slicealg/slice.hpp"

namespace slicealg {

/// The degree-k slice-monogenic generator (e0 - 1)(x0 + r w).  The right
/// constant is fixed to 1 here; general constants are applied at
/// inner-product time.
SlicePoly monogenic(int k);

/// x^n as a slice polynomial.
SlicePoly x_power(int n);

/// H_j(m_k) = (x - c D0)^j m_k by iterated operator application.
SlicePoly hermite_poly(int j, int k);

/// H_j(m_k) assembled from the closed-form coefficients of h_{j,k} in
/// powers of x.
SlicePoly laguerre_form(int j, int k);

/// H_j(m_k) assembled from the generalized Laguerre series
/// L_t^k(u) = sum (-1)^i binom(t+k, t-i) u^i / i! at u = |x|^2 / 2c,
/// generated independently of the coefficient formulas above.
SlicePoly laguerre_closed_form(int j, int k);

/// Eigenvalue of E + x D0 on H_j(m_k): k for even j, -(k+1) for odd j.
ExactScalar B_const(int j, int k);

/// Constant of the Hermite differential equation: -2t for j = 2t,
/// -2(k+t+1) for j = 2t+1.
ExactScalar C_const(int j, int k);

/// Diagonal Gram entry for psi_{j,k} at dimension m, without the right
/// constants' conj(a1) a2 factor.
ExactScalar A_const(int j, int k, int m);

/// Rodrigues construction with alpha = lambda c: dresses m_k at rate
/// 1/lambda, applies [(1 - 2/lambda) x - c D0] j times and strips the
/// Gaussian; equals hermite_poly(j, k) for every positive lambda.
SlicePoly rodrigues(int j, int k, const Rational& lambda);

/// psi_{j,k} = H_j(m_k) exp(-|x|^2 / 4c).
DressedFunction hermite_function(int j, int k);

Report check_lowering(int j_max, int k_max);

/// Differential equation with C(j,k), second recursion formula, and the
/// B(j,k) eigenrelation.
Report check_ode(int j_max, int k_max);

/// Operator generation vs both closed forms, plus Rodrigues for the given
/// lambdas.
Report check_closed_forms(int j_max, int k_max);
Report check_rodrigues(int j_max, int k_max,
                       const std::vector<Rational>& lambdas);

/// Raising/lowering relations of the psi functions, including ground-state
/// annihilation.
Report check_ladder(int j_max, int k_max);

/// Scalar oscillator equation (c D0^2 + |x|^2/4c) psi = (j+k+1) psi.
Report check_oscillator(int j_max, int k_max);

}  // namespace slicealg
