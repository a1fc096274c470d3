#include <doctest.h>

#include "slicealg/hermite.hpp"
#include "slicealg/operators.hpp"

using namespace slicealg;

namespace {

// x^2 = -(x0^2 + r^2) commutes with everything, so the h polynomials with
// even powers of x are scalar polynomials in the slice model.
SlicePoly scalar_const(const ExactScalar& v) {
  return SlicePoly{SliceCoeff(v)};
}

}  // namespace

TEST_CASE("monogenic generators") {
  SlicePoly m0 = monogenic(0);
  SlicePoly expect;
  expect.add_term(0, 0, SliceCoeff::basis(SliceCoeff::kE0) -
                            SliceCoeff(ExactScalar(1)));
  CHECK(m0 == expect);
  // (e0-1)(x0 + r w) = x0 e0 - x0 - r w - r we0
  SlicePoly m1 = monogenic(1);
  SlicePoly e1;
  e1.add_term(1, 0, SliceCoeff::basis(SliceCoeff::kE0) -
                        SliceCoeff(ExactScalar(1)));
  e1.add_term(0, 1, -SliceCoeff::basis(SliceCoeff::kW) -
                        SliceCoeff::basis(SliceCoeff::kWE0));
  CHECK(m1 == e1);
  for (int k = 0; k <= 12; ++k)
    CHECK(apply_D0({monogenic(k), 0}).poly.is_zero());
}

TEST_CASE("first five h polynomials for general k") {
  for (int k = 0; k <= 6; ++k) {
    SlicePoly mk = monogenic(k);
    ExactScalar c2 = ExactScalar::c_pow(2);
    CHECK(hermite_poly(0, k) == mk);
    CHECK(hermite_poly(1, k) == x_power(1) * mk);
    CHECK(hermite_poly(2, k) ==
          (x_power(2) + scalar_const(ExactScalar(2 * (k + 1)) * c2)) * mk);
    CHECK(hermite_poly(3, k) ==
          (x_power(3) + x_power(1) * (ExactScalar(2 * (k + 2)) * c2)) * mk);
    CHECK(hermite_poly(4, k) ==
          (x_power(4) + x_power(2) * (ExactScalar(4 * (k + 2)) * c2) +
           scalar_const(ExactScalar(4 * (k + 1) * (k + 2)) * c2 * c2)) *
              mk);
  }
}

TEST_CASE("constants") {
  CHECK(B_const(2, 3) == ExactScalar(3));
  CHECK(B_const(3, 3) == ExactScalar(-4));
  CHECK(C_const(2, 0) == ExactScalar(-2));
  CHECK(C_const(1, 1) == ExactScalar(-4));
  CHECK(C_const(0, 5).is_zero());
  // A(0,0) at m=2 -> 4 c pi^2, A(2,0) -> 16 c^3 pi^2
  CHECK(A_const(0, 0, 2) == ExactScalar::term(4, 2, 4));
  CHECK(A_const(2, 0, 2) == ExactScalar::term(16, 6, 4));
  CHECK(A_const(1, 0, 2) == ExactScalar::term(8, 4, 4));
}

TEST_CASE("closed forms at small order") {
  CHECK(check_closed_forms(6, 3).passed());
}

TEST_CASE("lowering and ODE at small order") {
  CHECK(check_lowering(4, 3).passed());
  CHECK(check_ode(4, 3).passed());
}

TEST_CASE("Rodrigues at small order") {
  CHECK(check_rodrigues(3, 2, {2, 4}).passed());
  // lambda = 4 makes the bracket operator x/2 - c D0
  CHECK(rodrigues(2, 1, 4) == hermite_poly(2, 1));
}

TEST_CASE("ladder and oscillator at small order") {
  CHECK(check_ladder(4, 3).passed());
  CHECK(check_oscillator(4, 3).passed());
}

TEST_CASE("parity of the h polynomials") {
  for (int j = 0; j <= 5; ++j) {
    for (int k = 0; k <= 3; ++k) {
      SlicePoly h = hermite_poly(j, k);
      CHECK(h.degree() == j + k);
      // every monomial degree has the parity of j + k (h has the parity of
      // j and m_k is homogeneous of degree k)
      for (const auto& [mono, s] : h.terms())
        CHECK((mono.first + mono.second) % 2 == (j + k) % 2);
    }
  }
}
