// Full acceptance sweep.  Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any of them fail.

#include <cstdio>
#include <string>

#include "slicealg/hermite.hpp"
#include "slicealg/inner_product.hpp"
#include "slicealg/operators.hpp"
#include "slicealg/oracle.hpp"

using namespace slicealg;

namespace {

int g_failures = 0;

void line(int n, const char* what, const Report& rep) {
  std::printf("criterion %2d: %s — %s (%ld checks)\n", n,
              rep.passed() ? "PASS" : "FAIL", what, rep.checks);
  if (!rep.passed()) {
    ++g_failures;
    for (std::size_t i = 0; i < rep.failures.size() && i < 3; ++i)
      std::printf("    %s: expected %s, got %s\n",
                  rep.failures[i].case_id.c_str(),
                  rep.failures[i].expected.c_str(),
                  rep.failures[i].got.c_str());
  }
  std::fflush(stdout);
}

Report listed_polynomials() {
  Report rep;
  rep.suite = "listed-polynomials";
  auto scalar_const = [](const ExactScalar& v) {
    return SlicePoly{SliceCoeff(v)};
  };
  const ExactScalar c = ExactScalar::c_pow(2);
  for (int k = 0; k <= 6; ++k) {
    SlicePoly mk = monogenic(k);
    const SlicePoly listed[5] = {
        mk,
        x_power(1) * mk,
        (x_power(2) + scalar_const(ExactScalar(2 * (k + 1)) * c)) * mk,
        (x_power(3) + x_power(1) * (ExactScalar(2 * (k + 2)) * c)) * mk,
        (x_power(4) + x_power(2) * (ExactScalar(4 * (k + 2)) * c) +
         scalar_const(ExactScalar(4 * (k + 1) * (k + 2)) * c * c)) *
            mk};
    for (int j = 0; j <= 4; ++j) {
      SlicePoly gen = hermite_poly(j, k);
      rep.record(gen == listed[j], "table",
                 "H_" + std::to_string(j) + "(m_" + std::to_string(k) + ")",
                 listed[j].str(), gen.str());
    }
  }
  return rep;
}

}  // namespace

int main() {
  // 1. Ten superalgebra relations on dressed monomials of degree <= 8.
  line(1, "superalgebra relations, degree <= 8",
       check_osp_relations(8, {0, frac(1, 4)}));

  // 2. Power identities for s <= 4 on monomials of degree <= 6.
  line(2, "operator power identities, s <= 4, degree <= 6",
       check_power_identities(4, 6));

  // 3. Kernel dimension 4 and generator membership for k <= 10.
  line(3, "Dirac kernel dimension and membership, k <= 10", check_kernel(10));

  // 4. Listed polynomial tables (j <= 4) and closed forms (j <= 12, k <= 6).
  {
    Report rep = listed_polynomials();
    rep.merge(check_closed_forms(12, 6));
    line(4, "polynomial tables and Laguerre closed forms", rep);
  }

  // 5. Lowering, differential equation, recursion, eigenrelation and the
  //    commutant lemma for j <= 8, k <= 5.
  {
    Report rep = check_lowering(8, 5);
    rep.merge(check_ode(8, 5));
    rep.merge(check_commutant(6));
    line(5, "lowering/ODE/recursion/eigenrelation/commutant", rep);
  }

  // 6. Rodrigues formula for lambda in {2,4,8}, j <= 6, k <= 4.
  line(6, "Rodrigues formula, lambda in {2,4,8}",
       check_rodrigues(6, 4, {2, 4, 8}));

  // 7. Gram matrix structure for j <= 5, k <= 4, m in {2,3}; Gaussian-scale
  //    scan vanishes exactly at lambda = 4.
  {
    Report rep;
    rep.suite = "orthogonality";
    for (int m : {2, 3}) {
      Multivector one(m + 1, ExactScalar(1));
      rep.merge(gram_matrix(5, 4, m, one, one).verification);
      rep.merge(check_beta_scan({1, 2, 3, 4, 5, 6, 7, 8}, m));
    }
    line(7, "Gram matrix and Gaussian-scale scan", rep);
  }

  // 8. Oscillator equation for j <= 8, k <= 5.
  line(8, "oscillator eigenvalue equation, j <= 8, k <= 5",
       check_oscillator(8, 5));

  // 9. Adjointness relations across the item-7 sweep.
  {
    Report rep;
    rep.suite = "adjoint";
    for (int m : {2, 3}) rep.merge(check_selfadjoint(5, 4, m));
    line(9, "adjointness of the Dirac operator and x", rep);
  }

  // 10. Numeric oracle: quadrature and finite differences at c = 1.
  {
    Report rep;
    rep.suite = "oracle";
    for (int m : {2, 3}) rep.merge(oracle_compare(3, 3, m, 1.0));
    line(10, "numeric oracle agreement at c = 1", rep);
  }

  if (g_failures) {
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
