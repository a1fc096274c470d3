#include <doctest.h>

#include <random>

#include "slicealg/hermite.hpp"
#include "slicealg/inner_product.hpp"
#include "slicealg/operators.hpp"

using namespace slicealg;

namespace {

DressedFunction random_dressed(std::mt19937& rng) {
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<int> coef(-3, 3);
  SlicePoly p;
  for (int t = 0; t < 2; ++t) {
    SliceCoeff s;
    for (int i = 0; i < 4; ++i) s[i] = ExactScalar(coef(rng));
    p.add_term(expo(rng), expo(rng), s);
  }
  return {p, frac(1, 4)};
}

}  // namespace

TEST_CASE("sphere projection") {
  CHECK(sphere_area(2) == ExactScalar::term(2, 0, 2));   // 2 pi
  CHECK(sphere_area(3) == ExactScalar::term(4, 0, 2));   // 4 pi
  CHECK(sphere_area(1) == ExactScalar(2));
  SliceCoeff w = SliceCoeff::basis(SliceCoeff::kW);
  SphereProjection pw = sphere_integral(w, 2);
  CHECK(pw.scalar_part.is_zero());
  CHECK(pw.e0_part.is_zero());
  SliceCoeff e0 = SliceCoeff::basis(SliceCoeff::kE0);
  SphereProjection pe = sphere_integral(e0, 3);
  CHECK(pe.e0_part == ExactScalar::term(4, 0, 2));
}

TEST_CASE("reference inner products") {
  const int m = 2;
  const Multivector one(m + 1, ExactScalar(1));
  DressedFunction p00 = hermite_function(0, 0);
  // <psi00, psi00> = 4 c pi^2
  CHECK(inner(p00, p00, m, one, one) ==
        Multivector(m + 1, ExactScalar::term(4, 2, 4)));
  // <psi00, psi01> = 0
  CHECK(inner(p00, hermite_function(0, 1), m, one, one).is_zero());
  // <psi20, psi20> = 16 c^3 pi^2
  DressedFunction p20 = hermite_function(2, 0);
  CHECK(inner(p20, p20, m, one, one) ==
        Multivector(m + 1, ExactScalar::term(16, 6, 4)));
  // divergent pairing is rejected
  DressedFunction bare{monogenic(0), 0};
  CHECK_THROWS(inner(bare, bare, m, one, one));
}

TEST_CASE("algebraic properties of the pairing") {
  std::mt19937 rng(17);
  const int m = 2;
  const Multivector one(m + 1, ExactScalar(1));
  const Multivector e0 = Multivector::generator(m + 1, 0);
  const Multivector e01 =
      Multivector::generator(m + 1, 0) * Multivector::generator(m + 1, 1);
  for (int it = 0; it < 10; ++it) {
    DressedFunction f = random_dressed(rng);
    DressedFunction g = random_dressed(rng);
    // Hermitian symmetry
    CHECK(inner(f, g, m, one, one) == conjugate(inner(g, f, m, one, one)));
    // right linearity in the constants
    for (const Multivector& b : {e0, e01}) {
      CHECK(inner(f, g, m, one, b) == inner(f, g, m, one, one) * b);
      CHECK(inner(f, g, m, b, one) ==
            conjugate(b) * inner(f, g, m, one, one));
    }
    // positivity of the diagonal at c = 1
    if (!f.poly.is_zero()) {
      double v = scalar_part(inner(f, f, m, one, one)).eval(1.0);
      CHECK(v > 0.0);
    }
  }
}

TEST_CASE("beta scan") {
  auto rows = beta_scan({2, 4, 8}, 2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].value ==
        Multivector(3, ExactScalar::term(1, 4, 4)));        // c^2 pi^2
  CHECK(rows[1].is_zero);                                    // lambda = 4
  CHECK(rows[2].value ==
        Multivector(3, ExactScalar::term(-8, 4, 4)));       // -8 c^2 pi^2
  for (const auto& row : rows) CHECK(row.matches_closed_form);
  CHECK(check_beta_scan({1, 2, 3, 4, 5, 6, 7, 8}, 2).passed());
}

TEST_CASE("Gram matrix at small caps") {
  const int m = 2;
  const Multivector one(m + 1, ExactScalar(1));
  GramReport g = gram_matrix(2, 1, m, one, one);
  CHECK(g.verification.passed());
  CHECK(scalar_part(g.entries.at({0, 0, 0, 0})).str() == "4*c*pi^2");
  CHECK(scalar_part(g.entries.at({1, 0, 1, 0})).str() == "8*c^2*pi^2");
  CHECK(g.entries.at({0, 0, 1, 0}).is_zero());
  std::string csv = g.csv();
  CHECK(csv.find("4*c*pi^2") != std::string::npos);
  CHECK(csv.find("8*c^2*pi^2") != std::string::npos);
  // nontrivial right constants keep the diagonal structure
  const Multivector e0 = Multivector::generator(m + 1, 0);
  GramReport g2 = gram_matrix(1, 1, m, e0, e0);
  CHECK(g2.verification.passed());
}

TEST_CASE("adjointness at small caps") {
  CHECK(check_selfadjoint(1, 1, 2).passed());
}
