#include <doctest.h>

#include <nlohmann/json.hpp>

#include "slicealg/clifford.hpp"

using namespace slicealg;

TEST_CASE("generator relations") {
  const int n = 4;
  for (int i = 0; i < n; ++i) {
    Multivector ei = Multivector::generator(n, i);
    CHECK(ei * ei == Multivector(n, ExactScalar(-1)));
    for (int j = i + 1; j < n; ++j) {
      Multivector ej = Multivector::generator(n, j);
      CHECK(ei * ej == -(ej * ei));
      CHECK((ei * ej + ej * ei).is_zero());
    }
  }
}

TEST_CASE("blade products") {
  const int n = 3;
  Multivector e0 = Multivector::generator(n, 0);
  Multivector e1 = Multivector::generator(n, 1);
  Multivector e01 = e0 * e1;
  CHECK(e01 == Multivector::blade(n, 0b11u, ExactScalar(1)));
  CHECK(e1 * e0 == -e01);
  CHECK(e01 * e01 == Multivector(n, ExactScalar(-1)));
}

TEST_CASE("product associativity over all basis blades") {
  const int n = 3;
  for (BladeMask a = 0; a < (1u << n); ++a) {
    Multivector u = Multivector::blade(n, a, ExactScalar(1));
    for (BladeMask b = 0; b < (1u << n); ++b) {
      Multivector v = Multivector::blade(n, b, ExactScalar(frac(1, 2)));
      for (BladeMask c = 0; c < (1u << n); ++c) {
        Multivector w = Multivector::blade(n, c, ExactScalar(-3));
        CHECK((u * v) * w == u * (v * w));
      }
    }
  }
}

TEST_CASE("conjugation") {
  const int n = 3;
  Multivector e0 = Multivector::generator(n, 0);
  Multivector e1 = Multivector::generator(n, 1);
  CHECK(conjugate(Multivector(n, ExactScalar(5))) ==
        Multivector(n, ExactScalar(5)));
  CHECK(conjugate(e0) == -e0);
  CHECK(conjugate(e0 * e1) == -(e0 * e1));
  // anti-automorphism on all basis blade pairs
  for (BladeMask a = 0; a < (1u << n); ++a) {
    Multivector u = Multivector::blade(n, a, ExactScalar(2));
    for (BladeMask b = 0; b < (1u << n); ++b) {
      Multivector v = Multivector::blade(n, b, ExactScalar(frac(-1, 3)));
      CHECK(conjugate(u * v) == conjugate(v) * conjugate(u));
    }
  }
}

TEST_CASE("basis transport of paravectors") {
  CHECK(verify_tilde_embedding(2).passed());
  CHECK(verify_tilde_embedding(3).passed());
}

TEST_CASE("rendering and JSON") {
  const int n = 4;
  Multivector u = Multivector::blade(n, 0b1011u, ExactScalar(2)) +
                  Multivector(n, ExactScalar(frac(1, 2)));
  CHECK(u.str().find("e0e1e3") != std::string::npos);
  Multivector back = Multivector::from_json(u.to_json());
  CHECK(back == u);
  auto j = u.to_json();
  CHECK(j["dim"] == n);
  bool found = false;
  for (const auto& b : j["blades"])
    if (b["idx"] == nlohmann::json::array({0, 1, 3})) found = true;
  CHECK(found);
}
